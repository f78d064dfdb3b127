#pragma once

#include <stdexcept>
#include <string>

namespace zipmot {

// Bad input or a violated operation precondition. The CLI maps this to exit code 2.
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant: the computation cannot be trusted. CLI exit code 1.
class InternalError : public std::runtime_error {
public:
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace zipmot
