#pragma once

#include <string>
#include <vector>

#include "zipmot/rational.hpp"
#include "zipmot/upoly.hpp"

namespace zipmot {

using LatticeVec = std::vector<long long>;

// Dense row-major integer matrix; ranks here never exceed 8.
class IntMat {
public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static IntMat identity(int n);
  static IntMat scalar(int n, long long q);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long& at(int i, int j) { return a_[i * cols_ + j]; }
  long long at(int i, int j) const { return a_[i * cols_ + j]; }

  IntMat operator*(const IntMat& o) const;
  LatticeVec apply(const LatticeVec& v) const;  // M v
  IntMat transpose() const;
  friend bool operator==(const IntMat& a, const IntMat& b) = default;

  bool is_identity() const;
  bool is_scalar(long long q) const;
  // True when M = q * P for an integer matrix P; writes P.
  bool divide_by(long long q, IntMat* out) const;

  Rational det() const;
  // det(I - t*M), exact; requires a square matrix.
  Upoly det_identity_minus_t() const;

  // Canonical serialization, usable as a hash key.
  std::string key() const;
  std::string str() const;  // "[[2,-1],[-1,2]]"

private:
  int rows_, cols_;
  std::vector<long long> a_;
};

}  // namespace zipmot
