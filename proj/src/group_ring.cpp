#include "zipmot/group_ring.hpp"

#include <sstream>

#include "zipmot/error.hpp"

namespace zipmot {

GroupRingElem GroupRingElem::one(int rank) {
  return character(LatticeVec(rank, 0));
}

GroupRingElem GroupRingElem::character(const LatticeVec& v, const Rational& c) {
  GroupRingElem e(static_cast<int>(v.size()));
  if (!c.is_zero()) e.terms_.emplace(v, c);
  return e;
}

Rational GroupRingElem::coeff(const LatticeVec& v) const {
  const auto it = terms_.find(v);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupRingElem::add_term(const LatticeVec& v, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(v, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupRingElem GroupRingElem::operator-() const {
  GroupRingElem out = *this;
  for (auto& [v, c] : out.terms_) c = -c;
  return out;
}

GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) {
  require(a.rank_ == b.rank_, "group-ring elements live on different lattices");
  GroupRingElem out = a;
  for (const auto& [v, c] : b.terms_) out.add_term(v, c);
  return out;
}

GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) { return a + (-b); }

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  require(a.rank_ == b.rank_, "group-ring elements live on different lattices");
  GroupRingElem out(a.rank_);
  for (const auto& [va, ca] : a.terms_)
    for (const auto& [vb, cb] : b.terms_) {
      LatticeVec v(va);
      for (int i = 0; i < a.rank_; ++i) v[i] += vb[i];
      out.add_term(v, ca * cb);
    }
  return out;
}

GroupRingElem GroupRingElem::scaled(const Rational& c) const {
  GroupRingElem out(rank_);
  if (c.is_zero()) return out;
  for (const auto& [v, x] : terms_) out.terms_.emplace(v, x * c);
  return out;
}

GroupRingElem GroupRingElem::substitute(const IntMat& f) const {
  require(f.rows() == rank_ && f.cols() == rank_, "substitution matrix rank mismatch");
  require(!f.det().is_zero(), "singular lattice substitution rejected");
  GroupRingElem out(rank_);
  for (const auto& [v, c] : terms_) out.add_term(f.apply(v), c);
  return out;
}

std::string GroupRingElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : terms_) {
    const bool neg = c.sign() < 0;
    const Rational a = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (!a.is_one()) os << a.str() << "*";
    os << "x^(";
    for (int i = 0; i < rank_; ++i) {
      os << v[i];
      if (i + 1 < rank_) os << ",";
    }
    os << ")";
  }
  return os.str();
}

GroupRingElem GroupRingElem::parse(const std::string& s, int rank) {
  GroupRingElem out(rank);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw PreconditionError("cannot parse group-ring element '" + s + "': " + what);
  };
  auto integer = [&]() -> long long {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return std::stoll(s.substr(start, pos - start));
  };
  skip_ws();
  if (pos < s.size() && s[pos] == '0' && pos + 1 == s.size()) return out;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = (s[pos++] == '-');
  while (true) {
    skip_ws();
    Rational c(1);
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      const long long num = integer();
      long long den = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '/') { ++pos; den = integer(); }
      c = Rational(num, den);
      skip_ws();
      if (pos < s.size() && s[pos] == '*') ++pos;
      skip_ws();
    }
    LatticeVec v(rank, 0);
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      skip_ws();
      if (pos >= s.size() || s[pos] != '^') fail("expected '^'");
      ++pos;
      skip_ws();
      if (pos >= s.size() || s[pos] != '(') fail("expected '('");
      ++pos;
      for (int i = 0; i < rank; ++i) {
        v[i] = integer();
        skip_ws();
        if (i + 1 < rank) {
          if (pos >= s.size() || s[pos] != ',') fail("expected ','");
          ++pos;
        }
      }
      skip_ws();
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      ++pos;
    }
    out.add_term(v, neg ? -c : c);
    skip_ws();
    if (pos >= s.size()) break;
    if (s[pos] == '+') neg = false;
    else if (s[pos] == '-') neg = true;
    else fail("unexpected character");
    ++pos;
  }
  return out;
}

}  // namespace zipmot
