#include "zipmot/upoly.hpp"

#include <sstream>

#include "zipmot/error.hpp"

namespace zipmot {

void Upoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Upoly Upoly::constant(const Rational& c) {
  Upoly p;
  if (!c.is_zero()) p.c_ = {c};
  return p;
}

Upoly Upoly::monomial(int degree, const Rational& c) {
  require(degree >= 0, "monomial degree must be non-negative");
  Upoly p;
  if (!c.is_zero()) {
    p.c_.assign(degree + 1, Rational(0));
    p.c_[degree] = c;
  }
  return p;
}

Upoly Upoly::one_minus_power(int a) {
  require(a >= 1, "factor exponent must be >= 1");
  Upoly p;
  p.c_.assign(a + 1, Rational(0));
  p.c_[0] = 1;
  p.c_[a] = -1;
  return p;
}

Rational Upoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

Upoly Upoly::operator-() const {
  Upoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

Upoly& Upoly::operator+=(const Upoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Upoly& Upoly::operator-=(const Upoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Upoly operator*(const Upoly& a, const Upoly& b) {
  if (a.is_zero() || b.is_zero()) return Upoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Upoly(std::move(out));
}

Upoly Upoly::scaled(const Rational& c) const {
  Upoly p = *this;
  for (auto& x : p.c_) x *= c;
  p.trim();
  return p;
}

bool Upoly::try_divide(const Upoly& d, Upoly* quotient) const {
  require(!d.is_zero(), "division by zero polynomial");
  std::vector<Rational> rem = c_;
  const int dd = d.degree();
  const Rational lead = d.c_.back();
  std::vector<Rational> q;
  int rd = static_cast<int>(rem.size()) - 1;
  while (rd >= 0 && rem[rd].is_zero()) --rd;
  if (rd < dd) {
    if (rd < 0) {  // zero / d = 0
      if (quotient) *quotient = Upoly();
      return true;
    }
    return false;
  }
  q.assign(rd - dd + 1, Rational(0));
  for (int k = rd - dd; k >= 0; --k) {
    const Rational f = rem[k + dd] / lead;
    q[k] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= f * d.c_[j];
  }
  for (const auto& r : rem)
    if (!r.is_zero()) return false;
  if (quotient) *quotient = Upoly(std::move(q));
  return true;
}

Upoly Upoly::divide_exact(const Upoly& d) const {
  Upoly q;
  ensure(try_divide(d, &q), "inexact polynomial division");
  return q;
}

std::vector<Rational> Upoly::series_inverse(int max_degree) const {
  require(max_degree >= 0, "series truncation must be non-negative");
  require(!is_zero() && !c_[0].is_zero(), "series inverse needs a nonzero constant term");
  std::vector<Rational> inv(max_degree + 1, Rational(0));
  const Rational a0 = c_[0].inverse();
  inv[0] = a0;
  for (int n = 1; n <= max_degree; ++n) {
    Rational s(0);
    for (int k = 1; k <= n && k < static_cast<int>(c_.size()); ++k) s += c_[k] * inv[n - k];
    inv[n] = -a0 * s;
  }
  return inv;
}

std::vector<Rational> Upoly::series_quotient(const Upoly& num, const Upoly& den,
                                             int max_degree) {
  const std::vector<Rational> inv = den.series_inverse(max_degree);
  std::vector<Rational> out(max_degree + 1, Rational(0));
  for (int n = 0; n <= max_degree; ++n) {
    Rational s(0);
    for (int k = 0; k <= n && k < static_cast<int>(num.c_.size()); ++k)
      s += num.c_[k] * inv[n - k];
    out[n] = s;
  }
  return out;
}

Rational Upoly::eval(const Rational& x) const {
  Rational acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

bool Upoly::integer_coefficients() const {
  for (const auto& c : c_)
    if (!c.is_integer()) return false;
  return true;
}

std::string Upoly::str(bool compact, const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const std::string plus = compact ? "+" : " + ";
  const std::string minus = compact ? "-" : " - ";
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational a = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? minus : plus);
    }
    if (i == 0) {
      os << a.str();
    } else {
      if (!a.is_one()) os << a.str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace zipmot
