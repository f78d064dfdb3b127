#pragma once

#include <string>
#include <vector>

#include "zipmot/rational.hpp"

namespace zipmot {

// Dense univariate polynomial over Q; coefficient i belongs to t^i.
class Upoly {
public:
  Upoly() = default;
  explicit Upoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Upoly constant(const Rational& c);
  static Upoly one() { return constant(1); }
  // c * t^d
  static Upoly monomial(int degree, const Rational& c = Rational(1));
  // 1 - t^a
  static Upoly one_minus_power(int a);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Upoly operator-() const;
  Upoly& operator+=(const Upoly& o);
  Upoly& operator-=(const Upoly& o);
  friend Upoly operator+(Upoly a, const Upoly& b) { return a += b; }
  friend Upoly operator-(Upoly a, const Upoly& b) { return a -= b; }
  friend Upoly operator*(const Upoly& a, const Upoly& b);
  Upoly& operator*=(const Upoly& o) { return *this = *this * o; }
  Upoly scaled(const Rational& c) const;

  // Exact division; throws InternalError when the remainder is nonzero.
  Upoly divide_exact(const Upoly& d) const;
  // Division attempt: quotient when the remainder vanishes.
  bool try_divide(const Upoly& d, Upoly* quotient) const;

  // Power-series coefficients of 1/this up to max_degree; needs nonzero constant term.
  std::vector<Rational> series_inverse(int max_degree) const;
  // Power-series coefficients of num/den up to max_degree.
  static std::vector<Rational> series_quotient(const Upoly& num, const Upoly& den,
                                               int max_degree);

  Rational eval(const Rational& x) const;
  bool integer_coefficients() const;

  // "1 + 2*t + t^3" (spaced) or "1+2*t+t^3" (compact).
  std::string str(bool compact = false, const std::string& var = "t") const;

  friend bool operator==(const Upoly& a, const Upoly& b) { return a.c_ == b.c_; }

private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace zipmot
