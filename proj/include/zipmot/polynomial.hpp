#pragma once

#include <string>
#include <vector>

#include "zipmot/intmat.hpp"
#include "zipmot/linalg.hpp"
#include "zipmot/rational.hpp"

namespace zipmot {

// Exponent vector with cached total degree.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);
  static Monomial one(int rank) { return Monomial(std::vector<int>(rank, 0)); }
  static Monomial variable(int rank, int i);

  int rank() const { return static_cast<int>(e_.size()); }
  int degree() const { return deg_; }
  int exp(int i) const { return e_[i]; }
  const std::vector<int>& exps() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& m) const;  // this | m
  Monomial divided_into(const Monomial& m) const;  // m / this, requires divides(m)
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  // Graded reverse lexicographic order, variables ordered by index:
  // returns <0, 0, >0 as a <, =, > b.
  static int cmp(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  std::string str() const;  // "x1^2*x2", "1" for the empty monomial

private:
  std::vector<int> e_;
  int deg_ = 0;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

// Multivariate polynomial over Q with a fixed variable count; terms are kept
// in strictly descending grevlex order and never have zero coefficients.
class MultiPoly {
public:
  explicit MultiPoly(int rank = 0) : rank_(rank) {}
  static MultiPoly zero(int rank) { return MultiPoly(rank); }
  static MultiPoly constant(int rank, const Rational& c);
  static MultiPoly variable(int rank, int i);
  static MultiPoly from_terms(int rank, std::vector<Term> terms);  // sorts and merges

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const;
  int degree() const;  // max total degree; -1 for the zero polynomial
  bool is_homogeneous() const;
  Rational coeff(const Monomial& m) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_term(const Monomial& m, const Rational& c) const;

  MultiPoly homogeneous_component(int d) const;

  // Replaces variable x_i by the linear form given by column i of m, so the
  // map is the linear extension of v -> m v on lattice generators and
  // substitute(substitute(p, N), M) == substitute(p, M*N).
  MultiPoly substitute_linear(const IntMat& m) const;

  MultiPoly monic() const;  // leading coefficient scaled to 1
  // Integer coefficients with content 1; sign chosen so the leading
  // coefficient is positive.
  MultiPoly primitive_part() const;

  // Dense coefficient vector over a degree-d monomial basis listed ascending
  // in grevlex; requires the polynomial to be homogeneous of degree d (or 0).
  QVec dense_coeffs(const std::vector<Monomial>& basis) const;
  static MultiPoly from_dense(const std::vector<Monomial>& basis, const QVec& v, int rank);

  // Canonical form: "3/2*x1^2*x2 - x3", terms in descending grevlex order.
  std::string str() const;
  static MultiPoly parse(const std::string& s, int rank);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
  void check_same_ring(const MultiPoly& o) const;
  int rank_;
  std::vector<Term> terms_;  // descending grevlex
};

// All monomials in `rank` variables of total degree d, ascending grevlex.
std::vector<Monomial> monomials_of_degree(int rank, int d);

}  // namespace zipmot
