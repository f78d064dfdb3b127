#pragma once

#include <map>
#include <string>
#include <vector>

#include "zipmot/intmat.hpp"
#include "zipmot/rational.hpp"

namespace zipmot {

// Element of the group ring Q[X*(T)] of the character lattice: a finite sum
// of c * x^lambda with lambda an integer lattice vector. Multiplication is
// convolution; the identity is x^0.
class GroupRingElem {
public:
  explicit GroupRingElem(int rank = 0) : rank_(rank) {}
  static GroupRingElem zero(int rank) { return GroupRingElem(rank); }
  static GroupRingElem one(int rank);
  static GroupRingElem character(const LatticeVec& v, const Rational& c = Rational(1));

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  // Terms in descending lexicographic order of the lattice vector.
  const std::map<LatticeVec, Rational, std::greater<LatticeVec>>& terms() const {
    return terms_;
  }
  Rational coeff(const LatticeVec& v) const;

  GroupRingElem operator-() const;
  friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b);
  friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b);
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  GroupRingElem& operator+=(const GroupRingElem& o) { return *this = *this + o; }
  GroupRingElem& operator-=(const GroupRingElem& o) { return *this = *this - o; }
  GroupRingElem& operator*=(const GroupRingElem& o) { return *this = *this * o; }
  GroupRingElem scaled(const Rational& c) const;

  // Lattice substitution lambda -> F lambda on every term; requires det F != 0
  // so the map stays a ring embedding.
  GroupRingElem substitute(const IntMat& f) const;

  // Canonical form: "x^(1,-1) + 2*x^(0,0)".
  std::string str() const;
  static GroupRingElem parse(const std::string& s, int rank);

  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

private:
  void add_term(const LatticeVec& v, const Rational& c);
  int rank_;
  std::map<LatticeVec, Rational, std::greater<LatticeVec>> terms_;
};

}  // namespace zipmot
