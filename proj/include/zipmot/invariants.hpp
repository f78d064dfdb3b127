#pragma once

#include <vector>

#include "zipmot/group_ring.hpp"
#include "zipmot/polynomial.hpp"
#include "zipmot/weyl.hpp"

namespace zipmot {

// Basis of the degree-d invariants S^W_d in reduced echelon form; every
// element is exact-checked to be fixed by each group generator.
struct GradedSubspaceBasis {
  int degree = 0;
  std::vector<MultiPoly> basis;
};

// Generators of the invariant ring S^W: r algebraically independent
// homogeneous polynomials, monic in grevlex, listed by ascending degree.
struct FundamentalInvariants {
  std::vector<MultiPoly> generators;
  std::vector<int> degrees;
  long long degree_product() const;
};

// Averaging projector (1/|W|) sum_g g.p onto the invariants.
MultiPoly reynolds(const MultiPoly& p, const WeylGroup& w);

// Hilbert function of S^W up to max_degree via the Molien sum; coefficients
// are verified to be non-negative integers. Requires max_degree <= 40.
std::vector<long long> molien_series(const WeylGroup& w, int max_degree);

// dim S^W_d and representatives via the rank of the Reynolds operator on the
// degree-d monomial basis (independent of the Molien route).
GradedSubspaceBasis invariant_space(const WeylGroup& w, int degree);

FundamentalInvariants fundamental_invariants(const WeylGroup& w);

// Sum over the orbit W.lambda, each character once.
GroupRingElem orbit_sum(const LatticeVec& lambda, const WeylGroup& w);
// Orbit as a sorted list (test support for stabilizer-order cross-checks).
std::vector<LatticeVec> weyl_orbit(const LatticeVec& lambda, const WeylGroup& w);

// Chevalley degrees recovered from the Molien series alone (no generator
// search); cheap enough for large groups.
std::vector<int> degrees_from_molien(const WeylGroup& w);

// Shared per-group memo of Molien coefficients, Reynolds tables and
// fundamental invariants; computations are pure, so caching is transparent.
namespace detail {
const std::vector<QVec>& reynolds_table(const WeylGroup& w, int degree);
void clear_group_cache();
}  // namespace detail

}  // namespace zipmot
