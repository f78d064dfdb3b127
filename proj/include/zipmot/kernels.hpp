#pragma once

#include <vector>

#include "zipmot/linalg.hpp"
#include "zipmot/polynomial.hpp"
#include "zipmot/weyl.hpp"

// Data-parallel inner loops: Reynolds averaging over group elements and the
// Molien sum. Each kernel has an OpenMP fast path and a plain serial
// reference implementation kept for testing; both are exact, so results are
// bit-identical regardless of scheduling.
namespace zipmot::kernels {

// Rows of the Reynolds operator on the monomial basis, one table per degree
// 0..max_degree: table[d][k] holds the dense coefficients over the ascending
// grevlex basis of (1/|W|) sum_g g . m_k for the k-th degree-d monomial.
std::vector<std::vector<QVec>> reynolds_tables(const WeylGroup& w, int max_degree);

// Serial reference: naive substitution with generic polynomial arithmetic.
std::vector<std::vector<QVec>> reynolds_tables_ref(const WeylGroup& w, int max_degree);

// Action of a single lattice automorphism on degree-d monomials:
// row k = dense coefficients of g . m_k.
std::vector<QVec> element_action_rows(const IntMat& g, int degree);

// Coefficients 0..max_degree of (1/|W|) sum_g 1/det(1 - t g), expanded as an
// exact rational power series.
std::vector<Rational> molien_series(const WeylGroup& w, int max_degree);

// Serial reference with an independent determinant route (Leibniz expansion).
std::vector<Rational> molien_series_ref(const WeylGroup& w, int max_degree);

}  // namespace zipmot::kernels
