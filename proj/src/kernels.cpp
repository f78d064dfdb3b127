#include "zipmot/kernels.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zipmot/error.hpp"

namespace zipmot::kernels {

namespace {

int thread_count() {
#ifdef _OPENMP
  return std::max(1, omp_get_max_threads());
#else
  return 1;
#endif
}

// Monomial bases for all degrees up to a cap, with multiply-by-variable
// transition tables and a fixed factorization m = x_iv * m' per monomial.
struct DegreeLadder {
  int rank = 0;
  int max_degree = 0;
  std::vector<std::vector<Monomial>> basis;          // basis[d], ascending grevlex
  std::vector<std::vector<std::vector<int>>> step;   // step[d][j][k]: index of m_k * x_j
  std::vector<std::vector<std::pair<int, int>>> factor;  // factor[d][k] = {var, index at d-1}
};

DegreeLadder build_ladder(int rank, int max_degree) {
  DegreeLadder l;
  l.rank = rank;
  l.max_degree = max_degree;
  l.basis.resize(max_degree + 1);
  std::vector<std::map<std::vector<int>, int>> index(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    l.basis[d] = monomials_of_degree(rank, d);
    for (std::size_t k = 0; k < l.basis[d].size(); ++k) index[d][l.basis[d][k].exps()] = k;
  }
  l.step.resize(max_degree + 1);
  for (int d = 0; d + 1 <= max_degree; ++d) {
    l.step[d].assign(rank, std::vector<int>(l.basis[d].size(), -1));
    for (int j = 0; j < rank; ++j)
      for (std::size_t k = 0; k < l.basis[d].size(); ++k) {
        std::vector<int> e = l.basis[d][k].exps();
        ++e[j];
        l.step[d][j][k] = index[d + 1].at(e);
      }
  }
  l.factor.resize(max_degree + 1);
  for (int d = 1; d <= max_degree; ++d) {
    l.factor[d].resize(l.basis[d].size());
    for (std::size_t k = 0; k < l.basis[d].size(); ++k) {
      std::vector<int> e = l.basis[d][k].exps();
      int iv = 0;
      while (e[iv] == 0) ++iv;
      --e[iv];
      l.factor[d][k] = {iv, index[d - 1].at(e)};
    }
  }
  return l;
}

// One ladder pass for a single group element: writes the dense action rows
// for every degree into acc (accumulating). Coef is long long or Rational.
template <typename Coef>
void accumulate_element(const DegreeLadder& l, const IntMat& g,
                        std::vector<std::vector<Coef>>& acc) {
  const int rank = l.rank;
  std::vector<Coef> prev{Coef(1)};  // action on the degree-0 monomial
  acc[0][0] += Coef(1);
  for (int d = 1; d <= l.max_degree; ++d) {
    const std::size_t n = l.basis[d].size();
    const std::size_t np = l.basis[d - 1].size();
    std::vector<Coef> cur(n * n, Coef(0));
    for (std::size_t k = 0; k < n; ++k) {
      const auto [iv, rest] = l.factor[d][k];
      const Coef* src = prev.data() + rest * np;
      Coef* dst = cur.data() + k * n;
      for (std::size_t idx = 0; idx < np; ++idx) {
        const Coef& s = src[idx];
        if (s == Coef(0)) continue;
        for (int j = 0; j < rank; ++j) {
          const long long c = g.at(j, iv);
          if (c == 0) continue;
          dst[l.step[d - 1][j][idx]] += Coef(c) * s;
        }
      }
    }
    auto& a = acc[d];
    for (std::size_t i = 0; i < cur.size(); ++i) a[i] += cur[i];
    prev = std::move(cur);
  }
}

// Largest column l1 norm over all group elements; the image of a degree-d
// monomial then has coefficients bounded by that norm to the d-th power.
long long max_column_l1(const WeylGroup& w) {
  long long best = 1;
  for (const auto& e : w.elements)
    for (int j = 0; j < w.rank; ++j) {
      long long s = 0;
      for (int i = 0; i < w.rank; ++i) s += std::abs(e.matrix.at(i, j));
      best = std::max(best, s);
    }
  return best;
}

bool int64_path_fits(const WeylGroup& w, int max_degree) {
  const long long a = max_column_l1(w);
  constexpr unsigned long long limit = 1ULL << 62;
  unsigned __int128 bound = 1;
  for (int i = 0; i < max_degree; ++i) {
    bound *= static_cast<unsigned long long>(a);
    if (bound >= limit) return false;
  }
  bound *= static_cast<unsigned long long>(w.order());
  return bound < limit;
}

template <typename Coef>
std::vector<std::vector<Coef>> summed_action(const WeylGroup& w, const DegreeLadder& l) {
  const int nthreads = thread_count();
  std::vector<std::vector<std::vector<Coef>>> partial(nthreads);
  for (auto& p : partial) {
    p.resize(l.max_degree + 1);
    for (int d = 0; d <= l.max_degree; ++d)
      p[d].assign(l.basis[d].size() * l.basis[d].size(), Coef(0));
  }
  const long long n = w.order();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < n; ++i) {
#ifdef _OPENMP
    const int tid = omp_get_thread_num();
#else
    const int tid = 0;
#endif
    accumulate_element(l, w.elements[i].matrix, partial[tid]);
  }
  // Exact arithmetic: merging in thread order is deterministic and the sum
  // itself does not depend on the schedule.
  for (int t = 1; t < nthreads; ++t)
    for (int d = 0; d <= l.max_degree; ++d)
      for (std::size_t i = 0; i < partial[0][d].size(); ++i)
        partial[0][d][i] += partial[t][d][i];
  return std::move(partial[0]);
}

template <typename Coef>
std::vector<std::vector<QVec>> tables_from_sums(const std::vector<std::vector<Coef>>& sums,
                                                const DegreeLadder& l, long long order) {
  const Rational inv_order = Rational(1, order);
  std::vector<std::vector<QVec>> tables(l.max_degree + 1);
  for (int d = 0; d <= l.max_degree; ++d) {
    const std::size_t n = l.basis[d].size();
    tables[d].assign(n, QVec(n, Rational(0)));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        const Coef& v = sums[d][k * n + j];
        if (v == Coef(0)) continue;
        tables[d][k][j] = Rational(v) * inv_order;
      }
  }
  return tables;
}

}  // namespace

std::vector<std::vector<QVec>> reynolds_tables(const WeylGroup& w, int max_degree) {
  require(max_degree >= 0, "negative degree");
  const DegreeLadder l = build_ladder(w.rank, max_degree);
  if (int64_path_fits(w, max_degree)) {
    const auto sums = summed_action<long long>(w, l);
    return tables_from_sums(sums, l, w.order());
  }
  const auto sums = summed_action<Rational>(w, l);
  return tables_from_sums(sums, l, w.order());
}

std::vector<std::vector<QVec>> reynolds_tables_ref(const WeylGroup& w, int max_degree) {
  require(max_degree >= 0, "negative degree");
  std::vector<std::vector<QVec>> tables(max_degree + 1);
  const Rational inv_order = Rational(1, w.order());
  for (int d = 0; d <= max_degree; ++d) {
    const std::vector<Monomial> basis = monomials_of_degree(w.rank, d);
    tables[d].reserve(basis.size());
    for (const auto& m : basis) {
      MultiPoly p(w.rank);
      const MultiPoly mono = MultiPoly::from_terms(w.rank, {{m, Rational(1)}});
      for (const auto& e : w.elements) p += mono.substitute_linear(e.matrix);
      tables[d].push_back(p.scaled(inv_order).dense_coeffs(basis));
    }
  }
  return tables;
}

std::vector<QVec> element_action_rows(const IntMat& g, int degree) {
  require(g.rows() == g.cols(), "action of a non-square matrix");
  const DegreeLadder l = build_ladder(g.rows(), degree);
  std::vector<std::vector<Rational>> acc(degree + 1);
  for (int d = 0; d <= degree; ++d)
    acc[d].assign(l.basis[d].size() * l.basis[d].size(), Rational(0));
  accumulate_element(l, g, acc);
  const std::size_t n = l.basis[degree].size();
  std::vector<QVec> rows(n, QVec(n, Rational(0)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) rows[k][j] = acc[degree][k * n + j];
  return rows;
}

std::vector<Rational> molien_series(const WeylGroup& w, int max_degree) {
  require(max_degree >= 0, "negative degree");
  const int nthreads = thread_count();
  std::vector<std::vector<Rational>> partial(nthreads,
                                             std::vector<Rational>(max_degree + 1, Rational(0)));
  const long long n = w.order();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < n; ++i) {
#ifdef _OPENMP
    const int tid = omp_get_thread_num();
#else
    const int tid = 0;
#endif
    const Upoly det = w.elements[i].matrix.det_identity_minus_t();
    const std::vector<Rational> inv = det.series_inverse(max_degree);
    for (int d = 0; d <= max_degree; ++d) partial[tid][d] += inv[d];
  }
  std::vector<Rational> out(max_degree + 1, Rational(0));
  const Rational inv_order = Rational(1, w.order());
  for (int t = 0; t < nthreads; ++t)
    for (int d = 0; d <= max_degree; ++d) out[d] += partial[t][d];
  for (auto& c : out) c *= inv_order;
  return out;
}

std::vector<Rational> molien_series_ref(const WeylGroup& w, int max_degree) {
  require(max_degree >= 0, "negative degree");
  std::vector<Rational> out(max_degree + 1, Rational(0));
  const int r = w.rank;
  std::vector<int> perm(r);
  for (const auto& e : w.elements) {
    // Leibniz determinant of (I - t g).
    std::iota(perm.begin(), perm.end(), 0);
    Upoly det;
    do {
      int sign = 1;
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
          if (perm[i] > perm[j]) sign = -sign;
      Upoly prod = Upoly::constant(sign);
      for (int i = 0; i < r; ++i) {
        Upoly entry = Upoly::constant(i == perm[i] ? 1 : 0);
        entry -= Upoly::monomial(1, Rational(e.matrix.at(i, perm[i])));
        prod *= entry;
      }
      det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const std::vector<Rational> inv = det.series_inverse(max_degree);
    for (int d = 0; d <= max_degree; ++d) out[d] += inv[d];
  }
  const Rational inv_order = Rational(1, w.order());
  for (auto& c : out) c *= inv_order;
  return out;
}

}  // namespace zipmot::kernels
