#include "zipmot/invariants.hpp"

#include <map>
#include <mutex>
#include <set>

#include "zipmot/error.hpp"
#include "zipmot/kernels.hpp"

namespace zipmot {

namespace {

struct GroupCache {
  std::vector<std::vector<QVec>> tables;  // reynolds tables up to tables.size()-1
  std::vector<Rational> molien;           // coefficients up to molien.size()-1
  std::map<long long, std::vector<QVec>> action_rows_unused;
};

std::mutex cache_mutex;
std::map<std::string, GroupCache>& cache_map() {
  static std::map<std::string, GroupCache> m;
  return m;
}

GroupCache& cache_for(const WeylGroup& w) { return cache_map()[w.key]; }

const std::vector<Rational>& molien_cached(const WeylGroup& w, int max_degree) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  GroupCache& c = cache_for(w);
  if (static_cast<int>(c.molien.size()) < max_degree + 1)
    c.molien = kernels::molien_series(w, std::max(max_degree, 16));
  return c.molien;
}

}  // namespace

namespace detail {

const std::vector<QVec>& reynolds_table(const WeylGroup& w, int degree) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  GroupCache& c = cache_for(w);
  if (static_cast<int>(c.tables.size()) < degree + 1)
    c.tables = kernels::reynolds_tables(w, degree);
  return c.tables[degree];
}

void clear_group_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache_map().clear();
}

}  // namespace detail

long long FundamentalInvariants::degree_product() const {
  long long p = 1;
  for (const int d : degrees) p *= d;
  return p;
}

MultiPoly reynolds(const MultiPoly& p, const WeylGroup& w) {
  require(p.rank() == w.rank, "polynomial rank does not match the group action");
  MultiPoly acc(p.rank());
  for (const auto& e : w.elements) acc += p.substitute_linear(e.matrix);
  return acc.scaled(Rational(1, w.order()));
}

std::vector<long long> molien_series(const WeylGroup& w, int max_degree) {
  require(max_degree >= 0 && max_degree <= 40, "Molien truncation must be in 0..40");
  const std::vector<Rational>& coeffs = molien_cached(w, max_degree);
  std::vector<long long> out(max_degree + 1, 0);
  for (int d = 0; d <= max_degree; ++d) {
    ensure(coeffs[d].is_integer() && coeffs[d].sign() >= 0,
           "Molien coefficient is not a non-negative integer");
    out[d] = coeffs[d].to_int();
  }
  return out;
}

GradedSubspaceBasis invariant_space(const WeylGroup& w, int degree) {
  require(degree >= 0, "negative degree");
  const std::vector<QVec>& rows = detail::reynolds_table(w, degree);
  const std::vector<Monomial> basis = monomials_of_degree(w.rank, degree);
  RowSpan span(static_cast<int>(basis.size()));
  for (const auto& row : rows) span.insert(row);
  GradedSubspaceBasis out;
  out.degree = degree;
  for (const auto& row : span.rows())
    out.basis.push_back(MultiPoly::from_dense(basis, row, w.rank));
  // Exact fixedness check against every generator.
  if (!out.basis.empty() && !w.generators.empty()) {
    std::vector<std::vector<QVec>> gen_rows;
    for (const auto& g : w.generators) gen_rows.push_back(kernels::element_action_rows(g, degree));
    for (const auto& p : out.basis) {
      const QVec v = p.dense_coeffs(basis);
      for (std::size_t gi = 0; gi < gen_rows.size(); ++gi) {
        QVec img(basis.size(), Rational(0));
        for (std::size_t k = 0; k < v.size(); ++k) {
          if (v[k].is_zero()) continue;
          const QVec& row = gen_rows[gi][k];
          for (std::size_t j = 0; j < img.size(); ++j)
            if (!row[j].is_zero()) img[j] += v[k] * row[j];
        }
        ensure(img == v, "invariant-space element moved by a generator");
      }
    }
  }
  return out;
}

FundamentalInvariants fundamental_invariants(const WeylGroup& w) {
  const int r = w.rank;
  FundamentalInvariants out;
  const long long order = w.order();
  std::vector<long long> molien = molien_series(w, 16);
  auto molien_at = [&](int d) {
    if (d >= static_cast<int>(molien.size())) molien = molien_series(w, d + 4);
    return molien[d];
  };

  int last_degree = 0;
  for (int d = 1; static_cast<int>(out.generators.size()) < r; ++d) {
    ensure(d <= 2 * order,
           "invariant generator search ran past degree 2|W|; the action is broken");
    const long long target = molien_at(d);
    if (target == 0) continue;
    const std::vector<Monomial> basis = monomials_of_degree(w.rank, d);
    RowSpan span(static_cast<int>(basis.size()));

    // Degree-d slice of the subalgebra generated so far: products of the
    // generators with total degree d, in a fixed enumeration order.
    std::vector<MultiPoly> products;
    auto enumerate = [&](auto&& self, std::size_t i, int remaining,
                         const MultiPoly& acc) -> void {
      if (remaining == 0) {
        products.push_back(acc);
        return;
      }
      if (i == out.generators.size()) return;
      MultiPoly cur = acc;
      for (int e = 0; e * out.degrees[i] <= remaining; ++e) {
        if (e > 0) cur *= out.generators[i];
        self(self, i + 1, remaining - e * out.degrees[i], cur);
      }
    };
    if (!out.generators.empty())
      enumerate(enumerate, 0, d, MultiPoly::constant(w.rank, 1));
    for (const auto& p : products)
      if (!p.is_zero() && p.degree() == d) span.insert(p.dense_coeffs(basis));
    ensure(span.dim() <= target, "subalgebra slice exceeds the invariant dimension");

    if (span.dim() < target) {
      const std::vector<QVec>& rows = detail::reynolds_table(w, d);
      for (std::size_t k = 0; k < rows.size() && span.dim() < target; ++k) {
        if (!span.insert(rows[k])) continue;
        MultiPoly gen = MultiPoly::from_dense(basis, rows[k], w.rank).monic();
        out.generators.push_back(std::move(gen));
        out.degrees.push_back(d);
        ensure(static_cast<int>(out.generators.size()) <= r,
               "more generators than the rank allows");
      }
      ensure(span.dim() == target, "Reynolds images failed to span the invariants");
    }
    last_degree = d;
  }

  ensure(out.degree_product() == order,
         "product of generator degrees differs from the group order");
  // Algebraic independence via the Hilbert series: the subalgebra counts must
  // equal the coefficients of prod 1/(1 - t^{d_i}) through the last degree.
  Upoly denom = Upoly::one();
  for (const int d : out.degrees) denom *= Upoly::one_minus_power(d);
  const std::vector<Rational> series =
      Upoly::series_quotient(Upoly::one(), denom, std::max(last_degree, 1));
  for (int d = 0; d <= last_degree; ++d)
    ensure(series[d] == Rational(molien_at(d)),
           "invariant-ring Hilbert series does not match the generator degrees");
  return out;
}

std::vector<LatticeVec> weyl_orbit(const LatticeVec& lambda, const WeylGroup& w) {
  require(static_cast<int>(lambda.size()) == w.rank, "lattice vector rank mismatch");
  std::set<LatticeVec> seen{lambda};
  std::vector<LatticeVec> queue{lambda};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const LatticeVec v = queue[head];
    for (const auto& g : w.generators) {
      LatticeVec img = g.apply(v);
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return {seen.begin(), seen.end()};
}

GroupRingElem orbit_sum(const LatticeVec& lambda, const WeylGroup& w) {
  GroupRingElem out(w.rank);
  for (const auto& v : weyl_orbit(lambda, w)) out += GroupRingElem::character(v);
  return out;
}

std::vector<int> degrees_from_molien(const WeylGroup& w) {
  const int r = w.rank;
  std::vector<int> degrees;
  int max_d = 16;
  std::vector<long long> molien = molien_series(w, max_d);
  while (true) {
    degrees.clear();
    Upoly denom = Upoly::one();
    std::vector<Rational> series =
        Upoly::series_quotient(Upoly::one(), denom, max_d);
    for (int d = 1; d <= max_d && static_cast<int>(degrees.size()) < r; ++d) {
      long long have = series[d].to_int();
      while (molien[d] > have) {
        degrees.push_back(d);
        denom *= Upoly::one_minus_power(d);
        series = Upoly::series_quotient(Upoly::one(), denom, max_d);
        have = series[d].to_int();
        ensure(static_cast<int>(degrees.size()) <= r, "degree extraction overflowed the rank");
      }
      ensure(molien[d] == have, "Molien series inconsistent with extracted degrees");
    }
    if (static_cast<int>(degrees.size()) == r) break;
    ensure(max_d < 40, "failed to extract Chevalley degrees below the Molien cap");
    max_d = std::min(40, max_d * 2);
    molien = molien_series(w, max_d);
  }
  long long prod = 1;
  for (const int d : degrees) prod *= d;
  ensure(prod == w.order(), "extracted degrees do not multiply to |W|");
  return degrees;
}

}  // namespace zipmot
