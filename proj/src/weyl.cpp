#include "zipmot/weyl.hpp"

#include <set>
#include <sstream>
#include <unordered_map>

#include "zipmot/error.hpp"

namespace zipmot {

namespace {

int inversion_count(const IntMat& m, const std::vector<LatticeVec>& positive,
                    const std::set<LatticeVec>& positive_set) {
  int inv = 0;
  for (const auto& beta : positive) {
    LatticeVec img = m.apply(beta);
    for (auto& x : img) x = -x;
    if (positive_set.count(img)) ++inv;
  }
  return inv;
}

WeylGroup bfs_closure(int rank, std::vector<IntMat> gens, std::vector<int> labels,
                      std::vector<LatticeVec> positive, long long bound,
                      const std::string& key) {
  WeylGroup w;
  w.rank = rank;
  w.key = key;
  w.generators = std::move(gens);
  w.generator_labels = std::move(labels);
  w.positive_roots = std::move(positive);

  const std::set<LatticeVec> positive_set(w.positive_roots.begin(), w.positive_roots.end());
  std::unordered_map<std::string, std::size_t> seen;
  w.elements.push_back({IntMat::identity(rank), 0, {}});
  seen.emplace(w.elements[0].matrix.key(), 0);

  for (std::size_t head = 0; head < w.elements.size(); ++head) {
    const IntMat m = w.elements[head].matrix;
    const int len = w.elements[head].length;
    const std::vector<int> word = w.elements[head].word;
    for (std::size_t g = 0; g < w.generators.size(); ++g) {
      IntMat next = m * w.generators[g];
      const std::string k = next.key();
      if (seen.count(k)) continue;
      ensure(static_cast<long long>(w.elements.size()) < bound,
             "Weyl enumeration exceeded the classification bound; datum is broken");
      WeylElement e;
      e.length = len + 1;
      const int inv = inversion_count(next, w.positive_roots, positive_set);
      ensure(inv == e.length,
             "length bookkeeping mismatch: BFS depth " + std::to_string(e.length) +
                 " vs inversion count " + std::to_string(inv));
      e.word = word;
      e.word.push_back(w.generator_labels[g]);
      e.matrix = std::move(next);
      seen.emplace(k, w.elements.size());
      w.elements.push_back(std::move(e));
    }
  }

  int max_len = 0;
  for (const auto& e : w.elements) max_len = std::max(max_len, e.length);
  std::size_t count_max = 0;
  for (std::size_t i = 0; i < w.elements.size(); ++i)
    if (w.elements[i].length == max_len) {
      w.longest_index = i;
      ++count_max;
    }
  ensure(count_max == 1, "longest element is not unique");
  ensure(max_len == static_cast<int>(w.positive_roots.size()),
         "longest length differs from the number of positive roots");
  return w;
}

}  // namespace

Upoly WeylGroup::poincare_polynomial() const {
  std::vector<Rational> c(longest().length + 1, Rational(0));
  for (const auto& e : elements) c[e.length] += 1;
  Upoly p{std::move(c)};
  ensure(p.coeff(0).is_one(), "Poincare polynomial without constant term 1");
  ensure(p.eval(1) == Rational(order()), "Poincare polynomial does not sum to |W|");
  for (int i = 0; i <= p.degree(); ++i)
    ensure(p.coeff(i) == p.coeff(p.degree() - i), "Poincare polynomial is not palindromic");
  return p;
}

bool WeylGroup::contains_matrix(const IntMat& m) const {
  for (const auto& e : elements)
    if (e.matrix == m) return true;
  return false;
}

WeylGroup enumerate_weyl(const RootDatum& rd) {
  std::vector<IntMat> gens;
  std::vector<int> labels;
  for (int i = 0; i < rd.num_simple(); ++i) {
    gens.push_back(rd.simple_reflection(i));
    labels.push_back(i + 1);
  }
  std::ostringstream key;
  key << rd.label << "|full";
  WeylGroup w = bfs_closure(rd.rank, std::move(gens), std::move(labels),
                            rd.positive_roots(), rd.weyl_order_bound() + 1, key.str());
  ensure(w.order() == rd.weyl_order_bound(),
         "enumerated order differs from the classification order for " + rd.label);
  return w;
}

WeylGroup parabolic_subgroup(const RootDatum& rd, const WeylGroup& w, const LeviSubset& levi) {
  std::vector<IntMat> gens;
  std::vector<int> labels;
  for (const int i : levi.indices) {
    require(i >= 1 && i <= rd.num_simple(), "Levi index out of range");
    gens.push_back(rd.simple_reflection(i - 1));
    labels.push_back(i);
  }
  std::ostringstream key;
  key << rd.label << "|levi" << levi.str();
  return bfs_closure(rd.rank, std::move(gens), std::move(labels),
                     rd.levi_positive_roots(levi), w.order() + 1, key.str());
}

}  // namespace zipmot
