#include "zipmot/root_datum.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zipmot/error.hpp"
#include "zipmot/linalg.hpp"

namespace zipmot {

namespace {

// Standard Cartan matrices, Bourbaki numbering, entry (i,j) = <alpha_i, alpha_j^v>.
IntMat cartan_of_type(char family, int n) {
  IntMat c(n, n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) {
      c.at(i, i + 1) = -1;
      c.at(i + 1, i) = -1;
    }
  };
  switch (family) {
    case 'A':
      chain(n);
      break;
    case 'B':  // last simple root short
      chain(n);
      c.at(n - 2, n - 1) = -2;
      break;
    case 'C':  // last simple root long
      chain(n);
      c.at(n - 1, n - 2) = -2;
      break;
    case 'D':
      chain(n - 1);
      c.at(n - 3, n - 1) = -1;
      c.at(n - 1, n - 3) = -1;
      break;
    case 'G':  // alpha_1 short
      c.at(0, 1) = -1;
      c.at(1, 0) = -3;
      break;
    case 'F':  // alpha_1, alpha_2 long
      chain(n);
      c.at(1, 2) = -2;
      break;
    default:
      ensure(false, "unknown family in Cartan table");
  }
  return c;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

LeviSubset LeviSubset::full(const RootDatum& rd) {
  LeviSubset l;
  for (int i = 1; i <= rd.num_simple(); ++i) l.indices.push_back(i);
  return l;
}

LeviSubset LeviSubset::of(std::vector<int> indices, const RootDatum& rd) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (const int i : indices)
    require(i >= 1 && i <= rd.num_simple(),
            "Levi index " + std::to_string(i) + " out of range for " + rd.label);
  return {std::move(indices)};
}

bool LeviSubset::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

std::string LeviSubset::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    os << indices[k];
    if (k + 1 < indices.size()) os << ",";
  }
  os << "}";
  return os.str();
}

long long RootDatum::pairing(const LatticeVec& v, int coroot_index) const {
  ensure(coroot_index >= 0 && coroot_index < num_simple(), "coroot index out of range");
  const LatticeVec& cv = simple_coroots[coroot_index];
  ensure(v.size() == cv.size(), "lattice vector rank mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * cv[i];
  return s;
}

IntMat RootDatum::cartan_matrix() const {
  IntMat c(num_simple(), num_simple());
  for (int i = 0; i < num_simple(); ++i)
    for (int j = 0; j < num_simple(); ++j) c.at(i, j) = pairing(simple_roots[i], j);
  return c;
}

IntMat RootDatum::simple_reflection(int i) const {
  ensure(i >= 0 && i < num_simple(), "reflection index out of range");
  IntMat m = IntMat::identity(rank);
  for (int k = 0; k < rank; ++k)
    for (int j = 0; j < rank; ++j) m.at(k, j) -= simple_roots[i][k] * simple_coroots[i][j];
  return m;
}

std::vector<LatticeVec> RootDatum::fundamental_weights() const {
  switch (kind) {
    case LatticeKind::SimplyConnected: {
      std::vector<LatticeVec> w;
      for (int i = 0; i < num_simple(); ++i) {
        LatticeVec v(rank, 0);
        v[i] = 1;
        w.push_back(std::move(v));
      }
      return w;
    }
    case LatticeKind::GLn: {
      std::vector<LatticeVec> w;
      for (int k = 1; k <= rank; ++k) {
        LatticeVec v(rank, 0);
        for (int i = 0; i < k; ++i) v[i] = 1;
        w.push_back(std::move(v));  // k = rank gives the determinant character
      }
      return w;
    }
    case LatticeKind::Adjoint:
      throw PreconditionError("fundamental weights unsupported on the adjoint lattice (K0 route needs a simply-connected or GL_n datum)");
  }
  ensure(false, "unreachable");
  return {};
}

bool RootDatum::in_root_span(const LatticeVec& v, std::vector<Rational>* coords) const {
  // Solve simple_roots^T c = v by Gaussian elimination over Q.
  const int m = num_simple();
  std::vector<QVec> a(rank, QVec(m + 1, Rational(0)));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = Rational(simple_roots[j][i]);
    a[i][m] = Rational(v[i]);
  }
  int row = 0;
  std::vector<int> pivot_col(m, -1);
  for (int col = 0; col < m && row < rank; ++col) {
    int p = -1;
    for (int r = row; r < rank; ++r)
      if (!a[r][col].is_zero()) { p = r; break; }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    const Rational inv = a[row][col].inverse();
    for (int j = col; j <= m; ++j) a[row][j] *= inv;
    for (int r = 0; r < rank; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (int j = col; j <= m; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col[col] = row;
    ++row;
  }
  // Consistency: no row with zero coefficients but nonzero rhs.
  for (int r = row; r < rank; ++r)
    if (!a[r][m].is_zero()) return false;
  if (coords) {
    coords->assign(m, Rational(0));
    for (int col = 0; col < m; ++col)
      if (pivot_col[col] >= 0) (*coords)[col] = a[pivot_col[col]][m];
  }
  return true;
}

void RootDatum::compute_roots() {
  std::set<LatticeVec> seen;
  std::vector<LatticeVec> queue;
  for (const auto& a : simple_roots) {
    if (seen.insert(a).second) queue.push_back(a);
    LatticeVec neg(a);
    for (auto& x : neg) x = -x;
    if (seen.insert(neg).second) queue.push_back(neg);
  }
  std::vector<IntMat> refl;
  for (int i = 0; i < num_simple(); ++i) refl.push_back(simple_reflection(i));
  for (std::size_t k = 0; k < queue.size(); ++k) {
    ensure(queue.size() <= 200, "root closure exceeded bound; datum is broken");
    const LatticeVec v = queue[k];
    for (const auto& s : refl) {
      LatticeVec w = s.apply(v);
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  roots_.assign(seen.begin(), seen.end());
  for (const auto& r : roots_) {
    std::vector<Rational> c;
    ensure(in_root_span(r, &c), "root outside the span of simple roots");
    const bool nonneg = std::all_of(c.begin(), c.end(),
                                    [](const Rational& x) { return x.sign() >= 0; });
    if (!nonneg) continue;
    std::vector<long long> support;
    for (const auto& x : c) support.push_back(x.to_int());
    positive_roots_.push_back(r);
    positive_support_.push_back(std::move(support));
  }
  ensure(positive_roots_.size() * 2 == roots_.size(),
         "positive roots do not split the root system in half");
}

std::vector<LatticeVec> RootDatum::levi_positive_roots(const LeviSubset& levi) const {
  std::vector<LatticeVec> out;
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    bool ok = true;
    for (int j = 0; j < num_simple(); ++j)
      if (positive_support_[k][j] != 0 && !levi.contains(j + 1)) { ok = false; break; }
    if (ok) out.push_back(positive_roots_[k]);
  }
  return out;
}

bool RootDatum::preserves_root_span(const IntMat& m) const {
  for (const auto& a : simple_roots)
    if (!in_root_span(m.apply(a))) return false;
  return true;
}

bool RootDatum::permutes_roots(const IntMat& m) const {
  std::set<LatticeVec> root_set(roots_.begin(), roots_.end());
  std::set<LatticeVec> image;
  for (const auto& r : roots_) {
    const LatticeVec v = m.apply(r);
    if (!root_set.count(v)) return false;
    image.insert(v);
  }
  return image.size() == root_set.size();
}

long long RootDatum::weyl_order_bound() const {
  switch (family) {
    case 'A': return factorial(type_rank + 1);
    case 'B':
    case 'C': return (1LL << type_rank) * factorial(type_rank);
    case 'D': return (1LL << (type_rank - 1)) * factorial(type_rank);
    case 'G': return 12;
    case 'F': return 1152;
    case 'L': return factorial(type_rank);
    default: ensure(false, "unknown family"); return 0;
  }
}

RootDatum build_root_datum(const std::string& spec) {
  auto bad = [&](const std::string& why) -> void {
    throw PreconditionError("unknown group spec '" + spec + "': " + why);
  };

  RootDatum rd;
  std::string body = spec;
  if (body.size() >= 3 && body.substr(body.size() - 3) == "-sc") {
    rd.kind = LatticeKind::SimplyConnected;
    body = body.substr(0, body.size() - 3);
  } else if (body.size() >= 3 && body.substr(body.size() - 3) == "-ad") {
    rd.kind = LatticeKind::Adjoint;
    body = body.substr(0, body.size() - 3);
  }

  if (body.rfind("GL", 0) == 0) {
    if (rd.kind == LatticeKind::Adjoint) bad("GL_n has no adjoint-lattice variant here");
    rd.kind = LatticeKind::GLn;
    const std::string num = body.substr(2);
    if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit))
      bad("expected GLn with a numeric n");
    const int n = std::stoi(num);
    if (n < 1 || n > 6) bad("GL_n supported only for 1 <= n <= 6");
    rd.family = 'L';
    rd.type_rank = n;
    rd.rank = n;
    rd.label = "GL" + std::to_string(n);
    for (int i = 0; i + 1 < n; ++i) {
      LatticeVec a(n, 0);
      a[i] = 1;
      a[i + 1] = -1;
      rd.simple_roots.push_back(a);
      rd.simple_coroots.push_back(a);
    }
    rd.compute_roots();
    return rd;
  }

  if (body.empty()) bad("empty spec");
  const char family = body[0];
  if (family == 'E') throw PreconditionError("unsupported group spec '" + spec + "': E-types are not supported");
  if (family != 'A' && family != 'B' && family != 'C' && family != 'D' &&
      family != 'G' && family != 'F')
    bad("expected type A,B,C,D,G2,F4 or GLn");
  const std::string num = body.substr(1);
  if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit))
    bad("expected a numeric rank");
  const int n = std::stoi(num);
  const auto in_range = [&](int lo, int hi) { return n >= lo && n <= hi; };
  if ((family == 'A' && !in_range(1, 6)) || ((family == 'B' || family == 'C') && !in_range(2, 6)) ||
      (family == 'D' && !in_range(3, 6)) || (family == 'G' && n != 2) || (family == 'F' && n != 4))
    bad("rank out of the supported range (total rank <= 6)");

  rd.family = family;
  rd.type_rank = n;
  rd.rank = n;
  rd.label = std::string(1, family) + std::to_string(n) +
             (rd.kind == LatticeKind::Adjoint ? "-ad" : "-sc");

  const IntMat c = cartan_of_type(family, n);
  for (int i = 0; i < n; ++i) {
    LatticeVec root(n, 0), coroot(n, 0);
    if (rd.kind == LatticeKind::SimplyConnected) {
      // Weight-lattice basis: alpha_i = row i of the Cartan matrix, the dual
      // basis of the fundamental weights is the simple coroots.
      for (int j = 0; j < n; ++j) root[j] = c.at(i, j);
      coroot[i] = 1;
    } else {
      // Root-lattice basis: alpha_i = e_i, coroot pairings from column i.
      root[i] = 1;
      for (int j = 0; j < n; ++j) coroot[j] = c.at(j, i);
    }
    rd.simple_roots.push_back(std::move(root));
    rd.simple_coroots.push_back(std::move(coroot));
  }
  rd.compute_roots();
  return rd;
}

}  // namespace zipmot
