#include "zipmot/intmat.hpp"

#include <sstream>

#include "zipmot/error.hpp"

namespace zipmot {

IntMat IntMat::identity(int n) { return scalar(n, 1); }

IntMat IntMat::scalar(int n, long long q) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = q;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  require(cols_ == o.rows_, "matrix shape mismatch in product");
  IntMat out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const long long a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

LatticeVec IntMat::apply(const LatticeVec& v) const {
  require(static_cast<int>(v.size()) == cols_, "matrix/vector shape mismatch");
  LatticeVec out(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    long long s = 0;
    for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

IntMat IntMat::transpose() const {
  IntMat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool IntMat::is_identity() const { return is_scalar(1); }

bool IntMat::is_scalar(long long q) const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? q : 0)) return false;
  return true;
}

bool IntMat::divide_by(long long q, IntMat* out) const {
  if (q == 0) return false;
  IntMat p(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j) % q != 0) return false;
      p.at(i, j) = at(i, j) / q;
    }
  if (out) *out = p;
  return true;
}

Rational IntMat::det() const {
  ensure(rows_ == cols_, "determinant of a non-square matrix");
  const int n = rows_;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rational(at(i, j));
  Rational d(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) { pivot = r; break; }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      d = -d;
    }
    d *= m[col][col];
    const Rational inv = m[col][col].inverse();
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] * inv;
      for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return d;
}

Upoly IntMat::det_identity_minus_t() const {
  ensure(rows_ == cols_, "char series of a non-square matrix");
  const int n = rows_;
  // Laplace expansion along rows, memoized over column subsets: D[S] is the
  // determinant of the top-|S| rows of (I - tM) restricted to columns S.
  std::vector<Upoly> d(static_cast<std::size_t>(1) << n);
  d[0] = Upoly::one();
  auto entry = [&](int i, int j) {
    Upoly e = Upoly::constant(i == j ? 1 : 0);
    e -= Upoly::monomial(1, Rational(at(i, j)));
    return e;
  };
  for (unsigned s = 1; s < d.size(); ++s) {
    const int k = __builtin_popcount(s) - 1;  // row index being expanded
    Upoly acc;
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(s & (1u << j))) continue;
      const Upoly sub = d[s & ~(1u << j)];
      Upoly tmp = entry(k, j) * sub;
      if (pos % 2 == 1) tmp = -tmp;
      acc += tmp;
      ++pos;
    }
    d[s] = acc;
  }
  return d[d.size() - 1];
}

std::string IntMat::key() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << ":";
  for (const auto v : a_) os << v << ",";
  return os.str();
}

std::string IntMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) {
      os << at(i, j);
      if (j + 1 < cols_) os << ",";
    }
    os << "]";
    if (i + 1 < rows_) os << ",";
  }
  os << "]";
  return os.str();
}

}  // namespace zipmot
