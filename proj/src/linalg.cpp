#include "zipmot/linalg.hpp"

#include <algorithm>

#include "zipmot/error.hpp"

namespace zipmot {

bool is_zero_vec(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

QVec RowSpan::reduce(QVec v) const {
  ensure(static_cast<int>(v.size()) == n_, "vector length mismatch in RowSpan");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    const Rational f = c;  // pivot is 1
    const QVec& row = rows_[k];
    for (int j = 0; j < n_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  return v;
}

bool RowSpan::insert(QVec v) {
  v = reduce(std::move(v));
  int p = -1;
  for (int j = 0; j < n_; ++j)
    if (!v[j].is_zero()) { p = j; break; }
  if (p < 0) return false;
  const Rational inv = v[p].inverse();
  for (auto& x : v) x *= inv;
  // Eliminate the new pivot column from existing rows.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = rows_[k][p];
    if (c.is_zero()) continue;
    for (int j = 0; j < n_; ++j)
      if (!v[j].is_zero()) rows_[k][j] -= c * v[j];
  }
  const auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = it - pivots_.begin();
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool RowSpan::contains(const QVec& v) const { return is_zero_vec(reduce(v)); }

std::optional<QVec> RowSpan::coordinates(QVec v) const {
  ensure(static_cast<int>(v.size()) == n_, "vector length mismatch in RowSpan");
  QVec coords(rows_.size(), Rational(0));
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = v[pivots_[k]];
    if (c.is_zero()) continue;
    coords[k] = c;
    const QVec& row = rows_[k];
    for (int j = 0; j < n_; ++j)
      if (!row[j].is_zero()) v[j] -= c * row[j];
  }
  if (!is_zero_vec(v)) return std::nullopt;
  return coords;
}

}  // namespace zipmot
