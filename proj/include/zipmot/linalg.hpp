#pragma once

#include <optional>
#include <vector>

#include "zipmot/rational.hpp"

namespace zipmot {

using QVec = std::vector<Rational>;

// Row space held in reduced row-echelon form over Q; rows keep pivot columns
// in increasing order and pivots are normalized to 1.
class RowSpan {
public:
  explicit RowSpan(int ncols) : n_(ncols) {}

  int ncols() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<QVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Residual of v after reduction against the span (zero iff v is in the span).
  QVec reduce(QVec v) const;
  // Inserts v when independent; keeps reduced echelon form. Returns true if inserted.
  bool insert(QVec v);
  bool contains(const QVec& v) const;
  // Coordinates of v in terms of rows(); nullopt when v is outside the span.
  std::optional<QVec> coordinates(QVec v) const;

private:
  int n_;
  std::vector<QVec> rows_;
  std::vector<int> pivots_;
};

bool is_zero_vec(const QVec& v);

}  // namespace zipmot
