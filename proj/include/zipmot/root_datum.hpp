#pragma once

#include <string>
#include <vector>

#include "zipmot/intmat.hpp"

namespace zipmot {

enum class LatticeKind { SimplyConnected, Adjoint, GLn };

class RootDatum;

// Subset of simple-root indices (1-based). Empty means L = T, the full set
// means L = G.
struct LeviSubset {
  std::vector<int> indices;

  static LeviSubset empty() { return {}; }
  static LeviSubset full(const RootDatum& rd);
  static LeviSubset of(std::vector<int> indices, const RootDatum& rd);
  bool contains(int i) const;
  std::string str() const;  // "{1,3}"
};

// Split root datum on a fixed basis of the character lattice. Simple roots
// are stored in lattice coordinates, simple coroots in dual coordinates, so
// pairing(v, j) is a plain dot product.
class RootDatum {
public:
  std::string label;        // canonical, e.g. "A2-sc", "GL3"
  char family = 0;          // 'A','B','C','D','G','F'; 'L' for GL_n
  int type_rank = 0;        // the n in A_n / GL_n
  int rank = 0;             // character-lattice rank
  LatticeKind kind = LatticeKind::SimplyConnected;
  std::vector<LatticeVec> simple_roots;
  std::vector<LatticeVec> simple_coroots;

  int num_simple() const { return static_cast<int>(simple_roots.size()); }
  long long pairing(const LatticeVec& v, int coroot_index) const;
  IntMat cartan_matrix() const;
  IntMat simple_reflection(int i) const;  // 0-based generator index

  // Fundamental weights; for GL_n the determinant character is appended as an
  // extra generator of the invariant character ring.
  std::vector<LatticeVec> fundamental_weights() const;

  // Root system data (computed at construction).
  const std::vector<LatticeVec>& all_roots() const { return roots_; }
  const std::vector<LatticeVec>& positive_roots() const { return positive_roots_; }
  // Expansion of each positive root in the simple-root basis.
  const std::vector<std::vector<long long>>& positive_root_support() const {
    return positive_support_;
  }

  // Positive roots lying in the span of the Levi's simple roots.
  std::vector<LatticeVec> levi_positive_roots(const LeviSubset& levi) const;

  // True when m maps the Q-span of the roots into itself.
  bool preserves_root_span(const IntMat& m) const;
  // True when m permutes the set of roots.
  bool permutes_roots(const IntMat& m) const;
  // Expansion of v in the simple-root basis when v lies in the root span.
  bool in_root_span(const LatticeVec& v, std::vector<Rational>* coords = nullptr) const;

  // Expected Weyl group order from the classification; used as an
  // enumeration guard.
  long long weyl_order_bound() const;

private:
  friend RootDatum build_root_datum(const std::string& spec);
  void compute_roots();
  std::vector<LatticeVec> roots_;
  std::vector<LatticeVec> positive_roots_;
  std::vector<std::vector<long long>> positive_support_;
};

// Grammar: TYPE RANK ["-sc"|"-ad"] or "GL" N, e.g. "A3-sc", "B2", "GL4".
// Bare A/B/C/D/G/F specs default to the simply-connected lattice.
RootDatum build_root_datum(const std::string& spec);

}  // namespace zipmot
