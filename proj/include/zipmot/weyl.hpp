#pragma once

#include <string>
#include <vector>

#include "zipmot/intmat.hpp"
#include "zipmot/root_datum.hpp"
#include "zipmot/upoly.hpp"

namespace zipmot {

struct WeylElement {
  IntMat matrix;          // action on the character lattice
  int length = 0;         // BFS depth, cross-checked against the inversion count
  std::vector<int> word;  // reduced word in 1-based simple-reflection indices
};

// Finite Weyl group realized as integer lattice automorphisms. Immutable
// after enumeration and safe to share across threads.
class WeylGroup {
public:
  int rank = 0;
  std::string key;                      // canonical identity, e.g. "B2-sc|1,2"
  std::vector<IntMat> generators;       // simple reflections used
  std::vector<int> generator_labels;    // 1-based simple-root indices
  std::vector<WeylElement> elements;    // BFS order; elements[0] is the identity
  std::size_t longest_index = 0;
  std::vector<LatticeVec> positive_roots;  // of the (sub)system, for lengths

  long long order() const { return static_cast<long long>(elements.size()); }
  const WeylElement& longest() const { return elements[longest_index]; }
  // Sum of t^l(w); checked to have constant term 1, to be palindromic and to
  // sum to |W| at t = 1.
  Upoly poincare_polynomial() const;
  bool contains_matrix(const IntMat& m) const;
};

WeylGroup enumerate_weyl(const RootDatum& rd);
// Subgroup generated by the selected simple reflections; lengths are
// recomputed intrinsically against the sub-root-system.
WeylGroup parabolic_subgroup(const RootDatum& rd, const WeylGroup& w, const LeviSubset& levi);

}  // namespace zipmot
