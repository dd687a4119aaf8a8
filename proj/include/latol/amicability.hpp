#ifndef LATOL_AMICABILITY_HPP
#define LATOL_AMICABILITY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latol/lattice.hpp"
#include "latol/relation.hpp"

namespace latol {

/// Where an element sits inside the blocks of one 2-uniform tolerance R.
/// lower_neighbour is the v with {v, element} a block and v covered by
/// element (present iff the element is an R-top); upper_neighbour dually
/// (present iff it is an R-bottom). Each is unique when present, and at
/// least one is always present.
struct ElementRole {
  element_id element = 0;
  std::optional<element_id> lower_neighbour;
  std::optional<element_id> upper_neighbour;

  bool is_top() const { return lower_neighbour.has_value(); }
  bool is_bottom() const { return upper_neighbour.has_value(); }
};

/// Role of every element, indexed by element id.
/// Throws NotAToleranceError / NotTwoUniformError on bad input, and
/// LatolError if a block pair fails to be a cover pair or an element ends up
/// with two neighbours on the same side (impossible for genuine 2-uniform
/// tolerances; kept as hard checks rather than assumptions).
std::vector<ElementRole> classify(const Lattice& l, const BinaryRelation& r);

enum class TopKind { none, split, adherent };
enum class BottomKind { none, split, adherent };

/// Role of an element under a pair (T, S) of 2-uniform tolerances.
/// A two-fold top is a T-top and an S-top; split when the two lower
/// neighbours differ, adherent when they coincide. Dually for bottoms.
struct TwoFoldRole {
  element_id element = 0;
  TopKind top = TopKind::none;
  BottomKind bottom = BottomKind::none;

  bool two_fold_top() const { return top != TopKind::none; }
  bool two_fold_bottom() const { return bottom != BottomKind::none; }
};

std::vector<TwoFoldRole> two_fold_roles(const Lattice& l, const BinaryRelation& t,
                                        const BinaryRelation& s);
/// Same, from precomputed per-tolerance roles.
std::vector<TwoFoldRole> two_fold_roles(const std::vector<ElementRole>& rt,
                                        const std::vector<ElementRole>& rs);

enum class Condition { A1, A2 };

/// One failing instance of condition A1 or A2.
/// A1: u a two-fold top, u covered by v, (u,v) in T or S, but v is not a
/// two-fold top. A2 is the dual, with v a lower cover of u. `via` names the
/// relation containing the (u,v) edge; a violating edge lies in exactly one
/// of the two (an edge in both makes v a top/bottom for both).
struct AmicabilityViolation {
  Condition condition = Condition::A1;
  element_id u = 0;
  element_id v = 0;
  char via = 'T';
};

/// "A1-violation u=1 v=2 via=S"
std::string to_line(const AmicabilityViolation& violation);

/// Every failing (u, v, condition) instance, sorted by (condition, u, v).
/// Empty iff the pair is amicable.
std::vector<AmicabilityViolation> amicability_violations(const Lattice& l,
                                                         const BinaryRelation& t,
                                                         const BinaryRelation& s);
/// Same, from precomputed roles.
std::vector<AmicabilityViolation> amicability_violations(const Lattice& l,
                                                         const BinaryRelation& t,
                                                         const BinaryRelation& s,
                                                         const std::vector<ElementRole>& rt,
                                                         const std::vector<ElementRole>& rs);

bool is_amicable(const Lattice& l, const BinaryRelation& t, const BinaryRelation& s);

/// Memoizes classify() per relation bit pattern. Verification harnesses ask
/// for the same roles once per ordered pair; this makes that O(1) after the
/// first hit. Not thread-safe; use one cache per worker.
class RoleCache {
 public:
  explicit RoleCache(const Lattice& l) : l_(l) {}
  const std::vector<ElementRole>& roles(const BinaryRelation& r);

 private:
  const Lattice& l_;
  std::map<std::string, std::vector<ElementRole>> cache_;
};

}  // namespace latol

#endif  // LATOL_AMICABILITY_HPP
