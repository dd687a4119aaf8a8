#ifndef LATOL_RELATION_HPP
#define LATOL_RELATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "latol/bit_matrix.hpp"
#include "latol/lattice.hpp"

namespace latol {

/// Result type of relation composition. Compositions of symmetric relations
/// need not be symmetric, so the image is a plain matrix with no invariants.
using RelationImage = BitMatrix;

/// Reflexive symmetric binary relation on lattice elements. The diagonal is
/// set at construction and symmetry is enforced, so instances can only
/// represent candidate tolerances; compatibility is a separate check.
/// Immutable after construction.
class BinaryRelation {
 public:
  /// The equality relation (diagonal only).
  explicit BinaryRelation(int n);

  /// Diagonal plus the given pairs, both ways round. Pair ids must be in
  /// range; diagonal pairs are accepted and ignored.
  static BinaryRelation from_pairs(int n, const std::vector<std::pair<element_id, element_id>>& pairs);

  int size() const { return m_.size(); }
  bool contains(element_id x, element_id y) const { return m_.get(x, y); }

  /// Off-diagonal pairs with x < y, sorted. Together with size() this is a
  /// complete description of the relation.
  std::vector<std::pair<element_id, element_id>> pairs() const;

  /// The relation under an element relabeling (new id of x = perm[x]).
  BinaryRelation relabeled(const std::vector<int>& perm) const;

  const BitMatrix& matrix() const { return m_; }
  bool operator==(const BinaryRelation& other) const { return m_ == other.m_; }
  bool operator!=(const BinaryRelation& other) const { return m_ != other.m_; }
  std::string key() const { return m_.key(); }

 private:
  BitMatrix m_;
};

/// True iff rel is compatible with meet and join: for all (a,b), (c,d) in
/// rel, (a^c, b^d) and (a v c, b v d) are in rel. Reflexivity and symmetry
/// hold by construction but are re-verified. Sizes must match.
bool is_tolerance(const Lattice& l, const BinaryRelation& rel);

/// Tolerance that is also transitive.
bool is_congruence(const Lattice& l, const BinaryRelation& rel);

/// All blocks (maximal cliques) of a tolerance, each sorted, the list sorted
/// lexicographically. Every element appears in at least one block. Uses
/// general maximal-clique enumeration with pivoting, with no 2-uniformity
/// assumption. Throws NotAToleranceError.
std::vector<std::vector<element_id>> blocks(const Lattice& l, const BinaryRelation& t);

/// True iff every block of the tolerance has exactly two elements.
/// Equivalent to: no isolated element, and no triangle; this avoids the
/// full clique enumeration. Throws NotAToleranceError.
bool is_two_uniform(const Lattice& l, const BinaryRelation& t);

/// Blocks of a 2-uniform tolerance as (x, y) pairs with x < y, sorted.
/// Once 2-uniformity holds every related off-diagonal pair is itself a
/// block. Throws NotAToleranceError or NotTwoUniformError.
std::vector<std::pair<element_id, element_id>> two_uniform_blocks(const Lattice& l,
                                                                  const BinaryRelation& t);

/// (x, z) in result iff there is a y with (x, y) in t and (y, z) in s.
RelationImage compose(const BinaryRelation& t, const BinaryRelation& s);

/// compose(t, s) == compose(s, t).
bool permutes(const BinaryRelation& t, const BinaryRelation& s);

/// Exactly the 2-uniform tolerances on l, sorted by bit pattern.
/// Searches subsets of cover-pair edges where every element gets at most one
/// downward and one upward edge and at least one edge, then filters by
/// is_tolerance and is_two_uniform. The restriction to cover edges is an
/// optimization cross-checked in tests against an unrestricted scan of all
/// reflexive symmetric relations.
std::vector<BinaryRelation> enumerate_two_uniform(const Lattice& l);

/// True iff `elements` is nonempty, closed under meet and join, and closed
/// under intervals (x <= z <= y with x, y in the set forces z in). Blocks of
/// tolerances always pass this; exposed for tests.
bool is_convex_sublattice(const Lattice& l, const std::vector<element_id>& elements);

/// Render as "(0,1)(2,3)": the off-diagonal pair list, for reports.
std::string to_string(const BinaryRelation& rel);

}  // namespace latol

#endif  // LATOL_RELATION_HPP
