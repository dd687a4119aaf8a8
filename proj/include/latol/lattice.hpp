#ifndef LATOL_LATTICE_HPP
#define LATOL_LATTICE_HPP

#include <string>
#include <utility>
#include <vector>

#include "latol/bit_matrix.hpp"

namespace latol {

using element_id = int;
using CoverPair = std::pair<element_id, element_id>;  // (lower, upper)

/// A finite bounded lattice, built from its cover relation (the transitive
/// reduction of the order). Construction validates everything: acyclicity,
/// reducedness of the input, and existence of all pairwise meets and joins.
/// Instances are immutable afterwards and safe to share across threads.
class Lattice {
 public:
  /// Validates and builds. Throws NotAPosetError, NotALatticeError or
  /// NotTransitiveReductionError; std::invalid_argument for malformed input
  /// (out-of-range ids, self-covers, duplicates, n < 1).
  static Lattice from_covers(int n, const std::vector<CoverPair>& covers);

  int size() const { return n_; }
  bool leq(element_id x, element_id y) const { return leq_.get(x, y); }
  bool covers(element_id x, element_id y) const { return cover_.get(x, y); }
  element_id meet(element_id x, element_id y) const { return meet_[idx(x, y)]; }
  element_id join(element_id x, element_id y) const { return join_[idx(x, y)]; }
  element_id bottom() const { return bottom_; }
  element_id top() const { return top_; }

  /// Length (number of covers) of the longest chain from bottom to x.
  int height_of(element_id x) const { return height_[x]; }
  /// Length of the longest chain in the lattice, = height_of(top()).
  int height() const { return height_[top_]; }

  const std::vector<element_id>& upper_covers(element_id x) const { return up_[x]; }
  const std::vector<element_id>& lower_covers(element_id x) const { return low_[x]; }

  /// Sorted list of all cover pairs (lower, upper).
  const std::vector<CoverPair>& cover_pairs() const { return covers_; }

  /// Order-reversed lattice on the same element ids; dual(dual(L)) == L.
  Lattice dual() const;

  /// Complete isomorphism invariant: byte string, equal iff isomorphic.
  /// Minimum cover-matrix encoding over all relabelings that sort elements
  /// by height class (all orders within a class are tried).
  std::string canonical_form() const;
  /// canonical_form() rendered as lowercase hex.
  std::string canonical_hex() const;

  bool operator==(const Lattice& other) const {
    return n_ == other.n_ && covers_ == other.covers_;
  }

  /// Same lattice with elements relabeled by `perm` (new id of x = perm[x]).
  Lattice relabeled(const std::vector<int>& perm) const;

 private:
  Lattice() = default;
  size_t idx(int x, int y) const { return static_cast<size_t>(x) * n_ + y; }

  int n_ = 0;
  std::vector<CoverPair> covers_;
  BitMatrix leq_;
  BitMatrix cover_;
  std::vector<element_id> meet_;
  std::vector<element_id> join_;
  std::vector<std::vector<element_id>> up_;
  std::vector<std::vector<element_id>> low_;
  std::vector<int> height_;
  element_id bottom_ = 0;
  element_id top_ = 0;
};

/// The k-element chain 0 < 1 < ... < k-1.
Lattice chain(int k);

/// Direct product with row-major indexing: (a, b) -> a * l2.size() + b.
/// Order, meet and join are componentwise.
Lattice product(const Lattice& l1, const Lattice& l2);

/// Disjoint chains of the given lengths (each >= 3) glued at a shared bottom
/// and a shared top. Element 0 is the bottom, the last element is the top,
/// interiors are laid out chain by chain. Size = sum(len_i - 2) + 2.
Lattice glued_chain_sum(const std::vector<int>& lengths);

/// Backtracking bijection search over cover-preserving maps. Deliberately
/// independent of canonical_form so the two can cross-check each other.
bool is_isomorphic(const Lattice& l1, const Lattice& l2);

/// All n-element lattices, one representative per isomorphism class, each in
/// canonical relabeling, sorted by canonical form. Deterministic.
/// Grows join-semilattices top-down by antichain extension (every new
/// element picks an antichain of upper covers), appends a bottom, and
/// deduplicates by canonical form.
std::vector<Lattice> enumerate_lattices(int n, int ceiling = 8);

}  // namespace latol

#endif  // LATOL_LATTICE_HPP
