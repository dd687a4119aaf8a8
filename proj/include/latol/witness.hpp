#ifndef LATOL_WITNESS_HPP
#define LATOL_WITNESS_HPP

#include <vector>

#include "latol/amicability.hpp"
#include "latol/lattice.hpp"
#include "latol/relation.hpp"

namespace latol {

enum class WitnessCase {
  trivial,  // (a,b) already in T or S
  meet,     // a and b are both covered by u; d = meet(a, b) (join when dualized)
  climb,    // a < u < b; d found by climbing a block chain and descending
};

enum class EndKind { none, split, adherent };

/// Full record of one run of the witness construction: given (a,b) in T o S,
/// produce d with (a,d) in S and (d,b) in T, so (a,b) in S o T.
///
/// The climb case builds the chain x0 = a, x1 = u, x2 = b, then repeatedly
/// appends the upper T-neighbour at even positions and the upper
/// S-neighbour at odd ones until neither applies. The chain ascends
/// strictly, so it stops within height(L) steps; the last element is a
/// two-fold top and every x_i with i <= n-2 must be a two-fold bottom, which
/// is exactly where amicability of (T, S) gets used.
struct WitnessTrace {
  element_id a = 0;
  element_id b = 0;
  element_id u = -1;  // middle element; -1 in the trivial case
  WitnessCase kind = WitnessCase::trivial;
  bool dualized = false;  // solved on dual(L) (descending configurations)
  std::vector<element_id> chain;  // x0..xn, climb case only
  EndKind end_kind = EndKind::none;  // kind of the two-fold top xn
  element_id d = -1;
};

/// Runs the construction with the least valid middle element u.
/// Throws NotInProductError when (a,b) is not in T o S, and
/// NotAmicableError when a step of the construction fails (which the
/// underlying theorem rules out for amicable pairs). Every returned d is
/// verified by direct membership before the trace is handed back.
WitnessTrace construct_witness(const Lattice& l, const BinaryRelation& t,
                               const BinaryRelation& s, element_id a, element_id b);

/// Same, with a caller-chosen middle element ((a,u) in T and (u,b) in S
/// required, else std::invalid_argument). When (a,b) is in T or S the
/// trivial case still wins, whatever u is.
WitnessTrace construct_witness(const Lattice& l, const BinaryRelation& t,
                               const BinaryRelation& s, element_id a, element_id b,
                               element_id u);

/// All valid middle elements for (a, b): every u with (a,u) in T, (u,b) in S.
std::vector<element_id> middle_elements(const BinaryRelation& t, const BinaryRelation& s,
                                        element_id a, element_id b);

/// Oracle: every d with (a,d) in S and (d,b) in T, by direct scan.
std::vector<element_id> brute_force_witnesses(const Lattice& l, const BinaryRelation& t,
                                              const BinaryRelation& s, element_id a,
                                              element_id b);

}  // namespace latol

#endif  // LATOL_WITNESS_HPP
