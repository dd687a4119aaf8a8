#ifndef LATOL_VERIFY_HPP
#define LATOL_VERIFY_HPP

#include <string>
#include <vector>

#include "latol/lattice.hpp"

namespace latol {

/// Result of checking one lattice. Counts are over ordered tolerance pairs
/// (T, S), diagonal included. A violation is a counterexample to the
/// permutability-amicability equivalence or to a witness-construction
/// guarantee; lemma_failures collect failures of the structural facts the
/// equivalence rests on. Both lists are expected to stay empty on every
/// input; nonempty lists are data, not errors.
struct VerificationReport {
  std::string lattice_form;  // canonical hex of the lattice checked
  long pairs = 0;
  long amicable = 0;
  long permuting = 0;
  std::vector<std::string> violations;
  std::vector<std::string> lemma_failures;

  bool clean() const { return violations.empty() && lemma_failures.empty(); }
};

/// For every ordered pair of 2-uniform tolerances on l: checks that
/// permuting and amicable agree; on amicable pairs additionally runs the
/// witness construction on every (a,b) in T o S (every valid middle element
/// when check_all_u is set), verifies each result by membership and against
/// the brute-force witness list, and checks that pairs outside T o S are
/// rejected.
VerificationReport verify_theorem_on(const Lattice& l, bool check_all_u = false);

/// Structural facts, quantified over all 2-uniform tolerances on l:
/// neighbour uniqueness and existence, relatedness only along covers, the
/// meet/join neighbour identities for pairs of tolerances, the four
/// split/adherent propagation laws on permuting pairs, and that pairs of
/// 2-uniform congruences always permute. Also cross-checks the clique-based
/// block computation against the 2-uniform fast path.
VerificationReport verify_lemmas_on(const Lattice& l);

struct CatalogRow {
  int n = 0;
  long lattices = 0;
  long pairs = 0;
  long amicable = 0;
  long permuting = 0;
  long violations = 0;
};

/// Aggregate over enumerate_lattices(n) for n = 2..max_n.
struct CatalogReport {
  std::vector<CatalogRow> rows;
  std::vector<std::string> violations;  // all violation and lemma-failure lines

  long total_violations() const;
  /// One line per n: "n=2 lattices=1 pairs=1 amicable=1 permuting=1 violations=0",
  /// followed by any violation lines.
  std::string to_text() const;
};

/// Runs verify_theorem_on (and verify_lemmas_on unless check_lemmas is
/// false) over every catalog lattice, distributing lattices across threads.
/// Aggregation is in catalog order, so the report is deterministic.
CatalogReport run_catalog(int max_n, bool check_all_u = false, bool check_lemmas = true);

}  // namespace latol

#endif  // LATOL_VERIFY_HPP
