// Acceptance harness: one line per criterion, [PASS]/[FAIL] prefix, exit
// code = number of failures. Each criterion recomputes what it needs; a
// thrown exception fails the criterion instead of aborting the run.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "latol/amicability.hpp"
#include "latol/errors.hpp"
#include "latol/lattice.hpp"
#include "latol/relation.hpp"
#include "latol/verify.hpp"
#include "latol/witness.hpp"
#include "oracles.hpp"

using namespace latol;

namespace {

int failures = 0;

void report(bool ok, const std::string& label) {
  std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", label.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <typename F>
void criterion(const std::string& label, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(false, label + " (exception: " + e.what() + ")");
    return;
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// Permutability-amicability equivalence over every lattice class with at
// most 7 elements, within the 5 minute budget.
void criterion_theorem() {
  const auto start = std::chrono::steady_clock::now();
  const CatalogReport rep = run_catalog(7, /*check_all_u=*/false, /*check_lemmas=*/false);
  const double elapsed = seconds_since(start);
  bool ok = rep.total_violations() == 0 && rep.violations.empty() && elapsed <= 300.0;
  long classes_at_7 = 0;
  for (const CatalogRow& row : rep.rows) {
    if (row.amicable != row.permuting) ok = false;
    if (row.n == 7) classes_at_7 = row.lattices;
  }
  report(ok, "permuting = amicable for every tolerance pair on every lattice with <= 7 "
             "elements (" + std::to_string(classes_at_7) + " classes at n=7, " +
             fmt_seconds(elapsed) + ")");
}

// Every ordered pair of 2-uniform congruences permutes, rechecked directly
// rather than through the report plumbing.
void criterion_congruences_permute() {
  long checked = 0;
  bool ok = true;
  for (int n = 2; n <= 7; ++n)
    for (const Lattice& l : enumerate_lattices(n)) {
      std::vector<BinaryRelation> congs;
      for (const BinaryRelation& t : enumerate_two_uniform(l))
        if (is_congruence(l, t)) congs.push_back(t);
      for (const BinaryRelation& t : congs)
        for (const BinaryRelation& s : congs) {
          ++checked;
          if (!permutes(t, s)) ok = false;
        }
    }
  report(ok && checked > 0, "every pair of 2-uniform congruences permutes, n <= 7 (" +
                                std::to_string(checked) + " ordered pairs)");
}

// Witness construction on every amicable pair with every (a,b) in T o S and
// every valid middle element; results checked against direct membership and
// the brute-force witness list inside the harness.
void criterion_witnesses() {
  const CatalogReport rep = run_catalog(6, /*check_all_u=*/true, /*check_lemmas=*/false);
  report(rep.total_violations() == 0 && rep.violations.empty(),
         "witness construction sound and complete on all amicable pairs, n <= 6, "
         "including every middle element");
}

// Structural facts: block shape and neighbour uniqueness per tolerance,
// meet/join neighbour identities per pair, split/adherent propagation on
// permuting pairs, congruence pairs permuting.
void criterion_lemmas() {
  long failures_seen = 0;
  for (int n = 2; n <= 6; ++n)
    for (const Lattice& l : enumerate_lattices(n))
      failures_seen += static_cast<long>(verify_lemmas_on(l).lemma_failures.size());
  report(failures_seen == 0, "structural lemma checks clean over the n <= 6 catalog");
}

// The 4-chain with T = {01,23}, S = {01,12,23}: not amicable (A1 fails at
// u=1 via S), not permuting, (0,2) in T o S but not in S o T.
void criterion_counterexample() {
  const Lattice c4 = chain(4);
  const BinaryRelation t = BinaryRelation::from_pairs(4, {{0, 1}, {2, 3}});
  const BinaryRelation s = BinaryRelation::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto viols = amicability_violations(c4, t, s);
  bool ok = viols.size() == 2 && to_line(viols[0]) == "A1-violation u=1 v=2 via=S" &&
            to_line(viols[1]) == "A2-violation u=2 v=1 via=S";
  ok = ok && !is_amicable(c4, t, s) && !permutes(t, s);
  ok = ok && compose(t, s).get(0, 2) && !compose(s, t).get(0, 2);
  ok = ok && brute_force_witnesses(c4, t, s, 0, 2).empty();
  try {
    construct_witness(c4, t, s, 0, 2);
    ok = false;
  } catch (const NotAmicableError&) {
  }
  report(ok, "4-chain counterexample: A1 fails at u=1 v=2, (0,2) in T o S only");
}

// 32-element product of two 2-chains and a glued sum of chains of lengths
// 3, 4, 5; the two congruences pairing off the 2-chain factors permute.
void criterion_large_example() {
  const auto start = std::chrono::steady_clock::now();
  const Lattice l = product(product(chain(2), chain(2)), glued_chain_sum({3, 4, 5}));
  bool ok = l.size() == 32;

  std::vector<std::pair<element_id, element_id>> alpha_pairs, beta_pairs;
  for (int x = 0; x < 16; ++x) alpha_pairs.emplace_back(x, x + 16);
  for (int x = 0; x < 32; ++x)
    if ((x / 8) % 2 == 0) beta_pairs.emplace_back(x, x + 8);
  const BinaryRelation alpha = BinaryRelation::from_pairs(32, alpha_pairs);
  const BinaryRelation beta = BinaryRelation::from_pairs(32, beta_pairs);

  ok = ok && is_congruence(l, alpha) && is_congruence(l, beta);
  ok = ok && is_two_uniform(l, alpha) && is_two_uniform(l, beta);
  ok = ok && permutes(alpha, beta) && is_amicable(l, alpha, beta);

  const RelationImage ab = compose(alpha, beta);
  for (int a = 0; a < 32 && ok; ++a)
    for (int b = 0; b < 32 && ok; ++b) {
      if (!ab.get(a, b)) continue;
      const WitnessTrace w = construct_witness(l, alpha, beta, a, b);
      if (!(beta.contains(a, w.d) && alpha.contains(w.d, b))) ok = false;
    }

  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 1.0;
  report(ok, "32-element product example: projection kernels are permuting 2-uniform "
             "congruences (" + fmt_seconds(elapsed) + ")");
}

// Enumerations against the independent oracles: the relation scan for
// 2-uniform tolerances (n <= 5) and the labeled-poset count for lattice
// classes (n = 2..7).
void criterion_enumeration() {
  bool ok = true;
  for (int n = 2; n <= 5; ++n)
    for (const Lattice& l : enumerate_lattices(n)) {
      std::set<std::string> lib, oracle;
      for (const BinaryRelation& t : enumerate_two_uniform(l)) lib.insert(t.key());
      for (const BinaryRelation& t : testing::oracle_two_uniform(l)) oracle.insert(t.key());
      if (lib != oracle) ok = false;
    }
  std::string counts;
  for (int n = 2; n <= 7; ++n) {
    const long lib = static_cast<long>(enumerate_lattices(n).size());
    const long oracle = testing::oracle_lattice_count(n);
    if (lib != oracle) ok = false;
    counts += (counts.empty() ? "" : ",") + std::to_string(lib);
  }
  report(ok, "enumerations match the independent oracles (classes n=2..7: " + counts + ")");
}

// Dual involution, symmetry of amicability and permutability, and stability
// of every checked property under relabeling and dualization.
void criterion_invariance() {
  bool ok = true;
  std::mt19937 rng(20240817);
  for (int n = 2; n <= 6; ++n)
    for (const Lattice& l : enumerate_lattices(n)) {
      if (!(l.dual().dual() == l)) ok = false;
      const Lattice d = l.dual();
      const auto tols = enumerate_two_uniform(l);

      std::vector<int> perm(l.size());
      for (int i = 0; i < l.size(); ++i) perm[i] = i;
      for (int round = 0; round < 2; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const Lattice lp = l.relabeled(perm);
        for (const BinaryRelation& t : tols) {
          const BinaryRelation tp = t.relabeled(perm);
          if (!is_two_uniform(lp, tp)) ok = false;
          for (const BinaryRelation& s : tols) {
            const BinaryRelation sp = s.relabeled(perm);
            if (is_amicable(lp, tp, sp) != is_amicable(l, t, s)) ok = false;
            if (permutes(tp, sp) != permutes(t, s)) ok = false;
          }
        }
      }
      for (const BinaryRelation& t : tols)
        for (const BinaryRelation& s : tols) {
          if (is_amicable(l, t, s) != is_amicable(l, s, t)) ok = false;
          if (permutes(t, s) != permutes(s, t)) ok = false;
          if (is_amicable(d, t, s) != is_amicable(l, t, s)) ok = false;
        }
    }
  report(ok, "duality, symmetry, and relabeling invariance over the n <= 6 catalog");
}

}  // namespace

int main() {
  criterion("theorem equivalence", criterion_theorem);
  criterion("congruence permutability", criterion_congruences_permute);
  criterion("witness construction", criterion_witnesses);
  criterion("lemma suites", criterion_lemmas);
  criterion("counterexample", criterion_counterexample);
  criterion("32-element example", criterion_large_example);
  criterion("enumeration oracles", criterion_enumeration);
  criterion("invariance properties", criterion_invariance);
  if (failures == 0) std::printf("all acceptance criteria passed\n");
  return failures;
}
