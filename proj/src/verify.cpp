#include "latol/verify.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

#include "latol/amicability.hpp"
#include "latol/errors.hpp"
#include "latol/relation.hpp"
#include "latol/witness.hpp"

namespace latol {

namespace {

std::string pair_tag(const BinaryRelation& t, const BinaryRelation& s) {
  return "T=" + to_string(t) + " S=" + to_string(s);
}

void check_one_witness(const Lattice& l, const BinaryRelation& t, const BinaryRelation& s,
                       element_id a, element_id b, const WitnessTrace& w,
                       VerificationReport& rep, const std::string& tag) {
  const std::string at = tag + " a=" + std::to_string(a) + " b=" + std::to_string(b);
  if (!(s.contains(a, w.d) && t.contains(w.d, b))) {
    rep.violations.push_back("witness unsound " + at + " d=" + std::to_string(w.d));
    return;
  }
  const std::vector<element_id> all = brute_force_witnesses(l, t, s, a, b);
  if (std::find(all.begin(), all.end(), w.d) == all.end())
    rep.violations.push_back("witness d=" + std::to_string(w.d) +
                             " missing from brute-force list " + at);
}

void run_witnesses(const Lattice& l, const BinaryRelation& t, const BinaryRelation& s,
                   bool check_all_u, VerificationReport& rep, const std::string& tag) {
  const RelationImage img = compose(t, s);
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      if (img.get(a, b)) {
        try {
          check_one_witness(l, t, s, a, b, construct_witness(l, t, s, a, b), rep, tag);
        } catch (const LatolError& e) {
          rep.violations.push_back("witness failed " + tag + " a=" + std::to_string(a) +
                                   " b=" + std::to_string(b) + ": " + e.what());
        }
        if (check_all_u) {
          for (element_id u : middle_elements(t, s, a, b)) {
            try {
              check_one_witness(l, t, s, a, b, construct_witness(l, t, s, a, b, u), rep,
                                tag + " u=" + std::to_string(u));
            } catch (const LatolError& e) {
              rep.violations.push_back("witness failed " + tag + " a=" + std::to_string(a) +
                                       " b=" + std::to_string(b) + " u=" + std::to_string(u) +
                                       ": " + e.what());
            }
          }
        }
      } else {
        try {
          construct_witness(l, t, s, a, b);
          rep.violations.push_back("witness accepted pair outside T o S " + tag +
                                   " a=" + std::to_string(a) + " b=" + std::to_string(b));
        } catch (const NotInProductError&) {
          // expected
        }
      }
    }
}

}  // namespace

VerificationReport verify_theorem_on(const Lattice& l, bool check_all_u) {
  VerificationReport rep;
  rep.lattice_form = l.canonical_hex();
  const std::vector<BinaryRelation> tols = enumerate_two_uniform(l);
  RoleCache cache(l);
  for (const BinaryRelation& t : tols)
    for (const BinaryRelation& s : tols) {
      const bool perm = permutes(t, s);
      const bool am =
          amicability_violations(l, t, s, cache.roles(t), cache.roles(s)).empty();
      ++rep.pairs;
      rep.amicable += am;
      rep.permuting += perm;
      const std::string tag = "lattice=" + rep.lattice_form + " " + pair_tag(t, s);
      if (perm != am)
        rep.violations.push_back("equivalence failed " + tag + " permuting=" +
                                 (perm ? "yes" : "no") + " amicable=" + (am ? "yes" : "no"));
      if (am) run_witnesses(l, t, s, check_all_u, rep, tag);
    }
  return rep;
}

namespace {

// Neighbour uniqueness, coverage, and cover-only relatedness for one
// tolerance, recomputed from the general clique enumeration so the result
// does not lean on classify().
void check_single_tolerance_facts(const Lattice& l, const BinaryRelation& r,
                                  VerificationReport& rep, const std::string& tag) {
  const auto blks = blocks(l, r);
  std::vector<int> lower_count(l.size(), 0), upper_count(l.size(), 0);
  for (const auto& blk : blks) {
    if (blk.size() != 2) {
      rep.lemma_failures.push_back("block size != 2 " + tag);
      continue;
    }
    const element_id x = blk[0], y = blk[1];
    if (l.covers(x, y)) {
      ++lower_count[y];
      ++upper_count[x];
    } else if (l.covers(y, x)) {
      ++lower_count[x];
      ++upper_count[y];
    } else {
      rep.lemma_failures.push_back("related pair not a cover pair " + tag + " x=" +
                                   std::to_string(x) + " y=" + std::to_string(y));
    }
    if (!is_convex_sublattice(l, blk))
      rep.lemma_failures.push_back("block not a convex sublattice " + tag);
  }
  for (int z = 0; z < l.size(); ++z) {
    if (lower_count[z] > 1)
      rep.lemma_failures.push_back("two lower neighbours at " + std::to_string(z) + " " + tag);
    if (upper_count[z] > 1)
      rep.lemma_failures.push_back("two upper neighbours at " + std::to_string(z) + " " + tag);
    if (lower_count[z] + upper_count[z] == 0)
      rep.lemma_failures.push_back("element " + std::to_string(z) + " in no block " + tag);
  }
}

// The meet identity: distinct lower T- and S-neighbours a, b of u force
// meet(a,b) to be the lower S-neighbour of a and the lower T-neighbour of
// b. Plus the dual, with joins and upper neighbours.
void check_neighbour_identities(const Lattice& l, const std::vector<ElementRole>& rt,
                                const std::vector<ElementRole>& rs, VerificationReport& rep,
                                const std::string& tag) {
  for (int u = 0; u < l.size(); ++u) {
    if (rt[u].is_top() && rs[u].is_top() && *rt[u].lower_neighbour != *rs[u].lower_neighbour) {
      const element_id a = *rt[u].lower_neighbour, b = *rs[u].lower_neighbour;
      const element_id m = l.meet(a, b);
      if (!(rs[a].is_top() && *rs[a].lower_neighbour == m && rt[b].is_top() &&
            *rt[b].lower_neighbour == m))
        rep.lemma_failures.push_back("meet identity failed at u=" + std::to_string(u) + " " +
                                     tag);
    }
    if (rt[u].is_bottom() && rs[u].is_bottom() &&
        *rt[u].upper_neighbour != *rs[u].upper_neighbour) {
      const element_id a = *rt[u].upper_neighbour, b = *rs[u].upper_neighbour;
      const element_id j = l.join(a, b);
      if (!(rs[a].is_bottom() && *rs[a].upper_neighbour == j && rt[b].is_bottom() &&
            *rt[b].upper_neighbour == j))
        rep.lemma_failures.push_back("join identity failed at u=" + std::to_string(u) + " " +
                                     tag);
    }
  }
}

// The four propagation laws on a permuting pair: along T u S edges, split
// tops map to split tops and adherent to adherent going up; dually downward
// for bottoms.
void check_propagation(const Lattice& l, const BinaryRelation& t, const BinaryRelation& s,
                       const std::vector<ElementRole>& rt, const std::vector<ElementRole>& rs,
                       VerificationReport& rep, const std::string& tag) {
  const std::vector<TwoFoldRole> roles = two_fold_roles(rt, rs);
  for (int u = 0; u < l.size(); ++u) {
    for (element_id v : l.upper_covers(u)) {
      if (!(t.contains(u, v) || s.contains(u, v))) continue;
      if (roles[u].top != TopKind::none && roles[v].top != roles[u].top)
        rep.lemma_failures.push_back("top propagation failed u=" + std::to_string(u) + " v=" +
                                     std::to_string(v) + " " + tag);
    }
    for (element_id v : l.lower_covers(u)) {
      if (!(t.contains(v, u) || s.contains(v, u))) continue;
      if (roles[u].bottom != BottomKind::none && roles[v].bottom != roles[u].bottom)
        rep.lemma_failures.push_back("bottom propagation failed u=" + std::to_string(u) +
                                     " v=" + std::to_string(v) + " " + tag);
    }
  }
}

}  // namespace

VerificationReport verify_lemmas_on(const Lattice& l) {
  VerificationReport rep;
  rep.lattice_form = l.canonical_hex();
  const std::vector<BinaryRelation> tols = enumerate_two_uniform(l);
  const std::string lat = "lattice=" + rep.lattice_form;

  std::vector<char> congruence(tols.size());
  for (size_t i = 0; i < tols.size(); ++i) {
    congruence[i] = is_congruence(l, tols[i]);
    check_single_tolerance_facts(l, tols[i], rep, lat + " R=" + to_string(tols[i]));
    // Cross-check: the clique path and the fast path must agree on blocks.
    const auto fast = two_uniform_blocks(l, tols[i]);
    auto general = blocks(l, tols[i]);
    std::vector<std::pair<element_id, element_id>> general_pairs;
    for (const auto& blk : general)
      if (blk.size() == 2) general_pairs.emplace_back(blk[0], blk[1]);
    if (fast != general_pairs)
      rep.lemma_failures.push_back("block fast path disagrees with clique enumeration " + lat);
  }

  RoleCache cache(l);
  for (size_t i = 0; i < tols.size(); ++i)
    for (size_t j = 0; j < tols.size(); ++j) {
      const BinaryRelation& t = tols[i];
      const BinaryRelation& s = tols[j];
      const std::string tag = lat + " " + pair_tag(t, s);
      const auto& rt = cache.roles(t);
      const auto& rs = cache.roles(s);
      check_neighbour_identities(l, rt, rs, rep, tag);
      const bool perm = permutes(t, s);
      if (perm) check_propagation(l, t, s, rt, rs, rep, tag);
      if (congruence[i] && congruence[j] && !perm)
        rep.lemma_failures.push_back("congruence pair does not permute " + tag);
    }
  return rep;
}

long CatalogReport::total_violations() const {
  long total = 0;
  for (const CatalogRow& row : rows) total += row.violations;
  return total;
}

std::string CatalogReport::to_text() const {
  std::string out;
  for (const CatalogRow& row : rows) {
    out += "n=" + std::to_string(row.n) + " lattices=" + std::to_string(row.lattices) +
           " pairs=" + std::to_string(row.pairs) + " amicable=" + std::to_string(row.amicable) +
           " permuting=" + std::to_string(row.permuting) +
           " violations=" + std::to_string(row.violations) + "\n";
  }
  for (const std::string& v : violations) out += v + "\n";
  return out;
}

CatalogReport run_catalog(int max_n, bool check_all_u, bool check_lemmas) {
  if (max_n < 2) throw std::invalid_argument("run_catalog: max_n must be >= 2");
  CatalogReport report;
  const size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (int n = 2; n <= max_n; ++n) {
    const std::vector<Lattice> lats = enumerate_lattices(n);
    // Contiguous chunks, one worker each; gathering in chunk order keeps the
    // aggregate independent of scheduling.
    const size_t chunk = (lats.size() + workers - 1) / workers;
    std::vector<std::future<std::vector<VerificationReport>>> futures;
    for (size_t begin = 0; begin < lats.size(); begin += chunk) {
      const size_t end = std::min(lats.size(), begin + chunk);
      futures.push_back(
          std::async(std::launch::async, [&lats, begin, end, check_all_u, check_lemmas] {
            std::vector<VerificationReport> reps;
            reps.reserve(end - begin);
            for (size_t k = begin; k < end; ++k) {
              VerificationReport rep = verify_theorem_on(lats[k], check_all_u);
              if (check_lemmas) {
                VerificationReport lem = verify_lemmas_on(lats[k]);
                rep.lemma_failures.insert(rep.lemma_failures.end(),
                                          lem.lemma_failures.begin(),
                                          lem.lemma_failures.end());
              }
              reps.push_back(std::move(rep));
            }
            return reps;
          }));
    }
    CatalogRow row;
    row.n = n;
    row.lattices = static_cast<long>(lats.size());
    for (auto& f : futures)
      for (const VerificationReport& rep : f.get()) {
        row.pairs += rep.pairs;
        row.amicable += rep.amicable;
        row.permuting += rep.permuting;
        row.violations += static_cast<long>(rep.violations.size() + rep.lemma_failures.size());
        for (const std::string& v : rep.violations)
          report.violations.push_back("n=" + std::to_string(n) + " " + v);
        for (const std::string& v : rep.lemma_failures)
          report.violations.push_back("n=" + std::to_string(n) + " " + v);
      }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace latol
