#include <algorithm>
#include <vector>

#include "doctest.h"
#include "latol/amicability.hpp"
#include "latol/errors.hpp"
#include "latol/lattice.hpp"
#include "latol/relation.hpp"
#include "oracles.hpp"

using namespace latol;

namespace {

const std::vector<Lattice>& catalog_upto5() {
  static const std::vector<Lattice> all = [] {
    std::vector<Lattice> out;
    for (int n = 2; n <= 5; ++n)
      for (Lattice& l : enumerate_lattices(n)) out.push_back(std::move(l));
    return out;
  }();
  return all;
}

BinaryRelation c3_covers() { return BinaryRelation::from_pairs(3, {{0, 1}, {1, 2}}); }
BinaryRelation c4_alpha() { return BinaryRelation::from_pairs(4, {{0, 1}, {2, 3}}); }
BinaryRelation c4_all() { return BinaryRelation::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("classify: interior chain element is both a top and a bottom") {
  const auto roles = classify(chain(3), c3_covers());
  REQUIRE(roles.size() == 3);
  CHECK(roles[0].element == 0);
  CHECK(!roles[0].is_top());
  CHECK(roles[0].upper_neighbour == 1);
  CHECK(roles[1].lower_neighbour == 0);
  CHECK(roles[1].upper_neighbour == 2);
  CHECK(roles[2].lower_neighbour == 1);
  CHECK(!roles[2].is_bottom());
}

TEST_CASE("classify: gap tolerance on the 4-chain") {
  const auto roles = classify(chain(4), c4_alpha());
  CHECK(roles[1].lower_neighbour == 0);
  CHECK(!roles[1].is_bottom());
  CHECK(roles[2].upper_neighbour == 3);
  CHECK(!roles[2].is_top());
}

TEST_CASE("classify: kernel block on the square") {
  const Lattice sq = product(chain(2), chain(2));
  const auto roles = classify(sq, BinaryRelation::from_pairs(4, {{0, 1}, {2, 3}}));
  CHECK(!roles[2].is_top());
  CHECK(roles[2].upper_neighbour == 3);
  CHECK(roles[3].lower_neighbour == 2);
}

TEST_CASE("classify rejects relations that are not 2-uniform tolerances") {
  CHECK_THROWS_AS(classify(chain(3), BinaryRelation(3)), NotTwoUniformError);
  CHECK_THROWS_AS(classify(product(chain(2), chain(2)), BinaryRelation::from_pairs(4, {{1, 2}})),
                  NotAToleranceError);
}

TEST_CASE("classify matches an independent recomputation from blocks()") {
  for (const Lattice& l : catalog_upto5())
    for (const BinaryRelation& t : testing::oracle_two_uniform(l)) {
      const auto roles = classify(l, t);
      std::vector<std::optional<element_id>> lower(l.size()), upper(l.size());
      for (const auto& blk : blocks(l, t)) {
        REQUIRE(blk.size() == 2);
        const element_id lo = l.leq(blk[0], blk[1]) ? blk[0] : blk[1];
        const element_id hi = lo == blk[0] ? blk[1] : blk[0];
        CHECK(l.covers(lo, hi));
        lower[hi] = lo;
        upper[lo] = hi;
      }
      for (int x = 0; x < l.size(); ++x) {
        CHECK(roles[x].element == x);
        CHECK(roles[x].lower_neighbour == lower[x]);
        CHECK(roles[x].upper_neighbour == upper[x]);
        CHECK((roles[x].is_top() || roles[x].is_bottom()));
      }
    }
}

TEST_CASE("two_fold_roles: equal tolerances give adherent roles everywhere") {
  const auto roles = two_fold_roles(chain(3), c3_covers(), c3_covers());
  CHECK(roles[0].top == TopKind::none);
  CHECK(roles[0].bottom == BottomKind::adherent);
  CHECK(roles[1].top == TopKind::adherent);
  CHECK(roles[1].bottom == BottomKind::adherent);
  CHECK(roles[2].top == TopKind::adherent);
  CHECK(roles[2].bottom == BottomKind::none);
}

TEST_CASE("two_fold_roles: the square kernels split at top and bottom") {
  const Lattice sq = product(chain(2), chain(2));
  const BinaryRelation a = BinaryRelation::from_pairs(4, {{0, 1}, {2, 3}});
  const BinaryRelation b = BinaryRelation::from_pairs(4, {{0, 2}, {1, 3}});
  const auto roles = two_fold_roles(sq, a, b);
  CHECK(roles[0].bottom == BottomKind::split);
  CHECK(roles[0].top == TopKind::none);
  CHECK(roles[3].top == TopKind::split);
  CHECK(roles[3].bottom == BottomKind::none);
  for (element_id mid : {1, 2}) {
    CHECK(roles[mid].top == TopKind::none);
    CHECK(roles[mid].bottom == BottomKind::none);
  }
}

TEST_CASE("two_fold_roles: the 4-chain pair") {
  const auto roles = two_fold_roles(chain(4), c4_alpha(), c4_all());
  CHECK(roles[1].top == TopKind::adherent);
  CHECK(roles[1].bottom == BottomKind::none);
  CHECK(roles[2].top == TopKind::none);
  CHECK(roles[2].bottom == BottomKind::adherent);
}

TEST_CASE("amicability: square kernels pass, the 4-chain pair fails exactly twice") {
  const Lattice sq = product(chain(2), chain(2));
  CHECK(is_amicable(sq, BinaryRelation::from_pairs(4, {{0, 1}, {2, 3}}),
                    BinaryRelation::from_pairs(4, {{0, 2}, {1, 3}})));

  const auto viols = amicability_violations(chain(4), c4_alpha(), c4_all());
  REQUIRE(viols.size() == 2);
  CHECK(to_line(viols[0]) == "A1-violation u=1 v=2 via=S");
  CHECK(to_line(viols[1]) == "A2-violation u=2 v=1 via=S");
  CHECK(!is_amicable(chain(4), c4_alpha(), c4_all()));
}

TEST_CASE("any 2-uniform tolerance is amicable with itself") {
  for (const Lattice& l : catalog_upto5())
    for (const BinaryRelation& t : enumerate_two_uniform(l)) CHECK(is_amicable(l, t, t));
}

TEST_CASE("amicability is symmetric in the two tolerances") {
  for (const Lattice& l : catalog_upto5()) {
    const auto tols = enumerate_two_uniform(l);
    for (const BinaryRelation& t : tols)
      for (const BinaryRelation& s : tols) CHECK(is_amicable(l, t, s) == is_amicable(l, s, t));
  }
}

TEST_CASE("dualizing the lattice swaps A1 and A2 but preserves amicability") {
  for (const Lattice& l : catalog_upto5()) {
    const Lattice d = l.dual();
    const auto tols = enumerate_two_uniform(l);
    for (const BinaryRelation& t : tols)
      for (const BinaryRelation& s : tols) {
        const auto on_l = amicability_violations(l, t, s);
        const auto on_d = amicability_violations(d, t, s);
        CHECK(on_l.size() == on_d.size());
        CHECK(is_amicable(l, t, s) == is_amicable(d, t, s));
        // Each violation reappears with the condition flipped.
        auto count = [](const std::vector<AmicabilityViolation>& vs, Condition c) {
          return std::count_if(vs.begin(), vs.end(),
                               [c](const AmicabilityViolation& v) { return v.condition == c; });
        };
        CHECK(count(on_l, Condition::A1) == count(on_d, Condition::A2));
        CHECK(count(on_l, Condition::A2) == count(on_d, Condition::A1));
      }
  }
}

TEST_CASE("RoleCache returns the same roles as classify") {
  const Lattice c4 = chain(4);
  RoleCache cache(c4);
  const auto& cached = cache.roles(c4_alpha());
  const auto direct = classify(c4, c4_alpha());
  REQUIRE(cached.size() == direct.size());
  for (size_t i = 0; i < cached.size(); ++i) {
    CHECK(cached[i].element == direct[i].element);
    CHECK(cached[i].lower_neighbour == direct[i].lower_neighbour);
    CHECK(cached[i].upper_neighbour == direct[i].upper_neighbour);
  }
  // Repeated lookup serves the memoized entry.
  CHECK(&cache.roles(c4_alpha()) == &cached);
}
