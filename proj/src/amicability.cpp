#include "latol/amicability.hpp"

#include <algorithm>
#include <tuple>

#include "latol/errors.hpp"

namespace latol {

std::vector<ElementRole> classify(const Lattice& l, const BinaryRelation& r) {
  std::vector<ElementRole> roles(l.size());
  for (int x = 0; x < l.size(); ++x) roles[x].element = x;
  for (auto [x, y] : two_uniform_blocks(l, r)) {
    element_id lo, hi;
    if (l.covers(x, y)) {
      lo = x, hi = y;
    } else if (l.covers(y, x)) {
      lo = y, hi = x;
    } else {
      throw LatolError("block {" + std::to_string(x) + "," + std::to_string(y) +
                       "} is not a cover pair");
    }
    if (roles[hi].lower_neighbour)
      throw LatolError("element " + std::to_string(hi) + " has two lower neighbours");
    if (roles[lo].upper_neighbour)
      throw LatolError("element " + std::to_string(lo) + " has two upper neighbours");
    roles[hi].lower_neighbour = lo;
    roles[lo].upper_neighbour = hi;
  }
  for (const ElementRole& role : roles)
    if (!role.is_top() && !role.is_bottom())
      throw LatolError("element " + std::to_string(role.element) + " is in no block");
  return roles;
}

std::vector<TwoFoldRole> two_fold_roles(const std::vector<ElementRole>& rt,
                                        const std::vector<ElementRole>& rs) {
  std::vector<TwoFoldRole> out(rt.size());
  for (size_t x = 0; x < rt.size(); ++x) {
    out[x].element = static_cast<element_id>(x);
    if (rt[x].is_top() && rs[x].is_top())
      out[x].top = (*rt[x].lower_neighbour == *rs[x].lower_neighbour) ? TopKind::adherent
                                                                      : TopKind::split;
    if (rt[x].is_bottom() && rs[x].is_bottom())
      out[x].bottom = (*rt[x].upper_neighbour == *rs[x].upper_neighbour) ? BottomKind::adherent
                                                                         : BottomKind::split;
  }
  return out;
}

std::vector<TwoFoldRole> two_fold_roles(const Lattice& l, const BinaryRelation& t,
                                        const BinaryRelation& s) {
  return two_fold_roles(classify(l, t), classify(l, s));
}

std::string to_line(const AmicabilityViolation& violation) {
  return std::string(violation.condition == Condition::A1 ? "A1" : "A2") + "-violation u=" +
         std::to_string(violation.u) + " v=" + std::to_string(violation.v) + " via=" +
         violation.via;
}

std::vector<AmicabilityViolation> amicability_violations(const Lattice& l,
                                                         const BinaryRelation& t,
                                                         const BinaryRelation& s,
                                                         const std::vector<ElementRole>& rt,
                                                         const std::vector<ElementRole>& rs) {
  const std::vector<TwoFoldRole> roles = two_fold_roles(rt, rs);
  std::vector<AmicabilityViolation> out;
  for (int u = 0; u < l.size(); ++u) {
    if (roles[u].two_fold_top()) {
      for (element_id v : l.upper_covers(u)) {
        if (!(t.contains(u, v) || s.contains(u, v))) continue;
        if (!roles[v].two_fold_top())
          out.push_back({Condition::A1, u, v, t.contains(u, v) ? 'T' : 'S'});
      }
    }
    if (roles[u].two_fold_bottom()) {
      for (element_id v : l.lower_covers(u)) {
        if (!(t.contains(v, u) || s.contains(v, u))) continue;
        if (!roles[v].two_fold_bottom())
          out.push_back({Condition::A2, u, v, t.contains(v, u) ? 'T' : 'S'});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const AmicabilityViolation& a, const AmicabilityViolation& b) {
    return std::tie(a.condition, a.u, a.v) < std::tie(b.condition, b.u, b.v);
  });
  return out;
}

std::vector<AmicabilityViolation> amicability_violations(const Lattice& l,
                                                         const BinaryRelation& t,
                                                         const BinaryRelation& s) {
  return amicability_violations(l, t, s, classify(l, t), classify(l, s));
}

bool is_amicable(const Lattice& l, const BinaryRelation& t, const BinaryRelation& s) {
  return amicability_violations(l, t, s).empty();
}

const std::vector<ElementRole>& RoleCache::roles(const BinaryRelation& r) {
  auto [it, inserted] = cache_.try_emplace(r.key());
  if (inserted) it->second = classify(l_, r);
  return it->second;
}

}  // namespace latol
