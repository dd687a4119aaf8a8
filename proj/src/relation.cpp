#include "latol/relation.hpp"

#include <algorithm>
#include <stdexcept>

#include "latol/errors.hpp"

namespace latol {

BinaryRelation::BinaryRelation(int n) {
  if (n < 1) throw std::invalid_argument("relation needs at least one element");
  m_ = BitMatrix(n);
  for (int i = 0; i < n; ++i) m_.set(i, i);
}

BinaryRelation BinaryRelation::from_pairs(
    int n, const std::vector<std::pair<element_id, element_id>>& pairs) {
  BinaryRelation r(n);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw std::invalid_argument("relation pair out of range: (" + std::to_string(x) + "," +
                                  std::to_string(y) + ")");
    r.m_.set(x, y);
    r.m_.set(y, x);
  }
  return r;
}

std::vector<std::pair<element_id, element_id>> BinaryRelation::pairs() const {
  std::vector<std::pair<element_id, element_id>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (m_.get(i, j)) out.emplace_back(i, j);
  return out;
}

BinaryRelation BinaryRelation::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != size())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<std::pair<element_id, element_id>> mapped;
  for (auto [x, y] : pairs()) mapped.emplace_back(perm[x], perm[y]);
  return from_pairs(size(), mapped);
}

namespace {

void require_same_size(int a, int b) {
  if (a != b)
    throw std::invalid_argument("size mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
}

// All related ordered pairs, diagonal included.
std::vector<std::pair<element_id, element_id>> related_pairs(const BinaryRelation& rel) {
  std::vector<std::pair<element_id, element_id>> out;
  for (int i = 0; i < rel.size(); ++i)
    for (int j = 0; j < rel.size(); ++j)
      if (rel.contains(i, j)) out.emplace_back(i, j);
  return out;
}

}  // namespace

bool is_tolerance(const Lattice& l, const BinaryRelation& rel) {
  require_same_size(l.size(), rel.size());
  for (int i = 0; i < rel.size(); ++i) {
    if (!rel.contains(i, i)) return false;
    for (int j = 0; j < rel.size(); ++j)
      if (rel.contains(i, j) != rel.contains(j, i)) return false;
  }
  const auto rp = related_pairs(rel);
  for (auto [a, b] : rp)
    for (auto [c, d] : rp) {
      if (!rel.contains(l.meet(a, c), l.meet(b, d))) return false;
      if (!rel.contains(l.join(a, c), l.join(b, d))) return false;
    }
  return true;
}

bool is_congruence(const Lattice& l, const BinaryRelation& rel) {
  if (!is_tolerance(l, rel)) return false;
  const BitMatrix& m = rel.matrix();
  return m.multiply(m).is_subset_of(m);
}

namespace {

// Bron-Kerbosch with pivoting over the off-diagonal graph of the relation.
// Isolated vertices come out as singleton cliques via the top-level loop.
void bron_kerbosch(const BinaryRelation& rel, std::vector<element_id>& r,
                   std::vector<element_id> p, std::vector<element_id> x,
                   std::vector<std::vector<element_id>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  auto degree_in_p = [&](element_id v) {
    int d = 0;
    for (element_id w : p)
      if (w != v && rel.contains(v, w)) ++d;
    return d;
  };
  element_id pivot = -1;
  int best = -1;
  for (element_id v : p)
    if (int d = degree_in_p(v); d > best) best = d, pivot = v;
  for (element_id v : x)
    if (int d = degree_in_p(v); d > best) best = d, pivot = v;

  const std::vector<element_id> candidates = p;
  for (element_id v : candidates) {
    if (v != pivot && rel.contains(pivot, v)) continue;
    std::vector<element_id> np, nx;
    for (element_id w : p)
      if (w != v && rel.contains(v, w)) np.push_back(w);
    for (element_id w : x)
      if (w != v && rel.contains(v, w)) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(rel, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<element_id>> blocks(const Lattice& l, const BinaryRelation& t) {
  if (!is_tolerance(l, t)) throw NotAToleranceError("blocks: relation is not a tolerance");
  std::vector<element_id> all(t.size());
  for (int i = 0; i < t.size(); ++i) all[i] = i;
  std::vector<std::vector<element_id>> out;
  std::vector<element_id> r;
  bron_kerbosch(t, r, all, {}, out);
  for (auto& blk : out) std::sort(blk.begin(), blk.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_two_uniform(const Lattice& l, const BinaryRelation& t) {
  if (!is_tolerance(l, t)) throw NotAToleranceError("is_two_uniform: relation is not a tolerance");
  const int n = t.size();
  for (int x = 0; x < n; ++x) {
    bool related = false;
    for (int y = 0; y < n && !related; ++y) related = (y != x && t.contains(x, y));
    if (!related) return false;  // {x} would be a singleton block
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!t.contains(x, y)) continue;
      for (int z = y + 1; z < n; ++z)
        if (t.contains(x, z) && t.contains(y, z)) return false;  // 3-element block
    }
  return true;
}

std::vector<std::pair<element_id, element_id>> two_uniform_blocks(const Lattice& l,
                                                                  const BinaryRelation& t) {
  if (!is_two_uniform(l, t))
    throw NotTwoUniformError("two_uniform_blocks: tolerance has a block of size != 2");
  return t.pairs();  // triangle-free: every edge is a maximal clique
}

RelationImage compose(const BinaryRelation& t, const BinaryRelation& s) {
  require_same_size(t.size(), s.size());
  return t.matrix().multiply(s.matrix());
}

bool permutes(const BinaryRelation& t, const BinaryRelation& s) {
  return compose(t, s) == compose(s, t);
}

namespace {

// DFS over the sorted cover-edge list. `down`/`up` track how many edges
// already touch an element from below/above; 2-uniformity forbids a second
// one on either side, so such branches are cut before recursing.
struct TwoUniformSearch {
  const Lattice& l;
  const std::vector<CoverPair>& edges;
  std::vector<int> down, up;
  std::vector<std::pair<element_id, element_id>> chosen;
  std::vector<BinaryRelation> found;

  explicit TwoUniformSearch(const Lattice& l_)
      : l(l_), edges(l_.cover_pairs()), down(l_.size(), 0), up(l_.size(), 0) {}

  void run(size_t e) {
    if (e == edges.size()) {
      for (int x = 0; x < l.size(); ++x)
        if (down[x] + up[x] == 0) return;  // singleton block
      BinaryRelation cand = BinaryRelation::from_pairs(l.size(), chosen);
      if (is_tolerance(l, cand) && is_two_uniform(l, cand)) found.push_back(cand);
      return;
    }
    auto [lo, hi] = edges[e];
    run(e + 1);
    if (up[lo] == 0 && down[hi] == 0) {
      ++up[lo];
      ++down[hi];
      chosen.emplace_back(lo, hi);
      run(e + 1);
      chosen.pop_back();
      --up[lo];
      --down[hi];
    }
  }
};

}  // namespace

std::vector<BinaryRelation> enumerate_two_uniform(const Lattice& l) {
  TwoUniformSearch search(l);
  search.run(0);
  std::vector<BinaryRelation>& found = search.found;
  std::sort(found.begin(), found.end(),
            [](const BinaryRelation& a, const BinaryRelation& b) { return a.key() < b.key(); });
  return found;
}

bool is_convex_sublattice(const Lattice& l, const std::vector<element_id>& elements) {
  if (elements.empty()) return false;
  std::vector<bool> in(l.size(), false);
  for (element_id x : elements) {
    if (x < 0 || x >= l.size()) return false;
    in[x] = true;
  }
  for (element_id x : elements)
    for (element_id y : elements) {
      if (!in[l.meet(x, y)] || !in[l.join(x, y)]) return false;
      for (int z = 0; z < l.size(); ++z)
        if (l.leq(x, z) && l.leq(z, y) && !in[z]) return false;
    }
  return true;
}

std::string to_string(const BinaryRelation& rel) {
  std::string out;
  for (auto [x, y] : rel.pairs())
    out += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  if (out.empty()) out = "(diagonal)";
  return out;
}

}  // namespace latol
