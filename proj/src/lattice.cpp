#include "latol/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

#include "latol/errors.hpp"

namespace latol {

namespace {

std::string hex_of(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

// Packs the cover matrix under the relabeling `p` (slot i holds original
// element p[i]) into bytes, prefixed by n.
std::string encode_covers(const Lattice& l, const std::vector<int>& p) {
  const int n = l.size();
  std::string bytes(1 + (static_cast<size_t>(n) * n + 7) / 8, '\0');
  bytes[0] = static_cast<char>(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j, ++bit) {
      if (l.covers(p[i], p[j])) bytes[1 + bit / 8] |= static_cast<char>(1 << (bit % 8));
    }
  }
  return bytes;
}

// Minimum cover-matrix encoding over relabelings that list elements in
// height order, trying every order within a height class. Any isomorphism
// preserves heights, so the minimum is an isomorphism invariant; and equal
// encodings exhibit an explicit isomorphism, so it is complete.
std::string canonical_impl(const Lattice& l, std::vector<int>* perm_out) {
  const int n = l.size();
  std::vector<std::vector<int>> classes;
  for (int h = 0; h <= l.height(); ++h) {
    std::vector<int> cls;
    for (int x = 0; x < n; ++x)
      if (l.height_of(x) == h) cls.push_back(x);
    if (!cls.empty()) classes.push_back(std::move(cls));
  }

  std::string best;
  std::vector<int> best_p;
  std::vector<int> p(n);
  while (true) {
    int k = 0;
    for (const auto& cls : classes)
      for (int x : cls) p[k++] = x;
    std::string enc = encode_covers(l, p);
    if (best.empty() || enc < best) {
      best = std::move(enc);
      best_p = p;
    }
    // Odometer over per-class permutations.
    size_t c = 0;
    while (c < classes.size() && !std::next_permutation(classes[c].begin(), classes[c].end())) ++c;
    if (c == classes.size()) break;
  }
  if (perm_out) {
    // perm_out maps original element -> canonical slot.
    perm_out->assign(n, 0);
    for (int i = 0; i < n; ++i) (*perm_out)[best_p[i]] = i;
  }
  return best;
}

}  // namespace

Lattice Lattice::from_covers(int n, const std::vector<CoverPair>& covers) {
  if (n < 1) throw std::invalid_argument("lattice needs at least one element");
  std::set<CoverPair> seen;
  for (auto [x, y] : covers) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw std::invalid_argument("cover id out of range: (" + std::to_string(x) + "," +
                                  std::to_string(y) + ")");
    if (x == y) throw std::invalid_argument("self-cover at element " + std::to_string(x));
    if (!seen.insert({x, y}).second)
      throw std::invalid_argument("duplicate cover (" + std::to_string(x) + "," +
                                  std::to_string(y) + ")");
  }

  Lattice l;
  l.n_ = n;
  l.covers_.assign(seen.begin(), seen.end());

  // Reflexive-transitive closure of the cover digraph (Warshall).
  l.leq_ = BitMatrix(n);
  for (int i = 0; i < n; ++i) l.leq_.set(i, i);
  for (auto [x, y] : l.covers_) l.leq_.set(x, y);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (l.leq_.get(i, k))
        for (int j = 0; j < n; ++j)
          if (l.leq_.get(k, j)) l.leq_.set(i, j);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (l.leq_.get(i, j) && l.leq_.get(j, i))
        throw NotAPosetError("cycle through elements " + std::to_string(i) + " and " +
                             std::to_string(j));

  // Every listed cover must be a genuine cover of the closure.
  for (auto [x, y] : l.covers_) {
    for (int z = 0; z < n; ++z) {
      if (z == x || z == y) continue;
      if (l.leq_.get(x, z) && l.leq_.get(z, y))
        throw NotTransitiveReductionError("cover (" + std::to_string(x) + "," +
                                          std::to_string(y) + ") is implied via " +
                                          std::to_string(z));
    }
  }

  l.cover_ = BitMatrix(n);
  l.up_.assign(n, {});
  l.low_.assign(n, {});
  for (auto [x, y] : l.covers_) {
    l.cover_.set(x, y);
    l.up_[x].push_back(y);
    l.low_[y].push_back(x);
  }
  for (auto& v : l.up_) std::sort(v.begin(), v.end());
  for (auto& v : l.low_) std::sort(v.begin(), v.end());

  // Meets and joins for every pair, by exhaustive bound search.
  l.meet_.assign(static_cast<size_t>(n) * n, -1);
  l.join_.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      int glb = -1;
      for (int z = 0; z < n; ++z) {
        if (!(l.leq_.get(z, x) && l.leq_.get(z, y))) continue;
        bool greatest = true;
        for (int w = 0; w < n && greatest; ++w)
          if (l.leq_.get(w, x) && l.leq_.get(w, y) && !l.leq_.get(w, z)) greatest = false;
        if (greatest) {
          glb = z;
          break;
        }
      }
      if (glb < 0)
        throw NotALatticeError("elements " + std::to_string(x) + " and " + std::to_string(y) +
                               " have no meet");
      int lub = -1;
      for (int z = 0; z < n; ++z) {
        if (!(l.leq_.get(x, z) && l.leq_.get(y, z))) continue;
        bool least = true;
        for (int w = 0; w < n && least; ++w)
          if (l.leq_.get(x, w) && l.leq_.get(y, w) && !l.leq_.get(z, w)) least = false;
        if (least) {
          lub = z;
          break;
        }
      }
      if (lub < 0)
        throw NotALatticeError("elements " + std::to_string(x) + " and " + std::to_string(y) +
                               " have no join");
      l.meet_[l.idx(x, y)] = l.meet_[l.idx(y, x)] = glb;
      l.join_[l.idx(x, y)] = l.join_[l.idx(y, x)] = lub;
    }
  }

  l.bottom_ = 0;
  l.top_ = 0;
  for (int x = 1; x < n; ++x) {
    l.bottom_ = l.meet_[l.idx(l.bottom_, x)];
    l.top_ = l.join_[l.idx(l.top_, x)];
  }

  // Longest chain from the bottom, by relaxation over covers.
  l.height_.assign(n, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [x, y] : l.covers_) {
      if (l.height_[y] < l.height_[x] + 1) {
        l.height_[y] = l.height_[x] + 1;
        changed = true;
      }
    }
  }

  return l;
}

Lattice Lattice::dual() const {
  std::vector<CoverPair> rev;
  rev.reserve(covers_.size());
  for (auto [x, y] : covers_) rev.emplace_back(y, x);
  return from_covers(n_, rev);
}

std::string Lattice::canonical_form() const { return canonical_impl(*this, nullptr); }

std::string Lattice::canonical_hex() const { return hex_of(canonical_form()); }

Lattice Lattice::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<CoverPair> mapped;
  mapped.reserve(covers_.size());
  for (auto [x, y] : covers_) mapped.emplace_back(perm[x], perm[y]);
  return from_covers(n_, mapped);
}

Lattice chain(int k) {
  if (k < 1) throw std::invalid_argument("chain length must be >= 1");
  std::vector<CoverPair> covers;
  for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
  return Lattice::from_covers(k, covers);
}

Lattice product(const Lattice& l1, const Lattice& l2) {
  const int n1 = l1.size(), n2 = l2.size();
  std::vector<CoverPair> covers;
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b) {
      for (int c : l1.upper_covers(a)) covers.emplace_back(a * n2 + b, c * n2 + b);
      for (int d : l2.upper_covers(b)) covers.emplace_back(a * n2 + b, a * n2 + d);
    }
  return Lattice::from_covers(n1 * n2, covers);
}

Lattice glued_chain_sum(const std::vector<int>& lengths) {
  if (lengths.empty()) throw std::invalid_argument("glued_chain_sum needs at least one chain");
  for (int len : lengths)
    if (len < 3)
      throw std::invalid_argument("glued_chain_sum requires chain lengths >= 3, got " +
                                  std::to_string(len));
  int n = 2;
  for (int len : lengths) n += len - 2;
  const int bottom = 0, top = n - 1;
  std::vector<CoverPair> covers;
  int next = 1;
  for (int len : lengths) {
    int prev = bottom;
    for (int i = 0; i < len - 2; ++i) {
      covers.emplace_back(prev, next);
      prev = next++;
    }
    covers.emplace_back(prev, top);
  }
  return Lattice::from_covers(n, covers);
}

namespace {

bool extend_isomorphism(const Lattice& l1, const Lattice& l2, std::vector<int>& map,
                        std::vector<bool>& used, int k) {
  const int n = l1.size();
  if (k == n) return true;
  for (int y = 0; y < n; ++y) {
    if (used[y]) continue;
    if (l1.upper_covers(k).size() != l2.upper_covers(y).size()) continue;
    if (l1.lower_covers(k).size() != l2.lower_covers(y).size()) continue;
    bool ok = true;
    for (int x = 0; x < k && ok; ++x) {
      if (l1.covers(x, k) != l2.covers(map[x], y)) ok = false;
      if (l1.covers(k, x) != l2.covers(y, map[x])) ok = false;
    }
    if (!ok) continue;
    map[k] = y;
    used[y] = true;
    if (extend_isomorphism(l1, l2, map, used, k + 1)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Lattice& l1, const Lattice& l2) {
  if (l1.size() != l2.size()) return false;
  if (l1.cover_pairs().size() != l2.cover_pairs().size()) return false;
  std::vector<int> map(l1.size(), -1);
  std::vector<bool> used(l1.size(), false);
  return extend_isomorphism(l1, l2, map, used, 0);
}

namespace {

// Generation state for enumerate_lattices: a join-semilattice built top-down.
// up[i] is the bitmask of elements >= i (element 0 is the top). Every new
// element picks a nonempty antichain of existing elements as its exact set
// of upper covers; joins are checked incrementally so dead branches die
// early. Appending a fresh bottom to any such semilattice yields a lattice,
// and stripping the bottom of any finite lattice yields such a semilattice,
// so the sweep is exhaustive.
struct SemilatticeGen {
  int m;  // target semilattice size (n - 1)
  std::vector<uint32_t> up;
  std::vector<CoverPair> covers;  // (lower, upper) pairs within the semilattice
  std::set<std::string> seen;
  std::vector<Lattice> out;

  explicit SemilatticeGen(int m_) : m(m_) { up.push_back(1u); }

  bool joins_ok(int i) const {
    // Elements are created top-down, so i is never above an earlier element
    // and the common upper bounds of {i, j} all have index < i.
    for (int j = 0; j < i; ++j) {
      const uint32_t common = up[i] & up[j];
      int minimals = 0;
      for (int z = 0; z < i && minimals < 2; ++z) {
        if (!(common >> z & 1)) continue;
        bool minimal = true;
        for (int w = 0; w < i && minimal; ++w)
          if (w != z && (common >> w & 1) && (up[w] >> z & 1)) minimal = false;
        if (minimal) ++minimals;
      }
      if (minimals != 1) return false;
    }
    return true;
  }

  void finalize() {
    const int n = m + 1;
    uint32_t has_lower = 0;
    for (auto [x, y] : covers) has_lower |= 1u << y;
    std::vector<CoverPair> all = covers;
    for (int s = 0; s < m; ++s)
      if (!(has_lower >> s & 1)) all.emplace_back(m, s);  // bottom under each minimal
    Lattice l = Lattice::from_covers(n, all);
    std::vector<int> perm;
    std::string key = canonical_impl(l, &perm);
    if (seen.insert(std::move(key)).second) out.push_back(l.relabeled(perm));
  }

  void grow(int i) {
    if (i == m) {
      finalize();
      return;
    }
    const uint32_t all = (1u << i) - 1;
    for (uint32_t u = 1; u <= all; ++u) {
      bool antichain = true;
      for (int a = 0; a < i && antichain; ++a) {
        if (!(u >> a & 1)) continue;
        for (int b = a + 1; b < i && antichain; ++b)
          if ((u >> b & 1) && ((up[a] >> b & 1) || (up[b] >> a & 1))) antichain = false;
      }
      if (!antichain) continue;
      uint32_t upset = 1u << i;
      for (int a = 0; a < i; ++a)
        if (u >> a & 1) upset |= up[a];
      up.push_back(upset);
      if (joins_ok(i)) {
        size_t mark = covers.size();
        for (int a = 0; a < i; ++a)
          if (u >> a & 1) covers.emplace_back(i, a);
        grow(i + 1);
        covers.resize(mark);
      }
      up.pop_back();
    }
  }
};

}  // namespace

std::vector<Lattice> enumerate_lattices(int n, int ceiling) {
  if (n < 1 || n > ceiling)
    throw std::invalid_argument("enumerate_lattices: n must be in [1, " +
                                std::to_string(ceiling) + "]");
  if (n == 1) return {chain(1)};
  SemilatticeGen gen(n - 1);
  gen.grow(1);
  std::vector<Lattice>& result = gen.out;
  std::sort(result.begin(), result.end(), [](const Lattice& a, const Lattice& b) {
    return a.canonical_form() < b.canonical_form();
  });
  return result;
}

}  // namespace latol
