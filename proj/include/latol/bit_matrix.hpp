#ifndef LATOL_BIT_MATRIX_HPP
#define LATOL_BIT_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace latol {

/// Dense n x n boolean matrix packed into 64-bit words, row-major.
/// All relation and order machinery sits on top of this; at the sizes this
/// library targets (n <= 64 in practice) a row is one or two words and
/// composition is a bitwise row sweep.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), wpr_((n + 63) / 64), bits_(static_cast<size_t>(n) * wpr_, 0) {}

  int size() const { return n_; }

  bool get(int i, int j) const {
    return (bits_[static_cast<size_t>(i) * wpr_ + j / 64] >> (j % 64)) & 1u;
  }

  void set(int i, int j, bool v = true) {
    uint64_t& w = bits_[static_cast<size_t>(i) * wpr_ + j / 64];
    const uint64_t m = uint64_t{1} << (j % 64);
    if (v) {
      w |= m;
    } else {
      w &= ~m;
    }
  }

  // result row i = OR of rows j of `other` over all j with get(i, j).
  BitMatrix multiply(const BitMatrix& other) const {
    BitMatrix out(n_);
    for (int i = 0; i < n_; ++i) {
      uint64_t* dst = &out.bits_[static_cast<size_t>(i) * wpr_];
      for (int j = 0; j < n_; ++j) {
        if (!get(i, j)) continue;
        const uint64_t* src = &other.bits_[static_cast<size_t>(j) * wpr_];
        for (int w = 0; w < wpr_; ++w) dst[w] |= src[w];
      }
    }
    return out;
  }

  BitMatrix transposed() const {
    BitMatrix out(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (get(i, j)) out.set(j, i);
    return out;
  }

  bool is_subset_of(const BitMatrix& other) const {
    for (size_t w = 0; w < bits_.size(); ++w)
      if (bits_[w] & ~other.bits_[w]) return false;
    return true;
  }

  bool operator==(const BitMatrix& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }
  bool operator!=(const BitMatrix& other) const { return !(*this == other); }

  // Stable byte key, usable as a map key or for canonical sorting.
  std::string key() const {
    std::string k;
    k.reserve(bits_.size() * 8 + 1);
    k.push_back(static_cast<char>(n_));
    for (uint64_t w : bits_)
      for (int b = 0; b < 8; ++b) k.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
    return k;
  }

 private:
  int n_ = 0;
  int wpr_ = 0;  // words per row
  std::vector<uint64_t> bits_;
};

}  // namespace latol

#endif  // LATOL_BIT_MATRIX_HPP
