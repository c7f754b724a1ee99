#pragma once

// Basis blades of the complex geometric algebra G(H), dim H = n.
//
// A blade e_J = e_{j1} e_{j2} ... e_{jk} (j1 < ... < jk) is stored as a bitmask
// with bit (j-1) set for every generator e_j present. Generators square to +1
// and anticommute, so the product of two blades is again a blade up to a sign.

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fermiga/errors.hpp"

namespace fermiga {

using mask_t = std::uint32_t;

inline constexpr int kMaxDimension = 24;

inline void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension)
    throw cap_error("algebra dimension n=" + std::to_string(n) +
                    " outside [1, " + std::to_string(kMaxDimension) + "]");
}

[[nodiscard]] constexpr mask_t full_mask(int n) noexcept {
  return n >= 32 ? ~mask_t{0} : (mask_t{1} << n) - 1;
}

struct SignedBlade;

class Blade {
public:
  Blade(mask_t mask, int n) : mask_(mask), n_(n) {
    check_dimension(n);
    if (mask > full_mask(n))
      throw dimension_error("blade mask " + std::to_string(mask) +
                            " has a generator beyond n=" + std::to_string(n));
  }

  static Blade scalar(int n) { return {0, n}; }
  static Blade pseudoscalar(int n) { return {full_mask(n), n}; }
  // 1-based generator index, matching e_1 ... e_n.
  static Blade generator(int i, int n) {
    if (i < 1 || i > n)
      throw dimension_error("generator e" + std::to_string(i) +
                            " outside [1, " + std::to_string(n) + "]");
    return {mask_t{1} << (i - 1), n};
  }

  [[nodiscard]] mask_t mask() const noexcept { return mask_; }
  [[nodiscard]] int dimension() const noexcept { return n_; }
  [[nodiscard]] int grade() const noexcept { return std::popcount(mask_); }
  [[nodiscard]] bool contains(int i) const noexcept {
    return i >= 1 && i <= n_ && ((mask_ >> (i - 1)) & 1u);
  }

  friend bool operator==(const Blade &, const Blade &) = default;
  friend auto operator<=>(const Blade &, const Blade &) = default;

private:
  friend SignedBlade blade_product(const Blade &, const Blade &);

  struct Trusted {};
  Blade(mask_t mask, int n, Trusted) noexcept : mask_(mask), n_(n) {}
  static Blade unchecked(mask_t mask, int n) noexcept { return {mask, n, Trusted{}}; }

  mask_t mask_;
  int n_;
};

struct SignedBlade {
  int sign; // +1 or -1
  Blade blade;

  friend bool operator==(const SignedBlade &, const SignedBlade &) = default;
};

// Sign of e_A e_B relative to e_{A xor B}: (-1)^t with t the number of pairs
// (i in A, j in B) with i > j. Shared generators contribute e_i e_i = +1.
// Bit j of the prefix mask is the parity of the bits of A strictly above j,
// so t mod 2 is the parity of B & prefix.
[[nodiscard]] constexpr int reorder_sign(mask_t a, mask_t b) noexcept {
  mask_t p = a >> 1;
  p ^= p >> 1;
  p ^= p >> 2;
  p ^= p >> 4;
  p ^= p >> 8;
  p ^= p >> 16;
  mask_t x = b & p;
  x ^= x >> 16;
  x ^= x >> 8;
  x ^= x >> 4;
  x ^= x >> 2;
  x ^= x >> 1;
  return (x & 1u) ? -1 : 1;
}

inline SignedBlade blade_product(const Blade &a, const Blade &b) {
  if (a.dimension() != b.dimension())
    throw dimension_error("blade product across dimensions " +
                          std::to_string(a.dimension()) + " and " +
                          std::to_string(b.dimension()));
  return {reorder_sign(a.mask(), b.mask()), Blade::unchecked(a.mask() ^ b.mask(), a.dimension())};
}

// e_J e_J for any grade-j blade: +1 when j mod 4 is 0 or 1, -1 otherwise.
[[nodiscard]] constexpr int blade_square_sign(int grade) noexcept {
  const int r = grade % 4;
  return (r == 0 || r == 1) ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Canonical ordering: grade ascending, then mask ascending. For n=3 this is
// 1, e1, e2, e3, e1e2, e1e3, e2e3, e1e2e3.
// ---------------------------------------------------------------------------

[[nodiscard]] constexpr std::uint64_t binomial(int n, int k) noexcept {
  if (k < 0 || k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Next larger mask with the same popcount (Gosper).
[[nodiscard]] constexpr mask_t next_same_popcount(mask_t x) noexcept {
  const mask_t c = x & (~x + 1);
  const mask_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

[[nodiscard]] inline std::uint32_t canonical_index(const Blade &b) {
  const int k = b.grade();
  std::uint64_t rank = 0;
  for (int g = 0; g < k; ++g)
    rank += binomial(b.dimension(), g);
  // Colex rank of the k-subset among k-subsets ordered by mask value.
  int t = 1;
  for (mask_t m = b.mask(); m != 0; m &= m - 1, ++t)
    rank += binomial(std::countr_zero(m), t);
  return static_cast<std::uint32_t>(rank);
}

[[nodiscard]] inline Blade blade_at(std::uint64_t rank, int n) {
  check_dimension(n);
  if (rank >= (std::uint64_t{1} << n))
    throw dimension_error("canonical rank " + std::to_string(rank) +
                          " outside [0, 2^" + std::to_string(n) + ")");
  int grade = 0;
  while (rank >= binomial(n, grade)) {
    rank -= binomial(n, grade);
    ++grade;
  }
  mask_t mask = 0;
  for (int t = grade; t >= 1; --t) {
    int c = t - 1;
    while (binomial(c + 1, t) <= rank)
      ++c;
    mask |= mask_t{1} << c;
    rank -= binomial(c, t);
  }
  return {mask, n};
}

// Table form of the canonical order, for dense operator construction.
class BasisOrder {
public:
  explicit BasisOrder(int n) : n_(n) {
    check_dimension(n);
    const std::size_t size = std::size_t{1} << n;
    masks_.reserve(size);
    index_.resize(size);
    for (int k = 0; k <= n; ++k) {
      if (k == 0) {
        masks_.push_back(0);
        continue;
      }
      const mask_t top = full_mask(k) << (n - k);
      for (mask_t m = full_mask(k);; m = next_same_popcount(m)) {
        masks_.push_back(m);
        if (m == top)
          break;
      }
    }
    for (std::size_t r = 0; r < size; ++r)
      index_[masks_[r]] = static_cast<std::uint32_t>(r);
  }

  [[nodiscard]] int dimension() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return masks_.size(); }
  [[nodiscard]] mask_t mask_at(std::size_t rank) const { return masks_[rank]; }
  [[nodiscard]] std::uint32_t index_of(mask_t mask) const { return index_[mask]; }
  [[nodiscard]] const std::vector<mask_t> &masks() const noexcept { return masks_; }

private:
  int n_;
  std::vector<mask_t> masks_;
  std::vector<std::uint32_t> index_;
};

// Complement blade; no sign is attached.
[[nodiscard]] inline Blade antiparticle_dual(const Blade &b) {
  return {full_mask(b.dimension()) ^ b.mask(), b.dimension()};
}

// ---------------------------------------------------------------------------
// Text syntax: "1", "e1e3", "I".
// ---------------------------------------------------------------------------

[[nodiscard]] inline std::string to_string(const Blade &b) {
  if (b.mask() == 0)
    return "1";
  if (b.dimension() >= 2 && b.mask() == full_mask(b.dimension()))
    return "I";
  std::string s;
  for (mask_t m = b.mask(); m != 0; m &= m - 1)
    s += "e" + std::to_string(std::countr_zero(m) + 1);
  return s;
}

[[nodiscard]] inline Blade parse_blade(std::string_view text, int n) {
  check_dimension(n);
  if (text == "1")
    return Blade::scalar(n);
  if (text == "I")
    return Blade::pseudoscalar(n);
  if (text.empty())
    throw parse_error("empty blade");
  mask_t mask = 0;
  int last = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'e')
      throw parse_error("blade '" + std::string(text) + "': expected 'e' at offset " +
                        std::to_string(pos));
    ++pos;
    const std::size_t start = pos;
    int index = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      index = index * 10 + (text[pos] - '0');
      if (index > kMaxDimension)
        break;
      ++pos;
    }
    if (pos == start)
      throw parse_error("blade '" + std::string(text) + "': missing generator index");
    if (index < 1 || index > n)
      throw parse_error("blade '" + std::string(text) + "': generator e" +
                        std::to_string(index) + " out of range for n=" + std::to_string(n));
    if (index == last)
      throw parse_error("blade '" + std::string(text) + "': repeated generator e" +
                        std::to_string(index));
    if (index < last)
      throw parse_error("blade '" + std::string(text) +
                        "': generators must appear in increasing order");
    mask |= mask_t{1} << (index - 1);
    last = index;
  }
  return {mask, n};
}

} // namespace fermiga
