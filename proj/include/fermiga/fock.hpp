#pragma once

// Truncated boson Fock space H = C + K + K^2 + ... + K^r over an m-dimensional
// boson space K, and the boson-fermion field G(H) whose k = dim H generators
// are labelled by boson words.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermiga/blade.hpp"
#include "fermiga/errors.hpp"

namespace fermiga {

// Largest Fock dimension we enumerate words for.
inline constexpr std::uint64_t kMaxFockWords = std::uint64_t{1} << 24;

// k = 1 + m + ... + m^r = (m^{r+1} - 1)/(m - 1); k = r + 1 when m = 1.
[[nodiscard]] inline std::uint64_t fock_dim(int m, int r) {
  if (m < 1)
    throw dimension_error("boson space dimension m must be >= 1");
  if (r < 0)
    throw dimension_error("boson truncation r must be >= 0");
  if (m == 1)
    return static_cast<std::uint64_t>(r) + 1;
  std::uint64_t k = 0;
  std::uint64_t power = 1;
  for (int i = 0; i <= r; ++i) {
    k += power;
    if (i < r) {
      if (power > UINT64_MAX / static_cast<std::uint64_t>(m))
        throw cap_error("Fock dimension overflows 64 bits");
      power *= static_cast<std::uint64_t>(m);
    }
  }
  return k;
}

// b_{s1} (x) b_{s2} (x) ... ; the empty word is the boson vacuum v.
class BosonWord {
public:
  BosonWord() = default;
  explicit BosonWord(std::vector<int> symbols) : symbols_(std::move(symbols)) {}

  [[nodiscard]] const std::vector<int> &symbols() const noexcept { return symbols_; }
  [[nodiscard]] std::size_t length() const noexcept { return symbols_.size(); }
  [[nodiscard]] bool is_vacuum() const noexcept { return symbols_.empty(); }

  // "v", "b1", "b1(x)b2".
  [[nodiscard]] std::string ascii() const {
    if (symbols_.empty())
      return "v";
    std::string s;
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      s += (i ? "(x)b" : "b") + std::to_string(symbols_[i]);
    return s;
  }

  // "v", "b₁", "b₁⊗b₂".
  [[nodiscard]] std::string unicode() const {
    if (symbols_.empty())
      return "v";
    std::string s;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (i)
        s += "⊗";
      s += "b" + subscript(symbols_[i]);
    }
    return s;
  }

  static std::string subscript(int value) {
    static const char *const digits[] = {"₀", "₁", "₂", "₃", "₄",
                                         "₅", "₆", "₇", "₈", "₉"};
    std::string s;
    for (const char c : std::to_string(value))
      s += digits[c - '0'];
    return s;
  }

  friend bool operator==(const BosonWord &, const BosonWord &) = default;

private:
  std::vector<int> symbols_;
};

// Length-lex: v, then length-1 words b1 < b2 < ..., then length-2 words in
// lexicographic order, and so on up to length r.
[[nodiscard]] inline std::vector<BosonWord> enumerate_boson_basis(int m, int r) {
  const std::uint64_t k = fock_dim(m, r);
  if (k > kMaxFockWords)
    throw cap_error("Fock dimension " + std::to_string(k) + " too large to enumerate");
  std::vector<BosonWord> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int len = 0; len <= r; ++len) {
    std::vector<int> word(static_cast<std::size_t>(len), 1);
    while (true) {
      out.emplace_back(word);
      int pos = len - 1;
      while (pos >= 0 && word[static_cast<std::size_t>(pos)] == m)
        word[static_cast<std::size_t>(pos--)] = 1;
      if (pos < 0)
        break;
      ++word[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

// G(H) over the Fock space: an n = k geometric algebra plus a label table.
// All algebra is delegated to the blade/operator modules with n = k.
class BosonFermionField {
public:
  BosonFermionField(int m, int r) : m_(m), r_(r), words_(enumerate_boson_basis(m, r)) {
    if (words_.size() > static_cast<std::size_t>(kMaxDimension))
      throw cap_error("boson-fermion field needs n=" + std::to_string(words_.size()) +
                      " generators, above the blade cap " + std::to_string(kMaxDimension));
  }

  [[nodiscard]] int boson_dimension() const noexcept { return m_; }
  [[nodiscard]] int truncation() const noexcept { return r_; }
  // k fermionic generators.
  [[nodiscard]] int dimension() const noexcept { return static_cast<int>(words_.size()); }
  [[nodiscard]] std::uint64_t basis_size() const noexcept {
    return std::uint64_t{1} << words_.size();
  }
  [[nodiscard]] const std::vector<BosonWord> &words() const noexcept { return words_; }
  // Generator e_i (1-based) carries the i-th boson word.
  [[nodiscard]] const BosonWord &generator_word(int i) const {
    return words_.at(static_cast<std::size_t>(i - 1));
  }

  // Bar notation: "1̄", "v̄b̄₁", "b̄₁(b̄₁⊗b̄₂)", "Ī".
  [[nodiscard]] std::string label(const Blade &b) const {
    check(b);
    static const std::string bar = "̄";
    if (b.mask() == 0)
      return "1" + bar;
    if (b.mask() == full_mask(dimension()) && dimension() >= 2)
      return "I" + bar;
    std::string s;
    for (mask_t m = b.mask(); m != 0; m &= m - 1) {
      const BosonWord &w = words_[static_cast<std::size_t>(std::countr_zero(m))];
      if (w.is_vacuum()) {
        s += "v" + bar;
      } else if (w.length() == 1) {
        s += "b" + bar + BosonWord::subscript(w.symbols()[0]);
      } else {
        s += "(";
        for (std::size_t i = 0; i < w.length(); ++i) {
          if (i)
            s += "⊗";
          s += "b" + bar + BosonWord::subscript(w.symbols()[i]);
        }
        s += ")";
      }
    }
    return s;
  }

  // ASCII form: "1", "v.b1", "b1.(b1(x)b2)", "I".
  [[nodiscard]] std::string ascii_label(const Blade &b) const {
    check(b);
    if (b.mask() == 0)
      return "1";
    if (b.mask() == full_mask(dimension()) && dimension() >= 2)
      return "I";
    std::string s;
    for (mask_t m = b.mask(); m != 0; m &= m - 1) {
      const BosonWord &w = words_[static_cast<std::size_t>(std::countr_zero(m))];
      if (!s.empty())
        s += ".";
      s += w.length() > 1 ? "(" + w.ascii() + ")" : w.ascii();
    }
    return s;
  }

  // Basis blades in canonical order, optionally restricted to one grade.
  [[nodiscard]] std::vector<Blade> basis(std::optional<int> grade = std::nullopt) const {
    const int n = dimension();
    std::vector<Blade> out;
    if (grade) {
      if (*grade < 0 || *grade > n)
        return out;
      out.reserve(static_cast<std::size_t>(binomial(n, *grade)));
      if (*grade == 0) {
        out.push_back(Blade::scalar(n));
        return out;
      }
      const mask_t top = full_mask(*grade) << (n - *grade);
      for (mask_t m = full_mask(*grade);; m = next_same_popcount(m)) {
        out.emplace_back(m, n);
        if (m == top)
          break;
      }
      return out;
    }
    const BasisOrder order(n);
    out.reserve(order.size());
    for (const mask_t m : order.masks())
      out.emplace_back(m, n);
    return out;
  }

private:
  void check(const Blade &b) const {
    if (b.dimension() != dimension())
      throw dimension_error("blade over n=" + std::to_string(b.dimension()) +
                            " labelled by a field with k=" + std::to_string(dimension()));
  }

  int m_;
  int r_;
  std::vector<BosonWord> words_;
};

[[nodiscard]] inline BosonFermionField build_boson_fermion_field(int m, int r) {
  return {m, r};
}

} // namespace fermiga
