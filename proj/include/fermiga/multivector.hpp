#pragma once

// Elements of G(H): sparse complex combinations of basis blades.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fermiga/blade.hpp"

namespace fermiga {

using complex = std::complex<double>;

// Coefficients below this magnitude are not stored.
inline constexpr double kPruneThreshold = 1e-15;

class Multivector {
public:
  using term_map = std::map<mask_t, complex>;

  explicit Multivector(int n) : n_(n) { check_dimension(n); }
  Multivector(const Blade &b, complex c) : n_(b.dimension()) { set(b, c); }

  static Multivector scalar(int n, complex c) { return {Blade::scalar(n), c}; }
  static Multivector of(const Blade &b) { return {b, complex{1.0, 0.0}}; }

  [[nodiscard]] int dimension() const noexcept { return n_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
  // Keyed by mask; use canonical_terms() for basis order.
  [[nodiscard]] const term_map &terms() const noexcept { return terms_; }

  [[nodiscard]] complex coefficient(const Blade &b) const {
    check_same(b.dimension());
    auto it = terms_.find(b.mask());
    return it == terms_.end() ? complex{} : it->second;
  }

  void set(const Blade &b, complex c) {
    check_same(b.dimension());
    if (std::abs(c) < kPruneThreshold)
      terms_.erase(b.mask());
    else
      terms_[b.mask()] = c;
  }

  void accumulate(mask_t mask, complex c) {
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted)
      it->second += c;
    if (std::abs(it->second) < kPruneThreshold)
      terms_.erase(it);
  }

  // (blade, coefficient) pairs sorted by canonical_index.
  [[nodiscard]] std::vector<std::pair<Blade, complex>> canonical_terms() const {
    std::vector<std::pair<Blade, complex>> out;
    out.reserve(terms_.size());
    for (const auto &[mask, c] : terms_)
      out.emplace_back(Blade(mask, n_), c);
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
      return canonical_index(x.first) < canonical_index(y.first);
    });
    return out;
  }

  void check_same(int other) const {
    if (other != n_)
      throw dimension_error("multivector of dimension " + std::to_string(n_) +
                            " combined with dimension " + std::to_string(other));
  }

private:
  int n_;
  term_map terms_;
};

[[nodiscard]] inline Multivector add(const Multivector &a, const Multivector &b) {
  a.check_same(b.dimension());
  Multivector out = a;
  for (const auto &[mask, c] : b.terms())
    out.accumulate(mask, c);
  return out;
}

[[nodiscard]] inline Multivector scale(complex c, const Multivector &a) {
  Multivector out(a.dimension());
  for (const auto &[mask, x] : a.terms())
    out.accumulate(mask, c * x);
  return out;
}

[[nodiscard]] inline Multivector geometric_product(const Multivector &a, const Multivector &b) {
  a.check_same(b.dimension());
  Multivector out(a.dimension());
  for (const auto &[ma, ca] : a.terms())
    for (const auto &[mb, cb] : b.terms())
      out.accumulate(ma ^ mb, static_cast<double>(reorder_sign(ma, mb)) * ca * cb);
  return out;
}

inline Multivector operator+(const Multivector &a, const Multivector &b) { return add(a, b); }
inline Multivector operator-(const Multivector &a) { return scale(-1.0, a); }
inline Multivector operator-(const Multivector &a, const Multivector &b) { return add(a, -b); }
inline Multivector operator*(complex c, const Multivector &a) { return scale(c, a); }
inline Multivector operator*(const Multivector &a, const Multivector &b) {
  return geometric_product(a, b);
}

// Conjugate-linear in the first argument.
[[nodiscard]] inline complex inner_product(const Multivector &a, const Multivector &b) {
  a.check_same(b.dimension());
  complex sum{};
  for (const auto &[mask, ca] : a.terms())
    if (auto ib = b.terms().find(mask); ib != b.terms().end())
      sum += std::conj(ca) * ib->second;
  return sum;
}

[[nodiscard]] inline double norm(const Multivector &a) {
  double s = 0.0;
  for (const auto &[mask, c] : a.terms())
    s += std::norm(c);
  return std::sqrt(s);
}

[[nodiscard]] inline Multivector grade_project(const Multivector &a, int grade) {
  Multivector out(a.dimension());
  for (const auto &[mask, c] : a.terms())
    if (std::popcount(mask) == grade)
      out.accumulate(mask, c);
  return out;
}

[[nodiscard]] inline bool is_pure_grade(const Multivector &a, int grade) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [grade](const auto &t) { return std::popcount(t.first) == grade; });
}

// Coefficient conjugation on H = G(H)_1: sum c_j e_j -> sum conj(c_j) e_j.
// Not defined off the one-fermion subspace.
[[nodiscard]] inline Multivector conj_coeffs(const Multivector &u) {
  if (!is_pure_grade(u, 1))
    throw contract_error("conj_coeffs requires a grade-1 multivector");
  Multivector out(u.dimension());
  for (const auto &[mask, c] : u.terms())
    out.accumulate(mask, std::conj(c));
  return out;
}

[[nodiscard]] inline bool approx_equal(const Multivector &a, const Multivector &b,
                                       double tol = 1e-12) {
  return a.dimension() == b.dimension() && norm(a - b) <= tol;
}

struct IdentitySides {
  Multivector lhs;
  Multivector rhs;
};

// uv + vu = 2 <u~, v> 1 for u, v in H.
[[nodiscard]] inline IdentitySides anticommutator_identity_check(const Multivector &u,
                                                                 const Multivector &v) {
  u.check_same(v.dimension());
  if (!is_pure_grade(u, 1) || !is_pure_grade(v, 1))
    throw contract_error("anticommutator identity is stated for grade-1 inputs");
  return {u * v + v * u,
          Multivector::scalar(u.dimension(), 2.0 * inner_product(conj_coeffs(u), v))};
}

} // namespace fermiga
