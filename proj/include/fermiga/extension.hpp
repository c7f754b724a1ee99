#pragma once

// alpha-extensions B^alpha of an operator B on H = G(H)_1 to all of G(H):
//   B^alpha(1)              = alpha_1 1
//   B^alpha(e_i)            = B(e_i)
//   B^alpha(e_i1 ... e_ik)  = alpha_k sum_m e_i1 ... B(e_im) ... e_ik   (k >= 2)
// extended linearly.
//
// Note the vacuum rule is independent of B: the trivial extension (alpha = 0)
// sends the vacuum to 0.
//
// The product inside the Leibniz sum is selectable. With the exterior product
// (default) a replaced factor that repeats another generator of the blade
// contributes nothing, so B^alpha preserves grade and is self-adjoint for
// self-adjoint B and real alpha. With the geometric product the repeated
// generator contracts and B^alpha(e_i e_j) picks up (B_ij + B_ji) in lower
// grades; self-adjointness then fails whenever Re B_ij != 0 for some i != j.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fermiga/evolution.hpp"
#include "fermiga/multivector.hpp"
#include "fermiga/operator.hpp"

namespace fermiga {

class AlphaVector {
public:
  explicit AlphaVector(std::vector<complex> values) : values_(std::move(values)) {
    check_dimension(static_cast<int>(values_.size()));
  }
  explicit AlphaVector(const std::vector<double> &values)
      : AlphaVector(std::vector<complex>(values.begin(), values.end())) {}
  AlphaVector(std::initializer_list<double> values)
      : AlphaVector(std::vector<complex>(values.begin(), values.end())) {}

  // alpha_j = 1/j; extends the identity of H to the identity of G(H).
  static AlphaVector simple(int n) {
    std::vector<complex> v;
    for (int j = 1; j <= n; ++j)
      v.emplace_back(1.0 / j, 0.0);
    return AlphaVector(std::move(v));
  }
  static AlphaVector trivial(int n) { return AlphaVector(std::vector<complex>(n)); }

  [[nodiscard]] int dimension() const noexcept { return static_cast<int>(values_.size()); }
  // 1-based, alpha_1 ... alpha_n.
  [[nodiscard]] complex operator[](int k) const { return values_.at(static_cast<std::size_t>(k - 1)); }
  [[nodiscard]] bool is_real(double tol = 0.0) const {
    return std::all_of(values_.begin(), values_.end(),
                       [tol](complex a) { return std::abs(a.imag()) <= tol; });
  }

private:
  std::vector<complex> values_;
};

// An operator on H, stored in row convention: rows(i, j) = B_ij, the
// coefficient of e_{j+1} in B(e_{i+1}).
class BaseOperator {
public:
  explicit BaseOperator(Matrix rows) : rows_(std::move(rows)) {
    if (rows_.rows() != rows_.cols())
      throw dimension_error("base operator must be square");
    check_dimension(static_cast<int>(rows_.rows()));
  }

  // From the usual column convention M(j, i) = <e_j, B e_i>.
  static BaseOperator from_columns(const Matrix &m) { return BaseOperator(Matrix(m.transpose())); }

  static BaseOperator identity(int n) {
    check_dimension(n);
    return BaseOperator(Matrix::Identity(n, n));
  }

  static BaseOperator diagonal(const std::vector<double> &lambda) {
    check_dimension(static_cast<int>(lambda.size()));
    const auto n = static_cast<Eigen::Index>(lambda.size());
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      m(i, i) = lambda[static_cast<std::size_t>(i)];
    return BaseOperator(std::move(m));
  }

  // Projection of H onto span{e_i}.
  static BaseOperator projection_onto(int i, int n) {
    check_dimension(n);
    if (i < 1 || i > n)
      throw dimension_error("projection target e" + std::to_string(i) + " outside [1, " +
                            std::to_string(n) + "]");
    Matrix m = Matrix::Zero(n, n);
    m(i - 1, i - 1) = 1.0;
    return BaseOperator(std::move(m));
  }

  [[nodiscard]] int dimension() const noexcept { return static_cast<int>(rows_.rows()); }
  [[nodiscard]] const Matrix &rows() const noexcept { return rows_; }
  [[nodiscard]] Matrix columns() const { return rows_.transpose(); }

  // B(e_i), 1-based i, as a grade-1 multivector.
  [[nodiscard]] Multivector image(int i) const {
    Multivector out(dimension());
    for (Eigen::Index j = 0; j < rows_.cols(); ++j)
      out.accumulate(mask_t{1} << j, rows_(i - 1, j));
    return out;
  }

  // B_ij = conj(B_ji).
  [[nodiscard]] bool is_self_adjoint(double tol = kDefaultTolerance) const {
    return max_entry(rows_ - rows_.adjoint()) <= tol;
  }

private:
  Matrix rows_;
};

inline BaseOperator operator+(const BaseOperator &a, const BaseOperator &b) {
  if (a.dimension() != b.dimension())
    throw dimension_error("base operators of different dimension");
  return BaseOperator(a.rows() + b.rows());
}
inline BaseOperator operator*(complex c, const BaseOperator &a) { return BaseOperator(c * a.rows()); }

// (A B)(e_i) = A(B(e_i)).
[[nodiscard]] inline BaseOperator compose(const BaseOperator &a, const BaseOperator &b) {
  if (a.dimension() != b.dimension())
    throw dimension_error("base operators of different dimension");
  return BaseOperator(b.rows() * a.rows());
}

enum class LeibnizProduct { exterior, geometric };

// B^alpha applied to a single basis blade.
[[nodiscard]] inline Multivector alpha_extend_blade(const BaseOperator &b, const AlphaVector &alpha,
                                                    const Blade &blade,
                                                    LeibnizProduct product = LeibnizProduct::exterior) {
  const int n = b.dimension();
  const int k = blade.grade();
  if (k == 0)
    return Multivector::scalar(n, alpha[1]);
  if (k == 1)
    return b.image(std::countr_zero(blade.mask()) + 1);
  Multivector sum(n);
  for (mask_t rest = blade.mask(); rest != 0; rest &= rest - 1) {
    const int pos = std::countr_zero(rest);
    const mask_t bit = mask_t{1} << pos;
    const mask_t before = blade.mask() & (bit - 1);
    const mask_t after = blade.mask() & ~(bit | (bit - 1));
    for (int j = 0; j < n; ++j) {
      const complex c = b.rows()(pos, j);
      const mask_t image = mask_t{1} << j;
      if (c == complex{} || (product == LeibnizProduct::exterior && (image & (before | after))))
        continue;
      const SignedBlade left = blade_product(Blade(before, n), Blade(image, n));
      const SignedBlade full = blade_product(left.blade, Blade(after, n));
      sum.accumulate(full.blade.mask(), static_cast<double>(left.sign * full.sign) * c);
    }
  }
  return scale(alpha[k], sum);
}

[[nodiscard]] inline Operator alpha_extend(const BaseOperator &b, const AlphaVector &alpha,
                                           DenseCap cap = {},
                                           LeibnizProduct product = LeibnizProduct::exterior) {
  if (alpha.dimension() != b.dimension())
    throw dimension_error("alpha has " + std::to_string(alpha.dimension()) +
                          " entries for an operator on C^" + std::to_string(b.dimension()));
  return matrix_of(
      [&](const Blade &blade) { return alpha_extend_blade(b, alpha, blade, product); },
      b.dimension(), cap);
}

// B^alpha applied to a multivector without building the dense matrix.
[[nodiscard]] inline Multivector
apply_alpha_extension(const BaseOperator &b, const AlphaVector &alpha, const Multivector &a,
                      LeibnizProduct product = LeibnizProduct::exterior) {
  a.check_same(b.dimension());
  if (alpha.dimension() != b.dimension())
    throw dimension_error("alpha and base operator dimensions differ");
  Multivector out(a.dimension());
  for (const auto &[mask, c] : a.terms())
    out = out + scale(c, alpha_extend_blade(b, alpha, Blade(mask, a.dimension()), product));
  return out;
}

struct NonMultiplicativeWitness {
  Multivector squared_extension; // P^alpha P^alpha (e1 e2)
  Multivector extended_square;   // (P P)^alpha (e1 e2)
  bool differs;
};

// P = projection onto e_1: P^alpha P^alpha (e1e2) = alpha_2^2 e1e2 while
// (PP)^alpha (e1e2) = alpha_2 e1e2. These differ whenever alpha_2 is not 0 or 1.
[[nodiscard]] inline NonMultiplicativeWitness verify_nonmultiplicative(const AlphaVector &alpha) {
  const int n = alpha.dimension();
  if (n < 2)
    throw dimension_error("the e1e2 witness needs n >= 2");
  const BaseOperator p = BaseOperator::projection_onto(1, n);
  const Multivector e12 = Multivector::of(Blade(0b11, n));
  Multivector twice = apply_alpha_extension(p, alpha, apply_alpha_extension(p, alpha, e12));
  Multivector square = apply_alpha_extension(compose(p, p), alpha, e12);
  const bool differs = !approx_equal(twice, square);
  return {std::move(twice), std::move(square), differs};
}

// ---------------------------------------------------------------------------
// Diagonal fast path: for A = diag(lambda), A^alpha is diagonal in the blade
// basis.
// ---------------------------------------------------------------------------

namespace detail {
inline void check_diagonal_inputs(const std::vector<double> &lambda, const AlphaVector &alpha) {
  if (static_cast<int>(lambda.size()) != alpha.dimension())
    throw dimension_error("lambda and alpha lengths differ");
  if (!alpha.is_real())
    throw contract_error("diagonal alpha-extension spectrum requires real alpha");
}
} // namespace detail

// alpha_1 on 1, lambda_i on e_i, alpha_k (lambda_i1 + ... + lambda_ik) on grade k >= 2.
[[nodiscard]] inline double diagonal_extension_eigenvalue(const Blade &blade,
                                                          const std::vector<double> &lambda,
                                                          const AlphaVector &alpha) {
  detail::check_diagonal_inputs(lambda, alpha);
  const int k = blade.grade();
  if (k == 0)
    return alpha[1].real();
  double sum = 0.0;
  for (mask_t m = blade.mask(); m != 0; m &= m - 1)
    sum += lambda[static_cast<std::size_t>(std::countr_zero(m))];
  return k == 1 ? sum : alpha[k].real() * sum;
}

[[nodiscard]] inline SpectralDecomposition
diagonal_alpha_extension(const std::vector<double> &lambda, const AlphaVector &alpha,
                         double cluster_tol = kClusterTolerance, DenseCap cap = {}) {
  detail::check_diagonal_inputs(lambda, alpha);
  const int n = alpha.dimension();
  check_dense(n, cap);
  const BasisOrder order(n);
  std::vector<std::pair<double, std::uint32_t>> values;
  values.reserve(order.size());
  for (std::size_t r = 0; r < order.size(); ++r)
    values.emplace_back(diagonal_extension_eigenvalue(Blade(order.mask_at(r), n), lambda, alpha),
                        static_cast<std::uint32_t>(r));
  std::sort(values.begin(), values.end());

  const auto side = static_cast<Eigen::Index>(order.size());
  std::vector<SpectralTerm> terms;
  std::size_t begin = 0;
  for (std::size_t k = 1; k <= values.size(); ++k) {
    if (k < values.size() && values[k].first - values[k - 1].first <= cluster_tol)
      continue;
    Matrix p = Matrix::Zero(side, side);
    double sum = 0.0;
    for (std::size_t q = begin; q < k; ++q) {
      p(values[q].second, values[q].second) = 1.0;
      sum += values[q].first;
    }
    terms.push_back({sum / static_cast<double>(k - begin), Operator(n, std::move(p))});
    begin = k;
  }
  return {n, std::move(terms)};
}

// U_t^alpha on a state: each blade coefficient picks up exp(i pi t eigenvalue).
[[nodiscard]] inline Multivector diagonal_extension_evolve(const Multivector &psi,
                                                           const std::vector<double> &lambda,
                                                           const AlphaVector &alpha, double t) {
  detail::check_diagonal_inputs(lambda, alpha);
  psi.check_same(alpha.dimension());
  Multivector out(psi.dimension());
  for (const auto &[mask, c] : psi.terms()) {
    const double e = diagonal_extension_eigenvalue(Blade(mask, psi.dimension()), lambda, alpha);
    out.accumulate(mask, std::polar(1.0, std::numbers::pi * t * e) * c);
  }
  return out;
}

} // namespace fermiga
