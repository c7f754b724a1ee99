#pragma once

// Left-multiplication operators B-bar(a) = B a, the creation operators
// C_{e_i} = e_i-bar, their eigensystems and eigenprojections, and the
// observables built from those projections.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "fermiga/format.hpp"
#include "fermiga/multivector.hpp"
#include "fermiga/operator.hpp"

namespace fermiga {

class CreationSpec {
public:
  CreationSpec(int i, int n) : i_(i), n_(n) {
    check_dimension(n);
    if (i < 1 || i > n)
      throw dimension_error("creation operator index " + std::to_string(i) +
                            " outside [1, " + std::to_string(n) + "]");
  }
  [[nodiscard]] int index() const noexcept { return i_; }
  [[nodiscard]] int dimension() const noexcept { return n_; }
  [[nodiscard]] mask_t bit() const noexcept { return mask_t{1} << (i_ - 1); }

private:
  int i_;
  int n_;
};

// Sparse fill: column K receives sign(J, K) * b_J at row J xor K.
[[nodiscard]] inline Operator left_mul_operator(const Multivector &b, DenseCap cap = {}) {
  const int n = b.dimension();
  check_dense(n, cap);
  const BasisOrder order(n);
  const auto side = static_cast<Eigen::Index>(order.size());
  Matrix m = Matrix::Zero(side, side);
  for (std::size_t col = 0; col < order.size(); ++col) {
    const mask_t k = order.mask_at(col);
    for (const auto &[j, c] : b.terms())
      m(order.index_of(j ^ k), static_cast<Eigen::Index>(col)) +=
          static_cast<double>(reorder_sign(j, k)) * c;
  }
  return {n, std::move(m)};
}

[[nodiscard]] inline Operator creation_operator(const CreationSpec &spec, DenseCap cap = {}) {
  return left_mul_operator(Multivector::of(Blade::generator(spec.index(), spec.dimension())),
                           cap);
}

struct LeftMulClass {
  bool unitary;
  bool self_adjoint;
};

// e_J-bar is always unitary; self-adjoint exactly when e_J e_J = +1.
[[nodiscard]] inline LeftMulClass blade_left_mul_classification(const Blade &j) {
  return {true, blade_square_sign(j.grade()) == 1};
}

struct EigenPair {
  complex eigenvalue;
  Multivector eigenvector;
};

// (e_J + e_i e_J)/sqrt2 for eigenvalue +1, then (e_J - e_i e_J)/sqrt2 for -1,
// J over blades without e_i in canonical order. The e_J coefficient comes
// first in canonical order and is +1/sqrt2.
[[nodiscard]] inline std::vector<EigenPair> creation_eigensystem(const CreationSpec &spec) {
  const int n = spec.dimension();
  const mask_t bit = spec.bit();
  const BasisOrder order(n);
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<EigenPair> out;
  out.reserve(order.size());
  for (const double sign : {1.0, -1.0}) {
    for (const mask_t j : order.masks()) {
      if (j & bit)
        continue;
      Multivector v(n);
      v.accumulate(j, h);
      v.accumulate(j | bit, sign * h * static_cast<double>(reorder_sign(bit, j)));
      out.push_back({complex{sign, 0.0}, std::move(v)});
    }
  }
  return out;
}

struct ProjectionPair {
  Operator plus;
  Operator minus;
};

// P_+ and P_- as sums of the rank-one eigenprojections.
[[nodiscard]] inline ProjectionPair creation_projections(const CreationSpec &spec,
                                                         DenseCap cap = {}) {
  const int n = spec.dimension();
  check_dense(n, cap);
  const auto side = static_cast<Eigen::Index>(std::size_t{1} << n);
  Matrix plus = Matrix::Zero(side, side);
  Matrix minus = Matrix::Zero(side, side);
  for (const auto &pair : creation_eigensystem(spec)) {
    Matrix &target = pair.eigenvalue.real() > 0 ? plus : minus;
    const auto terms = pair.eigenvector.canonical_terms();
    for (const auto &[bk, ck] : terms)
      for (const auto &[bj, cj] : terms)
        target(canonical_index(bk), canonical_index(bj)) += ck * std::conj(cj);
  }
  return {{n, std::move(plus)}, {n, std::move(minus)}};
}

[[nodiscard]] inline Operator anticommutator(const Operator &s, const Operator &t) {
  s.check_same(t);
  return {s.dimension(), s.matrix() * t.matrix() + t.matrix() * s.matrix()};
}

// sum_k w_k P_{psi_k} over the creation eigenbasis in creation_eigensystem order.
[[nodiscard]] inline Operator observable_from_projections(const CreationSpec &spec,
                                                          const std::vector<double> &weights,
                                                          DenseCap cap = {}) {
  const int n = spec.dimension();
  check_dense(n, cap);
  const auto eig = creation_eigensystem(spec);
  if (weights.size() != eig.size())
    throw dimension_error("expected " + std::to_string(eig.size()) + " weights, got " +
                          std::to_string(weights.size()));
  const auto side = static_cast<Eigen::Index>(eig.size());
  Matrix m = Matrix::Zero(side, side);
  for (std::size_t k = 0; k < eig.size(); ++k) {
    const auto terms = eig[k].eigenvector.canonical_terms();
    for (const auto &[bi, ci] : terms)
      for (const auto &[bj, cj] : terms)
        m(canonical_index(bi), canonical_index(bj)) += weights[k] * ci * std::conj(cj);
  }
  return {n, std::move(m)};
}

// lambda1 P_{psi+1} + lambda2 P_{psi+2} + lambda3 P_{psi-1} + lambda4 P_{psi-2} on G(C^2).
[[nodiscard]] inline Operator e1_observable(const std::array<double, 4> &lambda) {
  for (const double l : lambda)
    if (!std::isfinite(l))
      throw contract_error("e1-observable weights must be finite reals");
  return observable_from_projections(CreationSpec(1, 2), {lambda.begin(), lambda.end()});
}

// The observable {A_x} behind the weights: one effect per distinct weight,
// equal weights merged into a single projection. Labels are printed weights.
[[nodiscard]] inline Observable spectral_observable(const CreationSpec &spec,
                                                    const std::vector<double> &weights,
                                                    DenseCap cap = {}) {
  const int n = spec.dimension();
  check_dense(n, cap);
  const auto eig = creation_eigensystem(spec);
  if (weights.size() != eig.size())
    throw dimension_error("expected " + std::to_string(eig.size()) + " weights, got " +
                          std::to_string(weights.size()));
  std::vector<std::pair<std::string, Operator>> effects;
  for (std::size_t k = 0; k < eig.size(); ++k) {
    const std::string label = format_real(weights[k]);
    const Operator p = rank_one_projection(eig[k].eigenvector, cap);
    auto it = std::find_if(effects.begin(), effects.end(),
                           [&](const auto &e) { return e.first == label; });
    if (it == effects.end())
      effects.emplace_back(label, p);
    else
      it->second = it->second + p;
  }
  return Observable(std::move(effects));
}

[[nodiscard]] inline Observable e1_observable_effects(const std::array<double, 4> &lambda) {
  return spectral_observable(CreationSpec(1, 2), {lambda.begin(), lambda.end()});
}

// Probability that P_+ (creation of e_1) occurs in (alpha 1 + beta e_1)/norm.
[[nodiscard]] inline double creation_probability_on_span(complex alpha, complex beta) {
  const double denom = std::norm(alpha) + std::norm(beta);
  if (denom == 0.0)
    throw contract_error("state alpha 1 + beta e1 is the zero vector");
  return std::norm(alpha + beta) / (2.0 * denom);
}

} // namespace fermiga
