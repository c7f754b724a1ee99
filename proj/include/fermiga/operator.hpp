#pragma once

// Linear operators on G(H) as dense 2^n x 2^n matrices in canonical blade
// order, with entry (k, j) = <f_k, T f_j>. Column j holds the coordinates of
// the image of the j-th basis blade.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "fermiga/blade.hpp"
#include "fermiga/multivector.hpp"

namespace fermiga {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr int kDefaultDenseCap = 12;

// Largest n for which a dense 2^n x 2^n operator may be built.
struct DenseCap {
  int max_n = kDefaultDenseCap;
};

inline void check_dense(int n, DenseCap cap) {
  check_dimension(n);
  if (n > cap.max_n)
    throw cap_error("dense operator for n=" + std::to_string(n) + " exceeds cap n<=" +
                    std::to_string(cap.max_n) + " (" + std::to_string(std::size_t{1} << n) +
                    "^2 entries)");
}

class Operator {
public:
  Operator(int n, Matrix m) : n_(n), m_(std::move(m)) {
    check_dimension(n);
    const auto side = static_cast<Eigen::Index>(std::size_t{1} << n);
    if (m_.rows() != side || m_.cols() != side)
      throw dimension_error("operator matrix is " + std::to_string(m_.rows()) + "x" +
                            std::to_string(m_.cols()) + ", expected side " +
                            std::to_string(side));
  }

  static Operator zero(int n, DenseCap cap = {}) {
    check_dense(n, cap);
    const auto side = static_cast<Eigen::Index>(std::size_t{1} << n);
    return {n, Matrix::Zero(side, side)};
  }
  static Operator identity(int n, DenseCap cap = {}) {
    check_dense(n, cap);
    const auto side = static_cast<Eigen::Index>(std::size_t{1} << n);
    return {n, Matrix::Identity(side, side)};
  }

  [[nodiscard]] int dimension() const noexcept { return n_; }
  [[nodiscard]] Eigen::Index side() const noexcept { return m_.rows(); }
  [[nodiscard]] const Matrix &matrix() const noexcept { return m_; }
  [[nodiscard]] complex operator()(Eigen::Index k, Eigen::Index j) const { return m_(k, j); }

  void check_same(const Operator &other) const {
    if (other.n_ != n_)
      throw dimension_error("operators over n=" + std::to_string(n_) + " and n=" +
                            std::to_string(other.n_));
  }

private:
  int n_;
  Matrix m_;
};

inline Operator operator+(const Operator &a, const Operator &b) {
  a.check_same(b);
  return {a.dimension(), a.matrix() + b.matrix()};
}
inline Operator operator-(const Operator &a, const Operator &b) {
  a.check_same(b);
  return {a.dimension(), a.matrix() - b.matrix()};
}
inline Operator operator*(complex c, const Operator &a) { return {a.dimension(), c * a.matrix()}; }

[[nodiscard]] inline Operator compose(const Operator &s, const Operator &t) {
  s.check_same(t);
  return {s.dimension(), s.matrix() * t.matrix()};
}
inline Operator operator*(const Operator &s, const Operator &t) { return compose(s, t); }

[[nodiscard]] inline Operator adjoint(const Operator &t) {
  return {t.dimension(), t.matrix().adjoint()};
}

[[nodiscard]] inline complex trace(const Operator &t) { return t.matrix().trace(); }

// ---------------------------------------------------------------------------
// Dense coordinates at the operator boundary.
// ---------------------------------------------------------------------------

[[nodiscard]] inline Vector to_coordinates(const Multivector &a) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(std::size_t{1} << a.dimension()));
  for (const auto &[mask, c] : a.terms())
    v(canonical_index(Blade(mask, a.dimension()))) = c;
  return v;
}

[[nodiscard]] inline Multivector from_coordinates(int n, const Vector &v) {
  const BasisOrder order(n);
  if (static_cast<std::size_t>(v.size()) != order.size())
    throw dimension_error("coordinate vector of length " + std::to_string(v.size()) +
                          " for n=" + std::to_string(n));
  Multivector out(n);
  for (Eigen::Index r = 0; r < v.size(); ++r)
    if (std::abs(v(r)) >= kPruneThreshold)
      out.accumulate(order.mask_at(static_cast<std::size_t>(r)), v(r));
  return out;
}

[[nodiscard]] inline Multivector apply(const Operator &t, const Multivector &a) {
  if (t.dimension() != a.dimension())
    throw dimension_error("operator over n=" + std::to_string(t.dimension()) +
                          " applied to multivector over n=" + std::to_string(a.dimension()));
  return from_coordinates(t.dimension(), t.matrix() * to_coordinates(a));
}

// Column j is the coordinate vector of action(blade_at(j)).
template <typename Action>
[[nodiscard]] Operator matrix_of(Action &&action, int n, DenseCap cap = {}) {
  check_dense(n, cap);
  const BasisOrder order(n);
  const auto side = static_cast<Eigen::Index>(order.size());
  Matrix m = Matrix::Zero(side, side);
  for (std::size_t j = 0; j < order.size(); ++j) {
    const Multivector image = action(Blade(order.mask_at(j), n));
    if (image.dimension() != n)
      throw dimension_error("operator action returned a multivector over n=" +
                            std::to_string(image.dimension()) + ", expected " +
                            std::to_string(n));
    for (const auto &[mask, c] : image.terms())
      m(order.index_of(mask), static_cast<Eigen::Index>(j)) = c;
  }
  return {n, std::move(m)};
}

// ---------------------------------------------------------------------------
// Predicates. Tolerances are in max-entry norm.
// ---------------------------------------------------------------------------

[[nodiscard]] inline double max_entry(const Matrix &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

[[nodiscard]] inline double max_entry_distance(const Operator &a, const Operator &b) {
  a.check_same(b);
  return max_entry(a.matrix() - b.matrix());
}

[[nodiscard]] inline bool is_self_adjoint(const Operator &t, double tol = kDefaultTolerance) {
  return max_entry(t.matrix() - t.matrix().adjoint()) <= tol;
}

[[nodiscard]] inline bool is_unitary(const Operator &t, double tol = kDefaultTolerance) {
  const Matrix id = Matrix::Identity(t.side(), t.side());
  return max_entry(t.matrix() * t.matrix().adjoint() - id) <= tol;
}

[[nodiscard]] inline bool is_projection(const Operator &t, double tol = kDefaultTolerance) {
  return is_self_adjoint(t, tol) && max_entry(t.matrix() * t.matrix() - t.matrix()) <= tol;
}

// Eigenvalues (ascending) of the Hermitian part (T + T*)/2.
[[nodiscard]] inline Eigen::VectorXd hermitian_eigenvalues(const Operator &t) {
  const Matrix h = 0.5 * (t.matrix() + t.matrix().adjoint());
  return Eigen::SelfAdjointEigenSolver<Matrix>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

// 0 <= T <= I.
[[nodiscard]] inline bool is_effect(const Operator &t, double tol = kDefaultTolerance) {
  if (!is_self_adjoint(t, tol))
    return false;
  const Eigen::VectorXd ev = hermitian_eigenvalues(t);
  return ev.minCoeff() >= -tol && ev.maxCoeff() <= 1.0 + tol;
}

// ---------------------------------------------------------------------------
// States, probabilities, observables.
// ---------------------------------------------------------------------------

class DensityState {
public:
  // Validates rho = rho*, rho >= 0 and tr(rho) = 1 within kDefaultTolerance.
  static DensityState from_operator(Operator rho) {
    if (!is_self_adjoint(rho))
      throw contract_error("density operator is not self-adjoint");
    if (std::abs(trace(rho) - complex{1.0, 0.0}) > kDefaultTolerance)
      throw contract_error("density operator trace differs from 1");
    if (hermitian_eigenvalues(rho).minCoeff() < -kDefaultTolerance)
      throw contract_error("density operator has a negative eigenvalue");
    return DensityState(std::move(rho));
  }

  [[nodiscard]] const Operator &op() const noexcept { return rho_; }
  [[nodiscard]] int dimension() const noexcept { return rho_.dimension(); }

private:
  explicit DensityState(Operator rho) : rho_(std::move(rho)) {}
  Operator rho_;
};

// Rank-one projection onto span{psi}; psi must be a unit vector.
[[nodiscard]] inline Operator rank_one_projection(const Multivector &psi, DenseCap cap = {}) {
  check_dense(psi.dimension(), cap);
  if (std::abs(norm(psi) - 1.0) > kDefaultTolerance)
    throw contract_error("projection target has norm " + std::to_string(norm(psi)) +
                         ", expected 1");
  const Vector v = to_coordinates(psi);
  return {psi.dimension(), v * v.adjoint()};
}

[[nodiscard]] inline DensityState pure_state(const Multivector &psi, DenseCap cap = {}) {
  return DensityState::from_operator(rank_one_projection(psi, cap));
}

// tr(rho A). tr(XY) = sum_{kj} X_kj Y_jk.
[[nodiscard]] inline double probability(const DensityState &rho, const Operator &effect) {
  rho.op().check_same(effect);
  if (!is_effect(effect))
    throw contract_error("probability requires an effect (0 <= A <= I)");
  const complex p = (rho.op().matrix().array() * effect.matrix().transpose().array()).sum();
  if (std::abs(p.imag()) > kDefaultTolerance)
    throw contract_error("tr(rho A) has imaginary residue " + std::to_string(p.imag()));
  return p.real();
}

class Observable {
public:
  using outcome = std::pair<std::string, Operator>;

  explicit Observable(std::vector<outcome> effects) : effects_(std::move(effects)) {
    if (effects_.empty())
      throw contract_error("observable needs at least one effect");
    const int n = effects_.front().second.dimension();
    Matrix sum = Matrix::Zero(effects_.front().second.side(), effects_.front().second.side());
    for (std::size_t i = 0; i < effects_.size(); ++i) {
      const auto &[label, a] = effects_[i];
      if (a.dimension() != n)
        throw dimension_error("observable mixes dimensions");
      for (std::size_t j = 0; j < i; ++j)
        if (effects_[j].first == label)
          throw contract_error("observable outcome '" + label + "' listed twice");
      if (!is_effect(a))
        throw contract_error("observable outcome '" + label + "' is not an effect");
      sum += a.matrix();
    }
    if (max_entry(sum - Matrix::Identity(sum.rows(), sum.cols())) > kDefaultTolerance)
      throw contract_error("observable effects do not sum to the identity");
  }

  [[nodiscard]] const std::vector<outcome> &effects() const noexcept { return effects_; }
  [[nodiscard]] int dimension() const { return effects_.front().second.dimension(); }

private:
  std::vector<outcome> effects_;
};

// x -> tr(rho A_x), in the observable's outcome order.
[[nodiscard]] inline std::vector<std::pair<std::string, double>>
distribution(const DensityState &rho, const Observable &obs) {
  std::vector<std::pair<std::string, double>> out;
  out.reserve(obs.effects().size());
  for (const auto &[label, a] : obs.effects())
    out.emplace_back(label, probability(rho, a));
  return out;
}

} // namespace fermiga
