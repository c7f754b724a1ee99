#pragma once

// Spectral decompositions, evolution operators U_t = exp(i pi t A) and the
// principal-branch Hamiltonian A = (-i/pi) ln U of a unitary.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "fermiga/operator.hpp"

namespace fermiga {

inline constexpr double kClusterTolerance = 1e-8;

struct SpectralTerm {
  double eigenvalue;
  Operator projection;
};

// A = sum_j lambda_j P_j with lambda_j strictly increasing.
class SpectralDecomposition {
public:
  SpectralDecomposition(int n, std::vector<SpectralTerm> terms) : n_(n), terms_(std::move(terms)) {
    for (std::size_t j = 1; j < terms_.size(); ++j)
      if (!(terms_[j - 1].eigenvalue < terms_[j].eigenvalue))
        throw contract_error("spectral decomposition eigenvalues must be strictly increasing");
  }

  [[nodiscard]] int dimension() const noexcept { return n_; }
  [[nodiscard]] const std::vector<SpectralTerm> &terms() const noexcept { return terms_; }

  [[nodiscard]] Operator reconstruct() const {
    const auto side = static_cast<Eigen::Index>(std::size_t{1} << n_);
    Matrix m = Matrix::Zero(side, side);
    for (const auto &t : terms_)
      m += t.eigenvalue * t.projection.matrix();
    return {n_, std::move(m)};
  }

  // Rank of each projection, i.e. the eigenvalue multiplicities.
  [[nodiscard]] std::vector<std::size_t> multiplicities() const {
    std::vector<std::size_t> out;
    for (const auto &t : terms_)
      out.push_back(static_cast<std::size_t>(std::llround(trace(t.projection).real())));
    return out;
  }

private:
  int n_;
  std::vector<SpectralTerm> terms_;
};

namespace detail {

// Orthonormal basis of span(columns), then Q Q*.
inline Matrix projector_onto(const Matrix &columns) {
  Eigen::HouseholderQR<Matrix> qr(columns);
  const Matrix q = qr.householderQ() * Matrix::Identity(columns.rows(), columns.cols());
  return q * q.adjoint();
}

// Index ranges [begin, end) of consecutive sorted values within tol of their neighbour.
inline std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters(const Eigen::VectorXd &sorted,
                                                                   double tol) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  Eigen::Index begin = 0;
  for (Eigen::Index k = 1; k <= sorted.size(); ++k) {
    if (k == sorted.size() || sorted(k) - sorted(k - 1) > tol) {
      out.emplace_back(begin, k);
      begin = k;
    }
  }
  return out;
}

} // namespace detail

[[nodiscard]] inline SpectralDecomposition spectral_decompose(const Operator &a,
                                                              double cluster_tol = kClusterTolerance) {
  if (!is_self_adjoint(a, 1e-9))
    throw contract_error("spectral_decompose requires a self-adjoint operator");
  const Matrix h = 0.5 * (a.matrix() + a.matrix().adjoint());
  const Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const Eigen::VectorXd &values = solver.eigenvalues();
  const Matrix &vectors = solver.eigenvectors();
  std::vector<SpectralTerm> terms;
  for (const auto &[begin, end] : detail::clusters(values, cluster_tol)) {
    const double lambda = values.segment(begin, end - begin).mean();
    terms.push_back({lambda, Operator(a.dimension(),
                                      detail::projector_onto(vectors.middleCols(begin, end - begin)))});
  }
  return {a.dimension(), std::move(terms)};
}

[[nodiscard]] inline Operator evolution_operator(const SpectralDecomposition &d, double t) {
  const auto side = static_cast<Eigen::Index>(std::size_t{1} << d.dimension());
  Matrix u = Matrix::Zero(side, side);
  for (const auto &term : d.terms())
    u += std::polar(1.0, std::numbers::pi * t * term.eigenvalue) * term.projection.matrix();
  return {d.dimension(), std::move(u)};
}

// U_t = sum_j exp(i pi t lambda_j) P_j.
[[nodiscard]] inline Operator evolution_operator(const Operator &a, double t) {
  return evolution_operator(spectral_decompose(a), t);
}

[[nodiscard]] inline Multivector evolve_state(const Multivector &psi, const SpectralDecomposition &d,
                                              double t) {
  return apply(evolution_operator(d, t), psi);
}

[[nodiscard]] inline Multivector evolve_state(const Multivector &psi, const Operator &a, double t) {
  if (psi.dimension() != a.dimension())
    throw dimension_error("state and Hamiltonian dimensions differ");
  return evolve_state(psi, spectral_decompose(a), t);
}

// ---------------------------------------------------------------------------
// Unitaries.
// ---------------------------------------------------------------------------

struct UnitarySpectralTerm {
  complex eigenvalue; // unit modulus
  double phase;       // arg(eigenvalue) in (-pi, pi]
  Operator projection;
};

// Joint eigenspaces of the commuting Hermitian pair (U+U*)/2 and (U-U*)/2i:
// split by the first, then diagonalize the second on each degenerate block.
// Terms are sorted by phase.
[[nodiscard]] inline std::vector<UnitarySpectralTerm>
unitary_spectral_decompose(const Operator &u, double cluster_tol = kClusterTolerance) {
  if (!is_unitary(u, 1e-9))
    throw contract_error("unitary_spectral_decompose requires a unitary operator");
  const Matrix re = 0.5 * (u.matrix() + u.matrix().adjoint());
  const Matrix im = (u.matrix() - u.matrix().adjoint()) / complex{0.0, 2.0};
  const Eigen::SelfAdjointEigenSolver<Matrix> outer(re);

  std::vector<UnitarySpectralTerm> terms;
  for (const auto &[begin, end] : detail::clusters(outer.eigenvalues(), cluster_tol)) {
    const Matrix block = outer.eigenvectors().middleCols(begin, end - begin);
    const Matrix restricted = block.adjoint() * im * block;
    const Eigen::SelfAdjointEigenSolver<Matrix> inner(0.5 * (restricted + restricted.adjoint()));
    const Matrix refined = block * inner.eigenvectors();
    for (const auto &[b, e] : detail::clusters(inner.eigenvalues(), cluster_tol)) {
      const Matrix cols = refined.middleCols(b, e - b);
      const complex mu = (cols.adjoint() * u.matrix() * cols).trace() / static_cast<double>(e - b);
      double phase = std::arg(mu);
      if (phase <= -std::numbers::pi + cluster_tol)
        phase = std::numbers::pi; // ln(-1) = i pi
      terms.push_back({std::polar(1.0, phase), phase,
                       Operator(u.dimension(), detail::projector_onto(cols))});
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto &x, const auto &y) { return x.phase < y.phase; });
  return terms;
}

// A = (-i/pi) sum_j ln(mu_j) Q_j = sum_j (phase_j / pi) Q_j, so that
// evolution_operator(A, 1) = U.
[[nodiscard]] inline Operator hamiltonian_of_unitary(const Operator &u,
                                                     double cluster_tol = kClusterTolerance) {
  const auto side = u.side();
  Matrix a = Matrix::Zero(side, side);
  for (const auto &term : unitary_spectral_decompose(u, cluster_tol))
    a += (term.phase / std::numbers::pi) * term.projection.matrix();
  return {u.dimension(), 0.5 * (a + a.adjoint())};
}

} // namespace fermiga
