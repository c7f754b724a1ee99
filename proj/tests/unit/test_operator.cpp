#include <gtest/gtest.h>

#include <random>

#include "fermiga/fermiga.hpp"
#include "oracles.hpp"

using namespace fermiga;

namespace {

Multivector unit_state(std::mt19937_64 &rng, int n) {
  std::normal_distribution<double> g;
  Multivector a(n);
  for (mask_t m = 0; m <= full_mask(n); ++m)
    a.accumulate(m, {g(rng), g(rng)});
  return scale(1.0 / norm(a), a);
}

} // namespace

TEST(Operator, ShapeValidation) {
  EXPECT_THROW(Operator(2, Matrix::Zero(3, 3)), dimension_error);
  EXPECT_NO_THROW(Operator(2, Matrix::Zero(4, 4)));
  EXPECT_THROW((void)Operator::identity(13), cap_error);
  EXPECT_NO_THROW((void)Operator::identity(3, DenseCap{3}));
  EXPECT_THROW((void)Operator::identity(4, DenseCap{3}), cap_error);
  EXPECT_THROW((void)(Operator::identity(2) + Operator::identity(3)), dimension_error);
}

TEST(Operator, CoordinatesRoundTrip) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 6; ++n) {
    const Multivector a = unit_state(rng, n);
    EXPECT_TRUE(approx_equal(from_coordinates(n, to_coordinates(a)), a));
  }
  Multivector e2(3);
  e2.accumulate(0b010, 1.0);
  const Vector v = to_coordinates(e2);
  EXPECT_EQ(v(2), complex(1.0));
  EXPECT_THROW((void)from_coordinates(3, Vector::Zero(4)), dimension_error);
}

TEST(Operator, MatrixOfColumnsAreImages) {
  const int n = 3;
  // Grade involution: (-1)^grade on each blade.
  const Operator g = matrix_of(
      [](const Blade &b) { return Multivector(b, b.grade() % 2 ? -1.0 : 1.0); }, n);
  const std::vector<double> diag = {1, -1, -1, -1, 1, 1, 1, -1};
  for (int k = 0; k < 8; ++k)
    EXPECT_EQ(g(k, k), complex(diag[static_cast<std::size_t>(k)]));
  EXPECT_TRUE(is_self_adjoint(g));
  EXPECT_TRUE(is_unitary(g));
  EXPECT_FALSE(is_projection(g));
  const Operator half = 0.5 * (Operator::identity(n) + g);
  EXPECT_TRUE(is_projection(half));
  EXPECT_NEAR(trace(half).real(), 4.0, 1e-15);
}

TEST(Operator, ComposeMatchesSequentialApplication) {
  std::mt19937_64 rng(2);
  const int n = 3;
  const Operator a = left_mul_operator(Multivector::of(Blade(0b011, n)));
  const Operator b = creation_operator(CreationSpec(3, n));
  for (int trial = 0; trial < 10; ++trial) {
    const Multivector psi = unit_state(rng, n);
    EXPECT_TRUE(approx_equal(apply(a * b, psi), apply(a, apply(b, psi)), 1e-12));
  }
  EXPECT_LE(max_entry_distance(adjoint(a * b), adjoint(b) * adjoint(a)), 1e-15);
}

TEST(Operator, AdjointDefinition) {
  std::mt19937_64 rng(3);
  const int n = 3;
  const Operator t(n, oracle::random_hermitian(rng, 8) + complex(0, 1) * oracle::random_hermitian(rng, 8));
  for (int trial = 0; trial < 10; ++trial) {
    const Multivector x = unit_state(rng, n), y = unit_state(rng, n);
    EXPECT_NEAR(std::abs(inner_product(x, apply(t, y)) - inner_product(apply(adjoint(t), x), y)), 0.0,
                1e-10);
  }
}

TEST(Operator, EffectsAndStates) {
  const int n = 2;
  EXPECT_TRUE(is_effect(Operator::identity(n)));
  EXPECT_TRUE(is_effect(Operator::zero(n)));
  EXPECT_TRUE(is_effect(0.3 * Operator::identity(n)));
  EXPECT_FALSE(is_effect(2.0 * Operator::identity(n)));
  EXPECT_FALSE(is_effect(-0.1 * Operator::identity(n)));
  EXPECT_FALSE(is_effect(creation_operator(CreationSpec(1, n))));

  EXPECT_THROW((void)DensityState::from_operator(Operator::identity(n)), contract_error);
  EXPECT_NO_THROW((void)DensityState::from_operator(0.25 * Operator::identity(n)));
  Multivector notunit(n);
  notunit.accumulate(0, 2.0);
  EXPECT_THROW((void)pure_state(notunit), contract_error);
}

TEST(Operator, ProbabilityIsTraceAndExpectation) {
  std::mt19937_64 rng(4);
  const int n = 3;
  const auto pp = creation_projections(CreationSpec(2, n));
  for (int trial = 0; trial < 20; ++trial) {
    const Multivector psi = unit_state(rng, n);
    const double p = probability(pure_state(psi), pp.plus);
    EXPECT_NEAR(p, inner_product(psi, apply(pp.plus, psi)).real(), 1e-12);
    EXPECT_NEAR(p + probability(pure_state(psi), pp.minus), 1.0, 1e-12);
    EXPECT_GE(p, -1e-12);
    EXPECT_THROW((void)probability(pure_state(psi), creation_operator(CreationSpec(1, n))),
                 contract_error);
  }
}

TEST(Operator, ObservableValidation) {
  const int n = 2;
  const auto pp = creation_projections(CreationSpec(1, n));
  const Observable obs({{"+", pp.plus}, {"-", pp.minus}});
  Multivector one = Multivector::of(Blade::scalar(n));
  const auto dist = distribution(pure_state(one), obs);
  ASSERT_EQ(dist.size(), 2U);
  EXPECT_EQ(dist[0].first, "+");
  EXPECT_NEAR(dist[0].second, 0.5, 1e-15);
  EXPECT_NEAR(dist[1].second, 0.5, 1e-15);
  EXPECT_THROW(Observable({{"+", pp.plus}}), contract_error);
  EXPECT_THROW(Observable({{"a", pp.plus}, {"a", pp.minus}}), contract_error);
  EXPECT_THROW(Observable({}), contract_error);
}
