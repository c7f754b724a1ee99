#include <gtest/gtest.h>

#include <random>

#include "fermiga/fermiga.hpp"
#include "oracles.hpp"

using namespace fermiga;

namespace {

Multivector random_multivector(std::mt19937_64 &rng, int n, int terms) {
  std::uniform_int_distribution<mask_t> pick(0, full_mask(n));
  std::normal_distribution<double> g;
  Multivector a(n);
  for (int k = 0; k < terms; ++k)
    a.accumulate(pick(rng), {g(rng), g(rng)});
  return a;
}

Multivector random_vector(std::mt19937_64 &rng, int n) {
  std::normal_distribution<double> g;
  Multivector a(n);
  for (int i = 0; i < n; ++i)
    a.accumulate(mask_t{1} << i, {g(rng), g(rng)});
  return a;
}

// Product via the word-sort oracle, term by term.
Multivector oracle_product(const Multivector &a, const Multivector &b) {
  Multivector out(a.dimension());
  for (const auto &[ma, ca] : a.terms())
    for (const auto &[mb, cb] : b.terms()) {
      const auto [sign, m] = oracle::word_product(ma, mb);
      out.accumulate(m, static_cast<double>(sign) * ca * cb);
    }
  return out;
}

} // namespace

TEST(Multivector, ConstructionAndAccess) {
  Multivector a(3);
  EXPECT_TRUE(a.is_zero());
  a.set(Blade(0b011, 3), {2.0, -1.0});
  EXPECT_EQ(a.coefficient(Blade(0b011, 3)), complex(2.0, -1.0));
  EXPECT_EQ(a.coefficient(Blade(0b001, 3)), complex(0.0));
  EXPECT_EQ(a.term_count(), 1U);
  a.accumulate(0b011, {-2.0, 1.0});
  EXPECT_TRUE(a.is_zero());
  EXPECT_THROW((void)Multivector(0), cap_error);
}

TEST(Multivector, DimensionMismatch) {
  const Multivector a = Multivector::of(Blade(1, 2));
  const Multivector b = Multivector::of(Blade(1, 3));
  EXPECT_THROW((void)(a + b), dimension_error);
  EXPECT_THROW((void)(a * b), dimension_error);
  EXPECT_THROW((void)inner_product(a, b), dimension_error);
}

TEST(Multivector, GeneratorRelations) {
  const int n = 4;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      const Multivector ej = Multivector::of(Blade::generator(j, n));
      const Multivector ek = Multivector::of(Blade::generator(k, n));
      const Multivector anti = ej * ek + ek * ej;
      const Multivector expect = Multivector::scalar(n, j == k ? 2.0 : 0.0);
      ASSERT_TRUE(approx_equal(anti, expect));
    }
}

TEST(Multivector, ProductMatchesOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 7;
    const Multivector a = random_multivector(rng, n, 6);
    const Multivector b = random_multivector(rng, n, 6);
    ASSERT_TRUE(approx_equal(a * b, oracle_product(a, b)));
  }
}

TEST(Multivector, AlgebraLaws) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const Multivector a = random_multivector(rng, n, 5);
    const Multivector b = random_multivector(rng, n, 5);
    const Multivector c = random_multivector(rng, n, 5);
    ASSERT_TRUE(approx_equal((a * b) * c, a * (b * c), 1e-10));
    ASSERT_TRUE(approx_equal(a * (b + c), a * b + a * c, 1e-10));
    ASSERT_TRUE(approx_equal(Multivector::scalar(n, 1.0) * a, a));
    ASSERT_TRUE(approx_equal(complex(0, 2) * (a * b), (complex(0, 2) * a) * b, 1e-10));
  }
}

TEST(Multivector, PseudoscalarSquare) {
  // I^2 = +1 for n mod 4 in {0, 1}, -1 otherwise.
  for (int n = 1; n <= 12; ++n) {
    const Multivector i = Multivector::of(Blade::pseudoscalar(n));
    const double expect = (n % 4 == 0 || n % 4 == 1) ? 1.0 : -1.0;
    ASSERT_TRUE(approx_equal(i * i, Multivector::scalar(n, expect))) << n;
  }
}

TEST(Multivector, InnerProductAndNorm) {
  const int n = 2;
  Multivector a(n), b(n);
  a.accumulate(0b00, {1, 1});
  a.accumulate(0b11, {0, 2});
  b.accumulate(0b00, {2, 0});
  b.accumulate(0b11, {1, 0});
  // conj(1+i)*2 + conj(2i)*1 = 2 - 2i - 2i
  EXPECT_NEAR(std::abs(inner_product(a, b) - complex(2, -4)), 0.0, 1e-15);
  EXPECT_NEAR(norm(a), std::sqrt(6.0), 1e-15);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Multivector x = random_multivector(rng, 4, 5);
    const Multivector y = random_multivector(rng, 4, 5);
    ASSERT_NEAR(std::abs(inner_product(x, y) - std::conj(inner_product(y, x))), 0.0, 1e-12);
    ASSERT_NEAR(inner_product(x, x).imag(), 0.0, 1e-12);
    ASSERT_NEAR(std::abs(inner_product(x, complex(0, 3) * y) - complex(0, 3) * inner_product(x, y)),
                0.0, 1e-10);
  }
}

TEST(Multivector, GradeProjection) {
  std::mt19937_64 rng(11);
  const Multivector a = random_multivector(rng, 5, 12);
  Multivector sum(5);
  for (int g = 0; g <= 5; ++g) {
    const Multivector p = grade_project(a, g);
    EXPECT_TRUE(is_pure_grade(p, g));
    sum = sum + p;
  }
  EXPECT_TRUE(approx_equal(sum, a));
}

TEST(Multivector, ConjCoeffsContract) {
  Multivector u(3);
  u.accumulate(0b001, {1, 2});
  u.accumulate(0b100, {0, -1});
  const Multivector c = conj_coeffs(u);
  EXPECT_EQ(c.coefficient(Blade(0b001, 3)), complex(1, -2));
  EXPECT_EQ(c.coefficient(Blade(0b100, 3)), complex(0, 1));
  u.accumulate(0b011, 1.0);
  EXPECT_THROW((void)conj_coeffs(u), contract_error);
}

TEST(Multivector, AnticommutatorIdentityOnOneFermionSpace) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    const Multivector u = random_vector(rng, n);
    const Multivector v = random_vector(rng, n);
    const auto sides = anticommutator_identity_check(u, v);
    ASSERT_TRUE(approx_equal(sides.lhs, sides.rhs, 1e-10));
    // Expanded: sum_j u_j v_j, no conjugation.
    complex dot = 0.0;
    for (int j = 1; j <= n; ++j)
      dot += u.coefficient(Blade::generator(j, n)) * v.coefficient(Blade::generator(j, n));
    ASSERT_NEAR(std::abs(sides.rhs.coefficient(Blade::scalar(n)) - 2.0 * dot), 0.0, 1e-10);
  }
  const Multivector bivector = Multivector::of(Blade(0b11, 2));
  EXPECT_THROW((void)anticommutator_identity_check(bivector, bivector), contract_error);
}

TEST(Multivector, TextForm) {
  Multivector a(3);
  a.accumulate(0b011, -2.0);
  a.accumulate(0b000, 1.0);
  EXPECT_EQ(to_string(a), "(1+0i)1 + (-2+0i)e1e2");
  Multivector top(2);
  top.accumulate(0b11, -2.0);
  EXPECT_EQ(to_string(top), "(-2+0i)I");
  EXPECT_EQ(to_string(Multivector(3)), "0");
  Multivector b(2);
  b.accumulate(0b01, {0.5, -0.25});
  EXPECT_EQ(to_string(b), "(0.5-0.25i)e1");
  Multivector c(2);
  c.accumulate(0b01, {-0.0, 1e-20});
  EXPECT_EQ(to_string(c), "0");
}

TEST(Format, RealAndComplex) {
  EXPECT_EQ(format_real(-0.0), "0");
  EXPECT_EQ(format_real(0.5), "0.5");
  EXPECT_EQ(format_real(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_real(1e-17), "1e-17");
  EXPECT_EQ(format_complex({1, -1}), "(1-1i)");
  EXPECT_EQ(format_complex({-0.0, -0.0}), "(0+0i)");
  EXPECT_EQ(format_entry({0.5, 0}), "0.5");
  EXPECT_EQ(format_entry({0, 0.5}), "(0+0.5i)");
}
