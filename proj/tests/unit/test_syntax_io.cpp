#include <gtest/gtest.h>

#include <random>

#include "fermiga/fermiga.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace fermiga;

TEST(Syntax, MultivectorForms) {
  const Multivector a = parse_multivector("(1+0i)1 + (-2+0i)e1e2", 3);
  EXPECT_EQ(a.coefficient(Blade(0, 3)), complex(1));
  EXPECT_EQ(a.coefficient(Blade(0b011, 3)), complex(-2));
  EXPECT_EQ(a.term_count(), 2U);

  const Multivector b = parse_multivector("e1 + i*e2 - 0.5*e1e3", 3);
  EXPECT_EQ(b.coefficient(Blade(0b001, 3)), complex(1));
  EXPECT_EQ(b.coefficient(Blade(0b010, 3)), complex(0, 1));
  EXPECT_EQ(b.coefficient(Blade(0b101, 3)), complex(-0.5));

  EXPECT_EQ(parse_multivector("I", 2).coefficient(Blade(0b11, 2)), complex(1));
  EXPECT_EQ(parse_multivector("1", 2).coefficient(Blade(0, 2)), complex(1));
  EXPECT_EQ(parse_multivector("2", 2).coefficient(Blade(0, 2)), complex(2));
  EXPECT_EQ(parse_multivector("2i*e1", 2).coefficient(Blade(1, 2)), complex(0, 2));
  EXPECT_EQ(parse_multivector("(0.5i)e2", 2).coefficient(Blade(2, 2)), complex(0, 0.5));
  EXPECT_EQ(parse_multivector("(3)*e2", 2).coefficient(Blade(2, 2)), complex(3));
  EXPECT_EQ(parse_multivector("(1-1i) e1", 2).coefficient(Blade(1, 2)), complex(1, -1));
  EXPECT_TRUE(parse_multivector("0", 2).is_zero());
  EXPECT_TRUE(parse_multivector("e1 - e1", 2).is_zero());
  EXPECT_EQ(parse_multivector(" 1 + e1 ", 2).term_count(), 2U);
  EXPECT_EQ(parse_multivector("e1 e2", 2).coefficient(Blade(3, 2)), complex(1));
  EXPECT_EQ(parse_multivector("-e1e2", 2).coefficient(Blade(3, 2)), complex(-1));
}

TEST(Syntax, MultivectorErrors) {
  EXPECT_THROW((void)parse_multivector("", 2), parse_error);
  EXPECT_THROW((void)parse_multivector("e1 * e2", 2), parse_error);
  EXPECT_THROW((void)parse_multivector("e3", 2), parse_error);
  EXPECT_THROW((void)parse_multivector("e1e1", 2), parse_error);
  EXPECT_THROW((void)parse_multivector("(1+2)e1", 2), parse_error);
  EXPECT_THROW((void)parse_multivector("x", 2), parse_error);
  EXPECT_THROW((void)parse_multivector("e1 +", 2), parse_error);
  EXPECT_THROW((void)parse_multivector("(inf)e1", 2), parse_error);
}

TEST(Syntax, TextRoundTrip) {
  std::mt19937_64 rng(71);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 5;
    Multivector a(n);
    for (mask_t m = 0; m <= full_mask(n); ++m)
      if (g(rng) > 0)
        a.accumulate(m, {printable(g(rng)), printable(g(rng))});
    ASSERT_TRUE(approx_equal(parse_multivector(to_string(a), n), a, 1e-11)) << to_string(a);
  }
}

TEST(Syntax, OperatorSpecs) {
  EXPECT_EQ(parse_operator("create:e1", 2).matrix(), golden::create_e1_n2());
  EXPECT_EQ(parse_operator("leftmul:I", 2).matrix(), golden::pseudoscalar_n2());
  EXPECT_EQ(parse_operator("leftmul:e1e2", 3).matrix(), golden::e1e2_n3());
  EXPECT_TRUE(parse_operator("leftmul:1", 3).matrix().isIdentity());
  EXPECT_TRUE(parse_operator("identity", 3).matrix().isIdentity());
  EXPECT_TRUE(parse_operator("zero", 3).matrix().isZero());
  EXPECT_LE(oracle::max_abs(parse_operator("Pplus:e1", 2).matrix() - golden::p_plus_n2()), 1e-12);
  EXPECT_LE(oracle::max_abs(parse_operator("Pminus:e1", 2).matrix() - golden::p_minus_n2()), 1e-12);
  EXPECT_LE(oracle::max_abs(parse_operator("log:create:e1", 2).matrix() - golden::p_minus_n2()), 1e-10);
  EXPECT_LE(oracle::max_abs(parse_operator("e1obs:1,1,1,1", 2).matrix() - Matrix::Identity(4, 4)), 1e-12);
  EXPECT_THROW((void)parse_operator("e1obs:1,2,3", 2), parse_error);
  EXPECT_THROW((void)parse_operator("e1obs:1,2,3,4", 3), parse_error);
  EXPECT_THROW((void)parse_operator("create:e1e2", 2), parse_error);
  EXPECT_THROW((void)parse_operator("create:e3", 2), parse_error);
  EXPECT_THROW((void)parse_operator("annihilate:e1", 2), parse_error);
  EXPECT_THROW((void)parse_operator("create:e1", 13), cap_error);
  EXPECT_THROW((void)parse_operator("log:leftmul:2*e1", 2), contract_error);
}

TEST(Syntax, BaseOperatorSpecs) {
  EXPECT_EQ(parse_base_operator("identity", 3).rows(), Matrix::Identity(3, 3));
  const BaseOperator d = parse_base_operator("diag:1,2,3", 3);
  EXPECT_EQ(d.rows()(2, 2), complex(3));
  EXPECT_EQ(parse_base_operator("proj:e2", 3).rows()(1, 1), complex(1));
  EXPECT_THROW((void)parse_base_operator("diag:1,2", 3), parse_error);
  EXPECT_THROW((void)parse_base_operator("proj:e1e2", 3), parse_error);
  EXPECT_THROW((void)parse_base_operator("rot", 3), parse_error);
}

TEST(Syntax, RealList) {
  EXPECT_EQ(parse_real_list("1,0.5,0.25"), (std::vector<double>{1, 0.5, 0.25}));
  EXPECT_EQ(parse_real_list(" -1e-3 , 2 "), (std::vector<double>{-1e-3, 2}));
  EXPECT_THROW((void)parse_real_list(""), parse_error);
  EXPECT_THROW((void)parse_real_list("1,,2"), parse_error);
  EXPECT_THROW((void)parse_real_list("1;2"), parse_error);
}

TEST(Json, MultivectorSchemaAndRoundTrip) {
  Multivector a(3);
  a.accumulate(0b011, -2.0);
  a.accumulate(0b000, 1.0);
  const json j = to_json(a);
  EXPECT_EQ(j.dump(), R"({"n":3,"terms":[{"blade":"1","im":0.0,"re":1.0},{"blade":"e1e2","im":0.0,"re":-2.0}]})");
  EXPECT_TRUE(approx_equal(multivector_from_json(j), a));
  EXPECT_TRUE(approx_equal(multivector_from_json(json::parse(R"({"n":2,"terms":[{"blade":"I","re":0.5}]})")),
                           scale(0.5, Multivector::of(Blade(0b11, 2)))));
  EXPECT_THROW((void)multivector_from_json(json::parse(R"({"terms":[]})")), parse_error);
  EXPECT_THROW((void)multivector_from_json(json::parse(R"({"n":2,"terms":[{"blade":"e3"}]})")), parse_error);
  EXPECT_THROW((void)multivector_from_json(json::parse(R"({"n":2,"terms":{}})")), parse_error);
}

TEST(Json, OperatorSchemaAndRoundTrip) {
  const Operator c = creation_operator(CreationSpec(2, 2));
  const json j = to_json(c);
  EXPECT_EQ(j.at("order"), "grade-lex");
  EXPECT_EQ(j.at("rows").size(), 4U);
  EXPECT_EQ(j.at("rows")[1][3], json::array({-1.0, 0.0}));
  EXPECT_EQ(operator_from_json(j).matrix(), c.matrix());
  const Operator p = parse_operator("Pplus:e1", 3);
  EXPECT_LE(max_entry_distance(operator_from_json(json::parse(to_json(p).dump())), p), 1e-12);
  EXPECT_THROW((void)operator_from_json(json::parse(R"({"n":1,"rows":[[1,0]]})")), parse_error);
  EXPECT_THROW((void)operator_from_json(json::parse(R"({"n":1,"order":"lex","rows":[[1,0],[0,1]]})")),
               parse_error);
  EXPECT_NO_THROW((void)operator_from_json(json::parse(R"({"n":1,"rows":[[1,0],[0,[0,1]]]})")));
}

TEST(Json, BaseOperatorSchema) {
  const BaseOperator b = base_operator_from_json(json::parse(R"({"n":2,"rows":[[0,1],[[0,1],2]]})"));
  EXPECT_EQ(b.rows()(0, 1), complex(1));
  EXPECT_EQ(b.rows()(1, 0), complex(0, 1));
  EXPECT_EQ(base_operator_from_json(to_json(b)).rows(), b.rows());
  EXPECT_THROW((void)base_operator_from_json(json::parse(R"({"n":2,"rows":[[0,1]]})")), parse_error);
  EXPECT_THROW((void)base_operator_from_json(json::parse(R"({"n":2,"rows":[[0,"a"],[1,2]]})")), parse_error);
}
