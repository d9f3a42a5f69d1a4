#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brickforge/cluster.hpp"
#include "brickforge/tables.hpp"

#include <map>

using namespace brickforge;

namespace {

CartanMatrix A3() { return build_cartan(CartanType{'A', 3}); }
CartanMatrix B2() { return build_cartan(CartanType{'B', 2}); }

std::map<IVec, ClusterVariableRecord> by_d(const std::vector<ClusterVariableRecord>& records) {
  std::map<IVec, ClusterVariableRecord> out;
  for (const auto& r : records) out[r.d_vector] = r;
  return out;
}

}  // namespace

TEST_CASE("initial mutation matrices of the worked examples") {
  ExtendedMutationMatrix a3 = initial_matrix(A3(), {1, 2, 3});
  Int a3_expected[6][3] = {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 3; ++j) CHECK(a3.at(i, j) == a3_expected[i][j]);

  ExtendedMutationMatrix b2 = initial_matrix(B2(), {1, 2});
  Int b2_expected[4][2] = {{0, 1}, {-2, 0}, {1, 0}, {0, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) CHECK(b2.at(i, j) == b2_expected[i][j]);

  ExtendedMutationMatrix a1 = initial_matrix(build_cartan(CartanType{'A', 1}), {1});
  CHECK(a1.at(0, 0) == 0);
  CHECK(a1.at(1, 0) == 1);

  CHECK(a3.exchange_part_skew_symmetrizable(A3()));
  CHECK(b2.exchange_part_skew_symmetrizable(B2()));
}

TEST_CASE("single mutations") {
  Seed b2 = Seed::initial(B2(), {1, 2});
  Seed m1 = mutate(b2, 1);
  // x_1' = (x_2^2 + y_1) / x_1.
  Laurent expected = parse_variable_expr("(x2^2 + y1)/x1", 2);
  CHECK(m1.variables[0] == expected);
  // Mutation is an involution on the seed.
  Seed back = mutate(m1, 1);
  CHECK(back.variables[0] == b2.variables[0]);
  CHECK(back.matrix == b2.matrix);

  Seed a3 = Seed::initial(A3(), {1, 2, 3});
  CHECK(mutate(a3, 1).variables[0] == parse_variable_expr("(x2 + y1)/x1", 3));
}

TEST_CASE("worked-example cluster variables match the tables exactly") {
  auto b2 = by_d(all_cluster_variables(B2(), {1, 2}));
  REQUIRE(b2.size() == 6);
  CHECK(b2.at(IVec{1, 0}).expr == parse_variable_expr("(x2^2 + y1)/x1", 2));
  CHECK(b2.at(IVec{1, 1}).expr == parse_variable_expr("(x1*y1*y2 + y1 + x2^2)/(x1*x2)", 2));
  CHECK(b2.at(IVec{1, 2}).expr ==
        parse_variable_expr("(x1^2*y1*y2^2 + 2*x1*y1*y2 + y1 + x2^2)/(x1*x2^2)", 2));
  CHECK(b2.at(IVec{0, 1}).expr == parse_variable_expr("(x1*y2 + 1)/x2", 2));
  CHECK(b2.at(IVec{1, 2}).g_vector == IVec{-1, 0});
  CHECK(b2.at(IVec{1, 0}).g_vector == IVec{-1, 2});
  CHECK(b2.at(IVec{1, 2}).f_polynomial == parse_polynomial("y1*y2^2 + 2*y1*y2 + y1 + 1", 2));

  auto a3 = by_d(all_cluster_variables(A3(), {1, 2, 3}));
  REQUIRE(a3.size() == 9);
  CHECK(a3.at(IVec{1, 1, 0}).expr == parse_variable_expr("(x1*y1*y2 + x3*y1 + x2*x3)/(x1*x2)", 3));
  CHECK(a3.at(IVec{1, 1, 0}).g_vector == IVec{-1, 0, 1});
  CHECK(a3.at(IVec{1, 1, 1}).f_polynomial == parse_polynomial("y1*y2*y3 + y1*y2 + y1 + 1", 3));
  CHECK(a3.at(IVec{0, 1, 1}).g_vector == IVec{0, -1, 0});
  // Initial records carry g = e_i and no F-polynomial.
  CHECK(a3.at(IVec{-1, 0, 0}).g_vector == IVec{1, 0, 0});
  CHECK_FALSE(a3.at(IVec{-1, 0, 0}).f_polynomial.has_value());
}

TEST_CASE("record counts and the d-vector bijection") {
  for (CartanType t : {CartanType{'A', 2}, CartanType{'B', 3}, CartanType{'G', 2}, CartanType{'D', 4}}) {
    CartanMatrix C = build_cartan(t);
    for (const Word& c : coxeter_elements(C)) {
      auto records = all_cluster_variables(C, c);
      int n = t.rank;
      CHECK(static_cast<int>(records.size()) == n + t.positive_root_count());
      std::vector<IVec> phi = positive_roots(C);
      std::size_t idx = 0;
      for (const auto& rec : records) {
        if (rec.initial) continue;
        CHECK(rec.d_vector == phi[idx++]);  // output follows positive-root order
        // Laurent phenomenon: y-exponents nonnegative, coefficients positive integers.
        for (const auto& [e, coeff] : rec.expr.terms()) {
          for (int i = n; i < 2 * n; ++i) CHECK(e[static_cast<std::size_t>(i)] >= 0);
          CHECK(coeff > 0);
          CHECK(denominator(coeff) == 1);
        }
        CHECK(check_extremal_exponents(*rec.f_polynomial, rec.d_vector, n));
      }
    }
  }
}

TEST_CASE("A1 has a single non-initial variable") {
  CartanMatrix a1 = build_cartan(CartanType{'A', 1});
  auto records = all_cluster_variables(a1, {1});
  REQUIRE(records.size() == 2);
  CHECK(records[1].d_vector == IVec{1});
  CHECK(records[1].g_vector == IVec{-1});
  CHECK(records[1].f_polynomial == parse_polynomial("y1 + 1", 1));
}

TEST_CASE("newton polytopes of F-polynomials") {
  auto b2 = by_d(all_cluster_variables(B2(), {1, 2}));
  CHECK(newton_polytope(*b2.at(IVec{1, 1}).f_polynomial, 2) ==
        VPolytope::from_integer_points(2, {{0, 0}, {1, 0}, {1, 1}}));
  // (1,1) is not a vertex of Newton(F_{12}).
  CHECK(newton_polytope(*b2.at(IVec{1, 2}).f_polynomial, 2) ==
        VPolytope::from_integer_points(2, {{0, 0}, {1, 0}, {1, 2}}));
  CHECK(newton_polytope(Laurent::constant(4, 1), 2) == VPolytope::from_integer_points(2, {{0, 0}}));
}

TEST_CASE("check_extremal_exponents rejects bad data") {
  Laurent f = parse_polynomial("y1 + y2 + 1", 2);
  CHECK_FALSE(check_extremal_exponents(f, {1, 1}, 2));
  CHECK(check_extremal_exponents(parse_polynomial("y1*y2 + y1 + 1", 2), {1, 1}, 2));
  CHECK_FALSE(check_extremal_exponents(parse_polynomial("y1*y2 + y1", 2), {1, 1}, 2));
}

TEST_CASE("laurent division") {
  Laurent num = parse_polynomial("x1^2*y1 + x1*x2", 2);
  Laurent den = parse_polynomial("x1", 2);
  CHECK(num.divide_exact(den) == parse_polynomial("x1*y1 + x2", 2));
  CHECK_THROWS_AS(parse_polynomial("x1 + x2", 2).divide_exact(parse_polynomial("x1 + 1", 2)),
                  NonLaurent);
  CHECK_THROWS_AS(parse_polynomial("y1 + 1", 1).divide_exact(Laurent(2)), std::invalid_argument);
}

TEST_CASE("seed budget guard") {
  CHECK_THROWS_AS(all_cluster_variables(A3(), {1, 2, 3}, 3), BudgetExceeded);
}
