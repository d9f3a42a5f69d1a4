#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brickforge/brick.hpp"
#include "brickforge/tables.hpp"

#include <set>

using namespace brickforge;

namespace {

struct B2Data {
  CartanMatrix C = build_cartan(CartanType{'B', 2});
  SubwordComplex spec = SubwordComplex::cluster_word(C, {1, 2});
  BrickGeometry brick{spec};
};

struct A3Data {
  CartanMatrix C = build_cartan(CartanType{'A', 3});
  SubwordComplex spec = SubwordComplex::cluster_word(C, {1, 2, 3});
  BrickGeometry brick{spec};
};

}  // namespace

TEST_CASE("position <-> root bijection") {
  A3Data a3;
  CHECK(a3.brick.root_of_position(6) == IVec{1, 1, 1});
  CHECK(a3.brick.root_of_position(4) == IVec{1, 0, 0});
  CHECK(a3.brick.position_of_root({1, 1, 1}) == 6);
  B2Data b2;
  CHECK(b2.brick.root_of_position(5) == IVec{1, 2});
  CHECK(b2.brick.position_of_root({1, 2}) == 5);
  CHECK_THROWS_AS(b2.brick.position_of_root({3, 3}), RootNotPositive);
  // Mutually inverse on all positions, and the image is all of Phi+.
  std::set<IVec> image;
  for (int k = a3.spec.rank() + 1; k <= a3.spec.word_length(); ++k) {
    image.insert(a3.brick.root_of_position(k));
    CHECK(a3.brick.position_of_root(a3.brick.root_of_position(k)) == k);
  }
  std::vector<IVec> phi = positive_roots(a3.C);
  CHECK(image == std::set<IVec>(phi.begin(), phi.end()));
}

TEST_CASE("shifted weights from the paper tables") {
  A3Data a3;
  CHECK(a3.brick.shifted_weight({1, 2, 9}, {1, 1, 1}) == IVec{1, 1, 0});
  for (const IVec& beta : positive_roots(a3.C))
    CHECK(is_zero(a3.brick.shifted_weight(a3.spec.antigreedy_facet(), beta)));
  B2Data b2;
  CHECK(b2.brick.shifted_weight({3, 4}, {1, 2}) == IVec{1, 2});
  // Greedy row carries beta itself.
  for (const IVec& beta : positive_roots(b2.C))
    CHECK(b2.brick.shifted_weight(b2.spec.greedy_facet(), beta) == beta);
}

TEST_CASE("brick vectors of the worked examples") {
  A3Data a3;
  CHECK(a3.brick.brick_vector({1, 2, 3}) == IVec{3, 4, 3});
  std::vector<IVec> expected{{3, 4, 3}, {3, 4, 0}, {3, 2, 3}, {3, 0, 1}, {3, 0, 0},
                             {2, 4, 3}, {2, 4, 0}, {1, 3, 3}, {1, 2, 3}, {0, 2, 2},
                             {0, 2, 0}, {0, 1, 2}, {0, 0, 1}, {0, 0, 0}};
  std::size_t row = 0;
  for (const Facet& I : a3.spec.facets()) CHECK(a3.brick.brick_vector(I) == expected[row++]);

  B2Data b2;
  CHECK(b2.brick.brick_vector({2, 3}) == IVec{2, 4});
  std::vector<IVec> b2_expected{{3, 4}, {3, 0}, {2, 4}, {1, 3}, {0, 1}, {0, 0}};
  row = 0;
  for (const Facet& I : b2.spec.facets()) CHECK(b2.brick.brick_vector(I) == b2_expected[row++]);
}

TEST_CASE("restricted brick vectors of the worked examples") {
  A3Data a3;
  std::vector<IVec> x;
  for (const IVec& beta : positive_roots(a3.C))
    if (beta != IVec{1, 1, 1}) x.push_back(beta);
  CHECK(a3.brick.restricted_brick_vector({3, 4, 5}, x) == IVec{0, 2, 2});
  CHECK(a3.brick.restricted_brick_vector({4, 5, 6}, x) == IVec{0, 2, 2});
  CHECK(a3.brick.restricted_brick_vector({3, 5, 7}, x) == IVec{0, 1, 2});
  CHECK(a3.brick.restricted_brick_vector({5, 6, 7}, x) == IVec{0, 1, 2});
}

TEST_CASE("brick polytopes") {
  B2Data b2;
  VPolytope asso = b2.brick.asso_polytope();
  CHECK(asso == VPolytope::from_integer_points(2, {{0, 0}, {0, 1}, {1, 3}, {2, 4}, {3, 4}, {3, 0}}));
  A3Data a3;
  CHECK(a3.brick.asso_polytope().vertex_count() == a3.spec.facets().size());

  CartanMatrix a1 = build_cartan(CartanType{'A', 1});
  SubwordComplex spec1 = SubwordComplex::cluster_word(a1, {1});
  BrickGeometry brick1(spec1);
  CHECK(brick1.asso_polytope() == VPolytope::from_integer_points(1, {{0}, {1}}));
}

TEST_CASE("summand polytopes of the worked examples") {
  A3Data a3;
  CHECK(a3.brick.summand_polytope({1, 1, 1}) ==
        VPolytope::from_integer_points(3, {{1, 1, 1}, {1, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
  CHECK(a3.brick.summand_polytope({1, 0, 0}) ==
        VPolytope::from_integer_points(3, {{0, 0, 0}, {1, 0, 0}}));
  B2Data b2;
  CHECK(b2.brick.summand_polytope({1, 2}) ==
        VPolytope::from_integer_points(2, {{1, 2}, {1, 0}, {0, 0}}));
}

TEST_CASE("restricted sums and the Minkowski decomposition") {
  B2Data b2;
  std::vector<IVec> phi = positive_roots(b2.C);
  std::vector<IVec> x;
  for (const IVec& beta : phi)
    if (beta != IVec{1, 2}) x.push_back(beta);
  CHECK(b2.brick.asso_x_polytope(x) ==
        VPolytope::from_integer_points(2, {{2, 2}, {2, 0}, {1, 2}, {0, 1}, {0, 0}}));
  CHECK(b2.brick.asso_x_polytope({}) == VPolytope::from_integer_points(2, {{0, 0}}));
  CHECK(b2.brick.asso_x_polytope(phi) == b2.brick.asso_polytope());

  // Every subset of Phi+ satisfies the decomposition in rank 2.
  for (unsigned mask = 0; mask < (1u << phi.size()); ++mask) {
    std::vector<IVec> subset;
    for (std::size_t b = 0; b < phi.size(); ++b)
      if (mask & (1u << b)) subset.push_back(phi[b]);
    VPolytope sum = VPolytope::from_integer_points(2, {{0, 0}});
    for (const IVec& beta : subset) sum = minkowski_sum(sum, b2.brick.summand_polytope(beta));
    CHECK(b2.brick.asso_x_polytope(subset) == sum);
  }
}

TEST_CASE("column polytopes of the counterexample words") {
  CartanMatrix C = build_cartan(CartanType{'B', 2});
  SubwordComplex q1(C, {1, 2, 1, 2, 1, 2, 1});
  BrickGeometry b1(q1);
  CHECK(b1.column_polytope(1) == VPolytope::from_integer_points(2, {{0, 0}}));
  CHECK(b1.column_polytope(5) ==
        VPolytope::from_integer_points(2, {{0, 0}, {1, 0}, {1, 2}, {2, 2}}));
  CHECK(b1.column_polytope(4) == VPolytope::from_integer_points(2, {{0, 0}, {1, 0}, {1, 1}}));
  CHECK(b1.column_polytope(6) == VPolytope::from_integer_points(2, {{0, 0}, {0, 1}, {1, 1}}));
  CHECK(b1.column_polytope(3) == b1.column_polytope(7));

  SubwordComplex q2(C, {2, 1, 2, 2, 1, 2});
  BrickGeometry b2(q2);
  CHECK(b2.column_polytope(4) ==
        VPolytope::from_integer_points(2, {{0, 0}, {0, 1}, {1, 1}, {1, 2}}));
  CHECK(b2.column_polytope(1) == VPolytope::from_integer_points(2, {{0, 0}}));
  CHECK(b2.column_polytope(5) == VPolytope::from_integer_points(2, {{0, 0}, {0, 2}}));
}

TEST_CASE("g-vector fans of the worked examples") {
  B2Data b2;
  Fan fan = b2.brick.g_vector_fan();
  CHECK(fan.rays.size() == 6);
  CHECK(fan.maximal_cones.size() == 6);
  // Initial cone spans the first two rays: omega_1, omega_2 in coweight coords.
  CHECK(fan.rays[0] == QVec{Rat(2), Rat(0)});
  CHECK(fan.rays[1] == QVec{Rat(0), Rat(1)});
  CHECK(b2.brick.ray_weight_coords(1) == IVec{1, 0});
  CHECK(b2.brick.ray_weight_coords(3) == IVec{-1, 2});
  CHECK(check_fan_complete(fan, 5, 200));

  A3Data a3;
  Fan a3fan = a3.brick.g_vector_fan();
  CHECK(a3fan.rays.size() == 9);
  CHECK(a3fan.maximal_cones.size() == 14);
  CHECK(check_fan_complete(a3fan, 5, 200));
}

TEST_CASE("flip monotonicity of brick vectors") {
  B2Data b2;
  for (const Facet& I : b2.spec.facets())
    for (int i : I) {
      auto [J, j] = b2.spec.flip(I, i);
      if (i >= j) continue;
      IVec rho = b2.spec.root_function(I, i);
      IVec diff = ivec_sub(b2.brick.brick_vector(I), b2.brick.brick_vector(J));
      // diff = lambda * rho with integer lambda > 0.
      Int lambda = 0;
      for (std::size_t t = 0; t < rho.size(); ++t)
        if (rho[t] != 0) {
          lambda = diff[t] / rho[t];
          break;
        }
      CHECK(lambda > 0);
      for (std::size_t t = 0; t < rho.size(); ++t) CHECK(diff[t] == lambda * rho[t]);
    }
}

TEST_CASE("boundary degeneration loses vertices") {
  B2Data b2;
  std::vector<IVec> phi = positive_roots(b2.C);
  for (const IVec& gamma : phi) {
    std::vector<IVec> x;
    for (const IVec& beta : phi)
      if (beta != gamma) x.push_back(beta);
    CHECK(b2.brick.asso_x_polytope(x).vertex_count() < b2.spec.facets().size());
  }
}

TEST_CASE("table exports match the worked-example shapes") {
  B2Data b2;
  std::string shifted = shifted_table_tsv(b2.brick);
  CHECK(shifted.find("12\t1 0\t1 1\t1 2\t0 1\t3 4") != std::string::npos);
  std::string root = root_table_tsv(b2.spec, paper_ambient_basis(CartanType{'B', 2}));
  CHECK(root.find("45\t2 -2\t2 0\t2 2\t0 2\t-2 -2\t0 2") != std::string::npos);
  std::string weight = weight_table_tsv(b2.spec, paper_ambient_basis(CartanType{'B', 2}));
  CHECK(weight.find("56\t2 0\t1 1\t0 2\t-1 1\t-2 0\t-1 -1") != std::string::npos);
}
