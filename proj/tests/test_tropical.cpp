#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brickforge/tropical.hpp"
#include "brickforge/verify.hpp"

using namespace brickforge;

namespace {

struct B2Trop {
  InstanceData inst = build_instance(CartanType{'B', 2}, {1, 2});
  TropMap map = build_trop_map(inst.records, 2);
  std::vector<GeneratorPolynomial> gens = build_generators(inst.records, 2);
};

QVec qv(std::initializer_list<int> xs) {
  QVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("coordinate functions match the worked rank-2 example") {
  B2Trop t;
  CHECK(t.map.betas.size() == 4);
  TropMap expected = b2_example_trop_map();
  for (std::size_t b = 0; b < expected.betas.size(); ++b) {
    bool found = false;
    for (std::size_t g = 0; g < t.map.betas.size(); ++g) {
      if (t.map.betas[g] != expected.betas[b]) continue;
      found = true;
      auto sorted = t.map.exponent_sets[g];
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == expected.exponent_sets[b]);
    }
    CHECK(found);
  }
}

TEST_CASE("coordinate count equals the number of positive roots") {
  InstanceData a1 = build_instance(CartanType{'A', 1}, {1});
  TropMap map = build_trop_map(a1.records, 1);
  CHECK(map.betas.size() == 1);
  // Single coordinate max(y1, 0) - x1.
  CHECK(map.exponent_sets[0] == std::vector<IVec>{{0, 0}, {0, 1}});
  CHECK(map.betas[0] == IVec{1});
}

TEST_CASE("argmax sets") {
  B2Trop t;
  // E_{10}: both exponents tie at w = 0.
  std::size_t idx10 = 0;
  while (t.map.betas[idx10] != IVec{1, 0}) ++idx10;
  CHECK(argmax_set(t.map.exponent_sets[idx10], QVec(4, Rat(0))).size() == 2);
  // E_{12} at x = 0, y = (1,1): the top exponent x1^2 y1 y2^2 wins, value 3.
  std::size_t idx12 = 0;
  while (t.map.betas[idx12] != IVec{1, 2}) ++idx12;
  auto arg = argmax_set(t.map.exponent_sets[idx12], qv({0, 0, 1, 1}));
  REQUIRE(arg.size() == 1);
  CHECK(arg[0] == IVec{2, 0, 1, 2});
  CHECK(argmax_set({IVec{1, 2}}, qv({5, 5})).size() == 1);
}

TEST_CASE("trop_eval values and signatures") {
  B2Trop t;
  TropValue at_zero = trop_eval(t.map, QVec(4, Rat(0)));
  for (const Rat& v : at_zero.values) CHECK(v == 0);
  for (const auto& s : at_zero.signature.sets) CHECK(s.size() >= 2);

  // w = (0,0,1,0): Psi_{10} = max(0, 1) = 1 with argmax the y1 exponent.
  TropValue v = trop_eval(t.map, qv({0, 0, 1, 0}));
  std::size_t idx10 = 0;
  while (t.map.betas[idx10] != IVec{1, 0}) ++idx10;
  CHECK(v.values[idx10] == 1);
  CHECK(v.signature.sets[idx10] == std::vector<IVec>{{0, 0, 1, 0}});

  // Positive homogeneity with identical signatures.
  QVec w = qv({3, -2, 5, 1});
  TropValue a = trop_eval(t.map, w);
  QVec w3 = w;
  for (Rat& x : w3) x *= 3;
  TropValue b = trop_eval(t.map, w3);
  for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(b.values[i] == 3 * a.values[i]);
  CHECK(a.signature == b.signature);

  // Shifting x by a translation changes values linearly, not y-signatures
  // at the x = 0 slice comparison points.
  CHECK_THROWS_AS(trop_eval(t.map, qv({1, 2, 3})), IndexMismatch);
}

TEST_CASE("positive hypersurface membership") {
  B2Trop t;
  // All dot products vanish at w = 0.
  for (const auto& g : t.gens) CHECK(is_on_positive_hypersurface(g, QVec(8, Rat(0))));
  // Strictly dominating the positive side leaves the hypersurface. Layout is
  // (x1, x2, x_beta..., y1, y2); raising x_beta alone does it.
  QVec w(8, Rat(0));
  w[2] = 10;
  CHECK_FALSE(is_on_positive_hypersurface(t.gens[0], w));
  CHECK_THROWS_AS(is_on_positive_hypersurface(t.gens[0], QVec(3, Rat(0))), IndexMismatch);
}

TEST_CASE("graph points lie on every positive hypersurface") {
  B2Trop t;
  CHECK(check_graph_membership(t.map, t.gens, 421, 200));
  InstanceData a3 = build_instance(CartanType{'A', 3}, {1, 2, 3});
  CHECK(check_graph_membership(build_trop_map(a3.records, 3), build_generators(a3.records, 3), 421, 100));
}

TEST_CASE("slice isomorphism on the worked examples") {
  B2Trop t;
  SliceReport b2 = verify_slice_isomorphism(*t.inst.brick, t.inst.records, 2024);
  CHECK(b2.ok());
  CHECK(b2.cone_count == 6);
  CHECK(b2.distinct_signatures == 6);

  InstanceData a3 = build_instance(CartanType{'A', 3}, {1, 2, 3});
  SliceReport ra3 = verify_slice_isomorphism(*a3.brick, a3.records, 2024);
  CHECK(ra3.ok());
  CHECK(ra3.cone_count == 14);
  CHECK(ra3.distinct_signatures == 14);

  InstanceData a1 = build_instance(CartanType{'A', 1}, {1});
  SliceReport ra1 = verify_slice_isomorphism(*a1.brick, a1.records, 2024);
  CHECK(ra1.ok());
  CHECK(ra1.cone_count == 2);
  CHECK(ra1.distinct_signatures == 2);
}

TEST_CASE("adjacent cones differ in at least one argmax set") {
  B2Trop t;
  Fan fan = t.inst.fan;
  TropMap map = t.map;
  std::vector<ArgmaxSignature> sigs;
  for (const auto& cone : fan.maximal_cones) {
    QVec y(2, Rat(0));
    for (int idx : cone) y = qvec_add(y, fan.rays[static_cast<std::size_t>(idx)]);
    QVec w(4, Rat(0));
    w[2] = y[0];
    w[3] = y[1];
    sigs.push_back(trop_eval(map, w).signature);
  }
  for (std::size_t a = 0; a < sigs.size(); ++a)
    for (std::size_t b = a + 1; b < sigs.size(); ++b) CHECK_FALSE(sigs[a] == sigs[b]);
}
