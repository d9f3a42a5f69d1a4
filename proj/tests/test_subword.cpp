#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brickforge/subword.hpp"

#include <set>

using namespace brickforge;

namespace {

SubwordComplex a3_spec() {
  return SubwordComplex::cluster_word(build_cartan(CartanType{'A', 3}), {1, 2, 3});
}
SubwordComplex b2_spec() {
  return SubwordComplex::cluster_word(build_cartan(CartanType{'B', 2}), {1, 2});
}

}  // namespace

TEST_CASE("cluster words of the worked examples") {
  CHECK(a3_spec().word() == Word{1, 2, 3, 1, 2, 3, 1, 2, 1});
  CHECK(b2_spec().word() == Word{1, 2, 1, 2, 1, 2});
  CHECK(a3_spec().word_length() == 9);
  CHECK(a3_spec().facet_size() == 3);
}

TEST_CASE("build_spec rejects words without w0") {
  CartanMatrix b2 = build_cartan(CartanType{'B', 2});
  CHECK_THROWS_AS(SubwordComplex(b2, Word{1, 2, 1}), DemazureTooShort);
  // A single reduced word of w0 is a valid spec with the empty facet.
  SubwordComplex tight(b2, Word{1, 2, 1, 2});
  CHECK(tight.facets() == std::vector<Facet>{{}});
  CHECK(tight.greedy_facet() == Facet{});
  CHECK(tight.antigreedy_facet() == Facet{});
}

TEST_CASE("is_facet on paper rows") {
  SubwordComplex a3 = a3_spec();
  CHECK(a3.is_facet({1, 2, 3}));
  CHECK_FALSE(a3.is_facet({1, 2, 4}));
  CHECK(b2_spec().is_facet({5, 6}));
}

TEST_CASE("facet lists match the paper") {
  std::vector<Facet> a3_expected{{1, 2, 3}, {1, 2, 9}, {1, 3, 7}, {1, 7, 8}, {1, 8, 9},
                                 {2, 3, 4}, {2, 4, 9}, {3, 4, 5}, {3, 5, 7}, {4, 5, 6},
                                 {4, 6, 9}, {5, 6, 7}, {6, 7, 8}, {6, 8, 9}};
  CHECK(a3_spec().facets() == a3_expected);

  std::vector<Facet> b2_expected{{1, 2}, {1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
  CHECK(b2_spec().facets() == b2_expected);

  SubwordComplex q212212(build_cartan(CartanType{'B', 2}), {2, 1, 2, 2, 1, 2});
  CHECK(q212212.facets() == std::vector<Facet>{{1, 3}, {1, 4}, {3, 6}, {4, 6}});
}

TEST_CASE("flip enumeration equals brute force") {
  SubwordComplex a3 = a3_spec();
  CHECK(a3.facets() == a3.facets_bruteforce());
  SubwordComplex b2 = b2_spec();
  CHECK(b2.facets() == b2.facets_bruteforce());
  SubwordComplex q(build_cartan(CartanType{'B', 2}), {1, 2, 1, 2, 1, 2, 1});
  CHECK(q.facets() == q.facets_bruteforce());
  CHECK(q.facets().size() == 10);
}

TEST_CASE("root function values from the paper tables") {
  SubwordComplex a3 = a3_spec();
  // Row 129, column 6 is ambient 10-10 = (1,1,0)_Delta.
  CHECK(a3.root_function({1, 2, 9}, 6) == IVec{1, 1, 0});
  // Column 1 is always alpha_{q_1}.
  for (const Facet& I : a3.facets()) CHECK(a3.root_function(I, 1) == IVec{1, 0, 0});
  // B2 row 45, column 5 is ambient -2-2 = -(1,2)_Delta.
  CHECK(b2_spec().root_function({4, 5}, 5) == IVec{-1, -2});
}

TEST_CASE("weight function values from the paper tables") {
  SubwordComplex b2 = b2_spec();
  // Row 12, column 5 is ambient 02 = alpha_2, i.e. weight coords C * (0,1).
  CHECK(b2.weight_function_root_coords({1, 2}, 5) == QVec{Rat(0), Rat(1)});
  // Column k = 1 is omega_{q_1} for any facet.
  CHECK(b2.weight_function({1, 2}, 1) == IVec{1, 0});
  // A3 row 137, column 5 is ambient 1010, i.e. (1/2, 0, 1/2) in root
  // coordinates after subtracting the diagonal.
  SubwordComplex a3 = a3_spec();
  CHECK(a3.weight_function_root_coords({1, 3, 7}, 5) == QVec{Rat(1, 2), Rat(0), Rat(1, 2)});
}

TEST_CASE("flips") {
  SubwordComplex a3 = a3_spec();
  auto [j1, p1] = a3.flip({1, 2, 3}, 1);
  CHECK(j1 == Facet{2, 3, 4});
  CHECK(p1 == 4);

  SubwordComplex b2 = b2_spec();
  auto [j2, p2] = b2.flip({1, 2}, 1);
  CHECK(j2 == Facet{2, 3});
  CHECK(p2 == 3);

  // Involution on every facet/position pair.
  for (const Facet& I : a3.facets())
    for (int i : I) {
      auto [J, j] = a3.flip(I, i);
      auto [back, i2] = a3.flip(J, j);
      CHECK(back == I);
      CHECK(i2 == i);
    }
}

TEST_CASE("greedy and antigreedy facets") {
  CHECK(a3_spec().greedy_facet() == Facet{1, 2, 3});
  CHECK(a3_spec().antigreedy_facet() == Facet{6, 8, 9});
  CHECK(b2_spec().greedy_facet() == Facet{1, 2});
  CHECK(b2_spec().antigreedy_facet() == Facet{5, 6});
}

TEST_CASE("canonical long flip sequences") {
  FlipSequence a3 = a3_spec().canonical_long_flip_sequence();
  std::vector<Facet> expected{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6},
                              {5, 6, 7}, {6, 7, 8}, {6, 8, 9}};
  CHECK(a3.facets == expected);
  CHECK(a3.pivots.size() == 6);
  for (auto [i, j] : a3.pivots) CHECK(i < j);
  // Every position n+1..n+N enters exactly once.
  std::set<int> entered;
  for (auto [i, j] : a3.pivots) entered.insert(j);
  CHECK(entered == std::set<int>{4, 5, 6, 7, 8, 9});

  FlipSequence b2 = b2_spec().canonical_long_flip_sequence();
  CHECK(b2.facets == std::vector<Facet>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});

  SubwordComplex a1 = SubwordComplex::cluster_word(build_cartan(CartanType{'A', 1}), {1});
  FlipSequence s = a1.canonical_long_flip_sequence();
  CHECK(s.facets == std::vector<Facet>{{1}, {2}});

  // Words without the cluster shape are rejected.
  SubwordComplex tight(build_cartan(CartanType{'B', 2}), {1, 2, 1, 2});
  CHECK_THROWS_AS(tight.canonical_long_flip_sequence(), NotClusterWord);
}

TEST_CASE("weights at positions <= n agree across facets (cluster words)") {
  SubwordComplex a3 = a3_spec();
  Facet antigreedy = a3.antigreedy_facet();
  for (const Facet& I : a3.facets())
    for (int k = 1; k <= a3.rank(); ++k)
      CHECK(a3.weight_function(I, k) == a3.weight_function(antigreedy, k));
}

TEST_CASE("root independence and full support") {
  CartanMatrix b2 = build_cartan(CartanType{'B', 2});
  SubwordComplex q1(b2, {1, 2, 1, 2, 1, 2, 1});
  CHECK_FALSE(q1.is_root_independent());
  CHECK(q1.has_full_support());

  SubwordComplex q2(b2, {2, 1, 2, 2, 1, 2});
  CHECK(q2.is_root_independent());
  CHECK_FALSE(q2.has_full_support());

  CHECK(b2_spec().is_root_independent());
  CHECK(b2_spec().has_full_support());
}

TEST_CASE("ray well-definedness: shared positions share weights") {
  SubwordComplex a3 = a3_spec();
  // Weight-table column 6 is constant across the facets containing 6.
  IVec expected = a3.weight_function({4, 5, 6}, 6);
  for (const Facet& I : {Facet{4, 6, 9}, Facet{5, 6, 7}, Facet{6, 7, 8}, Facet{6, 8, 9}})
    CHECK(a3.weight_function(I, 6) == expected);
}
