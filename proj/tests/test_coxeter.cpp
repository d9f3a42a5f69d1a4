#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brickforge/cartan.hpp"
#include "brickforge/weyl.hpp"

#include <random>
#include <set>

using namespace brickforge;

namespace {

CartanMatrix A3() { return build_cartan(CartanType{'A', 3}); }
CartanMatrix B2() { return build_cartan(CartanType{'B', 2}); }

}  // namespace

TEST_CASE("Cartan matrices of the worked examples") {
  CartanMatrix a3 = A3();
  CHECK(a3.at(0, 0) == 2);
  CHECK(a3.at(0, 1) == -1);
  CHECK(a3.at(0, 2) == 0);
  CHECK(a3.at(1, 0) == -1);
  CHECK(a3.at(1, 2) == -1);
  CHECK(a3.at(2, 1) == -1);

  CartanMatrix b2 = B2();
  CHECK(b2.at(0, 1) == -1);
  CHECK(b2.at(1, 0) == -2);

  CartanMatrix a1 = build_cartan(CartanType{'A', 1});
  CHECK(a1.at(0, 0) == 2);

  CHECK_THROWS_AS(build_cartan(CartanType{'E', 5}), std::invalid_argument);
  CHECK_THROWS_AS(build_cartan(CartanType{'D', 3}), std::invalid_argument);
  CHECK_THROWS_AS(build_cartan(CartanType{'Q', 2}), std::invalid_argument);
}

TEST_CASE("symmetrizers") {
  CHECK(B2().symmetrizer() == IVec{2, 1});
  CHECK(A3().symmetrizer() == IVec{1, 1, 1});
  CHECK(build_cartan(CartanType{'G', 2}).symmetrizer() == IVec{1, 3});
  CHECK(build_cartan(CartanType{'C', 3}).symmetrizer() == IVec{1, 1, 2});
  CHECK(build_cartan(CartanType{'B', 3}).symmetrizer() == IVec{2, 2, 1});
  CHECK(build_cartan(CartanType{'F', 4}).symmetrizer() == IVec{2, 2, 1, 1});
}

TEST_CASE("reflections") {
  CHECK(reflect(A3(), 1, IVec{1, 0, 0}) == IVec{-1, 0, 0});
  CHECK(reflect(A3(), 1, IVec{0, 1, 0}) == IVec{1, 1, 0});
  CHECK(reflect(B2(), 2, IVec{1, 0}) == IVec{1, 2});
}

TEST_CASE("reflection is an involution (random vectors)") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> entry(-5, 5);
  for (CartanType t : {CartanType{'A', 3}, CartanType{'B', 2}, CartanType{'G', 2}, CartanType{'F', 4}}) {
    CartanMatrix C = build_cartan(t);
    for (int rep = 0; rep < 50; ++rep) {
      IVec v(static_cast<std::size_t>(C.rank()));
      for (Int& x : v) x = entry(rng);
      for (int i = 1; i <= C.rank(); ++i) CHECK(reflect(C, i, reflect(C, i, v)) == v);
    }
  }
}

TEST_CASE("weight coordinates") {
  // B2: omega_2 = (1/2)(1 2)_Delta has weight coordinates (0, 1).
  QVec w2{Rat(1, 2), Rat(1)};
  CHECK(weight_coords(B2(), w2) == QVec{Rat(0), Rat(1)});
  CHECK(root_coords(B2(), QVec{Rat(0), Rat(1)}) == w2);

  // A3: alpha_1 has weight coordinates (2, -1, 0), column 1 of C.
  CHECK(weight_coords(A3(), QVec{Rat(1), Rat(0), Rat(0)}) == QVec{Rat(2), Rat(-1), Rat(0)});
  // A3: omega_2 = (1/2)(1 2 1)_Delta, the Cartan-inverse value.
  CHECK(root_coords(A3(), QVec{Rat(0), Rat(1), Rat(0)}) == QVec{Rat(1, 2), Rat(1), Rat(1, 2)});
}

TEST_CASE("basis change commutes with the action (random)") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> entry(-4, 4);
  std::uniform_int_distribution<int> letter(1, 3);
  CartanMatrix C = A3();
  for (int rep = 0; rep < 40; ++rep) {
    Word w;
    for (int i = 0; i < 6; ++i) w.push_back(letter(rng));
    QVec v(3);
    for (Rat& x : v) x = entry(rng);
    CHECK(weight_coords(C, act_on_root(C, w, v)) == act_on_weight(C, w, weight_coords(C, v)));
  }
}

TEST_CASE("positive roots of the worked examples") {
  std::vector<IVec> a3_roots = positive_roots(A3());
  std::set<IVec> a3(a3_roots.begin(), a3_roots.end());
  std::set<IVec> a3_expected{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  CHECK(a3 == a3_expected);

  std::vector<IVec> b2_roots = positive_roots(B2());
  std::set<IVec> b2(b2_roots.begin(), b2_roots.end());
  std::set<IVec> b2_expected{{1, 0}, {1, 1}, {1, 2}, {0, 1}};
  CHECK(b2 == b2_expected);

  CHECK(positive_roots(build_cartan(CartanType{'A', 1})) == std::vector<IVec>{{1}});
}

TEST_CASE("positive root counts match the classification") {
  for (CartanType t : CartanType::all_up_to_rank(6)) {
    if (t.family == 'E') continue;  // E6 is slow-ish here and covered below
    CartanMatrix C = build_cartan(t);
    CHECK(static_cast<int>(positive_roots(C).size()) == t.positive_root_count());
  }
  CHECK(static_cast<int>(positive_roots(build_cartan(CartanType{'E', 6})).size()) == 36);
}

TEST_CASE("act: examples") {
  CartanMatrix C = A3();
  // Empty word is the identity.
  CHECK(act_on_root(C, {}, IVec{1, 2, 3}) == IVec{1, 2, 3});
  // s_1(omega_1) = omega_1 - alpha_1 in weight coordinates.
  IVec w1{1, 0, 0};
  CHECK(act_on_weight(C, {1}, w1) == IVec{-1, 1, 0});
  // B2 root-table entry: prefix 12 applied to alpha_1 gives (1,2)_Delta.
  CHECK(act_on_root(B2(), {1, 2}, IVec{1, 0}) == IVec{1, 2});
}

TEST_CASE("length and reducedness") {
  CartanMatrix C = B2();
  CHECK(length(C, GroupElement(2)) == 0);
  CHECK(is_reduced(C, {1, 2, 1, 2}));
  CHECK(length(C, group_of_word(C, {1, 2, 1, 2})) == 4);
  CHECK_FALSE(is_reduced(C, {1, 2, 1, 1}));
}

TEST_CASE("longest elements") {
  CartanMatrix b2 = B2();
  GroupElement w0 = longest_element(b2);
  CHECK(length(b2, w0) == 4);
  // w0 of B2 is -identity on the root space.
  for (const IVec& beta : positive_roots(b2)) {
    IVec img = w0.apply(beta);
    for (std::size_t i = 0; i < beta.size(); ++i) CHECK(img[i] == -beta[i]);
  }
  CHECK(length(A3(), longest_element(A3())) == 6);
  CartanMatrix a1 = build_cartan(CartanType{'A', 1});
  CHECK(length(a1, longest_element(a1)) == 1);
}

TEST_CASE("sorting words of the worked examples") {
  CHECK(sorting_word(A3(), {1, 2, 3}) == Word{1, 2, 3, 1, 2, 1});
  CHECK(sorting_word(B2(), {1, 2}) == Word{1, 2, 1, 2});
  CHECK(sorting_word(build_cartan(CartanType{'A', 1}), {1}) == Word{1});
}

TEST_CASE("sorting word is a reduced word for w0 and a subword of c^N") {
  for (CartanType t : {CartanType{'A', 3}, CartanType{'B', 3}, CartanType{'G', 2}, CartanType{'D', 4}}) {
    CartanMatrix C = build_cartan(t);
    for (const Word& c : coxeter_elements(C)) {
      Word w = sorting_word(C, c);
      CHECK(static_cast<int>(w.size()) == t.positive_root_count());
      CHECK(is_reduced(C, w));
      CHECK(group_of_word(C, w) == longest_element(C));
      // Subword of c^N: greedy match.
      std::size_t pos = 0;
      std::size_t scanned = 0;
      std::size_t limit = c.size() * static_cast<std::size_t>(t.positive_root_count());
      for (std::size_t i = 0; i < w.size(); ++i) {
        while (scanned < limit && c[scanned % c.size()] != w[i]) ++scanned;
        REQUIRE(scanned < limit);
        ++scanned;
        ++pos;
      }
    }
  }
}

TEST_CASE("demazure products") {
  CartanMatrix b2 = B2();
  CHECK(demazure_product(b2, {1, 2, 1, 2, 1, 2}) == longest_element(b2));
  CHECK(demazure_product(b2, {}) == GroupElement(2));
  CartanMatrix a1 = build_cartan(CartanType{'A', 1});
  CHECK(demazure_product(a1, {1, 1}) == group_of_word(a1, {1}));
}

TEST_CASE("coxeter elements") {
  CHECK(coxeter_elements(A3()).size() == 4);
  CHECK(coxeter_elements(B2()).size() == 2);
  CHECK(coxeter_elements(build_cartan(CartanType{'A', 1})).size() == 1);
  // Every representative is a genuine Coxeter word and all are distinct.
  std::set<GroupElement> elems;
  for (const Word& c : coxeter_elements(A3())) {
    check_coxeter_word(A3(), c);
    CHECK(elems.insert(group_of_word(A3(), c)).second);
  }
}

TEST_CASE("greedy ascent reaches w0 from any tie-breaking order") {
  CartanMatrix C = B2();
  GroupElement w0 = longest_element(C);
  // Alternative ascent: largest letter first must reach the same element.
  GroupElement g(2);
  for (;;) {
    int ascent = 0;
    for (int i = C.rank(); i >= 1; --i)
      if (g.column_positive(i)) {
        ascent = i;
        break;
      }
    if (ascent == 0) break;
    g = g * simple_reflection(C, ascent);
  }
  CHECK(g == w0);
}
