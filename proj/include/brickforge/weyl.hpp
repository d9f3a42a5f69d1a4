#pragma once

// Weyl-group elements as exact integer matrices over the root basis, plus the
// word combinatorics used by subword complexes: lengths, reduced words, the
// longest element, Demazure products, sorting words and Coxeter elements.

#include "brickforge/cartan.hpp"

#include <vector>

namespace brickforge {

// Letters are 1-based indices into the simple system.
using Word = std::vector<int>;

// Group element acting on root coordinates; column j = image of alpha_{j+1}.
class GroupElement {
 public:
  explicit GroupElement(int n);  // identity
  GroupElement(int n, std::vector<Int> m) : n_(n), m_(std::move(m)) {}

  int rank() const { return n_; }
  Int at(int r, int c) const { return m_[static_cast<std::size_t>(r * n_ + c)]; }

  IVec apply(const IVec& v) const;
  GroupElement operator*(const GroupElement& o) const;
  bool operator==(const GroupElement& o) const { return n_ == o.n_ && m_ == o.m_; }
  bool operator<(const GroupElement& o) const { return m_ < o.m_; }
  bool is_identity() const;

  // Image of alpha_j (1-based): column j, no matrix-vector product needed.
  IVec column(int j) const;

  // True iff this element sends alpha_j to a positive root, i.e.
  // length(this * s_j) > length(this).
  bool column_positive(int j) const;

 private:
  int n_;
  std::vector<Int> m_;  // row-major
};

// Matrix of the simple reflection s_i on root coordinates.
GroupElement simple_reflection(const CartanMatrix& C, int i);

// Product of the word's reflections, leftmost letter acting last.
GroupElement group_of_word(const CartanMatrix& C, const Word& w);

// Action of a word on a vector (root or weight coordinates as tagged).
IVec act_on_root(const CartanMatrix& C, const Word& w, IVec v);
QVec act_on_root(const CartanMatrix& C, const Word& w, QVec v);
IVec act_on_weight(const CartanMatrix& C, const Word& w, IVec d);
QVec act_on_weight(const CartanMatrix& C, const Word& w, QVec d);

// Coxeter length = number of positive roots sent to negative ones.
int length(const CartanMatrix& C, const GroupElement& g);

bool is_reduced(const CartanMatrix& C, const Word& w);

// The longest element, by greedy ascent (smallest ascent letter first).
GroupElement longest_element(const CartanMatrix& C);

// Left-to-right Demazure product: letters that would shorten are absorbed.
GroupElement demazure_product(const CartanMatrix& C, const Word& w);

// The c-sorting word of the longest element: lexicographically first subword
// of c^N that is a reduced word for w0.
Word sorting_word(const CartanMatrix& C, const Word& coxeter_word);

// One reduced word per distinct Coxeter element (lex-smallest representative).
std::vector<Word> coxeter_elements(const CartanMatrix& C);

// Requires each letter 1..n exactly once.
void check_coxeter_word(const CartanMatrix& C, const Word& w);

}  // namespace brickforge
