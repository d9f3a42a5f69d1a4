#include "brickforge/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace brickforge {

GroupElement::GroupElement(int n) : n_(n), m_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  for (int i = 0; i < n; ++i) m_[static_cast<std::size_t>(i * n + i)] = 1;
}

IVec GroupElement::apply(const IVec& v) const {
  IVec r(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
  return r;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  GroupElement r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Int s = 0;
      for (int k = 0; k < n_; ++k) s += at(i, k) * o.at(k, j);
      r.m_[static_cast<std::size_t>(i * n_ + j)] = s;
    }
  return r;
}

bool GroupElement::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IVec GroupElement::column(int j) const {
  IVec r(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) r[static_cast<std::size_t>(i)] = at(i, j - 1);
  return r;
}

bool GroupElement::column_positive(int j) const {
  // Images of roots have all coordinates of one sign.
  for (int i = 0; i < n_; ++i) {
    Int x = at(i, j - 1);
    if (x > 0) return true;
    if (x < 0) return false;
  }
  throw std::logic_error("GroupElement: zero column");
}

GroupElement simple_reflection(const CartanMatrix& C, int i) {
  int n = C.rank();
  GroupElement s(n);
  std::vector<Int> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m[static_cast<std::size_t>(r * n + c)] = (r == c ? 1 : 0) - (r == i - 1 ? C.at(i - 1, c) : 0);
  return GroupElement(n, std::move(m));
}

GroupElement group_of_word(const CartanMatrix& C, const Word& w) {
  GroupElement g(C.rank());
  for (int s : w) g = g * simple_reflection(C, s);
  return g;
}

IVec act_on_root(const CartanMatrix& C, const Word& w, IVec v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = reflect(C, *it, v);
  return v;
}

QVec act_on_root(const CartanMatrix& C, const Word& w, QVec v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = reflect(C, *it, v);
  return v;
}

IVec act_on_weight(const CartanMatrix& C, const Word& w, IVec d) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) d = reflect_weight(C, *it, d);
  return d;
}

QVec act_on_weight(const CartanMatrix& C, const Word& w, QVec d) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int i = *it;
    Rat di = d[static_cast<std::size_t>(i - 1)];
    for (int t = 0; t < C.rank(); ++t) d[static_cast<std::size_t>(t)] -= di * C.at(t, i - 1);
  }
  return d;
}

int length(const CartanMatrix& C, const GroupElement& g) {
  int count = 0;
  for (const IVec& beta : positive_roots(C)) {
    IVec img = g.apply(beta);
    for (Int x : img) {
      if (x < 0) {
        ++count;
        break;
      }
      if (x > 0) break;
    }
  }
  return count;
}

bool is_reduced(const CartanMatrix& C, const Word& w) {
  GroupElement g(C.rank());
  for (int s : w) {
    if (!g.column_positive(s)) return false;
    g = g * simple_reflection(C, s);
  }
  return true;
}

GroupElement longest_element(const CartanMatrix& C) {
  int n = C.rank();
  GroupElement g(n);
  for (;;) {
    int ascent = 0;
    for (int i = 1; i <= n; ++i)
      if (g.column_positive(i)) {
        ascent = i;
        break;
      }
    if (ascent == 0) return g;
    g = g * simple_reflection(C, ascent);
  }
}

GroupElement demazure_product(const CartanMatrix& C, const Word& w) {
  GroupElement g(C.rank());
  for (int s : w)
    if (g.column_positive(s)) g = g * simple_reflection(C, s);
  return g;
}

void check_coxeter_word(const CartanMatrix& C, const Word& w) {
  int n = C.rank();
  if (static_cast<int>(w.size()) != n) throw std::invalid_argument("Coxeter word must have length n");
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int s : w) {
    if (s < 1 || s > n || seen[static_cast<std::size_t>(s)])
      throw std::invalid_argument("Coxeter word must use each letter exactly once");
    seen[static_cast<std::size_t>(s)] = true;
  }
}

Word sorting_word(const CartanMatrix& C, const Word& coxeter_word) {
  check_coxeter_word(C, coxeter_word);
  // Track u^{-1} for u = prefix^{-1} w0; s is a left descent of u iff
  // u^{-1}(alpha_s) is negative. w0 is an involution, so w0^{-1} = w0.
  GroupElement m = longest_element(C);
  Word out;
  std::size_t pos = 0;
  while (!m.is_identity()) {
    int s = coxeter_word[pos % coxeter_word.size()];
    ++pos;
    if (!m.column_positive(s)) {
      out.push_back(s);
      m = m * simple_reflection(C, s);
    }
  }
  return out;
}

std::vector<Word> coxeter_elements(const CartanMatrix& C) {
  int n = C.rank();
  Word perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::map<GroupElement, Word> reps;
  do {
    GroupElement g = group_of_word(C, perm);
    reps.emplace(g, perm);  // keeps the lexicographically first word
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Word> out;
  out.reserve(reps.size());
  for (auto& [g, w] : reps) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace brickforge
