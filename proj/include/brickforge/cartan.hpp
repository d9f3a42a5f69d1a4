#pragma once

// Finite crystallographic Cartan data: types, Cartan matrices in Bourbaki
// labelling, root/weight coordinate changes and simple reflections.
//
// All vectors are stored in the simple-root basis (Delta) unless a function
// says otherwise; weight-basis (nabla) coordinates satisfy d = C * c.

#include "brickforge/numbers.hpp"

#include <string>
#include <vector>

namespace brickforge {

struct CartanType {
  char family;  // one of A, B, C, D, E, F, G
  int rank;

  bool valid() const;
  std::string name() const;  // e.g. "A3"

  // Number of positive roots for this type.
  int positive_root_count() const;

  static CartanType parse(const std::string& s);
  // All valid types with rank <= max_rank, in family-then-rank order.
  static std::vector<CartanType> all_up_to_rank(int max_rank);
};

class CartanMatrix {
 public:
  // Validates the generalized-Cartan conditions and finiteness (positive
  // leading principal minors). Throws std::invalid_argument otherwise.
  CartanMatrix(int n, std::vector<Int> entries);

  int rank() const { return n_; }
  Int at(int s, int t) const { return a_[static_cast<std::size_t>(s * n_ + t)]; }

  // Minimal positive integer symmetrizer: d[s] * a[s][t] == d[t] * a[t][s].
  const IVec& symmetrizer() const { return sym_; }

  bool operator==(const CartanMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_;
  std::vector<Int> a_;  // row-major
  IVec sym_;
};

// Standard Bourbaki Cartan matrix of the given type.
CartanMatrix build_cartan(CartanType t);

// Simple reflection s_i on root coordinates: c_i <- c_i - (row i of C) . c.
// Letters are 1-based throughout, matching the word alphabet {1..n}.
IVec reflect(const CartanMatrix& C, int i, const IVec& v);
QVec reflect(const CartanMatrix& C, int i, const QVec& v);

// Same reflection acting on weight-basis coordinates: d <- d - d_i * (col i of C).
IVec reflect_weight(const CartanMatrix& C, int i, const IVec& d);

// Coordinate changes: d = C * c and its exact inverse.
QVec weight_coords(const CartanMatrix& C, const QVec& root_coords);
IVec weight_coords_int(const CartanMatrix& C, const IVec& root_coords);
QVec root_coords(const CartanMatrix& C, const QVec& weight_coords);

// All positive roots in root coordinates: breadth-first closure of the simple
// roots under simple reflections, each level sorted lexicographically.
std::vector<IVec> positive_roots(const CartanMatrix& C);

}  // namespace brickforge
