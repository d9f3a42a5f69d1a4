#pragma once

// Principal-coefficient cluster seeds in finite type: the initial mutation
// matrix from Cartan data and a Coxeter word, seed mutation, enumeration of
// all cluster variables, and extraction of F-polynomials, g-vectors and
// d-vectors. Variables are indexed by the letters 1..n of the simple system.

#include "brickforge/cartan.hpp"
#include "brickforge/laurent.hpp"
#include "brickforge/polytope.hpp"
#include "brickforge/weyl.hpp"

#include <optional>
#include <vector>

namespace brickforge {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAMonomial : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 2n x n integer matrix: exchange part on top, coefficient part below.
class ExtendedMutationMatrix {
 public:
  ExtendedMutationMatrix(int n, std::vector<Int> entries);

  int rank() const { return n_; }
  Int at(int i, int j) const { return m_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j, Int v) { m_[static_cast<std::size_t>(i * n_ + j)] = v; }

  // D B skew-symmetric for the type's minimal symmetrizer D.
  bool exchange_part_skew_symmetrizable(const CartanMatrix& C) const;

  bool operator==(const ExtendedMutationMatrix& o) const { return n_ == o.n_ && m_ == o.m_; }

 private:
  int n_;
  std::vector<Int> m_;
};

ExtendedMutationMatrix initial_matrix(const CartanMatrix& C, const Word& coxeter_word);

struct Seed {
  ExtendedMutationMatrix matrix;
  std::vector<Laurent> variables;  // n cluster variables in the 2n seed vars

  static Seed initial(const CartanMatrix& C, const Word& coxeter_word);
};

// Standard matrix/variable mutation in direction k (1-based).
Seed mutate(const Seed& seed, int k);

struct ClusterVariableRecord {
  Laurent expr;       // Laurent expression in (x_1..x_n, y_1..y_n)
  IVec d_vector;      // denominator exponents, root coordinates
  IVec g_vector;      // exponent of expr(x, 0), weight coordinates
  std::optional<Laurent> f_polynomial;  // expr(1, y); absent for initial vars
  bool initial = false;
};

// BFS over all seeds. Returns the n initial records followed by the N
// non-initial ones ordered like positive_roots(C) via their d-vectors.
std::vector<ClusterVariableRecord> all_cluster_variables(const CartanMatrix& C,
                                                         const Word& coxeter_word,
                                                         std::size_t seed_budget = 200000);

// Newton polytope of an F-polynomial: hull of its y-exponent vectors.
VPolytope newton_polytope(const Laurent& f_polynomial, int n);

// Constant term 1 and beta the componentwise maximum, attained exactly once.
bool check_extremal_exponents(const Laurent& f_polynomial, const IVec& beta, int n);

}  // namespace brickforge
