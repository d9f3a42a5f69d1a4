#pragma once

// Spherical subword complexes: facet enumeration by flips (with a brute-force
// oracle for tests), root and weight functions, greedy/antigreedy facets and
// the canonical long flip sequence of cluster words.

#include "brickforge/weyl.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace brickforge {

// Positions are 1-based indices into Q; a facet is a strictly increasing list.
using Facet = std::vector<int>;

struct DemazureTooShort : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotClusterWord : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FlipSequence {
  std::vector<Facet> facets;            // I_0 .. I_N
  std::vector<std::pair<int, int>> pivots;  // (i_l, j_l), all increasing
};

class SubwordComplex {
 public:
  // Rejects words whose Demazure product is not w0.
  SubwordComplex(CartanMatrix cartan, Word q);

  // Convenience constructor for the cluster word c * w0(c).
  static SubwordComplex cluster_word(const CartanMatrix& C, const Word& coxeter_word);

  const CartanMatrix& cartan() const { return cartan_; }
  const Word& word() const { return q_; }
  int word_length() const { return m_; }
  int rank() const { return n_; }
  int positive_root_count() const { return big_n_; }
  int facet_size() const { return m_ - big_n_; }
  const GroupElement& longest() const { return w0_; }
  // True iff Q has the cluster-word shape (m = n + N) used by brick geometry.
  bool is_cluster_shape() const { return m_ == n_ + big_n_; }
  const Word& coxeter_word() const;  // only for cluster_word-built specs

  bool is_facet(const Facet& I) const;

  // All facets via breadth-first flips from the greedy facet, sorted.
  const std::vector<Facet>& facets() const;

  // Test oracle: all facets by scanning every (m choose m-N) subset.
  std::vector<Facet> facets_bruteforce() const;

  Facet greedy_facet() const;
  Facet antigreedy_facet() const;

  // r(I,k) in root coordinates and w(I,k) in weight coordinates.
  IVec root_function(const Facet& I, int k) const;
  IVec weight_function(const Facet& I, int k) const;
  // Same value converted to root coordinates (exact rationals).
  QVec weight_function_root_coords(const Facet& I, int k) const;

  // The unique facet J and position j with I \ {i} = J \ {j}.
  std::pair<Facet, int> flip(const Facet& I, int i) const;

  FlipSequence canonical_long_flip_sequence() const;

  bool is_root_independent() const;
  bool has_full_support() const;

 private:
  struct Tables {
    std::vector<IVec> roots;    // index k-1, root coordinates
    std::vector<IVec> weights;  // index k-1, weight coordinates
  };
  const Tables& tables(const Facet& I) const;
  friend class BrickGeometry;

  CartanMatrix cartan_;
  Word q_;
  int m_, n_, big_n_;
  GroupElement w0_;
  std::optional<Word> coxeter_word_;

  // Owned through a pointer so the spec stays movable.
  mutable std::unique_ptr<std::mutex> cache_mutex_ = std::make_unique<std::mutex>();
  mutable std::map<Facet, std::shared_ptr<const Tables>> table_cache_;
  mutable std::optional<std::vector<Facet>> facet_cache_;
};

}  // namespace brickforge
