#pragma once

// Brick vectors and brick polytopes of cluster words, their natural Minkowski
// summands, restricted sums, the column polytopes of general words, and the
// g-vector fan. Everything is computed in root coordinates and normalized so
// that the antigreedy facet's brick vector is the origin.

#include "brickforge/fan.hpp"
#include "brickforge/subword.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace brickforge {

struct RootNotPositive : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct RayAmbiguous : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class BrickGeometry {
 public:
  // Requires a cluster-shaped word (length n + N) for everything except
  // column_polytope, which works for any spherical subword complex.
  explicit BrickGeometry(const SubwordComplex& spec);

  const SubwordComplex& spec() const { return spec_; }

  // Mutually inverse bijection between positive roots and positions n+1..n+N.
  int position_of_root(const IVec& beta) const;
  const IVec& root_of_position(int k) const;
  const std::vector<IVec>& positive_roots_in_position_order() const { return roots_by_position_; }

  // w(I, beta) - w(antigreedy, beta), in root coordinates.
  IVec shifted_weight(const Facet& I, const IVec& beta) const;
  IVec shifted_weight_at_position(const Facet& I, int k) const;

  IVec brick_vector(const Facet& I) const;
  IVec restricted_brick_vector(const Facet& I, const std::vector<IVec>& roots) const;

  VPolytope asso_polytope() const;
  VPolytope summand_polytope(const IVec& beta) const;
  VPolytope asso_x_polytope(const std::vector<IVec>& roots) const;

  // P_i of a general word: conv{ w(I,i) - w(antigreedy,i) }.
  VPolytope column_polytope(int i) const;

  // The g-vector fan: one ray per position (in coweight coordinates), one
  // maximal cone per facet. Throws RayAmbiguous if two facets disagree on a
  // shared position's weight.
  Fan g_vector_fan() const;

  // Weight coordinates of the fan ray at a position (the g-vector there).
  IVec ray_weight_coords(int k) const;

 private:
  void require_cluster_shape() const;
  IVec coweight_coords(const IVec& weight) const;  // d_i * nabla_i
  // All shifted weights of a facet (positions n+1..n+N), cached.
  const std::vector<IVec>& shifted_row(const Facet& I) const;
  IVec to_root_coords(const IVec& weight) const;

  const SubwordComplex& spec_;
  Facet antigreedy_;
  std::vector<IVec> roots_by_position_;  // index k-n-1 for position k
  std::map<IVec, int> position_by_root_;
  std::vector<QVec> cartan_inverse_;  // rows of C^{-1}

  mutable std::unique_ptr<std::mutex> cache_mutex_ = std::make_unique<std::mutex>();
  mutable std::map<Facet, std::vector<IVec>> shifted_cache_;
};

}  // namespace brickforge
