#include "brickforge/brick.hpp"

#include "brickforge/linalg.hpp"

#include <algorithm>

namespace brickforge {

BrickGeometry::BrickGeometry(const SubwordComplex& spec) : spec_(spec), antigreedy_(spec.antigreedy_facet()) {
  int n = spec_.rank();
  // Rows of C^{-1}, for exact weight-to-root conversion without re-solving.
  const CartanMatrix& C = spec_.cartan();
  cartan_inverse_.assign(static_cast<std::size_t>(n), QVec());
  for (int j = 0; j < n; ++j) {
    QVec e(static_cast<std::size_t>(n), Rat(0));
    e[static_cast<std::size_t>(j)] = 1;
    QVec col = root_coords(C, e);  // column j of C^{-1}
    for (int i = 0; i < n; ++i) cartan_inverse_[static_cast<std::size_t>(i)].push_back(col[static_cast<std::size_t>(i)]);
  }
  if (spec_.is_cluster_shape()) {
    Facet greedy = spec_.greedy_facet();
    for (int k = n + 1; k <= spec_.word_length(); ++k) {
      roots_by_position_.push_back(spec_.root_function(greedy, k));
      position_by_root_.emplace(roots_by_position_.back(), k);
    }
  }
}

void BrickGeometry::require_cluster_shape() const {
  if (!spec_.is_cluster_shape())
    throw NotClusterWord("operation requires a cluster word of length n + N");
}

IVec BrickGeometry::to_root_coords(const IVec& weight) const {
  int n = spec_.rank();
  IVec out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rat x = 0;
    for (int j = 0; j < n; ++j) x += cartan_inverse_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * weight[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = to_int(x);
  }
  return out;
}

int BrickGeometry::position_of_root(const IVec& beta) const {
  require_cluster_shape();
  auto it = position_by_root_.find(beta);
  if (it == position_by_root_.end()) throw RootNotPositive("no position carries this root");
  return it->second;
}

const IVec& BrickGeometry::root_of_position(int k) const {
  require_cluster_shape();
  int n = spec_.rank();
  if (k <= n || k > spec_.word_length()) throw std::out_of_range("root_of_position: position out of range");
  return roots_by_position_[static_cast<std::size_t>(k - n - 1)];
}

const std::vector<IVec>& BrickGeometry::shifted_row(const Facet& I) const {
  {
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    auto it = shifted_cache_.find(I);
    if (it != shifted_cache_.end()) return it->second;
  }
  int n = spec_.rank();
  std::vector<IVec> row;
  for (int k = n + 1; k <= spec_.word_length(); ++k)
    row.push_back(to_root_coords(ivec_sub(spec_.weight_function(I, k), spec_.weight_function(antigreedy_, k))));
  std::lock_guard<std::mutex> lock(*cache_mutex_);
  auto [it, inserted] = shifted_cache_.emplace(I, std::move(row));
  return it->second;
}

IVec BrickGeometry::shifted_weight_at_position(const Facet& I, int k) const {
  return ivec_sub(spec_.weight_function(I, k), spec_.weight_function(antigreedy_, k));
}

IVec BrickGeometry::shifted_weight(const Facet& I, const IVec& beta) const {
  require_cluster_shape();
  int k = position_of_root(beta);
  return shifted_row(I)[static_cast<std::size_t>(k - spec_.rank() - 1)];
}

IVec BrickGeometry::brick_vector(const Facet& I) const {
  require_cluster_shape();
  IVec sum(static_cast<std::size_t>(spec_.rank()), 0);
  for (const IVec& s : shifted_row(I)) sum = ivec_add(sum, s);
  return sum;
}

IVec BrickGeometry::restricted_brick_vector(const Facet& I, const std::vector<IVec>& roots) const {
  require_cluster_shape();
  const std::vector<IVec>& row = shifted_row(I);
  IVec sum(static_cast<std::size_t>(spec_.rank()), 0);
  for (const IVec& beta : roots)
    sum = ivec_add(sum, row[static_cast<std::size_t>(position_of_root(beta) - spec_.rank() - 1)]);
  return sum;
}

VPolytope BrickGeometry::asso_polytope() const {
  require_cluster_shape();
  std::vector<IVec> pts;
  for (const Facet& I : spec_.facets()) pts.push_back(brick_vector(I));
  return VPolytope::from_integer_points(spec_.rank(), pts);
}

VPolytope BrickGeometry::summand_polytope(const IVec& beta) const {
  require_cluster_shape();
  int idx = position_of_root(beta) - spec_.rank() - 1;
  std::vector<IVec> pts;
  for (const Facet& I : spec_.facets()) pts.push_back(shifted_row(I)[static_cast<std::size_t>(idx)]);
  return VPolytope::from_integer_points(spec_.rank(), pts);
}

VPolytope BrickGeometry::asso_x_polytope(const std::vector<IVec>& roots) const {
  require_cluster_shape();
  std::vector<IVec> pts;
  for (const Facet& I : spec_.facets()) pts.push_back(restricted_brick_vector(I, roots));
  return VPolytope::from_integer_points(spec_.rank(), pts);
}

VPolytope BrickGeometry::column_polytope(int i) const {
  if (i < 1 || i > spec_.word_length()) throw std::out_of_range("column_polytope: position out of range");
  std::vector<IVec> pts;
  for (const Facet& I : spec_.facets())
    pts.push_back(to_root_coords(ivec_sub(spec_.weight_function(I, i), spec_.weight_function(antigreedy_, i))));
  return VPolytope::from_integer_points(spec_.rank(), pts);
}

IVec BrickGeometry::coweight_coords(const IVec& weight) const {
  const IVec& d = spec_.cartan().symmetrizer();
  IVec r = weight;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] *= d[i];
  return r;
}

IVec BrickGeometry::ray_weight_coords(int k) const {
  require_cluster_shape();
  for (const Facet& I : spec_.facets())
    if (std::binary_search(I.begin(), I.end(), k)) return spec_.weight_function(I, k);
  throw std::out_of_range("ray_weight_coords: position lies in no facet");
}

Fan BrickGeometry::g_vector_fan() const {
  require_cluster_shape();
  int m = spec_.word_length();
  std::vector<IVec> ray_weights(static_cast<std::size_t>(m));
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  Fan fan;
  fan.dim = spec_.rank();
  for (const Facet& I : spec_.facets()) {
    std::vector<int> cone;
    for (int p : I) {
      IVec w = spec_.weight_function(I, p);
      std::size_t idx = static_cast<std::size_t>(p - 1);
      if (seen[idx]) {
        if (ray_weights[idx] != w)
          throw RayAmbiguous("two facets disagree on the weight of a shared position");
      } else {
        ray_weights[idx] = std::move(w);
        seen[idx] = true;
      }
      cone.push_back(p - 1);
    }
    std::sort(cone.begin(), cone.end());
    fan.maximal_cones.push_back(std::move(cone));
  }
  for (int p = 0; p < m; ++p) {
    if (!seen[static_cast<std::size_t>(p)])
      throw std::logic_error("g_vector_fan: position lies in no facet of a cluster word");
    fan.rays.push_back(to_rational(coweight_coords(ray_weights[static_cast<std::size_t>(p)])));
  }
  std::sort(fan.maximal_cones.begin(), fan.maximal_cones.end());
  fan.validate();
  return fan;
}

}  // namespace brickforge
