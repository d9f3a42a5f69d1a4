#pragma once

// Canonical V-polytopes over the rationals. A VPolytope stores exactly its
// extreme points, lexicographically sorted, so equality of polytopes is
// equality of vertex lists.

#include "brickforge/numbers.hpp"

#include <stdexcept>
#include <vector>

namespace brickforge {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAVertex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class VPolytope {
 public:
  // Canonicalizes: deduplicates, drops non-extreme points, sorts.
  static VPolytope from_points(int dim, std::vector<QVec> points);
  static VPolytope from_integer_points(int dim, const std::vector<IVec>& points);

  int dim() const { return dim_; }
  const std::vector<QVec>& vertices() const { return verts_; }
  std::size_t vertex_count() const { return verts_.size(); }
  bool has_vertex(const QVec& v) const;

  bool operator==(const VPolytope& o) const { return dim_ == o.dim_ && verts_ == o.verts_; }
  bool operator!=(const VPolytope& o) const { return !(*this == o); }

  // For callers holding a supporting-functional certificate per point (the
  // fan kernel): skips the LP canonicalization, still sorts and deduplicates.
  static VPolytope from_certified_extreme_points(int dim, std::vector<QVec> points);

 private:
  VPolytope(int dim, std::vector<QVec> verts) : dim_(dim), verts_(std::move(verts)) {}
  friend VPolytope hull_vertices(int dim, std::vector<QVec> points);
  int dim_ = 0;
  std::vector<QVec> verts_;
};

// Extreme points of a point set; each point is tested by an exact feasibility
// LP against the convex hull of the others.
VPolytope hull_vertices(int dim, std::vector<QVec> points);

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);

// True iff some linear functional is maximized exactly on {u, v}.
bool is_edge(const VPolytope& p, const QVec& u, const QVec& v);

}  // namespace brickforge
