#include "brickforge/polytope.hpp"

#include "brickforge/lp.hpp"

#include <algorithm>
#include <set>

namespace brickforge {

VPolytope VPolytope::from_points(int dim, std::vector<QVec> points) {
  return hull_vertices(dim, std::move(points));
}

VPolytope VPolytope::from_integer_points(int dim, const std::vector<IVec>& points) {
  std::vector<QVec> pts;
  pts.reserve(points.size());
  for (const IVec& p : points) pts.push_back(to_rational(p));
  return hull_vertices(dim, std::move(pts));
}

bool VPolytope::has_vertex(const QVec& v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

VPolytope VPolytope::from_certified_extreme_points(int dim, std::vector<QVec> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return VPolytope{dim, std::move(points)};
}

VPolytope hull_vertices(int dim, std::vector<QVec> points) {
  if (points.empty()) throw std::invalid_argument("hull_vertices: empty point set");
  for (const QVec& p : points)
    if (static_cast<int>(p.size()) != dim) throw DimensionMismatch("hull_vertices: point of wrong dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() == 1) return VPolytope{dim, std::move(points)};

  std::vector<bool> extreme(points.size(), false);
  std::vector<bool> settled(points.size(), false);
  // Lexicographic extremes are vertices for free.
  extreme.front() = extreme.back() = settled.front() = settled.back() = true;

  // Fast certificate pass on a common integer grid when the coordinates fit:
  // a point uniquely maximizing the functional from the barycenter towards it
  // is a vertex, and a point strictly between two others is not. Soundness
  // only; the LP decides whatever is left.
  BigInt denom = 1;
  for (const QVec& p : points)
    for (const Rat& x : p) denom = boost::multiprecision::lcm(denom, denominator(x));
  bool fits = denom < (BigInt(1) << 20) && points.size() < 100000;
  std::vector<std::vector<Int>> grid;
  if (fits) {
    grid.reserve(points.size());
    const BigInt bound = BigInt(1) << 30;
    for (const QVec& p : points) {
      std::vector<Int> row(static_cast<std::size_t>(dim));
      for (int c = 0; c < dim && fits; ++c) {
        BigInt scaled = numerator(p[static_cast<std::size_t>(c)]) *
                        (denom / denominator(p[static_cast<std::size_t>(c)]));
        if (scaled > bound || scaled < -bound) fits = false;
        row[static_cast<std::size_t>(c)] = static_cast<Int>(scaled);
      }
      if (!fits) break;
      grid.push_back(std::move(row));
    }
  }
  if (fits) {
    using Wide = __int128;
    std::size_t count = points.size();
    // Barycenter scaled by the point count keeps everything integral.
    std::vector<Int> center(static_cast<std::size_t>(dim), 0);
    for (const auto& p : grid)
      for (int c = 0; c < dim; ++c) center[static_cast<std::size_t>(c)] += p[static_cast<std::size_t>(c)];
    auto wide_dot = [&](const std::vector<Wide>& f, const std::vector<Int>& p) {
      Wide s = 0;
      for (std::size_t c = 0; c < f.size(); ++c) s += f[c] * p[c];
      return s;
    };
    for (std::size_t i = 0; i < count; ++i) {
      if (settled[i]) continue;
      std::vector<Wide> f(static_cast<std::size_t>(dim));
      for (int c = 0; c < dim; ++c)
        f[static_cast<std::size_t>(c)] = Wide(count) * grid[i][static_cast<std::size_t>(c)] -
                                         center[static_cast<std::size_t>(c)];
      Wide target = wide_dot(f, grid[i]);
      bool unique_max = true;
      for (std::size_t j = 0; j < count && unique_max; ++j)
        if (j != i && wide_dot(f, grid[j]) >= target) unique_max = false;
      if (unique_max) extreme[i] = settled[i] = true;
    }
    // Betweenness: p strictly inside the segment [q, r] is not a vertex.
    for (std::size_t i = 0; i < count; ++i) {
      if (settled[i]) continue;
      for (std::size_t q = 0; q < count && !settled[i]; ++q) {
        if (q == i) continue;
        for (std::size_t r = q + 1; r < count && !settled[i]; ++r) {
          if (r == i) continue;
          // q - p = t (p - r) for some t > 0: p is inside the segment.
          bool anti = true;
          Wide cross_num = 0, cross_den = 0;
          for (int c = 0; c < dim && anti; ++c) {
            Wide a = grid[q][static_cast<std::size_t>(c)] - grid[i][static_cast<std::size_t>(c)];
            Wide b = grid[i][static_cast<std::size_t>(c)] - grid[r][static_cast<std::size_t>(c)];
            if (cross_den == 0 && cross_num == 0 && (a != 0 || b != 0)) {
              cross_num = a;
              cross_den = b;
              if (cross_den == 0 || (cross_num > 0) != (cross_den > 0)) anti = false;
            } else if (a * cross_den != b * cross_num) {
              anti = false;
            }
          }
          if (anti && cross_den != 0) settled[i] = true;  // extreme stays false
        }
      }
    }
  }

  std::vector<QVec> others;
  others.reserve(points.size() - 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (settled[i]) continue;
    others.clear();
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    extreme[i] = !in_convex_hull(points[i], others);
  }
  std::vector<QVec> verts;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (extreme[i]) verts.push_back(points[i]);
  return VPolytope{dim, std::move(verts)};
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("minkowski_sum: dimension mismatch");
  std::set<QVec> sums;
  for (const QVec& a : p.vertices())
    for (const QVec& b : q.vertices()) sums.insert(qvec_add(a, b));
  return hull_vertices(p.dim(), std::vector<QVec>(sums.begin(), sums.end()));
}

bool is_edge(const VPolytope& p, const QVec& u, const QVec& v) {
  if (!p.has_vertex(u) || !p.has_vertex(v)) throw NotAVertex("is_edge: endpoint is not a vertex");
  if (u == v) throw NotAVertex("is_edge: endpoints coincide");
  std::vector<QVec> others;
  for (const QVec& w : p.vertices())
    if (w != u && w != v) others.push_back(w);
  return has_edge_functional(u, v, others);
}

}  // namespace brickforge
