#include "brickforge/fan.hpp"

#include "brickforge/linalg.hpp"

#include <algorithm>
#include <random>

namespace brickforge {

void Fan::validate() const {
  std::vector<bool> used(rays.size(), false);
  for (const QVec& r : rays)
    if (static_cast<int>(r.size()) != dim) throw DimensionMismatch("fan ray of wrong dimension");
  for (const auto& cone : maximal_cones) {
    if (static_cast<int>(cone.size()) != dim)
      throw std::invalid_argument("maximal cone must have dim rays");
    std::vector<QVec> rows;
    for (int idx : cone) {
      if (idx < 0 || static_cast<std::size_t>(idx) >= rays.size())
        throw std::invalid_argument("cone refers to missing ray");
      used[static_cast<std::size_t>(idx)] = true;
      rows.push_back(rays[static_cast<std::size_t>(idx)]);
    }
    if (rational_rank(rows) != static_cast<std::size_t>(dim))
      throw SingularCone("maximal cone with dependent rays");
  }
  for (std::size_t r = 0; r < rays.size(); ++r)
    if (!used[r]) throw std::invalid_argument("unused fan ray");
}

HeightVector support_heights(const VPolytope& p, const Fan& fan) {
  if (p.dim() != fan.dim) throw DimensionMismatch("support_heights: dimension mismatch");
  HeightVector h(fan.rays.size());
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    bool first = true;
    for (const QVec& v : p.vertices()) {
      Rat val = qvec_dot(fan.rays[r], v);
      if (first || val > h[r]) h[r] = val;
      first = false;
    }
  }
  return h;
}

namespace {

// Inverse of each maximal cone's ray matrix, computed once per fan and reused
// across many height vectors.
class ConeSolver {
 public:
  explicit ConeSolver(const Fan& fan) : fan_(fan) {
    int n = fan.dim;
    for (const auto& cone : fan.maximal_cones) {
      // Invert the cone's ray matrix by solving against the identity.
      std::vector<QVec> inverse(static_cast<std::size_t>(n));
      for (int col = 0; col < n; ++col) {
        std::vector<QVec> rows;
        for (int idx : cone) rows.push_back(fan.rays[static_cast<std::size_t>(idx)]);
        QVec rhs(cone.size(), Rat(0));
        rhs[static_cast<std::size_t>(col)] = 1;
        auto x = solve_square(rows, rhs);
        if (!x) throw SingularCone("polytope_from_heights: singular cone system");
        for (int row = 0; row < n; ++row)
          inverse[static_cast<std::size_t>(row)].push_back((*x)[static_cast<std::size_t>(row)]);
      }
      inverses_.push_back(std::move(inverse));
    }
  }

  // Solution of <g_r, x> = h_r over the cone's rays.
  QVec solve(std::size_t cone_index, const HeightVector& h) const {
    const auto& cone = fan_.maximal_cones[cone_index];
    const auto& inv = inverses_[cone_index];
    QVec x(static_cast<std::size_t>(fan_.dim), Rat(0));
    for (int row = 0; row < fan_.dim; ++row)
      for (std::size_t j = 0; j < cone.size(); ++j)
        x[static_cast<std::size_t>(row)] += inv[static_cast<std::size_t>(row)][j] * h[static_cast<std::size_t>(cone[j])];
    return x;
  }

 private:
  const Fan& fan_;
  std::vector<std::vector<QVec>> inverses_;  // per cone, rows of M^{-1}
};

HeightPolytope reconstruct(const Fan& fan, const ConeSolver& solver, const HeightVector& h) {
  if (h.size() != fan.rays.size()) throw CountMismatch("height vector length != ray count");
  std::vector<QVec> solutions;
  bool interior = true;
  bool all_inside = true;  // every solution satisfies <g_r, x> <= h_r weakly
  for (std::size_t c = 0; c < fan.maximal_cones.size(); ++c) {
    const auto& cone = fan.maximal_cones[c];
    QVec x = solver.solve(c, h);
    for (std::size_t r = 0; r < fan.rays.size(); ++r) {
      if (!interior && !all_inside) break;
      if (std::find(cone.begin(), cone.end(), static_cast<int>(r)) != cone.end()) continue;
      Rat val = qvec_dot(fan.rays[r], x);
      if (val >= h[r]) interior = false;
      if (val > h[r]) all_inside = false;
    }
    solutions.push_back(std::move(x));
  }
  if (all_inside) {
    // Every solution lies in P_h, so each distinct solution is separated from
    // the rest by its own cone's ray-sum functional: no hull pass needed.
    return {VPolytope::from_certified_extreme_points(fan.dim, std::move(solutions)), interior};
  }
  return {hull_vertices(fan.dim, std::move(solutions)), interior};
}

}  // namespace

HeightPolytope polytope_from_heights(const Fan& fan, const HeightVector& h) {
  return reconstruct(fan, ConeSolver(fan), h);
}

TypeConeReport type_cone_simplicial_check(const Fan& fan,
                                          const std::vector<HeightVector>& summand_heights) {
  std::size_t m = fan.rays.size();
  if (summand_heights.size() + static_cast<std::size_t>(fan.dim) != m)
    throw CountMismatch("need exactly (rays - dim) summand height vectors");
  for (const HeightVector& h : summand_heights)
    if (h.size() != m) throw CountMismatch("summand height vector length != ray count");

  TypeConeReport report;
  report.expected_rank = m;
  std::vector<QVec> vectors(summand_heights);
  for (int c = 0; c < fan.dim; ++c) {
    QVec col(m);
    for (std::size_t r = 0; r < m; ++r) col[r] = fan.rays[r][static_cast<std::size_t>(c)];
    vectors.push_back(std::move(col));
  }
  report.rank = rational_rank(vectors);
  report.full_rank = report.rank == m;

  ConeSolver solver(fan);
  HeightVector total(m, Rat(0));
  for (const HeightVector& h : summand_heights) total = qvec_add(total, h);
  HeightPolytope full = reconstruct(fan, solver, total);
  report.interior = full.in_type_cone;
  report.total_vertex_count = full.polytope.vertex_count();

  for (std::size_t skip = 0; skip < summand_heights.size(); ++skip) {
    HeightVector rest = qvec_sub(total, summand_heights[skip]);
    HeightPolytope hp = reconstruct(fan, solver, rest);
    report.leave_one_out.push_back({hp.in_type_cone, hp.polytope.vertex_count()});
  }
  return report;
}

bool cone_contains(const Fan& fan, const std::vector<int>& cone, const QVec& p, bool strict) {
  std::vector<QVec> cols(static_cast<std::size_t>(fan.dim), QVec(cone.size()));
  for (std::size_t j = 0; j < cone.size(); ++j)
    for (int i = 0; i < fan.dim; ++i)
      cols[static_cast<std::size_t>(i)][j] = fan.rays[static_cast<std::size_t>(cone[j])][static_cast<std::size_t>(i)];
  auto lambda = solve_square(cols, p);
  if (!lambda) throw SingularCone("cone_contains: dependent rays");
  for (const Rat& l : *lambda) {
    if (strict ? l <= 0 : l < 0) return false;
  }
  return true;
}

bool check_fan_complete(const Fan& fan, std::uint64_t seed, int samples) {
  // Deterministic part: each cone's ray sum is interior to exactly one cone.
  for (const auto& cone : fan.maximal_cones) {
    QVec sum(static_cast<std::size_t>(fan.dim), Rat(0));
    for (int idx : cone) sum = qvec_add(sum, fan.rays[static_cast<std::size_t>(idx)]);
    if (!cone_contains(fan, cone, sum, /*strict=*/true)) return false;
    int containing = 0;
    for (const auto& other : fan.maximal_cones)
      if (cone_contains(fan, other, sum, /*strict=*/false)) ++containing;
    if (containing != 1) return false;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-64, 64);
  std::uniform_int_distribution<int> den(1, 16);
  for (int s = 0; s < samples; ++s) {
    QVec p(static_cast<std::size_t>(fan.dim));
    for (Rat& x : p) x = Rat(num(rng), den(rng));
    bool hit = false;
    for (const auto& cone : fan.maximal_cones)
      if (cone_contains(fan, cone, p, /*strict=*/false)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace brickforge
