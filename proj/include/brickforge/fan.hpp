#pragma once

// Complete simplicial fans as a ray matrix plus maximal-cone index sets,
// height vectors, the P_h reconstruction and the type-cone membership and
// simpliciality checks.
//
// A fan's rays live in the dual of the space its polytopes live in; pairing
// is the plain dot product. For g-vector fans the rays are stored in coweight
// coordinates so that this pairing is the crystallographic one against
// root-basis points.

#include "brickforge/polytope.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace brickforge {

struct SingularCone : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CountMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Fan {
  int dim = 0;
  std::vector<QVec> rays;                        // rows of the matrix G
  std::vector<std::vector<int>> maximal_cones;   // sorted 0-based ray indices

  // Checks the structural invariants: every cone has dim independent rays and
  // every ray is used by at least one cone. Throws on violation.
  void validate() const;

  std::size_t ray_count() const { return rays.size(); }
};

using HeightVector = QVec;

// Support values per ray: h_r = max over vertices of <ray, vertex>.
HeightVector support_heights(const VPolytope& p, const Fan& fan);

struct HeightPolytope {
  VPolytope polytope;
  bool in_type_cone = false;  // open type cone: all off-cone inequalities strict
};

// Solves the n x n system per maximal cone and collects the solutions.
HeightPolytope polytope_from_heights(const Fan& fan, const HeightVector& h);

struct TypeConeReport {
  std::size_t rank = 0;             // rank of {h_beta} plus the columns of G
  std::size_t expected_rank = 0;    // number of rays
  bool full_rank = false;
  bool interior = false;            // sum of all summand heights is interior
  std::size_t total_vertex_count = 0;
  struct LeaveOneOut {
    bool interior = false;          // must be false for simpliciality
    std::size_t vertex_count = 0;   // reconstructed P_h vertex count
  };
  std::vector<LeaveOneOut> leave_one_out;

  bool simplicial() const {
    if (!full_rank || !interior) return false;
    for (const auto& l : leave_one_out)
      if (l.interior) return false;
    return true;
  }
};

// The simpliciality certificate of the type cone: full rank, interior sum,
// and every leave-one-out sum on the boundary.
TypeConeReport type_cone_simplicial_check(const Fan& fan,
                                          const std::vector<HeightVector>& summand_heights);

// Is p in the cone spanned by the given rays (all coefficients >= 0), and
// strictly inside it (all > 0)?
bool cone_contains(const Fan& fan, const std::vector<int>& cone, const QVec& p, bool strict);

// Completeness guard: per-cone ray sums are interior to exactly their own
// cone, and `samples` seeded random rational points each lie in some cone.
bool check_fan_complete(const Fan& fan, std::uint64_t seed, int samples);

}  // namespace brickforge
