#pragma once

// Tropicalization of the subtraction-free parametrization given by the
// non-initial cluster variables: ideal generators, argmax signatures,
// positive-hypersurface membership and the slice comparison against the
// g-vector fan.

#include "brickforge/brick.hpp"
#include "brickforge/cluster.hpp"

#include <cstdint>
#include <vector>

namespace brickforge {

struct IndexMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SampleEscapedCone : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One generator x_beta * x^beta - p_beta of the ideal, split by sign. The
// exponent space is Z^{X u Y}: n initial x's, N non-initial x's (in positive-
// root order), n y's.
struct GeneratorPolynomial {
  IVec beta;                       // root coordinates
  IVec positive_exponent;          // exponent of x_beta * x^beta
  std::vector<IVec> negative_exponents;  // support of p_beta, embedded
};

// The tropical coordinate functions: per beta the exponent set E_beta of
// p_beta in Z^{2n} plus the denominator offset beta on the x-part.
struct TropMap {
  int n = 0;
  std::vector<IVec> betas;             // positive-root order
  std::vector<std::vector<IVec>> exponent_sets;  // E_beta, each in Z^{2n}
};

std::vector<GeneratorPolynomial> build_generators(const std::vector<ClusterVariableRecord>& records, int n);
TropMap build_trop_map(const std::vector<ClusterVariableRecord>& records, int n);

// All maximizers of w . e over E; exact arithmetic.
std::vector<IVec> argmax_set(const std::vector<IVec>& exponents, const QVec& w);

struct ArgmaxSignature {
  // Per beta (in TropMap order) the subset of E_beta attaining the maximum.
  std::vector<std::vector<IVec>> sets;
  bool operator==(const ArgmaxSignature& o) const { return sets == o.sets; }
  bool operator<(const ArgmaxSignature& o) const { return sets < o.sets; }
};

struct TropValue {
  QVec values;  // one per beta
  ArgmaxSignature signature;
};

// Evaluate Trop Psi at w in Q^{2n} (x-part then y-part).
TropValue trop_eval(const TropMap& map, const QVec& w);

// w lives in Q^{X u Y} (dimension 2n + N): the maximum over all exponents of
// the generator must be attained by the positive monomial and by some
// negative-part exponent.
bool is_on_positive_hypersurface(const GeneratorPolynomial& g, const QVec& w);

struct SliceReport {
  bool projection_ok = false;      // y-projection of E_beta matches F_beta
  bool cone_constancy = false;     // samples inside one cone share a signature
  bool cone_separation = false;    // distinct cones have distinct signatures
  std::size_t cone_count = 0;
  std::size_t distinct_signatures = 0;
  std::string witness;             // first failure, empty when all pass

  bool ok() const { return projection_ok && cone_constancy && cone_separation; }
};

// The x = 0 slice comparison of the tropical parametrization against the
// g-vector fan: projection check, cone-constancy and cone-separation with
// deterministic interior samples plus seeded perturbations.
SliceReport verify_slice_isomorphism(const BrickGeometry& brick,
                                     const std::vector<ClusterVariableRecord>& records,
                                     std::uint64_t seed, int perturbations_per_cone = 8);

// Property check: the graph point (w', Trop Psi(w')) lies on every
// generator's positive tropical hypersurface, for `samples` seeded w'.
bool check_graph_membership(const TropMap& map, const std::vector<GeneratorPolynomial>& generators,
                            std::uint64_t seed, int samples);

}  // namespace brickforge
