#pragma once

// Verification drivers shared by the CLI and the acceptance suite: per-
// instance bundles (subword complex, brick geometry, cluster records, g-fan,
// summands) and the checks for the three theorems, the worked-example tables
// and the two counterexample words.

#include "brickforge/brick.hpp"
#include "brickforge/cluster.hpp"
#include "brickforge/subword.hpp"
#include "brickforge/tables.hpp"
#include "brickforge/tropical.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace brickforge {

struct InstanceData {
  CartanType type;
  Word coxeter;
  std::shared_ptr<SubwordComplex> spec;
  std::shared_ptr<BrickGeometry> brick;
  std::vector<ClusterVariableRecord> records;
  Fan fan;                                    // g-vector fan, rays by position
  std::vector<VPolytope> summands;            // by position n+1..n+N
  std::vector<HeightVector> summand_heights;  // same order

  const VPolytope& summand_of_root(const IVec& beta) const;
};

InstanceData build_instance(CartanType t, const Word& coxeter_word);

// Cluster words c * w0(c) for every Coxeter element of the type.
std::vector<Word> instance_coxeter_words(const CartanMatrix& C, bool all);

// Each check returns a witness string for the first failure, nullopt on pass.

// Theorem: Newton(F_beta) equals the natural Minkowski summand, vertexwise.
std::optional<std::string> check_newton(const InstanceData& inst);

// Type cone: full rank, interior total sum, leave-one-out sums on the
// boundary with strictly fewer reconstructed vertices; vertex count and
// round-trip properties; optionally the full Minkowski decomposition.
std::optional<std::string> check_typecone(const InstanceData& inst, bool include_minkowski);

// Tropical slice: projection, cone-constancy, cone-separation, graph
// membership sampling; plus the structural match of the worked rank-2 example
// when the instance is B2 with c = s1 s2.
std::optional<std::string> check_tropical(const InstanceData& inst, std::uint64_t seed);

// Property suite: flip lemma, brick-vector monotonicity, [0, beta] edges,
// extremal exponents, ray well-definedness, facet enumeration oracle (when
// the candidate-subset count fits the budget) and fan completeness sampling.
std::optional<std::string> check_properties(const InstanceData& inst, std::uint64_t seed,
                                            std::size_t facet_oracle_budget = 1000000);

// The worked-example tables for A3 (c = 123) and B2 (c = 12) diffed against
// fixture files; `which` is one of "root", "weight", "shifted", "cluster".
std::optional<std::string> check_tables_against_fixtures(const std::string& fixtures_dir,
                                                         CartanType t, const std::string& which);

// Report text for the two counterexample words, and its fixture comparison.
std::string counterexample_report();
std::optional<std::string> check_counterexamples(const std::string& fixtures_dir);

// Hard-coded tropical coordinate functions of the worked rank-2 example.
TropMap b2_example_trop_map();

// The Coxeter fan: rays are the W-orbit of the fundamental weights (coweight
// coordinates), one maximal cone per group element.
Fan coxeter_fan(const CartanMatrix& C);

// Commutation equivalence of words (equal letter multisets and equal
// projections to every non-commuting pair).
bool commutation_equivalent(const CartanMatrix& C, const Word& a, const Word& b);

struct ScanOutcome {
  std::size_t words_scanned = 0;
  std::size_t complexes_tested = 0;
  std::vector<std::string> violations;  // empty in every run we know of
};

// Exhaustive scan over words up to the given length: flags words where
// root-independence + full support disagrees with commutation-equivalence to
// some cluster word.
ScanOutcome scan_conjecture(const CartanMatrix& C, int max_length);

std::string read_text_file(const std::string& path);

}  // namespace brickforge
