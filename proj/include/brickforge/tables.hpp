#pragma once

// Table exporters mirroring the worked-example layouts: root-function and
// weight-function tables (rows = facets, columns = positions), shifted-weight
// tables with brick vectors, and the cluster-variable table. Entries are
// exact; the A/B ambient display used by the rank-2/3 fixtures is provided
// through an explicit ambient basis.

#include "brickforge/brick.hpp"
#include "brickforge/cluster.hpp"
#include "brickforge/subword.hpp"

#include <optional>
#include <string>

namespace brickforge {

// Ambient simple-root rows used by the worked examples; empty when no such
// display basis is defined for the type.
struct AmbientBasis {
  std::vector<IVec> simple_roots;  // one ambient row per simple root
  bool quotient_min_zero = false;  // family A: shift weight reps so min = 0
};
std::optional<AmbientBasis> paper_ambient_basis(CartanType t);

// Rows = facets in lexicographic order, columns = positions 1..m.
std::string root_table_tsv(const SubwordComplex& spec, const std::optional<AmbientBasis>& ambient);
std::string weight_table_tsv(const SubwordComplex& spec, const std::optional<AmbientBasis>& ambient);

// Shifted weights for positions n+1..n+N in root coordinates plus the brick
// vector column.
std::string shifted_table_tsv(const BrickGeometry& brick);

// One row per cluster variable: d-vector, expression, g-vector, F-polynomial.
std::string cluster_table_tsv(const std::vector<ClusterVariableRecord>& records, int n);

// Monomial-expression parser for fixture files: sums of rational-coefficient
// monomials in x1..xn, y1..yn, optionally of the form "(num)/den" with a
// monomial denominator.
Laurent parse_polynomial(const std::string& text, int n);
Laurent parse_variable_expr(const std::string& text, int n);

// Semantic comparison of two cluster tables (parses the polynomial columns);
// returns a witness describing the first difference, or nullopt on equality.
std::optional<std::string> diff_cluster_table(const std::string& computed, const std::string& fixture, int n);

// Line-by-line comparison for the numeric tables; returns a witness or nullopt.
std::optional<std::string> diff_exact(const std::string& computed, const std::string& fixture);

std::string facet_label(const Facet& I, int word_length);
std::string ivec_to_string(const IVec& v);
IVec ivec_from_string(const std::string& s);

}  // namespace brickforge
