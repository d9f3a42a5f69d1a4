#include "brickforge/verify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace brickforge {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const VPolytope& InstanceData::summand_of_root(const IVec& beta) const {
  int k = brick->position_of_root(beta);
  return summands[static_cast<std::size_t>(k - spec->rank() - 1)];
}

InstanceData build_instance(CartanType t, const Word& coxeter_word) {
  InstanceData inst;
  inst.type = t;
  inst.coxeter = coxeter_word;
  CartanMatrix C = build_cartan(t);
  inst.spec = std::make_shared<SubwordComplex>(SubwordComplex::cluster_word(C, coxeter_word));
  inst.brick = std::make_shared<BrickGeometry>(*inst.spec);
  inst.records = all_cluster_variables(C, coxeter_word);
  inst.fan = inst.brick->g_vector_fan();
  for (int k = inst.spec->rank() + 1; k <= inst.spec->word_length(); ++k) {
    inst.summands.push_back(inst.brick->summand_polytope(inst.brick->root_of_position(k)));
    inst.summand_heights.push_back(support_heights(inst.summands.back(), inst.fan));
  }
  return inst;
}

std::vector<Word> instance_coxeter_words(const CartanMatrix& C, bool all) {
  if (all) return coxeter_elements(C);
  Word c(static_cast<std::size_t>(C.rank()));
  std::iota(c.begin(), c.end(), 1);
  return {c};
}

namespace {

std::string instance_tag(const InstanceData& inst) {
  std::string w;
  for (int s : inst.coxeter) w += std::to_string(s);
  return inst.type.name() + " c=" + w;
}

}  // namespace

std::optional<std::string> check_newton(const InstanceData& inst) {
  int n = inst.spec->rank();
  for (const auto& rec : inst.records) {
    if (rec.initial) continue;
    VPolytope newton = newton_polytope(*rec.f_polynomial, n);
    const VPolytope& summand = inst.summand_of_root(rec.d_vector);
    if (newton != summand)
      return instance_tag(inst) + ": Newton(F_beta) != Asso_beta at beta = " + ivec_to_string(rec.d_vector);
  }
  return std::nullopt;
}

std::optional<std::string> check_typecone(const InstanceData& inst, bool include_minkowski) {
  const std::string tag = instance_tag(inst);
  std::size_t facet_count = inst.spec->facets().size();

  VPolytope asso = inst.brick->asso_polytope();
  if (asso.vertex_count() != facet_count)
    return tag + ": brick polytope has " + std::to_string(asso.vertex_count()) + " vertices, expected " +
           std::to_string(facet_count);
  std::set<IVec> brick_vectors;
  for (const Facet& I : inst.spec->facets()) brick_vectors.insert(inst.brick->brick_vector(I));
  if (brick_vectors.size() != facet_count) return tag + ": brick vectors are not injective on facets";

  HeightVector asso_heights = support_heights(asso, inst.fan);
  HeightPolytope round_trip = polytope_from_heights(inst.fan, asso_heights);
  if (!round_trip.in_type_cone) return tag + ": Asso(c) heights are not interior to the type cone";
  if (round_trip.polytope != asso) return tag + ": P_h round trip does not reproduce Asso(c)";

  TypeConeReport report = type_cone_simplicial_check(inst.fan, inst.summand_heights);
  if (!report.full_rank)
    return tag + ": height/ray rank " + std::to_string(report.rank) + " < " + std::to_string(report.expected_rank);
  if (!report.interior) return tag + ": total summand height vector is not interior";
  if (report.total_vertex_count != facet_count) return tag + ": reconstructed total has wrong vertex count";
  for (std::size_t s = 0; s < report.leave_one_out.size(); ++s) {
    const auto& loo = report.leave_one_out[s];
    if (loo.interior)
      return tag + ": leave-one-out sum at position " + std::to_string(inst.spec->rank() + 1 + static_cast<int>(s)) +
             " is still interior";
    if (loo.vertex_count >= facet_count)
      return tag + ": leave-one-out sum at position " + std::to_string(inst.spec->rank() + 1 + static_cast<int>(s)) +
             " does not lose a vertex";
  }

  // Boundary degeneration on the restricted brick vectors themselves.
  for (std::size_t s = 0; s < inst.summands.size(); ++s) {
    std::vector<IVec> rest;
    for (std::size_t u = 0; u < inst.summands.size(); ++u)
      if (u != s) rest.push_back(inst.brick->root_of_position(inst.spec->rank() + 1 + static_cast<int>(u)));
    VPolytope asso_x = inst.brick->asso_x_polytope(rest);
    if (asso_x.vertex_count() >= facet_count)
      return tag + ": Asso_X with X missing one root still has #facets vertices";
  }

  if (include_minkowski) {
    VPolytope sum = inst.summands.front();
    for (std::size_t s = 1; s < inst.summands.size(); ++s) sum = minkowski_sum(sum, inst.summands[s]);
    if (sum != asso) return tag + ": Minkowski sum of all summands differs from Asso(c)";
  }
  return std::nullopt;
}

TropMap b2_example_trop_map() {
  TropMap map;
  map.n = 2;
  auto e = [](Int x1, Int x2, Int y1, Int y2) { return IVec{x1, x2, y1, y2}; };
  map.betas = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  map.exponent_sets.resize(4);
  // max(2 x2, y1) - x1
  map.exponent_sets[0] = {e(0, 0, 1, 0), e(0, 2, 0, 0)};
  // max(x1 + y2, 0) - x2
  map.exponent_sets[1] = {e(0, 0, 0, 0), e(1, 0, 0, 1)};
  // max(x1 + y1 + y2, 2 x2, y1) - x1 - x2
  map.exponent_sets[2] = {e(0, 0, 1, 0), e(0, 2, 0, 0), e(1, 0, 1, 1)};
  // max(2 x1 + y1 + 2 y2, x1 + y1 + y2, 2 x2, y1) - x1 - 2 x2
  map.exponent_sets[3] = {e(0, 0, 1, 0), e(0, 2, 0, 0), e(1, 0, 1, 1), e(2, 0, 1, 2)};
  for (auto& set : map.exponent_sets) std::sort(set.begin(), set.end());
  return map;
}

std::optional<std::string> check_tropical(const InstanceData& inst, std::uint64_t seed) {
  const std::string tag = instance_tag(inst);
  SliceReport report = verify_slice_isomorphism(*inst.brick, inst.records, seed);
  if (!report.ok()) return tag + ": " + report.witness;
  if (report.distinct_signatures != inst.fan.maximal_cones.size())
    return tag + ": signature count differs from cone count";

  TropMap map = build_trop_map(inst.records, inst.spec->rank());
  std::vector<GeneratorPolynomial> gens = build_generators(inst.records, inst.spec->rank());
  if (!check_graph_membership(map, gens, seed + 1, 200))
    return tag + ": a sampled graph point misses a positive tropical hypersurface";

  Word standard{1, 2};
  if (inst.type.family == 'B' && inst.type.rank == 2 && inst.coxeter == standard) {
    TropMap expected = b2_example_trop_map();
    std::map<IVec, std::vector<IVec>> got;
    for (std::size_t b = 0; b < map.betas.size(); ++b) {
      auto sorted = map.exponent_sets[b];
      std::sort(sorted.begin(), sorted.end());
      got[map.betas[b]] = sorted;
    }
    for (std::size_t b = 0; b < expected.betas.size(); ++b)
      if (got[expected.betas[b]] != expected.exponent_sets[b])
        return tag + ": coordinate function differs from the worked example at beta = " +
               ivec_to_string(expected.betas[b]);
  }
  return std::nullopt;
}

std::optional<std::string> check_properties(const InstanceData& inst, std::uint64_t seed,
                                            std::size_t facet_oracle_budget) {
  const std::string tag = instance_tag(inst);
  const SubwordComplex& spec = *inst.spec;
  const CartanMatrix& C = spec.cartan();
  int m = spec.word_length();
  std::size_t facet_count = spec.facets().size();

  // Flip lemma and brick-vector monotonicity across every increasing flip.
  for (const Facet& I : spec.facets()) {
    for (int i : I) {
      auto [J, j] = spec.flip(I, i);
      if (i >= j) continue;  // each flip is visited from its increasing side
      IVec rho = spec.root_function(I, i);
      IVec rho_weight = weight_coords_int(C, rho);
      for (int k = 1; k <= m; ++k) {
        IVec delta = ivec_sub(spec.weight_function(I, k), spec.weight_function(J, k));
        // delta must equal lambda * rho in weight coordinates, lambda >= 0.
        std::optional<Int> lambda;
        bool proportional = true;
        for (std::size_t t = 0; t < delta.size() && proportional; ++t) {
          if (rho_weight[t] == 0) {
            proportional = delta[t] == 0;
          } else if (delta[t] % rho_weight[t] != 0) {
            proportional = false;
          } else {
            Int l = delta[t] / rho_weight[t];
            if (lambda && *lambda != l) proportional = false;
            lambda = l;
          }
        }
        if (!proportional || (lambda && *lambda < 0))
          return tag + ": flip lemma fails at facet " + facet_label(I, m) + ", i=" + std::to_string(i) +
                 ", k=" + std::to_string(k);
      }
      IVec diff = ivec_sub(inst.brick->brick_vector(I), inst.brick->brick_vector(J));
      std::optional<Int> lambda;
      bool ok = true;
      for (std::size_t t = 0; t < diff.size() && ok; ++t) {
        if (rho[t] == 0) {
          ok = diff[t] == 0;
        } else if (diff[t] % rho[t] != 0) {
          ok = false;
        } else {
          Int l = diff[t] / rho[t];
          if (lambda && *lambda != l) ok = false;
          lambda = l;
        }
      }
      if (!ok || !lambda || *lambda <= 0)
        return tag + ": brick vectors not strictly monotone along flip of " + std::to_string(i) + " in " +
               facet_label(I, m);
    }
  }

  // [0, beta] is an edge of each summand.
  int n = spec.rank();
  QVec origin(static_cast<std::size_t>(n), Rat(0));
  for (std::size_t s = 0; s < inst.summands.size(); ++s) {
    IVec beta = inst.brick->root_of_position(n + 1 + static_cast<int>(s));
    if (!is_edge(inst.summands[s], origin, to_rational(beta)))
      return tag + ": [0, beta] is not an edge of the summand at beta = " + ivec_to_string(beta);
  }

  // Extremal exponents of every F-polynomial.
  for (const auto& rec : inst.records) {
    if (rec.initial) continue;
    if (!check_extremal_exponents(*rec.f_polynomial, rec.d_vector, n))
      return tag + ": extremal-exponent property fails at beta = " + ivec_to_string(rec.d_vector);
  }

  // Ray well-definedness: facets sharing a position agree on its weight.
  std::map<int, IVec> ray_weight;
  for (const Facet& I : spec.facets())
    for (int p : I) {
      IVec w = spec.weight_function(I, p);
      auto [it, inserted] = ray_weight.emplace(p, w);
      if (!inserted && it->second != w)
        return tag + ": weight of position " + std::to_string(p) + " depends on the facet";
    }

  // Cross-module: record g-vectors match the fan rays positionwise.
  for (const auto& rec : inst.records) {
    if (rec.initial) continue;
    int k = inst.brick->position_of_root(rec.d_vector);
    if (inst.brick->ray_weight_coords(k) != rec.g_vector)
      return tag + ": g-vector at beta = " + ivec_to_string(rec.d_vector) + " differs from the fan ray";
  }

  // Fan completeness sampling.
  if (!check_fan_complete(inst.fan, seed, 1000)) return tag + ": fan completeness check failed";

  // Brute-force facet oracle when the subset count is within budget.
  double log_count = 0;
  for (int t = 0; t < spec.facet_size(); ++t)
    log_count += std::log10(static_cast<double>(m - t)) - std::log10(static_cast<double>(t + 1));
  if (log_count <= std::log10(static_cast<double>(facet_oracle_budget))) {
    if (spec.facets() != spec.facets_bruteforce()) return tag + ": flip enumeration differs from brute force";
  }
  return std::nullopt;
}

std::optional<std::string> check_tables_against_fixtures(const std::string& fixtures_dir,
                                                         CartanType t, const std::string& which) {
  Word cox(static_cast<std::size_t>(t.rank));
  std::iota(cox.begin(), cox.end(), 1);
  CartanMatrix C = build_cartan(t);
  SubwordComplex spec = SubwordComplex::cluster_word(C, cox);
  std::string lower = t.name();
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::string path = fixtures_dir + "/" + which + "_table_" + lower + ".tsv";
  std::string fixture = read_text_file(path);
  std::optional<std::string> diff;
  if (which == "root") {
    diff = diff_exact(root_table_tsv(spec, paper_ambient_basis(t)), fixture);
  } else if (which == "weight") {
    diff = diff_exact(weight_table_tsv(spec, paper_ambient_basis(t)), fixture);
  } else if (which == "shifted") {
    BrickGeometry brick(spec);
    diff = diff_exact(shifted_table_tsv(brick), fixture);
  } else if (which == "cluster") {
    diff = diff_cluster_table(cluster_table_tsv(all_cluster_variables(C, cox), t.rank), fixture, t.rank);
  } else {
    throw std::invalid_argument("unknown table kind: " + which);
  }
  if (diff) return t.name() + " " + which + " table: " + *diff;
  return std::nullopt;
}

Fan coxeter_fan(const CartanMatrix& C) {
  int n = C.rank();
  // Weight-side generator matrices T_i = Id - (col i of C) e_i^T.
  std::vector<GroupElement> gens;
  for (int i = 1; i <= n; ++i) {
    std::vector<Int> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        m[static_cast<std::size_t>(r * n + c)] = (r == c ? 1 : 0) - (c == i - 1 ? C.at(r, i - 1) : 0);
    gens.emplace_back(n, std::move(m));
  }
  std::set<GroupElement> seen{GroupElement(n)};
  std::vector<GroupElement> queue{GroupElement(n)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    GroupElement w = queue[head];
    for (const GroupElement& s : gens) {
      GroupElement next = w * s;
      if (seen.insert(next).second) queue.push_back(next);
    }
    if (seen.size() > 200000) throw std::runtime_error("coxeter_fan: group too large");
  }
  const IVec& d = C.symmetrizer();
  Fan fan;
  fan.dim = n;
  std::map<IVec, int> ray_index;
  for (const GroupElement& w : queue) {
    std::vector<int> cone;
    for (int i = 1; i <= n; ++i) {
      IVec weight = w.column(i);  // weight coords of w(omega_i)
      IVec coweight = weight;
      for (int t = 0; t < n; ++t) coweight[static_cast<std::size_t>(t)] *= d[static_cast<std::size_t>(t)];
      auto [it, inserted] = ray_index.emplace(coweight, static_cast<int>(fan.rays.size()));
      if (inserted) fan.rays.push_back(to_rational(coweight));
      cone.push_back(it->second);
    }
    std::sort(cone.begin(), cone.end());
    fan.maximal_cones.push_back(std::move(cone));
  }
  std::sort(fan.maximal_cones.begin(), fan.maximal_cones.end());
  fan.maximal_cones.erase(std::unique(fan.maximal_cones.begin(), fan.maximal_cones.end()),
                          fan.maximal_cones.end());
  fan.validate();
  return fan;
}

namespace {

std::string polytope_line(const VPolytope& p) {
  std::ostringstream os;
  os << "conv{";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    os << (i ? " | " : " ");
    const QVec& v = p.vertices()[i];
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j) os << ' ';
      os << (denominator(v[j]) == 1 ? numerator(v[j]).str() : rat_to_string(v[j]));
    }
  }
  os << " }";
  return os.str();
}

void counterexample_section(std::ostringstream& os, const CartanMatrix& C, const Word& q) {
  SubwordComplex spec(C, q);
  os << "word ";
  for (int s : q) os << s;
  os << '\n';
  os << "facets";
  for (const Facet& I : spec.facets()) os << ' ' << facet_label(I, spec.word_length());
  os << '\n';
  os << "root_independent " << (spec.is_root_independent() ? "true" : "false") << '\n';
  os << "full_support " << (spec.has_full_support() ? "true" : "false") << '\n';
  std::vector<int> unsupported;
  std::vector<bool> used(static_cast<std::size_t>(spec.word_length() + 1), false);
  for (const Facet& I : spec.facets())
    for (int p : I) used[static_cast<std::size_t>(p)] = true;
  for (int p = 1; p <= spec.word_length(); ++p)
    if (!used[static_cast<std::size_t>(p)]) unsupported.push_back(p);
  os << "unsupported_positions";
  if (unsupported.empty()) os << " -";
  for (int p : unsupported) os << ' ' << p;
  os << '\n';
  BrickGeometry brick(spec);
  std::vector<VPolytope> columns;
  for (int i = 1; i <= spec.word_length(); ++i) {
    columns.push_back(brick.column_polytope(i));
    os << 'P' << i << " = " << polytope_line(columns.back()) << '\n';
  }
  if (q == Word{1, 2, 1, 2, 1, 2, 1}) {
    // P4 + P6 decomposes into three segments.
    int n = spec.rank();
    auto segment = [&](Int a1, Int a2) {
      return VPolytope::from_integer_points(n, {{0, 0}, {a1, a2}});
    };
    VPolytope sum_segments =
        minkowski_sum(minkowski_sum(segment(1, 0), segment(0, 1)), segment(1, 1));
    VPolytope p4p6 = minkowski_sum(columns[3], columns[5]);
    os << "P4+P6_segment_decomposition " << (sum_segments == p4p6 ? "true" : "false") << '\n';
    // Brick polytope over all positions, antigreedy at the origin.
    Facet antigreedy = spec.antigreedy_facet();
    std::vector<IVec> brick_vectors;
    for (const Facet& I : spec.facets()) {
      QVec total(static_cast<std::size_t>(n), Rat(0));
      for (int k = 1; k <= spec.word_length(); ++k) {
        IVec d = ivec_sub(spec.weight_function(I, k), spec.weight_function(antigreedy, k));
        total = qvec_add(total, root_coords(C, to_rational(d)));
      }
      brick_vectors.push_back(to_integer(total));
    }
    VPolytope brick_poly = VPolytope::from_integer_points(n, brick_vectors);
    os << "brick_vertices " << brick_poly.vertex_count() << '\n';
    // Permutahedron claim: the polytope's normal fan is the Coxeter fan,
    // checked through the height round-trip against that fan.
    Fan coxeter = coxeter_fan(C);
    HeightPolytope round_trip = polytope_from_heights(coxeter, support_heights(brick_poly, coxeter));
    bool permutahedron = round_trip.in_type_cone && round_trip.polytope == brick_poly &&
                         brick_poly.vertex_count() == 8;
    os << "permutahedron " << (permutahedron ? "true" : "false") << '\n';
  }
  if (q == Word{2, 1, 2, 2, 1, 2})
    os << "P5_equals_P3+P6 " << (minkowski_sum(columns[2], columns[5]) == columns[4] ? "true" : "false")
       << '\n';
}

}  // namespace

std::string counterexample_report() {
  CartanMatrix C = build_cartan(CartanType{'B', 2});
  std::ostringstream os;
  counterexample_section(os, C, {1, 2, 1, 2, 1, 2, 1});
  counterexample_section(os, C, {2, 1, 2, 2, 1, 2});
  return os.str();
}

std::optional<std::string> check_counterexamples(const std::string& fixtures_dir) {
  std::string fixture = read_text_file(fixtures_dir + "/counterexamples_b2.txt");
  if (auto diff = diff_exact(counterexample_report(), fixture))
    return "counterexample report: " + *diff;
  return std::nullopt;
}

bool commutation_equivalent(const CartanMatrix& C, const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  // Multiset equality plus equal projections to every dependent pair.
  Word sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  int n = C.rank();
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t) {
      if (C.at(s - 1, t - 1) == 0) continue;  // commuting pair: projection free
      Word pa, pb;
      for (int x : a)
        if (x == s || x == t) pa.push_back(x);
      for (int x : b)
        if (x == s || x == t) pb.push_back(x);
      if (pa != pb) return false;
    }
  return true;
}

ScanOutcome scan_conjecture(const CartanMatrix& C, int max_length) {
  ScanOutcome out;
  if (max_length <= 0) return out;
  int n = C.rank();
  GroupElement w0 = longest_element(C);
  std::vector<Word> cluster_words;
  for (const Word& c : coxeter_elements(C)) {
    Word q = c;
    Word w0c = sorting_word(C, c);
    q.insert(q.end(), w0c.begin(), w0c.end());
    cluster_words.push_back(std::move(q));
  }
  Word q;
  // Depth-first enumeration of all words of length <= max_length.
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int next = ++stack.back();
    if (next > n) {
      stack.pop_back();
      if (!q.empty()) q.pop_back();
      continue;
    }
    q.push_back(next);
    ++out.words_scanned;
    if (demazure_product(C, q) == w0) {
      ++out.complexes_tested;
      SubwordComplex spec(C, q);
      bool props = spec.is_root_independent() && spec.has_full_support();
      bool equivalent = false;
      for (const Word& cw : cluster_words)
        if (commutation_equivalent(C, q, cw)) {
          equivalent = true;
          break;
        }
      if (props != equivalent) {
        std::string w;
        for (int s : q) w += std::to_string(s);
        out.violations.push_back(w + (props ? " has both properties but is not a cluster word"
                                            : " is commutation-equivalent to a cluster word without the properties"));
      }
    }
    if (static_cast<int>(q.size()) < max_length) stack.push_back(0);
    else {
      q.pop_back();
    }
  }
  return out;
}

}  // namespace brickforge
