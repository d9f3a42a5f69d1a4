#include "brickforge/tropical.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace brickforge {

namespace {

// Support of p_beta = expr * x^beta in Z^{2n}; all entries end up >= 0.
std::vector<IVec> numerator_support(const ClusterVariableRecord& rec, int n) {
  std::vector<IVec> out;
  for (const auto& [e, c] : rec.expr.terms()) {
    IVec shifted = e;
    for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)] += rec.d_vector[static_cast<std::size_t>(i)];
    out.push_back(std::move(shifted));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<GeneratorPolynomial> build_generators(const std::vector<ClusterVariableRecord>& records, int n) {
  std::vector<GeneratorPolynomial> out;
  std::size_t num_noninitial = 0;
  for (const auto& rec : records)
    if (!rec.initial) ++num_noninitial;
  std::size_t dim = 2 * static_cast<std::size_t>(n) + num_noninitial;
  std::size_t beta_index = 0;
  for (const auto& rec : records) {
    if (rec.initial) continue;
    GeneratorPolynomial g;
    g.beta = rec.d_vector;
    // Coordinates: x_1..x_n, then x_beta in record order, then y_1..y_n.
    g.positive_exponent.assign(dim, 0);
    for (int i = 0; i < n; ++i) g.positive_exponent[static_cast<std::size_t>(i)] = rec.d_vector[static_cast<std::size_t>(i)];
    g.positive_exponent[static_cast<std::size_t>(n) + beta_index] = 1;
    for (const IVec& e : numerator_support(rec, n)) {
      IVec emb(dim, 0);
      for (int i = 0; i < n; ++i) emb[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
      for (int i = 0; i < n; ++i) emb[static_cast<std::size_t>(n) + num_noninitial + static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(n + i)];
      g.negative_exponents.push_back(std::move(emb));
    }
    out.push_back(std::move(g));
    ++beta_index;
  }
  return out;
}

TropMap build_trop_map(const std::vector<ClusterVariableRecord>& records, int n) {
  TropMap map;
  map.n = n;
  for (const auto& rec : records) {
    if (rec.initial) continue;
    map.betas.push_back(rec.d_vector);
    map.exponent_sets.push_back(numerator_support(rec, n));
  }
  return map;
}

std::vector<IVec> argmax_set(const std::vector<IVec>& exponents, const QVec& w) {
  if (exponents.empty()) throw std::invalid_argument("argmax_set: empty exponent set");
  std::vector<IVec> best;
  Rat best_val;
  for (const IVec& e : exponents) {
    if (e.size() != w.size()) throw IndexMismatch("argmax_set: arity mismatch");
    Rat val = 0;
    for (std::size_t i = 0; i < e.size(); ++i) val += w[i] * e[i];
    if (best.empty() || val > best_val) {
      best_val = val;
      best.assign(1, e);
    } else if (val == best_val) {
      best.push_back(e);
    }
  }
  return best;
}

TropValue trop_eval(const TropMap& map, const QVec& w) {
  if (w.size() != 2 * static_cast<std::size_t>(map.n)) throw IndexMismatch("trop_eval: weight arity mismatch");
  TropValue out;
  for (std::size_t b = 0; b < map.betas.size(); ++b) {
    std::vector<IVec> arg = argmax_set(map.exponent_sets[b], w);
    Rat val = 0;
    for (std::size_t i = 0; i < w.size(); ++i) val += w[i] * arg.front()[i];
    for (int i = 0; i < map.n; ++i) val -= w[static_cast<std::size_t>(i)] * map.betas[b][static_cast<std::size_t>(i)];
    out.values.push_back(val);
    out.signature.sets.push_back(std::move(arg));
  }
  return out;
}

bool is_on_positive_hypersurface(const GeneratorPolynomial& g, const QVec& w) {
  if (w.size() != g.positive_exponent.size()) throw IndexMismatch("weight arity mismatch");
  Rat pos = 0;
  for (std::size_t i = 0; i < w.size(); ++i) pos += w[i] * g.positive_exponent[i];
  bool neg_attains = false;
  Rat best_neg;
  for (const IVec& e : g.negative_exponents) {
    Rat val = 0;
    for (std::size_t i = 0; i < w.size(); ++i) val += w[i] * e[i];
    if (!neg_attains || val > best_neg) {
      best_neg = val;
      neg_attains = true;
    }
  }
  return neg_attains && best_neg == pos;
}

namespace {

std::string facet_label(const Facet& I) {
  std::ostringstream os;
  for (std::size_t i = 0; i < I.size(); ++i) os << (i ? "," : "") << I[i];
  return os.str();
}

}  // namespace

SliceReport verify_slice_isomorphism(const BrickGeometry& brick,
                                     const std::vector<ClusterVariableRecord>& records,
                                     std::uint64_t seed, int perturbations_per_cone) {
  const SubwordComplex& spec = brick.spec();
  int n = spec.rank();
  SliceReport report;
  TropMap map = build_trop_map(records, n);

  // (a) projection: y-exponents of E_beta match the support of F_beta, and
  // the Newton polytopes agree.
  report.projection_ok = true;
  std::size_t rec_index = 0;
  for (const auto& rec : records) {
    if (rec.initial) continue;
    std::set<IVec> projected;
    for (const IVec& e : map.exponent_sets[rec_index]) projected.insert(IVec(e.begin() + n, e.end()));
    std::set<IVec> f_support;
    for (const auto& [e, c] : rec.f_polynomial->terms()) f_support.insert(IVec(e.begin() + n, e.end()));
    if (projected != f_support) {
      report.projection_ok = false;
      report.witness = "projection mismatch at beta";
      break;
    }
    std::vector<QVec> pts;
    for (const IVec& y : projected) pts.push_back(to_rational(y));
    if (hull_vertices(n, pts) != newton_polytope(*rec.f_polynomial, n)) {
      report.projection_ok = false;
      report.witness = "projected Newton polytope mismatch";
      break;
    }
    ++rec_index;
  }

  // (b), (c): signatures on the x = 0 slice, sampled per maximal cone.
  Fan fan = brick.g_vector_fan();
  report.cone_count = fan.maximal_cones.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numer(1, 7);
  std::map<ArgmaxSignature, std::size_t> signature_to_cone;
  report.cone_constancy = true;
  report.cone_separation = true;
  for (std::size_t ci = 0; ci < fan.maximal_cones.size(); ++ci) {
    const auto& cone = fan.maximal_cones[ci];
    std::vector<QVec> samples;
    QVec base(static_cast<std::size_t>(n), Rat(0));
    for (int idx : cone) base = qvec_add(base, fan.rays[static_cast<std::size_t>(idx)]);
    samples.push_back(base);
    for (int p = 0; p < perturbations_per_cone; ++p) {
      // Positive combination sum (1 + delta_i) r_i stays interior; magnitudes
      // shrink with p. Membership is still verified, with up to 5 retries.
      for (int attempt = 0;; ++attempt) {
        QVec pt(static_cast<std::size_t>(n), Rat(0));
        for (int idx : cone) {
          Rat delta(numer(rng), 8LL << (p + attempt));
          pt = qvec_add(pt, qvec_add(fan.rays[static_cast<std::size_t>(idx)],
                                     [&] {
                                       QVec scaled = fan.rays[static_cast<std::size_t>(idx)];
                                       for (Rat& x : scaled) x *= delta;
                                       return scaled;
                                     }()));
        }
        if (cone_contains(fan, cone, pt, /*strict=*/true)) {
          samples.push_back(pt);
          break;
        }
        if (attempt >= 5) throw SampleEscapedCone("perturbed sample left its cone");
      }
    }
    std::optional<ArgmaxSignature> sig;
    for (const QVec& y : samples) {
      QVec w(static_cast<std::size_t>(2 * n), Rat(0));
      for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(n + i)] = y[static_cast<std::size_t>(i)];
      TropValue tv = trop_eval(map, w);
      if (!sig) {
        sig = tv.signature;
      } else if (!(*sig == tv.signature)) {
        report.cone_constancy = false;
        if (report.witness.empty())
          report.witness = "signature not constant on cone of facet " +
                           facet_label(spec.facets()[ci]);
      }
    }
    auto [it, inserted] = signature_to_cone.emplace(*sig, ci);
    if (!inserted) {
      report.cone_separation = false;
      if (report.witness.empty())
        report.witness = "facets " + facet_label(spec.facets()[it->second]) + " and " +
                         facet_label(spec.facets()[ci]) + " share a signature";
    }
  }
  report.distinct_signatures = signature_to_cone.size();
  return report;
}

bool check_graph_membership(const TropMap& map, const std::vector<GeneratorPolynomial>& generators,
                            std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-48, 48);
  std::uniform_int_distribution<int> den(1, 12);
  std::size_t big_n = map.betas.size();
  for (int s = 0; s < samples; ++s) {
    QVec w(static_cast<std::size_t>(2 * map.n));
    for (Rat& x : w) x = Rat(num(rng), den(rng));
    TropValue tv = trop_eval(map, w);
    // Graph point: (x-part, Trop Psi values, y-part) in Q^{X u Y}.
    QVec graph(2 * static_cast<std::size_t>(map.n) + big_n);
    for (int i = 0; i < map.n; ++i) graph[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)];
    for (std::size_t b = 0; b < big_n; ++b) graph[static_cast<std::size_t>(map.n) + b] = tv.values[b];
    for (int i = 0; i < map.n; ++i)
      graph[static_cast<std::size_t>(map.n) + big_n + static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(map.n + i)];
    for (const GeneratorPolynomial& g : generators)
      if (!is_on_positive_hypersurface(g, graph)) return false;
  }
  return true;
}

}  // namespace brickforge
