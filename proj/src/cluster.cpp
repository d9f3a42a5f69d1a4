#include "brickforge/cluster.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace brickforge {

ExtendedMutationMatrix::ExtendedMutationMatrix(int n, std::vector<Int> entries)
    : n_(n), m_(std::move(entries)) {
  if (m_.size() != 2 * static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("ExtendedMutationMatrix: need a 2n x n matrix");
}

bool ExtendedMutationMatrix::exchange_part_skew_symmetrizable(const CartanMatrix& C) const {
  const IVec& d = C.symmetrizer();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (d[static_cast<std::size_t>(i)] * at(i, j) != -d[static_cast<std::size_t>(j)] * at(j, i)) return false;
  return true;
}

ExtendedMutationMatrix initial_matrix(const CartanMatrix& C, const Word& coxeter_word) {
  check_coxeter_word(C, coxeter_word);
  int n = C.rank();
  std::vector<int> pos(static_cast<std::size_t>(n + 1), 0);
  for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(coxeter_word[static_cast<std::size_t>(p)])] = p;
  std::vector<Int> m(2 * static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  ExtendedMutationMatrix mat(n, std::move(m));
  for (int s = 1; s <= n; ++s)
    for (int t = 1; t <= n; ++t) {
      if (s == t) continue;
      Int a = C.at(s - 1, t - 1);
      mat.set(s - 1, t - 1, pos[static_cast<std::size_t>(s)] < pos[static_cast<std::size_t>(t)] ? -a : a);
    }
  for (int i = 0; i < n; ++i) mat.set(n + i, i, 1);
  return mat;
}

Seed Seed::initial(const CartanMatrix& C, const Word& coxeter_word) {
  int n = C.rank();
  std::vector<Laurent> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(Laurent::variable(2 * static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
  return Seed{initial_matrix(C, coxeter_word), std::move(vars)};
}

Seed mutate(const Seed& seed, int k) {
  int n = seed.matrix.rank();
  if (k < 1 || k > n) throw std::invalid_argument("mutate: direction out of range");
  std::size_t nv = 2 * static_cast<std::size_t>(n);

  ExtendedMutationMatrix mat = seed.matrix;
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < n; ++j) {
      Int mij = seed.matrix.at(i, j);
      if (i == k - 1 || j == k - 1) {
        mat.set(i, j, -mij);
      } else {
        Int mik = seed.matrix.at(i, k - 1);
        Int mkj = seed.matrix.at(k - 1, j);
        Int sign = mik > 0 ? 1 : (mik < 0 ? -1 : 0);
        Int prod = mik * mkj;
        mat.set(i, j, mij + sign * (prod > 0 ? prod : 0));
      }
    }

  // New variable: (prod_{m_ik > 0} z_i^{m_ik} + prod_{m_ik < 0} z_i^{-m_ik}) / x_k
  // with z = (x_1..x_n, y_1..y_n), using the unmutated column k.
  Laurent plus = Laurent::constant(nv, 1);
  Laurent minus = Laurent::constant(nv, 1);
  for (int i = 0; i < 2 * n; ++i) {
    Int e = seed.matrix.at(i, k - 1);
    if (e == 0) continue;
    Laurent z = i < n ? seed.variables[static_cast<std::size_t>(i)]
                      : Laurent::variable(nv, static_cast<std::size_t>(n + (i - n)) + 1);
    if (e > 0)
      plus = plus * z.pow(e);
    else
      minus = minus * z.pow(-e);
  }
  std::vector<Laurent> vars = seed.variables;
  Laurent numerator = plus + minus;
  try {
    vars[static_cast<std::size_t>(k - 1)] = numerator.divide_exact(seed.variables[static_cast<std::size_t>(k - 1)]);
  } catch (const NonLaurent&) {
    throw NonLaurent("mutation produced a non-Laurent variable");
  }
  return Seed{std::move(mat), std::move(vars)};
}

namespace {

std::string laurent_key(const Laurent& f) {
  std::ostringstream os;
  for (const auto& [e, c] : f.terms()) {
    for (Int x : e) os << x << ',';
    os << '=' << c << ';';
  }
  return os.str();
}

std::string seed_key(const Seed& s) {
  std::vector<std::string> keys;
  keys.reserve(s.variables.size());
  for (const Laurent& v : s.variables) keys.push_back(laurent_key(v));
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const std::string& k : keys) out += k + '|';
  return out;
}

ClusterVariableRecord make_record(const Laurent& expr, int n) {
  ClusterVariableRecord rec;
  rec.expr = expr;
  IVec mins = expr.min_exponents(0, static_cast<std::size_t>(n));
  rec.d_vector.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rec.d_vector[static_cast<std::size_t>(i)] = -mins[static_cast<std::size_t>(i)];
  Laurent at_y0 = expr.drop_variables(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  if (!at_y0.is_monomial() || at_y0.terms().begin()->second != 1)
    throw NotAMonomial("expr(x, 0) is not a plain monomial");
  const IVec& ge = at_y0.terms().begin()->first;
  rec.g_vector.assign(ge.begin(), ge.begin() + n);
  rec.initial = expr.is_monomial();
  if (!rec.initial) rec.f_polynomial = expr.set_variables_to_one(0, static_cast<std::size_t>(n));
  return rec;
}

}  // namespace

std::vector<ClusterVariableRecord> all_cluster_variables(const CartanMatrix& C,
                                                         const Word& coxeter_word,
                                                         std::size_t seed_budget) {
  int n = C.rank();
  Seed start = Seed::initial(C, coxeter_word);
  std::set<std::string> visited{seed_key(start)};
  std::map<std::string, Laurent> variables;
  for (const Laurent& v : start.variables) variables.emplace(laurent_key(v), v);
  std::vector<Seed> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Seed current = queue[head];
    for (int k = 1; k <= n; ++k) {
      Seed next = mutate(current, k);
      if (!visited.insert(seed_key(next)).second) continue;
      if (visited.size() > seed_budget) throw BudgetExceeded("seed enumeration exceeded its budget");
      for (const Laurent& v : next.variables) variables.emplace(laurent_key(v), v);
      queue.push_back(next);
    }
  }

  std::vector<ClusterVariableRecord> initial, records;
  std::map<IVec, ClusterVariableRecord> by_d_vector;
  for (const auto& [key, expr] : variables) {
    ClusterVariableRecord rec = make_record(expr, n);
    if (rec.initial)
      initial.push_back(std::move(rec));
    else if (!by_d_vector.emplace(rec.d_vector, rec).second)
      throw std::logic_error("two cluster variables share a d-vector");
    else
      continue;
  }
  std::sort(initial.begin(), initial.end(), [](const auto& a, const auto& b) {
    return a.g_vector < b.g_vector;
  });
  std::reverse(initial.begin(), initial.end());  // x_1, x_2, ..., x_n
  std::vector<ClusterVariableRecord> out = std::move(initial);
  std::vector<IVec> phi = positive_roots(C);
  if (by_d_vector.size() != phi.size())
    throw std::logic_error("non-initial cluster variable count differs from |Phi+|");
  for (const IVec& beta : phi) {
    auto it = by_d_vector.find(beta);
    if (it == by_d_vector.end())
      throw std::logic_error("d-vector is not a positive root");
    out.push_back(std::move(it->second));
  }
  return out;
}

VPolytope newton_polytope(const Laurent& f, int n) {
  if (f.is_zero()) throw std::invalid_argument("newton_polytope: zero polynomial");
  std::vector<QVec> pts;
  for (const auto& [e, c] : f.terms()) {
    QVec y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(n + i)];
    pts.push_back(std::move(y));
  }
  return hull_vertices(n, std::move(pts));
}

bool check_extremal_exponents(const Laurent& f, const IVec& beta, int n) {
  bool constant_one = false;
  int beta_hits = 0;
  for (const auto& [e, c] : f.terms()) {
    IVec y(e.begin() + n, e.end());
    if (is_zero(y) && is_zero(IVec(e.begin(), e.begin() + n))) constant_one = c == 1;
    bool dominated = true;
    bool equal = true;
    for (int i = 0; i < n; ++i) {
      if (y[static_cast<std::size_t>(i)] > beta[static_cast<std::size_t>(i)]) dominated = false;
      if (y[static_cast<std::size_t>(i)] != beta[static_cast<std::size_t>(i)]) equal = false;
    }
    if (!dominated) return false;
    if (equal) ++beta_hits;
  }
  return constant_one && beta_hits == 1;
}

}  // namespace brickforge
