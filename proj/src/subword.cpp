#include "brickforge/subword.hpp"

#include <algorithm>
#include <set>

namespace brickforge {

namespace {

bool contains(const Facet& I, int k) { return std::binary_search(I.begin(), I.end(), k); }

Word complement_word(const Word& q, const Facet& I) {
  Word w;
  w.reserve(q.size() - I.size());
  std::size_t next = 0;
  for (int k = 1; k <= static_cast<int>(q.size()); ++k) {
    if (next < I.size() && I[next] == k) {
      ++next;
      continue;
    }
    w.push_back(q[static_cast<std::size_t>(k - 1)]);
  }
  return w;
}

}  // namespace

SubwordComplex::SubwordComplex(CartanMatrix cartan, Word q)
    : cartan_(std::move(cartan)),
      q_(std::move(q)),
      m_(static_cast<int>(q_.size())),
      n_(cartan_.rank()),
      big_n_(0),
      w0_(longest_element(cartan_)) {
  for (int s : q_)
    if (s < 1 || s > n_) throw std::invalid_argument("word letter out of range");
  big_n_ = length(cartan_, w0_);
  if (!(demazure_product(cartan_, q_) == w0_))
    throw DemazureTooShort("word contains no reduced word for the longest element");
}

SubwordComplex SubwordComplex::cluster_word(const CartanMatrix& C, const Word& coxeter_word) {
  check_coxeter_word(C, coxeter_word);
  Word q = coxeter_word;
  Word w0c = sorting_word(C, coxeter_word);
  q.insert(q.end(), w0c.begin(), w0c.end());
  SubwordComplex spec(C, q);
  spec.coxeter_word_ = coxeter_word;
  return spec;
}

const Word& SubwordComplex::coxeter_word() const {
  if (!coxeter_word_) throw std::logic_error("spec was not built from a Coxeter word");
  return *coxeter_word_;
}

bool SubwordComplex::is_facet(const Facet& I) const {
  if (static_cast<int>(I.size()) != facet_size()) return false;
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (I[i] < 1 || I[i] > m_) return false;
    if (i > 0 && I[i] <= I[i - 1]) return false;
  }
  return is_reduced(cartan_, complement_word(q_, I));
}

const SubwordComplex::Tables& SubwordComplex::tables(const Facet& I) const {
  {
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    auto it = table_cache_.find(I);
    if (it != table_cache_.end()) return *it->second;
  }
  auto t = std::make_shared<Tables>();
  t->roots.resize(static_cast<std::size_t>(m_));
  t->weights.resize(static_cast<std::size_t>(m_));
  GroupElement root_prod(n_);   // product over complement positions < k, root side
  GroupElement weight_prod(n_); // same product acting on weight coordinates
  // Weight-side simple reflection: T_i = Id - (col i of C) e_i^T.
  std::vector<GroupElement> t_mats;
  std::vector<GroupElement> s_mats;
  for (int i = 1; i <= n_; ++i) {
    s_mats.push_back(simple_reflection(cartan_, i));
    std::vector<Int> m(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        m[static_cast<std::size_t>(r * n_ + c)] = (r == c ? 1 : 0) - (c == i - 1 ? cartan_.at(r, i - 1) : 0);
    t_mats.emplace_back(n_, std::move(m));
  }
  for (int k = 1; k <= m_; ++k) {
    int s = q_[static_cast<std::size_t>(k - 1)];
    t->roots[static_cast<std::size_t>(k - 1)] = root_prod.column(s);
    t->weights[static_cast<std::size_t>(k - 1)] = weight_prod.column(s);
    if (!contains(I, k)) {
      root_prod = root_prod * s_mats[static_cast<std::size_t>(s - 1)];
      weight_prod = weight_prod * t_mats[static_cast<std::size_t>(s - 1)];
    }
  }
  std::lock_guard<std::mutex> lock(*cache_mutex_);
  auto [it, inserted] = table_cache_.emplace(I, std::move(t));
  return *it->second;
}

IVec SubwordComplex::root_function(const Facet& I, int k) const {
  return tables(I).roots[static_cast<std::size_t>(k - 1)];
}

IVec SubwordComplex::weight_function(const Facet& I, int k) const {
  return tables(I).weights[static_cast<std::size_t>(k - 1)];
}

QVec SubwordComplex::weight_function_root_coords(const Facet& I, int k) const {
  return root_coords(cartan_, to_rational(weight_function(I, k)));
}

Facet SubwordComplex::greedy_facet() const {
  Facet I;
  for (int k = 1; k <= m_; ++k) {
    I.push_back(k);
    if (!(demazure_product(cartan_, complement_word(q_, I)) == w0_)) I.pop_back();
  }
  return I;
}

Facet SubwordComplex::antigreedy_facet() const {
  Facet I;
  for (int k = m_; k >= 1; --k) {
    I.insert(I.begin(), k);
    if (!(demazure_product(cartan_, complement_word(q_, I)) == w0_)) I.erase(I.begin());
  }
  return I;
}

std::pair<Facet, int> SubwordComplex::flip(const Facet& I, int i) const {
  if (!contains(I, i)) throw std::invalid_argument("flip: position not in facet");
  Facet base;
  base.reserve(I.size() - 1);
  for (int p : I)
    if (p != i) base.push_back(p);
  const IVec rho = root_function(I, i);
  IVec neg(rho.size());
  for (std::size_t t = 0; t < rho.size(); ++t) neg[t] = -rho[t];
  auto try_position = [&](int j) -> std::optional<Facet> {
    if (j == i || contains(I, j)) return std::nullopt;
    Facet J = base;
    J.insert(std::upper_bound(J.begin(), J.end(), j), j);
    if (is_facet(J)) return J;
    return std::nullopt;
  };
  // Candidate filter via +-r(I,i); validated by is_facet, brute force as fallback.
  for (int j = 1; j <= m_; ++j) {
    const IVec& rj = root_function(I, static_cast<int>(j));
    if (rj != rho && rj != neg) continue;
    if (auto J = try_position(j)) return {*J, j};
  }
  for (int j = 1; j <= m_; ++j)
    if (auto J = try_position(j)) return {*J, j};
  throw std::logic_error("flip: no adjacent facet found (complex not spherical?)");
}

const std::vector<Facet>& SubwordComplex::facets() const {
  {
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    if (facet_cache_) return *facet_cache_;
  }
  std::set<Facet> seen;
  std::vector<Facet> queue{greedy_facet()};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Facet I = queue[head];
    for (int i : I) {
      auto [J, j] = flip(I, i);
      if (seen.insert(J).second) queue.push_back(J);
    }
  }
  std::vector<Facet> sorted(seen.begin(), seen.end());
  std::lock_guard<std::mutex> lock(*cache_mutex_);
  if (!facet_cache_) facet_cache_ = std::move(sorted);
  return *facet_cache_;
}

std::vector<Facet> SubwordComplex::facets_bruteforce() const {
  std::vector<Facet> out;
  int k = facet_size();
  Facet I(static_cast<std::size_t>(k));
  // Enumerate k-subsets of [m] in lexicographic order.
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) idx[static_cast<std::size_t>(t)] = t + 1;
  if (k == 0) {
    if (is_facet({})) out.push_back({});
    return out;
  }
  for (;;) {
    if (is_facet(idx)) out.push_back(idx);
    int t = k - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == m_ - (k - 1 - t)) --t;
    if (t < 0) break;
    ++idx[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
  }
  return out;
}

FlipSequence SubwordComplex::canonical_long_flip_sequence() const {
  if (!is_cluster_shape())
    throw NotClusterWord("canonical long flip sequence requires a word of length n + N");
  FlipSequence seq;
  seq.facets.push_back(greedy_facet());
  for (int step = 0; step < big_n_; ++step) {
    const Facet& I = seq.facets.back();
    int target = n_ + step + 1;  // position entering at this step
    bool found = false;
    for (int i : I) {
      auto [J, j] = flip(I, i);
      if (j == target) {
        if (i >= j) throw NotClusterWord("canonical flip sequence hit a non-increasing flip");
        seq.pivots.emplace_back(i, j);
        seq.facets.push_back(J);
        found = true;
        break;
      }
    }
    if (!found) throw NotClusterWord("no flip reaches the next canonical position");
  }
  if (seq.facets.back() != antigreedy_facet())
    throw NotClusterWord("canonical flip sequence did not end at the antigreedy facet");
  return seq;
}

bool SubwordComplex::is_root_independent() const {
  Facet I = greedy_facet();
  // Rational row reduction on the root multiset of one facet.
  std::vector<QVec> rows;
  for (int i : I) rows.push_back(to_rational(root_function(I, i)));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < static_cast<std::size_t>(n_) && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < static_cast<std::size_t>(n_); ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank == rows.size();
}

bool SubwordComplex::has_full_support() const {
  std::vector<bool> used(static_cast<std::size_t>(m_ + 1), false);
  for (const Facet& I : facets())
    for (int p : I) used[static_cast<std::size_t>(p)] = true;
  for (int p = 1; p <= m_; ++p)
    if (!used[static_cast<std::size_t>(p)]) return false;
  return true;
}

}  // namespace brickforge
