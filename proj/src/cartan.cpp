#include "brickforge/cartan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace brickforge {

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  BigInt num(s.substr(0, slash));
  BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(num, den);
}

bool CartanType::valid() const {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

std::string CartanType::name() const { return family + std::to_string(rank); }

int CartanType::positive_root_count() const {
  switch (family) {
    case 'A': return rank * (rank + 1) / 2;
    case 'B':
    case 'C': return rank * rank;
    case 'D': return rank * (rank - 1);
    case 'E': return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
    default: throw std::invalid_argument("positive_root_count: invalid family");
  }
}

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("cannot parse Cartan type: " + s);
  CartanType t{s[0], 0};
  try {
    t.rank = std::stoi(s.substr(1));
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse Cartan type: " + s);
  }
  if (!t.valid()) throw std::invalid_argument("invalid Cartan type: " + s);
  return t;
}

std::vector<CartanType> CartanType::all_up_to_rank(int max_rank) {
  std::vector<CartanType> out;
  for (char f : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
    for (int r = 1; r <= max_rank; ++r) {
      CartanType t{f, r};
      if (t.valid()) out.push_back(t);
    }
  return out;
}

namespace {

// Leading principal minors via fraction-free elimination; n <= 8 so Int is ample.
bool leading_minors_positive(int n, const std::vector<Int>& a) {
  std::vector<Rat> m(a.begin(), a.end());
  auto at = [&](int r, int c) -> Rat& { return m[static_cast<std::size_t>(r * n + c)]; };
  Rat det = 1;
  for (int k = 0; k < n; ++k) {
    if (at(k, k) == 0) return false;
    det *= at(k, k);
    if (det <= 0) return false;
    for (int r = k + 1; r < n; ++r) {
      Rat f = at(r, k) / at(k, k);
      for (int c = k; c < n; ++c) at(r, c) -= f * at(k, c);
    }
  }
  return true;
}

}  // namespace

CartanMatrix::CartanMatrix(int n, std::vector<Int> entries) : n_(n), a_(std::move(entries)) {
  if (n <= 0 || a_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("CartanMatrix: bad dimensions");
  for (int s = 0; s < n; ++s) {
    if (at(s, s) != 2) throw std::invalid_argument("CartanMatrix: diagonal must be 2");
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      if (at(s, t) > 0) throw std::invalid_argument("CartanMatrix: positive off-diagonal");
      if ((at(s, t) == 0) != (at(t, s) == 0))
        throw std::invalid_argument("CartanMatrix: asymmetric zero pattern");
    }
  }
  if (!leading_minors_positive(n_, a_))
    throw std::invalid_argument("CartanMatrix: not of finite type");

  // Symmetrizer by propagation along the (connected components of the) diagram.
  QVec d(static_cast<std::size_t>(n), Rat(0));
  for (int start = 0; start < n; ++start) {
    if (d[static_cast<std::size_t>(start)] != 0) continue;
    d[static_cast<std::size_t>(start)] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      for (int t = 0; t < n; ++t) {
        if (s == t || at(s, t) == 0 || d[static_cast<std::size_t>(t)] != 0) continue;
        // d_s a_st = d_t a_ts
        d[static_cast<std::size_t>(t)] = d[static_cast<std::size_t>(s)] * at(s, t) / at(t, s);
        stack.push_back(t);
      }
    }
  }
  BigInt lcm_den = 1;
  for (const Rat& x : d) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  BigInt gcd_num = 0;
  for (Rat& x : d) x *= lcm_den;
  for (const Rat& x : d) gcd_num = boost::multiprecision::gcd(gcd_num, numerator(x));
  sym_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    sym_[static_cast<std::size_t>(i)] = static_cast<Int>(numerator(d[static_cast<std::size_t>(i)]) / gcd_num);
}

CartanMatrix build_cartan(CartanType t) {
  if (!t.valid()) throw std::invalid_argument("build_cartan: invalid type " + t.name());
  int n = t.rank;
  std::vector<Int> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto set = [&](int s, int u, Int v) { a[static_cast<std::size_t>(s * n + u)] = v; };
  for (int i = 0; i < n; ++i) set(i, i, 2);
  auto bond = [&](int s, int u) { set(s, u, -1), set(u, s, -1); };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':  // short last simple root: a_{n,n-1} = -2
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      set(n - 1, n - 2, -2);
      break;
    case 'C':  // long last simple root: a_{n-1,n} = -2
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      set(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case 'E':  // Bourbaki: 1-3-4-5-...-n with 2 attached to 4
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      set(2, 1, -2);
      break;
    case 'G':  // alpha_1 short: a_{12} = -3
      bond(0, 1);
      set(0, 1, -3);
      break;
  }
  return CartanMatrix(n, std::move(a));
}

IVec reflect(const CartanMatrix& C, int i, const IVec& v) {
  IVec r = v;
  Int d = 0;
  for (int t = 0; t < C.rank(); ++t) d += C.at(i - 1, t) * v[static_cast<std::size_t>(t)];
  r[static_cast<std::size_t>(i - 1)] -= d;
  return r;
}

QVec reflect(const CartanMatrix& C, int i, const QVec& v) {
  QVec r = v;
  Rat d = 0;
  for (int t = 0; t < C.rank(); ++t) d += C.at(i - 1, t) * v[static_cast<std::size_t>(t)];
  r[static_cast<std::size_t>(i - 1)] -= d;
  return r;
}

IVec reflect_weight(const CartanMatrix& C, int i, const IVec& d) {
  IVec r = d;
  Int di = d[static_cast<std::size_t>(i - 1)];
  for (int t = 0; t < C.rank(); ++t) r[static_cast<std::size_t>(t)] -= di * C.at(t, i - 1);
  return r;
}

QVec weight_coords(const CartanMatrix& C, const QVec& root_coords) {
  int n = C.rank();
  QVec d(static_cast<std::size_t>(n), Rat(0));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) d[static_cast<std::size_t>(s)] += C.at(s, t) * root_coords[static_cast<std::size_t>(t)];
  return d;
}

IVec weight_coords_int(const CartanMatrix& C, const IVec& rc) {
  int n = C.rank();
  IVec d(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) d[static_cast<std::size_t>(s)] += C.at(s, t) * rc[static_cast<std::size_t>(t)];
  return d;
}

QVec root_coords(const CartanMatrix& C, const QVec& weight_coords) {
  // Solve C * c = d by Gaussian elimination; C is invertible for finite type.
  int n = C.rank();
  std::vector<QVec> m(static_cast<std::size_t>(n), QVec(static_cast<std::size_t>(n + 1)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = C.at(r, c);
    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)] = weight_coords[static_cast<std::size_t>(r)];
  }
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("root_coords: singular Cartan matrix");
    std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(piv)]);
    for (int r = 0; r < n; ++r) {
      if (r == k || m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] == 0) continue;
      Rat f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] / m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
      for (int c = k; c <= n; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= f * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
    }
  }
  QVec out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    out[static_cast<std::size_t>(k)] =
        m[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] / m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  return out;
}

std::vector<IVec> positive_roots(const CartanMatrix& C) {
  int n = C.rank();
  std::vector<IVec> roots;
  std::set<IVec> seen;
  std::vector<IVec> level;
  for (int i = 0; i < n; ++i) {
    IVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    level.push_back(e);
    seen.insert(e);
  }
  std::sort(level.begin(), level.end());
  while (!level.empty()) {
    for (const IVec& v : level) roots.push_back(v);
    std::set<IVec> next;
    for (const IVec& v : level)
      for (int i = 1; i <= n; ++i) {
        IVec u = reflect(C, i, v);
        bool nonneg = true;
        for (Int x : u) nonneg = nonneg && x >= 0;
        if (nonneg && !seen.count(u)) next.insert(u);
      }
    level.assign(next.begin(), next.end());
    for (const IVec& v : level) seen.insert(v);
  }
  return roots;
}

}  // namespace brickforge
