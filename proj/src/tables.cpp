#include "brickforge/tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace brickforge {

std::optional<AmbientBasis> paper_ambient_basis(CartanType t) {
  if (t.family == 'A') {
    AmbientBasis b;
    b.quotient_min_zero = true;
    for (int i = 0; i < t.rank; ++i) {
      IVec row(static_cast<std::size_t>(t.rank + 1), 0);
      row[static_cast<std::size_t>(i)] = 1;
      row[static_cast<std::size_t>(i + 1)] = -1;
      b.simple_roots.push_back(std::move(row));
    }
    return b;
  }
  if (t.family == 'B' && t.rank == 2) {
    AmbientBasis b;
    b.simple_roots = {{2, -2}, {0, 2}};
    return b;
  }
  return std::nullopt;
}

std::string ivec_to_string(const IVec& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

IVec ivec_from_string(const std::string& s) {
  std::istringstream is(s);
  IVec v;
  Int x;
  while (is >> x) v.push_back(x);
  return v;
}

std::string facet_label(const Facet& I, int word_length) {
  std::ostringstream os;
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (word_length > 9 && i) os << ',';
    os << I[i];
  }
  if (I.empty()) os << "-";
  return os.str();
}

namespace {

// Genuine ambient vector of a root-coordinate point.
QVec ambient_of_root_coords(const AmbientBasis& b, const QVec& c) {
  std::size_t adim = b.simple_roots[0].size();
  QVec out(adim, Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < adim; ++j) out[j] += c[i] * b.simple_roots[i][j];
  return out;
}

std::string format_ambient(const AmbientBasis& b, const QVec& root_coords, bool weight_rep) {
  QVec a = ambient_of_root_coords(b, root_coords);
  if (weight_rep && b.quotient_min_zero) {
    Rat mn = a[0];
    for (const Rat& x : a) mn = std::min(mn, x);
    for (Rat& x : a) x -= mn;
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ' ';
    if (denominator(a[i]) == 1)
      os << numerator(a[i]);
    else
      os << rat_to_string(a[i]);
  }
  return os.str();
}

}  // namespace

std::string root_table_tsv(const SubwordComplex& spec, const std::optional<AmbientBasis>& ambient) {
  std::ostringstream os;
  os << "I";
  for (int k = 1; k <= spec.word_length(); ++k) os << '\t' << k;
  os << '\n';
  for (const Facet& I : spec.facets()) {
    os << facet_label(I, spec.word_length());
    for (int k = 1; k <= spec.word_length(); ++k) {
      IVec r = spec.root_function(I, k);
      os << '\t' << (ambient ? format_ambient(*ambient, to_rational(r), false) : ivec_to_string(r));
    }
    os << '\n';
  }
  return os.str();
}

std::string weight_table_tsv(const SubwordComplex& spec, const std::optional<AmbientBasis>& ambient) {
  std::ostringstream os;
  os << "I";
  for (int k = 1; k <= spec.word_length(); ++k) os << '\t' << k;
  os << '\n';
  for (const Facet& I : spec.facets()) {
    os << facet_label(I, spec.word_length());
    for (int k = 1; k <= spec.word_length(); ++k) {
      QVec rc = spec.weight_function_root_coords(I, k);
      if (ambient) {
        os << '\t' << format_ambient(*ambient, rc, true);
      } else {
        os << '\t' << ivec_to_string(spec.weight_function(I, k));
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string shifted_table_tsv(const BrickGeometry& brick) {
  const SubwordComplex& spec = brick.spec();
  std::ostringstream os;
  os << "I";
  for (int k = spec.rank() + 1; k <= spec.word_length(); ++k) os << '\t' << k;
  os << '\t' << "B(I)" << '\n';
  for (const Facet& I : spec.facets()) {
    os << facet_label(I, spec.word_length());
    IVec total(static_cast<std::size_t>(spec.rank()), 0);
    for (int k = spec.rank() + 1; k <= spec.word_length(); ++k) {
      IVec s = brick.shifted_weight(I, brick.root_of_position(k));
      total = ivec_add(total, s);
      os << '\t' << ivec_to_string(s);
    }
    os << '\t' << ivec_to_string(total) << '\n';
  }
  return os.str();
}

namespace {

std::string monomial_string(const IVec& e, int n) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += (static_cast<int>(i) < n ? "x" : "y") +
         std::to_string(static_cast<int>(i) < n ? i + 1 : i - static_cast<std::size_t>(n) + 1);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string expr_string(const ClusterVariableRecord& rec, int n) {
  if (rec.initial) return rec.expr.to_string(static_cast<std::size_t>(n));
  IVec den(2 * static_cast<std::size_t>(n), 0);
  bool trivial = true;
  for (int i = 0; i < n; ++i) {
    den[static_cast<std::size_t>(i)] = rec.d_vector[static_cast<std::size_t>(i)];
    trivial = trivial && rec.d_vector[static_cast<std::size_t>(i)] == 0;
  }
  Laurent num = rec.expr * Laurent::monomial(2 * static_cast<std::size_t>(n), den, 1);
  std::string s = "(" + num.to_string(static_cast<std::size_t>(n)) + ")";
  if (!trivial) {
    std::string d = monomial_string(den, n);
    s += "/" + (d.find('*') == std::string::npos ? d : "(" + d + ")");
  }
  return s;
}

}  // namespace

std::string cluster_table_tsv(const std::vector<ClusterVariableRecord>& records, int n) {
  std::ostringstream os;
  os << "d\texpr\tg\tF\n";
  for (const auto& rec : records) {
    os << ivec_to_string(rec.d_vector) << '\t' << expr_string(rec, n) << '\t'
       << ivec_to_string(rec.g_vector) << '\t'
       << (rec.f_polynomial ? rec.f_polynomial->to_string(static_cast<std::size_t>(n)) : "-") << '\n';
  }
  return os.str();
}

namespace {

struct Tokenizer {
  std::string s;
  std::size_t pos = 0;
  void skip_space() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= s.size();
  }
  char peek() {
    skip_space();
    return s[pos];
  }
};

// term := [integer] {'*'} factor*, factor := (x|y)<idx> ['^' int]
void parse_term(Tokenizer& t, int n, Laurent& acc, int sign) {
  Rat coeff = sign;
  IVec e(2 * static_cast<std::size_t>(n), 0);
  bool saw_anything = false;
  for (;;) {
    t.skip_space();
    if (t.pos >= t.s.size()) break;
    char c = t.s[t.pos];
    if (c == '*') {
      ++t.pos;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = t.pos;
      while (t.pos < t.s.size() && std::isdigit(static_cast<unsigned char>(t.s[t.pos]))) ++t.pos;
      coeff *= Rat(BigInt(t.s.substr(start, t.pos - start)));
      saw_anything = true;
      continue;
    }
    if (c == 'x' || c == 'y') {
      ++t.pos;
      std::size_t start = t.pos;
      while (t.pos < t.s.size() && std::isdigit(static_cast<unsigned char>(t.s[t.pos]))) ++t.pos;
      int idx = std::stoi(t.s.substr(start, t.pos - start));
      if (idx < 1 || idx > n) throw std::invalid_argument("variable index out of range in expression");
      Int exp = 1;
      t.skip_space();
      if (t.pos < t.s.size() && t.s[t.pos] == '^') {
        ++t.pos;
        t.skip_space();
        std::size_t es = t.pos;
        if (t.pos < t.s.size() && t.s[t.pos] == '-') ++t.pos;
        while (t.pos < t.s.size() && std::isdigit(static_cast<unsigned char>(t.s[t.pos]))) ++t.pos;
        exp = std::stoll(t.s.substr(es, t.pos - es));
      }
      e[static_cast<std::size_t>(c == 'x' ? idx - 1 : n + idx - 1)] += exp;
      saw_anything = true;
      continue;
    }
    break;
  }
  if (!saw_anything) throw std::invalid_argument("empty term in expression");
  acc.add_term(e, coeff);
}

}  // namespace

Laurent parse_polynomial(const std::string& text, int n) {
  Laurent acc(2 * static_cast<std::size_t>(n));
  Tokenizer t{text};
  int sign = 1;
  if (!t.done() && t.peek() == '-') {
    sign = -1;
    ++t.pos;
  }
  for (;;) {
    parse_term(t, n, acc, sign);
    if (t.done()) break;
    char c = t.peek();
    if (c == '+')
      sign = 1;
    else if (c == '-')
      sign = -1;
    else
      throw std::invalid_argument("unexpected character in expression: " + std::string(1, c));
    ++t.pos;
  }
  return acc;
}

Laurent parse_variable_expr(const std::string& text, int n) {
  std::string s = text;
  auto open = s.find('(');
  if (open == std::string::npos) return parse_polynomial(s, n);
  auto close = s.find(')', open);  // numerator holds no nested parentheses
  if (close == std::string::npos) throw std::invalid_argument("unbalanced parentheses: " + text);
  Laurent num = parse_polynomial(s.substr(open + 1, close - open - 1), n);
  std::string rest = s.substr(close + 1);
  auto slash = rest.find('/');
  if (slash == std::string::npos) return num;
  std::string den_text = rest.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '(') {
    if (den_text.back() != ')') throw std::invalid_argument("unbalanced parentheses: " + text);
    den_text = den_text.substr(1, den_text.size() - 2);
  }
  Laurent den = parse_polynomial(den_text, n);
  if (!den.is_monomial()) throw std::invalid_argument("denominator must be a monomial");
  const auto& [de, dc] = *den.terms().begin();
  Laurent out(2 * static_cast<std::size_t>(n));
  for (const auto& [e, c] : num.terms()) out.add_term(ivec_sub(e, de), c / dc);
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> nonempty_lines(const std::string& s) {
  std::vector<std::string> out;
  for (std::string& line : split(s, '\n')) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

}  // namespace

std::optional<std::string> diff_exact(const std::string& computed, const std::string& fixture) {
  std::vector<std::string> a = nonempty_lines(computed);
  std::vector<std::string> b = nonempty_lines(fixture);
  if (a.size() != b.size())
    return "row count " + std::to_string(a.size()) + " != " + std::to_string(b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return "line " + std::to_string(i + 1) + ": '" + a[i] + "' vs '" + b[i] + "'";
  return std::nullopt;
}

std::optional<std::string> diff_cluster_table(const std::string& computed, const std::string& fixture, int n) {
  auto parse_rows = [&](const std::string& text) {
    std::map<IVec, std::tuple<Laurent, IVec, Laurent>> rows;
    for (const std::string& line : nonempty_lines(text)) {
      if (line.rfind("d\t", 0) == 0) continue;  // header
      std::vector<std::string> cols = split(line, '\t');
      if (cols.size() != 4) throw std::invalid_argument("cluster table row needs 4 columns: " + line);
      IVec d = ivec_from_string(cols[0]);
      Laurent expr = parse_variable_expr(cols[1], n);
      IVec g = ivec_from_string(cols[2]);
      Laurent f = cols[3] == "-" ? Laurent(2 * static_cast<std::size_t>(n)) : parse_polynomial(cols[3], n);
      rows.emplace(d, std::make_tuple(std::move(expr), std::move(g), std::move(f)));
    }
    return rows;
  };
  auto a = parse_rows(computed);
  auto b = parse_rows(fixture);
  if (a.size() != b.size()) return std::string("row count differs");
  for (const auto& [d, row] : a) {
    auto it = b.find(d);
    if (it == b.end()) return "no fixture row with d-vector " + ivec_to_string(d);
    if (!(std::get<0>(row) == std::get<0>(it->second)))
      return "expression differs at d-vector " + ivec_to_string(d);
    if (std::get<1>(row) != std::get<1>(it->second))
      return "g-vector differs at d-vector " + ivec_to_string(d);
    if (!(std::get<2>(row) == std::get<2>(it->second)))
      return "F-polynomial differs at d-vector " + ivec_to_string(d);
  }
  return std::nullopt;
}

}  // namespace brickforge
