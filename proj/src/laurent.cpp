#include "brickforge/laurent.hpp"

#include <sstream>

namespace brickforge {

Laurent Laurent::constant(std::size_t nvars, const Rat& c) {
  Laurent f(nvars);
  f.add_term(IVec(nvars, 0), c);
  return f;
}

Laurent Laurent::monomial(std::size_t nvars, const IVec& exponents, const Rat& c) {
  Laurent f(nvars);
  f.add_term(exponents, c);
  return f;
}

Laurent Laurent::variable(std::size_t nvars, std::size_t index) {
  IVec e(nvars, 0);
  e.at(index - 1) = 1;
  return monomial(nvars, e, 1);
}

void Laurent::add_term(const IVec& exponents, const Rat& c) {
  if (exponents.size() != nvars_) throw std::invalid_argument("Laurent: exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  return r += o;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  return r -= o;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add_term(ivec_add(ea, eb), ca * cb);
  return r;
}

Laurent Laurent::pow(Int e) const {
  if (e < 0) throw std::invalid_argument("Laurent::pow: negative exponent");
  Laurent r = constant(nvars_, 1);
  for (Int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Laurent Laurent::divide_exact(const Laurent& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("Laurent division by zero");
  Laurent rem = *this;
  Laurent quot(nvars_);
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  // An exact quotient has at most (#dividend terms) * small many steps; the
  // budget turns a non-Laurent division into an error instead of a hang.
  std::size_t budget = 4096 + 64 * (terms_.size() + 1) * (divisor.terms_.size() + 1);
  while (!rem.is_zero()) {
    if (budget-- == 0) throw NonLaurent("division did not terminate: quotient is not Laurent");
    const auto& [re, rc] = *rem.terms_.rbegin();
    Laurent t = monomial(nvars_, ivec_sub(re, lead_e), rc / lead_c);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

IVec Laurent::min_exponents(std::size_t from, std::size_t count) const {
  IVec mins(count, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < count; ++i) {
      Int x = e[from + i];
      if (first || x < mins[i]) mins[i] = x;
    }
    first = false;
  }
  return mins;
}

Laurent Laurent::drop_variables(std::size_t from, std::size_t count) const {
  Laurent r(nvars_);
  for (const auto& [e, c] : terms_) {
    bool keep = true;
    for (std::size_t i = 0; i < count && keep; ++i)
      if (e[from + i] != 0) keep = false;
    if (keep) r.add_term(e, c);
  }
  return r;
}

Laurent Laurent::set_variables_to_one(std::size_t from, std::size_t count) const {
  Laurent r(nvars_);
  for (const auto& [e, c] : terms_) {
    IVec proj = e;
    for (std::size_t i = 0; i < count; ++i) proj[from + i] = 0;
    r.add_term(proj, c);
  }
  return r;
}

std::string Laurent::to_string(std::size_t num_x) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending lexicographic order reads naturally (leading term first).
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += (i < num_x ? "x" : "y") + std::to_string(i < num_x ? i + 1 : i - num_x + 1);
      if (e[i] != 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      os << coeff;
    } else {
      if (coeff != 1) os << coeff << "*";
      os << vars;
    }
  }
  return os.str();
}

}  // namespace brickforge
