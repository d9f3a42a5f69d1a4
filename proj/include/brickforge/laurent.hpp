#pragma once

// Exact Laurent polynomials in the 2n seed variables (x_1..x_n, y_1..y_n),
// represented as a map from exponent vectors to nonzero rational coefficients.
// The map order is lexicographic, so the last entry is the leading term.

#include "brickforge/numbers.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace brickforge {

struct NonLaurent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(std::size_t nvars) : nvars_(nvars) {}

  static Laurent constant(std::size_t nvars, const Rat& c);
  static Laurent monomial(std::size_t nvars, const IVec& exponents, const Rat& c = 1);
  // Variable with 1-based index into the 2n slots.
  static Laurent variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::map<IVec, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  bool operator==(const Laurent& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

  Laurent pow(Int e) const;  // e >= 0

  // Exact division; throws NonLaurent when the quotient is not a Laurent
  // polynomial (guarded by an iteration budget, since non-exact Laurent
  // division can descend forever).
  Laurent divide_exact(const Laurent& divisor) const;

  void add_term(const IVec& exponents, const Rat& c);

  // Componentwise minimum of exponents over the given variable slots.
  IVec min_exponents(std::size_t from, std::size_t count) const;

  // Substitute 0 for variables in [from, from+count): terms using them vanish.
  Laurent drop_variables(std::size_t from, std::size_t count) const;

  // Substitute 1 for variables in [from, from+count): exponents projected out.
  Laurent set_variables_to_one(std::size_t from, std::size_t count) const;

  // Canonical display, e.g. "x1^2*y1*y2^2 + 2*x1*y1*y2 + x2^2 + y1"; the
  // first `num_x` slots print as x-variables, the rest as y-variables.
  std::string to_string(std::size_t num_x) const;

 private:
  std::size_t nvars_ = 0;
  std::map<IVec, Rat> terms_;
};

}  // namespace brickforge
