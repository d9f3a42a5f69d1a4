#pragma once

// Exact scalar types shared by all modules. Integer vectors are used wherever
// values are known to stay integral (root/weight lattices, exponents);
// rationals appear only in the polyhedral kernel and polynomial coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace brickforge {

using Int = long long;
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline QVec to_rational(const IVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

// Exact integer recovery; throws if the value is not integral.
inline Int to_int(const Rat& x) {
  if (denominator(x) != 1) throw std::domain_error("to_int: non-integral rational");
  return static_cast<Int>(numerator(x));
}

inline IVec to_integer(const QVec& v) {
  IVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_int(v[i]);
  return r;
}

inline QVec qvec_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec qvec_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Rat qvec_dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IVec ivec_add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Int ivec_dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IVec& v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

inline bool is_zero(const QVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

// Canonical "p/q" form, denominator always printed and positive.
inline std::string rat_to_string(const Rat& x) {
  std::ostringstream os;
  os << numerator(x) << '/' << denominator(x);
  return os.str();
}

Rat rat_from_string(const std::string& s);

}  // namespace brickforge
