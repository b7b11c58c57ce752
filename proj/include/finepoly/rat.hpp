#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace finepoly {

// Exact arbitrary-precision integers and rationals (GMP-backed, always reduced,
// expression templates off so the types behave like plain value types).
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }

// Floor division with sign of the remainder matching the divisor (b > 0 assumed).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b > a) --q;
  return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }

inline Int rat_ceil(const Rat& r) {
  Int f = rat_floor(r);
  return f * rat_den(r) == rat_num(r) ? f : f + 1;
}

// "p/q" or "p"; q must be positive after reduction and p/q must be well formed.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("parse_rat: zero denominator");
    return Rat(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  }
}

inline std::string rat_str(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

template <typename U, typename V>
auto dot(const std::vector<U>& a, const std::vector<V>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  decltype(U() * V()) acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline RatVec to_rat_vec(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

// Exact conversion back; throws if any coordinate is non-integral.
inline IntVec to_int_vec(const RatVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (rat_den(v[i]) != 1) throw std::invalid_argument("to_int_vec: non-integral coordinate");
    r[i] = rat_num(v[i]);
  }
  return r;
}

inline bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

template <typename T>
std::vector<T> vec_sub(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: dimension mismatch");
  std::vector<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <typename T>
std::vector<T> vec_add(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: dimension mismatch");
  std::vector<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace finepoly
