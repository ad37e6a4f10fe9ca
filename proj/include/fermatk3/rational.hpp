#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace fermatk3 {

// Arbitrary-precision integers and reduced rationals. cpp_rational keeps the
// canonical form (coprime, positive denominator) we rely on for structural
// equality everywhere else.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Integer& n) { return n.str(); }

inline std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  return boost::multiprecision::lcm(a, b);
}

inline long lcm_long(long a, long b) {
  return static_cast<long>(boost::multiprecision::lcm(Integer(a), Integer(b)));
}

// Exact integer nth root: returns r with r^n == x, if one exists.
std::optional<Integer> exact_nth_root(const Integer& x, unsigned n);

// Exact rational nth root, if one exists.
std::optional<Rational> exact_nth_root(const Rational& x, unsigned n);

}  // namespace fermatk3
