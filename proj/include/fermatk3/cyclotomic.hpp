#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermatk3/rational.hpp"

namespace fermatk3 {

// The n-th cyclotomic polynomial as integer coefficients, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(long n);

long euler_phi(long n);

// An element of Q(zeta_n), held as rational coordinates over the power basis
// 1, z, ..., z^(phi(n)-1) reduced mod the n-th cyclotomic polynomial.
//
// The conductor is stored explicitly. Arithmetic between different conductors
// promotes both operands to the lcm. A value that turns out to be rational is
// always renormalised to conductor 1, so within a fixed conductor the
// representation is canonical and operator== decides field equality after
// promotion.
class CycNumber {
 public:
  CycNumber() : n_(1), c_(1, Rational(0)) {}
  explicit CycNumber(const Rational& q) : n_(1), c_(1, q) {}
  explicit CycNumber(long v) : n_(1), c_(1, Rational(v)) {}

  // zeta(n, k) = exp(2 pi i k / n), reduced into the power basis.
  static CycNumber zeta(long n, long k = 1);
  static CycNumber from_coeffs(long n, std::vector<Rational> coeffs);

  long conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  const Rational& rational_value() const;  // requires is_rational()

  // Representation over the power basis of Q(zeta_n), keeping conductor
  // exactly n even for rational values; n must be a multiple of conductor().
  CycNumber promoted(long n) const;

  CycNumber operator-() const;
  CycNumber operator+(const CycNumber& o) const;
  CycNumber operator-(const CycNumber& o) const;
  CycNumber operator*(const CycNumber& o) const;
  CycNumber operator/(const CycNumber& o) const;  // throws DivisionByZero
  CycNumber inv() const;                          // throws DivisionByZero
  CycNumber conj() const;                         // complex conjugation
  CycNumber pow(long e) const;

  CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
  CycNumber& operator-=(const CycNumber& o) { return *this = *this - o; }
  CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

  bool operator==(const CycNumber& o) const;
  bool operator!=(const CycNumber& o) const { return !(*this == o); }

  // Order as a root of unity, or nullopt if the value is not one. Roots of
  // unity in Q(zeta_n) have order dividing lcm(2, n), so the scan is finite.
  std::optional<long> root_of_unity_order() const;

  // Square root of a root of unity: for zeta_m^k (0 <= k < m) returns
  // zeta_{2m}^k, the root whose argument lies in [0, pi). Throws
  // UnsupportedRadicand if the value is not a root of unity.
  CycNumber sqrt_of_root_of_unity() const;

  // Fourth root of values of the form q * rho with q a positive rational
  // whose square root is rational and rho a root of unity; these are exactly
  // the cases needed by the normalisation steps, and the only fourth roots
  // that stay inside cyclotomic fields. Deterministic branch: positive real
  // root for q, zeta_{4m}^k for rho = zeta_m^k.
  CycNumber fourth_root() const;

  std::string str() const;  // e.g. "1/2 - z8^3"
  std::string key() const;  // canonical serialisation, usable as a hash key

 private:
  CycNumber(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  void normalise();  // drop to conductor 1 if rational

  long n_;
  std::vector<Rational> c_;  // size euler_phi(n_)
};

inline CycNumber operator*(const Rational& q, const CycNumber& a) {
  return CycNumber(q) * a;
}

// Square root of a positive rational as a cyclotomic number (Gauss sums for
// the squarefree part). Deterministic positive branch.
CycNumber cyc_sqrt_of_positive_rational(const Rational& q);

}  // namespace fermatk3
