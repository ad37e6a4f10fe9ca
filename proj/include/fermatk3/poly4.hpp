#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fermatk3/cyc_linalg.hpp"
#include "fermatk3/cyclotomic.hpp"

namespace fermatk3 {

using Monomial = std::array<int, 4>;  // exponents of x1..x4

// Polynomial in x1..x4 over a cyclotomic field. Terms are kept in a map with
// lexicographic monomial order, so iteration (and str()) is deterministic.
class Poly4 {
 public:
  Poly4() = default;
  explicit Poly4(const CycNumber& c);

  static Poly4 monomial(Monomial m, const CycNumber& c = CycNumber(1));
  static Poly4 variable(int i);  // x_{i+1}, i in 0..3

  const std::map<Monomial, CycNumber>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  CycNumber coeff(const Monomial& m) const;

  Poly4 operator+(const Poly4& o) const;
  Poly4 operator-(const Poly4& o) const;
  Poly4 operator*(const Poly4& o) const;
  Poly4 operator*(const CycNumber& c) const;
  Poly4 operator-() const;
  Poly4& operator+=(const Poly4& o) { return *this = *this + o; }
  Poly4& operator-=(const Poly4& o) { return *this = *this - o; }
  bool operator==(const Poly4& o) const { return t_ == o.t_; }
  bool operator!=(const Poly4& o) const { return !(*this == o); }

  // Substitute x_i -> sum_j m[i][j] x_j (m acts on the column of variables).
  Poly4 substituted(const CycTable& m) const;

  Poly4 derivative(int var) const;
  CycNumber evaluated(const std::array<CycNumber, 4>& p) const;

  // The ratio o / this when the two differ by a scalar; nullopt otherwise.
  std::optional<CycNumber> scalar_ratio_to(const Poly4& o) const;

  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(int d) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const CycNumber& c);
  std::map<Monomial, CycNumber> t_;
};

inline Poly4 operator*(const CycNumber& c, const Poly4& p) { return p * c; }

// All monomials of total degree d, lexicographically ordered.
std::vector<Monomial> monomials_of_degree(int d);

// Resultant of two univariate polynomials (ascending coefficients) via the
// Sylvester matrix. Used on binary forms after fixing one variable.
CycNumber resultant(const std::vector<CycNumber>& p,
                    const std::vector<CycNumber>& q);

// Coefficients of a polynomial in x_{var+1} alone (ascending), requiring all
// other variables to be absent.
std::vector<CycNumber> univariate_coeffs(const Poly4& p, int var);

}  // namespace fermatk3
