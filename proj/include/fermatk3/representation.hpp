#pragma once

#include <string>
#include <vector>

#include "fermatk3/matrix_group.hpp"
#include "fermatk3/poly4.hpp"

namespace fermatk3 {

// Character of a binary dihedral group that factors through the sign data of
// the two generators; both values are +1 or -1.
struct LinearCharacter {
  int chi_a = 1;
  int chi_b = 1;

  bool operator==(const LinearCharacter&) const = default;
};

// A linear representation of the binary dihedral group
//   <a, b | a^{2m} = 1, a^m = b^2, b^-1 a b = a^-1>
// given by exact generator images.
struct LinearRep {
  std::string name;
  CycMatrix a;
  CycMatrix b;
  int m = 4;  // presentation parameter: the group has order 4m

  int dim() const { return a.dim(); }
};

// Builds a LinearRep after verifying the three defining relations exactly;
// violations are reported as ShapeError.
LinearRep make_q4m_rep(std::string name, CycMatrix a, CycMatrix b, int m);

// Block diagonal matrix with `top` in the upper-left corner.
CycMatrix direct_sum(const CycMatrix& top, const CycMatrix& bottom);

// The 7 irreducible representations of the binary dihedral group of order 16:
// four 1-dimensional sign representations rho_{1,1}..rho_{1,4} (images of
// (a, b) are (1,1), (1,-1), (-1,1), (-1,-1)) and three 2-dimensional ones
// rho_{2,1}, rho_{2,2}, rho_{2,3}. Relations, distinctness of characters and
// irreducibility are all verified on construction.
std::vector<LinearRep> q16_irreps();

// All 4m group elements as matrices, in the order a^0..a^{2m-1}, then
// a^0 b..a^{2m-1} b.
std::vector<CycMatrix> rep_elements(const LinearRep& r);

// Trace vector over rep_elements order.
std::vector<CycNumber> rep_character(const LinearRep& r);

// Unnormalised character pairing sum_g x(g) * conj(y(g)); equals |G| times
// the usual inner product.
CycNumber character_inner_sum(const std::vector<CycNumber>& x,
                              const std::vector<CycNumber>& y);

// Lifts a projective representation of the binary dihedral group of order 4m
// to a linear one. [A], [B] must satisfy the relations up to scalars; the
// correction scalars beta (from B^-1 A B * A = beta I) and alpha (from
// A^m = alpha B^2 after the A-correction) must be roots of unity. Returns
// A' = A / sqrt(beta), B' = sqrt(alpha) * B with the relations holding
// exactly. Non-scalar residuals raise ShapeError; non-root-of-unity
// correction scalars raise UnsupportedRadicand.
LinearRep lift_projective_rep(const CycMatrix& A, const CycMatrix& B, int m);

// The standard 2-dimensional projective representation of the dihedral group
// of order 8 admits no linear lift: the conjugation relation forces the
// rescaling of a to satisfy lambda^2 = 1, while a^4 = -I needs lambda^4 = -1.
// Returns true after verifying both facts by exact computation.
bool check_d8_obstruction();

// F composed with the substitution x -> g x. Right action:
// apply_matrix(g, apply_matrix(h, F)) = apply_matrix(h * g, F).
Poly4 apply_matrix(const CycMatrix& g, const Poly4& F);

// Basis of {F homogeneous of the given degree : F(g x) = lambda F(x)},
// computed by exact linear algebra on the monomial basis. Basis vectors are
// reduced and listed by their free monomial in lexicographic order.
std::vector<Poly4> eigenforms(const CycMatrix& g, int degree,
                              const CycNumber& lambda);

// Basis of the forms of the given degree with a(F) = chi_a F and
// b(F) = chi_b F simultaneously; rep must be 4-dimensional.
std::vector<Poly4> semi_invariant_space(const LinearRep& rep, int degree,
                                        const LinearCharacter& chi);

}  // namespace fermatk3
