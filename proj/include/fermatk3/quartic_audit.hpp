#pragma once

#include <array>
#include <string>
#include <vector>

#include "fermatk3/audit.hpp"
#include "fermatk3/poly4.hpp"
#include "fermatk3/representation.hpp"

namespace fermatk3 {

// A point of P^3 with exact coordinates, stored with the first nonzero
// coordinate scaled to 1 so that equality is projective equality.
class PointP3 {
 public:
  explicit PointP3(const std::array<CycNumber, 4>& coords);

  const std::array<CycNumber, 4>& coords() const { return c_; }
  const CycNumber& at(int i) const { return c_[i]; }

  bool operator==(const PointP3& o) const { return c_ == o.c_; }
  bool operator!=(const PointP3& o) const { return !(*this == o); }
  std::string str() const;

  static PointP3 coordinate_point(int i);  // e_{i+1}

 private:
  std::array<CycNumber, 4> c_;
};

// True iff every partial derivative of F vanishes at P. The point must lie
// on the hypersurface (F(P) = 0), otherwise ShapeError.
bool singular_at(const Poly4& F, const PointP3& P);

// Square root of a root of unity times a positive rational, the only
// radicand shape the geometry needs. Deterministic branch; other inputs
// raise UnsupportedRadicand.
CycNumber cyc_sqrt(const CycNumber& v);

// Resultant of two homogeneous binary forms in the same two variables, using
// the Sylvester matrix of their full homogeneous degrees; zero iff the forms
// share a projective root. Zero forms are rejected with ShapeError.
CycNumber binary_resultant(const Poly4& f, const Poly4& g);

// The fixed points of a diagonal projective transformation that lie on the
// hypersurface F = 0, as exact points. Coordinates are grouped by eigenvalue;
// a group of size 1 contributes its coordinate point when it lies on the
// surface, a group of size 2 contributes the roots of the restricted binary
// form. Fixed lines or planes contained in the surface (and the identity)
// raise InfiniteFixedLocus; binary forms whose interior is not a binomial
// with root-of-unity-solvable exponent raise UnsupportedRadicand.
std::vector<PointP3> diagonal_fixed_points(const ProjMatrix& g,
                                           const Poly4& F);

// Diagonal substitution scalings (c, d, e, f) taking
//   alpha x1^4 + beta x2^4 + gamma x3 x4^3 + delta x3^3 x4
// to the unit-coefficient form x1^4 + x2^4 + x3 x4^3 + x3^3 x4. All four
// coefficients must be nonzero (ShapeError names the one that is not) and of
// the shape handled by cyc_sqrt / fourth_root.
std::array<CycNumber, 4> quartic_rescaling(const CycNumber& alpha,
                                           const CycNumber& beta,
                                           const CycNumber& gamma,
                                           const CycNumber& delta);

// The Fermat quartic form x1^4 + x2^4 + x3^4 + x4^4.
Poly4 fermat_quartic_form();
// The canonical smooth quartic with the largest projective symplectic
// extension: x1^4 + x2^4 + x3^3 x4 + x3 x4^3.
Poly4 canonical_quartic_form();
// The order-8 and order-4 generators of the binary dihedral subgroup of the
// Fermat quartic's symplectic automorphisms: P sends (x1, x2, x3, x4) to
// (x2, zeta4 x1, x3, zeta4 x4) and Q to (zeta4 x1, zeta4 x2, x4, x3).
CycMatrix fermat_p();
CycMatrix fermat_q();

struct CaseAuditReport {
  std::vector<AuditStep> steps;
  bool passed() const { return all_steps_pass(steps); }
};

// Replays the quadric case: no smooth quadric surface carries a faithful
// projective action of the binary dihedral group of order 16. Enumerates the
// four shapes of 4-dimensional decompositions, excludes two by projective
// order, the rest by singularity of every candidate invariant quadric --
// except the normal form x1 x2 + x3 x4, which is excluded by comparing exact
// fixed-point counts with the symplectic fixed-point table.
CaseAuditReport quadric_case_audit();

struct QuarticCaseResult {
  Poly4 canonical;  // the surviving normal form
  std::vector<AuditStep> steps;
  bool passed() const { return all_steps_pass(steps); }
};

// Replays the quartic case: a smooth quartic surface with a faithful
// projective action of the binary dihedral group of order 16 acting
// symplectically has, in suitable coordinates, the equation
// x1^4 + x2^4 + x3^3 x4 + x3 x4^3 = 0. Every branch of the case analysis is
// verified by exact computation; the smoothness of the canonical model is
// certified by decoupled partials and a binary resultant.
QuarticCaseResult quartic_case_audit();

// Verifies that the Fermat quartic realises the binary dihedral group of
// order 16 symplectically: <P, Q> has order 16, satisfies the presentation
// projectively, preserves the Fermat form, and every element has monomial
// multiplier 1.
CaseAuditReport fermat_q16_check();

}  // namespace fermatk3
