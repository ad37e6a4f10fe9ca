#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fermatk3/error.hpp"
#include "fermatk3/quartic_audit.hpp"
#include "fermatk3/representation.hpp"

using namespace fermatk3;
using C = CycNumber;

namespace {

const C z4 = C::zeta(4);
const C z8 = C::zeta(8);

Poly4 mono(const Monomial& m) { return Poly4::monomial(m); }

CycMatrix a_case_iii() {
  return CycMatrix::diagonal({z8, z8.inv(), z4, z4.inv()});
}
CycMatrix a_one() {
  return CycMatrix::diagonal({z8, z8.inv(), C(1), C(1)});
}
CycMatrix a_two() {
  return CycMatrix::diagonal({z8, z8.inv(), C(1), C(-1)});
}

std::set<std::string> labels_of(const std::vector<AuditStep>& steps) {
  std::set<std::string> out;
  for (const AuditStep& s : steps) out.insert(s.label);
  return out;
}

}  // namespace

TEST_CASE("the binary dihedral group of order 16 has seven irreducibles") {
  const std::vector<LinearRep> reps = q16_irreps();
  REQUIRE(reps.size() == 7);
  int dim_square_sum = 0;
  for (const LinearRep& r : reps) dim_square_sum += r.dim() * r.dim();
  CHECK(dim_square_sum == 16);
  CHECK(reps[0].name == "rho_{1,1}");
  CHECK(reps[4].name == "rho_{2,1}");
  CHECK(reps[6].name == "rho_{2,3}");

  // Generator images of the faithful representation rho_{2,1}.
  const LinearRep& r21 = reps[4];
  CHECK(r21.a == CycMatrix::diagonal({z8, z8.inv()}));
  CycMatrix b21 = CycMatrix::diagonal({C(0), C(0)});
  b21.at(0, 1) = z4;
  b21.at(1, 0) = z4;
  CHECK(r21.b == b21);
  CHECK(r21.a.pow(4) == CycMatrix::identity(2) * C(-1));

  // Character table rows are orthogonal with squared norm |G| = 16.
  std::vector<std::vector<C>> chars;
  for (const LinearRep& r : reps) chars.push_back(rep_character(r));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      CHECK(character_inner_sum(chars[i], chars[j]) ==
            (i == j ? C(16) : C(0)));
}

TEST_CASE("rep_elements walks the group in generator order") {
  const LinearRep r21 = q16_irreps()[4];
  const std::vector<CycMatrix> els = rep_elements(r21);
  REQUIRE(els.size() == 16);
  CHECK(els[0] == CycMatrix::identity(2));
  CHECK(els[1] == r21.a);
  CHECK(els[8] == r21.b);
  CHECK(els[9] == r21.a * r21.b);
  const std::vector<C> chi = rep_character(r21);
  CHECK(chi[0] == C(2));
  CHECK(chi[1] == z8 + z8.inv());
  CHECK(chi[4] == C(-2));  // a^4 = -1
  CHECK(chi[8] == C(0));   // reflections are traceless
}

TEST_CASE("make_q4m_rep verifies the three defining relations") {
  // a^4 = -1 != b^2 = +1: the power relation fails.
  CHECK_THROWS_AS(make_q4m_rep("broken", CycMatrix::diagonal({z8, z8.inv()}),
                               CycMatrix::identity(2), 4),
                  ShapeError);
  // a of order 3 violates a^(2m) = 1.
  CHECK_THROWS_AS(make_q4m_rep("broken", CycMatrix::diagonal({C::zeta(3)}),
                               CycMatrix::identity(1), 4),
                  ShapeError);
}

TEST_CASE("projective representations lift by scalar correction") {
  const LinearRep r21 = q16_irreps()[4];

  // Already linear: the lift returns the input unchanged.
  const LinearRep same = lift_projective_rep(r21.a, r21.b, 4);
  CHECK(same.a == r21.a);
  CHECK(same.b == r21.b);

  // A scalar-twisted a is corrected back exactly.
  const LinearRep fixed = lift_projective_rep(r21.a * z8, r21.b, 4);
  CHECK(fixed.a == r21.a);
  CHECK(fixed.b == r21.b);

  // A scalar-twisted b is corrected to some exact lift: relations hold.
  const LinearRep fixed_b = lift_projective_rep(r21.a, r21.b * z8, 4);
  CHECK(fixed_b.a == r21.a);
  CHECK(fixed_b.b * fixed_b.b == fixed_b.a.pow(4));
  CHECK(fixed_b.b.inverse() * fixed_b.a * fixed_b.b == fixed_b.a.inverse());

  // The standard projective plane representation of the dihedral group of
  // order 8 has no linear lift: the power residual is not scalar.
  CycMatrix bb = CycMatrix::diagonal({C(0), C(0)});
  bb.at(0, 1) = z4;
  bb.at(1, 0) = z4;
  CHECK_THROWS_AS(lift_projective_rep(CycMatrix::diagonal({z8, z8.inv()}),
                                      bb, 2),
                  ShapeError);
  CHECK(check_d8_obstruction());
}

TEST_CASE("apply_matrix is a right action by substitution") {
  const Poly4 fermat = fermat_quartic_form();
  CHECK(apply_matrix(CycMatrix::identity(4), fermat) == fermat);
  CHECK(apply_matrix(fermat_p(), fermat) == fermat);
  CHECK(apply_matrix(fermat_q(), fermat) == fermat);
  CHECK(apply_matrix(a_two(), canonical_quartic_form()) ==
        C(-1) * canonical_quartic_form());

  const Poly4 f = mono({3, 1, 0, 0}) + C(2) * mono({0, 0, 1, 3});
  CHECK(apply_matrix(fermat_p(), apply_matrix(fermat_q(), f)) ==
        apply_matrix(fermat_q() * fermat_p(), f));

  CHECK_THROWS_AS(
      apply_matrix(CycMatrix::diagonal({C(0), C(1), C(1), C(1)}), fermat),
      ShapeError);
  CHECK_THROWS_AS(
      apply_matrix(CycMatrix::identity(4), mono({2, 0, 0, 0}) +
                                               mono({1, 0, 0, 0})),
      ShapeError);
}

TEST_CASE("eigenforms of the diagonal order-8 elements") {
  // Case (iii): five invariant quartic monomials; the odd binary monomials
  // x3^3 x4 and x3 x4^3 are anti-invariant.
  CHECK(eigenforms(a_case_iii(), 4, C(1)) ==
        std::vector<Poly4>{mono({0, 0, 0, 4}), mono({0, 0, 2, 2}),
                           mono({0, 0, 4, 0}), mono({1, 1, 1, 1}),
                           mono({2, 2, 0, 0})});
  CHECK(apply_matrix(a_case_iii(), mono({0, 0, 3, 1})) ==
        C(-1) * mono({0, 0, 3, 1}));

  // a1 = diag(z8, z8^-1, 1, 1): nine invariant monomials.
  CHECK(eigenforms(a_one(), 4, C(1)) ==
        std::vector<Poly4>{mono({0, 0, 0, 4}), mono({0, 0, 1, 3}),
                           mono({0, 0, 2, 2}), mono({0, 0, 3, 1}),
                           mono({0, 0, 4, 0}), mono({1, 1, 0, 2}),
                           mono({1, 1, 1, 1}), mono({1, 1, 2, 0}),
                           mono({2, 2, 0, 0})});

  // a2 = diag(z8, z8^-1, 1, -1): the anti-invariant family
  // alpha x1^4 + beta x2^4 + gamma x3 x4^3 + delta x3^3 x4 + eps x1x2x3x4.
  CHECK(eigenforms(a_two(), 4, C(-1)) ==
        std::vector<Poly4>{mono({0, 0, 1, 3}), mono({0, 0, 3, 1}),
                           mono({0, 4, 0, 0}), mono({1, 1, 1, 1}),
                           mono({4, 0, 0, 0})});
}

TEST_CASE("semi-invariant spaces of the candidate decompositions") {
  const std::vector<LinearRep> irreps = q16_irreps();
  const LinearRep& r21 = irreps[4];
  const LinearRep& r23 = irreps[6];

  SUBCASE("rho_{2,1} + rho_{2,3}: one singular quadric per character") {
    const LinearRep rep = make_q4m_rep(
        "case iii", direct_sum(r21.a, r23.a), direct_sum(r21.b, r23.b), 4);
    CHECK(semi_invariant_space(rep, 2, {1, 1}) ==
          std::vector<Poly4>{mono({0, 0, 1, 1})});
    CHECK(semi_invariant_space(rep, 2, {1, -1}) ==
          std::vector<Poly4>{mono({1, 1, 0, 0})});
    CHECK(semi_invariant_space(rep, 2, {-1, 1}) ==
          std::vector<Poly4>{mono({0, 0, 2, 0}) + mono({0, 0, 0, 2})});
    CHECK(semi_invariant_space(rep, 2, {-1, -1}) ==
          std::vector<Poly4>{mono({0, 0, 2, 0}) - mono({0, 0, 0, 2})});
  }

  SUBCASE("rho_{2,1} + rho_{1,1} + rho_{1,2}: the exceptional span") {
    const LinearRep rep = make_q4m_rep(
        "case iv (1,2)",
        direct_sum(r21.a, CycMatrix::identity(2)),
        direct_sum(r21.b, CycMatrix::diagonal({C(1), C(-1)})), 4);
    CHECK(semi_invariant_space(rep, 2, {1, -1}) ==
          std::vector<Poly4>{mono({0, 0, 1, 1}), mono({1, 1, 0, 0})});
    CHECK(semi_invariant_space(rep, 2, {1, 1}) ==
          std::vector<Poly4>{mono({0, 0, 0, 2}), mono({0, 0, 2, 0})});
    CHECK(semi_invariant_space(rep, 2, {-1, 1}).empty());
    CHECK(semi_invariant_space(rep, 2, {-1, -1}).empty());
  }

  SUBCASE("a1 with both b sign blocks: joint quartic spaces") {
    const LinearRep plus = make_q4m_rep(
        "a1, det b = 1", direct_sum(r21.a, CycMatrix::identity(2)),
        direct_sum(r21.b, CycMatrix::identity(2)), 4);
    CHECK(semi_invariant_space(plus, 4, {1, 1}) ==
          std::vector<Poly4>{mono({0, 0, 0, 4}), mono({0, 0, 1, 3}),
                             mono({0, 0, 2, 2}), mono({0, 0, 3, 1}),
                             mono({0, 0, 4, 0}), mono({2, 2, 0, 0})});
    const LinearRep minus = make_q4m_rep(
        "a1, det b = -1", direct_sum(r21.a, CycMatrix::identity(2)),
        direct_sum(r21.b, CycMatrix::diagonal({C(1), C(-1)})), 4);
    CHECK(semi_invariant_space(minus, 4, {1, -1}) ==
          std::vector<Poly4>{mono({0, 0, 1, 3}), mono({0, 0, 3, 1}),
                             mono({1, 1, 0, 2}), mono({1, 1, 2, 0})});
  }

  SUBCASE("a2: the joint space forces beta = det(b) alpha and eps = 0") {
    for (const int s : {1, -1}) {
      const LinearRep rep = make_q4m_rep(
          "a2", direct_sum(r21.a, CycMatrix::diagonal({C(1), C(-1)})),
          direct_sum(r21.b, CycMatrix::diagonal({C(1), C(s)})), 4);
      CHECK(semi_invariant_space(rep, 4, {-1, s}) ==
            std::vector<Poly4>{mono({0, 0, 1, 3}), mono({0, 0, 3, 1}),
                               mono({4, 0, 0, 0}) +
                                   C(s) * mono({0, 4, 0, 0})});
    }
  }

  SUBCASE("the trivial 4-dimensional representation keeps everything") {
    const LinearRep triv = make_q4m_rep("trivial", CycMatrix::identity(4),
                                        CycMatrix::identity(4), 4);
    CHECK(semi_invariant_space(triv, 2, {1, 1}).size() == 10);
    CHECK(semi_invariant_space(triv, 2, {1, -1}).empty());
  }
}

TEST_CASE("projective points normalise their leading coordinate") {
  const PointP3 p({z4 * C(2), C(0), C(1), C(0)});
  CHECK(p.at(0) == C(1));
  CHECK(p.at(2) == (z4 * C(2)).inv());
  CHECK(PointP3({C(2), C(0), C(2), C(0)}) ==
        PointP3({C(1), C(0), C(1), C(0)}));
  CHECK(PointP3::coordinate_point(1) != PointP3::coordinate_point(2));
  CHECK(PointP3::coordinate_point(3).str() == "[0 : 0 : 0 : 1]");
  CHECK_THROWS_AS(PointP3({C(0), C(0), C(0), C(0)}), ShapeError);
}

TEST_CASE("singular points are detected through exact gradients") {
  const PointP3 p1 = PointP3::coordinate_point(0);
  const PointP3 p2 = PointP3::coordinate_point(1);
  CHECK(singular_at(mono({0, 0, 1, 3}) + C(7) * mono({0, 0, 3, 1}), p1));
  CHECK(singular_at(mono({1, 1, 0, 2}), p2));

  // [1 : z8 : 0 : 0] lies on the Fermat quartic but is a smooth point.
  const PointP3 q({C(1), z8, C(0), C(0)});
  CHECK_FALSE(singular_at(fermat_quartic_form(), q));

  // Scaling the coordinates does not change the answer.
  CHECK(singular_at(mono({1, 1, 0, 2}), PointP3({C(0), C(5), C(0), C(0)})));

  CHECK_THROWS_AS(singular_at(fermat_quartic_form(),
                              PointP3({C(1), C(0), C(0), C(1)})),
                  ShapeError);
}

TEST_CASE("binary resultants on the full homogeneous degree") {
  const Poly4 x3 = Poly4::variable(2), x4 = Poly4::variable(3);
  // The partials of x3^3 x4 + x3 x4^3 up to the scalar 4.
  const Poly4 f = C(3) * mono({0, 0, 2, 1}) + mono({0, 0, 0, 3});
  const Poly4 g = mono({0, 0, 3, 0}) + C(3) * mono({0, 0, 1, 2});
  CHECK(binary_resultant(f, g) == C(-64));

  CHECK(binary_resultant(C(4) * mono({0, 0, 3, 0}),
                         C(4) * mono({0, 0, 0, 3})) == C(4096));
  // A common root at [0 : 1] makes the resultant vanish.
  CHECK(binary_resultant(mono({0, 0, 3, 0}), mono({0, 0, 2, 1})) == C(0));
  // Linear sanity check: res(u - 2v, u - 5v) = -5 + 2.
  CHECK(binary_resultant(x3 - C(2) * x4, x3 - C(5) * x4) == C(-3));

  CHECK_THROWS_AS(binary_resultant(Poly4(), x3), ShapeError);
  CHECK_THROWS_AS(binary_resultant(mono({1, 1, 0, 0}), mono({0, 0, 2, 0})),
                  ShapeError);
  CHECK_THROWS_AS(binary_resultant(mono({0, 0, 2, 0}), mono({0, 0, 3, 0})),
                  ShapeError);
}

TEST_CASE("square roots of scaled roots of unity") {
  CHECK(cyc_sqrt(C(0)) == C(0));
  CHECK(cyc_sqrt(C(4)) == C(2));
  CHECK(cyc_sqrt(C(-4)) == C(2) * z4);
  CHECK(cyc_sqrt(z4) == z8);
  CHECK(cyc_sqrt(z4 * C(Rational(1, 4))) == z8 * C(Rational(1, 2)));
  const C r2 = cyc_sqrt(C(2));
  CHECK(r2 * r2 == C(2));
  CHECK_THROWS_AS(cyc_sqrt(C(1) + z4), UnsupportedRadicand);
}

TEST_CASE("fixed points of diagonal projective transformations") {
  const std::vector<PointP3> corners = {
      PointP3::coordinate_point(0), PointP3::coordinate_point(1),
      PointP3::coordinate_point(2), PointP3::coordinate_point(3)};
  const Poly4 w = mono({1, 1, 0, 0}) + mono({0, 0, 1, 1});
  const ProjMatrix pa(a_one());
  CHECK(diagonal_fixed_points(pa, w) == corners);
  CHECK(diagonal_fixed_points(pa.pow(2), w) == corners);
  CHECK(diagonal_fixed_points(pa.pow(4), w) == corners);

  // The identity fixes the whole surface.
  CHECK_THROWS_AS(
      diagonal_fixed_points(ProjMatrix(CycMatrix::identity(4)), w),
      InfiniteFixedLocus);
  // A fixed line inside the surface.
  CHECK_THROWS_AS(
      diagonal_fixed_points(
          ProjMatrix(CycMatrix::diagonal({C(1), C(1), z4, z4.inv()})),
          mono({2, 0, 2, 0}) + mono({0, 0, 0, 4})),
      InfiniteFixedLocus);
  // Non-diagonal matrices are rejected.
  CHECK_THROWS_AS(diagonal_fixed_points(ProjMatrix(fermat_p()), w),
                  ShapeError);
  // A trinomial restriction has no binomial radical shape.
  CHECK_THROWS_AS(
      diagonal_fixed_points(
          ProjMatrix(CycMatrix::diagonal({C(1), C(1), z4, z4.inv()})),
          mono({4, 0, 0, 0}) + mono({2, 2, 0, 0}) + mono({0, 4, 0, 0})),
      UnsupportedRadicand);

  // An eigenvalue block of size two meeting the Fermat quartic in four
  // points, found by a fourth root.
  const ProjMatrix g(CycMatrix::diagonal({C(1), C(1), z4, z4.inv()}));
  const std::vector<PointP3> pts =
      diagonal_fixed_points(g, fermat_quartic_form());
  REQUIRE(pts.size() == 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(pts[k] == PointP3({C::zeta(8, 2 * k + 1), C(1), C(0), C(0)}));
  }

  // Distinct eigenvalues everywhere: no coordinate point lies on the
  // Fermat quartic, so the fixed set on the surface is empty.
  const ProjMatrix h(CycMatrix::diagonal({C(1), z8, z4, C::zeta(8, 3)}));
  CHECK(diagonal_fixed_points(h, fermat_quartic_form()).empty());
}

TEST_CASE("rescaling quartics to the canonical coefficients") {
  const C one(1);
  SUBCASE("unit input needs no change") {
    const auto s = quartic_rescaling(one, one, one, one);
    CHECK(s == std::array<C, 4>{one, one, one, one});
  }
  SUBCASE("positive rationals") {
    const auto s = quartic_rescaling(C(Rational(1, 16)), C(Rational(1, 16)),
                                     C(Rational(125, 3)), C(Rational(5, 27)));
    CHECK(s == std::array<C, 4>{C(2), C(2), C(3), C(Rational(1, 5))});
  }
  SUBCASE("roots of unity in all four slots") {
    const auto s = quartic_rescaling(
        C(Rational(-1, 16)), C(Rational(-1, 16)),
        C::zeta(8, 7) * C(Rational(1, 8)), C::zeta(8, 5) * C(Rational(1, 2)));
    CHECK(s == std::array<C, 4>{C(2) * z8, C(2) * z8, z8, C(2)});
  }
  SUBCASE("opposite determinant sign") {
    const auto s =
        quartic_rescaling(C(Rational(1, 16)), C(Rational(-1, 16)), one, one);
    CHECK(s == std::array<C, 4>{C(2), C(2) * z8, one, one});
  }
  SUBCASE("branch residual repaired by a sign flip") {
    const C z16 = C::zeta(16);
    const auto s = quartic_rescaling(C(-1), one, z4 * C(4),
                                     z4 * C(Rational(1, 4)));
    CHECK(s == std::array<C, 4>{z8, one, C(2) * z16,
                                C(-1) * z16 * C(Rational(1, 2))});
  }
  SUBCASE("every instance lands exactly on the canonical form") {
    const std::array<C, 4> coeffs[] = {
        {C(Rational(1, 16)), C(Rational(1, 16)), C(Rational(125, 3)),
         C(Rational(5, 27))},
        {C(-1), one, z4 * C(4), z4 * C(Rational(1, 4))},
    };
    for (const auto& [al, be, ga, de] : coeffs) {
      const Poly4 f = al * mono({4, 0, 0, 0}) + be * mono({0, 4, 0, 0}) +
                      ga * mono({0, 0, 1, 3}) + de * mono({0, 0, 3, 1});
      const auto s = quartic_rescaling(al, be, ga, de);
      CHECK(apply_matrix(CycMatrix::diagonal({s[0], s[1], s[2], s[3]}), f) ==
            canonical_quartic_form());
    }
  }
  SUBCASE("vanishing coefficients are rejected by name") {
    CHECK_THROWS_AS(quartic_rescaling(C(0), one, one, one), ShapeError);
    CHECK_THROWS_AS(quartic_rescaling(one, one, C(0), one), ShapeError);
  }
}

TEST_CASE("the quadric case audit replays and passes") {
  const CaseAuditReport report = quadric_case_audit();
  CHECK(report.passed());
  CHECK(report.steps.size() == 32);
  CHECK(labels_of(report.steps).size() == report.steps.size());
  const std::set<std::string> labels = labels_of(report.steps);
  CHECK(labels.count("case-iv-normal-form") == 1);
  CHECK(labels.count("case-iv-count") == 1);
  CHECK(labels.count("conclusion") == 1);
  for (const AuditStep& s : report.steps) CHECK(s.pass);
}

TEST_CASE("the quartic case audit derives the canonical form") {
  const QuarticCaseResult result = quartic_case_audit();
  CHECK(result.passed());
  CHECK(result.canonical == canonical_quartic_form());
  CHECK(result.canonical == mono({4, 0, 0, 0}) + mono({0, 4, 0, 0}) +
                                mono({0, 0, 3, 1}) + mono({0, 0, 1, 3}));
  CHECK(result.steps.size() == 34);
  CHECK(labels_of(result.steps).size() == result.steps.size());
  const std::set<std::string> labels = labels_of(result.steps);
  CHECK(labels.count("case-a2-rescale-5") == 1);
  CHECK(labels.count("smooth-x3-x4") == 1);
  for (const AuditStep& s : result.steps) CHECK(s.pass);
}

TEST_CASE("the Fermat quartic carries the binary dihedral group") {
  const CaseAuditReport report = fermat_q16_check();
  CHECK(report.passed());
  CHECK(report.steps.size() == 6);
  CHECK(labels_of(report.steps).size() == 6);
  for (const AuditStep& s : report.steps) CHECK(s.pass);
}
