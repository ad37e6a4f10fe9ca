#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fermatk3/error.hpp"
#include "fermatk3/abstract_group.hpp"
#include "fermatk3/matrix_group.hpp"

using namespace fermatk3;
using C = CycNumber;

namespace {

CycMatrix diag4(const C& a, const C& b, const C& c, const C& d) {
  return CycMatrix::diagonal({a, b, c, d});
}

const C z4 = C::zeta(4);

// [[0,1,0,0],[z4,0,0,0],[0,0,1,0],[0,0,0,z4]]
CycMatrix matP() {
  CycMatrix m = CycMatrix::diagonal({C(0), C(0), C(1), z4});
  m.at(0, 1) = C(1);
  m.at(1, 0) = z4;
  return m;
}

// diag(z4, z4) on x1,x2 and the swap on x3,x4
CycMatrix matQ() {
  CycMatrix m = CycMatrix::diagonal({z4, z4, C(0), C(0)});
  m.at(2, 3) = C(1);
  m.at(3, 2) = C(1);
  return m;
}

CycMatrix matA() { return diag4(C(1), C(1), C(-1), C(-1)); }
CycMatrix matB() { return diag4(C(1), z4, C(1), z4.inv()); }
CycMatrix matC() { return CycMatrix::permutation({1, 0, 3, 2}); }

Poly4 fermat_quartic() {
  Poly4 f;
  for (int i = 0; i < 4; ++i) {
    Monomial m{0, 0, 0, 0};
    m[i] = 4;
    f += Poly4::monomial(m);
  }
  return f;
}

std::vector<ProjMatrix> tilde384_gens() {
  return {
      ProjMatrix(diag4(z4, C(1), C(1), C(1))),
      ProjMatrix(diag4(C(1), z4, C(1), C(1))),
      ProjMatrix(diag4(C(1), C(1), z4, C(1))),
      ProjMatrix(CycMatrix::permutation({1, 0, 2, 3})),     // (12)
      ProjMatrix(CycMatrix::permutation({1, 2, 3, 0})),     // (1234)
  };
}

std::vector<ProjMatrix> tilde128_gens() {
  return {
      ProjMatrix(diag4(z4, C(1), C(1), C(1))),
      ProjMatrix(diag4(C(1), z4, C(1), C(1))),
      ProjMatrix(diag4(C(1), C(1), z4, C(1))),
      ProjMatrix(CycMatrix::permutation({2, 3, 1, 0})),     // (1324)
      ProjMatrix(CycMatrix::permutation({0, 1, 3, 2})),     // (34)
  };
}

}  // namespace

TEST_CASE("matrix basics") {
  CycMatrix id = CycMatrix::identity(4);
  CHECK(id * id == id);
  CHECK(id.det() == C(1));

  CycMatrix c = matC();
  CHECK(c.at(0, 1) == C(1));
  CHECK(c.at(1, 0) == C(1));
  CHECK(c.at(2, 3) == C(1));
  CHECK(c.at(3, 2) == C(1));
  CHECK(c * c == id);
  CHECK(c.det() == C(1));  // product of two transpositions

  CycMatrix t = CycMatrix::permutation({1, 0, 2, 3});
  CHECK(t.det() == C(-1));

  CycMatrix p = matP();
  CHECK(p.inverse() * p == id);
  CHECK(p.pow(8) == id);
  CHECK(p.pow(4) == diag4(C(-1), C(-1), C(1), C(1)));
  CHECK(p.pow(-1) == p.inverse());
}

TEST_CASE("projective normalisation") {
  ProjMatrix scalar(diag4(z4, z4, z4, z4));
  CHECK(scalar.is_identity());

  ProjMatrix m(matP());
  ProjMatrix neg(matP() * C(-1));
  CHECK(m == neg);

  // diag(z4,1,1,1) normalises to diag(1, z4^-1, z4^-1, z4^-1)
  ProjMatrix d(diag4(z4, C(1), C(1), C(1)));
  CHECK(d.rep() == diag4(C(1), z4.inv(), z4.inv(), z4.inv()));

  CHECK_THROWS_AS(ProjMatrix(diag4(C(0), C(0), C(0), C(0))), ShapeError);
}

TEST_CASE("projective orders and the binary dihedral relations") {
  ProjMatrix P(matP()), Q(matQ());
  CHECK(P.order() == 8);
  CHECK(Q.order() == 4);
  CHECK(P.pow(4) == Q.pow(2));
  CHECK(Q.inverse() * P * Q == P.inverse());
  CHECK(P.pow(8).is_identity());

  // the linear lift picks up a scalar: Q^-1 P Q = z4 * P^-1
  CycMatrix lhs = matQ().inverse() * matP() * matQ();
  CHECK(lhs == matP().inverse() * z4);
}

TEST_CASE("closure of the paper's generating sets") {
  MatrixGroup q16 = MatrixGroup::generated_by(
      {ProjMatrix(matP()), ProjMatrix(matQ())});
  CHECK(q16.order() == 16);
  std::map<long, std::size_t> q16_orders{{1, 1}, {2, 1}, {4, 10}, {8, 4}};
  CHECK(q16.order_structure() == q16_orders);

  MatrixGroup abc = MatrixGroup::generated_by(
      {ProjMatrix(matA()), ProjMatrix(matB()), ProjMatrix(matC())});
  CHECK(abc.order() == 16);

  MatrixGroup trivial =
      MatrixGroup::generated_by({ProjMatrix(CycMatrix::identity(4))});
  CHECK(trivial.order() == 1);
}

TEST_CASE("alpha multiplier") {
  CHECK(alpha_multiplier(ProjMatrix(diag4(C(1), C(1), C(1), z4))) == z4);
  CHECK(alpha_multiplier(ProjMatrix(CycMatrix::identity(4))) == C(1));
  CHECK(alpha_multiplier(ProjMatrix(matP())) == C(1));
  CHECK(alpha_multiplier(ProjMatrix(matQ())) == C(1));
  CHECK(alpha_multiplier(ProjMatrix(matC())) == C(1));
  // (12) alone is odd
  CHECK(alpha_multiplier(ProjMatrix(CycMatrix::permutation({1, 0, 2, 3}))) ==
        C(-1));

  CycMatrix notmono = CycMatrix::identity(4);
  notmono.at(0, 1) = C(1);
  CHECK_THROWS_AS(alpha_multiplier(ProjMatrix(notmono)), ShapeError);

  // homomorphism on a few products
  ProjMatrix g(matP()), h(diag4(C(1), C(1), C(1), z4));
  CHECK(alpha_multiplier(g * h) ==
        alpha_multiplier(g) * alpha_multiplier(h));
  CHECK(alpha_multiplier(h * h) == C(-1));
}

TEST_CASE("alpha agrees with the multiplier on the quartic form") {
  Poly4 f = fermat_quartic();
  for (const auto& g : tilde384_gens()) {
    CHECK(form_multiplier(g, f) == alpha_multiplier(g));
  }
  ProjMatrix d(diag4(C(1), C(1), C(1), z4));
  auto lambda = polynomial_multiplier(d.rep(), f);
  REQUIRE(lambda.has_value());
  CHECK(*lambda == C(1));
  CHECK(form_multiplier(d, f) == z4);
}

TEST_CASE("the two ambient groups and their symplectic parts") {
  MatrixGroup t384 = MatrixGroup::generated_by(tilde384_gens());
  CHECK(t384.order() == 1536);

  MatrixGroup f384 = symplectic_part(t384);
  CHECK(f384.order() == 384);

  // alpha image is the full group of fourth roots of unity
  std::set<std::string> image;
  for (const auto& g : t384.elements())
    image.insert(alpha_multiplier(g).key());
  CHECK(image.size() == 4);

  MatrixGroup t128 = MatrixGroup::generated_by(tilde128_gens());
  CHECK(t128.order() == 512);
  CHECK(t384.contains(t128));

  MatrixGroup f128 = symplectic_part(t128);
  CHECK(f128.order() == 128);
  std::map<long, std::size_t> f128_orders{{1, 1}, {2, 35}, {4, 76}, {8, 16}};
  CHECK(f128.order_structure() == f128_orders);
  CHECK(f384.contains(f128));

  MatrixGroup q16 = MatrixGroup::generated_by(
      {ProjMatrix(matP()), ProjMatrix(matQ())});
  CHECK(f128.contains(q16));

  MatrixGroup derived = f128.commutator_subgroup();
  CHECK(derived.order() == 16);
  CHECK(derived.is_normal_in(f128));
  // order structure of C2 x D8
  std::map<long, std::size_t> c2d8_orders{{1, 1}, {2, 11}, {4, 4}};
  CHECK(derived.order_structure() == c2d8_orders);

  // An explicit generating triple for the derived subgroup, confirmed by
  // exhaustive enumeration of all 128 x 128 commutators.
  MatrixGroup dgc = MatrixGroup::generated_by(
      {ProjMatrix(diag4(C(1), C(-1), C(-1), C(1))),
       ProjMatrix(diag4(C(1), C(1), z4, z4.inv())),
       ProjMatrix(matC())});
  CHECK(derived.same_group(dgc));
  CHECK(derived.contains(ProjMatrix(matA())));
  CHECK(derived.contains(ProjMatrix(matC())));

  // <A,B,C> also has order 16 and sits inside F128, but it is not stable
  // under conjugation, so it is a different subgroup: B is no commutator.
  MatrixGroup abc = MatrixGroup::generated_by(
      {ProjMatrix(matA()), ProjMatrix(matB()), ProjMatrix(matC())});
  CHECK(abc.order() == 16);
  CHECK(f128.contains(abc));
  CHECK(!abc.is_normal_in(f128));
  CHECK(!derived.contains(ProjMatrix(matB())));
}

TEST_CASE("commutator subgroup of the binary dihedral group") {
  MatrixGroup q16 = MatrixGroup::generated_by(
      {ProjMatrix(matP()), ProjMatrix(matQ())});
  MatrixGroup derived = q16.commutator_subgroup();
  CHECK(derived.order() == 4);
  CHECK(derived.contains(ProjMatrix(matP()).pow(2)));
}

TEST_CASE("splitting over the group of fourth roots") {
  MatrixGroup t384 = MatrixGroup::generated_by(tilde384_gens());
  MatrixGroup f384 = symplectic_part(t384);
  ProjMatrix s(diag4(C(1), C(1), C(1), z4));
  CHECK(alpha_multiplier(s) == z4);
  CHECK(s.order() == 4);
  // <s> meets the symplectic part trivially, so the extension splits
  for (long k = 1; k < 4; ++k)
    CHECK(!f384.contains(s.pow(k)));
  MatrixGroup lift = MatrixGroup::generated_by({s});
  CHECK(lift.order() == 4);
}

TEST_CASE("conjugate subgroups share their order structure") {
  MatrixGroup t384 = MatrixGroup::generated_by(tilde384_gens());
  MatrixGroup t128 = MatrixGroup::generated_by(tilde128_gens());
  ProjMatrix tau(CycMatrix::permutation({1, 2, 0, 3}));  // (123)
  CHECK(tau.order() == 3);
  auto conj_gens = [&](const ProjMatrix& t) {
    std::vector<ProjMatrix> out;
    for (const auto& g : t128.generators()) out.push_back(t.inverse() * g * t);
    return out;
  };
  MatrixGroup c1 = MatrixGroup::generated_by(conj_gens(tau));
  MatrixGroup c2 = MatrixGroup::generated_by(conj_gens(tau.pow(2)));
  CHECK(c1.order() == 512);
  CHECK(c2.order() == 512);
  CHECK(t384.contains(c1));
  CHECK(t384.contains(c2));
  CHECK(c1.order_structure() == t128.order_structure());
  CHECK(c2.order_structure() == t128.order_structure());
}

TEST_CASE("matrix action on quartic forms") {
  Poly4 f = fermat_quartic();
  CHECK(f.is_homogeneous(4));

  // P permutes the Fermat monomials with scalar one
  Poly4 fp = f.substituted(matP().rows());
  CHECK(fp == f);

  // a2 = diag(z8, z8^-1, 1, -1) negates x1^4+x2^4+x3^3 x4+x3 x4^3
  Poly4 w = f;
  w = Poly4::monomial({4, 0, 0, 0}) + Poly4::monomial({0, 4, 0, 0}) +
      Poly4::monomial({0, 0, 3, 1}) + Poly4::monomial({0, 0, 1, 3});
  CycMatrix a2 = diag4(C::zeta(8), C::zeta(8, 7), C(1), C(-1));
  CHECK(w.substituted(a2.rows()) == -w);
  auto r = w.scalar_ratio_to(w.substituted(a2.rows()));
  REQUIRE(r.has_value());
  CHECK(*r == C(-1));
}

TEST_CASE("resultants of the smoothness subsystems") {
  // partials of x3^3 x4 + x3 x4^3 in the two variables
  Poly4 w34 = Poly4::monomial({0, 0, 3, 1}) + Poly4::monomial({0, 0, 1, 3});
  Poly4 dx3 = w34.derivative(2);
  Poly4 dx4 = w34.derivative(3);
  // set x4 = 1 and read off univariate coefficients in x3
  CycTable sub = CycMatrix::identity(4).rows();
  sub[3][3] = C(1);
  auto dehomog = [](const Poly4& p) {
    std::vector<CycNumber> c;
    for (const auto& [m, x] : p.terms()) {
      if (static_cast<std::size_t>(m[2]) >= c.size())
        c.resize(m[2] + 1, CycNumber(0));
      c[m[2]] += x;
    }
    return c;
  };
  CycNumber res = resultant(dehomog(dx3), dehomog(dx4));
  CHECK(!res.is_zero());

  // common root x = 0
  std::vector<CycNumber> p{C(0), C(0), C(0), C(1)};   // x^3
  std::vector<CycNumber> q{C(0), C(0), C(1)};         // x^2
  CHECK(resultant(p, q).is_zero());
}

TEST_CASE("model group tables and their invariants") {
  CayleyTable q16 = CayleyTable::binary_dihedral(4);
  CHECK(q16.order() == 16);
  std::map<long, std::size_t> q16_orders{{1, 1}, {2, 1}, {4, 10}, {8, 4}};
  CHECK(q16.order_structure() == q16_orders);
  CHECK(q16.center().size() == 2);
  CHECK(q16.abelianization() == std::vector<long>{2, 2});
  // its commutator subgroup is cyclic of order 4
  std::vector<int> der = q16.derived_subgroup();
  CHECK(der.size() == 4);
  CHECK(iso_search(q16.subgroup(der), CayleyTable::cyclic(4)).has_value());

  // the dihedral group of the same order is a different group
  CayleyTable d16 = CayleyTable::dihedral(8);
  CHECK(d16.order() == 16);
  CHECK(!iso_search(q16, d16).has_value());

  CHECK(iso_search(CayleyTable::cyclic(12),
                   CayleyTable::direct_product(CayleyTable::cyclic(3),
                                               CayleyTable::cyclic(4)))
            .has_value());
  CHECK(!iso_search(CayleyTable::cyclic(4), CayleyTable::elementary_abelian_2(2))
             .has_value());
  CHECK(CayleyTable::elementary_abelian_2(3).abelianization() ==
        std::vector<long>{2, 2, 2});
}

TEST_CASE("matrix subgroups get their abstract names") {
  MatrixGroup q16m =
      MatrixGroup::generated_by({ProjMatrix(matP()), ProjMatrix(matQ())});
  CayleyTable q16t = CayleyTable::from_matrix_group(q16m);
  CHECK(iso_search(q16t, CayleyTable::binary_dihedral(4)).has_value());
  CHECK(group_invariants(q16t).center_order == 2);

  MatrixGroup t128 = MatrixGroup::generated_by(tilde128_gens());
  MatrixGroup f128 = symplectic_part(t128);
  CayleyTable dt = CayleyTable::from_matrix_group(f128.commutator_subgroup());
  CayleyTable c2d8 = CayleyTable::direct_product(CayleyTable::cyclic(2),
                                                 CayleyTable::dihedral(4));
  CHECK(iso_search(dt, c2d8).has_value());
  CHECK(group_invariants(dt).abelianization == std::vector<long>{2, 2, 2});

  // C2 x D8 contains exactly one subgroup isomorphic to C2 x C4
  CayleyTable c2c4 = CayleyTable::direct_product(CayleyTable::cyclic(2),
                                                 CayleyTable::cyclic(4));
  int hits = 0;
  for (const auto& s : subgroups_of_order(c2d8, 8))
    if (iso_search(c2d8.subgroup(s), c2c4).has_value()) ++hits;
  CHECK(hits == 1);
}
