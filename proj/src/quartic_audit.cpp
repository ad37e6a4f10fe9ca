#include "fermatk3/quartic_audit.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "fermatk3/abstract_group.hpp"
#include "fermatk3/cyc_linalg.hpp"
#include "fermatk3/error.hpp"
#include "fermatk3/fixed_point.hpp"

namespace fermatk3 {

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const auto n = exact_nth_root(num(q), 2);
  const auto d = exact_nth_root(den(q), 2);
  if (!n || !d) return std::nullopt;
  return Rational(*n) / Rational(*d);
}

std::string poly_list(const std::vector<Poly4>& ps) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ps.size(); ++i)
    out << (i ? ", " : "") << ps[i].str();
  return out.str();
}

std::set<int> span_support(const std::vector<Poly4>& basis) {
  std::set<int> vars;
  for (const Poly4& p : basis)
    for (const auto& [m, c] : p.terms())
      for (int i = 0; i < 4; ++i)
        if (m[i] > 0) vars.insert(i);
  return vars;
}

// Symmetric matrix of a quadric: q(x) = x^T G x.
CycTable gram_matrix(const Poly4& q) {
  if (q.is_zero() || !q.is_homogeneous(2))
    throw ShapeError("Gram matrix needs a nonzero quadric");
  CycTable g(4, CycRow(4, CycNumber(0)));
  const Rational half(1, 2);
  for (const auto& [m, c] : q.terms())
    for (int i = 0; i < 4; ++i) {
      if (m[i] == 2) g[i][i] = c;
      for (int j = i + 1; j < 4; ++j)
        if (m[i] == 1 && m[j] == 1) g[i][j] = g[j][i] = half * c;
    }
  return g;
}

std::size_t rank_of(CycTable t) {
  std::vector<std::size_t> pivots;
  rref(std::move(t), &pivots);
  return pivots.size();
}

// A quadric supported on at most two of the four variables has Gram rank at
// most 2, hence is singular; the bound holds for the whole span at once.
bool span_is_singular(const std::vector<Poly4>& basis) {
  if (span_support(basis).size() > 2) return false;
  for (const Poly4& p : basis)
    if (rank_of(gram_matrix(p)) > 2) return false;
  return true;
}

const LinearRep& find_rep(const std::vector<LinearRep>& reps,
                          const std::string& name) {
  for (const LinearRep& r : reps)
    if (r.name == name) return r;
  throw ShapeError("unknown representation " + name);
}

LinearRep sum_rep(const std::string& name, const LinearRep& r1,
                  const LinearRep& r2) {
  return make_q4m_rep(name, direct_sum(r1.a, r2.a), direct_sum(r1.b, r2.b), 4);
}

bool basis_is(const std::vector<Poly4>& basis,
              const std::vector<Poly4>& expected) {
  return basis == expected;
}

std::vector<Poly4> as_monomials(const std::vector<Monomial>& monos) {
  std::vector<Poly4> out;
  for (const Monomial& m : monos) out.push_back(Poly4::monomial(m));
  return out;
}

// The centre of the binary dihedral group of order 16 is the unique minimal
// normal subgroup, so a projective representation is faithful exactly when
// the image of a^4 is not scalar.
void preamble_steps(const std::vector<LinearRep>& irreps,
                    std::vector<AuditStep>& steps) {
  {
    const CayleyTable q16 = CayleyTable::binary_dihedral(4);
    const std::vector<int> zc = q16.center();
    bool ok = q16.order() == 16 && zc.size() == 2;
    if (ok) {
      const int z = zc[0] == 0 ? zc[1] : zc[0];
      for (int g = 1; g < q16.order() && ok; ++g) {
        std::vector<int> conj;
        for (int h = 0; h < q16.order(); ++h)
          conj.push_back(q16.mul(q16.mul(h, g), q16.inv(h)));
        const std::vector<int> nc = q16.closure_of(conj);
        ok = std::find(nc.begin(), nc.end(), z) != nc.end();
      }
    }
    steps.push_back(AuditStep::computed(
        "center-detects-kernel",
        "the centre of the binary dihedral group of order 16 has order 2 and "
        "lies in every nontrivial normal subgroup, so a projective action is "
        "faithful exactly when the image of a^4 is not scalar",
        ok));
  }
  {
    bool ok = irreps.size() == 7;
    for (const LinearRep& r : irreps) {
      const CycMatrix c4 = r.a.pow(4);
      const CycMatrix id = CycMatrix::identity(r.dim());
      const bool is_minus = c4 == id * CycNumber(-1);
      const bool is_plus = c4 == id;
      const bool expect_minus =
          r.name == "rho_{2,1}" || r.name == "rho_{2,2}";
      ok = ok && (is_minus || is_plus) && is_minus == expect_minus;
    }
    steps.push_back(AuditStep::computed(
        "central-images",
        "a^4 maps to -1 exactly in rho_{2,1} and rho_{2,2} and to +1 in the "
        "other five irreducible representations, so a faithful projective "
        "4-dimensional action contains rho_{2,1} or rho_{2,2}",
        ok));
  }
  {
    const LinearRep& r21 = find_rep(irreps, "rho_{2,1}");
    const LinearRep& r22 = find_rep(irreps, "rho_{2,2}");
    bool ok = r22.a == r21.a.pow(3) && r22.b == r21.b;
    try {
      make_q4m_rep("a-cubed twist", r21.a.pow(3), r21.b, 4);
    } catch (const ShapeError&) {
      ok = false;
    }
    steps.push_back(AuditStep::computed(
        "outer-twist-a-cubed",
        "rho_{2,2} is rho_{2,1} composed with the automorphism a -> a^3, "
        "b -> b, so decompositions may be normalised to contain rho_{2,1}",
        ok));
  }
}

void order_exclusion_steps(const std::vector<LinearRep>& irreps,
                           std::vector<AuditStep>& steps) {
  const LinearRep& r21 = find_rep(irreps, "rho_{2,1}");
  const LinearRep& r22 = find_rep(irreps, "rho_{2,2}");
  const std::pair<const char*, const LinearRep> cases[] = {
      {"case-i", sum_rep("rho_{2,1} + rho_{2,1}", r21, r21)},
      {"case-ii", sum_rep("rho_{2,1} + rho_{2,2}", r21, r22)},
  };
  for (const auto& [label, rep] : cases) {
    const bool scalar = rep.a.pow(4).is_scalar();
    const bool trivial = ProjMatrix(rep.a).pow(4).is_identity();
    steps.push_back(AuditStep::computed(
        label,
        std::string(rep.name) +
            ": a^4 maps to a scalar matrix, so the projective action kills "
            "the centre and cannot be faithful",
        scalar && trivial));
  }
}

struct SignPair {
  int t3, t4;
  const char* label;  // suffix used in step labels
  const char* word;   // human-readable sign pair
};

const SignPair kSignPairs[] = {
    {1, 1, "pp", "(+1,+1)"},
    {1, -1, "pm", "(+1,-1)"},
    {-1, 1, "mp", "(-1,+1)"},
    {-1, -1, "mm", "(-1,-1)"},
};

}  // namespace

PointP3::PointP3(const std::array<CycNumber, 4>& coords) : c_(coords) {
  int lead = -1;
  for (int i = 0; i < 4 && lead < 0; ++i)
    if (!c_[i].is_zero()) lead = i;
  if (lead < 0)
    throw ShapeError("projective point needs a nonzero coordinate");
  const CycNumber scale = c_[lead].inv();
  for (CycNumber& x : c_) x = x * scale;
}

std::string PointP3::str() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < 4; ++i) out << (i ? " : " : "") << c_[i].str();
  out << "]";
  return out.str();
}

PointP3 PointP3::coordinate_point(int i) {
  if (i < 0 || i > 3) throw ShapeError("coordinate index out of range");
  std::array<CycNumber, 4> c{CycNumber(0), CycNumber(0), CycNumber(0),
                             CycNumber(0)};
  c[i] = CycNumber(1);
  return PointP3(c);
}

bool singular_at(const Poly4& F, const PointP3& P) {
  if (F.is_zero() || !F.is_homogeneous(F.total_degree()))
    throw ShapeError("singularity test needs a nonzero homogeneous form");
  if (!F.evaluated(P.coords()).is_zero())
    throw ShapeError("point does not lie on the hypersurface");
  for (int i = 0; i < 4; ++i)
    if (!F.derivative(i).evaluated(P.coords()).is_zero()) return false;
  return true;
}

CycNumber cyc_sqrt(const CycNumber& v) {
  if (v.is_zero()) return v;
  const CycNumber norm = v * v.conj();
  if (!norm.is_rational())
    throw UnsupportedRadicand("radicand is not a scaled root of unity");
  const std::optional<Rational> q = rational_sqrt(norm.rational_value());
  if (!q) throw UnsupportedRadicand("radicand has irrational modulus");
  const CycNumber rho = v / CycNumber(*q);
  if (!rho.root_of_unity_order())
    throw UnsupportedRadicand("radicand is not a scaled root of unity");
  const CycNumber r =
      cyc_sqrt_of_positive_rational(*q) * rho.sqrt_of_root_of_unity();
  if (r * r != v)
    throw UnsupportedRadicand("square root verification failed");
  return r;
}

CycNumber binary_resultant(const Poly4& f, const Poly4& g) {
  if (f.is_zero() || g.is_zero()) throw ShapeError("resultant of a zero form");
  const int df = f.total_degree(), dg = g.total_degree();
  if (!f.is_homogeneous(df) || !g.is_homogeneous(dg))
    throw ShapeError("resultant needs homogeneous forms");
  std::set<int> support;
  for (const Poly4* p : {&f, &g})
    for (const auto& [m, c] : p->terms())
      for (int i = 0; i < 4; ++i)
        if (m[i] > 0) support.insert(i);
  if (support.size() != 2)
    throw ShapeError("resultant needs forms in exactly two variables");
  const int u = *support.begin();
  auto ascending = [&](const Poly4& p, int d) {
    std::vector<CycNumber> c(d + 1, CycNumber(0));
    for (const auto& [m, x] : p.terms()) c[m[u]] += x;
    return c;
  };
  const std::vector<CycNumber> cf = ascending(f, df), cg = ascending(g, dg);
  // Sylvester matrix on the full homogeneous degrees: roots at [1:0] and
  // [0:1] must count, so no degree trimming.
  const int n = df + dg;
  CycTable s(n, CycRow(n, CycNumber(0)));
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j <= df; ++j) s[i][i + j] = cf[df - j];
  for (int i = 0; i < df; ++i)
    for (int j = 0; j <= dg; ++j) s[dg + i][i + j] = cg[dg - j];
  return determinant(s);
}

std::vector<PointP3> diagonal_fixed_points(const ProjMatrix& g,
                                           const Poly4& F) {
  const CycMatrix& m = g.rep();
  if (m.dim() != 4) throw ShapeError("fixed points expect a 4x4 matrix");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && !m.at(i, j).is_zero())
        throw ShapeError("fixed points need a diagonal transformation");
  if (F.is_zero() || !F.is_homogeneous(F.total_degree()))
    throw ShapeError("fixed points need a nonzero homogeneous form");

  // The fixed locus in P^3 is the union of the projectivised eigenspaces,
  // which for a diagonal matrix are coordinate subspaces.
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < 4; ++i) {
    bool placed = false;
    for (std::vector<int>& blk : blocks)
      if (m.at(blk[0], blk[0]) == m.at(i, i)) {
        blk.push_back(i);
        placed = true;
        break;
      }
    if (!placed) blocks.push_back({i});
  }

  std::vector<PointP3> out;
  for (const std::vector<int>& blk : blocks) {
    if (blk.size() == 1) {
      const PointP3 p = PointP3::coordinate_point(blk[0]);
      if (F.evaluated(p.coords()).is_zero()) out.push_back(p);
      continue;
    }
    Poly4 restricted;
    for (const auto& [mo, c] : F.terms()) {
      bool inside = true;
      for (int i = 0; i < 4 && inside; ++i)
        if (mo[i] > 0 &&
            std::find(blk.begin(), blk.end(), i) == blk.end())
          inside = false;
      if (inside) restricted += Poly4::monomial(mo, c);
    }
    if (restricted.is_zero())
      throw InfiniteFixedLocus(
          "a fixed coordinate subspace lies inside the surface");
    if (blk.size() >= 3)
      throw InfiniteFixedLocus(
          "the fixed locus meets the surface in a positive-dimensional set");

    const int u = blk[0], w = blk[1];
    const int d = restricted.total_degree();
    std::vector<CycNumber> c(d + 1, CycNumber(0));
    for (const auto& [mo, x] : restricted.terms()) c[mo[u]] += x;
    int lo = 0;
    while (c[lo].is_zero()) ++lo;
    int hi = d;
    while (c[hi].is_zero()) --hi;
    if (hi < d) out.push_back(PointP3::coordinate_point(u));
    if (lo > 0) out.push_back(PointP3::coordinate_point(w));
    if (hi > lo) {
      for (int k = lo + 1; k < hi; ++k)
        if (!c[k].is_zero())
          throw UnsupportedRadicand(
              "the restricted binary form is not a binomial");
      const int r = hi - lo;
      const CycNumber val = (c[lo] / c[hi]) * CycNumber(-1);
      CycNumber root;
      switch (r) {
        case 1:
          root = val;
          break;
        case 2:
          root = cyc_sqrt(val);
          break;
        case 4:
          root = val.fourth_root();
          break;
        default:
          throw UnsupportedRadicand(
              "only binomial exponents 1, 2 and 4 are solvable here");
      }
      const CycNumber step =
          r == 1 ? CycNumber(1) : CycNumber::zeta(r);
      for (int k = 0; k < r; ++k) {
        std::array<CycNumber, 4> coords{CycNumber(0), CycNumber(0),
                                        CycNumber(0), CycNumber(0)};
        coords[u] = root;
        coords[w] = CycNumber(1);
        const PointP3 p(coords);
        if (!F.evaluated(p.coords()).is_zero())
          throw ShapeError("computed fixed point misses the surface");
        out.push_back(p);
        root = root * step;
      }
    }
  }
  return out;
}

std::array<CycNumber, 4> quartic_rescaling(const CycNumber& alpha,
                                           const CycNumber& beta,
                                           const CycNumber& gamma,
                                           const CycNumber& delta) {
  const char* names[] = {"alpha", "beta", "gamma", "delta"};
  const CycNumber* vals[] = {&alpha, &beta, &gamma, &delta};
  for (int i = 0; i < 4; ++i)
    if (vals[i]->is_zero())
      throw ShapeError(std::string("normalisation needs ") + names[i] +
                       " != 0");
  const CycNumber one(1);
  const CycNumber c = (one / alpha).fourth_root();
  const CycNumber d = (one / beta).fourth_root();
  // e f^3 = 1/gamma and e^3 f = 1/delta pin down (ef)^4 and (e/f)^2; any
  // branch choices leave equal residuals of square 1 on the two mixed
  // coefficients, and a sign flip of f repairs both at once.
  const CycNumber ef = (one / (gamma * delta)).fourth_root();
  const CycNumber ratio = cyc_sqrt(gamma / delta);
  const CycNumber e = cyc_sqrt(ef * ratio);
  CycNumber f = ef / e;
  if (gamma * e * f.pow(3) != one) f = f * CycNumber(-1);
  if (gamma * e * f.pow(3) != one || delta * e.pow(3) * f != one)
    throw UnsupportedRadicand("rescaling residual is not a sign");
  return {c, d, e, f};
}

Poly4 fermat_quartic_form() {
  Poly4 f;
  for (int i = 0; i < 4; ++i) {
    Monomial m{0, 0, 0, 0};
    m[i] = 4;
    f += Poly4::monomial(m);
  }
  return f;
}

Poly4 canonical_quartic_form() {
  return Poly4::monomial({4, 0, 0, 0}) + Poly4::monomial({0, 4, 0, 0}) +
         Poly4::monomial({0, 0, 3, 1}) + Poly4::monomial({0, 0, 1, 3});
}

CycMatrix fermat_p() {
  const CycNumber z4 = CycNumber::zeta(4);
  CycMatrix m = CycMatrix::diagonal({CycNumber(0), CycNumber(0), CycNumber(1),
                                     z4});
  m.at(0, 1) = CycNumber(1);
  m.at(1, 0) = z4;
  return m;
}

CycMatrix fermat_q() {
  const CycNumber z4 = CycNumber::zeta(4);
  CycMatrix m = CycMatrix::diagonal({z4, z4, CycNumber(0), CycNumber(0)});
  m.at(2, 3) = CycNumber(1);
  m.at(3, 2) = CycNumber(1);
  return m;
}

CaseAuditReport quadric_case_audit() {
  std::vector<AuditStep> steps;
  const std::vector<LinearRep> irreps = q16_irreps();
  const LinearRep& r21 = find_rep(irreps, "rho_{2,1}");
  const LinearRep& r23 = find_rep(irreps, "rho_{2,3}");

  preamble_steps(irreps, steps);
  order_exclusion_steps(irreps, steps);

  const Poly4 x1x2 = Poly4::monomial({1, 1, 0, 0});
  const Poly4 x3x4 = Poly4::monomial({0, 0, 1, 1});
  const Poly4 x3sq = Poly4::monomial({0, 0, 2, 0});
  const Poly4 x4sq = Poly4::monomial({0, 0, 0, 2});

  // Case (iii): rho_{2,1} + rho_{2,3}. The centre survives, so the action is
  // faithful, and every semi-invariant quadric is singular.
  {
    const LinearRep rep = sum_rep("rho_{2,1} + rho_{2,3}", r21, r23);
    steps.push_back(AuditStep::computed(
        "case-iii-faithful",
        "in rho_{2,1} + rho_{2,3} the image of a^4 is not scalar, so the "
        "projective action is faithful and the quadric must be semi-invariant",
        !rep.a.pow(4).is_scalar()));
    const std::pair<LinearCharacter, Poly4> expected[] = {
        {{1, 1}, x3x4},
        {{1, -1}, x1x2},
        {{-1, 1}, x3sq + x4sq},
        {{-1, -1}, x3sq - x4sq},
    };
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& [chi, form] = expected[k];
      const std::vector<Poly4> basis = semi_invariant_space(rep, 2, chi);
      const bool ok = basis_is(basis, {form}) && span_is_singular(basis);
      steps.push_back(AuditStep::computed(
          std::string("case-iii-chi-") + kSignPairs[k].label,
          std::string("characters ") + kSignPairs[k].word +
              ": the only candidate quadric is " + form.str() +
              ", a form in two variables, hence singular",
          ok));
    }
  }

  // Case (iv): rho_{2,1} plus two sign representations, all 16 ordered
  // pairs. Every semi-invariant quadric is singular except the span
  // {x3 x4, x1 x2}, which appears exactly when the two summands share the
  // a-sign and differ in the b-sign.
  const int eps[] = {1, 1, -1, -1};
  const int del[] = {1, -1, 1, -1};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::ostringstream name;
      name << "rho_{2,1} + rho_{1," << i + 1 << "} + rho_{1," << j + 1 << "}";
      const LinearRep rep = make_q4m_rep(
          name.str(),
          direct_sum(r21.a, CycMatrix::diagonal({CycNumber(eps[i]),
                                                 CycNumber(eps[j])})),
          direct_sum(r21.b, CycMatrix::diagonal({CycNumber(del[i]),
                                                 CycNumber(del[j])})),
          4);
      bool ok = !rep.a.pow(4).is_scalar();
      bool exceptional_seen = false;
      for (const SignPair& sp : kSignPairs) {
        const std::vector<Poly4> basis =
            semi_invariant_space(rep, 2, {sp.t3, sp.t4});
        if (basis.empty()) continue;
        if (basis_is(basis, {x3x4, x1x2}))
          exceptional_seen = true;
        else
          ok = ok && span_is_singular(basis);
      }
      const bool expect_exceptional =
          eps[i] * eps[j] == 1 && del[i] * del[j] == -1;
      ok = ok && exceptional_seen == expect_exceptional;
      std::ostringstream label;
      label << "case-iv-" << i + 1 << j + 1;
      steps.push_back(AuditStep::computed(
          label.str(),
          name.str() + (expect_exceptional
                            ? ": all semi-invariant quadrics are singular "
                              "except the span of x3 x4 and x1 x2, deferred "
                              "to the normal-form steps"
                            : ": every semi-invariant quadric is a form in "
                              "at most two variables, hence singular"),
          ok));
    }

  // The surviving span: members with a vanishing coefficient are singular,
  // and any other member rescales to x1 x2 + x3 x4.
  const Poly4 normal_form = x1x2 + x3x4;
  {
    bool ok = rank_of(gram_matrix(x1x2)) <= 2 &&
              rank_of(gram_matrix(x3x4)) <= 2 &&
              rank_of(gram_matrix(normal_form)) == 4;
    const std::pair<CycNumber, CycNumber> instances[] = {
        {CycNumber(2), CycNumber(3)},
        {CycNumber(-1), CycNumber::zeta(8) * CycNumber(Rational(1, 4))},
    };
    for (const auto& [al, be] : instances) {
      const CycMatrix scale = CycMatrix::diagonal(
          {CycNumber(1), al.inv(), CycNumber(1), be.inv()});
      ok = ok && apply_matrix(scale, al * x1x2 + be * x3x4) == normal_form;
    }
    steps.push_back(AuditStep::computed(
        "case-iv-normal-form",
        "in the span of x1 x2 and x3 x4, members with a vanishing "
        "coefficient are singular and any other member rescales exactly to "
        "x1 x2 + x3 x4, whose Gram matrix has full rank",
        ok));
  }

  // Fixed points of a, a^2, a^4 on the normal form, for both surviving
  // shapes of the sign block.
  const CycNumber z8 = CycNumber::zeta(8);
  const std::vector<PointP3> corners = {
      PointP3::coordinate_point(0), PointP3::coordinate_point(1),
      PointP3::coordinate_point(2), PointP3::coordinate_point(3)};
  const CycMatrix variants[] = {
      CycMatrix::diagonal({z8, z8.inv(), CycNumber(1), CycNumber(1)}),
      CycMatrix::diagonal({z8, z8.inv(), CycNumber(-1), CycNumber(-1)}),
  };
  for (int v = 0; v < 2; ++v) {
    const ProjMatrix pa(variants[v]);
    const bool ok =
        diagonal_fixed_points(pa, normal_form) == corners &&
        diagonal_fixed_points(pa.pow(2), normal_form) == corners &&
        diagonal_fixed_points(pa.pow(4), normal_form) == corners;
    steps.push_back(AuditStep::computed(
        std::string("case-iv-fixed-points-") + (v == 0 ? "1" : "2"),
        std::string("for a = ") +
            (v == 0 ? "diag(z8, z8^-1, 1, 1)" : "diag(z8, z8^-1, -1, -1)") +
            " the fixed points of a, a^2 and a^4 on x1 x2 + x3 x4 = 0 are "
            "exactly the four coordinate points",
        ok));
  }
  steps.push_back(AuditStep::assumption(
      "case-iv-preimage",
      "the quartic surface is a double cover of the quadric, and the fixed "
      "loci of a^2 and a^4 upstairs are both the preimage of the same four "
      "points, so X^{a^2} = X^{a^4} with at most 8 points"));
  steps.push_back(AuditStep::computed(
      "case-iv-count",
      "a symplectic automorphism of order 4 fixes exactly 4 points and one "
      "of order 2 exactly 8, so X^{a^2} = X^{a^4} is impossible and the "
      "normal form is excluded",
      nikulin_fixed_count(4) == 4 && nikulin_fixed_count(2) == 8));

  steps.push_back(AuditStep::computed(
      "conclusion",
      "no smooth quadric surface carries a faithful action of the binary "
      "dihedral group of order 16: every decomposition is excluded",
      all_steps_pass(steps)));
  return CaseAuditReport{std::move(steps)};
}

QuarticCaseResult quartic_case_audit() {
  std::vector<AuditStep> steps;
  const std::vector<LinearRep> irreps = q16_irreps();
  const LinearRep& r21 = find_rep(irreps, "rho_{2,1}");
  const LinearRep& r23 = find_rep(irreps, "rho_{2,3}");
  const CycNumber one(1), minus(-1);
  const CycNumber z8 = CycNumber::zeta(8), z4 = CycNumber::zeta(4);
  const PointP3 p1 = PointP3::coordinate_point(0);
  const PointP3 p2 = PointP3::coordinate_point(1);
  const PointP3 p3 = PointP3::coordinate_point(2);
  const PointP3 p4 = PointP3::coordinate_point(3);

  preamble_steps(irreps, steps);
  order_exclusion_steps(irreps, steps);

  steps.push_back(AuditStep::assumption(
      "equation-multiplier",
      "a symplectic automorphism of the quartic surface multiplies the "
      "defining equation by the determinant of its linear lift"));

  // Case (iii): a = diag(z8, z8^-1, z4, z4^-1) has determinant 1, so the
  // equation is strictly a-invariant, and every invariant quartic is
  // singular at [1:0:0:0].
  {
    const CycMatrix a3 = direct_sum(r21.a, r23.a);
    steps.push_back(AuditStep::computed(
        "case-iii-determinant",
        "in rho_{2,1} + rho_{2,3} the image of a has determinant 1, so the "
        "quartic equation is strictly a-invariant",
        a3.det() == one));
    const std::vector<Poly4> inv = eigenforms(a3, 4, one);
    const std::vector<Poly4> expected = as_monomials({{0, 0, 0, 4},
                                                      {0, 0, 2, 2},
                                                      {0, 0, 4, 0},
                                                      {1, 1, 1, 1},
                                                      {2, 2, 0, 0}});
    steps.push_back(AuditStep::computed(
        "case-iii-invariants",
        "the a-invariant quartics are spanned by " + poly_list(expected) +
            "; the odd binary monomials x3^3 x4 and x3 x4^3 are "
            "a-anti-invariant and drop out",
        basis_is(inv, expected) &&
            apply_matrix(a3, Poly4::monomial({0, 0, 3, 1})) ==
                minus * Poly4::monomial({0, 0, 3, 1})));
    bool sing = !inv.empty();
    for (const Poly4& f : inv) sing = sing && singular_at(f, p1);
    steps.push_back(AuditStep::computed(
        "case-iii-singular",
        "every a-invariant quartic vanishes doubly at [1:0:0:0], so the "
        "surface would be singular there; case (iii) is excluded",
        sing));
  }

  // Case (iv): normalise the sign block of a. The pair (-1,-1) is the fifth
  // power of (1,1) projectively, and (-1,1) is (1,-1) after swapping x3 and
  // x4, leaving a1 = diag(z8, z8^-1, 1, 1) and a2 = diag(z8, z8^-1, 1, -1).
  const CycMatrix a1 =
      CycMatrix::diagonal({z8, z8.inv(), CycNumber(1), CycNumber(1)});
  const CycMatrix a2 =
      CycMatrix::diagonal({z8, z8.inv(), CycNumber(1), CycNumber(-1)});
  {
    const CycMatrix a_mm =
        CycMatrix::diagonal({z8, z8.inv(), CycNumber(-1), CycNumber(-1)});
    bool ok = ProjMatrix(a1).pow(5) == ProjMatrix(a_mm);
    try {
      make_q4m_rep("a-fifth twist", r21.a.pow(5), r21.b, 4);
    } catch (const ShapeError&) {
      ok = false;
    }
    steps.push_back(AuditStep::computed(
        "outer-twist-a-fifth",
        "diag(z8, z8^-1, -1, -1) is projectively the fifth power of "
        "diag(z8, z8^-1, 1, 1), and a -> a^5, b -> b is an automorphism, so "
        "the (-1,-1) sign block reduces to (1,1)",
        ok));
    const CycMatrix swap34 = CycMatrix::permutation({0, 1, 3, 2});
    const CycMatrix a_mp =
        CycMatrix::diagonal({z8, z8.inv(), CycNumber(-1), CycNumber(1)});
    steps.push_back(AuditStep::computed(
        "swap-x3-x4",
        "relabelling x3 and x4 turns the (-1,1) sign block into (1,-1), "
        "leaving the representatives a1 = diag(z8, z8^-1, 1, 1) and "
        "a2 = diag(z8, z8^-1, 1, -1)",
        swap34 * a_mp * swap34.inverse() == a2));
  }

  // a = a1: determinant 1 forces strict invariance; all the a1-invariant
  // monomials vanish doubly at [1:0:0:0], and the b-transport branches
  // reproduce that singular point (or [0:1:0:0]) in every case.
  {
    const std::vector<Poly4> inv = eigenforms(a1, 4, one);
    const std::vector<Poly4> expected = as_monomials({{0, 0, 0, 4},
                                                      {0, 0, 1, 3},
                                                      {0, 0, 2, 2},
                                                      {0, 0, 3, 1},
                                                      {0, 0, 4, 0},
                                                      {1, 1, 0, 2},
                                                      {1, 1, 1, 1},
                                                      {1, 1, 2, 0},
                                                      {2, 2, 0, 0}});
    steps.push_back(AuditStep::computed(
        "case-a1-invariants",
        "det a1 = 1, and the a1-invariant quartics are spanned by " +
            poly_list(expected),
        a1.det() == one && basis_is(inv, expected)));
    bool uniform = !inv.empty();
    for (const Poly4& f : inv) uniform = uniform && singular_at(f, p1);
    steps.push_back(AuditStep::computed(
        "case-a1-singular",
        "every a1-invariant quartic already vanishes doubly at [1:0:0:0]; "
        "the branch replay below shows where each sign case sees it",
        uniform));
    for (const SignPair& sp : kSignPairs) {
      const LinearRep rep = make_q4m_rep(
          "a1 case",
          direct_sum(r21.a,
                     CycMatrix::diagonal({CycNumber(1), CycNumber(1)})),
          direct_sum(r21.b, CycMatrix::diagonal({CycNumber(sp.t3),
                                                 CycNumber(sp.t4)})),
          4);
      const int detb = sp.t3 * sp.t4;
      const std::vector<Poly4> joint =
          semi_invariant_space(rep, 4, {1, detb});
      const std::vector<Poly4> expect =
          detb == 1 ? as_monomials({{0, 0, 0, 4},
                                    {0, 0, 1, 3},
                                    {0, 0, 2, 2},
                                    {0, 0, 3, 1},
                                    {0, 0, 4, 0},
                                    {2, 2, 0, 0}})
                    : as_monomials({{0, 0, 1, 3},
                                    {0, 0, 3, 1},
                                    {1, 1, 0, 2},
                                    {1, 1, 2, 0}});
      const PointP3& witness = detb == 1 ? p1 : p2;
      bool ok = basis_is(joint, expect);
      for (const Poly4& f : joint) ok = ok && singular_at(f, witness);
      steps.push_back(AuditStep::computed(
          std::string("case-a1-b-") + sp.label,
          std::string("b sign block ") + sp.word +
              ": the joint semi-invariant quartics are spanned by " +
              poly_list(expect) + ", all singular at " + witness.str() +
              "; a1 is excluded",
          ok));
    }
  }

  // a = a2: determinant -1 forces anti-invariance, the b-transport pins the
  // equation down to alpha x1^4 +- alpha x2^4 + gamma x3 x4^3 +
  // delta x3^3 x4, the singular-point checks force the coefficients nonzero,
  // and rescaling gives the canonical model.
  {
    steps.push_back(AuditStep::computed(
        "case-a2-determinant",
        "det a2 = -1, so the quartic equation is a2-anti-invariant",
        a2.det() == minus));
    const std::vector<Poly4> anti = eigenforms(a2, 4, minus);
    const std::vector<Poly4> family = as_monomials({{0, 0, 1, 3},
                                                    {0, 0, 3, 1},
                                                    {0, 4, 0, 0},
                                                    {1, 1, 1, 1},
                                                    {4, 0, 0, 0}});
    steps.push_back(AuditStep::computed(
        "case-a2-family",
        "the a2-anti-invariant quartics are spanned by " + poly_list(family) +
            ": the family alpha x1^4 + beta x2^4 + gamma x3 x4^3 + "
            "delta x3^3 x4 + eps x1 x2 x3 x4",
        basis_is(anti, family)));
    for (const SignPair& sp : kSignPairs) {
      const LinearRep rep = make_q4m_rep(
          "a2 case",
          direct_sum(r21.a,
                     CycMatrix::diagonal({CycNumber(1), CycNumber(-1)})),
          direct_sum(r21.b, CycMatrix::diagonal({CycNumber(sp.t3),
                                                 CycNumber(sp.t4)})),
          4);
      const int detb = sp.t3 * sp.t4;
      const std::vector<Poly4> joint =
          semi_invariant_space(rep, 4, {-1, detb});
      const std::vector<Poly4> expect = {
          Poly4::monomial({0, 0, 1, 3}), Poly4::monomial({0, 0, 3, 1}),
          Poly4::monomial({4, 0, 0, 0}) +
              CycNumber(detb) * Poly4::monomial({0, 4, 0, 0})};
      steps.push_back(AuditStep::computed(
          std::string("case-a2-b-") + sp.label,
          std::string("b sign block ") + sp.word +
              ": the joint space forces beta = det(b) alpha and eps = 0",
          basis_is(joint, expect)));
    }
    const std::pair<const char*, std::pair<std::vector<Poly4>, PointP3>>
        exclusions[] = {
            {"case-a2-alpha-nonzero",
             {{Poly4::monomial({0, 0, 1, 3}), Poly4::monomial({0, 0, 3, 1})},
              p1}},
            {"case-a2-gamma-nonzero",
             {{Poly4::monomial({4, 0, 0, 0}) + Poly4::monomial({0, 4, 0, 0}),
               Poly4::monomial({4, 0, 0, 0}) - Poly4::monomial({0, 4, 0, 0}),
               Poly4::monomial({0, 0, 3, 1})},
              p4}},
            {"case-a2-delta-nonzero",
             {{Poly4::monomial({4, 0, 0, 0}) + Poly4::monomial({0, 4, 0, 0}),
               Poly4::monomial({4, 0, 0, 0}) - Poly4::monomial({0, 4, 0, 0}),
               Poly4::monomial({0, 0, 1, 3})},
              p3}},
        };
    const char* reasons[] = {
        "alpha = 0 forces beta = 0 and leaves gamma x3 x4^3 + delta x3^3 x4, "
        "singular at [1:0:0:0]; hence alpha and beta are nonzero",
        "gamma = 0 leaves a family singular at [0:0:0:1]; hence gamma is "
        "nonzero",
        "delta = 0 leaves a family singular at [0:0:1:0]; hence delta is "
        "nonzero",
    };
    for (int k = 0; k < 3; ++k) {
      const auto& [label, data] = exclusions[k];
      bool ok = true;
      for (const Poly4& f : data.first)
        ok = ok && singular_at(f, data.second);
      steps.push_back(AuditStep::computed(label, reasons[k], ok));
    }

    // Rescaling instances, covering both determinant signs of b and
    // coefficients needing rational, real-radical and root-of-unity scalings
    // (including one whose residual sign needs the f -> -f repair).
    const std::array<CycNumber, 4> instances[] = {
        {one, one, one, one},
        {CycNumber(Rational(1, 16)), CycNumber(Rational(1, 16)),
         CycNumber(Rational(125, 3)), CycNumber(Rational(5, 27))},
        {CycNumber(Rational(-1, 16)), CycNumber(Rational(-1, 16)),
         CycNumber::zeta(8, 7) * CycNumber(Rational(1, 8)),
         CycNumber::zeta(8, 5) * CycNumber(Rational(1, 2))},
        {CycNumber(Rational(1, 16)), CycNumber(Rational(-1, 16)), one, one},
        {minus, one, z4 * CycNumber(4), z4 * CycNumber(Rational(1, 4))},
    };
    for (int k = 0; k < 5; ++k) {
      const auto& [al, be, ga, de] = instances[k];
      const Poly4 F = al * Poly4::monomial({4, 0, 0, 0}) +
                      be * Poly4::monomial({0, 4, 0, 0}) +
                      ga * Poly4::monomial({0, 0, 1, 3}) +
                      de * Poly4::monomial({0, 0, 3, 1});
      const std::array<CycNumber, 4> s = quartic_rescaling(al, be, ga, de);
      const CycMatrix scale = CycMatrix::diagonal({s[0], s[1], s[2], s[3]});
      std::ostringstream label, what;
      label << "case-a2-rescale-" << k + 1;
      what << "(alpha, beta, gamma, delta) = (" << al.str() << ", "
           << be.str() << ", " << ga.str() << ", " << de.str()
           << "): the substitution diag(" << s[0].str() << ", " << s[1].str()
           << ", " << s[2].str() << ", " << s[3].str()
           << ") takes the quartic exactly to the canonical form";
      steps.push_back(AuditStep::computed(
          label.str(), what.str(),
          apply_matrix(scale, F) == canonical_quartic_form()));
    }
  }

  // Smoothness of the canonical model.
  const Poly4 canon = canonical_quartic_form();
  steps.push_back(AuditStep::computed(
      "smooth-x1-x2",
      "the x1 and x2 partials are 4 x1^3 and 4 x2^3, so a singular point "
      "must have x1 = x2 = 0",
      canon.derivative(0) == Poly4::monomial({3, 0, 0, 0}, CycNumber(4)) &&
          canon.derivative(1) == Poly4::monomial({0, 3, 0, 0}, CycNumber(4))));
  const CycNumber res = binary_resultant(canon.derivative(2),
                                         canon.derivative(3));
  steps.push_back(AuditStep::computed(
      "smooth-x3-x4",
      "the x3 and x4 partials have binary resultant " + res.str() +
          " != 0, so they share no projective root; the canonical quartic "
          "is smooth",
      res == CycNumber(-64)));

  steps.push_back(AuditStep::computed(
      "conclusion",
      "the only smooth quartic with a faithful symplectic action of the "
      "binary dihedral group of order 16 is x1^4 + x2^4 + x3^3 x4 + "
      "x3 x4^3 = 0, up to projective coordinate change",
      all_steps_pass(steps)));
  return QuarticCaseResult{canon, std::move(steps)};
}

CaseAuditReport fermat_q16_check() {
  std::vector<AuditStep> steps;
  const Poly4 F = fermat_quartic_form();
  const ProjMatrix p(fermat_p()), q(fermat_q());
  const MatrixGroup g = MatrixGroup::generated_by({p, q});

  steps.push_back(AuditStep::computed(
      "group-order", "the group generated by P and Q has exactly 16 elements",
      g.order() == 16));
  steps.push_back(AuditStep::computed(
      "presentation",
      "P has projective order 8 and P^4 = Q^2, Q^-1 P Q = P^-1 hold in "
      "PGL(4), so the group is binary dihedral of order 16",
      p.order() == 8 && p.pow(8).is_identity() && p.pow(4) == q.pow(2) &&
          q.inverse() * p * q == p.inverse()));
  const std::map<long, std::size_t> expected_orders{
      {1, 1}, {2, 1}, {4, 10}, {8, 4}};
  steps.push_back(AuditStep::computed(
      "order-structure",
      "the element orders are 1:1, 2:1, 4:10, 8:4, the order profile of the "
      "binary dihedral group of order 16",
      g.order_structure() == expected_orders));
  bool symplectic = true, preserves = true;
  for (const ProjMatrix& e : g.elements()) {
    symplectic = symplectic && alpha_multiplier(e) == CycNumber(1) &&
                 form_multiplier(e, F) == alpha_multiplier(e);
    preserves = preserves && apply_matrix(e.rep(), F) == F;
  }
  steps.push_back(AuditStep::computed(
      "alpha-multipliers",
      "every element has monomial multiplier 1 and matching form multiplier, "
      "so the whole group acts symplectically",
      symplectic));
  steps.push_back(AuditStep::computed(
      "form-preserved",
      "every element substituted into the Fermat form returns it with scalar "
      "exactly 1",
      preserves));
  steps.push_back(AuditStep::computed(
      "conclusion",
      "the Fermat quartic carries a symplectic binary dihedral group of "
      "order 16 generated by P and Q",
      all_steps_pass(steps)));
  return CaseAuditReport{std::move(steps)};
}

}  // namespace fermatk3
