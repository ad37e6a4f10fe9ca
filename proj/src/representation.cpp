#include "fermatk3/representation.hpp"

#include <map>
#include <utility>

#include "fermatk3/cyc_linalg.hpp"
#include "fermatk3/error.hpp"

namespace fermatk3 {

namespace {

CycNumber trace(const CycMatrix& m) {
  CycNumber t(0);
  for (int i = 0; i < m.dim(); ++i) t += m.at(i, i);
  return t;
}

// Matrix of F -> F(g x) on the monomial basis of the given degree: column j
// holds the coefficients of the image of the j-th monomial.
CycTable action_on_degree(const CycMatrix& g, int degree) {
  const std::vector<Monomial> basis = monomials_of_degree(degree);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  CycTable t(basis.size(), CycRow(basis.size(), CycNumber(0)));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Poly4 image = apply_matrix(g, Poly4::monomial(basis[j]));
    for (const auto& [m, c] : image.terms()) t[index.at(m)][j] += c;
  }
  return t;
}

std::vector<Poly4> kernel_as_polys(const CycTable& m, int degree) {
  const std::vector<Monomial> basis = monomials_of_degree(degree);
  std::vector<Poly4> out;
  for (const CycRow& v : kernel_basis(m, basis.size())) {
    Poly4 f;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!v[i].is_zero()) f += Poly4::monomial(basis[i], v[i]);
    out.push_back(f);
  }
  return out;
}

}  // namespace

LinearRep make_q4m_rep(std::string name, CycMatrix a, CycMatrix b, int m) {
  if (m < 1) throw ShapeError("presentation parameter must be positive");
  if (a.dim() != b.dim() || a.dim() == 0)
    throw ShapeError("generator images must be square of equal size");
  const CycMatrix id = CycMatrix::identity(a.dim());
  if (a.pow(2 * m) != id)
    throw ShapeError(name + ": a^(2m) = 1 fails");
  if (a.pow(m) != b * b)
    throw ShapeError(name + ": a^m = b^2 fails");
  if (b.inverse() * a * b != a.inverse())
    throw ShapeError(name + ": b^-1 a b = a^-1 fails");
  return LinearRep{std::move(name), std::move(a), std::move(b), m};
}

CycMatrix direct_sum(const CycMatrix& top, const CycMatrix& bottom) {
  const int n = top.dim(), k = bottom.dim();
  CycTable rows(n + k, CycRow(n + k, CycNumber(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = top.at(i, j);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) rows[n + i][n + j] = bottom.at(i, j);
  return CycMatrix(rows);
}

std::vector<LinearRep> q16_irreps() {
  const CycNumber one(1), minus(-1);
  const CycNumber z8 = CycNumber::zeta(8), z4 = CycNumber::zeta(4);
  auto scalar1 = [](const CycNumber& c) {
    return CycMatrix(CycTable{{c}});
  };
  auto antidiag = [](const CycNumber& lo, const CycNumber& hi) {
    return CycMatrix(CycTable{{CycNumber(0), hi}, {lo, CycNumber(0)}});
  };
  std::vector<LinearRep> reps;
  reps.push_back(make_q4m_rep("rho_{1,1}", scalar1(one), scalar1(one), 4));
  reps.push_back(make_q4m_rep("rho_{1,2}", scalar1(one), scalar1(minus), 4));
  reps.push_back(make_q4m_rep("rho_{1,3}", scalar1(minus), scalar1(one), 4));
  reps.push_back(make_q4m_rep("rho_{1,4}", scalar1(minus), scalar1(minus), 4));
  reps.push_back(make_q4m_rep(
      "rho_{2,1}", CycMatrix::diagonal({z8, z8.inv()}), antidiag(z4, z4), 4));
  reps.push_back(make_q4m_rep("rho_{2,2}",
                              CycMatrix::diagonal({z8.pow(3), z8.pow(3).inv()}),
                              antidiag(z4, z4), 4));
  reps.push_back(make_q4m_rep("rho_{2,3}",
                              CycMatrix::diagonal({z4, z4.inv()}),
                              antidiag(one, one), 4));

  // Characters must be pairwise distinct and each of norm-sum 16 (so each
  // representation is irreducible), and the squared dimensions must add up
  // to the group order.
  std::vector<std::vector<CycNumber>> chars;
  long dim_square_sum = 0;
  for (const LinearRep& r : reps) {
    chars.push_back(rep_character(r));
    dim_square_sum += static_cast<long>(r.dim()) * r.dim();
  }
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (character_inner_sum(chars[i], chars[i]) != CycNumber(16))
      throw ShapeError(reps[i].name + " is not irreducible");
    for (std::size_t j = 0; j < i; ++j)
      if (chars[i] == chars[j])
        throw ShapeError(reps[i].name + " repeats a character");
  }
  if (dim_square_sum != 16)
    throw ShapeError("squared dimensions do not sum to the group order");
  return reps;
}

std::vector<CycMatrix> rep_elements(const LinearRep& r) {
  std::vector<CycMatrix> out;
  CycMatrix p = CycMatrix::identity(r.dim());
  for (int n = 0; n < 2 * r.m; ++n) {
    out.push_back(p);
    p = p * r.a;
  }
  p = CycMatrix::identity(r.dim());
  for (int n = 0; n < 2 * r.m; ++n) {
    out.push_back(p * r.b);
    p = p * r.a;
  }
  return out;
}

std::vector<CycNumber> rep_character(const LinearRep& r) {
  std::vector<CycNumber> out;
  for (const CycMatrix& g : rep_elements(r)) out.push_back(trace(g));
  return out;
}

CycNumber character_inner_sum(const std::vector<CycNumber>& x,
                              const std::vector<CycNumber>& y) {
  if (x.size() != y.size())
    throw ShapeError("characters over different element lists");
  CycNumber s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i].conj();
  return s;
}

LinearRep lift_projective_rep(const CycMatrix& A, const CycMatrix& B, int m) {
  if (A.dim() != B.dim())
    throw ShapeError("generator images must have equal size");
  // b^-1 a b = a^-1 up to a scalar: B^-1 A B A = beta I.
  const CycMatrix conj_residual = B.inverse() * A * B * A;
  if (!conj_residual.is_scalar())
    throw ShapeError("conjugation relation fails even projectively");
  const CycNumber beta = conj_residual.at(0, 0);
  if (!beta.root_of_unity_order())
    throw UnsupportedRadicand("conjugation scalar is not a root of unity");
  // Dividing a by sqrt(beta) makes the conjugation relation exact.
  const CycMatrix a = A * beta.sqrt_of_root_of_unity().inv();
  // a^m = alpha b^2; multiplying b by sqrt(alpha) makes it exact.
  const CycMatrix power_residual = a.pow(m) * (B * B).inverse();
  if (!power_residual.is_scalar())
    throw ShapeError("power relation fails even projectively");
  const CycNumber alpha = power_residual.at(0, 0);
  if (!alpha.root_of_unity_order())
    throw UnsupportedRadicand("power scalar is not a root of unity");
  const CycMatrix b = B * alpha.sqrt_of_root_of_unity();
  return make_q4m_rep("lifted", a, b, m);
}

bool check_d8_obstruction() {
  const CycNumber z8 = CycNumber::zeta(8), z4 = CycNumber::zeta(4);
  const CycMatrix A = CycMatrix::diagonal({z8, z8.inv()});
  const CycMatrix B(CycTable{{CycNumber(0), z4}, {z4, CycNumber(0)}});
  const CycMatrix id = CycMatrix::identity(2);

  // The dihedral relations a^4 = b^2 = 1, b^-1 a b = a^-1 hold projectively.
  const ProjMatrix pa(A), pb(B);
  if (!pa.pow(4).is_identity() || !pb.pow(2).is_identity()) return false;
  if (pb.inverse() * pa * pb != pa.inverse()) return false;

  // B^-1 A B A = I exactly, so rescaling a by lambda turns the conjugation
  // relation into lambda^2 = 1: the only candidate lifts are +-A.
  if (B.inverse() * A * B * A != id) return false;

  // Both candidates fail a^4 = 1, because A^4 = -I.
  if (A.pow(4) != id * CycNumber(-1)) return false;
  for (long s : {1L, -1L})
    if ((A * CycNumber(s)).pow(4) == id) return false;
  return true;
}

Poly4 apply_matrix(const CycMatrix& g, const Poly4& F) {
  if (g.dim() != 4) throw ShapeError("substitution matrix must be 4x4");
  if (g.det().is_zero()) throw ShapeError("substitution matrix is singular");
  if (!F.is_zero() && !F.is_homogeneous(F.total_degree()))
    throw ShapeError("polynomial is not homogeneous");
  return F.substituted(g.rows());
}

std::vector<Poly4> eigenforms(const CycMatrix& g, int degree,
                              const CycNumber& lambda) {
  CycTable t = action_on_degree(g, degree);
  for (std::size_t i = 0; i < t.size(); ++i) t[i][i] -= lambda;
  return kernel_as_polys(t, degree);
}

std::vector<Poly4> semi_invariant_space(const LinearRep& rep, int degree,
                                        const LinearCharacter& chi) {
  if (rep.dim() != 4)
    throw ShapeError("semi-invariants need a 4-dimensional representation");
  CycTable ta = action_on_degree(rep.a, degree);
  CycTable tb = action_on_degree(rep.b, degree);
  const std::size_t n = ta.size();
  for (std::size_t i = 0; i < n; ++i) {
    ta[i][i] -= CycNumber(chi.chi_a);
    tb[i][i] -= CycNumber(chi.chi_b);
  }
  CycTable stacked = std::move(ta);
  stacked.insert(stacked.end(), tb.begin(), tb.end());
  return kernel_as_polys(stacked, degree);
}

}  // namespace fermatk3
