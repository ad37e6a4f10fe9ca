#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fermatk3/cyc_linalg.hpp"
#include "fermatk3/cyclotomic.hpp"
#include "fermatk3/poly4.hpp"

namespace fermatk3 {

// Square matrix over a cyclotomic field.
class CycMatrix {
 public:
  CycMatrix() = default;
  explicit CycMatrix(CycTable rows);
  static CycMatrix identity(int n);
  static CycMatrix diagonal(const CycRow& d);
  // Permutation matrix sending x_{p[j]+1} <- x_{j+1}: entry (p[j], j) = 1.
  static CycMatrix permutation(const std::vector<int>& p);

  int dim() const { return static_cast<int>(rows_.size()); }
  const CycTable& rows() const { return rows_; }
  const CycNumber& at(int i, int j) const { return rows_[i][j]; }
  CycNumber& at(int i, int j) { return rows_[i][j]; }

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator*(const CycNumber& c) const;
  CycMatrix inverse() const;
  CycMatrix pow(long e) const;
  CycNumber det() const;
  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }

  bool is_scalar() const;  // nonzero multiple of the identity
  std::string str() const;

 private:
  CycTable rows_;
};

inline CycMatrix operator*(const CycNumber& c, const CycMatrix& m) {
  return m * c;
}

// An element of PGL_n: a matrix up to scalars, stored as the canonical
// representative whose first nonzero entry in row-major order equals 1.
class ProjMatrix {
 public:
  ProjMatrix() = default;
  explicit ProjMatrix(const CycMatrix& m);

  const CycMatrix& rep() const { return rep_; }
  int dim() const { return rep_.dim(); }

  ProjMatrix operator*(const ProjMatrix& o) const;
  ProjMatrix inverse() const;
  ProjMatrix pow(long e) const;
  bool operator==(const ProjMatrix& o) const { return rep_ == o.rep_; }
  bool operator!=(const ProjMatrix& o) const { return !(*this == o); }
  bool is_identity() const;

  // Smallest k >= 1 with rep^k scalar.
  long order(long bound = 1 << 20) const;

  // Serialisation of the canonical representative with all entries promoted
  // to conductor L; two projectively equal elements whose entries live in
  // Q(zeta_L) always produce the same key.
  std::string key_at(long L) const;
  // lcm of the conductors appearing in the canonical representative.
  long conductor_lcm() const;

  std::string str() const { return rep_.str(); }

 private:
  CycMatrix rep_;
};

// Closure of a finite set of PGL_n generators, with deterministic element
// order (breadth first over products by generators).
class MatrixGroup {
 public:
  MatrixGroup() = default;
  // Throws ClosureOverflow when the closure exceeds `limit` elements.
  static MatrixGroup generated_by(std::vector<ProjMatrix> gens,
                                  std::size_t limit = 200000);
  // Builds the group whose element set is exactly `elems`, which must already
  // be closed (e.g. the kernel of a multiplicative map on a known group).
  // Finds a small generating set greedily and re-derives every element from
  // it, so a set that is not actually a subgroup is rejected with ShapeError.
  static MatrixGroup from_closed_elements(std::vector<ProjMatrix> elems);

  std::size_t order() const { return elems_.size(); }
  const std::vector<ProjMatrix>& elements() const { return elems_; }
  const std::vector<ProjMatrix>& generators() const { return gens_; }
  long key_conductor() const { return L_; }

  bool contains(const ProjMatrix& g) const;
  bool contains(const MatrixGroup& other) const;
  bool same_group(const MatrixGroup& other) const;
  bool is_normal_in(const MatrixGroup& ambient) const;

  // Multiset of element orders: order -> multiplicity.
  std::map<long, std::size_t> order_structure() const;

  MatrixGroup commutator_subgroup(std::size_t limit = 200000) const;

  // Subgroup of the elements satisfying the predicate (which must define
  // one); deterministic generator order.
  template <class Pred>
  MatrixGroup filtered_subgroup(Pred keep) const {
    std::vector<ProjMatrix> sub;
    for (const auto& g : elems_)
      if (keep(g)) sub.push_back(g);
    return from_closed_elements(std::move(sub));
  }

 private:
  std::vector<ProjMatrix> gens_;
  std::vector<ProjMatrix> elems_;
  long L_ = 1;
};

// sgn(sigma) times the product of the nonzero entries of a monomial matrix
// (one nonzero entry per row and column, sigma the underlying permutation).
// Computed on the canonical representative; for matrices whose entries are
// fourth roots of unity the value is independent of the chosen lift.
CycNumber alpha_multiplier(const ProjMatrix& g);

// Kernel of alpha_multiplier.
MatrixGroup symplectic_part(const MatrixGroup& g);

// Scalar lambda with f(m x) = lambda * f(x), if the matrix maps the
// polynomial to a scalar multiple of itself.
std::optional<CycNumber> polynomial_multiplier(const CycMatrix& m,
                                               const Poly4& f);

// det(M) / lambda(M) for any lift M of g, where f(M x) = lambda(M) f(x);
// the ratio does not depend on the lift. For an automorphism of the quartic
// surface {f = 0} this is the multiplier on the holomorphic 2-form.
CycNumber form_multiplier(const ProjMatrix& g, const Poly4& f);

}  // namespace fermatk3
