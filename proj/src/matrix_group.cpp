#include "fermatk3/matrix_group.hpp"

#include <deque>
#include <sstream>
#include <unordered_set>

#include "fermatk3/error.hpp"

namespace fermatk3 {

CycMatrix::CycMatrix(CycTable rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.size() != rows_.size()) throw ShapeError("matrix must be square");
}

CycMatrix CycMatrix::identity(int n) { return CycMatrix(cyc_identity(n)); }

CycMatrix CycMatrix::diagonal(const CycRow& d) {
  const int n = static_cast<int>(d.size());
  CycTable t(n, CycRow(n, CycNumber(0)));
  for (int i = 0; i < n; ++i) t[i][i] = d[i];
  return CycMatrix(std::move(t));
}

CycMatrix CycMatrix::permutation(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  CycTable t(n, CycRow(n, CycNumber(0)));
  for (int j = 0; j < n; ++j) t[p[j]][j] = CycNumber(1);
  return CycMatrix(std::move(t));
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  const int n = dim();
  if (n != o.dim()) throw ShapeError("matrix dimension mismatch");
  CycTable t(n, CycRow(n, CycNumber(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (rows_[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (o.rows_[k][j].is_zero()) continue;
        t[i][j] += rows_[i][k] * o.rows_[k][j];
      }
    }
  return CycMatrix(std::move(t));
}

CycMatrix CycMatrix::operator*(const CycNumber& c) const {
  CycMatrix r = *this;
  for (auto& row : r.rows_)
    for (auto& x : row) x = x * c;
  return r;
}

CycMatrix CycMatrix::inverse() const { return CycMatrix(cyc_inverse(rows_)); }

CycMatrix CycMatrix::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycMatrix r = identity(dim()), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

CycNumber CycMatrix::det() const { return determinant(rows_); }

bool CycMatrix::operator==(const CycMatrix& o) const {
  if (dim() != o.dim()) return false;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (rows_[i][j] != o.rows_[i][j]) return false;
  return true;
}

bool CycMatrix::is_scalar() const {
  if (dim() == 0 || rows_[0][0].is_zero()) return false;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      if (i == j ? rows_[i][j] != rows_[0][0] : !rows_[i][j].is_zero())
        return false;
    }
  return true;
}

std::string CycMatrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < dim(); ++i) {
    out << (i ? "; " : "[");
    for (int j = 0; j < dim(); ++j) {
      if (j) out << ", ";
      out << rows_[i][j].str();
    }
  }
  out << "]";
  return out.str();
}

ProjMatrix::ProjMatrix(const CycMatrix& m) : rep_(m) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (!m.at(i, j).is_zero()) {
        rep_ = m * m.at(i, j).inv();
        return;
      }
  throw ShapeError("zero matrix has no image in PGL");
}

ProjMatrix ProjMatrix::operator*(const ProjMatrix& o) const {
  return ProjMatrix(rep_ * o.rep_);
}

ProjMatrix ProjMatrix::inverse() const { return ProjMatrix(rep_.inverse()); }

ProjMatrix ProjMatrix::pow(long e) const { return ProjMatrix(rep_.pow(e)); }

bool ProjMatrix::is_identity() const {
  return rep_ == CycMatrix::identity(rep_.dim());
}

long ProjMatrix::order(long bound) const {
  CycMatrix m = rep_;
  for (long k = 1; k <= bound; ++k) {
    if (m.is_scalar()) return k;
    m = m * rep_;
  }
  throw SearchExhausted("element order exceeds bound");
}

std::string ProjMatrix::key_at(long L) const {
  std::ostringstream out;
  out << rep_.dim() << "|";
  for (int i = 0; i < rep_.dim(); ++i)
    for (int j = 0; j < rep_.dim(); ++j)
      out << rep_.at(i, j).promoted(L).key() << ";";
  return out.str();
}

long ProjMatrix::conductor_lcm() const {
  long L = 1;
  for (int i = 0; i < rep_.dim(); ++i)
    for (int j = 0; j < rep_.dim(); ++j)
      L = lcm_long(L, rep_.at(i, j).conductor());
  return L;
}

MatrixGroup MatrixGroup::generated_by(std::vector<ProjMatrix> gens,
                                      std::size_t limit) {
  if (gens.empty()) throw ShapeError("a matrix group needs generators");
  MatrixGroup g;
  g.gens_ = std::move(gens);
  for (const auto& x : g.gens_) g.L_ = lcm_long(g.L_, x.conductor_lcm());

  std::unordered_set<std::string> seen;
  g.elems_.push_back(ProjMatrix(CycMatrix::identity(g.gens_[0].dim())));
  seen.insert(g.elems_[0].key_at(g.L_));
  for (std::size_t head = 0; head < g.elems_.size(); ++head) {
    for (const auto& x : g.gens_) {
      ProjMatrix next = g.elems_[head] * x;
      if (!seen.insert(next.key_at(g.L_)).second) continue;
      if (g.elems_.size() >= limit) throw ClosureOverflow(g.elems_.size());
      g.elems_.push_back(std::move(next));
    }
  }
  return g;
}

MatrixGroup MatrixGroup::from_closed_elements(std::vector<ProjMatrix> elems) {
  if (elems.empty()) throw ShapeError("a matrix group needs elements");
  MatrixGroup g;
  for (const auto& e : elems) g.L_ = lcm_long(g.L_, e.conductor_lcm());
  std::unordered_set<std::string> universe;
  for (const auto& e : elems) universe.insert(e.key_at(g.L_));

  const ProjMatrix id(CycMatrix::identity(elems[0].dim()));
  if (!universe.count(id.key_at(g.L_)))
    throw ShapeError("closed element set must contain the identity");

  // Greedy generating set: pick up each element not yet reached and re-close.
  // Every product along the way must land back in the given set, so the
  // subgroup property is verified in full while the breadth-first walks stay
  // proportional to the (small) generator count.
  std::unordered_set<std::string> seen;
  auto close = [&]() {
    seen.clear();
    g.elems_.clear();
    g.elems_.push_back(id);
    seen.insert(id.key_at(g.L_));
    for (std::size_t head = 0; head < g.elems_.size(); ++head) {
      for (const auto& x : g.gens_) {
        ProjMatrix next = g.elems_[head] * x;
        if (g.L_ % next.conductor_lcm() != 0)
          throw ShapeError("element set is not closed under products");
        std::string k = next.key_at(g.L_);
        if (!universe.count(k))
          throw ShapeError("element set is not closed under products");
        if (seen.insert(std::move(k)).second)
          g.elems_.push_back(std::move(next));
      }
    }
  };
  close();
  for (const auto& e : elems) {
    if (seen.count(e.key_at(g.L_))) continue;
    g.gens_.push_back(e);
    close();
  }
  if (g.gens_.empty()) g.gens_.push_back(id);
  return g;
}

bool MatrixGroup::contains(const ProjMatrix& g) const {
  const long L = lcm_long(L_, g.conductor_lcm());
  const std::string k = g.key_at(L);
  for (const auto& e : elems_)
    if (e.key_at(L) == k) return true;
  return false;
}

bool MatrixGroup::contains(const MatrixGroup& other) const {
  if (other.order() > order()) return false;
  const long L = lcm_long(L_, other.L_);
  std::unordered_set<std::string> keys;
  for (const auto& e : elems_) keys.insert(e.key_at(L));
  for (const auto& e : other.elems_)
    if (!keys.count(e.key_at(L))) return false;
  return true;
}

bool MatrixGroup::same_group(const MatrixGroup& other) const {
  return order() == other.order() && contains(other);
}

bool MatrixGroup::is_normal_in(const MatrixGroup& ambient) const {
  for (const auto& a : ambient.gens_) {
    ProjMatrix ai = a.inverse();
    for (const auto& h : gens_)
      if (!contains(ai * h * a)) return false;
  }
  return true;
}

std::map<long, std::size_t> MatrixGroup::order_structure() const {
  std::map<long, std::size_t> r;
  for (const auto& e : elems_) ++r[e.order()];
  return r;
}

MatrixGroup MatrixGroup::commutator_subgroup(std::size_t limit) const {
  // normal closure of the commutators of the generators
  std::vector<ProjMatrix> basis;
  std::vector<std::string> keys;
  const long L = L_;
  auto push_new = [&](const ProjMatrix& m) {
    std::string k = m.key_at(L);
    for (const auto& x : keys)
      if (x == k) return false;
    keys.push_back(std::move(k));
    basis.push_back(m);
    return true;
  };
  push_new(ProjMatrix(CycMatrix::identity(gens_[0].dim())));
  for (const auto& a : gens_)
    for (const auto& b : gens_)
      push_new(a.inverse() * b.inverse() * a * b);
  for (std::size_t head = 0; head < basis.size(); ++head)
    for (const auto& g : gens_) push_new(g.inverse() * basis[head] * g);
  return generated_by(std::move(basis), limit);
}

CycNumber alpha_multiplier(const ProjMatrix& g) {
  const CycMatrix& m = g.rep();
  const int n = m.dim();
  std::vector<int> row_of_col(n, -1);
  CycNumber prod(Rational(1));
  for (int i = 0; i < n; ++i) {
    int hits = 0;
    for (int j = 0; j < n; ++j) {
      if (m.at(i, j).is_zero()) continue;
      ++hits;
      if (row_of_col[j] != -1)
        throw ShapeError("alpha_multiplier: matrix is not monomial");
      row_of_col[j] = i;
      prod = prod * m.at(i, j);
    }
    if (hits != 1)
      throw ShapeError("alpha_multiplier: matrix is not monomial");
  }
  // parity of the permutation j -> row_of_col[j]
  std::vector<bool> seen(n, false);
  int parity = 0;
  for (int j = 0; j < n; ++j) {
    if (seen[j]) continue;
    int len = 0;
    for (int k = j; !seen[k]; k = row_of_col[k]) {
      seen[k] = true;
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity ? -prod : prod;
}

MatrixGroup symplectic_part(const MatrixGroup& g) {
  return g.filtered_subgroup(
      [](const ProjMatrix& e) { return alpha_multiplier(e) == CycNumber(1); });
}

std::optional<CycNumber> polynomial_multiplier(const CycMatrix& m,
                                               const Poly4& f) {
  return f.scalar_ratio_to(f.substituted(m.rows()));
}

CycNumber form_multiplier(const ProjMatrix& g, const Poly4& f) {
  auto lambda = polynomial_multiplier(g.rep(), f);
  if (!lambda)
    throw Error("matrix does not map the form to a scalar multiple");
  return g.rep().det() / *lambda;
}

}  // namespace fermatk3
