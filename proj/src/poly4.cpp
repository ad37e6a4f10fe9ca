#include "fermatk3/poly4.hpp"

#include <algorithm>
#include <sstream>

#include "fermatk3/error.hpp"

namespace fermatk3 {

Poly4::Poly4(const CycNumber& c) {
  if (!c.is_zero()) t_.emplace(Monomial{0, 0, 0, 0}, c);
}

Poly4 Poly4::monomial(Monomial m, const CycNumber& c) {
  Poly4 p;
  if (!c.is_zero()) p.t_.emplace(m, c);
  return p;
}

Poly4 Poly4::variable(int i) {
  if (i < 0 || i > 3) throw ShapeError("variable index out of range");
  Monomial m{0, 0, 0, 0};
  m[i] = 1;
  return monomial(m);
}

CycNumber Poly4::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? CycNumber(0) : it->second;
}

void Poly4::add_term(const Monomial& m, const CycNumber& c) {
  auto it = t_.find(m);
  if (it == t_.end()) {
    if (!c.is_zero()) t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Poly4 Poly4::operator+(const Poly4& o) const {
  Poly4 r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

Poly4 Poly4::operator-() const {
  Poly4 r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Poly4 Poly4::operator-(const Poly4& o) const { return *this + (-o); }

Poly4 Poly4::operator*(const Poly4& o) const {
  Poly4 r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) {
      Monomial m{m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3]};
      r.add_term(m, c1 * c2);
    }
  return r;
}

Poly4 Poly4::operator*(const CycNumber& c) const {
  if (c.is_zero()) return {};
  Poly4 r;
  for (const auto& [m, x] : t_) r.t_.emplace(m, x * c);
  return r;
}

Poly4 Poly4::substituted(const CycTable& m) const {
  if (m.size() != 4 || m[0].size() != 4)
    throw ShapeError("substitution needs a 4x4 matrix");
  std::array<Poly4, 4> img;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!m[i][j].is_zero())
        img[i] += Poly4::variable(j) * m[i][j];
  Poly4 r;
  for (const auto& [mon, c] : t_) {
    Poly4 term{c};
    for (int i = 0; i < 4; ++i)
      for (int e = 0; e < mon[i]; ++e) term = term * img[i];
    r += term;
  }
  return r;
}

Poly4 Poly4::derivative(int var) const {
  Poly4 r;
  for (const auto& [m, c] : t_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    r.add_term(d, c * CycNumber(m[var]));
  }
  return r;
}

CycNumber Poly4::evaluated(const std::array<CycNumber, 4>& p) const {
  CycNumber r(0);
  for (const auto& [m, c] : t_) {
    CycNumber v = c;
    for (int i = 0; i < 4; ++i)
      if (m[i] > 0) v = v * p[i].pow(m[i]);
    r += v;
  }
  return r;
}

std::optional<CycNumber> Poly4::scalar_ratio_to(const Poly4& o) const {
  if (t_.empty() || o.t_.empty()) return std::nullopt;
  if (t_.size() != o.t_.size()) return std::nullopt;
  CycNumber ratio = o.t_.begin()->second / t_.begin()->second;
  auto it = t_.begin();
  auto jt = o.t_.begin();
  for (; it != t_.end(); ++it, ++jt) {
    if (it->first != jt->first) return std::nullopt;
    if (it->second * ratio != jt->second) return std::nullopt;
  }
  return ratio;
}

int Poly4::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : t_)
    d = std::max(d, m[0] + m[1] + m[2] + m[3]);
  return d;
}

bool Poly4::is_homogeneous(int d) const {
  for (const auto& [m, c] : t_)
    if (m[0] + m[1] + m[2] + m[3] != d) return false;
  return true;
}

std::string Poly4::str() const {
  if (t_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) out << " + ";
    first = false;
    bool trivial = m == Monomial{0, 0, 0, 0};
    std::string cs = c.str();
    if (cs != "1" || trivial) {
      if (cs.find(' ') != std::string::npos)
        out << "(" << cs << ")";
      else
        out << cs;
      if (!trivial) out << "*";
    }
    for (int i = 0; i < 4; ++i) {
      if (m[i] == 0) continue;
      out << "x" << (i + 1);
      if (m[i] > 1) out << "^" << m[i];
    }
  }
  return out.str();
}

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> r;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b)
      for (int c = d - a - b; c >= 0; --c)
        r.push_back(Monomial{a, b, c, d - a - b - c});
  std::sort(r.begin(), r.end());
  return r;
}

CycNumber resultant(const std::vector<CycNumber>& p,
                    const std::vector<CycNumber>& q) {
  auto deg = [](const std::vector<CycNumber>& a) {
    long d = static_cast<long>(a.size()) - 1;
    while (d >= 0 && a[d].is_zero()) --d;
    return d;
  };
  const long dp = deg(p), dq = deg(q);
  if (dp < 0 || dq < 0) throw ShapeError("resultant of the zero polynomial");
  if (dp == 0) return p[0].pow(dq);
  if (dq == 0) return q[0].pow(dp);
  const long n = dp + dq;
  CycTable s(n, CycRow(n, CycNumber(0)));
  for (long i = 0; i < dq; ++i)
    for (long j = 0; j <= dp; ++j) s[i][i + j] = p[dp - j];
  for (long i = 0; i < dp; ++i)
    for (long j = 0; j <= dq; ++j) s[dq + i][i + j] = q[dq - j];
  return determinant(s);
}

std::vector<CycNumber> univariate_coeffs(const Poly4& p, int var) {
  std::vector<CycNumber> c(1, CycNumber(0));
  for (const auto& [m, x] : p.terms()) {
    for (int i = 0; i < 4; ++i)
      if (i != var && m[i] != 0)
        throw ShapeError("polynomial is not univariate in the chosen variable");
    if (static_cast<std::size_t>(m[var]) >= c.size())
      c.resize(m[var] + 1, CycNumber(0));
    c[m[var]] += x;
  }
  return c;
}

}  // namespace fermatk3
