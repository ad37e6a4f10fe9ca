#include "fermatk3/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "fermatk3/error.hpp"

namespace fermatk3 {

std::optional<Integer> exact_nth_root(const Integer& x, unsigned n) {
  if (n == 0) return std::nullopt;
  if (x < 0) {
    if (n % 2 == 0) return std::nullopt;
    auto r = exact_nth_root(Integer(-x), n);
    if (r) return Integer(-*r);
    return std::nullopt;
  }
  if (x == 0 || x == 1 || n == 1) return x;
  Integer lo = 0, hi = x;
  while (lo <= hi) {
    Integer mid = (lo + hi) / 2;
    Integer p = boost::multiprecision::pow(mid, n);
    if (p == x) return mid;
    if (p < x)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return std::nullopt;
}

std::optional<Rational> exact_nth_root(const Rational& x, unsigned n) {
  auto rn = exact_nth_root(num(x), n);
  if (!rn) return std::nullopt;
  auto rd = exact_nth_root(den(x), n);
  if (!rd) return std::nullopt;
  return Rational(*rn, *rd);
}

long euler_phi(long n) {
  long m = n, r = n;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      r -= r / p;
      while (m % p == 0) m /= p;
    }
  if (m > 1) r -= r / m;
  return r;
}

namespace {

// Exact division of integer polynomials (ascending coefficients, monic
// divisor); used only to build cyclotomic polynomials from x^n - 1.
std::vector<Integer> int_poly_div(std::vector<Integer> a,
                                  const std::vector<Integer>& b) {
  const long db = static_cast<long>(b.size()) - 1;
  const long da = static_cast<long>(a.size()) - 1;
  std::vector<Integer> q(da - db + 1);
  for (long i = da - db; i >= 0; --i) {
    Integer c = a[i + db];
    q[i] = c;
    if (c != 0)
      for (long j = 0; j <= db; ++j) a[i + j] -= c * b[j];
  }
  return q;
}

// Function-local so the cache is valid even when a client's static
// initialiser is the first caller.
struct PhiCache {
  std::mutex mutex;
  std::map<long, std::vector<Integer>> table;
};

PhiCache& phi_cache() {
  static PhiCache c;
  return c;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
  if (n < 1) throw ShapeError("cyclotomic polynomial needs n >= 1");
  PhiCache& cache = phi_cache();
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto it = cache.table.find(n);
  if (it != cache.table.end()) return it->second;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.table.count(d)) continue;
    std::vector<Integer> p(d + 1);
    p[0] = -1;
    p[d] = 1;
    for (long e = 1; e < d; ++e)
      if (d % e == 0) p = int_poly_div(std::move(p), cache.table.at(e));
    cache.table.emplace(d, std::move(p));
  }
  return cache.table.at(n);
}

namespace {

// Reduce a rational polynomial (ascending) mod the monic n-th cyclotomic
// polynomial, leaving exactly phi(n) coefficients.
void reduce_mod_phi(std::vector<Rational>& a, long n) {
  const auto& phi = cyclotomic_polynomial(n);
  const long dp = static_cast<long>(phi.size()) - 1;
  while (static_cast<long>(a.size()) > dp) {
    Rational c = a.back();
    a.pop_back();
    if (c != 0) {
      const long off = static_cast<long>(a.size()) - dp;
      for (long j = 0; j < dp; ++j) a[off + j] -= c * Rational(phi[j]);
    }
  }
  a.resize(dp, Rational(0));
}

using RPoly = std::vector<Rational>;  // ascending, trimmed; empty means 0

void rp_trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rp_mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  rp_trim(r);
  return r;
}

RPoly rp_sub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  rp_trim(a);
  return a;
}

// division with remainder, b nonzero
std::pair<RPoly, RPoly> rp_divmod(RPoly a, const RPoly& b) {
  RPoly q;
  const long db = static_cast<long>(b.size()) - 1;
  rp_trim(a);
  if (static_cast<long>(a.size()) - 1 >= db)
    q.assign(a.size() - b.size() + 1, Rational(0));
  while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
    Rational c = a.back() / b.back();
    long off = static_cast<long>(a.size()) - 1 - db;
    q[off] = c;
    for (long j = 0; j <= db; ++j) a[off + j] -= c * b[j];
    rp_trim(a);
  }
  return {q, a};
}

}  // namespace

CycNumber CycNumber::from_coeffs(long n, std::vector<Rational> coeffs) {
  if (n < 1) throw ShapeError("conductor must be >= 1");
  reduce_mod_phi(coeffs, n);
  CycNumber r(n, std::move(coeffs));
  r.normalise();
  return r;
}

CycNumber CycNumber::zeta(long n, long k) {
  if (n < 1) throw ShapeError("zeta needs n >= 1");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> a(k + 1, Rational(0));
  a[k] = 1;
  return from_coeffs(n, std::move(a));
}

void CycNumber::normalise() {
  if (n_ == 1) return;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return;
  Rational q = c_[0];
  n_ = 1;
  c_.assign(1, q);
}

bool CycNumber::is_zero() const {
  return is_rational() && c_[0] == 0;
}

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

const Rational& CycNumber::rational_value() const {
  if (!is_rational()) throw ShapeError("value is not rational: " + str());
  return c_[0];
}

CycNumber CycNumber::promoted(long n) const {
  if (n == n_) return *this;
  if (n < 1 || n % n_ != 0)
    throw ShapeError("cannot promote conductor " + std::to_string(n_) +
                     " to " + std::to_string(n));
  const long step = n / n_;
  std::vector<Rational> a((c_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) a[i * step] = c_[i];
  reduce_mod_phi(a, n);
  return CycNumber(n, std::move(a));  // deliberately not renormalised
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
  if (n_ != o.n_) {
    long L = lcm_long(n_, o.n_);
    return promoted(L) + o.promoted(L);
  }
  CycNumber r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  r.normalise();
  return r;
}

CycNumber CycNumber::operator-(const CycNumber& o) const {
  return *this + (-o);
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
  if (n_ != o.n_) {
    long L = lcm_long(n_, o.n_);
    return promoted(L) * o.promoted(L);
  }
  if (n_ == 1) return CycNumber(Rational(c_[0] * o.c_[0]));
  std::vector<Rational> a(2 * c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0)
      for (std::size_t j = 0; j < o.c_.size(); ++j) a[i + j] += c_[i] * o.c_[j];
  return from_coeffs(n_, std::move(a));
}

CycNumber CycNumber::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (n_ == 1) return CycNumber(Rational(1 / c_[0]));
  // extended euclid against the (irreducible) cyclotomic polynomial
  RPoly r0;
  for (const Integer& x : cyclotomic_polynomial(n_)) r0.push_back(Rational(x));
  RPoly r1 = c_;
  rp_trim(r1);
  RPoly s0 = {}, s1 = {Rational(1)};  // coefficients of this^(-1) track r1
  while (true) {
    auto [q, rem] = rp_divmod(r0, r1);
    RPoly s2 = rp_sub(s0, rp_mul(q, s1));
    if (rem.empty()) break;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant gcd; s1 * this == r1 (mod phi)
  Rational g = r1[0];
  std::vector<Rational> a = s1;
  for (auto& x : a) x /= g;
  return from_coeffs(n_, std::move(a));
}

CycNumber CycNumber::operator/(const CycNumber& o) const {
  return *this * o.inv();
}

CycNumber CycNumber::conj() const {
  if (n_ == 1) return *this;
  std::vector<Rational> a(n_, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) a[(n_ - static_cast<long>(i)) % n_] += c_[i];
  return from_coeffs(n_, std::move(a));
}

CycNumber CycNumber::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycNumber r(1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool CycNumber::operator==(const CycNumber& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  long L = lcm_long(n_, o.n_);
  return promoted(L).c_ == o.promoted(L).c_;
}

std::optional<long> CycNumber::root_of_unity_order() const {
  if (is_zero()) return std::nullopt;
  const long bound = lcm_long(2, n_);
  const CycNumber one(1);
  CycNumber p = *this;
  for (long k = 1; k <= bound; ++k) {
    if (p == one) return k;
    p = p * *this;
  }
  return std::nullopt;
}

CycNumber CycNumber::sqrt_of_root_of_unity() const {
  auto m = root_of_unity_order();
  if (!m) throw UnsupportedRadicand("sqrt branch defined for roots of unity only, got " + str());
  for (long k = 0; k < *m; ++k)
    if (*this == zeta(*m, k)) return zeta(2 * *m, k);
  throw UnsupportedRadicand("could not locate root of unity index");  // unreachable
}

CycNumber cyc_sqrt_of_positive_rational(const Rational& q) {
  if (q <= 0) throw UnsupportedRadicand("sqrt of non-positive rational");
  Integer N = num(q) * den(q);  // sqrt(q) = sqrt(N) / den
  Integer s = 1, d = 1;
  for (Integer p = 2; p * p <= N; ++p) {
    while (N % (p * p) == 0) {
      s *= p;
      N /= p * p;
    }
    if (N % p == 0) {
      d *= p;
      N /= p;
    }
  }
  d *= N;  // leftover prime (or 1)
  CycNumber root(Rational(s, den(q)));
  // sqrt of the squarefree part, prime by prime, via Gauss sums
  for (Integer p = 2; p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    long lp = static_cast<long>(p);
    if (lp == 2) {
      root = root * (CycNumber::zeta(8, 1) + CycNumber::zeta(8, -1));
      continue;
    }
    CycNumber gauss(0);
    for (long k = 1; k < lp; ++k) {
      long ls = 0;  // legendre symbol via euler's criterion, small p
      long t = 1;
      for (long e = 0; e < (lp - 1) / 2; ++e) t = (t * k) % lp;
      ls = (t == 1) ? 1 : -1;
      gauss += CycNumber(ls) * CycNumber::zeta(lp, k);
    }
    if (lp % 4 == 1)
      root = root * gauss;
    else
      root = root * CycNumber::zeta(4, -1) * gauss;  // gauss sum is i*sqrt(p)
  }
  return root;
}

CycNumber CycNumber::fourth_root() const {
  if (is_zero()) return *this;
  // split off the rational radius: v = q * rho with rho a root of unity
  const long jmax = 2 * lcm_long(2, n_);
  CycNumber p = *this;
  for (long j = 1; j <= jmax; ++j) {
    if (p.is_rational() && p.rational_value() > 0) {
      auto qr = exact_nth_root(p.rational_value(), static_cast<unsigned>(j));
      if (!qr)
        throw UnsupportedRadicand("radius is not an exact rational: " + str());
      Rational q = *qr;
      CycNumber rho = *this / CycNumber(q);
      auto m = rho.root_of_unity_order();
      if (!m)
        throw UnsupportedRadicand("fourth root needs rational-times-root-of-unity form");
      auto sq = exact_nth_root(q, 2);
      if (!sq)
        throw UnsupportedRadicand("fourth root of " + to_string(q) +
                                  " does not lie in a cyclotomic field");
      CycNumber radial = cyc_sqrt_of_positive_rational(*sq);
      for (long k = 0; k < *m; ++k)
        if (rho == zeta(*m, k)) return radial * zeta(4 * *m, k);
      throw UnsupportedRadicand("could not locate root of unity index");
    }
    p = p * *this;
  }
  throw UnsupportedRadicand("fourth root unsupported for " + str());
}

std::string CycNumber::str() const {
  if (n_ == 1) return to_string(c_[0]);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    if (first) {
      if (v < 0) {
        out << "-";
        v = -v;
      }
      first = false;
    } else {
      out << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (i == 0) {
      out << to_string(v);
      continue;
    }
    if (v != 1) out << to_string(v) << "*";
    out << "z" << n_;
    if (i > 1) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

std::string CycNumber::key() const {
  std::ostringstream out;
  out << n_ << "|";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out << ",";
    out << to_string(c_[i]);
  }
  return out.str();
}

}  // namespace fermatk3
