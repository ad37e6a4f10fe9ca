#include "fermatk3/fixed_point.hpp"

#include <algorithm>
#include <numeric>

#include "fermatk3/error.hpp"

namespace fermatk3 {

int nikulin_fixed_count(int n) {
  static const std::map<int, int> table{{2, 8}, {3, 6}, {4, 4}, {5, 4},
                                        {6, 2}, {7, 3}, {8, 2}};
  auto it = table.find(n);
  if (it == table.end())
    throw ShapeError("fixed-point counts are tabulated for orders 2..8 only");
  return it->second;
}

std::vector<LocalFixedType> enumerate_local_types(int N, int w,
                                                  bool faithful) {
  if (N < 2) throw ShapeError("local types need order >= 2");
  if (w % N == 0)
    throw ShapeError("local types need a nontrivial multiplier exponent");
  std::vector<LocalFixedType> out;
  for (int p = 1; p < N; ++p)
    for (int q = p; q < N; ++q) {
      if ((p + q) % N != ((w % N) + N) % N) continue;
      if (faithful &&
          std::lcm(N / std::gcd(p, N), N / std::gcd(q, N)) != N)
        continue;
      out.push_back({N, p, q, N - q});
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.label < b.label;
  });
  return out;
}

std::vector<std::vector<long>> solve_lefschetz(int N, int w, int bound) {
  if (bound < 0 || bound > 24)
    throw ShapeError("fixed-point bound must lie in 0..24");
  const std::vector<LocalFixedType> types = enumerate_local_types(N, w);
  const CycNumber one(1);
  std::vector<CycNumber> coeff;
  for (const auto& t : types)
    coeff.push_back(
        ((one - CycNumber::zeta(N, t.p)) * (one - CycNumber::zeta(N, t.q)))
            .inv());
  const CycNumber target = one + CycNumber::zeta(N, -w);

  std::vector<std::vector<long>> solutions;
  std::vector<long> counts(types.size(), 0);
  // Depth-first over nonnegative counts with sum <= bound; partial sums are
  // carried along so each leaf costs one comparison.
  auto search = [&](auto&& self, std::size_t i, int left,
                    const CycNumber& acc) -> void {
    if (i == counts.size()) {
      if (acc == target) solutions.push_back(counts);
      return;
    }
    CycNumber running = acc;
    for (long m = 0; m <= left; ++m) {
      counts[i] = m;
      self(self, i + 1, left - static_cast<int>(m), running);
      running += coeff[i];
    }
    counts[i] = 0;
  };
  search(search, 0, bound, CycNumber(0));
  return solutions;
}

Rational mukai_rank(const GroupOrderProfile& profile) {
  if (profile.order < 1) throw ShapeError("group order must be positive");
  long long total = 0;
  Rational sum(24);
  for (const auto& [n, count] : profile.structure) {
    total += static_cast<long long>(count);
    if (n == 1) continue;
    sum += Rational(nikulin_fixed_count(static_cast<int>(n))) *
           Rational(static_cast<long>(count));
  }
  if (total != profile.order)
    throw ShapeError("order structure does not sum to the group order");
  return sum / Rational(static_cast<long>(profile.order)) - Rational(2);
}

namespace {

// phi(I) >= sqrt(I/2), so phi(I) <= cap forces I <= 2*cap^2; scanning to
// that limit is exhaustive.
std::set<long> values_with_phi_dividing(long rank) {
  std::set<long> out;
  for (long i = 1; i <= 2 * rank * rank + 2; ++i)
    if (i != 60 && rank % euler_phi(i) == 0) out.insert(i);
  return out;
}

}  // namespace

std::set<long> admissible_transcendental_values(int rank_T) {
  if (rank_T < 2 || rank_T > 21)
    throw ShapeError("transcendental rank must lie in 2..21");
  return values_with_phi_dividing(rank_T);
}

long max_I_under_rank_bound(int r) {
  if (r < 1) throw ShapeError("rank bound must be positive");
  long best = 1;
  for (long i = 1; i <= 2L * r * r + 2; ++i)
    if (i != 60 && euler_phi(i) <= r) best = std::max(best, i);
  return best;
}

std::set<long> realizable_multiplier_orders() {
  std::set<long> out;
  for (long i = 1; i <= 2 * 20 * 20 + 2; ++i)
    if (i != 60 && euler_phi(i) <= 20) out.insert(i);
  return out;
}

int topological_fixed_bound(int rank_T) {
  if (rank_T < 2) throw ShapeError("transcendental rank is at least 2");
  return 2 * rank_T - 18;
}

}  // namespace fermatk3
