#include "fermatk3/mathieu.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "fermatk3/error.hpp"

namespace fermatk3 {

namespace {

// x -> x + 1 on F_23, infinity fixed.
const std::vector<int> kGenShift{1,  2,  3,  4,  5,  6,  7,  8,
                                 9,  10, 11, 12, 13, 14, 15, 16,
                                 17, 18, 19, 20, 21, 22, 0,  23};
// x -> -1/x, swapping 0 and infinity.
const std::vector<int> kGenNegInv{23, 22, 11, 15, 17, 9,  19, 13,
                                  20, 5,  16, 2,  21, 7,  18, 3,
                                  10, 4,  14, 6,  8,  12, 1,  0};
// x -> x^3/9 on squares, x -> 9x^3 on non-squares; 0 and infinity fixed.
const std::vector<int> kGenCube{0,  18, 6,  3,  2,  21, 1,  5,
                                16, 12, 7,  19, 8,  9,  17, 15,
                                13, 11, 4,  22, 10, 20, 14, 23};

Perm perm_pow(const Perm& p, long e) {
  Perm r = Perm::identity(p.n());
  for (long i = 0; i < e; ++i) r = r * p;
  return r;
}

}  // namespace

PermGroup m24_construct(const GolayCode& code) {
  const std::vector<std::vector<int>> raw{kGenShift, kGenNegInv, kGenCube};
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Perm p(raw[i]);
    if (!code.is_preserved_by(p))
      throw ShapeError("generator " + std::to_string(i + 1) +
                       " does not preserve the octad set");
    gens.push_back(std::move(p));
  }
  PermGroup g = PermGroup::generated_by(24, gens);
  if (g.order() != 244823040LL)
    throw ShapeError("octad-preserving generators close to the wrong order");
  return g;
}

long long two_part(long long n) {
  if (n < 1) throw ShapeError("two_part needs a positive argument");
  long long t = 1;
  while (n % 2 == 0) {
    n /= 2;
    t *= 2;
  }
  return t;
}

PermGroup sylow2(const PermGroup& g_in, std::uint64_t seed,
                 std::size_t budget) {
  const int n = g_in.points();
  const long long target = two_part(g_in.order());
  if (target == 1) return PermGroup::generated_by(n, {});

  // A stabilizer of a point in an odd orbit has odd index, so it still
  // contains a full Sylow 2-subgroup; descend while possible.
  PermGroup g = g_in;
  for (bool reduced = true; reduced;) {
    reduced = false;
    for (const auto& blk : g.orbit_partition()) {
      if (blk.size() % 2 == 1 && blk.size() > 1) {
        g = g.point_stabilizer(blk[0]);
        reduced = true;
        break;
      }
    }
  }

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Perm> hgens;
  PermGroup h = PermGroup::generated_by(n, {});
  for (std::size_t step = 0; step < budget; ++step) {
    if (h.order() == target) return h;
    Perm z = g.random_element(rng);
    const long o = z.order();
    Perm t = perm_pow(z, o / static_cast<long>(two_part(o)));
    if (t.is_identity() || h.contains(t)) continue;
    bool normalizes = true;
    for (const Perm& s : hgens)
      if (!h.contains(t.inverse() * s * t)) {
        normalizes = false;
        break;
      }
    if (normalizes) {
      // <h, t> = h<t> has order |h| * 2^k: still a 2-group
      hgens.push_back(t);
      h = PermGroup::generated_by(n, hgens);
      continue;
    }
    std::vector<Perm> cand = hgens;
    cand.push_back(t);
    PermGroup k = PermGroup::generated_by(n, cand);
    if (two_part(k.order()) == k.order()) {
      hgens = std::move(cand);
      h = std::move(k);
    }
  }
  if (h.order() == target) return h;
  throw SearchExhausted(
      "sylow-2 ascent did not reach the full 2-part within its budget; "
      "retry with a different seed");
}

std::vector<long> orbit_sizes(const PermGroup& g) {
  std::vector<long> sizes;
  for (const auto& blk : g.orbit_partition())
    sizes.push_back(static_cast<long>(blk.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

namespace {

void solve_parts(long total, int parts, long min_part, bool pow2,
                 std::vector<long>& cur,
                 std::vector<std::vector<long>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  // Parts are emitted in nondecreasing order, so p more of at least p each.
  for (long p = min_part; p * parts <= total; ++p) {
    if (pow2 && (p & (p - 1)) != 0) continue;
    cur.push_back(p);
    solve_parts(total - p, parts - 1, p, pow2, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> orbit_type_solver(long total, int orbit_count,
                                                 bool powers_of_two) {
  if (total < 1 || orbit_count < 1)
    throw ShapeError("orbit_type_solver needs positive arguments");
  std::vector<std::vector<long>> out;
  std::vector<long> cur{1};  // the action fixes a point
  solve_parts(total - 1, orbit_count - 1, 1, powers_of_two, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fermatk3
