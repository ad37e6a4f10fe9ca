#include "fermatk3/abstract_group.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "fermatk3/error.hpp"
#include "fermatk3/rational.hpp"

namespace fermatk3 {

CayleyTable CayleyTable::from_table(std::vector<std::vector<int>> t) {
  const int n = static_cast<int>(t.size());
  if (n == 0) throw ShapeError("a multiplication table needs elements");
  for (const auto& row : t)
    if (static_cast<int>(row.size()) != n)
      throw ShapeError("multiplication table must be square");
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    if (t[0][i] != i || t[i][0] != i)
      throw ShapeError("element 0 must be the identity");
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = t[i][j];
      if (v < 0 || v >= n || seen[v])
        throw ShapeError("multiplication table rows must be permutations");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = t[j][i];
      if (seen[v])
        throw ShapeError("multiplication table columns must be permutations");
      seen[v] = 1;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          throw ShapeError("multiplication table is not associative");
  CayleyTable g;
  g.mul_ = std::move(t);
  return g;
}

CayleyTable CayleyTable::from_matrix_group(const MatrixGroup& g) {
  const auto& els = g.elements();
  const int n = static_cast<int>(els.size());
  const long L = g.key_conductor();
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index.emplace(els[i].key_at(L), i);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find((els[i] * els[j]).key_at(L));
      if (it == index.end())
        throw ShapeError("matrix group element list is not closed");
      t[i][j] = it->second;
    }
  return from_table(std::move(t));
}

CayleyTable CayleyTable::from_perm_group(const PermGroup& g) {
  if (g.order() > 512)
    throw ShapeError("permutation group too large for a multiplication table");
  // BFS enumeration with the identity first, so index 0 is the identity.
  std::vector<Perm> els{Perm::identity(g.points())};
  std::map<std::vector<int>, int> index{{els[0].images(), 0}};
  for (std::size_t head = 0; head < els.size(); ++head)
    for (const Perm& s : g.generators()) {
      Perm next = els[head] * s;
      if (index.emplace(next.images(), static_cast<int>(els.size())).second)
        els.push_back(std::move(next));
    }
  if (static_cast<long long>(els.size()) != g.order())
    throw ShapeError("permutation group enumeration disagrees with its order");
  const int n = static_cast<int>(els.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = index.at((els[i] * els[j]).images());
  return from_table(std::move(t));
}

CayleyTable CayleyTable::cyclic(long n) {
  if (n < 1) throw ShapeError("cyclic group needs order >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) t[i][j] = static_cast<int>((i + j) % n);
  return from_table(std::move(t));
}

CayleyTable CayleyTable::dihedral(long n) {
  if (n < 1) throw ShapeError("dihedral group needs n >= 1");
  const long N = 2 * n;
  auto idx = [n](long rot, long flip) {
    return static_cast<int>(((rot % n) + n) % n + (flip ? n : 0));
  };
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      t[idx(i, 0)][idx(j, 0)] = idx(i + j, 0);
      t[idx(i, 0)][idx(j, 1)] = idx(i + j, 1);
      t[idx(i, 1)][idx(j, 0)] = idx(i - j, 1);
      t[idx(i, 1)][idx(j, 1)] = idx(i - j, 0);
    }
  return from_table(std::move(t));
}

CayleyTable CayleyTable::binary_dihedral(long m) {
  if (m < 1) throw ShapeError("binary dihedral group needs m >= 1");
  const long A = 2 * m;  // order of a
  auto idx = [A](long rot, long flip) {
    return static_cast<int>(((rot % A) + A) % A + (flip ? A : 0));
  };
  std::vector<std::vector<int>> t(4 * m, std::vector<int>(4 * m));
  for (long i = 0; i < A; ++i)
    for (long j = 0; j < A; ++j) {
      t[idx(i, 0)][idx(j, 0)] = idx(i + j, 0);
      t[idx(i, 0)][idx(j, 1)] = idx(i + j, 1);
      t[idx(i, 1)][idx(j, 0)] = idx(i - j, 1);
      t[idx(i, 1)][idx(j, 1)] = idx(i - j + m, 0);  // b^2 = a^m
    }
  return from_table(std::move(t));
}

CayleyTable CayleyTable::elementary_abelian_2(int k) {
  if (k < 0 || k > 16) throw ShapeError("elementary abelian rank out of range");
  const int n = 1 << k;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = i ^ j;
  return from_table(std::move(t));
}

CayleyTable CayleyTable::direct_product(const CayleyTable& a,
                                        const CayleyTable& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2)
          t[i1 * nb + j1][i2 * nb + j2] =
              a.mul(i1, i2) * nb + b.mul(j1, j2);
  return from_table(std::move(t));
}

int CayleyTable::inv(int a) const {
  for (int x = 0; x < order(); ++x)
    if (mul_[a][x] == 0) return x;
  throw ShapeError("element without inverse");
}

long CayleyTable::element_order(int a) const {
  long k = 1;
  int x = a;
  while (x != 0) {
    x = mul_[x][a];
    ++k;
  }
  return k;
}

std::map<long, std::size_t> CayleyTable::order_structure() const {
  std::map<long, std::size_t> r;
  for (int x = 0; x < order(); ++x) ++r[element_order(x)];
  return r;
}

long CayleyTable::exponent() const {
  long e = 1;
  for (int x = 0; x < order(); ++x) e = lcm_long(e, element_order(x));
  return e;
}

std::vector<int> CayleyTable::center() const {
  std::vector<int> z;
  for (int x = 0; x < order(); ++x) {
    bool central = true;
    for (int y = 0; central && y < order(); ++y)
      central = mul_[x][y] == mul_[y][x];
    if (central) z.push_back(x);
  }
  return z;
}

std::vector<std::vector<int>> CayleyTable::conjugacy_classes() const {
  const int n = order();
  std::vector<char> done(n);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::set<int> cls;
    for (int g = 0; g < n; ++g) cls.insert(mul_[mul_[inv(g)][x]][g]);
    std::vector<int> v(cls.begin(), cls.end());
    for (int y : v) done[y] = 1;
    classes.push_back(std::move(v));
  }
  return classes;
}

std::vector<int> CayleyTable::closure_of(std::vector<int> seed) const {
  std::vector<char> in(order());
  std::vector<int> reach{0};
  in[0] = 1;
  for (std::size_t h = 0; h < reach.size(); ++h)
    for (int g : seed) {
      int y = mul_[reach[h]][g];
      if (!in[y]) {
        in[y] = 1;
        reach.push_back(y);
      }
    }
  std::sort(reach.begin(), reach.end());
  return reach;
}

std::vector<int> CayleyTable::derived_subgroup() const {
  const int n = order();
  std::set<int> comms;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      comms.insert(mul_[mul_[mul_[inv(x)][inv(y)]][x]][y]);
  return closure_of(std::vector<int>(comms.begin(), comms.end()));
}

CayleyTable CayleyTable::subgroup(const std::vector<int>& elems) const {
  const int m = static_cast<int>(elems.size());
  if (m == 0 || elems[0] != 0)
    throw ShapeError("subgroup element list must start with the identity");
  std::vector<int> local(order(), -1);
  for (int i = 0; i < m; ++i) local[elems[i]] = i;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int v = local[mul_[elems[i]][elems[j]]];
      if (v < 0) throw ShapeError("subgroup element list is not closed");
      t[i][j] = v;
    }
  return from_table(std::move(t));
}

CayleyTable CayleyTable::quotient(const std::vector<int>& normal) const {
  const int n = order();
  std::vector<char> in_n(n);
  for (int x : normal) in_n[x] = 1;
  if (normal.empty() || !in_n[0])
    throw ShapeError("normal subgroup must contain the identity");
  // left cosets, labelled by their minimal element; the coset of 0 is normal
  // itself, so it gets label 0.
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] != -1) continue;
    int id = static_cast<int>(reps.size());
    for (int h : normal) coset_of[mul_[x][h]] = id;
    if (coset_of[x] != id)
      throw ShapeError("subgroup does not partition the group into cosets");
    reps.push_back(x);
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) t[i][j] = coset_of[mul_[reps[i]][reps[j]]];
  // well-definedness (fails exactly when the subgroup is not normal)
  for (int x = 0; x < n; ++x)
    for (int j = 0; j < q; ++j)
      if (coset_of[mul_[x][reps[j]]] != t[coset_of[x]][j])
        throw ShapeError("quotient needs a normal subgroup");
  return from_table(std::move(t));
}

std::vector<long> CayleyTable::abelianization() const {
  CayleyTable q = quotient(derived_subgroup());
  std::vector<long> factors;
  while (q.order() > 1) {
    int best = 1;
    long best_ord = 1;
    for (int x = 0; x < q.order(); ++x) {
      long o = q.element_order(x);
      if (o > best_ord) {
        best_ord = o;
        best = x;
      }
    }
    // a cyclic subgroup of maximal order is a direct summand
    factors.push_back(best_ord);
    q = q.quotient(q.closure_of({best}));
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::vector<int> CayleyTable::small_generating_set() const {
  std::vector<int> gens;
  std::vector<int> reach = closure_of({});
  for (int x = 0; x < order(); ++x) {
    if (std::binary_search(reach.begin(), reach.end(), x)) continue;
    gens.push_back(x);
    reach = closure_of(gens);
  }
  return gens;
}

GroupInvariants group_invariants(const CayleyTable& g) {
  GroupInvariants inv;
  inv.order = static_cast<std::size_t>(g.order());
  inv.center_order = g.center().size();
  inv.exponent = g.exponent();
  inv.abelianization = g.abelianization();
  for (const auto& cls : g.conjugacy_classes()) ++inv.class_sizes[cls.size()];
  inv.order_structure = g.order_structure();
  return inv;
}

std::string GroupInvariants::str() const {
  std::ostringstream os;
  os << "order " << order << ", center " << center_order << ", exponent "
     << exponent << ", abelianization (";
  for (std::size_t i = 0; i < abelianization.size(); ++i)
    os << (i ? "," : "") << abelianization[i];
  os << "), class sizes {";
  bool first = true;
  for (const auto& [s, c] : class_sizes) {
    os << (first ? "" : ", ") << s << "x" << c;
    first = false;
  }
  os << "}, element orders {";
  first = true;
  for (const auto& [o, c] : order_structure) {
    os << (first ? "" : ", ") << o << ":" << c;
    first = false;
  }
  os << "}";
  return os.str();
}

std::optional<std::vector<int>> iso_search(const CayleyTable& a,
                                           const CayleyTable& b) {
  if (a.order() > 512 || b.order() > 512)
    throw ShapeError("iso_search handles groups of order at most 512");
  if (a.order() != b.order()) return std::nullopt;
  if (!(group_invariants(a) == group_invariants(b))) return std::nullopt;
  const int n = a.order();

  auto labels = [](const CayleyTable& g) {
    std::vector<std::pair<long, std::size_t>> lab(g.order());
    for (const auto& cls : g.conjugacy_classes())
      for (int x : cls) lab[x] = {g.element_order(x), cls.size()};
    return lab;
  };
  const auto la = labels(a), lb = labels(b);
  const std::vector<int> gens = a.small_generating_set();
  std::vector<std::vector<int>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < n; ++y)
      if (lb[y] == la[gens[i]]) cand[i].push_back(y);

  std::vector<int> img_of_gen(gens.size(), -1);
  std::vector<int> phi;

  // Maps the subgroup generated by the first k assigned generators; fails on
  // any inconsistency or collision, so wrong partial assignments die early.
  auto consistent = [&](std::size_t k) -> bool {
    phi.assign(n, -1);
    std::vector<char> used(n);
    std::vector<int> reach{0};
    phi[0] = 0;
    used[0] = 1;
    for (std::size_t h = 0; h < reach.size(); ++h)
      for (std::size_t i = 0; i < k; ++i) {
        int x = reach[h];
        int y = a.mul(x, gens[i]);
        int t = b.mul(phi[x], img_of_gen[i]);
        if (phi[y] == -1) {
          if (used[t]) return false;
          phi[y] = t;
          used[t] = 1;
          reach.push_back(y);
        } else if (phi[y] != t) {
          return false;
        }
      }
    return true;
  };

  std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
    if (i == gens.size())
      return std::find(phi.begin(), phi.end(), -1) == phi.end();
    for (int y : cand[i]) {
      img_of_gen[i] = y;
      if (consistent(i + 1) && dfs(i + 1)) return true;
    }
    return false;
  };
  if (gens.empty()) phi.assign(n, 0);  // trivial group
  if (!dfs(0)) return std::nullopt;

  // independent verification of the found map
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y]))
        throw ShapeError("iso_search produced an inconsistent map");
  return phi;
}

std::vector<std::vector<int>> subgroups_of_order(const CayleyTable& g,
                                                 std::size_t m) {
  const int n = g.order();
  if (n > 64)
    throw ShapeError("subgroups_of_order handles groups of order at most 64");
  if (m == 0 || n % m != 0) return {};

  auto closure = [&](std::uint64_t mask) {
    for (bool grew = true; grew;) {
      grew = false;
      for (int x = 0; x < n; ++x) {
        if (!(mask >> x & 1)) continue;
        for (int y = 0; y < n; ++y) {
          if (!(mask >> y & 1)) continue;
          int z = g.mul(x, y);
          if (!(mask >> z & 1)) {
            mask |= std::uint64_t(1) << z;
            grew = true;
          }
        }
      }
    }
    return mask;
  };

  // Every subgroup of order m is reached by adding one element at a time:
  // the intermediate closures are its own subgroups, so they never exceed m.
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> queue{closure(1)};
  seen.insert(queue[0]);
  for (std::size_t h = 0; h < queue.size(); ++h) {
    std::uint64_t s = queue[h];
    if (static_cast<std::size_t>(__builtin_popcountll(s)) >= m) continue;
    for (int x = 0; x < n; ++x) {
      if (s >> x & 1) continue;
      std::uint64_t t = closure(s | std::uint64_t(1) << x);
      if (static_cast<std::size_t>(__builtin_popcountll(t)) <= m &&
          seen.insert(t).second)
        queue.push_back(t);
    }
  }
  std::vector<std::vector<int>> result;
  for (std::uint64_t s : seen) {
    if (static_cast<std::size_t>(__builtin_popcountll(s)) != m) continue;
    std::vector<int> elems;
    for (int x = 0; x < n; ++x)
      if (s >> x & 1) elems.push_back(x);
    result.push_back(std::move(elems));
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace fermatk3
