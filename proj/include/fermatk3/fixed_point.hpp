#pragma once

#include <map>
#include <set>
#include <vector>

#include "fermatk3/cyclotomic.hpp"
#include "fermatk3/rational.hpp"

namespace fermatk3 {

// Number of fixed points of a symplectic automorphism of order n on a K3
// surface (finite for 2 <= n <= 8; the count depends only on n).
int nikulin_fixed_count(int n);

// Local eigenvalue data of an isolated fixed point: the action on the
// tangent plane is (zeta_N^p, zeta_N^q) with p + q = w (mod N). The
// conventional label is N - max(p,q), matching the classical type
// numbering (zeta^-k x, zeta^{k+w} y) -> type (k).
struct LocalFixedType {
  int order;  // N
  int p, q;   // 1 <= p <= q <= N-1
  int label;  // N - q

  bool operator==(const LocalFixedType&) const = default;
};

// All local types for an automorphism of order N with multiplier exponent w
// (its action on the 2-form is by zeta_N^w), ordered by ascending label.
// With faithful = true (the geometric situation), a type is kept only when
// the two eigenvalues generate the full group of N-th roots of unity.
std::vector<LocalFixedType> enumerate_local_types(int N, int w,
                                                  bool faithful = true);

// Nonnegative integer solutions (m_t), indexed like enumerate_local_types,
// of the holomorphic fixed point identity
//   1 + zeta_N^{-w} = sum_t m_t / ((1 - zeta^{p_t})(1 - zeta^{q_t}))
// with sum_t m_t <= bound, found by exhaustive enumeration and exact
// cyclotomic arithmetic. An empty list is a meaningful outcome.
std::vector<std::vector<long>> solve_lefschetz(int N, int w, int bound);

// A finite group seen only through its order statistics.
struct GroupOrderProfile {
  long long order = 0;
  std::map<long, std::size_t> structure;  // element order -> count
};

// rank of the invariant part of H^2 under a symplectic action:
// (24 + sum_{n>=2} m(n) f(n)) / |G| - 2, exact. Every element order n >= 2
// in the profile must lie in 2..8.
Rational mukai_rank(const GroupOrderProfile& profile);

// { I >= 1 : phi(I) divides rank_T, I != 60 }, the possible orders of the
// transcendental-cycle multiplier when rank T(X) = rank_T (2..21).
std::set<long> admissible_transcendental_values(int rank_T);

// Largest admissible I over all transcendental ranks <= r, i.e.
// max { I : phi(I) <= r, I != 60 }.
long max_I_under_rank_bound(int r);

// Every multiplier order possible on some K3 surface:
// { I : phi(I) <= 20, I != 60 }, a 40-member set with maximum 66.
std::set<long> realizable_multiplier_orders();

// Lower bound 2*rank_T - 18 for the fixed-point count of a nontrivial
// symplectic automorphism when rank T(X) = rank_T >= 2 (topological
// Lefschetz estimate).
int topological_fixed_bound(int rank_T);

}  // namespace fermatk3
