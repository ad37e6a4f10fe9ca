#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "fermatk3/bound_audit.hpp"
#include "fermatk3/error.hpp"
#include "fermatk3/fixed_point.hpp"

using namespace fermatk3;

namespace {

std::vector<std::pair<int, int>> type_pairs(
    const std::vector<LocalFixedType>& types) {
  std::vector<std::pair<int, int>> out;
  for (const auto& t : types) out.emplace_back(t.p, t.q);
  return out;
}

std::vector<int> type_labels(const std::vector<LocalFixedType>& types) {
  std::vector<int> out;
  for (const auto& t : types) out.push_back(t.label);
  return out;
}

}  // namespace

TEST_CASE("the fixed-point table holds exactly the seven tabulated orders") {
  CHECK(nikulin_fixed_count(2) == 8);
  CHECK(nikulin_fixed_count(3) == 6);
  CHECK(nikulin_fixed_count(4) == 4);
  CHECK(nikulin_fixed_count(5) == 4);
  CHECK(nikulin_fixed_count(6) == 2);
  CHECK(nikulin_fixed_count(7) == 3);
  CHECK(nikulin_fixed_count(8) == 2);
  CHECK_THROWS_AS(nikulin_fixed_count(1), ShapeError);
  CHECK_THROWS_AS(nikulin_fixed_count(9), ShapeError);
}

TEST_CASE("local eigenvalue types are the faithful exponent pairs") {
  auto t62 = enumerate_local_types(6, 2);
  CHECK(type_pairs(t62) ==
        std::vector<std::pair<int, int>>{{3, 5}, {1, 1}});
  CHECK(type_labels(t62) == std::vector<int>{1, 5});

  auto t93 = enumerate_local_types(9, 3);
  CHECK(type_pairs(t93) ==
        std::vector<std::pair<int, int>>{{4, 8}, {5, 7}, {1, 2}});
  CHECK(type_labels(t93) == std::vector<int>{1, 2, 7});

  auto t124 = enumerate_local_types(12, 4);
  CHECK(type_pairs(t124) ==
        std::vector<std::pair<int, int>>{{5, 11}, {7, 9}, {1, 3}});
  CHECK(type_labels(t124) == std::vector<int>{1, 3, 9});

  // Dropping faithfulness admits the pair whose eigenvalues only generate
  // a proper subgroup of the roots of unity.
  auto loose = enumerate_local_types(6, 2, false);
  CHECK(loose.size() == 3);
  CHECK(std::count_if(loose.begin(), loose.end(), [](const auto& t) {
          return t.p == 4 && t.q == 4;
        }) == 1);

  CHECK_THROWS_AS(enumerate_local_types(6, 0), ShapeError);
  CHECK_THROWS_AS(enumerate_local_types(6, 6), ShapeError);
}

TEST_CASE("the fixed-point identity has the known solution sets") {
  using Sols = std::vector<std::vector<long>>;
  CHECK(solve_lefschetz(9, 3, 6) == Sols{});
  CHECK(solve_lefschetz(6, 2, 8) == Sols{{2, 0}, {4, 1}, {6, 2}});
  CHECK(solve_lefschetz(12, 4, 4) == Sols{{1, 0, 0}, {2, 1, 1}});

  // The solution family is linear in the bound: relaxing it to 11 admits
  // the next member (8, 3).
  CHECK(solve_lefschetz(6, 2, 11) ==
        Sols{{2, 0}, {4, 1}, {6, 2}, {8, 3}});
}

TEST_CASE("solutions substituted back satisfy the identity exactly") {
  for (const auto& [N, w, bound] :
       std::vector<std::tuple<int, int, int>>{{6, 2, 8}, {12, 4, 4}}) {
    const auto types = enumerate_local_types(N, w);
    const CycNumber one(1);
    const CycNumber target = one + CycNumber::zeta(N, -w);
    for (const auto& sol : solve_lefschetz(N, w, bound)) {
      CycNumber acc(0);
      for (std::size_t i = 0; i < types.size(); ++i)
        acc += CycNumber(sol[i]) *
               ((one - CycNumber::zeta(N, types[i].p)) *
                (one - CycNumber::zeta(N, types[i].q)))
                   .inv();
      CHECK(acc == target);
    }
  }
}

TEST_CASE("the invariant-rank formula reproduces the known values") {
  CHECK(mukai_rank({16, {{1, 1}, {2, 1}, {4, 10}, {8, 4}}}) == Rational(3));
  CHECK(mukai_rank({1, {{1, 1}}}) == Rational(22));
  CHECK(mukai_rank({5, {{1, 1}, {5, 4}}}) == Rational(6));
  CHECK(mukai_rank({7, {{1, 1}, {7, 6}}}) == Rational(4));
  CHECK(mukai_rank({80, {{1, 1}, {2, 15}, {5, 64}}}) == Rational(3));
  CHECK(mukai_rank({144, {{1, 1}, {2, 15}, {3, 80}, {6, 48}}}) ==
        Rational(3));
  CHECK(mukai_rank({8, {{1, 1}, {2, 1}, {4, 2}, {8, 4}}}) == Rational(4));
  CHECK(mukai_rank({3, {{1, 1}, {3, 2}}}) == Rational(10));
  CHECK(mukai_rank({9, {{1, 1}, {3, 8}}}) == Rational(6));

  for (int n = 0; n <= 4; ++n) {
    const long long order = 1LL << n;
    GroupOrderProfile p{order, {{1, 1}}};
    if (n > 0) p.structure[2] = static_cast<std::size_t>(order - 1);
    CHECK(mukai_rank(p) == Rational(6) + Rational(16, order));
  }

  // Rational rank for a profile no genuine group has.
  CHECK(mukai_rank({3, {{1, 1}, {2, 2}}}) == Rational(40, 3) - Rational(2));

  CHECK_THROWS_AS(mukai_rank({6, {{1, 1}, {2, 2}}}), ShapeError);   // bad sum
  CHECK_THROWS_AS(mukai_rank({10, {{1, 1}, {9, 9}}}), ShapeError);  // order 9
}

TEST_CASE("totient values and admissible multiplier orders") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(66) == 20);
  CHECK(euler_phi(60) == 16);

  CHECK(admissible_transcendental_values(2) ==
        std::set<long>{1, 2, 3, 4, 6});
  CHECK(admissible_transcendental_values(4) ==
        std::set<long>{1, 2, 3, 4, 5, 6, 8, 10, 12});

  // phi(I) | r and r | r' give phi(I) | r'.
  for (const auto& [r, rp] :
       std::vector<std::pair<int, int>>{{2, 4}, {2, 6}, {3, 9}, {4, 20}}) {
    const auto small = admissible_transcendental_values(r);
    const auto large = admissible_transcendental_values(rp);
    CHECK(std::includes(large.begin(), large.end(), small.begin(),
                        small.end()));
  }

  CHECK_THROWS_AS(admissible_transcendental_values(1), ShapeError);
  CHECK_THROWS_AS(admissible_transcendental_values(22), ShapeError);
}

TEST_CASE("the realizable multiplier orders form the 40-member set") {
  const auto all = realizable_multiplier_orders();
  CHECK(all.size() == 40);
  CHECK(*all.rbegin() == 66);
  CHECK(all.count(60) == 0);
  CHECK(all.count(54) == 1);

  long min_phi_large = 1000;
  for (long i : all)
    if (i >= 32) min_phi_large = std::min(min_phi_large, euler_phi(i));
  CHECK(min_phi_large == 12);
}

TEST_CASE("the largest admissible multiplier grows with the rank budget") {
  CHECK(max_I_under_rank_bound(1) == 2);
  CHECK(max_I_under_rank_bound(3) == 6);
  CHECK(max_I_under_rank_bound(5) == 12);
  CHECK(max_I_under_rank_bound(9) == 30);
  CHECK(max_I_under_rank_bound(21) == 66);
  for (int r = 1; r < 21; ++r)
    CHECK(max_I_under_rank_bound(r) <= max_I_under_rank_bound(r + 1));
  CHECK_THROWS_AS(max_I_under_rank_bound(0), ShapeError);
}

TEST_CASE("the topological fixed-point bound pins large-rank elements") {
  CHECK(topological_fixed_bound(12) == 6);
  CHECK(topological_fixed_bound(9) == 0);
  CHECK(topological_fixed_bound(13) == 8);
  // A count of >= 8 only fits order 2 in the table.
  for (int n = 3; n <= 8; ++n) CHECK(nikulin_fixed_count(n) < 8);
  CHECK(nikulin_fixed_count(2) == 8);
}

TEST_CASE("the classification table is well-formed") {
  const auto& table = mukai_solvable_table();
  CHECK(table.size() == 20);
  std::set<std::string> names;
  for (const auto& e : table) {
    CHECK(names.insert(e.name).second);
    CHECK(e.order >= 1);
    CHECK((e.case_label == "I" || e.case_label == "II" ||
           e.case_label == "III" || e.case_label == "IV" ||
           e.case_label == "V"));
    if (!e.structure.empty()) {
      long long total = 0;
      for (const auto& [n, count] : e.structure)
        total += static_cast<long long>(count);
      CHECK(total == e.order);
    }
  }
}

TEST_CASE("the solvable bound audit concludes 1536 at F384") {
  const auto report = solvable_bound_audit();
  CHECK(report.passed());
  CHECK(report.bound == 1536);
  CHECK(report.attained_by == "F384");
  CHECK(report.attained_I == 4);
  CHECK(report.steps.size() >= 25);
  std::set<std::string> labels;
  for (const auto& s : report.steps) {
    CHECK(!s.label.empty());
    CHECK(!s.statement.empty());
    CHECK(labels.insert(s.label).second);  // labels are unique
  }
  // The analysis mixes computed inequalities with cited assumptions.
  CHECK(std::count_if(report.steps.begin(), report.steps.end(),
                      [](const AuditStep& s) { return s.cited; }) >= 5);
  CHECK(std::count_if(report.steps.begin(), report.steps.end(),
                      [](const AuditStep& s) { return !s.cited; }) >= 15);
}

TEST_CASE("the nilpotent bound audit concludes 512 at F128") {
  const auto report = nilpotent_bound_audit();
  CHECK(report.passed());
  CHECK(report.bound == 512);
  CHECK(report.attained_by == "F128");
  CHECK(report.attained_I == 4);
  for (const auto& s : report.steps) CHECK(!s.statement.empty());
}
