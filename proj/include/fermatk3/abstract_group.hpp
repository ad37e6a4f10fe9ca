#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fermatk3/matrix_group.hpp"
#include "fermatk3/perm_group.hpp"

namespace fermatk3 {

// A finite group given by its multiplication table. Element 0 is always the
// identity. Tables stay small (a few hundred elements), so every question is
// answered by direct enumeration.
class CayleyTable {
 public:
  CayleyTable() = default;

  static CayleyTable from_matrix_group(const MatrixGroup& g);
  // Enumerates the group's elements; refuses more than 512 with ShapeError.
  static CayleyTable from_perm_group(const PermGroup& g);
  // Validates the latin-square property, the identity at 0, and inverses.
  static CayleyTable from_table(std::vector<std::vector<int>> t);

  // Model groups used to name isomorphism types.
  static CayleyTable cyclic(long n);
  // Dihedral group of order 2n (n >= 1): <r, s | r^n, s^2, s r s = r^-1>.
  static CayleyTable dihedral(long n);
  // Binary dihedral group of order 4m (m >= 1):
  // <a, b | a^{2m} = 1, b^2 = a^m, b^-1 a b = a^-1>.
  static CayleyTable binary_dihedral(long m);
  static CayleyTable elementary_abelian_2(int k);
  static CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const;
  long element_order(int a) const;
  std::map<long, std::size_t> order_structure() const;
  long exponent() const;

  std::vector<int> center() const;
  std::vector<std::vector<int>> conjugacy_classes() const;
  // Sorted element list of the commutator subgroup.
  std::vector<int> derived_subgroup() const;

  // Subgroup on a closed, sorted element list containing 0.
  CayleyTable subgroup(const std::vector<int>& elems) const;
  // Quotient by a normal subgroup, given as a sorted element list.
  CayleyTable quotient(const std::vector<int>& normal) const;

  // Invariant factors d_1 | d_2 | ... of the abelianization, ascending.
  std::vector<long> abelianization() const;

  // Greedy small generating set (deterministic).
  std::vector<int> small_generating_set() const;

  // Closure of a set of element indices inside this group.
  std::vector<int> closure_of(std::vector<int> seed) const;

 private:
  std::vector<std::vector<int>> mul_;
};

// Summary invariants used to tell small groups apart (and to prove two
// groups non-isomorphic without a search).
struct GroupInvariants {
  std::size_t order = 0;
  std::size_t center_order = 0;
  long exponent = 0;
  std::vector<long> abelianization;                 // ascending factors
  std::map<std::size_t, std::size_t> class_sizes;   // size -> count
  std::map<long, std::size_t> order_structure;      // order -> count

  bool operator==(const GroupInvariants&) const = default;
  std::string str() const;
};

GroupInvariants group_invariants(const CayleyTable& g);

// Explicit isomorphism a -> b (as an index map, verified before returning),
// or nullopt when exhaustive generator-image search proves there is none.
// Groups of more than 512 elements are refused with ShapeError so the
// search stays exhaustive.
std::optional<std::vector<int>> iso_search(const CayleyTable& a,
                                           const CayleyTable& b);

// Every subgroup of the given order, as sorted element lists. The group
// order must be at most 64 (subgroups are tracked as bitmasks).
std::vector<std::vector<int>> subgroups_of_order(const CayleyTable& g,
                                                 std::size_t m);

}  // namespace fermatk3
