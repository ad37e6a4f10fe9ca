#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace fermatk3 {

// Permutation of {0, ..., n-1}, stored as its image list.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  // Functional composition: (p * q)(x) = p(q(x)).
  Perm operator*(const Perm& o) const;
  // Pipeline composition: p.then(q) applies p first, so it equals q * p.
  Perm then(const Perm& o) const { return o * *this; }
  Perm inverse() const;
  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool is_identity() const;
  long order() const;

  std::string str() const;  // disjoint cycles, fixed points omitted

 private:
  std::vector<int> img_;
};

// Permutation group with a Schreier-Sims stabilizer chain. The base is
// chosen deterministically (smallest moved points first, after any forced
// prefix), so element order and transversals are reproducible.
class PermGroup {
 public:
  PermGroup() = default;
  static PermGroup generated_by(int n, std::vector<Perm> gens,
                                std::vector<int> base_prefix = {});

  int points() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }
  long long order() const;
  bool contains(const Perm& g) const;
  bool is_subgroup_of(const PermGroup& other) const;

  // Stabilizer of a point, as a group in its own right.
  PermGroup point_stabilizer(int point) const;

  // Orbits on {0, ..., n-1}: each block ascending, blocks ordered by their
  // minimum.
  std::vector<std::vector<int>> orbit_partition() const;

  // Uniformly distributed element (product of uniform transversal
  // representatives along the chain).
  Perm random_element(std::mt19937_64& rng) const;

  const std::vector<int>& base() const { return base_; }
  // Transversal sizes along the chain (their product is the order).
  std::vector<std::size_t> chain_orbit_sizes() const;

 private:
  void extend_base(int point);
  void build(std::vector<int> base_prefix);
  // Strong generators fixing base_[0..level).
  std::vector<Perm> level_gens(std::size_t level) const;
  void recompute_orbit(std::size_t level);
  // Reduce g against transversals starting at `level`; returns the residue
  // and the level reached.
  std::pair<Perm, std::size_t> sift_from(Perm g, std::size_t level) const;
  void schreier_sims(std::size_t level);

  int n_ = 0;
  std::vector<Perm> gens_;           // original generators
  std::vector<Perm> strong_;         // strong generating set
  std::vector<int> base_;
  // transversal_[i][x] = index into reps_ of a word u with u(base_[i]) = x.
  std::vector<std::map<int, Perm>> transversal_;
};

}  // namespace fermatk3
