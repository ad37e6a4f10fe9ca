#include "fermatk3/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "fermatk3/error.hpp"
#include "fermatk3/rational.hpp"

namespace fermatk3 {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size());
  for (int v : img_) {
    if (v < 0 || v >= n() || seen[v])
      throw ShapeError("permutation images must be a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> touched(n);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i], to = c[(i + 1) % c.size()];
      if (from < 0 || from >= n || touched[from])
        throw ShapeError("cycles must be disjoint and in range");
      touched[from] = 1;
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const {
  if (n() != o.n()) throw ShapeError("permutation sizes differ");
  std::vector<int> img(n());
  for (int x = 0; x < n(); ++x) img[x] = img_[o.img_[x]];
  Perm p;
  p.img_ = std::move(img);  // composition of bijections needs no re-check
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> img(n());
  for (int x = 0; x < n(); ++x) img[img_[x]] = x;
  Perm p;
  p.img_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (int x = 0; x < n(); ++x)
    if (img_[x] != x) return false;
  return true;
}

long Perm::order() const {
  long result = 1;
  std::vector<char> seen(n());
  for (int x = 0; x < n(); ++x) {
    if (seen[x]) continue;
    long len = 0;
    for (int y = x; !seen[y]; y = img_[y]) {
      seen[y] = 1;
      ++len;
    }
    result = lcm_long(result, len);
  }
  return result;
}

std::string Perm::str() const {
  std::ostringstream os;
  std::vector<char> seen(n());
  bool any = false;
  for (int x = 0; x < n(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    os << "(";
    bool first = true;
    for (int y = x; !seen[y]; y = img_[y]) {
      seen[y] = 1;
      os << (first ? "" : " ") << y;
      first = false;
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "()";
}

// ---------------------------------------------------------------------------

PermGroup PermGroup::generated_by(int n, std::vector<Perm> gens,
                                  std::vector<int> base_prefix) {
  PermGroup g;
  g.n_ = n;
  for (const Perm& p : gens)
    if (p.n() != n) throw ShapeError("generator acts on the wrong point count");
  g.gens_ = std::move(gens);
  g.build(std::move(base_prefix));
  return g;
}

void PermGroup::extend_base(int point) {
  if (point < 0 || point >= n_) throw ShapeError("base point out of range");
  base_.push_back(point);
  transversal_.emplace_back();
}

std::vector<Perm> PermGroup::level_gens(std::size_t level) const {
  std::vector<Perm> out;
  for (const Perm& s : strong_) {
    bool fixes = true;
    for (std::size_t i = 0; fixes && i < level; ++i) fixes = s(base_[i]) == base_[i];
    if (fixes) out.push_back(s);
  }
  return out;
}

void PermGroup::recompute_orbit(std::size_t level) {
  std::vector<Perm> gens = level_gens(level);
  auto& tr = transversal_[level];
  tr.clear();
  std::vector<int> queue{base_[level]};
  tr.emplace(base_[level], Perm::identity(n_));
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const Perm& s : gens) {
      int y = s(queue[h]);
      if (!tr.count(y)) {
        tr.emplace(y, s * tr.at(queue[h]));
        queue.push_back(y);
      }
    }
}

std::pair<Perm, std::size_t> PermGroup::sift_from(Perm g,
                                                  std::size_t level) const {
  for (std::size_t i = level; i < base_.size(); ++i) {
    int x = g(base_[i]);
    auto it = transversal_[i].find(x);
    if (it == transversal_[i].end()) return {std::move(g), i};
    g = it->second.inverse() * g;
  }
  return {std::move(g), base_.size()};
}

void PermGroup::schreier_sims(std::size_t level) {
  for (bool clean = false; !clean;) {
    clean = true;
    // A strong generator added on the previous pass fixes base_[level] but
    // can still enlarge its orbit, so the transversal must be rebuilt here.
    recompute_orbit(level);
    // deterministic order: BFS order of the orbit map, generators in turn
    std::vector<Perm> gens = level_gens(level);
    for (const auto& [x, ux] : transversal_[level]) {
      for (const Perm& s : gens) {
        Perm schreier = transversal_[level].at(s(x)).inverse() * s * ux;
        if (schreier.is_identity()) continue;
        auto [residue, drop] = sift_from(schreier, level + 1);
        if (residue.is_identity()) continue;
        if (drop == base_.size()) {
          int moved = 0;
          while (residue(moved) == moved) ++moved;
          extend_base(moved);
        }
        strong_.push_back(residue);
        for (std::size_t m = drop; m > level; --m) schreier_sims(m);
        clean = false;
      }
      if (!clean) break;
    }
  }
}

void PermGroup::build(std::vector<int> base_prefix) {
  base_.clear();
  transversal_.clear();
  strong_.clear();
  for (int p : base_prefix)
    if (std::find(base_.begin(), base_.end(), p) == base_.end())
      extend_base(p);
  std::set<std::vector<int>> uniq;
  for (const Perm& g : gens_)
    if (!g.is_identity() && uniq.insert(g.images()).second)
      strong_.push_back(g);
  // every strong generator must move some base point
  for (const Perm& g : strong_) {
    bool moves = false;
    for (int b : base_)
      if (g(b) != b) {
        moves = true;
        break;
      }
    if (!moves) {
      int moved = 0;
      while (g(moved) == moved) ++moved;
      extend_base(moved);
    }
  }
  if (base_.empty()) extend_base(0);  // trivial group still gets a chain
  for (std::size_t m = base_.size(); m-- > 0;) schreier_sims(m);
}

long long PermGroup::order() const {
  long long o = 1;
  for (const auto& tr : transversal_) o *= static_cast<long long>(tr.size());
  return o;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.n() != n_) return false;
  auto [residue, level] = sift_from(g, 0);
  (void)level;
  return residue.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  for (const Perm& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

PermGroup PermGroup::point_stabilizer(int point) const {
  PermGroup rebased = generated_by(n_, gens_, {point});
  return generated_by(n_, rebased.level_gens(1));
}

std::vector<std::vector<int>> PermGroup::orbit_partition() const {
  std::vector<char> seen(n_);
  std::vector<std::vector<int>> blocks;
  for (int x = 0; x < n_; ++x) {
    if (seen[x]) continue;
    std::vector<int> queue{x};
    seen[x] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const Perm& s : gens_) {
        int y = s(queue[h]);
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    std::sort(queue.begin(), queue.end());
    blocks.push_back(std::move(queue));
  }
  return blocks;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  Perm g = Perm::identity(n_);
  for (const auto& tr : transversal_) {
    auto it = tr.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(
                         0, tr.size() - 1)(rng));
    g = g * it->second;
  }
  return g;
}

std::vector<std::size_t> PermGroup::chain_orbit_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& tr : transversal_) sizes.push_back(tr.size());
  return sizes;
}

}  // namespace fermatk3
