#include "fermatk3/golay.hpp"

#include <algorithm>

#include "fermatk3/error.hpp"

namespace fermatk3 {

int mask_weight(Bitmask24 m) { return __builtin_popcount(m); }

Bitmask24 apply_perm(const Perm& p, Bitmask24 m) {
  if (p.n() != 24) throw ShapeError("permutation must act on 24 points");
  Bitmask24 out = 0;
  for (int i = 0; i < 24; ++i)
    if (m >> i & 1) out |= Bitmask24(1) << p(i);
  return out;
}

namespace {

constexpr Bitmask24 kGeneratorPoly = 0x000C75;  // support {0,2,4,5,6,10,11}
constexpr Bitmask24 kParityBit = Bitmask24(1) << 23;
constexpr Bitmask24 kAll = 0x00FFFFFF;

void check_spectrum(const std::map<int, std::size_t>& spectrum) {
  const std::map<int, std::size_t> expected{
      {0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  if (spectrum != expected)
    throw ShapeError("Golay code self-check failed: wrong weight spectrum");
}

}  // namespace

GolayCode GolayCode::construct() {
  std::vector<Bitmask24> rows;
  for (int i = 0; i < 12; ++i) rows.push_back(kGeneratorPoly << i | kParityBit);
  std::vector<Bitmask24> words(4096);
  for (unsigned m = 0; m < 4096; ++m) {
    Bitmask24 w = 0;
    for (int i = 0; i < 12; ++i)
      if (m >> i & 1) w ^= rows[i];
    words[m] = w;
  }
  return from_words(std::move(words));
}

GolayCode GolayCode::from_words(std::vector<Bitmask24> words) {
  std::sort(words.begin(), words.end());
  if (words.size() != 4096 ||
      std::adjacent_find(words.begin(), words.end()) != words.end())
    throw ShapeError("Golay code needs 4096 distinct words");
  for (Bitmask24 w : words)
    if (w & ~kAll) throw ShapeError("Golay code words must fit in 24 bits");
  GolayCode code;
  code.words_ = std::move(words);
  // 4096 distinct words inside a 12-dimensional F2-span must BE the span,
  // so rank plus a re-reduction pass proves closure exactly.
  Bitmask24 pivot[24] = {};
  auto reduce = [&pivot](Bitmask24 v) {
    for (int t = 23; t >= 0; --t)
      if ((v >> t & 1) && pivot[t]) v ^= pivot[t];
    return v;
  };
  int rank = 0;
  for (Bitmask24 w : code.words_) {
    Bitmask24 r = reduce(w);
    if (r) {
      pivot[31 - __builtin_clz(r)] = r;
      ++rank;
    }
  }
  if (rank != 12)
    throw ShapeError("Golay code words do not span a 12-dimensional space");
  for (Bitmask24 w : code.words_)
    if (reduce(w) != 0)
      throw ShapeError("Golay code is not closed under symmetric difference");
  check_spectrum(code.weight_spectrum());
  for (Bitmask24 w : code.words_)
    if (mask_weight(w) == 8) code.octads_.push_back(w);
  return code;
}

bool GolayCode::contains(Bitmask24 w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

std::map<int, std::size_t> GolayCode::weight_spectrum() const {
  std::map<int, std::size_t> s;
  for (Bitmask24 w : words_) ++s[mask_weight(w)];
  return s;
}

bool GolayCode::is_preserved_by(const Perm& p) const {
  for (Bitmask24 w : octads_)
    if (!contains(apply_perm(p, w))) return false;
  return true;
}

std::vector<Bitmask24> octads_containing(const GolayCode& code, Bitmask24 set) {
  std::vector<Bitmask24> hits;
  for (Bitmask24 o : code.octads())
    if ((o & set) == set) hits.push_back(o);
  return hits;
}

Bitmask24 steiner_query(const GolayCode& code, Bitmask24 five_set) {
  if (mask_weight(five_set) != 5)
    throw ShapeError("steiner_query needs a set of exactly 5 points");
  std::vector<Bitmask24> hits = octads_containing(code, five_set);
  if (hits.size() != 1)
    throw ShapeError("corrupted Golay code: containing octad not unique");
  return hits[0];
}

}  // namespace fermatk3
