#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fermatk3/perm_group.hpp"

namespace fermatk3 {

// Subset of the 24-point set, one bit per point (bit i = point i; the
// classical labelling {1, ..., 24} corresponds to indices 0..23, with 24
// at index 23).
using Bitmask24 = std::uint32_t;

int mask_weight(Bitmask24 m);
Bitmask24 apply_perm(const Perm& p, Bitmask24 m);

// The extended binary Golay code: 4096 words of length 24, minimum
// distance 8. Weight-8 words are the octads of the Steiner system
// St(5,8,24).
class GolayCode {
 public:
  // Spans the fixed generator matrix: row i (i = 0..11) is the degree-11
  // generator polynomial with support {0,2,4,5,6,10,11} shifted up by i,
  // plus an overall parity bit at position 23. Self-checks the weight
  // spectrum before returning.
  static GolayCode construct();
  // Rebuilds from an explicit word list (e.g. a cache); validates size,
  // closure under symmetric difference, and the weight spectrum.
  static GolayCode from_words(std::vector<Bitmask24> words);

  const std::vector<Bitmask24>& words() const { return words_; }   // sorted
  const std::vector<Bitmask24>& octads() const { return octads_; } // sorted
  bool contains(Bitmask24 w) const;
  std::map<int, std::size_t> weight_spectrum() const;
  bool is_preserved_by(const Perm& p) const;

 private:
  std::vector<Bitmask24> words_;
  std::vector<Bitmask24> octads_;
};

// All octads containing the given set (any weight).
std::vector<Bitmask24> octads_containing(const GolayCode& code, Bitmask24 set);

// The unique octad containing a weight-5 set. Throws ShapeError when the
// input weight is not 5, and reports a corrupted code if the octad is not
// unique.
Bitmask24 steiner_query(const GolayCode& code, Bitmask24 five_set);

}  // namespace fermatk3
