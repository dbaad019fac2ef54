#pragma once

// The lifting step behind the convexity argument: inside a rank 3 polar
// space every chamber on p reaches the nearest chamber on an opposite
// point q along a minimal gallery of type 1,2,3,2,1; and the alternating
// concatenations of 1,2,3,2,1 and 4,3,2,3,4 stay reduced in F4.

#include <cstddef>
#include <string>
#include <vector>

#include "chamberlab/coxeter.hpp"
#include "chamberlab/geometry.hpp"

namespace chamberlab {

struct BuildingBlockReport {
  bool pass = true;
  std::size_t points = 0;
  std::size_t chambers = 0;
  std::size_t ordered_opposite_pairs = 0;
  std::size_t min_opposite_per_point = 0;
  std::size_t max_opposite_per_point = 0;
  std::size_t min_chambers_per_point = 0;
  std::size_t max_chambers_per_point = 0;
  std::size_t chamber_checks = 0;
  std::size_t failures = 0;
  // Reduced word of the Weyl distance observed on every checked chamber
  // (empty if they disagree).
  Word observed_word;
  // Largest nearest-chamber distance seen for collinear pairs.
  int collinear_max_distance = 0;
  std::vector<std::string> failure_samples;
};

// `polar` is read as point, line, plane. `group` must be the {1,2,3}
// parabolic of F4 (m12 = 3, m23 = 4, m13 = 2). Opposite means distinct and
// non-collinear. Throws Error(kWrongRank) / Error(kWrongMatrix).
BuildingBlockReport verify_building_block(const IncidenceGeometry& polar,
                                          const CoxeterGroup& group);

struct AlternatingWord {
  Word word;
  bool reduced = false;
  int length = 0;
};

struct AlternatingReport {
  bool pass = true;
  int blocks = 0;
  std::vector<AlternatingWord> words;
};

// Both alternating words with k blocks (k in 1..4) must be reduced of length
// 5k. Throws Error(kWrongMatrix) for a non-F4 group and Error(kUnsupported)
// for k outside 1..4.
AlternatingReport verify_alternating_words(const CoxeterGroup& group, int k);

}  // namespace chamberlab
