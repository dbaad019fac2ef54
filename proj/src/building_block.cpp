#include "chamberlab/building_block.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "chamberlab/chambers.hpp"
#include "chamberlab/error.hpp"

namespace chamberlab {

BuildingBlockReport verify_building_block(const IncidenceGeometry& polar,
                                          const CoxeterGroup& group) {
  if (polar.rank() != 3) {
    throw Error(ErrorCode::kWrongRank, "wrong rank: the polar space must have 3 types, got " +
                                           std::to_string(polar.rank()));
  }
  const std::array<Generator, 3> gens{1, 2, 3};
  if (!(group.matrix() == CoxeterMatrix::f4().submatrix(gens))) {
    throw Error(ErrorCode::kWrongMatrix,
                "wrong matrix: expected the {1,2,3} parabolic of F4 (m12 = 3, m23 = 4)");
  }

  const ChamberSystem cs = flag_complex(polar);
  const ElementId target = group.evaluate(Word{{1, 2, 3, 2, 1}});
  const auto points = polar.elements_of_type(0);

  BuildingBlockReport report;
  report.points = points.size();
  report.chambers = cs.size();
  report.min_opposite_per_point = std::numeric_limits<std::size_t>::max();
  report.min_chambers_per_point = std::numeric_limits<std::size_t>::max();

  // collinear[i][j] for point indices.
  std::vector<ElementId> point_index(polar.num_elements(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) point_index[points[i]] = static_cast<ElementId>(i);
  std::vector<std::vector<char>> collinear(points.size(), std::vector<char>(points.size(), 0));
  for (ElementId line : polar.elements_of_type(1)) {
    const auto on = polar.shadow(line);
    for (ElementId a : on) {
      for (ElementId b : on) {
        if (a != b) collinear[point_index[a]][point_index[b]] = 1;
      }
    }
  }

  for (std::size_t i = 0; i < points.size(); ++i) {
    std::size_t opposite = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i != j && !collinear[i][j]) ++opposite;
    }
    report.ordered_opposite_pairs += opposite;
    report.min_opposite_per_point = std::min(report.min_opposite_per_point, opposite);
    report.max_opposite_per_point = std::max(report.max_opposite_per_point, opposite);
    const std::size_t on_p = cs.chambers_containing(points[i]).size();
    report.min_chambers_per_point = std::min(report.min_chambers_per_point, on_p);
    report.max_chambers_per_point = std::max(report.max_chambers_per_point, on_p);
  }

  bool word_consistent = true;
  std::optional<ElementId> observed;
  for (ChamberId c = 0; c < cs.size(); ++c) {
    const std::size_t pi = point_index[cs.flag(c)[0]];
    const auto dist = distances_from(cs, std::span<const ChamberId>(&c, 1));
    const auto delta = weyl_distances_from(cs, group, c);
    for (std::size_t qi = 0; qi < points.size(); ++qi) {
      if (qi == pi) continue;
      const auto on_q = cs.chambers_containing(points[qi]);
      int nearest = std::numeric_limits<int>::max();
      for (ChamberId d : on_q) nearest = std::min(nearest, dist[d]);
      if (collinear[pi][qi]) {
        report.collinear_max_distance = std::max(report.collinear_max_distance, nearest);
        continue;
      }
      ++report.chamber_checks;
      bool ok = nearest == 5;
      for (ChamberId d : on_q) {
        if (dist[d] != nearest) continue;
        if (!observed) observed = delta[d];
        if (delta[d] != *observed) word_consistent = false;
        ok = ok && delta[d] == target;
      }
      if (!ok) {
        ++report.failures;
        if (report.failure_samples.size() < 5) {
          report.failure_samples.push_back("chamber " + std::to_string(c) + " -> point " +
                                           polar.label(points[qi]) + ": distance " +
                                           std::to_string(nearest));
        }
      }
    }
  }
  if (observed && word_consistent) report.observed_word = group.normal_form(*observed);
  report.pass = report.failures == 0 && report.chamber_checks > 0;
  if (report.points == 0) report.min_opposite_per_point = report.min_chambers_per_point = 0;
  return report;
}

AlternatingReport verify_alternating_words(const CoxeterGroup& group, int k) {
  if (!(group.matrix() == CoxeterMatrix::f4())) {
    throw Error(ErrorCode::kWrongMatrix, "wrong matrix: alternating words live in F4");
  }
  if (k < 1 || k > 4) {
    throw Error(ErrorCode::kUnsupported,
                "unsupported block count " + std::to_string(k) + " (expected 1..4)");
  }
  const Word a{{1, 2, 3, 2, 1}};
  const Word b{{4, 3, 2, 3, 4}};
  AlternatingReport report;
  report.blocks = k;
  for (const Word* first : {&a, &b}) {
    const Word* second = first == &a ? &b : &a;
    Word w;
    for (int i = 0; i < k; ++i) w = w + (i % 2 == 0 ? *first : *second);
    AlternatingWord entry{w, is_reduced(group, w), group.length(group.evaluate(w))};
    report.pass = report.pass && entry.reduced && entry.length == 5 * k;
    report.words.push_back(std::move(entry));
  }
  return report;
}

}  // namespace chamberlab
