#pragma once

// Mutual positions in a 4-typed point/line/plane/hyperline geometry: point
// pairs, point-hyperline pairs, hyperline intersections and planar cliques.
// Uniqueness is never assumed; every classifier reports how many witnesses
// it saw so callers can flag models where the classical uniqueness fails.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "chamberlab/geometry.hpp"

namespace chamberlab {

enum class PointRelation { kEqual, kCollinear, kCohyperlinear, kAlmostOpposite, kOpposite };
enum class PointHyperlineRelation { kIncident, kNear, kFar };
enum class HyperlineMeet { kEmpty, kPoint, kPlane, kOther };

std::string_view to_string(PointRelation r);
std::string_view to_string(PointHyperlineRelation r);
std::string_view to_string(HyperlineMeet r);

struct PointPairResult {
  PointRelation relation = PointRelation::kEqual;
  // Common line, common hyperline or common neighbour, depending on the
  // relation; empty for equal/opposite.
  std::optional<ElementId> witness;
  std::size_t witness_count = 0;

  bool unique() const { return witness_count <= 1; }
};

struct PointHyperlineResult {
  PointHyperlineRelation relation = PointHyperlineRelation::kIncident;
  // The line L (near) or the point u (far).
  std::optional<ElementId> witness;
  std::size_t witness_count = 0;

  bool unique() const { return witness_count == 1 || relation == PointHyperlineRelation::kIncident; }
};

struct HyperlineMeetResult {
  HyperlineMeet kind = HyperlineMeet::kEmpty;
  // The common point or the plane whose shadow is the intersection.
  std::optional<ElementId> witness;
  std::vector<ElementId> intersection;
};

// Throws Error(kWrongRank) unless rank 4 and Error(kTypeMismatch) unless
// both arguments are points.
PointPairResult classify_point_pair(const IncidenceGeometry& geom, ElementId x, ElementId y);
PointHyperlineResult classify_point_hyperline(const IncidenceGeometry& geom, ElementId x,
                                              ElementId h);
HyperlineMeetResult hyperline_intersection(const IncidenceGeometry& geom, ElementId h,
                                           ElementId g);

// Points sharing a line with x, x excluded (sorted).
std::vector<ElementId> collinear_points(const IncidenceGeometry& geom, ElementId x);
bool collinear(const IncidenceGeometry& geom, ElementId x, ElementId y);

struct CliqueResult {
  bool contained = false;
  std::optional<ElementId> plane;
};

// Throws Error(kNotAClique) if two points of X are not collinear.
CliqueResult clique_in_plane(const IncidenceGeometry& geom, std::vector<ElementId> X);

// Maximal sets of pairwise collinear points (Bron-Kerbosch with pivoting).
std::vector<std::vector<ElementId>> maximal_collinear_cliques(const IncidenceGeometry& geom);

}  // namespace chamberlab
