#pragma once

// Quadrangles embedded in a 4-typed geometry as points and hyperlines:
// condition (OV), the proper/improper dichotomy and the shipped fixtures.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chamberlab/axioms.hpp"
#include "chamberlab/coxeter.hpp"
#include "chamberlab/geometry.hpp"

namespace chamberlab {

struct EmbeddedQuadrangle {
  IncidenceGeometry ambient;
  std::vector<ElementId> points;      // P
  std::vector<ElementId> hyperlines;  // H
};

// P and H with the restricted incidence, as a point/line geometry. Labels
// are the ambient labels.
IncidenceGeometry quadrangle_geometry(const EmbeddedQuadrangle& e);

// Generalized quadrangle check of quadrangle_geometry(e).
NgonReport check_quadrangle(const EmbeddedQuadrangle& e, Thickness thickness);

struct OvViolation {
  ElementId hyperline;
  ElementId x;
  ElementId y;
  ElementId line;  // the ambient line through x and y
};

struct OvReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::vector<OvViolation> violations;
};

// No two points of P on a common hyperline of H are collinear in the
// ambient geometry.
OvReport check_ov(const EmbeddedQuadrangle& e);

struct LineChoice {
  ElementId point;
  // Common line of all hyperlines of H through the point, preferring one
  // through the point itself.
  std::optional<ElementId> line;
  bool through_point = false;
};

struct EmbeddingReport {
  bool improper = false;
  // Proper: a point and two hyperlines of H through it sharing no line.
  std::optional<ElementId> witness_point;
  std::optional<ElementId> witness_h;
  std::optional<ElementId> witness_g;
  // Improper: one entry per point of P.
  std::vector<LineChoice> line_map;
  // Points where pairwise line-sharing holds but no common line exists.
  std::vector<ElementId> missing_common_line;
};

EmbeddingReport classify_embedding(const EmbeddedQuadrangle& e);

// Shipped fixtures.
//
// ov_pass_fixture: an ordinary quadrangle in the thin F4 geometry whose
// quadrangle-collinear points are cohyperlinear and whose diagonals are
// opposite. (OV) holds and the embedding is proper.
EmbeddedQuadrangle ov_pass_fixture(const CoxeterGroup& f4);
// ov_violation_fixture: a hand-built ambient in which the first hyperline
// of the quadrangle carries two points on a common ambient line.
EmbeddedQuadrangle ov_violation_fixture();
// improper_fixture: an ordinary quadrangle in the thin F4 geometry whose two
// hyperlines through every point share a line through that point.
EmbeddedQuadrangle improper_fixture(const CoxeterGroup& f4);

EmbeddedQuadrangle make_fixture(const std::string& name, const CoxeterGroup& f4);
std::vector<std::string> fixture_names();

}  // namespace chamberlab
