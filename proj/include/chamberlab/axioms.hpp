#pragma once

// Generalized polygon and metasymplectic axiom checkers.

#include <cstddef>
#include <string>
#include <vector>

#include "chamberlab/geometry.hpp"

namespace chamberlab {

enum class Thickness {
  kAny,
  // Every element incident with at least three others.
  kThick,
  // Every element incident with exactly two others (ordinary polygons).
  kThin,
};

struct NgonReport {
  bool pass = false;
  int n = 0;
  std::size_t points = 0;
  std::size_t lines = 0;
  bool connected = false;
  // -1 when the incidence graph is a forest / disconnected respectively.
  int girth = -1;
  int diameter = -1;
  std::size_t min_point_degree = 0;
  std::size_t max_point_degree = 0;
  std::size_t min_line_degree = 0;
  std::size_t max_line_degree = 0;
  std::string failure;
};

// Incidence graph criterion: connected, diameter n, girth 2n, plus the
// requested thickness. Throws Error(kWrongRank) unless rank 2.
NgonReport check_generalized_ngon(const IncidenceGeometry& geom, int n, Thickness thickness);
NgonReport check_generalized_ngon(const IncidenceGeometry& geom, int n, bool require_thick);

struct AxiomVerdict {
  std::string axiom;  // "M1" .. "M4"
  bool pass = true;
  std::size_t flags_checked = 0;
  // Labels of the first offending flag (or element pair for M4).
  std::vector<std::string> witness;
  std::string detail;
};

struct MetasymplecticReport {
  bool pass = true;
  bool thin_mode = false;
  std::vector<AxiomVerdict> axioms;
};

// Types are read positionally as point, line, plane, hyperline. In thin
// mode projective planes / quadrangles / digons become ordinary triangles /
// quadrangles / digons. Throws Error(kWrongRank) unless rank 4.
MetasymplecticReport check_metasymplectic(const IncidenceGeometry& geom, bool thin_mode);

}  // namespace chamberlab
