#pragma once

// Multi-sorted incidence geometries, their residues and flag complexes, and
// the concrete geometries used throughout: Desarguesian planes of order
// 2, 3, 4, the symplectic quadrangle W(2), the rank 3 symplectic polar space
// over GF(2) and the thin coset geometry of a Coxeter group.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "chamberlab/chambers.hpp"
#include "chamberlab/coxeter.hpp"

namespace chamberlab {

class IncidenceGeometry {
 public:
  std::size_t rank() const { return type_names_.size(); }
  const std::vector<std::string>& type_names() const { return type_names_; }
  std::size_t num_elements() const { return types_.size(); }

  std::size_t type_of(ElementId e) const { return types_[e]; }
  const std::string& label(ElementId e) const { return labels_[e]; }
  // Sorted neighbours in the incidence graph.
  std::span<const ElementId> incident(ElementId e) const { return incidence_[e]; }
  bool incident(ElementId a, ElementId b) const;

  // Sorted, in id order.
  std::span<const ElementId> elements_of_type(std::size_t type) const { return by_type_[type]; }
  // Incident elements of type `type`.
  std::vector<ElementId> incident_of_type(ElementId e, std::size_t type) const;
  // Incident points (type 0).
  std::vector<ElementId> shadow(ElementId e) const { return incident_of_type(e, 0); }

  // Lookup by label; throws Error(kParse) if absent.
  ElementId find(const std::string& label) const;

 private:
  friend class GeometryBuilder;

  std::vector<std::string> type_names_;
  std::vector<std::size_t> types_;
  std::vector<std::string> labels_;
  std::vector<std::vector<ElementId>> incidence_;
  std::vector<std::vector<ElementId>> by_type_;
};

class GeometryBuilder {
 public:
  explicit GeometryBuilder(std::vector<std::string> type_names);

  // Label defaults to the element id.
  ElementId add_element(std::size_t type, std::string label = {});
  // Throws Error(kTypeMismatch) when both elements have the same type.
  void add_incidence(ElementId a, ElementId b);

  std::size_t num_elements() const { return geom_.types_.size(); }

  IncidenceGeometry build() &&;

 private:
  IncidenceGeometry geom_;
};

struct Flag {
  std::vector<ElementId> elements;
};

// Throws Error(kInvalidFlag) unless the elements are pairwise incident with
// pairwise distinct types.
void check_flag(const IncidenceGeometry& geom, const Flag& f);

// Elements outside f incident with all of f; keeps the types not used by f,
// labels and relative order. `origin`, when given, receives the parent id of
// every residue element.
IncidenceGeometry residue(const IncidenceGeometry& geom, const Flag& f,
                          std::vector<ElementId>* origin = nullptr);

// Same geometry with element i renamed to perm[i] (labels travel along).
IncidenceGeometry relabel(const IncidenceGeometry& geom, std::span<const ElementId> perm);

// Swap of the two types of a rank 2 geometry.
IncidenceGeometry dual(const IncidenceGeometry& geom);

// Chambers are flags with one element of every type; element ids are the
// geometry's ids.
ChamberSystem flag_complex(const IncidenceGeometry& geom);

// Rebuild a geometry from a chamber system: incidence = lying in a common
// chamber.
IncidenceGeometry geometry_of(const ChamberSystem& cs, std::vector<std::string> type_names);

// ---------------------------------------------------------------------------
// Constructions

// PG(2, q) for q in {2, 3, 4}; throws Error(kUnsupported) otherwise.
IncidenceGeometry build_projective_plane(int q);
// Points and totally isotropic lines of PG(3, 2) for the standard
// alternating form.
IncidenceGeometry build_w2();
// Points, lines and planes of the rank 3 symplectic polar space over GF(2).
IncidenceGeometry build_sp6_polar();
// Maximal-parabolic coset geometry of any finite Coxeter group: type t
// elements are the cosets g W_{S \ {t+1}}.
IncidenceGeometry coset_geometry(const CoxeterGroup& group, std::vector<std::string> type_names);
// coset_geometry for the F4 group with types point, line, plane, hyperline.
// Throws Error(kWrongMatrix) for any other matrix.
IncidenceGeometry thin_f4_geometry(const CoxeterGroup& group);
// The 6-point octahedron: coset geometry of the {1,2,3} parabolic of F4.
IncidenceGeometry thin_octahedron(const CoxeterGroup& c3_group);

// Complete bipartite point/line geometry (a generalized digon).
IncidenceGeometry complete_bipartite(std::size_t points, std::size_t lines);

// ---------------------------------------------------------------------------
// Text format
//
//   type <name>          in type order
//   el <type> <id>
//   inc <id> <id>
//
// Blank lines and lines starting with '#' are ignored. Parse errors throw
// Error(kParse) with the offending line number.
IncidenceGeometry read_geometry(std::istream& is);
void write_geometry(std::ostream& os, const IncidenceGeometry& geom);

}  // namespace chamberlab
