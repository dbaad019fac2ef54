#pragma once

// Chamber systems built from typed flags: galleries and their words,
// gallery distance (plain BFS), Weyl distance (word folding), projections of
// flags onto flags and convexity of element sets.
//
// A chamber is stored as its flag: one element id per type. Types are
// 0-based here; type t changes correspond to generator t + 1 in gallery
// words.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "chamberlab/coxeter.hpp"

namespace chamberlab {

using ChamberId = std::uint32_t;

class ChamberSystem {
 public:
  // `flags[c][t]` is the type-t element of chamber c; element ids must be
  // dense in [0, num_elements). Panels are derived: two chambers are
  // t-adjacent iff their flags agree off type t.
  ChamberSystem(std::size_t rank, std::vector<std::vector<ElementId>> flags,
                std::size_t num_elements);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return flags_.size(); }
  std::size_t num_elements() const { return element_type_.size(); }

  std::span<const ElementId> flag(ChamberId c) const { return flags_[c]; }
  // Type of an element, or -1 if no chamber contains it.
  int element_type(ElementId e) const { return element_type_[e]; }
  std::span<const ChamberId> chambers_containing(ElementId e) const { return containing_[e]; }

  std::size_t num_panels(std::size_t type) const { return panels_[type].size(); }
  std::span<const ChamberId> panel(std::size_t type, std::size_t panel_id) const {
    return panels_[type][panel_id];
  }
  std::size_t panel_of(std::size_t type, ChamberId c) const { return panel_of_[type][c]; }
  std::span<const ChamberId> panel_containing(std::size_t type, ChamberId c) const {
    return panels_[type][panel_of_[type][c]];
  }

  // Type of the unique adjacency between two distinct chambers.
  std::optional<std::size_t> adjacency_type(ChamberId a, ChamberId b) const;

  // Two elements are incident iff some chamber contains both.
  bool incident(ElementId a, ElementId b) const;

  bool is_connected() const;

 private:
  std::size_t rank_;
  std::vector<std::vector<ElementId>> flags_;
  std::vector<int> element_type_;
  std::vector<std::vector<ChamberId>> containing_;
  std::vector<std::vector<std::vector<ChamberId>>> panels_;
  std::vector<std::vector<std::size_t>> panel_of_;
};

// Chambers are group elements; the type-t element of chamber c is the coset
// c W_{S \ {t+1}}, numbered per type with offsets so ids are global.
ChamberSystem coxeter_complex(const CoxeterGroup& group);

struct Gallery {
  std::vector<ChamberId> steps;
};

Gallery parse_gallery(std::string_view text);

// Throws Error(kNotAGallery) if a step repeats a chamber or is no adjacency.
Word gallery_word(const ChamberSystem& cs, const Gallery& g);

// Multi-source BFS; unreachable chambers get -1.
std::vector<int> distances_from(const ChamberSystem& cs, std::span<const ChamberId> sources);

// Throws Error(kDisconnected) if d cannot be reached from c.
int gallery_distance(const ChamberSystem& cs, ChamberId c, ChamberId d);

// Weyl distance from c to every chamber, folded along all minimal galleries.
// Throws Error(kNonBuildingSystem) if two minimal galleries into the same
// chamber fold to different elements, Error(kWrongRank) if the group has
// fewer generators than the system has types.
std::vector<ElementId> weyl_distances_from(const ChamberSystem& cs, const CoxeterGroup& group,
                                           ChamberId c);

GroupElement weyl_distance(const ChamberSystem& cs, const CoxeterGroup& group, ChamberId c,
                           ChamberId d);

bool is_minimal_gallery(const ChamberSystem& cs, const CoxeterGroup& group, const Gallery& g);

struct FlagResidue {
  std::vector<ElementId> flag;
  std::vector<ChamberId> chambers;
};

// Chambers containing every element of `flag` (sorted).
FlagResidue flag_residue(const ChamberSystem& cs, std::vector<ElementId> flag);

// Intersection of the chamber flags of all chambers of B nearest to A.
std::vector<ElementId> projection(const ChamberSystem& cs, const FlagResidue& A,
                                  const FlagResidue& B);

struct ConvexityReport {
  bool convex = true;
  std::size_t flags_checked = 0;
  // First offending pair, with the projection that leaves the set.
  std::vector<ElementId> witness_from;
  std::vector<ElementId> witness_onto;
  std::vector<ElementId> witness_projection;
};

// Flags are the non-empty subsets of S with at most one element per type
// that lie in a common chamber.
ConvexityReport check_convex(const ChamberSystem& cs, std::span<const ElementId> S);
bool is_convex(const ChamberSystem& cs, std::span<const ElementId> S);

// `panel <type> <chamber> <chamber> ...`, one line per panel, type 1-based.
void write_chamber_system(std::ostream& os, const ChamberSystem& cs);

}  // namespace chamberlab
