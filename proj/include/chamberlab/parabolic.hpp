#pragma once

// Standard parabolic subgroups W_J, double cosets W_I g W_J and their
// minimal-length representatives.

#include <cstddef>
#include <vector>

#include "chamberlab/coxeter.hpp"

namespace chamberlab {

// Sorted ids of W_J.
std::vector<ElementId> parabolic_elements(const CoxeterGroup& group, const GeneratorSubset& J);

// Sorted ids of W_I g W_J, by closure under left I / right J moves.
std::vector<ElementId> double_coset(const CoxeterGroup& group, const GeneratorSubset& I,
                                    ElementId g, const GeneratorSubset& J);

// Greedy descent: keep multiplying by s in I on the left or t in J on the
// right while that shortens the element.
GroupElement min_double_coset_rep(const CoxeterGroup& group, const GeneratorSubset& I,
                                  const GroupElement& g, const GeneratorSubset& J);

struct DoubleCosetRecord {
  GeneratorSubset left;
  GeneratorSubset right;
  GroupElement min_rep;
  std::vector<ElementId> member_ids;
};

// Partition of the whole group, sorted by (min_rep length, min_rep ShortLex).
std::vector<DoubleCosetRecord> enumerate_double_cosets(const CoxeterGroup& group,
                                                       const GeneratorSubset& I,
                                                       const GeneratorSubset& J);

struct LemmaClaim {
  GeneratorSubset left;
  Word word;
  GeneratorSubset right;
};

struct ClaimVerdict {
  LemmaClaim claim;
  bool reduced = false;
  // reduce(w) equals the greedy-descent representative.
  bool greedy_minimal = false;
  // reduce(w) is the unique shortest member of the extensionally enumerated
  // coset.
  bool exhaustive_minimal = false;
  GroupElement element;
  GroupElement min_rep;
  std::size_t coset_size = 0;
  std::size_t minimal_members = 0;

  bool pass() const { return reduced && greedy_minimal && exhaustive_minimal; }
};

struct LemmaReport {
  std::vector<ClaimVerdict> verdicts;
  bool pass = true;
};

// The eight double cosets (W_{2,3,4}/W_{1,2,3} on either side) whose
// printed representatives alternate the blocks 1,2,3,2,1 and 4,3,2,3,4.
std::vector<LemmaClaim> shipped_lemma_claims();

// Throws Error(kLetterOutOfRange) on a claim outside the group's rank.
LemmaReport verify_lemma_reps(const CoxeterGroup& group, const std::vector<LemmaClaim>& claims);

}  // namespace chamberlab
