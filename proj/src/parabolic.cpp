#include "chamberlab/parabolic.hpp"

#include <algorithm>

namespace chamberlab {

std::vector<ElementId> parabolic_elements(const CoxeterGroup& group, const GeneratorSubset& J) {
  return double_coset(group, GeneratorSubset{}, CoxeterGroup::identity(), J);
}

std::vector<ElementId> double_coset(const CoxeterGroup& group, const GeneratorSubset& I,
                                    ElementId g, const GeneratorSubset& J) {
  I.check_rank(group.rank());
  J.check_rank(group.rank());
  const auto left_gens = I.indices();
  const auto right_gens = J.indices();
  std::vector<char> seen(group.order(), 0);
  std::vector<ElementId> members{g};
  seen[g] = 1;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const ElementId x = members[k];
    auto visit = [&](ElementId y) {
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    };
    for (Generator s : left_gens) visit(group.left(s, x));
    for (Generator t : right_gens) visit(group.right(x, t));
  }
  std::sort(members.begin(), members.end());
  return members;
}

GroupElement min_double_coset_rep(const CoxeterGroup& group, const GeneratorSubset& I,
                                  const GroupElement& g, const GeneratorSubset& J) {
  I.check_rank(group.rank());
  J.check_rank(group.rank());
  ElementId x = g.id;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Generator s : I.indices()) {
      const ElementId y = group.left(s, x);
      if (group.length(y) < group.length(x)) {
        x = y;
        changed = true;
      }
    }
    for (Generator t : J.indices()) {
      const ElementId y = group.right(x, t);
      if (group.length(y) < group.length(x)) {
        x = y;
        changed = true;
      }
    }
  }
  return group.element(x);
}

std::vector<DoubleCosetRecord> enumerate_double_cosets(const CoxeterGroup& group,
                                                       const GeneratorSubset& I,
                                                       const GeneratorSubset& J) {
  std::vector<char> assigned(group.order(), 0);
  std::vector<DoubleCosetRecord> out;
  // Ids are ShortLex ordered, so the first unassigned id is the shortest,
  // ShortLex-least member of its coset.
  for (ElementId g = 0; g < group.order(); ++g) {
    if (assigned[g]) continue;
    auto members = double_coset(group, I, g, J);
    for (ElementId m : members) assigned[m] = 1;
    out.push_back(DoubleCosetRecord{I, J, group.element(members.front()), std::move(members)});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.min_rep.length != b.min_rep.length) return a.min_rep.length < b.min_rep.length;
    return a.min_rep.normal_form < b.min_rep.normal_form;
  });
  return out;
}

std::vector<LemmaClaim> shipped_lemma_claims() {
  const Word a{{1, 2, 3, 2, 1}};
  const Word b{{4, 3, 2, 3, 4}};
  const GeneratorSubset w234{2, 3, 4};
  const GeneratorSubset w123{1, 2, 3};
  return {
      {w234, a, w234},
      {w123, b, w123},
      {w123, b + a, w234},
      {w234, a + b, w123},
      {w234, a + b + a, w234},
      {w123, b + a + b, w123},
      {w234, a + b + a + b, w123},
      {w123, b + a + b + a, w234},
  };
}

LemmaReport verify_lemma_reps(const CoxeterGroup& group, const std::vector<LemmaClaim>& claims) {
  LemmaReport report;
  for (const auto& claim : claims) {
    check_letters(group, claim.word);
    claim.left.check_rank(group.rank());
    claim.right.check_rank(group.rank());

    ClaimVerdict v;
    v.claim = claim;
    v.element = reduce(group, claim.word);
    v.reduced = static_cast<std::size_t>(v.element.length) == claim.word.size();
    v.min_rep = min_double_coset_rep(group, claim.left, v.element, claim.right);
    v.greedy_minimal = v.min_rep.id == v.element.id;

    const auto members = double_coset(group, claim.left, v.element.id, claim.right);
    v.coset_size = members.size();
    int shortest = group.length(members.front());
    for (ElementId m : members) shortest = std::min(shortest, group.length(m));
    v.minimal_members = static_cast<std::size_t>(std::count_if(
        members.begin(), members.end(), [&](ElementId m) { return group.length(m) == shortest; }));
    v.exhaustive_minimal = v.element.length == shortest && v.minimal_members == 1;

    report.pass = report.pass && v.pass();
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

}  // namespace chamberlab
