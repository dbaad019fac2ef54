#pragma once

// Coxeter presentations, exact enumeration of finite Coxeter groups and the
// word problem on top of the enumerated tables.
//
// Generators are 1-based everywhere (s_1 .. s_rank). Element ids are dense,
// assigned in breadth-first ShortLex order, so id 0 is the identity and ids
// sort elements first by length and then lexicographically by normal form.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chamberlab {

using ElementId = std::uint32_t;
using Generator = int;

class CoxeterMatrix {
 public:
  // Entry used for m_ij = infinity.
  static constexpr int kInfinity = 0;

  // Throws Error(kInvalidMatrix) unless square, m_ii = 1 and
  // m_ij = m_ji >= 2 (or kInfinity) off the diagonal.
  explicit CoxeterMatrix(std::vector<std::vector<int>> entries);

  static CoxeterMatrix f4();
  static CoxeterMatrix dihedral(int m);
  static CoxeterMatrix rank_one();

  int rank() const { return static_cast<int>(entries_.size()); }
  // 1-based access.
  int operator()(Generator i, Generator j) const { return entries_[i - 1][j - 1]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  // Restriction to the listed generators, renumbered 1..gens.size() in the
  // given order.
  CoxeterMatrix submatrix(std::span<const Generator> gens) const;

  // All off-diagonal orders in {2, 3, 4, 6}.
  bool is_crystallographic() const;

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  std::vector<std::vector<int>> entries_;
};

struct Word {
  std::vector<Generator> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Word reversed() const;
  Word operator+(const Word& other) const;
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

// "1,2,3,2,1" <-> {1,2,3,2,1}. The empty string is the empty word.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

// A set of generator indices, stored as a bit mask (bit i-1 for s_i).
class GeneratorSubset {
 public:
  GeneratorSubset() = default;
  GeneratorSubset(std::initializer_list<Generator> gens);
  explicit GeneratorSubset(std::span<const Generator> gens);

  static GeneratorSubset all(int rank);

  bool contains(Generator s) const { return s >= 1 && s <= 32 && (mask_ >> (s - 1)) & 1u; }
  void insert(Generator s);
  bool empty() const { return mask_ == 0; }
  std::size_t size() const;
  std::vector<Generator> indices() const;
  std::uint32_t mask() const { return mask_; }
  // Throws Error(kLetterOutOfRange) when some index exceeds rank.
  void check_rank(int rank) const;

  bool operator==(const GeneratorSubset&) const = default;
  auto operator<=>(const GeneratorSubset&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

// "{2,3,4}" style; empty set prints as "{}".
std::string format_subset(const GeneratorSubset& s);
// Accepts "2,3,4", "{2,3,4}", "" and "-" (the last two are the empty set).
GeneratorSubset parse_subset(std::string_view text);

struct GroupElement {
  ElementId id = 0;
  Word normal_form;
  int length = 0;

  bool operator==(const GroupElement&) const = default;
};

class CoxeterGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10000;

  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rank(); }
  std::size_t order() const { return normal_forms_.size(); }

  static constexpr ElementId identity() { return 0; }
  GroupElement element(ElementId id) const;
  const Word& normal_form(ElementId id) const { return normal_forms_[id]; }
  int length(ElementId id) const { return static_cast<int>(normal_forms_[id].size()); }

  // g * s_s and s_s * g.
  ElementId right(ElementId g, Generator s) const {
    return right_[static_cast<std::size_t>(g) * rank() + (s - 1)];
  }
  ElementId left(Generator s, ElementId g) const {
    return left_[static_cast<std::size_t>(g) * rank() + (s - 1)];
  }

  // Folds the word through the right action starting at the identity.
  // Throws Error(kLetterOutOfRange).
  ElementId evaluate(const Word& w) const;
  ElementId multiply(ElementId g, ElementId h) const;
  ElementId inverse(ElementId g) const;

 private:
  friend CoxeterGroup build_group(const CoxeterMatrix& matrix, std::size_t cap);

  explicit CoxeterGroup(CoxeterMatrix matrix) : matrix_(std::move(matrix)) {}

  CoxeterMatrix matrix_;
  std::vector<Word> normal_forms_;
  std::vector<ElementId> right_;
  std::vector<ElementId> left_;
};

// Enumerates the group breadth-first. Crystallographic matrices are
// realized by integer reflections on the root lattice; everything else
// falls back to braid-move closure of words. Throws Error(kCapExceeded)
// when more than `cap` elements are discovered.
CoxeterGroup build_group(const CoxeterMatrix& matrix,
                         std::size_t cap = CoxeterGroup::kDefaultCap);

void check_letters(const CoxeterGroup& group, const Word& w);

GroupElement reduce(const CoxeterGroup& group, const Word& w);
bool is_reduced(const CoxeterGroup& group, const Word& w);
GroupElement multiply(const CoxeterGroup& group, const GroupElement& g,
                      const GroupElement& h);

enum class Side { kLeft, kRight };

GeneratorSubset descents(const CoxeterGroup& group, ElementId g, Side side);
GroupElement longest_element(const CoxeterGroup& group);

// Lexicographically least reduced word, built by repeatedly peeling off the
// least left descent. Agrees with the stored normal forms; kept separate so
// the two constructions can be checked against each other.
Word greedy_normal_form(const CoxeterGroup& group, ElementId g);

// Order of s_i s_j in the enumerated group.
int braid_order(const CoxeterGroup& group, Generator i, Generator j);

}  // namespace chamberlab
