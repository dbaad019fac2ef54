#include "chamberlab/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "chamberlab/error.hpp"

namespace chamberlab {

// ---------------------------------------------------------------------------
// CoxeterMatrix

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> entries)
    : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0 || n > 32) {
    throw Error(ErrorCode::kInvalidMatrix, "invalid matrix: rank must be in [1, 32]");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) {
      throw Error(ErrorCode::kInvalidMatrix, "invalid matrix: not square");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i][i] != 1) {
      throw Error(ErrorCode::kInvalidMatrix,
                  "invalid matrix: diagonal entry m[" + std::to_string(i + 1) + "][" +
                      std::to_string(i + 1) + "] != 1");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int m = entries_[i][j];
      if (m != entries_[j][i]) {
        throw Error(ErrorCode::kInvalidMatrix, "invalid matrix: not symmetric");
      }
      if (m != kInfinity && m < 2) {
        throw Error(ErrorCode::kInvalidMatrix,
                    "invalid matrix: off-diagonal entry m[" + std::to_string(i + 1) + "][" +
                        std::to_string(j + 1) + "] < 2");
      }
    }
  }
}

CoxeterMatrix CoxeterMatrix::f4() {
  return CoxeterMatrix({{1, 3, 2, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}, {2, 2, 3, 1}});
}

CoxeterMatrix CoxeterMatrix::dihedral(int m) { return CoxeterMatrix({{1, m}, {m, 1}}); }

CoxeterMatrix CoxeterMatrix::rank_one() { return CoxeterMatrix(std::vector<std::vector<int>>{{1}}); }

CoxeterMatrix CoxeterMatrix::submatrix(std::span<const Generator> gens) const {
  std::vector<std::vector<int>> sub(gens.size(), std::vector<int>(gens.size()));
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = 0; b < gens.size(); ++b) {
      if (gens[a] < 1 || gens[a] > rank() || gens[b] < 1 || gens[b] > rank()) {
        throw Error(ErrorCode::kLetterOutOfRange, "letter out of range in submatrix");
      }
      sub[a][b] = (*this)(gens[a], gens[b]);
    }
  }
  return CoxeterMatrix(std::move(sub));
}

bool CoxeterMatrix::is_crystallographic() const {
  for (int i = 1; i <= rank(); ++i) {
    for (int j = 1; j <= rank(); ++j) {
      if (i == j) continue;
      const int m = (*this)(i, j);
      if (m != 2 && m != 3 && m != 4 && m != 6) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Words and generator subsets

Word Word::reversed() const {
  return Word{std::vector<Generator>(letters.rbegin(), letters.rend())};
}

Word Word::operator+(const Word& other) const {
  Word out{letters};
  out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
  return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return out;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                              : comma - pos));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kParse,
                  "malformed " + std::string(what) + " '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Word parse_word(std::string_view text) { return Word{parse_int_list(text, "word")}; }

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

GeneratorSubset::GeneratorSubset(std::initializer_list<Generator> gens) {
  for (Generator s : gens) insert(s);
}

GeneratorSubset::GeneratorSubset(std::span<const Generator> gens) {
  for (Generator s : gens) insert(s);
}

GeneratorSubset GeneratorSubset::all(int rank) {
  GeneratorSubset out;
  for (int s = 1; s <= rank; ++s) out.insert(s);
  return out;
}

void GeneratorSubset::insert(Generator s) {
  if (s < 1 || s > 32) {
    throw Error(ErrorCode::kLetterOutOfRange,
                "letter out of range: generator " + std::to_string(s));
  }
  mask_ |= 1u << (s - 1);
}

std::size_t GeneratorSubset::size() const { return std::popcount(mask_); }

std::vector<Generator> GeneratorSubset::indices() const {
  std::vector<Generator> out;
  for (int s = 1; s <= 32; ++s) {
    if (contains(s)) out.push_back(s);
  }
  return out;
}

void GeneratorSubset::check_rank(int rank) const {
  for (Generator s : indices()) {
    if (s > rank) {
      throw Error(ErrorCode::kLetterOutOfRange,
                  "letter out of range: generator " + std::to_string(s) + " exceeds rank " +
                      std::to_string(rank));
    }
  }
}

std::string format_subset(const GeneratorSubset& s) {
  std::string out = "{";
  bool first = true;
  for (Generator g : s.indices()) {
    if (!first) out += ',';
    out += std::to_string(g);
    first = false;
  }
  return out + "}";
}

GeneratorSubset parse_subset(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "-") return {};
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') {
      throw Error(ErrorCode::kParse, "malformed generator subset '" + std::string(text) + "'");
    }
    text = text.substr(1, text.size() - 2);
  }
  const auto values = parse_int_list(text, "generator subset");
  return GeneratorSubset(std::span<const Generator>(values));
}

// ---------------------------------------------------------------------------
// Enumeration backends

namespace {

using Key = std::vector<std::int64_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : k) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Integer reflections on the root lattice of a Kac-Moody Cartan matrix whose
// products a_ij a_ji reproduce m_ij (0, 1, 2, 3 for m = 2, 3, 4, 6). An
// element is keyed by the images of the simple roots.
class RootBackend {
 public:
  explicit RootBackend(const CoxeterMatrix& m) : n_(m.rank()), cartan_(n_ * n_, 0) {
    for (int i = 0; i < n_; ++i) {
      cartan_[i * n_ + i] = 2;
      for (int j = i + 1; j < n_; ++j) {
        int a = 0, b = 0;
        switch (m(i + 1, j + 1)) {
          case 2: a = 0; b = 0; break;
          case 3: a = -1; b = -1; break;
          case 4: a = -1; b = -2; break;
          case 6: a = -1; b = -3; break;
          default:
            throw Error(ErrorCode::kInvalidMatrix, "root backend needs a crystallographic matrix");
        }
        cartan_[i * n_ + j] = a;
        cartan_[j * n_ + i] = b;
      }
    }
  }

  Key identity() const {
    Key k(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) k[i * n_ + i] = 1;
    return k;
  }

  // Column j of the key is the image of the j-th simple root. Right
  // multiplication by s_s maps column j to col_j - a_sj * col_s.
  Key apply(const Key& g, Generator s) const {
    const int si = s - 1;
    Key out = g;
    for (int j = 0; j < n_; ++j) {
      const std::int64_t a = cartan_[si * n_ + j];
      if (a == 0) continue;
      for (int r = 0; r < n_; ++r) out[r * n_ + j] -= a * g[r * n_ + si];
    }
    return out;
  }

 private:
  int n_;
  std::vector<std::int64_t> cartan_;
};

// Word-level equality through braid moves (Matsumoto/Tits). An element is
// keyed by the lexicographically least word of its braid class.
class BraidBackend {
 public:
  static constexpr std::size_t kClassLimit = 2'000'000;

  explicit BraidBackend(const CoxeterMatrix& m) : m_(m) {}

  Key identity() const { return {}; }

  Key apply(const Key& g, Generator s) const {
    Key w = g;
    w.push_back(s);
    auto [cls, cancel] = closure(w);
    if (cancel) {
      const Key& u = cancel->first;
      Key shorter(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(cancel->second));
      shorter.insert(shorter.end(), u.begin() + static_cast<std::ptrdiff_t>(cancel->second) + 2,
                     u.end());
      return *closure(shorter).first.begin();
    }
    return *cls.begin();
  }

 private:
  using Cancellation = std::optional<std::pair<Key, std::size_t>>;

  std::pair<std::set<Key>, Cancellation> closure(const Key& start) const {
    std::set<Key> seen{start};
    std::deque<Key> queue{start};
    Cancellation cancel;
    while (!queue.empty()) {
      Key w = std::move(queue.front());
      queue.pop_front();
      for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k] == w[k + 1]) {
          if (!cancel) cancel = std::make_pair(w, k);
          continue;
        }
        const int m = m_(static_cast<int>(w[k]), static_cast<int>(w[k + 1]));
        if (m == CoxeterMatrix::kInfinity || k + m > w.size()) continue;
        bool alternating = true;
        for (int r = 2; r < m && alternating; ++r) alternating = w[k + r] == w[k + r - 2];
        if (!alternating) continue;
        Key v = w;
        for (int r = 0; r < m; ++r) v[k + r] = (r % 2 == 0) ? w[k + 1] : w[k];
        if (seen.insert(v).second) {
          if (seen.size() > kClassLimit) {
            throw Error(ErrorCode::kCapExceeded, "cap exceeded: braid class too large");
          }
          queue.push_back(std::move(v));
        }
      }
    }
    return {std::move(seen), std::move(cancel)};
  }

  const CoxeterMatrix& m_;
};

template <class Backend>
void enumerate(const Backend& backend, int rank, std::size_t cap, std::vector<Word>& forms,
               std::vector<ElementId>& right) {
  std::unordered_map<Key, ElementId, KeyHash> index;
  std::vector<Key> keys;
  keys.push_back(backend.identity());
  index.emplace(keys.front(), 0);
  forms.push_back(Word{});
  for (std::size_t g = 0; g < keys.size(); ++g) {
    for (Generator s = 1; s <= rank; ++s) {
      Key next = backend.apply(keys[g], s);
      auto it = index.find(next);
      ElementId id;
      if (it == index.end()) {
        if (keys.size() >= cap) {
          throw Error(ErrorCode::kCapExceeded,
                      "cap exceeded: more than " + std::to_string(cap) + " elements");
        }
        id = static_cast<ElementId>(keys.size());
        index.emplace(next, id);
        keys.push_back(std::move(next));
        Word nf = forms[g];
        nf.letters.push_back(s);
        forms.push_back(std::move(nf));
      } else {
        id = it->second;
      }
      right.push_back(id);
    }
  }
}

}  // namespace

CoxeterGroup build_group(const CoxeterMatrix& matrix, std::size_t cap) {
  CoxeterGroup group(matrix);
  const int n = matrix.rank();
  if (matrix.is_crystallographic()) {
    enumerate(RootBackend(matrix), n, cap, group.normal_forms_, group.right_);
  } else {
    enumerate(BraidBackend(matrix), n, cap, group.normal_forms_, group.right_);
  }
  // Left action: s * g is the fold of s followed by the normal form of g.
  const std::size_t order = group.normal_forms_.size();
  group.left_.resize(order * n);
  for (std::size_t g = 0; g < order; ++g) {
    for (Generator s = 1; s <= n; ++s) {
      ElementId x = group.right(CoxeterGroup::identity(), s);
      for (Generator t : group.normal_forms_[g].letters) x = group.right(x, t);
      group.left_[g * n + (s - 1)] = x;
    }
  }
  return group;
}

// ---------------------------------------------------------------------------
// Word problem

GroupElement CoxeterGroup::element(ElementId id) const {
  return GroupElement{id, normal_forms_[id], length(id)};
}

void check_letters(const CoxeterGroup& group, const Word& w) {
  for (Generator s : w.letters) {
    if (s < 1 || s > group.rank()) {
      throw Error(ErrorCode::kLetterOutOfRange,
                  "letter out of range: " + std::to_string(s) + " not in [1, " +
                      std::to_string(group.rank()) + "]");
    }
  }
}

ElementId CoxeterGroup::evaluate(const Word& w) const {
  check_letters(*this, w);
  ElementId g = identity();
  for (Generator s : w.letters) g = right(g, s);
  return g;
}

ElementId CoxeterGroup::multiply(ElementId g, ElementId h) const {
  for (Generator s : normal_forms_[h].letters) g = right(g, s);
  return g;
}

ElementId CoxeterGroup::inverse(ElementId g) const {
  return evaluate(normal_forms_[g].reversed());
}

GroupElement reduce(const CoxeterGroup& group, const Word& w) {
  return group.element(group.evaluate(w));
}

bool is_reduced(const CoxeterGroup& group, const Word& w) {
  return static_cast<std::size_t>(group.length(group.evaluate(w))) == w.size();
}

GroupElement multiply(const CoxeterGroup& group, const GroupElement& g, const GroupElement& h) {
  return group.element(group.multiply(g.id, h.id));
}

GeneratorSubset descents(const CoxeterGroup& group, ElementId g, Side side) {
  GeneratorSubset out;
  const int len = group.length(g);
  for (Generator s = 1; s <= group.rank(); ++s) {
    const ElementId next = side == Side::kLeft ? group.left(s, g) : group.right(g, s);
    if (group.length(next) < len) out.insert(s);
  }
  return out;
}

GroupElement longest_element(const CoxeterGroup& group) {
  int best = -1;
  std::size_t count = 0;
  ElementId arg = 0;
  for (ElementId g = 0; g < group.order(); ++g) {
    const int len = group.length(g);
    if (len > best) {
      best = len;
      arg = g;
      count = 1;
    } else if (len == best) {
      ++count;
    }
  }
  if (count != 1) {
    throw Error(ErrorCode::kNotUnique,
                "not unique: " + std::to_string(count) + " elements of maximal length");
  }
  return group.element(arg);
}

Word greedy_normal_form(const CoxeterGroup& group, ElementId g) {
  Word out;
  while (g != CoxeterGroup::identity()) {
    const auto d = descents(group, g, Side::kLeft).indices();
    out.letters.push_back(d.front());
    g = group.left(d.front(), g);
  }
  return out;
}

int braid_order(const CoxeterGroup& group, Generator i, Generator j) {
  ElementId g = CoxeterGroup::identity();
  int k = 0;
  do {
    g = group.right(group.right(g, i), j);
    ++k;
  } while (g != CoxeterGroup::identity() && static_cast<std::size_t>(k) <= group.order());
  return k;
}

}  // namespace chamberlab
