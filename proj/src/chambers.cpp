#include "chamberlab/chambers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>

#include "chamberlab/error.hpp"
#include "chamberlab/parabolic.hpp"

namespace chamberlab {

namespace {

constexpr ElementId kBlank = static_cast<ElementId>(-1);

}  // namespace

ChamberSystem::ChamberSystem(std::size_t rank, std::vector<std::vector<ElementId>> flags,
                             std::size_t num_elements)
    : rank_(rank),
      flags_(std::move(flags)),
      element_type_(num_elements, -1),
      containing_(num_elements) {
  for (ChamberId c = 0; c < flags_.size(); ++c) {
    if (flags_[c].size() != rank_) {
      throw Error(ErrorCode::kInvalidFlag,
                  "invalid flag: chamber " + std::to_string(c) + " has wrong size");
    }
    for (std::size_t t = 0; t < rank_; ++t) {
      const ElementId e = flags_[c][t];
      if (e >= num_elements) {
        throw Error(ErrorCode::kInvalidFlag, "invalid flag: element id out of range");
      }
      if (element_type_[e] != -1 && element_type_[e] != static_cast<int>(t)) {
        throw Error(ErrorCode::kInvalidFlag,
                    "invalid flag: element " + std::to_string(e) + " used with two types");
      }
      element_type_[e] = static_cast<int>(t);
      containing_[e].push_back(c);
    }
  }

  panels_.resize(rank_);
  panel_of_.assign(rank_, std::vector<std::size_t>(flags_.size()));
  for (std::size_t t = 0; t < rank_; ++t) {
    std::map<std::vector<ElementId>, std::size_t> index;
    for (ChamberId c = 0; c < flags_.size(); ++c) {
      std::vector<ElementId> key = flags_[c];
      key[t] = kBlank;
      auto [it, inserted] = index.emplace(std::move(key), panels_[t].size());
      if (inserted) panels_[t].emplace_back();
      panels_[t][it->second].push_back(c);
      panel_of_[t][c] = it->second;
    }
  }
  // Duplicate chambers would be adjacent in every type at once.
  if (rank_ > 0) {
    for (const auto& panel : panels_[0]) {
      for (std::size_t i = 0; i < panel.size(); ++i) {
        for (std::size_t j = i + 1; j < panel.size(); ++j) {
          if (flags_[panel[i]][0] == flags_[panel[j]][0]) {
            throw Error(ErrorCode::kInvalidFlag, "invalid flag: duplicate chamber");
          }
        }
      }
    }
  }
}

std::optional<std::size_t> ChamberSystem::adjacency_type(ChamberId a, ChamberId b) const {
  if (a == b || a >= size() || b >= size()) return std::nullopt;
  for (std::size_t t = 0; t < rank_; ++t) {
    if (panel_of_[t][a] == panel_of_[t][b]) return t;
  }
  return std::nullopt;
}

bool ChamberSystem::incident(ElementId a, ElementId b) const {
  const auto& ca = containing_[a];
  const auto& cb = containing_[b];
  auto i = ca.begin();
  auto j = cb.begin();
  while (i != ca.end() && j != cb.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool ChamberSystem::is_connected() const {
  if (size() == 0) return true;
  const ChamberId start = 0;
  const auto dist = distances_from(*this, std::span<const ChamberId>(&start, 1));
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

ChamberSystem coxeter_complex(const CoxeterGroup& group) {
  const int n = group.rank();
  std::vector<std::vector<ElementId>> flags(group.order(), std::vector<ElementId>(n));
  ElementId next = 0;
  for (int t = 0; t < n; ++t) {
    GeneratorSubset rest = GeneratorSubset::all(n);
    GeneratorSubset without;
    for (Generator s : rest.indices()) {
      if (s != t + 1) without.insert(s);
    }
    std::vector<char> done(group.order(), 0);
    for (ElementId g = 0; g < group.order(); ++g) {
      if (done[g]) continue;
      for (ElementId m : double_coset(group, GeneratorSubset{}, g, without)) {
        done[m] = 1;
        flags[m][t] = next;
      }
      ++next;
    }
  }
  return ChamberSystem(static_cast<std::size_t>(n), std::move(flags), next);
}

Gallery parse_gallery(std::string_view text) {
  Gallery g;
  for (int v : parse_word(text).letters) {
    if (v < 0) throw Error(ErrorCode::kParse, "negative chamber id in gallery");
    g.steps.push_back(static_cast<ChamberId>(v));
  }
  return g;
}

Word gallery_word(const ChamberSystem& cs, const Gallery& g) {
  Word w;
  for (std::size_t k = 0; k < g.steps.size(); ++k) {
    if (g.steps[k] >= cs.size()) {
      throw Error(ErrorCode::kNotAGallery,
                  "not a gallery: chamber " + std::to_string(g.steps[k]) + " out of range");
    }
    if (k == 0) continue;
    const auto t = cs.adjacency_type(g.steps[k - 1], g.steps[k]);
    if (!t) {
      throw Error(ErrorCode::kNotAGallery,
                  "not a gallery: step " + std::to_string(k) + " (" +
                      std::to_string(g.steps[k - 1]) + " -> " + std::to_string(g.steps[k]) +
                      ") is not an adjacency");
    }
    w.letters.push_back(static_cast<Generator>(*t + 1));
  }
  return w;
}

std::vector<int> distances_from(const ChamberSystem& cs, std::span<const ChamberId> sources) {
  std::vector<int> dist(cs.size(), -1);
  std::deque<ChamberId> queue;
  for (ChamberId s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const ChamberId x = queue.front();
    queue.pop_front();
    for (std::size_t t = 0; t < cs.rank(); ++t) {
      for (ChamberId y : cs.panel_containing(t, x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return dist;
}

int gallery_distance(const ChamberSystem& cs, ChamberId c, ChamberId d) {
  const int dist = distances_from(cs, std::span<const ChamberId>(&c, 1))[d];
  if (dist < 0) {
    throw Error(ErrorCode::kDisconnected, "disconnected: no gallery from " + std::to_string(c) +
                                              " to " + std::to_string(d));
  }
  return dist;
}

std::vector<ElementId> weyl_distances_from(const ChamberSystem& cs, const CoxeterGroup& group,
                                           ChamberId c) {
  if (static_cast<std::size_t>(group.rank()) < cs.rank()) {
    throw Error(ErrorCode::kWrongRank, "wrong rank: group has fewer generators than types");
  }
  constexpr ElementId kUnset = static_cast<ElementId>(-1);
  std::vector<int> dist(cs.size(), -1);
  std::vector<ElementId> delta(cs.size(), kUnset);
  std::deque<ChamberId> queue{c};
  dist[c] = 0;
  delta[c] = CoxeterGroup::identity();
  while (!queue.empty()) {
    const ChamberId x = queue.front();
    queue.pop_front();
    for (std::size_t t = 0; t < cs.rank(); ++t) {
      const ElementId step = group.right(delta[x], static_cast<Generator>(t + 1));
      for (ChamberId y : cs.panel_containing(t, x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          delta[y] = step;
          queue.push_back(y);
        } else if (dist[y] == dist[x] + 1 && delta[y] != step) {
          throw Error(ErrorCode::kNonBuildingSystem,
                      "non-building system: minimal galleries from " + std::to_string(c) +
                          " to " + std::to_string(y) + " fold to different elements");
        }
      }
    }
  }
  return delta;
}

GroupElement weyl_distance(const ChamberSystem& cs, const CoxeterGroup& group, ChamberId c,
                           ChamberId d) {
  const ElementId w = weyl_distances_from(cs, group, c)[d];
  if (w == static_cast<ElementId>(-1)) {
    throw Error(ErrorCode::kDisconnected, "disconnected: no gallery from " + std::to_string(c) +
                                              " to " + std::to_string(d));
  }
  return group.element(w);
}

bool is_minimal_gallery(const ChamberSystem& cs, const CoxeterGroup& group, const Gallery& g) {
  const Word w = gallery_word(cs, g);
  check_letters(group, w);
  if (g.steps.empty()) return true;
  return static_cast<int>(w.size()) == gallery_distance(cs, g.steps.front(), g.steps.back());
}

FlagResidue flag_residue(const ChamberSystem& cs, std::vector<ElementId> flag) {
  std::sort(flag.begin(), flag.end());
  flag.erase(std::unique(flag.begin(), flag.end()), flag.end());
  FlagResidue r;
  r.flag = flag;
  if (flag.empty()) {
    r.chambers.resize(cs.size());
    for (ChamberId c = 0; c < cs.size(); ++c) r.chambers[c] = c;
    return r;
  }
  for (ElementId e : flag) {
    if (e >= cs.num_elements() || cs.element_type(e) < 0) {
      throw Error(ErrorCode::kInvalidFlag, "invalid flag: unknown element " + std::to_string(e));
    }
  }
  for (ChamberId c : cs.chambers_containing(flag.front())) {
    const auto f = cs.flag(c);
    if (std::all_of(flag.begin(), flag.end(), [&](ElementId e) {
          return f[static_cast<std::size_t>(cs.element_type(e))] == e;
        })) {
      r.chambers.push_back(c);
    }
  }
  return r;
}

namespace {

std::vector<ElementId> sorted_flag(const ChamberSystem& cs, ChamberId c) {
  std::vector<ElementId> f(cs.flag(c).begin(), cs.flag(c).end());
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<ElementId> project_with(const ChamberSystem& cs, const std::vector<int>& dist,
                                    const FlagResidue& B) {
  int best = -1;
  for (ChamberId b : B.chambers) {
    if (dist[b] >= 0 && (best < 0 || dist[b] < best)) best = dist[b];
  }
  std::vector<ElementId> out;
  bool first = true;
  for (ChamberId b : B.chambers) {
    if (dist[b] != best) continue;
    auto f = sorted_flag(cs, b);
    if (first) {
      out = std::move(f);
      first = false;
    } else {
      std::vector<ElementId> meet;
      std::set_intersection(out.begin(), out.end(), f.begin(), f.end(),
                            std::back_inserter(meet));
      out = std::move(meet);
    }
  }
  return out;
}

}  // namespace

std::vector<ElementId> projection(const ChamberSystem& cs, const FlagResidue& A,
                                  const FlagResidue& B) {
  return project_with(cs, distances_from(cs, A.chambers), B);
}

ConvexityReport check_convex(const ChamberSystem& cs, std::span<const ElementId> S) {
  std::vector<ElementId> set(S.begin(), S.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());

  // Enumerate flags: pick at most one element per type, pairwise incident.
  std::vector<std::vector<ElementId>> by_type(cs.rank());
  for (ElementId e : set) {
    if (e < cs.num_elements() && cs.element_type(e) >= 0) {
      by_type[static_cast<std::size_t>(cs.element_type(e))].push_back(e);
    }
  }
  std::vector<FlagResidue> flags;
  std::vector<ElementId> current;
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == cs.rank()) {
      if (current.empty()) return;
      FlagResidue r = flag_residue(cs, current);
      if (!r.chambers.empty()) flags.push_back(std::move(r));
      return;
    }
    self(self, t + 1);
    for (ElementId e : by_type[t]) {
      if (std::all_of(current.begin(), current.end(),
                      [&](ElementId f) { return cs.incident(e, f); })) {
        current.push_back(e);
        self(self, t + 1);
        current.pop_back();
      }
    }
  };
  rec(rec, 0);

  ConvexityReport report;
  report.flags_checked = flags.size();
  for (const auto& A : flags) {
    const auto dist = distances_from(cs, A.chambers);
    for (const auto& B : flags) {
      const auto proj = project_with(cs, dist, B);
      if (!std::includes(set.begin(), set.end(), proj.begin(), proj.end())) {
        report.convex = false;
        report.witness_from = A.flag;
        report.witness_onto = B.flag;
        report.witness_projection = proj;
        return report;
      }
    }
  }
  return report;
}

bool is_convex(const ChamberSystem& cs, std::span<const ElementId> S) {
  return check_convex(cs, S).convex;
}

void write_chamber_system(std::ostream& os, const ChamberSystem& cs) {
  for (std::size_t t = 0; t < cs.rank(); ++t) {
    for (std::size_t p = 0; p < cs.num_panels(t); ++p) {
      os << "panel " << (t + 1);
      for (ChamberId c : cs.panel(t, p)) os << ' ' << c;
      os << '\n';
    }
  }
}

}  // namespace chamberlab
