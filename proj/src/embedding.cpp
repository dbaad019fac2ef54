#include "chamberlab/embedding.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <iterator>

#include "chamberlab/error.hpp"
#include "chamberlab/positions.hpp"

namespace chamberlab {

namespace {

enum : std::size_t { kPoint = 0, kLine = 1, kPlane = 2, kHyperline = 3 };

std::vector<ElementId> common_lines(const IncidenceGeometry& geom, ElementId a, ElementId b) {
  const auto la = geom.incident_of_type(a, kLine);
  const auto lb = geom.incident_of_type(b, kLine);
  std::vector<ElementId> out;
  std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(out));
  return out;
}

std::vector<ElementId> sorted_unique(std::vector<ElementId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

using Cycle = std::array<ElementId, 4>;
using CyclePredicate = std::function<bool(const IncidenceGeometry&, const Cycle&, const Cycle&)>;

// First ordinary quadrangle p0 h0 p1 h1 p2 h2 p3 h3 (p_i on h_{i-1}, h_i and
// on no other h_j) accepted by `accept`, in lexicographic search order.
std::optional<std::pair<Cycle, Cycle>> find_thin_quadrangle(const IncidenceGeometry& geom,
                                                            const CyclePredicate& accept) {
  Cycle p{}, h{};
  auto exact = [&]() {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const bool expected = j == i || j == (i + 3) % 4;
        if (geom.incident(p[i], h[j]) != expected) return false;
      }
    }
    return true;
  };
  for (ElementId h0 : geom.elements_of_type(kHyperline)) {
    h[0] = h0;
    const auto s0 = geom.shadow(h0);
    for (ElementId p0 : s0) {
      for (ElementId p1 : s0) {
        if (p1 == p0) continue;
        p[0] = p0;
        p[1] = p1;
        for (ElementId h1 : geom.incident_of_type(p1, kHyperline)) {
          if (h1 == h0 || geom.incident(p0, h1)) continue;
          h[1] = h1;
          for (ElementId p2 : geom.shadow(h1)) {
            if (p2 == p1 || geom.incident(p2, h0)) continue;
            p[2] = p2;
            for (ElementId h2 : geom.incident_of_type(p2, kHyperline)) {
              if (h2 == h1 || h2 == h0 || geom.incident(p1, h2)) continue;
              h[2] = h2;
              for (ElementId p3 : geom.shadow(h2)) {
                if (p3 == p2 || p3 == p0 || geom.incident(p3, h0) || geom.incident(p3, h1)) {
                  continue;
                }
                p[3] = p3;
                for (ElementId h3 : geom.incident_of_type(p3, kHyperline)) {
                  if (!geom.incident(p0, h3)) continue;
                  h[3] = h3;
                  if (exact() && accept(geom, p, h)) return std::make_pair(p, h);
                }
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

EmbeddedQuadrangle from_cycle(IncidenceGeometry ambient, const Cycle& p, const Cycle& h) {
  return EmbeddedQuadrangle{std::move(ambient), {p.begin(), p.end()}, {h.begin(), h.end()}};
}

}  // namespace

IncidenceGeometry quadrangle_geometry(const EmbeddedQuadrangle& e) {
  const auto points = sorted_unique(e.points);
  const auto hyperlines = sorted_unique(e.hyperlines);
  GeometryBuilder builder({"point", "line"});
  for (ElementId p : points) builder.add_element(0, e.ambient.label(p));
  for (ElementId h : hyperlines) builder.add_element(1, e.ambient.label(h));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < hyperlines.size(); ++j) {
      if (e.ambient.incident(points[i], hyperlines[j])) {
        builder.add_incidence(static_cast<ElementId>(i),
                              static_cast<ElementId>(points.size() + j));
      }
    }
  }
  return std::move(builder).build();
}

NgonReport check_quadrangle(const EmbeddedQuadrangle& e, Thickness thickness) {
  return check_generalized_ngon(quadrangle_geometry(e), 4, thickness);
}

OvReport check_ov(const EmbeddedQuadrangle& e) {
  OvReport report;
  const auto points = sorted_unique(e.points);
  for (ElementId h : sorted_unique(e.hyperlines)) {
    std::vector<ElementId> on_h;
    for (ElementId p : points) {
      if (e.ambient.incident(p, h)) on_h.push_back(p);
    }
    for (std::size_t i = 0; i < on_h.size(); ++i) {
      for (std::size_t j = i + 1; j < on_h.size(); ++j) {
        ++report.pairs_checked;
        const auto lines = common_lines(e.ambient, on_h[i], on_h[j]);
        if (!lines.empty()) {
          report.pass = false;
          report.violations.push_back({h, on_h[i], on_h[j], lines.front()});
        }
      }
    }
  }
  return report;
}

EmbeddingReport classify_embedding(const EmbeddedQuadrangle& e) {
  EmbeddingReport report;
  report.improper = true;
  const auto points = sorted_unique(e.points);
  const auto hyperlines = sorted_unique(e.hyperlines);
  for (ElementId p : points) {
    std::vector<ElementId> through;
    for (ElementId h : hyperlines) {
      if (e.ambient.incident(p, h)) through.push_back(h);
    }
    for (std::size_t i = 0; i < through.size() && report.improper; ++i) {
      for (std::size_t j = i + 1; j < through.size(); ++j) {
        if (common_lines(e.ambient, through[i], through[j]).empty()) {
          report.improper = false;
          report.witness_point = p;
          report.witness_h = through[i];
          report.witness_g = through[j];
          break;
        }
      }
    }
    if (!report.improper) break;

    // Lines on every hyperline through p; with no hyperline, lines on p.
    std::vector<ElementId> candidates = through.empty()
                                            ? e.ambient.incident_of_type(p, kLine)
                                            : e.ambient.incident_of_type(through.front(), kLine);
    for (std::size_t i = 1; i < through.size(); ++i) {
      const auto lines = e.ambient.incident_of_type(through[i], kLine);
      std::vector<ElementId> meet;
      std::set_intersection(candidates.begin(), candidates.end(), lines.begin(), lines.end(),
                            std::back_inserter(meet));
      candidates = std::move(meet);
    }
    LineChoice choice;
    choice.point = p;
    for (ElementId line : candidates) {
      if (e.ambient.incident(line, p)) {
        choice.line = line;
        choice.through_point = true;
        break;
      }
    }
    if (!choice.line && !candidates.empty()) choice.line = candidates.front();
    if (!choice.line && through.size() >= 2) report.missing_common_line.push_back(p);
    report.line_map.push_back(choice);
  }
  if (!report.improper) report.line_map.clear();
  return report;
}

EmbeddedQuadrangle ov_pass_fixture(const CoxeterGroup& f4) {
  IncidenceGeometry ambient = thin_f4_geometry(f4);
  const auto found = find_thin_quadrangle(ambient, [](const auto& geom, const Cycle& p,
                                                      const Cycle& h) {
    for (int i = 0; i < 4; ++i) {
      if (classify_point_pair(geom, p[i], p[(i + 1) % 4]).relation !=
          PointRelation::kCohyperlinear) {
        return false;
      }
      if (hyperline_intersection(geom, h[i], h[(i + 1) % 4]).kind != HyperlineMeet::kPoint) {
        return false;
      }
    }
    return classify_point_pair(geom, p[0], p[2]).relation == PointRelation::kOpposite &&
           classify_point_pair(geom, p[1], p[3]).relation == PointRelation::kOpposite;
  });
  if (!found) throw Error(ErrorCode::kUnsupported, "no (OV) quadrangle in the thin F4 geometry");
  return from_cycle(std::move(ambient), found->first, found->second);
}

EmbeddedQuadrangle ov_violation_fixture() {
  GeometryBuilder b({"point", "line", "plane", "hyperline"});
  const ElementId pa = b.add_element(0, "a");
  const ElementId pb = b.add_element(0, "b");
  const ElementId pc = b.add_element(0, "c");
  const ElementId pd = b.add_element(0, "d");
  const ElementId line = b.add_element(1, "L");
  const ElementId h0 = b.add_element(3, "h_ab");
  const ElementId h1 = b.add_element(3, "h_bc");
  const ElementId h2 = b.add_element(3, "h_cd");
  const ElementId h3 = b.add_element(3, "h_da");
  b.add_incidence(pa, line);
  b.add_incidence(pb, line);
  b.add_incidence(line, h0);
  for (auto [p, h] : {std::pair{pa, h0}, {pb, h0}, {pb, h1}, {pc, h1}, {pc, h2}, {pd, h2},
                      {pd, h3}, {pa, h3}}) {
    b.add_incidence(p, h);
  }
  return EmbeddedQuadrangle{std::move(b).build(), {pa, pb, pc, pd}, {h0, h1, h2, h3}};
}

EmbeddedQuadrangle improper_fixture(const CoxeterGroup& f4) {
  IncidenceGeometry ambient = thin_f4_geometry(f4);
  const auto found = find_thin_quadrangle(ambient, [](const auto& geom, const Cycle& p,
                                                      const Cycle& h) {
    for (int i = 0; i < 4; ++i) {
      const auto lines = common_lines(geom, h[(i + 3) % 4], h[i]);
      if (std::none_of(lines.begin(), lines.end(),
                       [&](ElementId l) { return geom.incident(l, p[i]); })) {
        return false;
      }
    }
    return true;
  });
  if (!found) {
    throw Error(ErrorCode::kUnsupported, "no improper quadrangle in the thin F4 geometry");
  }
  return from_cycle(std::move(ambient), found->first, found->second);
}

std::vector<std::string> fixture_names() { return {"ov-pass", "ov-violation", "improper"}; }

EmbeddedQuadrangle make_fixture(const std::string& name, const CoxeterGroup& f4) {
  if (name == "ov-pass") return ov_pass_fixture(f4);
  if (name == "ov-violation") return ov_violation_fixture();
  if (name == "improper") return improper_fixture(f4);
  throw Error(ErrorCode::kUnsupported, "unknown fixture '" + name + "'");
}

}  // namespace chamberlab
