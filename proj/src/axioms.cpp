#include "chamberlab/axioms.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "chamberlab/error.hpp"

namespace chamberlab {

NgonReport check_generalized_ngon(const IncidenceGeometry& geom, int n, bool require_thick) {
  return check_generalized_ngon(geom, n, require_thick ? Thickness::kThick : Thickness::kAny);
}

NgonReport check_generalized_ngon(const IncidenceGeometry& geom, int n, Thickness thickness) {
  if (geom.rank() != 2) {
    throw Error(ErrorCode::kWrongRank, "wrong rank: generalized polygons have rank 2, got " +
                                           std::to_string(geom.rank()));
  }
  NgonReport r;
  r.n = n;
  r.points = geom.elements_of_type(0).size();
  r.lines = geom.elements_of_type(1).size();
  const std::size_t v = geom.num_elements();

  auto degree_range = [&](std::size_t type, std::size_t& lo, std::size_t& hi) {
    lo = std::numeric_limits<std::size_t>::max();
    hi = 0;
    for (ElementId e : geom.elements_of_type(type)) {
      lo = std::min(lo, geom.incident(e).size());
      hi = std::max(hi, geom.incident(e).size());
    }
    if (geom.elements_of_type(type).empty()) lo = 0;
  };
  degree_range(0, r.min_point_degree, r.max_point_degree);
  degree_range(1, r.min_line_degree, r.max_line_degree);

  r.connected = v > 0;
  int girth = std::numeric_limits<int>::max();
  int diameter = 0;
  std::vector<int> dist(v);
  std::vector<ElementId> parent(v);
  for (ElementId s = 0; s < v && r.connected; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = s;
    std::deque<ElementId> queue{s};
    while (!queue.empty()) {
      const ElementId x = queue.front();
      queue.pop_front();
      for (ElementId y : geom.incident(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          girth = std::min(girth, dist[x] + dist[y] + 1);
        }
      }
    }
    for (int d : dist) {
      if (d < 0) r.connected = false;
      diameter = std::max(diameter, d);
    }
  }
  r.girth = girth == std::numeric_limits<int>::max() ? -1 : girth;
  r.diameter = r.connected ? diameter : -1;

  if (!r.connected) {
    r.failure = "incidence graph is not connected";
  } else if (r.diameter != n) {
    r.failure = "diameter " + std::to_string(r.diameter) + " != " + std::to_string(n);
  } else if (r.girth != 2 * n) {
    r.failure = "girth " + std::to_string(r.girth) + " != " + std::to_string(2 * n);
  } else if (thickness == Thickness::kThick &&
             std::min(r.min_point_degree, r.min_line_degree) < 3) {
    r.failure = "not thick: some element has fewer than 3 incident elements";
  } else if (thickness == Thickness::kThin &&
             (r.min_point_degree != 2 || r.max_point_degree != 2 || r.min_line_degree != 2 ||
              r.max_line_degree != 2)) {
    r.failure = "not thin: some element is not incident with exactly 2 elements";
  }
  r.pass = r.failure.empty();
  return r;
}

namespace {

enum : std::size_t { kPoint = 0, kLine = 1, kPlane = 2, kHyperline = 3 };

void check_residues(const IncidenceGeometry& geom, std::size_t a, std::size_t b, int n,
                    Thickness thickness, AxiomVerdict& verdict) {
  for (ElementId x : geom.elements_of_type(a)) {
    for (ElementId y : geom.incident_of_type(x, b)) {
      ++verdict.flags_checked;
      if (!verdict.pass) continue;
      const IncidenceGeometry res = residue(geom, Flag{{x, y}});
      const NgonReport r = check_generalized_ngon(res, n, thickness);
      if (!r.pass) {
        verdict.pass = false;
        verdict.witness = {geom.label(x), geom.label(y)};
        verdict.detail = "residue of {" + geom.type_names()[a] + ", " + geom.type_names()[b] +
                         "} flag: " + r.failure;
      }
    }
  }
}

}  // namespace

MetasymplecticReport check_metasymplectic(const IncidenceGeometry& geom, bool thin_mode) {
  if (geom.rank() != 4) {
    throw Error(ErrorCode::kWrongRank,
                "wrong rank: metasymplectic spaces have rank 4, got " + std::to_string(geom.rank()));
  }
  const Thickness thickness = thin_mode ? Thickness::kThin : Thickness::kThick;
  MetasymplecticReport report;
  report.thin_mode = thin_mode;

  AxiomVerdict m1;
  m1.axiom = "M1";
  check_residues(geom, kPoint, kLine, 3, thickness, m1);
  check_residues(geom, kPlane, kHyperline, 3, thickness, m1);

  AxiomVerdict m2;
  m2.axiom = "M2";
  check_residues(geom, kPoint, kPlane, 2, thickness, m2);
  check_residues(geom, kLine, kHyperline, 2, thickness, m2);
  check_residues(geom, kLine, kPlane, 2, thickness, m2);

  AxiomVerdict m3;
  m3.axiom = "M3";
  check_residues(geom, kPoint, kHyperline, 4, thickness, m3);

  AxiomVerdict m4;
  m4.axiom = "M4";
  std::map<std::vector<ElementId>, ElementId> seen;
  for (ElementId e = 0; e < geom.num_elements(); ++e) {
    if (geom.type_of(e) == kPoint) continue;
    ++m4.flags_checked;
    auto [it, inserted] = seen.emplace(geom.shadow(e), e);
    if (!inserted && m4.pass) {
      m4.pass = false;
      m4.witness = {geom.label(it->second), geom.label(e)};
      m4.detail = "distinct elements with equal point shadows";
    }
  }

  report.axioms = {m1, m2, m3, m4};
  for (const auto& a : report.axioms) report.pass = report.pass && a.pass;
  return report;
}

}  // namespace chamberlab
