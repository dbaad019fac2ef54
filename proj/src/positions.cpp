#include "chamberlab/positions.hpp"

#include <algorithm>
#include <iterator>

#include "chamberlab/error.hpp"

namespace chamberlab {

namespace {

enum : std::size_t { kPoint = 0, kLine = 1, kPlane = 2, kHyperline = 3 };

void require_rank4(const IncidenceGeometry& geom) {
  if (geom.rank() != 4) {
    throw Error(ErrorCode::kWrongRank, "wrong rank: expected a 4-typed geometry, got rank " +
                                           std::to_string(geom.rank()));
  }
}

void require_type(const IncidenceGeometry& geom, ElementId e, std::size_t type) {
  if (e >= geom.num_elements() || geom.type_of(e) != type) {
    throw Error(ErrorCode::kTypeMismatch, "type mismatch: element is not a " +
                                              (type < geom.rank() ? geom.type_names()[type]
                                                                  : std::string("?")));
  }
}

std::vector<ElementId> common(const IncidenceGeometry& geom, ElementId x, ElementId y,
                              std::size_t type) {
  const auto a = geom.incident_of_type(x, type);
  const auto b = geom.incident_of_type(y, type);
  std::vector<ElementId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::string_view to_string(PointRelation r) {
  switch (r) {
    case PointRelation::kEqual: return "equal";
    case PointRelation::kCollinear: return "collinear";
    case PointRelation::kCohyperlinear: return "cohyperlinear";
    case PointRelation::kAlmostOpposite: return "almost_opposite";
    case PointRelation::kOpposite: return "opposite";
  }
  return "?";
}

std::string_view to_string(PointHyperlineRelation r) {
  switch (r) {
    case PointHyperlineRelation::kIncident: return "incident";
    case PointHyperlineRelation::kNear: return "near";
    case PointHyperlineRelation::kFar: return "far";
  }
  return "?";
}

std::string_view to_string(HyperlineMeet r) {
  switch (r) {
    case HyperlineMeet::kEmpty: return "empty";
    case HyperlineMeet::kPoint: return "point";
    case HyperlineMeet::kPlane: return "plane";
    case HyperlineMeet::kOther: return "other";
  }
  return "?";
}

std::vector<ElementId> collinear_points(const IncidenceGeometry& geom, ElementId x) {
  std::vector<ElementId> out;
  for (ElementId line : geom.incident_of_type(x, kLine)) {
    for (ElementId p : geom.incident_of_type(line, kPoint)) {
      if (p != x) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool collinear(const IncidenceGeometry& geom, ElementId x, ElementId y) {
  return x != y && !common(geom, x, y, kLine).empty();
}

PointPairResult classify_point_pair(const IncidenceGeometry& geom, ElementId x, ElementId y) {
  require_rank4(geom);
  require_type(geom, x, kPoint);
  require_type(geom, y, kPoint);
  PointPairResult r;
  if (x == y) return r;

  auto set_witness = [&](PointRelation rel, const std::vector<ElementId>& ws) {
    r.relation = rel;
    r.witness_count = ws.size();
    if (!ws.empty()) r.witness = ws.front();
  };
  if (const auto lines = common(geom, x, y, kLine); !lines.empty()) {
    set_witness(PointRelation::kCollinear, lines);
    return r;
  }
  if (const auto hyperlines = common(geom, x, y, kHyperline); !hyperlines.empty()) {
    set_witness(PointRelation::kCohyperlinear, hyperlines);
    return r;
  }
  const auto nx = collinear_points(geom, x);
  const auto ny = collinear_points(geom, y);
  std::vector<ElementId> both;
  std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(both));
  set_witness(both.empty() ? PointRelation::kOpposite : PointRelation::kAlmostOpposite, both);
  return r;
}

PointHyperlineResult classify_point_hyperline(const IncidenceGeometry& geom, ElementId x,
                                              ElementId h) {
  require_rank4(geom);
  require_type(geom, x, kPoint);
  require_type(geom, h, kHyperline);
  PointHyperlineResult r;
  if (geom.incident(x, h)) return r;

  const auto near_x = collinear_points(geom, x);
  std::vector<ElementId> near_lines;
  for (ElementId line : geom.incident_of_type(h, kLine)) {
    const auto pts = geom.shadow(line);
    if (!pts.empty() && std::includes(near_x.begin(), near_x.end(), pts.begin(), pts.end())) {
      near_lines.push_back(line);
    }
  }
  if (!near_lines.empty()) {
    r.relation = PointHyperlineRelation::kNear;
    r.witness = near_lines.front();
    r.witness_count = near_lines.size();
    return r;
  }
  r.relation = PointHyperlineRelation::kFar;
  for (ElementId u : geom.shadow(h)) {
    if (classify_point_pair(geom, x, u).relation == PointRelation::kCohyperlinear) {
      if (!r.witness) r.witness = u;
      ++r.witness_count;
    }
  }
  return r;
}

HyperlineMeetResult hyperline_intersection(const IncidenceGeometry& geom, ElementId h,
                                           ElementId g) {
  require_rank4(geom);
  require_type(geom, h, kHyperline);
  require_type(geom, g, kHyperline);
  HyperlineMeetResult r;
  const auto a = geom.shadow(h);
  const auto b = geom.shadow(g);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r.intersection));
  if (h == g) {
    r.kind = HyperlineMeet::kOther;
    return r;
  }
  if (r.intersection.empty()) {
    r.kind = HyperlineMeet::kEmpty;
  } else if (r.intersection.size() == 1) {
    r.kind = HyperlineMeet::kPoint;
    r.witness = r.intersection.front();
  } else {
    r.kind = HyperlineMeet::kOther;
    for (ElementId plane : geom.incident_of_type(r.intersection.front(), kPlane)) {
      if (geom.shadow(plane) == r.intersection) {
        r.kind = HyperlineMeet::kPlane;
        r.witness = plane;
        break;
      }
    }
  }
  return r;
}

CliqueResult clique_in_plane(const IncidenceGeometry& geom, std::vector<ElementId> X) {
  require_rank4(geom);
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  for (ElementId x : X) require_type(geom, x, kPoint);
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      if (!collinear(geom, X[i], X[j])) {
        throw Error(ErrorCode::kNotAClique, "not a clique: " + geom.label(X[i]) + " and " +
                                                geom.label(X[j]) + " are not collinear");
      }
    }
  }
  CliqueResult r;
  const std::vector<ElementId> candidates =
      X.empty() ? std::vector<ElementId>(geom.elements_of_type(kPlane).begin(),
                                         geom.elements_of_type(kPlane).end())
                : geom.incident_of_type(X.front(), kPlane);
  for (ElementId plane : candidates) {
    const auto pts = geom.shadow(plane);
    if (std::includes(pts.begin(), pts.end(), X.begin(), X.end())) {
      r.contained = true;
      r.plane = plane;
      break;
    }
  }
  return r;
}

std::vector<std::vector<ElementId>> maximal_collinear_cliques(const IncidenceGeometry& geom) {
  require_rank4(geom);
  std::vector<std::vector<ElementId>> out;
  std::vector<ElementId> current;
  auto intersect = [](const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
    std::vector<ElementId> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
  };
  std::vector<std::vector<ElementId>> nbr(geom.num_elements());
  for (ElementId p : geom.elements_of_type(kPoint)) nbr[p] = collinear_points(geom, p);

  auto bk = [&](auto&& self, std::vector<ElementId> P, std::vector<ElementId> X) -> void {
    if (P.empty() && X.empty()) {
      auto clique = current;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
      return;
    }
    std::vector<ElementId> PX;
    std::set_union(P.begin(), P.end(), X.begin(), X.end(), std::back_inserter(PX));
    const ElementId pivot = *std::max_element(PX.begin(), PX.end(), [&](ElementId a, ElementId b) {
      return intersect(P, nbr[a]).size() < intersect(P, nbr[b]).size();
    });
    std::vector<ElementId> candidates;
    std::set_difference(P.begin(), P.end(), nbr[pivot].begin(), nbr[pivot].end(),
                        std::back_inserter(candidates));
    for (ElementId v : candidates) {
      current.push_back(v);
      self(self, intersect(P, nbr[v]), intersect(X, nbr[v]));
      current.pop_back();
      P.erase(std::find(P.begin(), P.end(), v));
      X.insert(std::upper_bound(X.begin(), X.end(), v), v);
    }
  };
  const auto pts = geom.elements_of_type(kPoint);
  bk(bk, std::vector<ElementId>(pts.begin(), pts.end()), {});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chamberlab
