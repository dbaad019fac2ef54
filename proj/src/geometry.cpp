#include "chamberlab/geometry.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "chamberlab/error.hpp"

namespace chamberlab {

bool IncidenceGeometry::incident(ElementId a, ElementId b) const {
  const auto& adj = incidence_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<ElementId> IncidenceGeometry::incident_of_type(ElementId e, std::size_t type) const {
  std::vector<ElementId> out;
  for (ElementId x : incidence_[e]) {
    if (types_[x] == type) out.push_back(x);
  }
  return out;
}

ElementId IncidenceGeometry::find(const std::string& label) const {
  for (ElementId e = 0; e < labels_.size(); ++e) {
    if (labels_[e] == label) return e;
  }
  throw Error(ErrorCode::kParse, "unknown element '" + label + "'");
}

GeometryBuilder::GeometryBuilder(std::vector<std::string> type_names) {
  geom_.type_names_ = std::move(type_names);
  geom_.by_type_.resize(geom_.type_names_.size());
}

ElementId GeometryBuilder::add_element(std::size_t type, std::string label) {
  if (type >= geom_.type_names_.size()) {
    throw Error(ErrorCode::kTypeMismatch, "type mismatch: no type " + std::to_string(type));
  }
  const auto id = static_cast<ElementId>(geom_.types_.size());
  geom_.types_.push_back(type);
  geom_.labels_.push_back(label.empty() ? std::to_string(id) : std::move(label));
  geom_.incidence_.emplace_back();
  geom_.by_type_[type].push_back(id);
  return id;
}

void GeometryBuilder::add_incidence(ElementId a, ElementId b) {
  if (a >= geom_.types_.size() || b >= geom_.types_.size()) {
    throw Error(ErrorCode::kTypeMismatch, "type mismatch: unknown element in incidence");
  }
  if (geom_.types_[a] == geom_.types_[b]) {
    throw Error(ErrorCode::kTypeMismatch, "type mismatch: incidence between elements " +
                                              geom_.labels_[a] + " and " + geom_.labels_[b] +
                                              " of the same type");
  }
  geom_.incidence_[a].push_back(b);
  geom_.incidence_[b].push_back(a);
}

IncidenceGeometry GeometryBuilder::build() && {
  for (auto& adj : geom_.incidence_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return std::move(geom_);
}

void check_flag(const IncidenceGeometry& geom, const Flag& f) {
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    if (f.elements[i] >= geom.num_elements()) {
      throw Error(ErrorCode::kInvalidFlag, "invalid flag: unknown element");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const ElementId a = f.elements[i];
      const ElementId b = f.elements[j];
      if (geom.type_of(a) == geom.type_of(b) || !geom.incident(a, b)) {
        throw Error(ErrorCode::kInvalidFlag, "invalid flag: " + geom.label(a) + " and " +
                                                 geom.label(b) + " are not incident");
      }
    }
  }
}

IncidenceGeometry residue(const IncidenceGeometry& geom, const Flag& f,
                          std::vector<ElementId>* origin) {
  check_flag(geom, f);
  std::vector<char> used(geom.rank(), 0);
  for (ElementId e : f.elements) used[geom.type_of(e)] = 1;

  std::vector<std::string> names;
  std::vector<std::size_t> new_type(geom.rank(), 0);
  for (std::size_t t = 0; t < geom.rank(); ++t) {
    if (!used[t]) {
      new_type[t] = names.size();
      names.push_back(geom.type_names()[t]);
    }
  }

  GeometryBuilder builder(names);
  std::unordered_map<ElementId, ElementId> to_new;
  std::vector<ElementId> kept;
  for (ElementId e = 0; e < geom.num_elements(); ++e) {
    if (used[geom.type_of(e)]) continue;
    if (!std::all_of(f.elements.begin(), f.elements.end(),
                     [&](ElementId x) { return geom.incident(e, x); })) {
      continue;
    }
    to_new.emplace(e, builder.add_element(new_type[geom.type_of(e)], geom.label(e)));
    kept.push_back(e);
  }
  for (ElementId e : kept) {
    for (ElementId x : geom.incident(e)) {
      if (x > e) {
        if (auto it = to_new.find(x); it != to_new.end()) builder.add_incidence(to_new[e], it->second);
      }
    }
  }
  if (origin) *origin = kept;
  return std::move(builder).build();
}

IncidenceGeometry relabel(const IncidenceGeometry& geom, std::span<const ElementId> perm) {
  const std::size_t n = geom.num_elements();
  std::vector<ElementId> inverse(n);
  for (ElementId e = 0; e < n; ++e) inverse[perm[e]] = e;
  GeometryBuilder builder(geom.type_names());
  for (ElementId k = 0; k < n; ++k) builder.add_element(geom.type_of(inverse[k]), geom.label(inverse[k]));
  for (ElementId e = 0; e < n; ++e) {
    for (ElementId x : geom.incident(e)) {
      if (x > e) builder.add_incidence(perm[e], perm[x]);
    }
  }
  return std::move(builder).build();
}

IncidenceGeometry dual(const IncidenceGeometry& geom) {
  if (geom.rank() != 2) throw Error(ErrorCode::kWrongRank, "wrong rank: dual needs rank 2");
  GeometryBuilder builder({geom.type_names()[1], geom.type_names()[0]});
  for (ElementId e = 0; e < geom.num_elements(); ++e) {
    builder.add_element(1 - geom.type_of(e), geom.label(e));
  }
  for (ElementId e = 0; e < geom.num_elements(); ++e) {
    for (ElementId x : geom.incident(e)) {
      if (x > e) builder.add_incidence(e, x);
    }
  }
  return std::move(builder).build();
}

ChamberSystem flag_complex(const IncidenceGeometry& geom) {
  const std::size_t r = geom.rank();
  std::vector<std::vector<ElementId>> chambers;
  std::vector<ElementId> current;
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == r) {
      chambers.push_back(current);
      return;
    }
    const auto candidates = t == 0 ? std::vector<ElementId>(geom.elements_of_type(0).begin(),
                                                            geom.elements_of_type(0).end())
                                   : geom.incident_of_type(current.front(), t);
    for (ElementId e : candidates) {
      if (std::all_of(current.begin(), current.end(),
                      [&](ElementId x) { return geom.incident(e, x); })) {
        current.push_back(e);
        self(self, t + 1);
        current.pop_back();
      }
    }
  };
  if (r > 0) rec(rec, 0);
  return ChamberSystem(r, std::move(chambers), geom.num_elements());
}

IncidenceGeometry geometry_of(const ChamberSystem& cs, std::vector<std::string> type_names) {
  if (type_names.size() != cs.rank()) {
    throw Error(ErrorCode::kWrongRank, "wrong rank: type name count differs from chamber rank");
  }
  GeometryBuilder builder(std::move(type_names));
  for (ElementId e = 0; e < cs.num_elements(); ++e) {
    if (cs.element_type(e) < 0) {
      throw Error(ErrorCode::kInvalidFlag, "invalid flag: element in no chamber");
    }
    builder.add_element(static_cast<std::size_t>(cs.element_type(e)));
  }
  for (ChamberId c = 0; c < cs.size(); ++c) {
    const auto f = cs.flag(c);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) builder.add_incidence(f[i], f[j]);
    }
  }
  return std::move(builder).build();
}

IncidenceGeometry complete_bipartite(std::size_t points, std::size_t lines) {
  GeometryBuilder builder({"point", "line"});
  for (std::size_t p = 0; p < points; ++p) builder.add_element(0);
  for (std::size_t l = 0; l < lines; ++l) builder.add_element(1);
  for (std::size_t p = 0; p < points; ++p) {
    for (std::size_t l = 0; l < lines; ++l) {
      builder.add_incidence(static_cast<ElementId>(p), static_cast<ElementId>(points + l));
    }
  }
  return std::move(builder).build();
}

// ---------------------------------------------------------------------------
// Text format

IncidenceGeometry read_geometry(std::istream& is) {
  std::vector<std::string> types;
  struct PendingElement {
    std::size_t type;
    std::string label;
  };
  std::vector<PendingElement> elements;
  std::vector<std::pair<std::string, std::string>> incidences;
  std::vector<std::size_t> incidence_lines;
  std::map<std::string, std::size_t> type_index;
  std::map<std::string, ElementId> element_index;

  auto fail = [](std::size_t line, const std::string& msg) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + msg);
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    std::istringstream line(raw);
    std::string keyword;
    if (!(line >> keyword) || keyword.front() == '#') continue;
    std::string a, b, extra;
    if (keyword == "type") {
      if (!(line >> a) || (line >> extra)) fail(line_no, "expected 'type <name>'");
      if (!elements.empty()) fail(line_no, "type declared after elements");
      if (!type_index.emplace(a, types.size()).second) fail(line_no, "duplicate type '" + a + "'");
      types.push_back(a);
    } else if (keyword == "el") {
      if (!(line >> a >> b) || (line >> extra)) fail(line_no, "expected 'el <type> <id>'");
      auto it = type_index.find(a);
      if (it == type_index.end()) fail(line_no, "unknown type '" + a + "'");
      if (!element_index.emplace(b, static_cast<ElementId>(elements.size())).second) {
        fail(line_no, "duplicate element '" + b + "'");
      }
      elements.push_back({it->second, b});
    } else if (keyword == "inc") {
      if (!(line >> a >> b) || (line >> extra)) fail(line_no, "expected 'inc <id> <id>'");
      incidences.emplace_back(a, b);
      incidence_lines.push_back(line_no);
    } else {
      fail(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (types.empty()) fail(line_no, "no types declared");

  GeometryBuilder builder(types);
  for (const auto& e : elements) builder.add_element(e.type, e.label);
  for (std::size_t k = 0; k < incidences.size(); ++k) {
    const auto ia = element_index.find(incidences[k].first);
    const auto ib = element_index.find(incidences[k].second);
    if (ia == element_index.end() || ib == element_index.end()) {
      fail(incidence_lines[k], "unknown element in incidence");
    }
    try {
      builder.add_incidence(ia->second, ib->second);
    } catch (const Error& err) {
      fail(incidence_lines[k], err.what());
    }
  }
  return std::move(builder).build();
}

void write_geometry(std::ostream& os, const IncidenceGeometry& geom) {
  for (const auto& name : geom.type_names()) os << "type " << name << '\n';
  for (ElementId e = 0; e < geom.num_elements(); ++e) {
    os << "el " << geom.type_names()[geom.type_of(e)] << ' ' << geom.label(e) << '\n';
  }
  for (ElementId e = 0; e < geom.num_elements(); ++e) {
    for (ElementId x : geom.incident(e)) {
      if (x > e) os << "inc " << geom.label(e) << ' ' << geom.label(x) << '\n';
    }
  }
}

}  // namespace chamberlab
