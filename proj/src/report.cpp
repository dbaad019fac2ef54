#include "chamberlab/report.hpp"

namespace chamberlab {

using nlohmann::json;

json to_json(const GroupElement& g) {
  return {{"id", g.id}, {"normal_form", format_word(g.normal_form)}, {"length", g.length}};
}

json to_json(const DoubleCosetRecord& r, bool with_members) {
  json j = {{"left", format_subset(r.left)},
            {"right", format_subset(r.right)},
            {"min_rep", to_json(r.min_rep)},
            {"size", r.member_ids.size()}};
  if (with_members) j["members"] = r.member_ids;
  return j;
}

json to_json(const LemmaReport& r) {
  json claims = json::array();
  for (const auto& v : r.verdicts) {
    claims.push_back({{"left", format_subset(v.claim.left)},
                      {"word", format_word(v.claim.word)},
                      {"right", format_subset(v.claim.right)},
                      {"reduced", v.reduced},
                      {"length", v.element.length},
                      {"greedy_minimal", v.greedy_minimal},
                      {"exhaustive_minimal", v.exhaustive_minimal},
                      {"min_rep", to_json(v.min_rep)},
                      {"coset_size", v.coset_size},
                      {"minimal_members", v.minimal_members},
                      {"pass", v.pass()}});
  }
  return {{"pass", r.pass}, {"claims", claims}};
}

json to_json(const NgonReport& r) {
  json j = {{"pass", r.pass},
            {"n", r.n},
            {"points", r.points},
            {"lines", r.lines},
            {"connected", r.connected},
            {"girth", r.girth},
            {"diameter", r.diameter},
            {"point_degree", {r.min_point_degree, r.max_point_degree}},
            {"line_degree", {r.min_line_degree, r.max_line_degree}}};
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

json to_json(const MetasymplecticReport& r) {
  json axioms = json::array();
  for (const auto& a : r.axioms) {
    json e = {{"axiom", a.axiom}, {"pass", a.pass}, {"flags_checked", a.flags_checked}};
    if (!a.pass) {
      e["witness"] = a.witness;
      e["detail"] = a.detail;
    }
    axioms.push_back(std::move(e));
  }
  return {{"pass", r.pass}, {"mode", r.thin_mode ? "thin" : "thick"}, {"axioms", axioms}};
}

json to_json(const OvReport& r, const IncidenceGeometry& ambient) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"hyperline", ambient.label(v.hyperline)},
                          {"x", ambient.label(v.x)},
                          {"y", ambient.label(v.y)},
                          {"line", ambient.label(v.line)}});
  }
  return {{"pass", r.pass}, {"pairs_checked", r.pairs_checked}, {"violations", violations}};
}

json to_json(const EmbeddingReport& r, const IncidenceGeometry& ambient) {
  json j = {{"kind", r.improper ? "improper" : "proper"}};
  if (!r.improper && r.witness_point) {
    j["witness"] = {{"point", ambient.label(*r.witness_point)},
                    {"h", ambient.label(*r.witness_h)},
                    {"g", ambient.label(*r.witness_g)}};
  }
  if (r.improper) {
    json map = json::array();
    for (const auto& c : r.line_map) {
      map.push_back({{"point", ambient.label(c.point)},
                     {"line", c.line ? json(ambient.label(*c.line)) : json(nullptr)},
                     {"through_point", c.through_point}});
    }
    j["line_map"] = map;
    json missing = json::array();
    for (ElementId p : r.missing_common_line) missing.push_back(ambient.label(p));
    j["missing_common_line"] = missing;
  }
  return j;
}

json to_json(const BuildingBlockReport& r) {
  return {{"pass", r.pass},
          {"points", r.points},
          {"chambers", r.chambers},
          {"ordered_opposite_pairs", r.ordered_opposite_pairs},
          {"opposite_per_point", {r.min_opposite_per_point, r.max_opposite_per_point}},
          {"chambers_per_point", {r.min_chambers_per_point, r.max_chambers_per_point}},
          {"chamber_checks", r.chamber_checks},
          {"failures", r.failures},
          {"observed_word", format_word(r.observed_word)},
          {"collinear_max_distance", r.collinear_max_distance},
          {"failure_samples", r.failure_samples}};
}

json to_json(const AlternatingReport& r) {
  json words = json::array();
  for (const auto& w : r.words) {
    words.push_back({{"word", format_word(w.word)}, {"reduced", w.reduced}, {"length", w.length}});
  }
  return {{"pass", r.pass}, {"blocks", r.blocks}, {"words", words}};
}

}  // namespace chamberlab
