#include "chamberlab/verify.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "chamberlab/axioms.hpp"
#include "chamberlab/building_block.hpp"
#include "chamberlab/chambers.hpp"
#include "chamberlab/coxeter.hpp"
#include "chamberlab/embedding.hpp"
#include "chamberlab/error.hpp"
#include "chamberlab/geometry.hpp"
#include "chamberlab/parabolic.hpp"
#include "chamberlab/positions.hpp"
#include "chamberlab/report.hpp"

namespace chamberlab {

using nlohmann::json;

namespace {

// Accumulates named checks; the criterion passes iff all checks pass.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void expect_eq(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) {
      std::ostringstream os;
      os << what << ": got " << actual << ", expected " << expected;
      failures_.push_back(os.str());
    }
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string out;
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) {
      if (i) out += "; ";
      out += failures_[i];
    }
    if (failures_.size() > 5) out += "; ...";
    return out;
  }

 private:
  std::vector<std::string> failures_;
};


const GeneratorSubset kW234{2, 3, 4};
const GeneratorSubset kW123{1, 2, 3};

// --- 1 ---------------------------------------------------------------------
std::string f4_enumeration(Checks& c, json& data) {
  const CoxeterMatrix m = CoxeterMatrix::f4();
  const CoxeterGroup w = build_group(m);
  const GroupElement w0 = longest_element(w);
  c.expect_eq(w.order(), std::size_t{1152}, "order");
  c.expect_eq(w0.length, 24, "longest length");
  json orders = json::array();
  for (int i = 1; i <= 4; ++i) {
    json row = json::array();
    for (int j = 1; j <= 4; ++j) {
      const int k = braid_order(w, i, j);
      row.push_back(k);
      c.expect_eq(k, m(i, j), "order of s" + std::to_string(i) + "s" + std::to_string(j));
    }
    orders.push_back(row);
  }
  data = {{"order", w.order()}, {"longest", to_json(w0)}, {"braid_orders", orders}};
  return "order " + std::to_string(w.order()) + ", longest length " + std::to_string(w0.length);
}

// --- 2 ---------------------------------------------------------------------
std::string lemma_reps(Checks& c, json& data) {
  const CoxeterGroup w = build_group(CoxeterMatrix::f4());
  const LemmaReport r = verify_lemma_reps(w, shipped_lemma_claims());
  const std::array<int, 8> lengths{5, 5, 10, 10, 15, 15, 20, 20};
  c.expect_eq(r.verdicts.size(), std::size_t{8}, "claim count");
  for (std::size_t i = 0; i < r.verdicts.size() && i < lengths.size(); ++i) {
    const auto& v = r.verdicts[i];
    const std::string tag = "claim " + std::to_string(i + 1);
    c.expect(v.reduced, tag + " reduced");
    c.expect(v.exhaustive_minimal && v.greedy_minimal,
             tag + " (" + format_word(v.claim.word) + ") is not its coset's minimum; minimum is " +
                 format_word(v.min_rep.normal_form) + " of length " +
                 std::to_string(v.min_rep.length));
    c.expect_eq(v.element.length, lengths[i], tag + " length");
  }
  data = to_json(r);
  return "8 claims verified by exhaustive coset scans";
}

// --- 3 ---------------------------------------------------------------------
std::string parabolic_indices(Checks& c, json& data) {
  const CoxeterGroup w = build_group(CoxeterMatrix::f4());
  const std::map<std::string, GeneratorSubset> subsets{
      {"{2,3,4}", kW234}, {"{1,2,3}", kW123}, {"{1,3,4}", {1, 3, 4}}, {"{1,2,4}", {1, 2, 4}}};
  const std::map<std::string, std::size_t> expected{
      {"{2,3,4}", 48}, {"{1,2,3}", 48}, {"{1,3,4}", 12}, {"{1,2,4}", 12}};
  for (const auto& [name, J] : subsets) {
    const std::size_t n = parabolic_elements(w, J).size();
    data["parabolic_orders"][name] = n;
    c.expect_eq(n, expected.at(name), "|W_" + name + "|");
  }
  const IncidenceGeometry g = thin_f4_geometry(w);
  const std::array<std::size_t, 4> counts{24, 96, 96, 24};
  for (std::size_t t = 0; t < 4; ++t) {
    const std::size_t n = g.elements_of_type(t).size();
    data["thin_f4"][g.type_names()[t]] = n;
    c.expect_eq(n, counts[t], g.type_names()[t] + " count");
  }
  return "48/48/12/12 and 24/96/96/24";
}

// --- 4 ---------------------------------------------------------------------
std::string double_coset_partitions(Checks& c, json& data) {
  const CoxeterGroup w = build_group(CoxeterMatrix::f4());
  struct Pair {
    GeneratorSubset left, right;
    std::size_t expected;
  };
  const std::array<Pair, 4> pairs{Pair{kW234, kW234, 5}, Pair{kW123, kW123, 5},
                                  Pair{kW123, kW234, 3}, Pair{kW234, kW123, 3}};
  for (const auto& p : pairs) {
    const auto cosets = enumerate_double_cosets(w, p.left, p.right);
    const std::string name = format_subset(p.left) + "\\W/" + format_subset(p.right);
    json reps = json::array();
    std::size_t covered = 0;
    for (const auto& r : cosets) {
      reps.push_back(to_json(r, false));
      covered += r.member_ids.size();
    }
    data["partitions"][name] = reps;
    c.expect_eq(cosets.size(), p.expected, name + " coset count");
    c.expect_eq(covered, w.order(), name + " partition size");
  }
  // The printed words fall into pairwise distinct cosets of their pair.
  std::map<std::pair<GeneratorSubset, GeneratorSubset>, std::map<ElementId, std::size_t>> seen;
  const auto claims = shipped_lemma_claims();
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const auto& claim = claims[i];
    const GroupElement g = reduce(w, claim.word);
    const ElementId rep = min_double_coset_rep(w, claim.left, g, claim.right).id;
    const auto [it, fresh] = seen[{claim.left, claim.right}].emplace(rep, i + 1);
    c.expect(fresh, "claims " + std::to_string(it->second) + " and " + std::to_string(i + 1) +
                        " lie in the same double coset (minimum " +
                        format_word(w.normal_form(rep)) + ")");
  }
  return "5/5/3/3 double cosets; printed words in distinct cosets";
}

// --- 5 ---------------------------------------------------------------------
std::string gallery_word_lemma(Checks& c, json& data) {
  const CoxeterGroup w = build_group(CoxeterMatrix::f4());
  const ChamberSystem cs = coxeter_complex(w);
  std::size_t pairs = 0, mismatches = 0, wrong_element = 0;
  int max_distance = 0;
  for (ChamberId a = 0; a < cs.size(); ++a) {
    const auto dist = distances_from(cs, std::span<const ChamberId>(&a, 1));
    const auto delta = weyl_distances_from(cs, w, a);
    const ElementId a_inv = w.inverse(a);
    for (ChamberId b = 0; b < cs.size(); ++b) {
      ++pairs;
      if (dist[b] != w.length(delta[b])) ++mismatches;
      if (delta[b] != w.multiply(a_inv, b)) ++wrong_element;
      max_distance = std::max(max_distance, dist[b]);
    }
  }
  c.expect_eq(pairs, std::size_t{1152 * 1152}, "ordered pairs");
  c.expect_eq(mismatches, std::size_t{0}, "distance/length mismatches");
  c.expect_eq(wrong_element, std::size_t{0}, "Weyl distance != g^-1 h");
  c.expect_eq(max_distance, 24, "diameter");
  data = {{"pairs", pairs}, {"mismatches", mismatches}, {"max_distance", max_distance}};
  return std::to_string(pairs) + " ordered chamber pairs";
}

// --- 6 ---------------------------------------------------------------------
std::string thin_metasymplectic(Checks& c, json& data) {
  const CoxeterGroup w = build_group(CoxeterMatrix::f4());
  const ChamberSystem cs = coxeter_complex(w);
  const IncidenceGeometry g = geometry_of(cs, {"point", "line", "plane", "hyperline"});
  const MetasymplecticReport meta = check_metasymplectic(g, true);
  c.expect(meta.pass, "thin M1-M4");
  data["metasymplectic"] = to_json(meta);

  auto rep_of = [&](ElementId e) { return cs.chambers_containing(e).front(); };
  const auto points = g.elements_of_type(0);
  const auto hyperlines = g.elements_of_type(3);

  // Point pairs against W_{2,3,4} \ W / W_{2,3,4}.
  {
    std::map<std::string, std::size_t> counts;
    std::map<std::string, std::set<ElementId>> class_to_coset;
    std::map<ElementId, std::set<std::string>> coset_to_class;
    std::size_t non_unique = 0, asymmetric = 0;
    for (ElementId x : points) {
      for (ElementId y : points) {
        const auto r = classify_point_pair(g, x, y);
        const auto name = std::string(to_string(r.relation));
        if (!r.unique()) ++non_unique;
        if (classify_point_pair(g, y, x).relation != r.relation) ++asymmetric;
        const ElementId between = w.multiply(w.inverse(rep_of(x)), rep_of(y));
        const ElementId coset = min_double_coset_rep(w, kW234, w.element(between), kW234).id;
        ++counts[name];
        class_to_coset[name].insert(coset);
        coset_to_class[coset].insert(name);
      }
    }
    const auto cosets = enumerate_double_cosets(w, kW234, kW234);
    c.expect_eq(class_to_coset.size(), cosets.size(), "point-pair class count");
    for (const auto& [name, set] : class_to_coset) {
      c.expect_eq(set.size(), std::size_t{1}, "cosets of class " + name);
    }
    for (const auto& [coset, set] : coset_to_class) {
      c.expect_eq(set.size(), std::size_t{1}, "classes of one double coset");
    }
    for (const auto& rec : cosets) {
      const auto it = coset_to_class.find(rec.min_rep.id);
      if (it == coset_to_class.end() || it->second.size() != 1) continue;
      const std::string name = *it->second.begin();
      c.expect_eq(counts[name], points.size() * rec.member_ids.size() / 48,
                  "pairs in class " + name);
      data["point_pairs"][name] = {{"pairs", counts[name]},
                                   {"min_rep", format_word(rec.min_rep.normal_form)},
                                   {"coset_size", rec.member_ids.size()}};
    }
    c.expect_eq(asymmetric, std::size_t{0}, "asymmetric point-pair classifications");
    data["point_pairs_non_unique_witness"] = non_unique;
  }

  // Point-hyperline pairs against W_{2,3,4} \ W / W_{1,2,3}.
  {
    std::map<std::string, std::size_t> counts;
    std::map<std::string, std::set<ElementId>> class_to_coset;
    std::map<ElementId, std::set<std::string>> coset_to_class;
    std::size_t non_unique = 0;
    for (ElementId x : points) {
      for (ElementId h : hyperlines) {
        const auto r = classify_point_hyperline(g, x, h);
        const auto name = std::string(to_string(r.relation));
        if (!r.unique()) ++non_unique;
        const ElementId between = w.multiply(w.inverse(rep_of(x)), rep_of(h));
        const ElementId coset = min_double_coset_rep(w, kW234, w.element(between), kW123).id;
        ++counts[name];
        class_to_coset[name].insert(coset);
        coset_to_class[coset].insert(name);
      }
    }
    const auto cosets = enumerate_double_cosets(w, kW234, kW123);
    c.expect_eq(class_to_coset.size(), cosets.size(), "point-hyperline class count");
    for (const auto& [name, set] : class_to_coset) {
      c.expect_eq(set.size(), std::size_t{1}, "cosets of class " + name);
    }
    for (const auto& [coset, set] : coset_to_class) {
      c.expect_eq(set.size(), std::size_t{1}, "classes of one double coset");
    }
    for (const auto& rec : cosets) {
      const auto it = coset_to_class.find(rec.min_rep.id);
      if (it == coset_to_class.end() || it->second.size() != 1) continue;
      const std::string name = *it->second.begin();
      c.expect_eq(counts[name], points.size() * rec.member_ids.size() / 48,
                  "pairs in class " + name);
      data["point_hyperline_pairs"][name] = {{"pairs", counts[name]},
                                             {"min_rep", format_word(rec.min_rep.normal_form)},
                                             {"coset_size", rec.member_ids.size()}};
    }
    data["point_hyperline_non_unique_witness"] = non_unique;
  }
  return "thin M1-M4 pass; 5 point-pair and 3 point-hyperline classes match double cosets";
}

// --- 7 ---------------------------------------------------------------------
std::string generalized_polygons(Checks& c, json& data) {
  const NgonReport w2 = check_generalized_ngon(build_w2(), 4, Thickness::kThick);
  c.expect(w2.pass, "W(2) generalized quadrangle");
  c.expect_eq(w2.points, std::size_t{15}, "W(2) points");
  c.expect_eq(w2.lines, std::size_t{15}, "W(2) lines");
  c.expect(w2.min_point_degree == 3 && w2.max_point_degree == 3, "3 lines per point");
  c.expect(w2.min_line_degree == 3 && w2.max_line_degree == 3, "3 points per line");
  c.expect_eq(w2.girth, 8, "W(2) girth");
  c.expect_eq(w2.diameter, 4, "W(2) diameter");
  data["w2"] = to_json(w2);
  for (auto [q, n] : {std::pair{2, std::size_t{7}}, std::pair{4, std::size_t{21}}}) {
    const NgonReport r = check_generalized_ngon(build_projective_plane(q), 3, Thickness::kThick);
    const std::string tag = "PG(2," + std::to_string(q) + ")";
    c.expect(r.pass, tag + " projective plane");
    c.expect_eq(r.points, n, tag + " points");
    c.expect_eq(r.lines, n, tag + " lines");
    data["pg2_" + std::to_string(q)] = to_json(r);
  }
  return "W(2), PG(2,2), PG(2,4)";
}

// --- 8 ---------------------------------------------------------------------
std::string polar_space(Checks& c, json& data) {
  const IncidenceGeometry g = build_sp6_polar();
  const std::array<std::size_t, 3> counts{63, 315, 135};
  for (std::size_t t = 0; t < 3; ++t) {
    c.expect_eq(g.elements_of_type(t).size(), counts[t], g.type_names()[t] + " count");
  }
  std::size_t point_ok = 0, plane_ok = 0;
  for (ElementId p : g.elements_of_type(0)) {
    if (check_generalized_ngon(residue(g, Flag{{p}}), 4, Thickness::kThick).pass) ++point_ok;
  }
  for (ElementId s : g.elements_of_type(2)) {
    if (check_generalized_ngon(residue(g, Flag{{s}}), 3, Thickness::kThick).pass) ++plane_ok;
  }
  c.expect_eq(point_ok, std::size_t{63}, "point residues that are quadrangles");
  c.expect_eq(plane_ok, std::size_t{135}, "plane residues that are projective planes");
  data = {{"points", 63}, {"lines", 315}, {"planes", 135},
          {"point_residues_ok", point_ok}, {"plane_residues_ok", plane_ok}};
  return "63/315/135; all point and plane residues pass";
}

// --- 9 ---------------------------------------------------------------------
std::string building_block(Checks& c, json& data) {
  const std::array<Generator, 3> gens{1, 2, 3};
  const CoxeterGroup c3 = build_group(CoxeterMatrix::f4().submatrix(gens));
  const BuildingBlockReport sp6 = verify_building_block(build_sp6_polar(), c3);
  c.expect(sp6.pass, "sp6 building block");
  c.expect_eq(format_word(sp6.observed_word), std::string("1,2,3,2,1"), "sp6 Weyl word");
  c.expect_eq(sp6.points, std::size_t{63}, "sp6 points");
  c.expect(sp6.min_opposite_per_point == 32 && sp6.max_opposite_per_point == 32,
           "32 opposite points per point");
  c.expect(sp6.min_chambers_per_point == 45 && sp6.max_chambers_per_point == 45,
           "45 chambers per point");
  c.expect_eq(sp6.chamber_checks, std::size_t{63 * 32 * 45}, "sp6 chamber checks");
  c.expect(sp6.collinear_max_distance < 5, "collinear pairs are nearer than 5");

  const BuildingBlockReport octa = verify_building_block(thin_octahedron(c3), c3);
  c.expect(octa.pass, "octahedron building block");
  c.expect_eq(format_word(octa.observed_word), std::string("1,2,3,2,1"), "octahedron Weyl word");
  c.expect_eq(octa.chambers, std::size_t{48}, "octahedron chambers");
  data = {{"sp6", to_json(sp6)}, {"octahedron", to_json(octa)}};
  return std::to_string(sp6.chamber_checks) + " sp6 checks, " +
         std::to_string(octa.chamber_checks) + " octahedron checks";
}

// --- 10 --------------------------------------------------------------------
std::string alternating_words(Checks& c, json& data) {
  const CoxeterGroup w = build_group(CoxeterMatrix::f4());
  data = json::array();
  for (int k = 1; k <= 4; ++k) {
    const AlternatingReport r = verify_alternating_words(w, k);
    c.expect(r.pass, "k = " + std::to_string(k));
    for (const auto& word : r.words) c.expect_eq(word.length, 5 * k, format_word(word.word));
    data.push_back(to_json(r));
  }
  return "k = 1..4, both block orders";
}

// --- 11 --------------------------------------------------------------------
std::string projection_convexity(Checks& c, json& data) {
  const IncidenceGeometry g = build_w2();
  const ChamberSystem cs = flag_complex(g);
  const auto points = g.elements_of_type(0);
  const auto lines = g.elements_of_type(1);

  std::size_t opposite_pairs = 0, bad_projections = 0;
  for (ElementId p : points) {
    const auto from = flag_residue(cs, {p});
    for (ElementId r : points) {
      if (r == p || collinear(g, p, r)) continue;
      ++opposite_pairs;
      const auto proj = projection(cs, from, flag_residue(cs, {r}));
      if (proj != std::vector<ElementId>{r}) ++bad_projections;
    }
  }
  c.expect_eq(opposite_pairs, std::size_t{15 * 8}, "ordered opposite point pairs");
  c.expect_eq(bad_projections, std::size_t{0}, "point projections other than the point");

  // Apartments: 4 points and 4 lines whose incidence is exactly an 8-cycle.
  std::size_t apartments = 0, non_convex = 0;
  for (ElementId l0 : lines) {
    for (ElementId l2 : lines) {
      if (l2 <= l0) continue;
      if (std::any_of(g.incident(l0).begin(), g.incident(l0).end(),
                      [&](ElementId p) { return g.incident(p, l2); })) {
        continue;
      }
      // Lines meeting both l0 and l2 pair up points of l0 with points of l2.
      std::vector<std::array<ElementId, 3>> transversals;  // line, point on l0, point on l2
      for (ElementId m : lines) {
        if (m == l0 || m == l2) continue;
        std::optional<ElementId> a, b;
        for (ElementId p : g.incident(m)) {
          if (g.incident(p, l0)) a = p;
          if (g.incident(p, l2)) b = p;
        }
        if (a && b) transversals.push_back({m, *a, *b});
      }
      for (std::size_t i = 0; i < transversals.size(); ++i) {
        for (std::size_t j = i + 1; j < transversals.size(); ++j) {
          const auto& s = transversals[i];
          const auto& t = transversals[j];
          if (s[1] == t[1] || s[2] == t[2]) continue;
          // Each apartment has two pairs of opposite lines; count it once.
          if (std::min(s[0], t[0]) < l0) continue;
          ++apartments;
          const std::vector<ElementId> S{l0, l2, s[0], t[0], s[1], s[2], t[1], t[2]};
          if (!is_convex(cs, S)) ++non_convex;
        }
      }
    }
  }
  c.expect_eq(apartments, std::size_t{90}, "apartments of W(2)");
  c.expect_eq(non_convex, std::size_t{0}, "non-convex apartments");
  data = {{"chambers", cs.size()},
          {"opposite_point_pairs", opposite_pairs},
          {"apartments", apartments},
          {"non_convex", non_convex}};
  return std::to_string(apartments) + " apartments convex";
}

// --- 12 --------------------------------------------------------------------
std::string embedding_fixtures(Checks& c, json& data) {
  const CoxeterGroup w = build_group(CoxeterMatrix::f4());

  const EmbeddedQuadrangle pass = ov_pass_fixture(w);
  const OvReport pass_ov = check_ov(pass);
  const EmbeddingReport pass_kind = classify_embedding(pass);
  c.expect(check_quadrangle(pass, Thickness::kThin).pass, "ov-pass is a quadrangle");
  c.expect(pass_ov.pass, "ov-pass satisfies (OV)");
  c.expect(!pass_kind.improper, "ov-pass is proper");
  data["ov-pass"] = {{"ov", to_json(pass_ov, pass.ambient)},
                     {"embedding", to_json(pass_kind, pass.ambient)}};

  const EmbeddedQuadrangle bad = ov_violation_fixture();
  const OvReport bad_ov = check_ov(bad);
  c.expect(check_quadrangle(bad, Thickness::kThin).pass, "ov-violation is a quadrangle");
  c.expect(!bad_ov.pass, "ov-violation fails (OV)");
  c.expect_eq(bad_ov.violations.size(), std::size_t{1}, "ov-violation witness count");
  if (!bad_ov.violations.empty()) {
    const auto& v = bad_ov.violations.front();
    c.expect(bad.ambient.label(v.hyperline) == "h_ab" && bad.ambient.label(v.x) == "a" &&
                 bad.ambient.label(v.y) == "b" && bad.ambient.label(v.line) == "L",
             "ov-violation witness is (h_ab, a, b, L)");
  }
  data["ov-violation"] = {{"ov", to_json(bad_ov, bad.ambient)},
                          {"embedding", to_json(classify_embedding(bad), bad.ambient)}};

  const EmbeddedQuadrangle imp = improper_fixture(w);
  const EmbeddingReport imp_kind = classify_embedding(imp);
  c.expect(check_quadrangle(imp, Thickness::kThin).pass, "improper is a quadrangle");
  c.expect(imp_kind.improper, "improper fixture classified improper");
  c.expect_eq(imp_kind.line_map.size(), std::size_t{4}, "line map size");
  for (const auto& choice : imp_kind.line_map) {
    c.expect(choice.line.has_value() && choice.through_point, "line map entry through point");
  }
  c.expect(imp_kind.missing_common_line.empty(), "no missing common line");
  data["improper"] = {{"ov", to_json(check_ov(imp), imp.ambient)},
                      {"embedding", to_json(imp_kind, imp.ambient)}};
  return "pass / violation-with-witness / improper-with-line-map";
}

struct Criterion {
  const char* title;
  double limit_seconds;
  std::string (*body)(Checks&, json&);
};

}  // namespace

const std::array<Criterion, kCriterionCount> kCriteria{{
    {"F4 enumeration", 5.0, f4_enumeration},
    {"minimal double coset representatives", 10.0, lemma_reps},
    {"parabolic orders and thin F4 element counts", 0.0, parabolic_indices},
    {"double coset partitions", 0.0, double_coset_partitions},
    {"gallery distance equals Weyl length", 60.0, gallery_word_lemma},
    {"thin metasymplectic axioms and position classes", 60.0, thin_metasymplectic},
    {"generalized polygons", 5.0, generalized_polygons},
    {"symplectic polar space over GF(2)", 60.0, polar_space},
    {"building block", 120.0, building_block},
    {"alternating words", 1.0, alternating_words},
    {"projection and apartment convexity in W(2)", 120.0, projection_convexity},
    {"embedding fixtures", 1.0, embedding_fixtures},
}};

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) {
    throw Error(ErrorCode::kUnsupported, "no criterion " + std::to_string(id));
  }
  const Criterion& crit = kCriteria[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.title = crit.title;
  r.limit_seconds = crit.limit_seconds;
  Checks checks;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = crit.body(checks, r.data);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
    checks.expect(false, "time limit exceeded");
  }
  r.pass = checks.ok();
  if (!r.pass) r.detail = checks.summary();
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  return out;
}

json to_json(const CriterionResult& r) {
  return {{"id", r.id},          {"title", r.title},
          {"pass", r.pass},      {"seconds", r.seconds},
          {"limit_seconds", r.limit_seconds}, {"detail", r.detail},
          {"data", r.data}};
}

}  // namespace chamberlab
