// chamberlab command line front end. Every command prints one JSON report on
// stdout. Exit codes: 0 pass, 1 a gated check failed, 2 usage or input error.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chamberlab/axioms.hpp"
#include "chamberlab/building_block.hpp"
#include "chamberlab/chambers.hpp"
#include "chamberlab/coxeter.hpp"
#include "chamberlab/embedding.hpp"
#include "chamberlab/error.hpp"
#include "chamberlab/geometry.hpp"
#include "chamberlab/io.hpp"
#include "chamberlab/parabolic.hpp"
#include "chamberlab/positions.hpp"
#include "chamberlab/report.hpp"
#include "chamberlab/verify.hpp"
#include "json.hpp"

namespace cl = chamberlab;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr const char* kWorkspaceEnv = "CHAMBERLAB_WORKSPACE";

enum class Verdict { kPass, kFail, kDiagnostic };

struct Outcome {
  Verdict verdict = Verdict::kPass;
  json details;
};

Outcome gated(bool pass, json details) {
  return {pass ? Verdict::kPass : Verdict::kFail, std::move(details)};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shipped structures, optionally cached in the workspace directory.

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

cl::IncidenceGeometry cached(const std::string& key,
                             const std::function<cl::IncidenceGeometry()>& make) {
  const char* ws = std::getenv(kWorkspaceEnv);
  if (!ws || !*ws) return make();
  namespace fs = std::filesystem;
  const fs::path path = fs::path(ws) / (key + "-" + fnv1a(key) + ".geom");
  if (fs::exists(path)) {
    std::ifstream in(path);
    return cl::read_geometry(in);
  }
  cl::IncidenceGeometry g = make();
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    cl::write_geometry(out, g);
  }
  fs::rename(tmp, path);
  return g;
}

const cl::CoxeterGroup& f4_group() {
  static const cl::CoxeterGroup group = cl::build_group(cl::CoxeterMatrix::f4());
  return group;
}

cl::IncidenceGeometry shipped_geometry(const std::string& model, int q) {
  if (model == "w2") return cached("w2", cl::build_w2);
  if (model == "pg2") {
    return cached("pg2-q" + std::to_string(q), [q] { return cl::build_projective_plane(q); });
  }
  if (model == "sp6") return cached("sp6", cl::build_sp6_polar);
  if (model == "thinf4") return cached("thinf4", [] { return cl::thin_f4_geometry(f4_group()); });
  throw cl::Error(cl::ErrorCode::kUnsupported, "unknown model '" + model + "'");
}

struct GeometrySource {
  std::string model;
  std::string input;
  int q = 2;

  void add_to(CLI::App* cmd, const std::string& models) {
    cmd->add_option("--model", model, "shipped geometry: " + models);
    cmd->add_option("--input", input, "geometry file in the text format");
    cmd->add_option("--q", q, "order for pg2");
  }

  cl::IncidenceGeometry load() const {
    if (!input.empty() && !model.empty()) {
      throw CLI::ValidationError("--model and --input are mutually exclusive");
    }
    if (!input.empty()) {
      std::istringstream in(cl::read_file(input));
      try {
        return cl::read_geometry(in);
      } catch (const cl::Error& e) {
        throw cl::Error(e.code(), input + ": " + e.what());
      }
    }
    if (model.empty()) throw CLI::ValidationError("one of --model or --input is required");
    return shipped_geometry(model, q);
  }
};

cl::CoxeterMatrix load_matrix(const std::string& path) {
  if (path.empty()) return cl::CoxeterMatrix::f4();
  return cl::parse_matrix_json(cl::read_file(path));
}

// ---------------------------------------------------------------------------
// Chamber models for the `chambers` commands.
//
// coxeter-f4: chambers are group elements written as words; an element is
// `<type>@<word>`, the type-t (1-based) element of that chamber.
// w2: chambers and elements are given by labels of the quadrangle W(2).
// Lists of elements are separated by ';'.

struct ChamberModel {
  std::string name;
  cl::IncidenceGeometry geom;
  cl::ChamberSystem cs;
  std::optional<cl::CoxeterGroup> group;

  cl::ChamberId chamber(const std::string& ref) const {
    if (name == "coxeter-f4") {
      return cl::reduce(*group, ref == "e" ? cl::Word{} : cl::parse_word(ref)).id;
    }
    std::vector<cl::ElementId> flag;
    for (const auto& label : split(ref, ';')) flag.push_back(geom.find(label));
    const auto res = cl::flag_residue(cs, flag);
    if (res.chambers.size() != 1) {
      throw cl::Error(cl::ErrorCode::kInvalidFlag, "invalid flag: '" + ref + "' is not a chamber");
    }
    return res.chambers.front();
  }

  cl::ElementId element(const std::string& ref) const {
    if (name == "coxeter-f4") {
      const auto at = ref.find('@');
      if (at == std::string::npos) {
        throw cl::Error(cl::ErrorCode::kParse, "expected <type>@<word>, got '" + ref + "'");
      }
      const int type = std::stoi(ref.substr(0, at));
      if (type < 1 || type > static_cast<int>(cs.rank())) {
        throw cl::Error(cl::ErrorCode::kLetterOutOfRange, "type out of range in '" + ref + "'");
      }
      return cs.flag(chamber(ref.substr(at + 1)))[static_cast<std::size_t>(type - 1)];
    }
    return geom.find(ref);
  }

  std::vector<cl::ElementId> elements(const std::string& refs) const {
    std::vector<cl::ElementId> out;
    for (const auto& r : split(refs, ';')) out.push_back(element(r));
    return out;
  }

  json describe(cl::ElementId e) const {
    if (name != "coxeter-f4") return geom.label(e);
    const cl::ChamberId c = cs.chambers_containing(e).front();
    return std::to_string(cs.element_type(e) + 1) + "@" + cl::format_word(group->normal_form(c));
  }

  json describe(const std::vector<cl::ElementId>& es) const {
    json out = json::array();
    for (auto e : es) out.push_back(describe(e));
    return out;
  }
};

ChamberModel load_model(const std::string& name) {
  if (name == "coxeter-f4") {
    cl::ChamberSystem cs = cl::coxeter_complex(f4_group());
    cl::IncidenceGeometry g = cl::geometry_of(cs, {"point", "line", "plane", "hyperline"});
    return {name, std::move(g), std::move(cs), f4_group()};
  }
  if (name == "w2") {
    cl::IncidenceGeometry g = shipped_geometry("w2", 2);
    cl::ChamberSystem cs = cl::flag_complex(g);
    return {name, std::move(g), std::move(cs), cl::build_group(cl::CoxeterMatrix::dihedral(4))};
  }
  throw CLI::ValidationError("--model must be coxeter-f4 or w2");
}

// ---------------------------------------------------------------------------

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kDiagnostic:
      return "diagnostic";
  }
  return "fail";
}

json acceptance_json(const std::vector<cl::CriterionResult>& results, bool& pass) {
  json out = json::array();
  pass = true;
  for (const auto& r : results) {
    out.push_back(cl::to_json(r));
    pass = pass && r.pass;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chamberlab: Coxeter groups, chamber systems and incidence geometries"};
  app.require_subcommand(1);
  std::string command;
  std::function<Outcome()> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Outcome()> fn) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    cmd->callback([&, cmd, fn] {
      command = cmd->get_parent()->get_name() + " " + cmd->get_name();
      action = fn;
    });
    return cmd;
  };

  // group ------------------------------------------------------------------
  std::string matrix_path, word_text;
  std::size_t cap = cl::CoxeterGroup::kDefaultCap;
  CLI::App* group = app.add_subcommand("group", "Coxeter group enumeration")->require_subcommand(1);
  auto matrix_opts = [&](CLI::App* cmd) {
    cmd->add_option("--matrix", matrix_path, "JSON Coxeter matrix (0 = infinity); default F4");
    cmd->add_option("--cap", cap, "maximum number of elements");
  };
  matrix_opts(leaf(group, "build", "enumerate the group", [&] {
    const auto g = cl::build_group(load_matrix(matrix_path), cap);
    json d{{"rank", g.rank()}, {"order", g.order()}};
    try {
      d["longest"] = cl::to_json(cl::longest_element(g));
    } catch (const cl::Error&) {
      d["longest"] = nullptr;
    }
    return Outcome{Verdict::kPass, d};
  }));
  {
    CLI::App* nf = leaf(group, "normalform", "ShortLex normal form of a word", [&] {
      const auto g = cl::build_group(load_matrix(matrix_path), cap);
      const cl::Word w = cl::parse_word(word_text);
      json d = cl::to_json(cl::reduce(g, w));
      d["input"] = cl::format_word(w);
      d["input_reduced"] = cl::is_reduced(g, w);
      return Outcome{Verdict::kPass, d};
    });
    matrix_opts(nf);
    nf->add_option("--word", word_text, "comma-separated generators, 1-based")->required();
  }
  matrix_opts(leaf(group, "longest", "longest element", [&] {
    const auto g = cl::build_group(load_matrix(matrix_path), cap);
    return Outcome{Verdict::kPass, cl::to_json(cl::longest_element(g))};
  }));

  // cosets -----------------------------------------------------------------
  std::string left_text, right_text, claims_path;
  bool with_members = false;
  CLI::App* cosets = app.add_subcommand("cosets", "parabolic double cosets")->require_subcommand(1);
  {
    CLI::App* dbl = leaf(cosets, "double", "enumerate W_I \\ W / W_J", [&] {
      const auto g = cl::build_group(load_matrix(matrix_path), cap);
      const auto I = cl::parse_subset(left_text);
      const auto J = cl::parse_subset(right_text);
      json list = json::array();
      for (const auto& r : cl::enumerate_double_cosets(g, I, J)) list.push_back(cl::to_json(r, with_members));
      return Outcome{Verdict::kPass, {{"count", list.size()}, {"cosets", list}}};
    });
    matrix_opts(dbl);
    dbl->add_option("--left", left_text, "generator subset I, e.g. 2,3,4")->required();
    dbl->add_option("--right", right_text, "generator subset J")->required();
    dbl->add_flag("--members", with_members, "list member normal forms");
  }
  {
    CLI::App* vl = leaf(cosets, "verify-lemma", "check claimed minimal representatives", [&] {
      const auto g = cl::build_group(load_matrix(matrix_path), cap);
      const auto claims = claims_path.empty() ? cl::shipped_lemma_claims()
                                              : cl::parse_claims_json(cl::read_file(claims_path));
      const auto r = cl::verify_lemma_reps(g, claims);
      return gated(r.pass, cl::to_json(r));
    });
    matrix_opts(vl);
    vl->add_option("--claims", claims_path, "JSON list of {left, word, right}; default shipped");
  }

  // chambers ---------------------------------------------------------------
  std::string model_name = "coxeter-f4", from_ref, to_ref, set_ref, gallery_text;
  CLI::App* chambers = app.add_subcommand("chambers", "chamber system queries")->require_subcommand(1);
  auto model_opt = [&](CLI::App* cmd) {
    cmd->add_option("--model", model_name, "coxeter-f4 or w2")->default_val("coxeter-f4");
  };
  {
    CLI::App* cmd = leaf(chambers, "distance", "gallery and Weyl distance of two chambers", [&] {
      const ChamberModel m = load_model(model_name);
      const auto a = m.chamber(from_ref);
      const auto b = m.chamber(to_ref);
      const auto delta = cl::weyl_distance(m.cs, *m.group, a, b);
      return Outcome{Verdict::kPass,
                     {{"from", a},
                      {"to", b},
                      {"gallery_distance", cl::gallery_distance(m.cs, a, b)},
                      {"weyl_distance", cl::to_json(delta)}}};
    });
    model_opt(cmd);
    cmd->add_option("--from", from_ref, "chamber")->required();
    cmd->add_option("--to", to_ref, "chamber")->required();
  }
  {
    CLI::App* cmd = leaf(chambers, "project", "projection of one flag onto another", [&] {
      const ChamberModel m = load_model(model_name);
      const auto A = cl::flag_residue(m.cs, m.elements(from_ref));
      const auto B = cl::flag_residue(m.cs, m.elements(to_ref));
      return Outcome{Verdict::kPass,
                     {{"from", m.describe(A.flag)},
                      {"onto", m.describe(B.flag)},
                      {"projection", m.describe(cl::projection(m.cs, A, B))}}};
    });
    model_opt(cmd);
    cmd->add_option("--from", from_ref, "flag A, elements separated by ';'")->required();
    cmd->add_option("--onto", to_ref, "flag B")->required();
  }
  {
    CLI::App* cmd = leaf(chambers, "convex", "convexity of a set of elements", [&] {
      const ChamberModel m = load_model(model_name);
      const auto S = m.elements(set_ref);
      const auto r = cl::check_convex(m.cs, S);
      json d{{"convex", r.convex}, {"flags_checked", r.flags_checked}};
      if (!r.convex) {
        d["witness"] = {{"from", m.describe(r.witness_from)},
                        {"onto", m.describe(r.witness_onto)},
                        {"projection", m.describe(r.witness_projection)}};
      }
      return gated(r.convex, d);
    });
    model_opt(cmd);
    cmd->add_option("--set", set_ref, "elements separated by ';'")->required();
  }

  // geom -------------------------------------------------------------------
  CLI::App* geom = app.add_subcommand("geom", "incidence geometries")->require_subcommand(1);
  std::string build_model, out_path;
  int build_q = 2;
  GeometrySource src;
  int ngon_n = 0;
  bool thick = false, thin = false;
  std::string x_label, y_label, fixture, points_text, hyperlines_text;
  {
    CLI::App* cmd = leaf(geom, "build", "build a shipped geometry", [&] {
      const auto g = shipped_geometry(build_model, build_q);
      json counts = json::object();
      for (std::size_t t = 0; t < g.rank(); ++t) counts[g.type_names()[t]] = g.elements_of_type(t).size();
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw cl::Error(cl::ErrorCode::kParse, "cannot write '" + out_path + "'");
        cl::write_geometry(out, g);
      }
      return Outcome{Verdict::kPass, {{"model", build_model}, {"counts", counts}}};
    });
    cmd->add_option("model", build_model, "w2, pg2, sp6 or thinf4")
        ->required()
        ->check(CLI::IsMember({"w2", "pg2", "sp6", "thinf4"}));
    cmd->add_option("--q", build_q, "order for pg2 (2, 3 or 4)");
    cmd->add_option("--out", out_path, "write the geometry in the text format");
  }
  {
    CLI::App* cmd = leaf(geom, "check-ngon", "generalized n-gon axioms", [&] {
      if (thick && thin) throw CLI::ValidationError("--thick and --thin are exclusive");
      const auto t = thick ? cl::Thickness::kThick : thin ? cl::Thickness::kThin : cl::Thickness::kAny;
      const auto r = cl::check_generalized_ngon(src.load(), ngon_n, t);
      return gated(r.pass, cl::to_json(r));
    });
    src.add_to(cmd, "w2, pg2, sp6, thinf4");
    cmd->add_option("--n", ngon_n, "polygon parameter")->required();
    cmd->add_flag("--thick", thick, "require every element on at least 3 others");
    cmd->add_flag("--thin", thin, "require every element on exactly 2 others");
  }
  {
    CLI::App* cmd = leaf(geom, "check-meta", "metasymplectic axioms M1-M4", [&] {
      const bool thin_mode = thin || src.model == "thinf4";
      const auto r = cl::check_metasymplectic(src.load(), thin_mode);
      return gated(r.pass, cl::to_json(r));
    });
    src.add_to(cmd, "thinf4");
    cmd->add_flag("--thin", thin, "expect thin residues");
  }
  {
    CLI::App* cmd = leaf(geom, "classify", "mutual position of two elements", [&] {
      const auto g = src.load();
      const auto x = g.find(x_label);
      const auto y = g.find(y_label);
      const auto tx = g.type_of(x), ty = g.type_of(y);
      auto labels = [&](const std::vector<cl::ElementId>& es) {
        json out = json::array();
        for (auto e : es) out.push_back(g.label(e));
        return out;
      };
      auto label = [&](const std::optional<cl::ElementId>& e) -> json {
        return e ? json(g.label(*e)) : json(nullptr);
      };
      json d{{"x", x_label}, {"y", y_label}};
      if (tx == 0 && ty == 0) {
        const auto r = cl::classify_point_pair(g, x, y);
        d["relation"] = std::string(cl::to_string(r.relation));
        d["witness"] = label(r.witness);
        d["witness_count"] = r.witness_count;
        d["unique"] = r.unique();
      } else if (tx == 0 && ty == 3) {
        const auto r = cl::classify_point_hyperline(g, x, y);
        d["relation"] = std::string(cl::to_string(r.relation));
        d["witness"] = label(r.witness);
        d["witness_count"] = r.witness_count;
        d["unique"] = r.unique();
      } else if (tx == 3 && ty == 3) {
        const auto r = cl::hyperline_intersection(g, x, y);
        d["relation"] = std::string(cl::to_string(r.kind));
        d["witness"] = label(r.witness);
        d["intersection"] = labels(r.intersection);
      } else {
        throw cl::Error(cl::ErrorCode::kTypeMismatch,
                        "type mismatch: classify takes point/point, point/hyperline or "
                        "hyperline/hyperline");
      }
      return Outcome{Verdict::kDiagnostic, d};
    });
    src.add_to(cmd, "thinf4");
    cmd->add_option("--x", x_label, "first element label")->required();
    cmd->add_option("--y", y_label, "second element label")->required();
  }
  auto quadrangle = [&]() -> cl::EmbeddedQuadrangle {
    if (!fixture.empty()) return cl::make_fixture(fixture, f4_group());
    cl::EmbeddedQuadrangle e{src.load(), {}, {}};
    for (const auto& l : split(points_text, ',')) e.points.push_back(e.ambient.find(l));
    for (const auto& l : split(hyperlines_text, ',')) e.hyperlines.push_back(e.ambient.find(l));
    return e;
  };
  auto quadrangle_opts = [&](CLI::App* cmd) {
    cmd->add_option("--fixture", fixture, "ov-pass, ov-violation or improper");
    src.add_to(cmd, "thinf4");
    cmd->add_option("--points", points_text, "point labels of the quadrangle, comma-separated");
    cmd->add_option("--hyperlines", hyperlines_text, "hyperline labels, comma-separated");
  };
  quadrangle_opts(leaf(geom, "ov", "condition (OV) for an embedded quadrangle", [&] {
    const auto e = quadrangle();
    const auto r = cl::check_ov(e);
    return gated(r.pass, cl::to_json(r, e.ambient));
  }));
  quadrangle_opts(leaf(geom, "embedding", "proper or improper embedding", [&] {
    const auto e = quadrangle();
    return Outcome{Verdict::kDiagnostic, cl::to_json(cl::classify_embedding(e), e.ambient)};
  }));

  // verify -----------------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "lemma verifiers")->require_subcommand(1);
  std::string bb_model = "sp6";
  int blocks = 0;
  leaf(verify, "lemma-red", "shipped minimal double coset representatives", [&] {
    const auto r = cl::verify_lemma_reps(f4_group(), cl::shipped_lemma_claims());
    return gated(r.pass, cl::to_json(r));
  });
  {
    CLI::App* cmd = leaf(verify, "building-block", "opposite points are joined by 1,2,3,2,1", [&] {
      const std::array<cl::Generator, 3> gens{1, 2, 3};
      const auto c3 = cl::build_group(cl::CoxeterMatrix::f4().submatrix(gens));
      const auto polar = bb_model == "sp6" ? shipped_geometry("sp6", 2) : cl::thin_octahedron(c3);
      const auto r = cl::verify_building_block(polar, c3);
      return gated(r.pass, cl::to_json(r));
    });
    cmd->add_option("--model", bb_model, "sp6 or octahedron")
        ->default_val("sp6")
        ->check(CLI::IsMember({"sp6", "octahedron"}));
  }
  {
    CLI::App* cmd = leaf(verify, "alternating", "alternating block words are reduced", [&] {
      json list = json::array();
      bool pass = true;
      for (int k = blocks ? blocks : 1; k <= (blocks ? blocks : 4); ++k) {
        const auto r = cl::verify_alternating_words(f4_group(), k);
        pass = pass && r.pass;
        list.push_back(cl::to_json(r));
      }
      return gated(pass, list);
    });
    cmd->add_option("--k", blocks, "number of blocks (1-4); default all");
  }
  {
    CLI::App* cmd = leaf(verify, "gallery-word", "word of a gallery and its minimality", [&] {
      const ChamberModel m = load_model(model_name);
      const auto g = cl::parse_gallery(gallery_text);
      const auto w = cl::gallery_word(m.cs, g);
      const bool minimal = cl::is_minimal_gallery(m.cs, *m.group, g);
      return gated(minimal, {{"word", cl::format_word(w)},
                             {"length", w.letters.size()},
                             {"reduced", cl::is_reduced(*m.group, w)},
                             {"minimal", minimal}});
    });
    model_opt(cmd);
    cmd->add_option("--gallery", gallery_text, "comma-separated chamber ids")->required();
  }
  leaf(verify, "all", "the full acceptance suite", [&] {
    bool pass = false;
    json d = acceptance_json(cl::run_acceptance(), pass);
    return gated(pass, d);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = action();
  } catch (const CLI::ValidationError& e) {
    std::cerr << json{{"command", command}, {"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return kExitUsage;
  } catch (const cl::Error& e) {
    std::cerr << json{{"command", command},
                      {"error", std::string(cl::to_string(e.code()))},
                      {"message", e.what()}}
                     .dump()
              << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << json{{"command", command}, {"error", "internal"}, {"message", e.what()}}.dump()
              << '\n';
    return kExitUsage;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << json{{"command", command},
                    {"verdict", verdict_name(outcome.verdict)},
                    {"details", outcome.details},
                    {"wall_time", seconds}}
                   .dump(2)
            << '\n';
  return outcome.verdict == Verdict::kFail ? kExitFail : kExitPass;
}
