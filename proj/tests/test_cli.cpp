#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + CHAMBERLAB_CLI + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json details(const Run& r) { return nlohmann::json::parse(r.out).at("details"); }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("chamberlab_cli_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, ExitCodeMatrix) {
  struct Case {
    std::string args;
    int code;
  };
  const std::vector<Case> cases{
      // pass
      {"group build", 0},
      {"group normalform --word 1,1", 0},
      {"group longest", 0},
      {"cosets double --left 2,3,4 --right 2,3,4", 0},
      {"chambers distance --from e --to 1,2,3,2,1", 0},
      {"chambers project --model w2 --from p1 --onto p2", 0},
      {"chambers convex --model w2 --set 'p1;p2'", 0},
      {"chambers convex --model w2 --set 'p1;p4'", 1},
      {"geom build w2", 0},
      {"geom build pg2 --q 4", 0},
      {"geom check-ngon --model w2 --n 4 --thick", 0},
      {"geom check-meta --model thinf4", 0},
      {"geom classify --model thinf4 --x 0 --y 1", 0},
      {"geom ov --fixture ov-pass", 0},
      {"geom embedding --fixture improper", 0},
      {"verify building-block --model octahedron", 0},
      {"verify alternating", 0},
      {"verify gallery-word --gallery 0,1", 0},
      // fail
      {"geom check-ngon --model w2 --n 3", 1},
      {"geom check-meta --model thinf4 --thin --input /dev/null", 2},
      {"geom ov --fixture ov-violation", 1},
      {"verify gallery-word --gallery 0,1,0", 1},
      {"cosets verify-lemma", 1},
      // usage
      {"", 2},
      {"bogus", 2},
      {"group", 2},
      {"group normalform", 2},
      {"group normalform --word 1,9", 2},
      {"group normalform --word x", 2},
      {"geom build nope", 2},
      {"geom build pg2 --q 5", 2},
      {"geom check-ngon --n 4", 2},
      {"geom ov --fixture nope", 2},
      {"chambers distance --model nope --from e --to e", 2},
      {"verify gallery-word --gallery 0,5", 2},
      {"verify building-block --model nope", 2},
      {"group build --matrix /nonexistent.json", 2},
  };
  for (const auto& c : cases) EXPECT_EQ(run(c.args).code, c.code) << c.args;
}

TEST(Cli, NormalFormReport) {
  const auto r = run("group normalform --word 1,1");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "pass");
  EXPECT_EQ(j.at("details").at("normal_form"), "");
  EXPECT_EQ(j.at("details").at("length"), 0);
  EXPECT_TRUE(j.contains("wall_time"));
}

TEST(Cli, BuildingBlockCounts) {
  const auto r = run("verify building-block --model sp6");
  ASSERT_EQ(r.code, 0);
  const auto d = details(r);
  EXPECT_EQ(d.at("points"), 63);
  EXPECT_EQ(d.at("opposite_per_point"), nlohmann::json::array({32, 32}));
  EXPECT_EQ(d.at("chambers_per_point"), nlohmann::json::array({45, 45}));
}

TEST(Cli, LemmaReportListsAllClaims) {
  const auto r = run("verify lemma-red");
  const auto d = details(r);
  EXPECT_EQ(d.at("claims").size(), 8u);
  EXPECT_EQ(r.code, d.at("pass").get<bool>() ? 0 : 1);
}

TEST(Cli, MatrixAndClaimsFiles) {
  const auto m = temp_file("b3.json", "[[1,3,2],[3,1,4],[2,4,1]]");
  const auto r = run("group build --matrix " + m.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(details(r).at("order"), 48);
  const auto bad = temp_file("bad.json", "[[1,3],");
  EXPECT_EQ(run("group build --matrix " + bad.string()).code, 2);
  const auto claims = temp_file("claims.json", R"([{"left":[2,3,4],"word":[1,2,3,2,1],"right":[2,3,4]}])");
  EXPECT_EQ(run("cosets verify-lemma --claims " + claims.string()).code, 0);
  const auto wrong = temp_file("wrong.json", R"([{"left":[2,3,4],"word":[2],"right":[2,3,4]}])");
  EXPECT_EQ(run("cosets verify-lemma --claims " + wrong.string()).code, 1);
}

TEST(Cli, GeometryFileRoundTripAndParseErrors) {
  const auto out = std::filesystem::temp_directory_path() / "chamberlab_cli_w2.geom";
  ASSERT_EQ(run("geom build w2 --out " + out.string()).code, 0);
  EXPECT_EQ(run("geom check-ngon --input " + out.string() + " --n 4 --thick").code, 0);
  const auto bad = temp_file("bad.geom", "type point\ntype line\nel point a\ninc a b\n");
  const std::string cmd = std::string(CHAMBERLAB_CLI) + " geom check-ngon --n 3 --input " +
                          bad.string() + " 2>&1 >/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string err;
  std::array<char, 512> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) err.append(buf.data(), n);
  EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 2);
  EXPECT_NE(err.find("line 4"), std::string::npos) << err;
}

TEST(Cli, WorkspaceCache) {
  const auto ws = std::filesystem::temp_directory_path() / "chamberlab_cli_ws";
  std::filesystem::remove_all(ws);
  const std::string env = "CHAMBERLAB_WORKSPACE=" + ws.string();
  const auto first = run("geom check-ngon --model w2 --n 4 --thick", env);
  ASSERT_EQ(first.code, 0);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(ws)) files += entry.is_regular_file();
  EXPECT_EQ(files, 1u);
  const auto second = run("geom check-ngon --model w2 --n 4 --thick", env);
  EXPECT_EQ(second.code, 0);
  EXPECT_EQ(details(first), details(second));
  std::filesystem::remove_all(ws);
}

TEST(Cli, ChamberQueries) {
  const auto d = details(run("chambers distance --from e --to 1,2,3,2,1"));
  EXPECT_EQ(d.at("gallery_distance"), 5);
  EXPECT_EQ(d.at("weyl_distance").at("normal_form"), "1,2,3,2,1");
  const auto p = details(run("chambers project --model w2 --from p1 --onto p2"));
  EXPECT_EQ(p.at("projection"), nlohmann::json::array({"p2"}));
  const auto c = run("chambers convex --model w2 --set 'p1;p3'");
  EXPECT_EQ(c.code, details(c).at("convex").get<bool>() ? 0 : 1);
}
