#include "chamberlab/io.hpp"

#include <fstream>
#include <sstream>

#include "chamberlab/error.hpp"
#include "json.hpp"

namespace chamberlab {

namespace {

nlohmann::json parse_json(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed ") + what + ": " + e.what());
  }
}

std::vector<int> int_array(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, where + ": expected an integer array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorCode::kParse, where + ": expected integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

CoxeterMatrix parse_matrix_json(const std::string& text) {
  const auto j = parse_json(text, "matrix");
  if (!j.is_array()) throw Error(ErrorCode::kParse, "matrix: expected a 2D array");
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(int_array(j[i], "matrix row " + std::to_string(i + 1)));
  }
  return CoxeterMatrix(std::move(rows));
}

std::vector<LemmaClaim> parse_claims_json(const std::string& text) {
  const auto j = parse_json(text, "claims");
  if (!j.is_array()) throw Error(ErrorCode::kParse, "claims: expected a list");
  std::vector<LemmaClaim> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& c = j[i];
    const std::string where = "claim " + std::to_string(i + 1);
    if (!c.is_object() || !c.contains("left") || !c.contains("word") || !c.contains("right")) {
      throw Error(ErrorCode::kParse, where + ": expected {left, word, right}");
    }
    const auto left = int_array(c["left"], where + ".left");
    const auto right = int_array(c["right"], where + ".right");
    out.push_back(LemmaClaim{GeneratorSubset(std::span<const Generator>(left)),
                             Word{int_array(c["word"], where + ".word")},
                             GeneratorSubset(std::span<const Generator>(right))});
  }
  return out;
}

std::string claims_to_json(const std::vector<LemmaClaim>& claims) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : claims) {
    j.push_back({{"left", c.left.indices()}, {"word", c.word.letters}, {"right", c.right.indices()}});
  }
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace chamberlab
