#pragma once

// JSON inputs: Coxeter matrices (2D integer array, 0 = infinity) and
// double-coset claim lists ([{"left": [..], "word": [..], "right": [..]}]).
// Malformed input throws Error(kParse).

#include <string>
#include <vector>

#include "chamberlab/coxeter.hpp"
#include "chamberlab/parabolic.hpp"

namespace chamberlab {

CoxeterMatrix parse_matrix_json(const std::string& text);
std::vector<LemmaClaim> parse_claims_json(const std::string& text);
std::string claims_to_json(const std::vector<LemmaClaim>& claims);

// Whole-file read; throws Error(kParse) if the file cannot be opened.
std::string read_file(const std::string& path);

}  // namespace chamberlab
