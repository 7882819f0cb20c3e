#pragma once

#include <string>

#include "json.hpp"

#include "austere/matrix.hpp"
#include "austere/subspaces.hpp"

namespace austere {

// Matrix wire format:
//   {"field": "R"|"C"|"H", "n": int, "entries": [[[w,x,y,z], ...], ...]}
// Scalars are always 4-tuples, zero-padded for R and C.
nlohmann::json fmat_to_json(const FMat& m);
FMat fmat_from_json(const nlohmann::json& j);

// Subspace wire format: {"n": int, "basis": [[["p/q", ...], ...], ...]};
// rationals ride as strings to stay exact.
nlohmann::json subspace_to_json(const SubspaceSpec& spec);
SubspaceSpec subspace_from_json(const nlohmann::json& j);

// Accepts either a JSON file path or the inline form
// "diag:3,-3,1,-1/sqrt20" (diagonal entries, optional 1/sqrt(k) or 1/k
// scaling suffix). The field applies to inline inputs only.
FMat parse_matrix_arg(const std::string& arg, Field inline_field);

FMat read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const FMat& m);

}  // namespace austere
