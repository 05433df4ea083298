#pragma once

#include "pcalc/pmodule.hpp"

#include "json.hpp"

namespace pcalc {

// Module file layout:
//   field: {prime}
//   poset: {type: "grid", shape: [..]} or {type: "explicit", elements: [..],
//          hasse: [[lo, hi], ..]}
//   dims:  element id -> dimension
//   maps:  "lo->hi" (cover pair) -> row-major integer matrix (array of rows)
// Integers are reduced mod prime on load. Grid element ids are "x,y[,z..]".
ModulePtr module_from_json(const nlohmann::json& j);
ModulePtr load_module_file(const std::string& path);

nlohmann::ordered_json module_to_json(const PersistenceModule& F);
void save_module_file(const PersistenceModule& F, const std::string& path);

nlohmann::ordered_json matrix_to_json(const Matrix& m);

} // namespace pcalc
