#pragma once

#include <filesystem>
#include <vector>

#include "json.hpp"
#include "wfree/superdata.hpp"

namespace wfree {

// Algebra-description document. Basis elements are referred to by name.
//
//   {
//     "name": "sl2",
//     "rank": 1,
//     "cartan": ["h1"],
//     "roots": [{"name": "e12", "parity": 0, "weight": ["2"]}, ...],
//     "simple_roots": ["e12"],
//     "structure_constants": [["h1", "e12", "e12", "2"], ...],
//     "form": [["h1", "h1", "2"], ...],
//     "grading_labels": [2],
//     "f_support": ["e21"]
//   }
//
// "weight" lists alpha(h_i) over the Cartan basis. A structure constant
// [a, b, c, x] means [e_a, e_b] contains x e_c; the super-antisymmetric
// partner may be omitted. Form entries are symmetric and may be listed once.
// Rationals are strings "p/q". grading_labels are doubled (1 means degree
// 1/2) and, with f_support, are optional.
struct DatumDocument {
  DatumPtr datum;
  std::vector<int> labels2;
  std::vector<int> f_support;  // basis indices

  bool has_grading() const { return !labels2.empty(); }
  GoodGrading grading() const;
};

DatumDocument datum_from_json(const nlohmann::json& j);
nlohmann::json datum_to_json(const SuperRootDatum& d, const std::vector<int>& labels2 = {},
                             const std::vector<int>& f_support = {});
DatumDocument load_datum(const std::filesystem::path& file);

}  // namespace wfree
