#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wfree/algebra.hpp"

namespace wfree {

// Right-nested normally ordered word :d^{k1}g1 d^{k2}g2 ... e^{mu}: with a
// coefficient; "top" names a top vector of an induced module (0 = vacuum).
struct FieldTerm {
  Scalar coeff;
  std::vector<std::pair<int, int>> word;  // (generator, derivative order)
  Momentum mom;
  int top = 0;
};

struct FieldExpr {
  std::vector<FieldTerm> terms;
};

// Canonical PBW state of a word expression; words in any order are accepted.
State field_state(const Module& M, const FieldExpr& f);
// Canonical word form of a state: generator order, deeper derivatives first.
FieldExpr state_field(const Module& M, const State& s);

nlohmann::json field_json(const Module& M, const FieldExpr& f);
FieldExpr field_from_json(const Module& M, const nlohmann::json& j);
std::string render(const Module& M, const FieldExpr& f);

inline nlohmann::json state_json(const Module& M, const State& s) {
  return field_json(M, state_field(M, s));
}

}  // namespace wfree
