#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wfree/algebra.hpp"
#include "wfree/superdata.hpp"

namespace wfree {

struct StrongGenerator {
  int weight2;  // doubled conformal weight j+1 for u in g^f of degree -j
  int parity;
};

// One generator per homogeneous basis vector of g^f, sorted by (weight, parity).
std::vector<StrongGenerator> strong_generators(const GoodGrading& gr);

// Graded dimensions, indexed by doubled weight 0..max_weight2, of the free
// differential superalgebra on the given generators.
std::vector<long> free_character(const std::vector<StrongGenerator>& gens, int max_weight2);

std::vector<long> expected_character(const GoodGrading& gr, int max_weight2);

// PBW monomials on top `top` of doubled depth `depth2`, optionally of fixed
// charge. Creation modes only; each list is sorted by (generator, mode) and
// odd modes occur at most once. Deterministic order.
std::vector<Monomial> graded_basis(const ConformalAlgebra& alg, int depth2,
                                   std::optional<int> charge = std::nullopt, const Top& top = {});

}  // namespace wfree
