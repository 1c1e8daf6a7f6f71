#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wfree/algebra.hpp"

namespace wfree {

using LinearMap = std::function<State(const State&)>;

struct KernelReport {
  int weight2 = 0;
  int ambient_dim = 0;
  int kernel_dim = 0;
  long expected_dim = -1;  // -1 when no oracle applies
  std::vector<State> basis;
  // Factors of the pivots, cleared denominators and stripped row contents met
  // during elimination; the kernel can change only at their roots.
  std::vector<std::string> denominators;
  bool rechecked = false;                 // every basis vector re-annihilated
};

// Intersection of the kernels of `maps` on span(ambient). The maps are applied
// again to every basis vector after the solve.
KernelReport kernel_basis(const std::vector<Monomial>& ambient, const std::vector<LinearMap>& maps,
                          int weight2);

// Stacks the images of the ambient monomials under `maps` into a matrix whose
// columns are indexed by `ambient`.
Matrix image_matrix(const std::vector<Monomial>& ambient, const std::vector<LinearMap>& maps);

}  // namespace wfree
