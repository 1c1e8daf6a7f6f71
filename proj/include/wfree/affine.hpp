#pragma once

#include <map>
#include <memory>
#include <vector>

#include "wfree/algebra.hpp"
#include "wfree/superdata.hpp"

namespace wfree {

// V^tau(g_0) tensored with the neutral free superfermions on g_{1/2}:
// [J^u_l J^v] = J^{[u,v]} + tau_k(u|v) l, [Phi_a l Phi_b] = (f|[e_a,e_b]).
struct G0Algebra {
  GoodGrading grading;
  LevelForm level_form;
  std::shared_ptr<const ConformalAlgebra> alg;
  std::vector<int> g0;    // basis indices of g_0 (generator order)
  std::vector<int> half;  // basis indices of g_{1/2}
  std::vector<int> J;     // basis index -> generator or -1
  std::vector<int> Phi;   // basis index -> generator or -1

  VertexAlgebra vertex() const { return VertexAlgebra(alg); }
};

G0Algebra build_g0_algebra(const GoodGrading& gr, const Level& level);

// L = (2(k+h^vee))^{-1} sum_i :J^{u^i} J^{u_i}: over g_0, dual bases taken
// with respect to the invariant form.
State sugawara(const G0Algebra& A);

}  // namespace wfree
