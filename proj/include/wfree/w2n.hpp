#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wfree/affine.hpp"
#include "wfree/algebra.hpp"
#include "wfree/screening.hpp"

namespace wfree {

// The Feigin-Semikhatov realization on V_xi: Heisenberg fields
// a_{n-1}, ..., a_1, psi, xi with the Gram matrix below and lattice sectors m xi.
struct W2nModel {
  int n = 2;
  Level level;
  std::shared_ptr<const ConformalAlgebra> alg;
  std::vector<int> a;  // a[i] is a_i for i = 1..n-1, a[0] unused
  int psi = -1, xi = -1;
  State E;          // |xi>
  State P;          // the vacuum state P
  State F;          // :P e^{-xi}:, P expanded formally
  State F_rewritten;  // -:((k+n-1)(d+xi)+psi+...)...(psi) e^{-xi}:
  std::vector<State> A;  // A_i = |a_i>, index 0 unused
  State Q;               // |psi>

  VertexAlgebra vertex() const { return VertexAlgebra(alg); }
  Momentum momentum(const std::vector<std::pair<int, Scalar>>& coords) const;  // (generator, coefficient)
};

// Printed Gram matrix in the order a_{n-1}, ..., a_1, psi, xi.
Matrix w2n_gram(int n, const Level& level);

W2nModel build_w2n(int n, const Level& level = Level::symbolic());

// The Wakimoto assignment on the generators of V^tau(g_0) for sl_n subregular,
// n >= 3: one image per generator of A.alg.
std::vector<State> wakimoto_images(const W2nModel& m, const G0Algebra& A);

// Lattice images of x_alpha for the class [alpha_2] (or [alpha_i]):
// x_{alpha_2} = e^{-a_2/(k+n)} is a highest weight vector for the sl_2 in g_0 and
// x_{alpha_1+alpha_2} = :psi e^{-a_2/(k+n) - xi}: follows from the g_0-action on
// the class module; x_{alpha_i} = e^{-a_i/(k+n)} for i > 2.
std::vector<State> wakimoto_screening_tops(const W2nModel& m, const G0Algebra& A, const ScreeningOp& op);

// E = J^{e_{alpha_1}} and F = :((k+n-1)d + J^{b_{n-1}}) ... ((k+n-1)d + J^{b_2}) J^{e_{-alpha_1}}:
// inside V^tau(g_0), b_j = h_1 + ... + h_j.
std::pair<State, State> w2n_affine_EF(const G0Algebra& A, int n);

}  // namespace wfree
