#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "wfree/algebra.hpp"
#include "wfree/lambda.hpp"

namespace wfree {

struct TopCoefficientMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The Fateev-Lukyanov field G = :(g d + b_1)...(g d + b_n) Psi: on n bosons
// b_i = alpha_i + ... + alpha_n (orthonormal) and one fermion [Psi_l Psi] = 1.
//
// Coefficient modes:
//  FreeGamma      the indeterminate is gamma; no screenings.
//  FreeGammaPlus  the indeterminate is t = gamma_+, gamma = t - 1/t.
//  Level          the indeterminate is k with nu^2 = 2k+2n+1, gamma_+ = -1/nu,
//                 gamma = nu - 1/nu. The bosons are B_i = b_i/gamma_+ with
//                 [B_i l B_j] = nu^2 delta_ij l, and G = gamma_+^n G' with
//                 G' = :(-2(k+n) d + B_1)...(-2(k+n) d + B_n) Psi:, so only
//                 nu^2 enters.
struct WBnModel {
  enum class Mode { FreeGamma, FreeGammaPlus, Level };
  int n = 1;
  Mode mode = Mode::FreeGamma;
  std::shared_ptr<const ConformalAlgebra> alg;
  std::vector<int> boson;  // b_i, or B_i in level mode
  int psi = -1;
  Scalar gamma2;            // gamma^2
  Scalar scale2;            // G = scale * G_built with scale^2 = scale2 (1 outside level mode)
  State G;                  // G_built
  LambdaPoly GG;            // [G_l G] including scale2
  std::vector<Scalar> gamma_i;  // gamma_1 .. gamma_n (index 0 is gamma_1)
  std::vector<State> W;     // W_0 .. W_{2n-2}

  VertexAlgebra vertex() const { return VertexAlgebra(alg); }
};

WBnModel build_wbn(int n, WBnModel::Mode mode, const Level& level = Level::symbolic());

// gamma_i = prod_{j<=i} (1 - 2j(2j-1) gamma^2)
Scalar wbn_gamma(int i, const Scalar& gamma2);

// Q_1..Q_n as lattice states: |gamma_+ alpha_i> for i < n and Psi_(-1)|gamma_+ alpha_n>.
std::vector<State> wbn_screenings(const WBnModel& m);

// Drops every PBW monomial that uses a mode of index <= -2; what remains
// represents the class modulo C_2 for these free fields.
State mod_c2(const State& s);

// sum over j_1 < ... < j_r of :b_{j_1}^2 ... b_{j_r}^2: (the bosons of the model).
State elementary_b2(const WBnModel& m, int r);

}  // namespace wfree
