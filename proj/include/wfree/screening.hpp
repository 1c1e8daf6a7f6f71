#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wfree/affine.hpp"
#include "wfree/algebra.hpp"
#include "wfree/kernel.hpp"

namespace wfree {

// The g_0-module M_[beta] = V^tau(g_0) (x) span{x_alpha : alpha in [beta]},
// tensored with the fermions on g_{1/2}; x_alpha has weight 0 and parity
// p(alpha)+1, and u.x_alpha = sum_gamma c^alpha_{gamma,u} x_gamma where
// [e_gamma, u] = sum c^alpha_{gamma,u} e_alpha.
struct ClassModule {
  std::vector<int> roots;  // basis indices alpha in [beta]
  Module module;
};

ClassModule class_module(const G0Algebra& A, const std::vector<int>& cls);

// L_{-1} on M_[beta], from the Sugawara vector of g_0.
State l_minus_one(const G0Algebra& A, const ClassModule& M, const State& v);

// S^alpha_n A for A in V^tau(g_0): the coefficient of z^{-n} in
// (-1)^{p(alpha)p(A)+p(A)} e^{z L_{-1}} Y(A,-z) x_alpha.
State s_alpha_apply(const G0Algebra& A, const ClassModule& M, int alpha, const State& a, int n);

// A screening operator on V^tau(g_0) (x) F(g_{1/2}).
struct ScreeningOp {
  enum class Kind { Generic, Exponential };
  Kind kind = Kind::Generic;
  std::string name;
  int deg2 = 2;                 // doubled degree of the class
  std::vector<int> roots;       // class members
  std::vector<Rational> weights;  // chi(e_alpha) for degree one classes
  std::optional<ClassModule> target;  // generic kind
  State field;                  // exponential kind: the integrand as a lattice state
};

// One operator per class of the restricted base, built from S^alpha.
std::vector<ScreeningOp> generic_screenings(const G0Algebra& A);

// For g_0 = h: e^{-(1/nu)int alpha} with nu^2 = k + h^vee, written through
// momenta whose pairing with J^u is -alpha(u); degree-1/2 classes carry Phi_alpha.
std::vector<ScreeningOp> exponential_screenings(const G0Algebra& A);

State screening_apply(const G0Algebra& A, const ScreeningOp& op, const State& v);

// Joint kernel of `ops` on the vacuum part of V^tau(g_0) (x) F at one doubled weight.
KernelReport screening_kernel(const G0Algebra& A, const std::vector<ScreeningOp>& ops, int weight2);

// Momentum of e^{-(1/nu) int alpha} in Heisenberg coordinates.
Momentum screening_momentum(const G0Algebra& A, int alpha);

}  // namespace wfree
