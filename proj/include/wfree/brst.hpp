#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wfree/affine.hpp"
#include "wfree/algebra.hpp"
#include "wfree/kernel.hpp"
#include "wfree/superdata.hpp"

namespace wfree {

struct NonZeroCharge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The reduced complex C_k: generated by J^u (u in g_{<=0}), phi^alpha
// (alpha in g_+) and Phi_alpha (alpha in g_{1/2}), with d_(0) given on
// generators and extended as an odd derivation.
struct BrstComplex {
  GoodGrading grading;
  LevelForm level_form;
  std::shared_ptr<const ConformalAlgebra> alg;
  std::vector<int> low;   // basis of g_{<=0}
  std::vector<int> plus;  // basis of g_+
  std::vector<int> half;  // basis of g_{1/2}
  std::vector<int> J, phi, Phi;  // basis index -> generator or -1
  std::vector<State> d_gen;      // d_(0) of each generator

  VertexAlgebra vertex() const { return VertexAlgebra(alg); }
};

BrstComplex build_complex(const GoodGrading& gr, const Level& level);

// a_k(v|w) = str((ad v) p_+ (ad w)) + k(v|w), b_k with p_+ on the left factor.
Scalar a_k(const GoodGrading& gr, const Level& level, int v, int w);
Scalar b_k(const GoodGrading& gr, const Level& level, int v, int w);

State d0(const BrstComplex& C, const State& v);

// Matrix of d_(0) from the (weight2, charge) piece to (weight2, charge+1), in
// the graded_basis orders of both.
Matrix d0_matrix(const BrstComplex& C, int weight2, int charge);

struct CohomologyEntry {
  int weight2;
  int charge;
  int chain_dim;
  int dim;
};
std::vector<CohomologyEntry> cohomology_dims(const BrstComplex& C, int max_weight2);

// Zero-charge cocycles at one weight; C_k has no negative charge, so these
// are the H^0 classes themselves.
KernelReport h0_basis(const BrstComplex& C, int weight2);

// Kills every monomial carrying J^u with u in g_{<0}; the rest is rewritten in
// V^tau(g_0) (x) F.
State miura_project(const BrstComplex& C, const G0Algebra& A, const State& v);

// Realizes C_k inside the full complex V^k(g) (x) F^ch (x) F^ne and compares
// generator brackets and d_(0) on generators. Returns mismatch descriptions.
std::vector<std::string> full_complex_mismatches(const BrstComplex& C);

}  // namespace wfree
