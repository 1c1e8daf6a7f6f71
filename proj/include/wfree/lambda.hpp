#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wfree/algebra.hpp"

namespace wfree {

// sum_n c[n] lambda^n / n!
struct LambdaPoly {
  std::vector<State> c;

  void trim();
  bool is_zero() const { return c.empty(); }
  const State& coeff(size_t n) const;
  friend bool operator==(LambdaPoly a, LambdaPoly b) {
    a.trim();
    b.trim();
    return a.c == b.c;
  }
};

// [a_lambda b] computed from the modes a_(n) b, n >= 0.
LambdaPoly lambda_bracket(const VertexAlgebra& V, const State& a, const State& b);

// -(-1)^{p(a)p(b)} [a_{-lambda-d} b]; equals [b_lambda a].
LambdaPoly skew_bracket(const VertexAlgebra& V, const State& a, const State& b);

// :[a_l b] c: + (-1)^{p(a)p(b)} :b [a_l c]: + int_0^l [[a_l b]_m c] dm; equals [a_l :bc:].
LambdaPoly wick_bracket(const VertexAlgebra& V, const State& a, const State& b, const State& c);

// Coefficients of lambda^i mu^j (plain powers).
using BiPoly = std::map<std::pair<int, int>, State>;
void bipoly_add(BiPoly& p, int i, int j, const State& s, const Scalar& c = Scalar(1));
bool bipoly_zero(const BiPoly& p);

// [a_l [b_m c]] - (-1)^{p(a)p(b)} [b_m [a_l c]] - [[a_l b]_{l+m} c]
BiPoly jacobi_defect(const VertexAlgebra& V, const State& a, const State& b, const State& c);

// [A_(m), B_(n)] v - sum_j binom(m,j) (A_(j)B)_(m+n-j) v on a module vector.
State commutator_defect(const VertexAlgebra& V, const Module& M, const State& A, int m,
                        const State& B, int n, const State& v);

}  // namespace wfree
