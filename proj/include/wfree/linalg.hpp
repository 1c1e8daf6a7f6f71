#pragma once

#include <vector>

#include "wfree/scalar.hpp"

namespace wfree {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // row-major

Matrix zero_matrix(int rows, int cols);

struct Echelon {
  std::vector<int> pivot_cols;   // increasing
  std::vector<Vector> rows;      // one per pivot, zero left of its pivot
  std::vector<Poly> pivot_polys; // numerators of the pivots, for denominator reports
  std::vector<Poly> special;     // cleared denominators and stripped row contents
};

// Fraction-free elimination over Q[k]; rows are cleared of denominators and
// stripped of their polynomial content after every update.
Echelon echelon(const Matrix& m, int cols);

int rank(const Matrix& m, int cols);

// Canonical nullspace basis: one vector per non-pivot column c, with a 1 in
// position c and zeros in the other non-pivot columns.
std::vector<Vector> nullspace(const Matrix& m, int cols, Echelon* ech = nullptr);

// Solves a*x = b for square invertible a.
Vector solve(const Matrix& a, const Vector& b);
Matrix inverse(const Matrix& a);
Scalar determinant(Matrix a);

}  // namespace wfree
