#include "wfree/linalg.hpp"

#include <stdexcept>

namespace wfree {

Matrix zero_matrix(int rows, int cols) { return Matrix(rows, Vector(cols)); }

namespace {

using PolyRow = std::vector<Poly>;

bool all_constant(const Matrix& m) {
  for (const auto& r : m)
    for (const auto& x : r)
      if (!x.is_constant()) return false;
  return true;
}

PolyRow clear_denominators(const Vector& row, std::vector<Poly>& special) {
  Poly l(1);
  for (const auto& x : row) {
    if (x.den().is_constant()) continue;
    Poly g = gcd(l, x.den());
    Poly q, r;
    Poly::divmod(x.den(), g, q, r);
    l *= q;
  }
  if (l.degree() > 0) special.push_back(l);
  PolyRow out(row.size());
  for (size_t i = 0; i < row.size(); ++i) {
    if (row[i].is_zero()) continue;
    Poly q, r;
    Poly::divmod(l, row[i].den(), q, r);
    out[i] = row[i].num() * q;
  }
  return out;
}

void strip_content(PolyRow& row, std::vector<Poly>& special) {
  Poly g;
  for (const auto& p : row) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.monic() : gcd(g, p);
    if (g.degree() == 0) break;
  }
  if (g.is_zero()) return;
  if (g.degree() > 0) {
    special.push_back(g);
    for (auto& p : row) {
      if (p.is_zero()) continue;
      Poly q, r;
      Poly::divmod(p, g, q, r);
      p = std::move(q);
    }
  }
  // Rational content: scale to coprime integers.
  mpz_class l = 1, c = 0;
  for (const auto& p : row)
    for (const auto& x : p.coeffs()) l = lcm(l, mpz_class(x.get_den()));
  for (const auto& p : row)
    for (const auto& x : p.coeffs()) c = gcd(c, mpz_class(Rational(x * l).get_num()));
  if (c == 0) return;
  Rational s(l, c);
  s.canonicalize();
  if (s != 1)
    for (auto& p : row) p *= s;
}

bool row_zero(const PolyRow& r) {
  for (const auto& p : r)
    if (!p.is_zero()) return false;
  return true;
}

int poly_cost(const Poly& p) {
  int nz = 0;
  for (const auto& c : p.coeffs()) nz += (c != 0);
  return p.degree() * 64 + nz;
}

Echelon echelon_rational(const Matrix& m, int cols) {
  std::vector<std::vector<Rational>> a;
  for (const auto& r : m) {
    std::vector<Rational> row(cols);
    for (int j = 0; j < cols; ++j) row[j] = r[j].is_zero() ? Rational(0) : r[j].constant();
    a.push_back(std::move(row));
  }
  Echelon e;
  size_t next = 0;
  for (int c = 0; c < cols && next < a.size(); ++c) {
    size_t p = next;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[next]);
    Rational inv = 1 / a[next][c];
    for (int j = c; j < cols; ++j) a[next][j] *= inv;
    for (size_t r = next + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int j = c; j < cols; ++j)
        if (a[next][j] != 0) a[r][j] -= f * a[next][j];
    }
    e.pivot_cols.push_back(c);
    e.pivot_polys.emplace_back(1);
    ++next;
  }
  for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
    Vector row(cols);
    for (int j = 0; j < cols; ++j) row[j] = Scalar(a[i][j]);
    e.rows.push_back(std::move(row));
  }
  return e;
}

}  // namespace

Echelon echelon(const Matrix& m, int cols) {
  for (const auto& r : m)
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ragged matrix");
  if (all_constant(m)) return echelon_rational(m, cols);
  Echelon e;
  std::vector<PolyRow> a;
  for (const auto& r : m) {
    PolyRow pr = clear_denominators(r, e.special);
    if (row_zero(pr)) continue;
    strip_content(pr, e.special);
    a.push_back(std::move(pr));
  }
  size_t next = 0;
  for (int c = 0; c < cols && next < a.size(); ++c) {
    size_t best = a.size();
    for (size_t p = next; p < a.size(); ++p) {
      if (a[p][c].is_zero()) continue;
      if (best == a.size() || poly_cost(a[p][c]) < poly_cost(a[best][c])) best = p;
    }
    if (best == a.size()) continue;
    std::swap(a[best], a[next]);
    const PolyRow& piv = a[next];
    for (size_t r = next + 1; r < a.size(); ++r) {
      if (a[r][c].is_zero()) continue;
      Poly f = a[r][c];
      for (int j = c; j < cols; ++j) {
        Poly v = a[r][j] * piv[c];
        if (!piv[j].is_zero()) v -= f * piv[j];
        a[r][j] = std::move(v);
      }
      strip_content(a[r], e.special);
    }
    e.pivot_cols.push_back(c);
    e.pivot_polys.push_back(piv[c]);
    ++next;
  }
  for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
    Vector row(cols);
    for (int j = 0; j < cols; ++j) row[j] = Scalar(a[i][j], Poly(1));
    e.rows.push_back(std::move(row));
  }
  return e;
}

int rank(const Matrix& m, int cols) {
  return static_cast<int>(echelon(m, cols).pivot_cols.size());
}

std::vector<Vector> nullspace(const Matrix& m, int cols, Echelon* out) {
  Echelon e = echelon(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector x(cols);
    x[f] = Scalar(1);
    for (size_t i = e.pivot_cols.size(); i-- > 0;) {
      int pc = e.pivot_cols[i];
      Scalar acc;
      for (int j = pc + 1; j < cols; ++j)
        if (!e.rows[i][j].is_zero() && !x[j].is_zero()) acc += e.rows[i][j] * x[j];
      if (!acc.is_zero()) x[pc] = -acc / e.rows[i][pc];
    }
    basis.push_back(std::move(x));
  }
  if (out) *out = std::move(e);
  return basis;
}

Vector solve(const Matrix& a0, const Vector& b) {
  int n = static_cast<int>(a0.size());
  Matrix a = a0;
  for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(a[p], a[c]);
    Scalar inv = a[c][c].inverse();
    for (int j = c; j <= n; ++j) a[c][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Scalar f = a[r][c];
      for (int j = c; j <= n; ++j)
        if (!a[c][j].is_zero()) a[r][j] -= f * a[c][j];
    }
  }
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

Matrix inverse(const Matrix& a) {
  int n = static_cast<int>(a.size());
  Matrix cols;
  for (int j = 0; j < n; ++j) {
    Vector e(n);
    e[j] = Scalar(1);
    cols.push_back(solve(a, e));
  }
  Matrix inv = zero_matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = cols[j][i];
  return inv;
}

Scalar determinant(Matrix a) {
  int n = static_cast<int>(a.size());
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Scalar inv = a[c][c].inverse();
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Scalar f = a[r][c] * inv;
      for (int j = c; j < n; ++j)
        if (!a[c][j].is_zero()) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace wfree
