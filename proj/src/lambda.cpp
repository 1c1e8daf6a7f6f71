#include "wfree/lambda.hpp"

namespace wfree {

namespace {

int sign_of(int p) { return (p & 1) ? -1 : 1; }

Scalar factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Scalar(Rational(f));
}

int max_n(const VertexAlgebra& V, const State& a, const State& b) {
  // a_(n) b vanishes once its depth would be negative; lattice pairings can
  // raise the bound, so allow their size as slack.
  int bound = (V.depth2(a) + V.depth2(b)) / 2;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Scalar s = V.fock().pairing(ma.top.mom, mb.top.mom);
      if (s.is_constant()) {
        Rational q = s.constant();
        if (q < 0) bound = std::max<long>(bound, (V.depth2(a) + V.depth2(b)) / 2 - q.get_num().get_si());
      }
    }
  return bound;
}

}  // namespace

void LambdaPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

const State& LambdaPoly::coeff(size_t n) const {
  static const State zero;
  return n < c.size() ? c[n] : zero;
}

LambdaPoly lambda_bracket(const VertexAlgebra& V, const State& a, const State& b) {
  LambdaPoly r;
  const int nmax = max_n(V, a, b);
  for (int n = 0; n <= nmax; ++n) r.c.push_back(V.nprod(a, n, b));
  r.trim();
  return r;
}

LambdaPoly skew_bracket(const VertexAlgebra& V, const State& a, const State& b) {
  LambdaPoly ab = lambda_bracket(V, a, b);
  const int p = sign_of(V.parity(a) * V.parity(b));
  LambdaPoly r;
  r.c.resize(ab.c.size());
  for (size_t n = 0; n < ab.c.size(); ++n) {
    // coefficient of lambda^i/i!: -p sum_{n>=i} (-1)^n T^(n-i) C_n
    State t = ab.c[n];
    for (size_t i = n + 1; i-- > 0;) {
      // t currently holds T^(n-i) C_n
      r.c[i].add(t, Scalar(-p * sign_of(static_cast<int>(n))));
      if (i > 0) {
        t = V.T(t);
        t *= Scalar(Rational(1, static_cast<long>(n - i + 1)));
      }
    }
  }
  r.trim();
  return r;
}

LambdaPoly wick_bracket(const VertexAlgebra& V, const State& a, const State& b, const State& c) {
  LambdaPoly ab = lambda_bracket(V, a, b);
  LambdaPoly ac = lambda_bracket(V, a, c);
  const int p = sign_of(V.parity(a) * V.parity(b));
  size_t top = std::max(ab.c.size(), ac.c.size()) + static_cast<size_t>(max_n(V, a, b) + max_n(V, b, c) + 2);
  LambdaPoly r;
  r.c.resize(top + 1);
  for (size_t n = 0; n < ab.c.size(); ++n) r.c[n] += V.normal_order(ab.c[n], c);
  for (size_t n = 0; n < ac.c.size(); ++n) r.c[n].add(V.normal_order(b, ac.c[n]), Scalar(p));
  for (size_t n = 0; n < ab.c.size(); ++n) {
    if (ab.c[n].is_zero()) continue;
    LambdaPoly inner = lambda_bracket(V, ab.c[n], c);
    for (size_t m = 0; m < inner.c.size(); ++m) {
      size_t N = n + m + 1;
      if (N >= r.c.size()) r.c.resize(N + 1);
      r.c[N].add(inner.c[m], binomial(static_cast<long>(N), static_cast<long>(n)));
    }
  }
  r.trim();
  return r;
}

void bipoly_add(BiPoly& p, int i, int j, const State& s, const Scalar& c) {
  if (s.is_zero() || c.is_zero()) return;
  State& slot = p[{i, j}];
  slot.add(s, c);
  if (slot.is_zero()) p.erase({i, j});
}

bool bipoly_zero(const BiPoly& p) {
  for (const auto& [k, s] : p)
    if (!s.is_zero()) return false;
  return true;
}

BiPoly jacobi_defect(const VertexAlgebra& V, const State& a, const State& b, const State& c) {
  BiPoly d;
  const int p = sign_of(V.parity(a) * V.parity(b));
  // [a_l [b_m c]]
  LambdaPoly bc = lambda_bracket(V, b, c);
  for (size_t j = 0; j < bc.c.size(); ++j) {
    LambdaPoly x = lambda_bracket(V, a, bc.c[j]);
    for (size_t i = 0; i < x.c.size(); ++i)
      bipoly_add(d, static_cast<int>(i), static_cast<int>(j), x.c[i],
                 (factorial(static_cast<int>(i)) * factorial(static_cast<int>(j))).inverse());
  }
  // - p [b_m [a_l c]]
  LambdaPoly ac = lambda_bracket(V, a, c);
  for (size_t i = 0; i < ac.c.size(); ++i) {
    LambdaPoly x = lambda_bracket(V, b, ac.c[i]);
    for (size_t j = 0; j < x.c.size(); ++j)
      bipoly_add(d, static_cast<int>(i), static_cast<int>(j), x.c[j],
                 Scalar(-p) * (factorial(static_cast<int>(i)) * factorial(static_cast<int>(j))).inverse());
  }
  // - [[a_l b]_{l+m} c] = - sum_n l^n/n! sum_r (l+m)^r/r! (a_(n)b)_(r) c
  LambdaPoly ab = lambda_bracket(V, a, b);
  for (size_t n = 0; n < ab.c.size(); ++n) {
    LambdaPoly x = lambda_bracket(V, ab.c[n], c);
    for (size_t r = 0; r < x.c.size(); ++r) {
      Scalar base = (factorial(static_cast<int>(n)) * factorial(static_cast<int>(r))).inverse();
      for (size_t t = 0; t <= r; ++t)  // (l+m)^r = sum binom(r,t) l^t m^{r-t}
        bipoly_add(d, static_cast<int>(n + t), static_cast<int>(r - t), x.c[r],
                   -base * binomial(static_cast<long>(r), static_cast<long>(t)));
    }
  }
  return d;
}

State commutator_defect(const VertexAlgebra& V, const Module& M, const State& A, int m,
                        const State& B, int n, const State& v) {
  const int p = sign_of(V.parity(A) * V.parity(B));
  State lhs = field_mode(M, A, m, field_mode(M, B, n, v));
  lhs.add(field_mode(M, B, n, field_mode(M, A, m, v)), Scalar(-p));
  LambdaPoly ab = lambda_bracket(V, A, B);
  for (size_t j = 0; j < ab.c.size(); ++j)
    lhs.add(field_mode(M, ab.c[j], m + n - static_cast<int>(j), v),
            -binomial(m, static_cast<long>(j)));
  return lhs;
}

}  // namespace wfree
