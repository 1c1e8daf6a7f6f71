#include "wfree/w2n.hpp"

namespace wfree {

Matrix w2n_gram(int n, const Level& level) {
  if (n < 2) throw std::invalid_argument("W^(2)_n needs n >= 2");
  const Scalar kn = level.k() + Scalar(n);
  const int d = n + 1;  // a_{n-1..1}, psi, xi
  Matrix G = zero_matrix(d, d);
  for (int r = 0; r < n - 1; ++r) {
    G[r][r] = Scalar(2) * kn;
    if (r + 1 < d - 1) G[r][r + 1] = G[r + 1][r] = -kn;  // last one couples a_1 to psi
  }
  G[n - 1][n - 1] = Scalar(1);
  G[n - 1][n] = G[n][n - 1] = Scalar(1);
  return G;
}

Momentum W2nModel::momentum(const std::vector<std::pair<int, Scalar>>& coords) const {
  Momentum mu(alg->heisenberg().size());
  for (const auto& [g, c] : coords) mu[alg->heisenberg_position(g)] += c;
  return normalize_momentum(mu);
}

W2nModel build_w2n(int n, const Level& level) {
  W2nModel m;
  m.n = n;
  m.level = level;
  if ((level.k() + Scalar(n)).is_zero()) throw CriticalLevel("k + n = 0");
  const Matrix G = w2n_gram(n, level);
  auto alg = std::make_shared<ConformalAlgebra>();
  m.a.assign(n, -1);
  std::vector<int> order;
  for (int i = n - 1; i >= 1; --i) order.push_back(m.a[i] = alg->add_generator({"a" + std::to_string(i), 0, 2, 0}));
  order.push_back(m.psi = alg->add_generator({"psi", 0, 2, 0}));
  order.push_back(m.xi = alg->add_generator({"xi", 0, 2, 0}));
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = i; j < order.size(); ++j) {
      GenCombo c0, c1;
      c1.central = G[i][j];
      alg->set_bracket(order[i], order[j], {c0, c1});
    }
  alg->set_heisenberg(order);
  m.alg = alg;

  VertexAlgebra V(alg);
  const Scalar c = level.k() + Scalar(n - 1);
  const State minus_xi = V.lattice(m.momentum({{m.xi, Scalar(-1)}}));
  m.E = V.lattice(m.momentum({{m.xi, Scalar(1)}}));

  // P = -((c d + psi + a_1 + ... + a_{n-1}) ... (c d + psi + a_1)) psi
  State P = V.gen(m.psi);
  State Y = V.mode(m.psi, -1, minus_xi);
  for (int top = 1; top <= n - 1; ++top) {
    auto step = [&](const State& s, bool with_xi) {
      State t = V.T(s) * c + V.mode(m.psi, -1, s);
      if (with_xi) t += V.mode(m.xi, -1, s) * c;
      for (int i = 1; i <= top; ++i) t += V.mode(m.a[i], -1, s);
      return t;
    };
    P = step(P, false);
    Y = step(Y, true);
  }
  m.P = P * Scalar(-1);
  // :P e^{-xi}: with P expanded formally: the modes of P act directly on |-xi>.
  for (const auto& [mono, coef] : m.P.terms()) m.F.add(Monomial{mono.modes, minus_xi.terms().begin()->first.top}, coef);
  m.F_rewritten = Y * Scalar(-1);
  m.A.assign(n, State());
  for (int i = 1; i <= n - 1; ++i) m.A[i] = V.lattice(m.momentum({{m.a[i], Scalar(1)}}));
  m.Q = V.lattice(m.momentum({{m.psi, Scalar(1)}}));
  return m;
}

namespace {

int gen_of(const G0Algebra& A, const std::string& basis_name) {
  const int u = A.grading.g->index_of(basis_name);
  if (u < 0 || A.J[u] < 0) throw std::invalid_argument("no g_0 generator " + basis_name);
  return A.J[u];
}

}  // namespace

std::vector<State> wakimoto_images(const W2nModel& m, const G0Algebra& A) {
  const int n = m.n;
  if (n < 3) throw std::invalid_argument("the Wakimoto map needs n >= 3");
  VertexAlgebra V = m.vertex();
  const Scalar k = m.level.k();
  std::vector<State> img(A.alg->size());
  img[gen_of(A, "h1")] = V.gen(m.xi) * (k + Scalar(n - 2)) + V.gen(m.psi) * Scalar(2) + V.gen(m.a[1]);
  img[gen_of(A, "h2")] = V.gen(m.xi) - V.gen(m.psi) + V.gen(m.a[2]);
  for (int i = 3; i <= n - 1; ++i) img[gen_of(A, "h" + std::to_string(i))] = V.gen(m.a[i]);
  img[gen_of(A, "e12")] = m.E;
  // -:((k+n-1)(d+xi) + psi + a_1) psi e^{-xi}:
  const State minus_xi = V.lattice(m.momentum({{m.xi, Scalar(-1)}}));
  State y = V.mode(m.psi, -1, minus_xi);
  const Scalar c = k + Scalar(n - 1);
  State t = (V.T(y) + V.mode(m.xi, -1, y)) * c + V.mode(m.psi, -1, y) + V.mode(m.a[1], -1, y);
  img[gen_of(A, "e21")] = t * Scalar(-1);
  return img;
}

std::vector<State> wakimoto_screening_tops(const W2nModel& m, const G0Algebra& A, const ScreeningOp& op) {
  const auto& g = *A.grading.g;
  VertexAlgebra V = m.vertex();
  const Scalar inv = (m.level.k() + Scalar(m.n)).inverse();
  std::vector<State> out;
  for (int r : op.roots) {
    const std::string& name = g.names[r];
    if (name == "e13") {
      out.push_back(V.mode(m.psi, -1, V.lattice(m.momentum({{m.a[2], -inv}, {m.xi, Scalar(-1)}}))));
      continue;
    }
    // e_{i,i+1} is alpha_i
    int i = -1;
    for (int j = 2; j <= m.n - 1; ++j)
      if (name == "e" + std::to_string(j) + std::to_string(j + 1)) i = j;
    if (i < 0) throw std::invalid_argument("no lattice screening for " + name);
    out.push_back(V.lattice(m.momentum({{m.a[i], -inv}})));
  }
  return out;
}

std::pair<State, State> w2n_affine_EF(const G0Algebra& A, int n) {
  VertexAlgebra V = A.vertex();
  const Scalar c = A.level_form.level.k() + Scalar(n - 1);
  State E = V.gen(gen_of(A, "e12"));
  State F = V.gen(gen_of(A, "e21"));
  for (int i = 2; i <= n - 1; ++i) {
    State t = V.T(F) * c;
    for (int j = 1; j <= i; ++j) t += V.mode(gen_of(A, "h" + std::to_string(j)), -1, F);
    F = t;
  }
  return {E, F};
}

}  // namespace wfree
