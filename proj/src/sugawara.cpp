#include "wfree/affine.hpp"

namespace wfree {

G0Algebra build_g0_algebra(const GoodGrading& gr, const Level& level) {
  const auto& g = *gr.g;
  G0Algebra A;
  A.grading = gr;
  A.level_form = tau_form(gr, level);
  A.g0 = gr.basis_of_degree(0);
  A.half = gr.basis_of_degree(1);
  A.J.assign(g.dim, -1);
  A.Phi.assign(g.dim, -1);
  auto alg = std::make_shared<ConformalAlgebra>();
  for (int u : A.g0) A.J[u] = alg->add_generator({"J[" + g.names[u] + "]", g.parity[u], 2, 0});
  for (int a : A.half) A.Phi[a] = alg->add_generator({"Phi[" + g.names[a] + "]", g.parity[a], 1, 0});
  const auto ch = chi(gr);
  for (size_t i = 0; i < A.g0.size(); ++i)
    for (size_t j = i; j < A.g0.size(); ++j) {
      int u = A.g0[i], v = A.g0[j];
      GenCombo c0, c1;
      for (const auto& [w, x] : g.br[u][v]) c0.terms.push_back({A.J[w], 0, Scalar(x)});
      c1.central = A.level_form.tau[u][v];
      alg->set_bracket(A.J[u], A.J[v], {c0, c1});
    }
  for (size_t i = 0; i < A.half.size(); ++i)
    for (size_t j = i; j < A.half.size(); ++j) {
      int a = A.half[i], b = A.half[j];
      Rational c = 0;
      for (const auto& [w, x] : g.br[a][b]) c += x * ch[w];
      alg->set_bracket(A.Phi[a], A.Phi[b], {GenCombo{{}, Scalar(c)}});
    }
  if (gr.abelian_g0()) {
    std::vector<int> h;
    for (int u : A.g0) h.push_back(A.J[u]);
    alg->set_heisenberg(h);
  }
  A.alg = alg;
  return A;
}

State sugawara(const G0Algebra& A) {
  const auto& g = *A.grading.g;
  const int n = static_cast<int>(A.g0.size());
  Matrix B = zero_matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) B[i][j] = Scalar(g.form[A.g0[i]][A.g0[j]]);
  if (determinant(B).is_zero()) throw std::invalid_argument("invariant form degenerate on g_0");
  Matrix Bi = inverse(B);
  VertexAlgebra V = A.vertex();
  // u^i = sum_j Bi[j][i] u_j satisfies (u^i|u_l) = delta_il for symmetric B.
  State L;
  for (int i = 0; i < n; ++i) {
    State Ji = V.gen(A.J[A.g0[i]]);
    for (int j = 0; j < n; ++j) {
      if (Bi[j][i].is_zero()) continue;
      L.add(V.normal_order(V.gen(A.J[A.g0[j]]), Ji), Bi[j][i]);
    }
  }
  L *= (Scalar(2) * A.level_form.k_plus_hdual).inverse();
  return L;
}

}  // namespace wfree
