#include "support.hpp"

#include "wfree/character.hpp"
#include "wfree/lambda.hpp"
#include "wfree/w2n.hpp"

using namespace wfree;

TEST_CASE("W2n Gram matrix", "[w2n]") {
  for (int n = 2; n <= 4; ++n) {
    auto m = build_w2n(n);
    VertexAlgebra V = m.vertex();
    const Scalar kn = Scalar::var() + Scalar(n);
    auto pair = [&](int x, int y) { return lambda_bracket(V, V.gen(x), V.gen(y)).coeff(1).coeff(Monomial{}); };
    for (int i = 1; i <= n - 1; ++i) {
      CHECK(pair(m.a[i], m.a[i]) == Scalar(2) * kn);
      if (i + 1 <= n - 1) CHECK(pair(m.a[i], m.a[i + 1]) == -kn);
      CHECK(pair(m.a[i], m.xi).is_zero());
    }
    CHECK(pair(m.a[1], m.psi) == -kn);
    CHECK(pair(m.psi, m.psi) == Scalar(1));
    CHECK(pair(m.psi, m.xi) == Scalar(1));
    CHECK(pair(m.xi, m.xi).is_zero());
  }
}

TEST_CASE("W2n fields", "[w2n]") {
  SECTION("n = 2 closed form of F") {
    auto m = build_w2n(2);
    VertexAlgebra V = m.vertex();
    const Scalar k = Scalar::var();
    State minus_xi = V.lattice(m.momentum({{m.xi, Scalar(-1)}}));
    State psi_e = V.mode(m.psi, -1, minus_xi);
    State want = V.mode(m.psi, -2, minus_xi) * (-(k + Scalar(1))) - V.mode(m.psi, -1, psi_e) -
                 V.mode(m.a[1], -1, psi_e);
    CHECK(m.F == want);
  }
  for (int n = 2; n <= 4; ++n) {
    INFO("n = " << n);
    auto m = build_w2n(n);
    VertexAlgebra V = m.vertex();
    CHECK(m.F == m.F_rewritten);
    CHECK(lambda_bracket(V, m.E, m.E).is_zero());
    State e2 = V.lattice(m.momentum({{m.xi, Scalar(2)}}));
    CHECK(lambda_bracket(V, m.E, e2).is_zero());
    CHECK(V.parity(m.E) == 0);
    for (int i = 1; i <= n - 1; ++i) {
      CHECK(V.nprod(m.A[i], 0, m.E).is_zero());
      CHECK(V.nprod(m.A[i], 0, m.F).is_zero());
    }
    CHECK(V.nprod(m.Q, 0, m.E).is_zero());
    CHECK(V.nprod(m.Q, 0, m.F).is_zero());
    CHECK_FALSE(V.nprod(m.Q, -1, m.F).is_zero());
  }
}

TEST_CASE("Wakimoto map preserves g_0 brackets", "[w2n][wakimoto]") {
  for (int n = 3; n <= 4; ++n) {
    INFO("n = " << n);
    auto m = build_w2n(n);
    auto pre = make_preset("sl" + std::to_string(n) + "-subregular");
    G0Algebra A = build_g0_algebra(pre.grading, Level::symbolic());
    VertexAlgebra VA = A.vertex(), VX = m.vertex();
    auto img = wakimoto_images(m, A);
    int pairs = 0;
    for (int u : A.g0)
      for (int v : A.g0) {
        LambdaPoly src = lambda_bracket(VA, VA.gen(A.J[u]), VA.gen(A.J[v]));
        LambdaPoly dst = lambda_bracket(VX, img[A.J[u]], img[A.J[v]]);
        LambdaPoly mapped;
        for (const auto& c : src.c) mapped.c.push_back(substitute(VX.fock(), img, c));
        CHECK(mapped == dst);
        ++pairs;
      }
    CHECK(pairs == (n + 1) * (n + 1));
  }
}

TEST_CASE("screenings of sl_n subregular in the lattice picture", "[w2n][wakimoto]") {
  for (int n = 3; n <= 4; ++n) {
    INFO("n = " << n);
    auto m = build_w2n(n);
    auto pre = make_preset("sl" + std::to_string(n) + "-subregular");
    G0Algebra A = build_g0_algebra(pre.grading, Level::symbolic());
    VertexAlgebra VX = m.vertex();
    auto img = wakimoto_images(m, A);
    auto [E, F] = w2n_affine_EF(A, n);
    for (const auto& op : generic_screenings(A)) {
      CHECK(screening_apply(A, op, E).is_zero());
      CHECK(screening_apply(A, op, F).is_zero());
      auto tops = wakimoto_screening_tops(m, A, op);
      for (int w = 0; w <= 4; w += 2)
        for (const auto& mono : graded_basis(*A.alg, w))
          for (size_t r = 0; r < op.roots.size(); ++r)
            for (int k = -1; k <= 2; ++k) {
              State s = s_alpha_apply(A, *op.target, op.roots[r], State(mono), k);
              State lhs = substitute(VX.fock(), img, s, tops);
              State rhs = VX.nprod(tops[r], k - 1, substitute(VX.fock(), img, State(mono)));
              CHECK(lhs == rhs);
            }
    }
    // pi(E), pi(F) are the lattice E, F
    CHECK(substitute(VX.fock(), img, E) == m.E);
    CHECK(substitute(VX.fock(), img, F) == m.F);
  }
}
