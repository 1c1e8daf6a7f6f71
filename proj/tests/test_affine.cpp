#include <catch2/catch_amalgamated.hpp>

#include "wfree/affine.hpp"
#include "wfree/lambda.hpp"

using namespace wfree;

namespace {

// c of the Sugawara vector of g_0 = gl_2 inside sl_n with labels (0,1,...,1):
// sl_2 at level k+n-2 plus a rank one Heisenberg.
Scalar gl2_central_charge(int n) {
  Scalar k = Scalar::var();
  Scalar lev = k + Scalar(n - 2);
  return Scalar(3) * lev / (lev + Scalar(2)) + Scalar(n - 2);
}

}  // namespace

TEST_CASE("sugawara on g_0", "[affine][sugawara]") {
  SECTION("sl3 subregular") {
    auto pre = make_preset("sl3-subregular");
    G0Algebra A = build_g0_algebra(pre.grading, Level::symbolic());
    VertexAlgebra V = A.vertex();
    State L = sugawara(A);
    LambdaPoly br = lambda_bracket(V, L, L);
    REQUIRE(br.coeff(0) == V.T(L));
    REQUIRE(br.coeff(1) == L * Scalar(2));
    REQUIRE(br.coeff(2).is_zero());
    REQUIRE(br.coeff(3) == V.vacuum() * (gl2_central_charge(3) / Scalar(2)));
    REQUIRE(br.c.size() == 4);
    for (int u : A.g0) {
      State J = V.gen(A.J[u]);
      LambdaPoly lj = lambda_bracket(V, L, J);
      REQUIRE(lj.coeff(0) == V.T(J));
      REQUIRE(lj.coeff(1) == J);
      REQUIRE(lj.c.size() == 2);
    }
  }
  SECTION("sl2 regular has c = 1") {
    auto pre = make_preset("sl2-regular");
    G0Algebra A = build_g0_algebra(pre.grading, Level::symbolic());
    VertexAlgebra V = A.vertex();
    State L = sugawara(A);
    REQUIRE(lambda_bracket(V, L, L).coeff(3) == V.vacuum() * Scalar(Rational(1, 2)));
  }
}
