#include <catch2/catch_amalgamated.hpp>

#include "wfree/lambda.hpp"

using namespace wfree;

namespace {

GenCombo central(Scalar c) { return GenCombo{{}, std::move(c)}; }
GenCombo term(int g, Scalar c, int d = 0) { return GenCombo{{{g, d, std::move(c)}}, Scalar()}; }

// Heisenberg a with [a_l a] = l, free fermion psi with [psi_l psi] = 1.
VertexAlgebra heis_fermion() {
  auto alg = std::make_shared<ConformalAlgebra>();
  int a = alg->add_generator({"a", 0, 2, 0});
  int psi = alg->add_generator({"psi", 1, 1, 0});
  alg->set_bracket(a, a, {GenCombo{}, central(Scalar(1))});
  alg->set_bracket(psi, psi, {central(Scalar(1))});
  alg->set_heisenberg({a});
  return VertexAlgebra(alg);
}

}  // namespace

TEST_CASE("vertex engine basics", "[vertex]") {
  VertexAlgebra V = heis_fermion();
  State a = V.gen("a"), psi = V.gen("psi");
  SECTION("heisenberg bracket") {
    LambdaPoly br = lambda_bracket(V, a, a);
    REQUIRE(br.c.size() == 2);
    REQUIRE(br.c[0].is_zero());
    REQUIRE(br.c[1] == V.vacuum());
  }
  SECTION("fermion square vanishes") {
    REQUIRE(V.normal_order(psi, psi).is_zero());
  }
  SECTION("virasoro from a and psi") {
    // L = 1/2 :aa: + 1/2 :(d psi) psi:, c = 3/2
    State L = V.normal_order(a, a) * Scalar(Rational(1, 2)) +
              V.normal_order(V.T(psi), psi) * Scalar(Rational(1, 2));
    LambdaPoly br = lambda_bracket(V, L, L);
    REQUIRE(br.coeff(0) == V.T(L));
    REQUIRE(br.coeff(1) == L * Scalar(2));
    REQUIRE(br.coeff(2).is_zero());
    REQUIRE(br.coeff(3) == V.vacuum() * Scalar(Rational(3, 4)));
    REQUIRE(lambda_bracket(V, L, psi).coeff(1) == psi * Scalar(Rational(1, 2)));
  }
  SECTION("lattice operator") {
    State e = V.lattice({Scalar(1)});
    // a_(0) e^a = e^a, T e^a = :a e^a:
    REQUIRE(lambda_bracket(V, a, e).coeff(0) == e);
    REQUIRE(V.T(e) == V.mode(V.alg().index("a"), -1, e));
    // e^a_(n) e^{-a}: (a|-a) = -1
    State f = V.lattice({Scalar(-1)});
    REQUIRE(V.nprod(e, 0, f) == V.vacuum());
  }
  SECTION("axioms on composites") {
    State x = V.normal_order(a, V.T(psi));
    State y = V.normal_order(a, a) + V.T(a);
    State z = V.normal_order(psi, V.normal_order(a, V.T(a)));
    REQUIRE(skew_bracket(V, x, y) == lambda_bracket(V, y, x));
    REQUIRE(skew_bracket(V, x, z) == lambda_bracket(V, z, x));
    REQUIRE(wick_bracket(V, x, y, z) == lambda_bracket(V, x, V.normal_order(y, z)));
    REQUIRE(bipoly_zero(jacobi_defect(V, x, y, z)));
    REQUIRE(commutator_defect(V, V.fock(), x, 2, z, -3, y).is_zero());
  }
}
