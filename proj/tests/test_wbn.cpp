#include "support.hpp"

#include "wfree/wbn.hpp"

using namespace wfree;

TEST_CASE("WB_1 bracket closed form", "[wbn]") {
  auto m = build_wbn(1, WBnModel::Mode::FreeGamma);
  VertexAlgebra V = m.vertex();
  const Scalar g = Scalar::var();
  State b = V.gen(m.boson[0]);
  State psi = V.gen(m.psi);
  State c0 = V.normal_order(b, b) + V.T(b) * g + V.normal_order(V.T(psi), psi);
  CHECK(m.GG.coeff(0) == c0);
  CHECK(m.GG.coeff(1).is_zero());
  CHECK(m.GG.coeff(2) == V.vacuum() * (Scalar(1) - Scalar(2) * g * g));
}

TEST_CASE("WB_n top coefficient and congruences", "[wbn]") {
  for (int n = 1; n <= 3; ++n) {
    INFO("n = " << n);
    auto m = build_wbn(n, WBnModel::Mode::FreeGamma);  // throws on a top mismatch
    REQUIRE(m.W.size() == static_cast<size_t>(2 * n - 1));
    for (int i = 0; i <= n - 1; ++i) CHECK(mod_c2(m.W[2 * i]) == mod_c2(elementary_b2(m, n - i)));
    for (int i = 1; i <= n - 1; ++i) CHECK(mod_c2(m.W[2 * i - 1]).is_zero());
  }
}

TEST_CASE("WB_n screenings annihilate G", "[wbn]") {
  for (auto mode : {WBnModel::Mode::FreeGammaPlus, WBnModel::Mode::Level}) {
    for (int n = 1; n <= 3; ++n) {
      INFO("n = " << n);
      auto m = build_wbn(n, mode);
      VertexAlgebra V = m.vertex();
      auto qs = wbn_screenings(m);
      REQUIRE(qs.size() == static_cast<size_t>(n));
      for (const auto& q : qs) {
        CHECK(V.nprod(q, 0, m.G).is_zero());
        // nonzero lower modes show the check is not vacuous
        CHECK_FALSE(V.nprod(q, -1, m.G).is_zero());
      }
    }
  }
}
