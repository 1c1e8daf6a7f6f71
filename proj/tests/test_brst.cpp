#include "support.hpp"

#include "wfree/brst.hpp"
#include "wfree/character.hpp"
#include "wfree/screening.hpp"

using namespace wfree;

TEST_CASE("reduced complex embeds in the full complex", "[brst]") {
  for (const char* name : {"sl2-regular", "osp1_2-regular", "sl3-subregular", "sl3-regular"}) {
    INFO(name);
    auto pre = make_preset(name);
    auto C = build_complex(pre.grading, Level::symbolic());
    auto bad = full_complex_mismatches(C);
    for (const auto& b : bad) UNSCOPED_INFO(b);
    CHECK(bad.empty());
  }
}

TEST_CASE("a_k on the restricted base", "[brst]") {
  for (const char* name : {"sl2-regular", "osp1_2-regular", "sl3-subregular", "sl3-regular"}) {
    auto pre = make_preset(name);
    const auto& g = *pre.grading.g;
    for (int a : restricted_base(pre.grading).elements) {
      const int na = g.negative[a];
      CHECK(a_k(pre.grading, Level::symbolic(), na, a) ==
            (Scalar::var() + Scalar(g.h_dual)) * Scalar(g.form[na][a]));
    }
  }
}

TEST_CASE("d_(0) squares to zero", "[brst]") {
  for (const char* name : {"sl2-regular", "osp1_2-regular", "sl3-subregular"}) {
    INFO(name);
    auto pre = make_preset(name);
    auto C = build_complex(pre.grading, Level::symbolic());
    for (int w = 0; w <= 5; ++w)
      for (int c = 0; c <= w; ++c)
        for (const auto& m : graded_basis(*C.alg, w, c)) CHECK(d0(C, d0(C, State(m))).is_zero());
  }
}

TEST_CASE("cohomology is concentrated in charge zero", "[brst]") {
  SECTION("sl2 regular") {
    auto pre = make_preset("sl2-regular");
    auto C = build_complex(pre.grading, Level::symbolic());
    auto want = expected_character(pre.grading, 8);
    for (const auto& e : cohomology_dims(C, 8)) {
      INFO("weight2 " << e.weight2 << " charge " << e.charge);
      CHECK(e.dim == (e.charge == 0 ? want[e.weight2] : 0));
    }
  }
  SECTION("osp(1|2) regular") {
    auto pre = make_preset("osp1_2-regular");
    auto C = build_complex(pre.grading, Level::symbolic());
    auto want = expected_character(pre.grading, 6);
    for (const auto& e : cohomology_dims(C, 6)) {
      INFO("weight2 " << e.weight2 << " charge " << e.charge);
      CHECK(e.dim == (e.charge == 0 ? want[e.weight2] : 0));
    }
  }
}

TEST_CASE("Miura image of H^0 is the screening kernel", "[brst][miura]") {
  for (const char* name : {"sl2-regular", "osp1_2-regular", "sl3-subregular"}) {
    INFO(name);
    auto pre = make_preset(name);
    auto C = build_complex(pre.grading, Level::symbolic());
    G0Algebra A = build_g0_algebra(pre.grading, Level::symbolic());
    auto ops = generic_screenings(A);
    for (int w = 0; w <= 4; ++w) {
      auto h0 = h0_basis(C, w);
      auto ker = screening_kernel(A, ops, w);
      REQUIRE(h0.kernel_dim == ker.kernel_dim);
      std::vector<Monomial> amb = graded_basis(*A.alg, w);
      Matrix M = zero_matrix(h0.kernel_dim, static_cast<int>(amb.size()));
      for (int i = 0; i < h0.kernel_dim; ++i) {
        State p = miura_project(C, A, h0.basis[i]);
        for (const auto& op : ops) CHECK(screening_apply(A, op, p).is_zero());
        for (size_t j = 0; j < amb.size(); ++j) M[i][j] = p.coeff(amb[j]);
      }
      CHECK(rank(M, static_cast<int>(amb.size())) == h0.kernel_dim);
    }
  }
  auto pre = make_preset("sl2-regular");
  auto C = build_complex(pre.grading, Level::symbolic());
  G0Algebra A = build_g0_algebra(pre.grading, Level::symbolic());
  CHECK(miura_project(C, A, C.vertex().vacuum()) == A.vertex().vacuum());
  auto withphi = State(graded_basis(*C.alg, 2, 1).front());
  CHECK_THROWS_AS(miura_project(C, A, withphi), NonZeroCharge);
}
