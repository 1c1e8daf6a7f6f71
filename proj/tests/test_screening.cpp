#include "support.hpp"

#include <set>

#include "wfree/character.hpp"
#include "wfree/screening.hpp"

using namespace wfree;

namespace {

std::vector<long> kernel_dims(const G0Algebra& A, const std::vector<ScreeningOp>& ops, int max2) {
  std::vector<long> out;
  for (int w = 0; w <= max2; ++w) {
    auto rep = screening_kernel(A, ops, w);
    REQUIRE(rep.rechecked);
    out.push_back(rep.kernel_dim);
  }
  return out;
}

// Maps a generic-screening image in M_[alpha] to the lattice sector |mu>.
State relabel(const State& s, const Momentum& mu) {
  State out;
  for (const auto& [m, c] : s.terms()) out.add(Monomial{m.modes, Top{0, mu}}, c);
  return out;
}

}  // namespace

TEST_CASE("expected characters", "[character]") {
  auto sl2 = make_preset("sl2-regular");
  REQUIRE(expected_character(sl2.grading, 12) == std::vector<long>{1, 0, 0, 0, 1, 0, 1, 0, 2, 0, 2, 0, 4});
  auto osp = make_preset("osp1_2-regular");
  auto gens = strong_generators(osp.grading);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].weight2 == 3);
  CHECK(gens[0].parity == 1);
  CHECK(gens[1].weight2 == 4);
  REQUIRE(expected_character(osp.grading, 6) == std::vector<long>{1, 0, 0, 1, 1, 1, 1});
  auto sl3 = make_preset("sl3-subregular");
  REQUIRE(expected_character(sl3.grading, 6) == std::vector<long>{1, 0, 2, 0, 7, 0, 16});
}

TEST_CASE("graded basis", "[character]") {
  ConformalAlgebra alg;
  int a = alg.add_generator({"a", 0, 2, 0});
  int psi = alg.add_generator({"psi", 1, 1, 0});
  (void)a;
  (void)psi;
  CHECK(graded_basis(alg, 0).size() == 1);
  // weight 3/2: psi_(-2), a_(-1) psi_(-1); psi_(-1)^3 is excluded
  CHECK(graded_basis(alg, 3).size() == 2);
  ConformalAlgebra heis;
  heis.add_generator({"h", 0, 2, 0});
  CHECK(graded_basis(heis, 4).size() == 2);
  for (int w = 0; w <= 10; ++w) {
    auto b = graded_basis(alg, w);
    std::set<Monomial> uniq(b.begin(), b.end());
    CHECK(uniq.size() == b.size());
  }
}

TEST_CASE("S^alpha on the vacuum", "[screening]") {
  for (const char* name : {"sl2-regular", "sl3-subregular", "osp1_2-regular"}) {
    auto pre = make_preset(name);
    G0Algebra A = build_g0_algebra(pre.grading, Level::symbolic());
    for (const auto& op : generic_screenings(A)) {
      const auto& M = *op.target;
      for (size_t i = 0; i < op.roots.size(); ++i) {
        State s0 = s_alpha_apply(A, M, op.roots[i], A.vertex().vacuum(), 0);
        CHECK(s0 == State(Monomial{{}, Top{static_cast<int>(i), {}}}));
        for (int n = 1; n <= 3; ++n) CHECK(s_alpha_apply(A, M, op.roots[i], A.vertex().vacuum(), n).is_zero());
      }
      CHECK(screening_apply(A, op, A.vertex().vacuum()).is_zero());
    }
  }
}

TEST_CASE("J^u commutes into S^alpha", "[screening]") {
  auto pre = make_preset("sl3-subregular");
  const auto& g = *pre.grading.g;
  G0Algebra A = build_g0_algebra(pre.grading, Level::symbolic());
  auto ops = generic_screenings(A);
  REQUIRE(ops.size() == 1);
  REQUIRE(ops[0].roots.size() == 2);
  const auto& M = *ops[0].target;
  Module fock = Module::fock(A.alg);
  for (int w = 0; w <= 4; w += 2)
    for (const auto& mono : graded_basis(*A.alg, w)) {
      State v(mono);
      for (int u : A.g0)
        for (int m = -1; m <= 1; ++m)
          for (int n = -1; n <= 2; ++n)
            for (size_t i = 0; i < 2; ++i) {
              int alpha = ops[0].roots[i];
              State lhs = apply_mode(M.module, A.J[u], m, s_alpha_apply(A, M, alpha, v, n));
              lhs -= s_alpha_apply(A, M, alpha, apply_mode(fock, A.J[u], m, v), n);
              State rhs;
              for (size_t j = 0; j < 2; ++j) {
                Rational c = g.c(alpha, ops[0].roots[j], u);
                if (c != 0) rhs.add(s_alpha_apply(A, M, ops[0].roots[j], v, m + n), Scalar(c));
              }
              CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("generic S^alpha matches the exponential field for g_0 = h", "[screening]") {
  for (const char* name : {"sl2-regular", "sl3-regular"}) {
    auto pre = make_preset(name);
    G0Algebra A = build_g0_algebra(pre.grading, Level::symbolic());
    auto gen = generic_screenings(A);
    Module fock = Module::fock(A.alg);
    for (const auto& op : gen) {
      const int alpha = op.roots.front();
      Momentum mu = screening_momentum(A, alpha);
      for (int w = 0; w <= 6; w += 2)
        for (const auto& mono : graded_basis(*A.alg, w))
          for (int n = -2; n <= 3; ++n) {
            State s = s_alpha_apply(A, *op.target, alpha, State(mono), n);
            State e = exponential_mode(fock, mu, n - 1, State(mono));
            CHECK(relabel(s, mu) == e);
          }
    }
  }
}

TEST_CASE("screening kernels match the character", "[screening][kernel]") {
  SECTION("sl2 regular, both forms") {
    auto pre = make_preset("sl2-regular");
    G0Algebra A = build_g0_algebra(pre.grading, Level::symbolic());
    auto want = expected_character(pre.grading, 12);
    CHECK(kernel_dims(A, generic_screenings(A), 12) == want);
    CHECK(kernel_dims(A, exponential_screenings(A), 12) == want);
  }
  SECTION("osp(1|2) regular, both forms") {
    auto pre = make_preset("osp1_2-regular");
    G0Algebra A = build_g0_algebra(pre.grading, Level::symbolic());
    auto want = expected_character(pre.grading, 6);
    CHECK(kernel_dims(A, generic_screenings(A), 6) == want);
    CHECK(kernel_dims(A, exponential_screenings(A), 6) == want);
  }
  SECTION("sl3 subregular") {
    auto pre = make_preset("sl3-subregular");
    G0Algebra A = build_g0_algebra(pre.grading, Level::symbolic());
    CHECK(kernel_dims(A, generic_screenings(A), 6) == expected_character(pre.grading, 6));
  }
  SECTION("sl3 regular at a rational level") {
    auto pre = make_preset("sl3-regular");
    G0Algebra A = build_g0_algebra(pre.grading, Level::value(Rational(7, 3)));
    CHECK(kernel_dims(A, exponential_screenings(A), 8) == expected_character(pre.grading, 8));
  }
}

TEST_CASE("specializing the symbolic kernel", "[screening][kernel]") {
  const Rational q(5, 7);
  auto pre = make_preset("sl3-subregular");
  G0Algebra S = build_g0_algebra(pre.grading, Level::symbolic());
  G0Algebra R = build_g0_algebra(pre.grading, Level::value(q));
  auto sops = generic_screenings(S), rops = generic_screenings(R);
  for (int w = 0; w <= 4; ++w) {
    INFO("weight2 " << w);
    auto sym = screening_kernel(S, sops, w);
    auto rat = screening_kernel(R, rops, w);
    CHECK(sym.kernel_dim == rat.kernel_dim);
    for (const auto& v : sym.basis) {
      State sv;
      for (const auto& [m, c] : v.terms()) {
        auto x = c.eval(q);
        REQUIRE(x.has_value());
        sv.add(m, Scalar(*x));
      }
      REQUIRE_FALSE(sv.is_zero());
      for (const auto& op : rops) CHECK(screening_apply(R, op, sv).is_zero());
    }
  }
}

TEST_CASE("reported factors locate the levels where the kernel jumps", "[screening][kernel]") {
  auto pre = make_preset("sl2-regular");
  G0Algebra S = build_g0_algebra(pre.grading, Level::symbolic());
  auto sym = screening_kernel(S, generic_screenings(S), 10);
  // c = 0 for the Virasoro field: the weight 5 kernel grows by one.
  const Rational q(-4, 3);
  G0Algebra R = build_g0_algebra(pre.grading, Level::value(q));
  auto rat = screening_kernel(R, generic_screenings(R), 10);
  CHECK(rat.kernel_dim == sym.kernel_dim + 1);
  bool found = false;
  for (const auto& f : sym.denominators) found |= Scalar::parse(f).eval(q) == Rational(0);
  CHECK(found);
}
