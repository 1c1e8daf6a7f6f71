#include "wfree/suites.hpp"

#include <random>
#include <set>

#include "wfree/brst.hpp"
#include "wfree/character.hpp"
#include "wfree/fields.hpp"
#include "wfree/lambda.hpp"
#include "wfree/screening.hpp"
#include "wfree/w2n.hpp"
#include "wfree/wbn.hpp"

namespace wfree {

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j = {{"check", r.check}, {"status", r.pass ? "pass" : "fail"}, {"weights_tested", r.weights_tested}};
  if (!r.witness.is_null()) j["witness"] = r.witness;
  if (!r.data.is_null()) j["data"] = r.data;
  return j;
}

GoodGrading SuiteOptions::resolved_grading() const { return grading ? *grading : make_preset(algebra).grading; }

namespace {

std::vector<int> upto(int max2) {
  std::vector<int> w;
  for (int i = 0; i <= max2; ++i) w.push_back(i);
  return w;
}

// Records the first failure only.
void fail(CheckResult& r, nlohmann::json witness) {
  if (r.pass) r.witness = std::move(witness);
  r.pass = false;
}

// ------------------------------------------------------------------ wick

struct Sampler {
  std::mt19937_64 rng;
  bool symbolic;

  std::uint64_t pick(std::uint64_t n) { return rng() % n; }

  Scalar coefficient() {
    static const Rational q[] = {Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(-3, 2)};
    Scalar c(q[pick(5)]);
    if (symbolic && pick(3) == 0) c += Scalar::var();
    return c;
  }
};

// A homogeneous composite: one or two PBW monomials of equal weight and parity.
State random_composite(const ConformalAlgebra& alg, const std::vector<std::vector<Monomial>>& by_weight,
                       Sampler& s) {
  std::vector<int> nonempty;
  for (size_t w = 1; w < by_weight.size(); ++w)
    if (!by_weight[w].empty()) nonempty.push_back(static_cast<int>(w));
  const auto& basis = by_weight[nonempty[s.pick(nonempty.size())]];
  auto parity = [&](const Monomial& m) {
    int p = 0;
    for (const auto& md : m.modes) p += alg.gen(md.gen).parity;
    return p & 1;
  };
  const Monomial& m1 = basis[s.pick(basis.size())];
  State out;
  out.add(m1, s.coefficient());
  const Monomial& m2 = basis[s.pick(basis.size())];
  if (parity(m2) == parity(m1)) out.add(m2, s.coefficient());
  if (out.is_zero()) out.add(m1, Scalar(1));
  return out;
}

void wick_on(const std::string& label, const AlgebraPtr& alg, const SuiteOptions& o, std::uint64_t salt,
             std::vector<CheckResult>& out) {
  VertexAlgebra V(alg);
  const int max2 = std::min(o.max_weight2, 6);
  std::vector<std::vector<Monomial>> by_weight;
  for (int w = 0; w <= max2; ++w) by_weight.push_back(graded_basis(*alg, w));
  bool any = false;
  for (int w = 1; w <= max2; ++w) any |= !by_weight[w].empty();
  CheckResult skew{"wick.skew_symmetry[" + label + "]"}, wick{"wick.wick_formula[" + label + "]"},
      jac{"wick.jacobi[" + label + "]"}, modes{"wick.mode_commutator[" + label + "]"};
  if (any) {
    Sampler s{std::mt19937_64(o.seed ^ salt), o.level.is_symbolic()};
    std::vector<State> c;
    for (int i = 0; i < o.samples; ++i) c.push_back(random_composite(*alg, by_weight, s));
    std::set<int> weights;
    for (const auto& x : c) weights.insert(V.depth2(x));
    const int N = static_cast<int>(c.size());
    for (int i = 0; i < N; ++i) {
      const State &x = c[i], &y = c[(i + 1) % N], &z = c[(i + 2) % N];
      auto witness = [&] {
        return nlohmann::json{{"a", state_json(V.fock(), x)}, {"b", state_json(V.fock(), y)},
                              {"c", state_json(V.fock(), z)}};
      };
      if (!(skew_bracket(V, x, y) == lambda_bracket(V, y, x))) fail(skew, witness());
      if (!(wick_bracket(V, x, y, z) == lambda_bracket(V, x, V.normal_order(y, z)))) fail(wick, witness());
      if (!bipoly_zero(jacobi_defect(V, x, y, z))) fail(jac, witness());
      const int m = static_cast<int>(s.pick(3)), n = static_cast<int>(s.pick(4)) - 2;
      if (!commutator_defect(V, V.fock(), x, m, y, n, z).is_zero()) {
        auto w = witness();
        w["m"] = m;
        w["n"] = n;
        fail(modes, w);
      }
    }
    for (auto* r : {&skew, &wick, &jac, &modes}) {
      r->weights_tested.assign(weights.begin(), weights.end());
      r->data = {{"samples", N}};
    }
  }
  for (auto* r : {&skew, &wick, &jac, &modes}) out.push_back(std::move(*r));
}

}  // namespace

std::vector<CheckResult> suite_wick(const SuiteOptions& o) {
  const GoodGrading gr = o.resolved_grading();
  std::vector<CheckResult> out;
  G0Algebra A = build_g0_algebra(gr, o.level);
  wick_on(o.algebra + ":V_tau(g_0)xF", A.alg, o, 0x9e3779b97f4a7c15ULL, out);
  BrstComplex C = build_complex(gr, o.level);
  wick_on(o.algebra + ":C_k", C.alg, o, 0xc2b2ae3d27d4eb4fULL, out);
  return out;
}

// ------------------------------------------------------------------ brst

std::vector<CheckResult> suite_brst(const SuiteOptions& o) {
  const GoodGrading gr = o.resolved_grading();
  BrstComplex C = build_complex(gr, o.level);
  std::vector<CheckResult> out;

  CheckResult emb{"brst.full_complex_embedding"};
  auto bad = full_complex_mismatches(C);
  if (!bad.empty()) fail(emb, bad);
  out.push_back(std::move(emb));

  CheckResult dd{"brst.d_squared"};
  dd.weights_tested = upto(o.max_weight2);
  for (int w = 0; w <= o.max_weight2 && dd.pass; ++w)
    for (int c = 0; c <= w && dd.pass; ++c)
      for (const auto& m : graded_basis(*C.alg, w, c)) {
        State v(m);
        if (!d0(C, d0(C, v)).is_zero()) {
          fail(dd, {{"weight2", w}, {"charge", c}, {"state", state_json(C.vertex().fock(), v)}});
          break;
        }
      }
  out.push_back(std::move(dd));

  CheckResult co{"brst.cohomology"};
  co.weights_tested = upto(o.max_weight2);
  const auto want = expected_character(gr, o.max_weight2);
  nlohmann::json h0 = nlohmann::json::array(), other = nlohmann::json::array();
  for (const auto& e : cohomology_dims(C, o.max_weight2)) {
    if (e.charge == 0) h0.push_back(e.dim);
    if (e.charge != 0 && e.dim != 0) other.push_back({{"weight2", e.weight2}, {"charge", e.charge}, {"dim", e.dim}});
    const long expect = e.charge == 0 ? want[e.weight2] : 0;
    if (e.dim != expect)
      fail(co, {{"weight2", e.weight2}, {"charge", e.charge}, {"dim", e.dim}, {"expected", expect}});
  }
  co.data = {{"h0", h0}, {"expected", want}, {"nonzero_charge_classes", other}};
  out.push_back(std::move(co));
  return out;
}

// ------------------------------------------------------------------ wbn

std::vector<CheckResult> suite_wbn(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= o.n; ++n) {
    const std::string tag = "[n=" + std::to_string(n) + "]";
    CheckResult top{"wbn.top_coefficient" + tag}, cong{"wbn.congruences" + tag}, scr{"wbn.screenings" + tag};
    try {
      auto m = build_wbn(n, WBnModel::Mode::FreeGamma);
      VertexAlgebra V = m.vertex();
      if (!(m.GG.coeff(2 * n) == V.vacuum() * m.gamma_i[n - 1]) || m.GG.c.size() != static_cast<size_t>(2 * n + 1))
        fail(top, {{"coefficient", state_json(V.fock(), m.GG.coeff(2 * n))}});
      top.data = {{"gamma_n", m.gamma_i[n - 1].str("g")}};
      for (int i = 0; i <= n - 1; ++i)
        if (!(mod_c2(m.W[2 * i]) == mod_c2(elementary_b2(m, n - i)))) fail(cong, {{"W", 2 * i}});
      for (int i = 1; i <= n - 1; ++i)
        if (!mod_c2(m.W[2 * i - 1]).is_zero()) fail(cong, {{"W", 2 * i - 1}});
      if (n == 1) {
        CheckResult closed{"wbn.closed_form[n=1]"};
        const Scalar g = Scalar::var();
        State b = V.gen(m.boson[0]), psi = V.gen(m.psi);
        State c0 = V.normal_order(b, b) + V.T(b) * g + V.normal_order(V.T(psi), psi);
        if (!(m.GG.coeff(0) == c0) || !m.GG.coeff(1).is_zero() ||
            !(m.GG.coeff(2) == V.vacuum() * (Scalar(1) - Scalar(2) * g * g)))
          fail(closed, {{"bracket", "differs from the closed form"}});
        out.push_back(std::move(closed));
      }
    } catch (const TopCoefficientMismatch& e) {
      fail(top, {{"error", e.what()}});
    }
    for (auto mode : {WBnModel::Mode::FreeGammaPlus, WBnModel::Mode::Level}) {
      auto m = build_wbn(n, mode);
      VertexAlgebra V = m.vertex();
      auto qs = wbn_screenings(m);
      for (size_t i = 0; i < qs.size(); ++i) {
        State r = V.nprod(qs[i], 0, m.G);
        if (!r.is_zero() || V.nprod(qs[i], -1, m.G).is_zero())
          fail(scr, {{"screening", i + 1},
                     {"mode", mode == WBnModel::Mode::Level ? "level" : "gamma_plus"},
                     {"image", state_json(V.fock(), r)}});
      }
    }
    scr.weights_tested = top.weights_tested = cong.weights_tested = {2 * n + 1};
    out.push_back(std::move(top));
    out.push_back(std::move(cong));
    out.push_back(std::move(scr));
  }
  return out;
}

// ------------------------------------------------------------------ fs

std::vector<CheckResult> suite_fs(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  const Level level = o.level;
  for (int n = 2; n <= std::max(o.n, 2); ++n) {
    const std::string tag = "[n=" + std::to_string(n) + "]";
    auto m = build_w2n(n, level);
    VertexAlgebra V = m.vertex();
    CheckResult gram{"fs.gram" + tag}, forms{"fs.F_forms" + tag}, ee{"fs.EE" + tag}, ker{"fs.screenings" + tag};

    const Matrix G = w2n_gram(n, level);
    std::vector<int> order;
    for (int i = n - 1; i >= 1; --i) order.push_back(m.a[i]);
    order.push_back(m.psi);
    order.push_back(m.xi);
    for (size_t i = 0; i < order.size(); ++i)
      for (size_t j = 0; j < order.size(); ++j) {
        LambdaPoly br = lambda_bracket(V, V.gen(order[i]), V.gen(order[j]));
        if (!(br.coeff(1).coeff(Monomial{}) == G[i][j]) || !br.coeff(0).is_zero())
          fail(gram, {{"row", V.alg().gen(order[i]).name}, {"column", V.alg().gen(order[j]).name}});
      }

    if (!(m.F == m.F_rewritten))
      fail(forms, {{"F", state_json(V.fock(), m.F)}, {"rewritten", state_json(V.fock(), m.F_rewritten)}});
    if (n == 2) {
      const Scalar k = level.k();
      State minus_xi = V.lattice(m.momentum({{m.xi, Scalar(-1)}}));
      State pe = V.mode(m.psi, -1, minus_xi);
      State want = V.mode(m.psi, -2, minus_xi) * (-(k + Scalar(1))) - V.mode(m.psi, -1, pe) - V.mode(m.a[1], -1, pe);
      if (!(m.F == want)) fail(forms, {{"F", state_json(V.fock(), m.F)}, {"closed_form", state_json(V.fock(), want)}});
    }
    if (!lambda_bracket(V, m.E, m.E).is_zero()) fail(ee, {{"E", state_json(V.fock(), m.E)}});

    std::vector<std::pair<std::string, State>> ops;
    for (int i = 1; i <= n - 1; ++i) ops.emplace_back("A" + std::to_string(i), m.A[i]);
    ops.emplace_back("Q", m.Q);
    for (const auto& [name, q] : ops)
      for (const auto& [fname, f] : {std::pair<std::string, State>{"E", m.E}, {"F", m.F}}) {
        State r = V.nprod(q, 0, f);
        if (!r.is_zero()) fail(ker, {{"screening", name}, {"field", fname}, {"image", state_json(V.fock(), r)}});
      }
    ker.weights_tested = {2, 2 * n};
    out.push_back(std::move(gram));
    out.push_back(std::move(forms));
    out.push_back(std::move(ee));
    out.push_back(std::move(ker));
  }
  return out;
}

// ------------------------------------------------------------------ wakimoto

std::vector<CheckResult> suite_wakimoto(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  for (int n = 3; n <= std::max(o.n, 3); ++n) {
    const std::string tag = "[sl" + std::to_string(n) + "-subregular]";
    auto m = build_w2n(n, o.level);
    G0Algebra A = build_g0_algebra(make_preset("sl" + std::to_string(n) + "-subregular").grading, o.level);
    VertexAlgebra VA = A.vertex(), VX = m.vertex();
    const auto& g = *A.grading.g;
    auto img = wakimoto_images(m, A);

    CheckResult br{"wakimoto.brackets" + tag};
    int pairs = 0;
    for (int u : A.g0)
      for (int v : A.g0) {
        LambdaPoly src = lambda_bracket(VA, VA.gen(A.J[u]), VA.gen(A.J[v]));
        LambdaPoly mapped;
        for (const auto& c : src.c) mapped.c.push_back(substitute(VX.fock(), img, c));
        if (!(mapped == lambda_bracket(VX, img[A.J[u]], img[A.J[v]])))
          fail(br, {{"u", g.names[u]}, {"v", g.names[v]}});
        ++pairs;
      }
    br.data = {{"ordered_pairs", pairs}};
    br.weights_tested = {2};
    out.push_back(std::move(br));

    CheckResult ef{"wakimoto.E_F" + tag};
    auto [E, F] = w2n_affine_EF(A, n);
    if (!(substitute(VX.fock(), img, E) == m.E) || !(substitute(VX.fock(), img, F) == m.F))
      fail(ef, {{"F_image", state_json(VX.fock(), substitute(VX.fock(), img, F))}});
    ef.weights_tested = {2, 2 * n};
    out.push_back(std::move(ef));

    CheckResult sc{"wakimoto.screenings" + tag};
    const int max2 = std::min(o.max_weight2, 4);
    sc.weights_tested = upto(max2);
    for (const auto& op : generic_screenings(A)) {
      auto tops = wakimoto_screening_tops(m, A, op);
      for (int w = 0; w <= max2; ++w)
        for (const auto& mono : graded_basis(*A.alg, w))
          for (size_t r = 0; r < op.roots.size(); ++r)
            for (int k = -1; k <= 2; ++k) {
              State s = s_alpha_apply(A, *op.target, op.roots[r], State(mono), k);
              State lhs = substitute(VX.fock(), img, s, tops);
              State rhs = VX.nprod(tops[r], k - 1, substitute(VX.fock(), img, State(mono)));
              if (!(lhs == rhs))
                fail(sc, {{"root", g.names[op.roots[r]]}, {"n", k}, {"state", state_json(VA.fock(), State(mono))}});
            }
    }
    out.push_back(std::move(sc));
  }
  return out;
}

// ------------------------------------------------------------------ miura

std::vector<CheckResult> suite_miura(const SuiteOptions& o) {
  const GoodGrading gr = o.resolved_grading();
  BrstComplex C = build_complex(gr, o.level);
  G0Algebra A = build_g0_algebra(gr, o.level);
  auto ops = generic_screenings(A);
  CheckResult r{"miura.projection"};
  r.weights_tested = upto(o.max_weight2);
  nlohmann::json rows = nlohmann::json::array();
  for (int w = 0; w <= o.max_weight2; ++w) {
    auto h0 = h0_basis(C, w);
    auto ker = screening_kernel(A, ops, w);
    nlohmann::json row = {{"weight2", w}, {"h0_dim", h0.kernel_dim}, {"kernel_dim", ker.kernel_dim}};
    std::vector<Monomial> amb = graded_basis(*A.alg, w);
    Matrix M = zero_matrix(h0.kernel_dim, static_cast<int>(amb.size()));
    std::vector<State> proj;
    for (int i = 0; i < h0.kernel_dim; ++i) {
      State p = miura_project(C, A, h0.basis[i]);
      for (const auto& op : ops)
        if (!screening_apply(A, op, p).is_zero())
          fail(r, {{"weight2", w}, {"screening", op.name}, {"class", state_json(A.vertex().fock(), p)}});
      for (size_t j = 0; j < amb.size(); ++j) M[i][j] = p.coeff(amb[j]);
      proj.push_back(std::move(p));
    }
    const int rk = rank(M, static_cast<int>(amb.size()));
    if (rk != h0.kernel_dim || h0.kernel_dim != ker.kernel_dim)
      fail(r, {{"weight2", w}, {"rank", rk}, {"h0_dim", h0.kernel_dim}, {"kernel_dim", ker.kernel_dim}});
    if (h0.kernel_dim == 1 && ker.kernel_dim == 1) {
      const State& kb = ker.basis[0];
      const auto& [lead, c] = *kb.terms().begin();
      const Scalar scalar = proj[0].coeff(lead) / c;
      if (!(kb * scalar == proj[0])) fail(r, {{"weight2", w}, {"scalar", "projection is not proportional"}});
      row["scalar"] = scalar.str();
    }
    rows.push_back(std::move(row));
  }
  r.data = {{"weights", rows}};
  return {r};
}

std::vector<std::string> suite_names() { return {"wick", "brst", "wbn", "fs", "wakimoto", "miura"}; }

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "wick") return suite_wick(o);
  if (name == "brst") return suite_brst(o);
  if (name == "wbn") return suite_wbn(o);
  if (name == "fs") return suite_fs(o);
  if (name == "wakimoto") return suite_wakimoto(o);
  if (name == "miura") return suite_miura(o);
  throw std::invalid_argument("unknown suite " + name);
}

}  // namespace wfree
