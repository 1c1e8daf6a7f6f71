#include "wfree/screening.hpp"

#include "wfree/character.hpp"

namespace wfree {

namespace {

int sign_of(int p) { return (p & 1) ? -1 : 1; }

bool is_phi_gen(const G0Algebra& A, int gen) {
  for (int a : A.half)
    if (A.Phi[a] == gen) return true;
  return false;
}

// Splits a monomial of V^tau(g_0) (x) F into its current part and fermion part.
std::pair<Monomial, Monomial> split(const G0Algebra& A, const Monomial& m) {
  Monomial j, f;
  for (const auto& md : m.modes) (is_phi_gen(A, md.gen) ? f : j).modes.push_back(md);
  return {j, f};
}

int modes_parity(const ConformalAlgebra& alg, const Monomial& m) {
  int p = 0;
  for (const auto& md : m.modes) p += alg.gen(md.gen).parity;
  return p & 1;
}

// (J-part in M_[beta]) (x) (fermion part) as states of M_[beta] (x) F.
State combine(const G0Algebra& A, const ClassModule& M, const State& s, const State& f) {
  State out;
  for (const auto& [m1, c1] : s.terms())
    for (const auto& [m2, c2] : f.terms()) {
      Monomial m = m1;
      m.modes.insert(m.modes.end(), m2.modes.begin(), m2.modes.end());
      int sg = sign_of(modes_parity(*A.alg, m2) * M.module.tops()[m1.top.index].parity);
      out.add(m, c1 * c2 * Scalar(sg));
    }
  return out;
}

}  // namespace

ClassModule class_module(const G0Algebra& A, const std::vector<int>& cls) {
  const auto& g = *A.grading.g;
  std::vector<TopSpec> tops;
  for (int a : cls) tops.push_back({"x[" + g.names[a] + "]", (g.parity[a] + 1) & 1});
  std::map<int, std::vector<std::vector<Scalar>>> zm;
  const int n = static_cast<int>(cls.size());
  for (int u : A.g0) {
    std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>(n));
    bool any = false;
    for (int i = 0; i < n; ++i)      // gamma
      for (int j = 0; j < n; ++j) {  // alpha
        Rational c = g.c(cls[j], cls[i], u);
        if (c != 0) {
          mat[i][j] = Scalar(c);
          any = true;
        }
      }
    if (any) zm[A.J[u]] = std::move(mat);
  }
  return ClassModule{cls, Module::induced(A.alg, std::move(tops), std::move(zm))};
}

State l_minus_one(const G0Algebra& A, const ClassModule& M, const State& v) {
  return field_mode(M.module, sugawara(A), 0, v);
}

State s_alpha_apply(const G0Algebra& A, const ClassModule& M, int alpha, const State& a, int n) {
  const auto& g = *A.grading.g;
  int idx = -1;
  for (size_t i = 0; i < M.roots.size(); ++i)
    if (M.roots[i] == alpha) idx = static_cast<int>(i);
  if (idx < 0) throw std::invalid_argument("root not in class");
  const State L = sugawara(A);
  const State x(Monomial{{}, Top{idx, {}}});
  State out;
  for (const auto& [mono, c] : a.terms()) {
    for (const auto& md : mono.modes)
      if (is_phi_gen(A, md.gen)) throw std::invalid_argument("S^alpha is defined on V^tau(g_0)");
    const int pA = modes_parity(*A.alg, mono);
    const int sg = sign_of(g.parity[alpha] * pA + pA);
    const int dA = M.module.depth2(Monomial{mono.modes, Top{idx, {}}});
    const State A1(Monomial{mono.modes, Top{}});
    // m = r + n - 1, r >= 0, A_(m) x nonzero only for 2m + 2 <= dA
    Scalar rfact(1);
    for (int r = 0;; ++r) {
      const int m = r + n - 1;
      if (2 * m + 2 > dA) break;
      if (r > 0) rfact *= Scalar(r);
      State y = field_mode(M.module, A1, m, x);
      for (int i = 0; i < r && !y.is_zero(); ++i) y = field_mode(M.module, L, 0, y);
      out.add(y, c * Scalar(sg * sign_of(m + 1)) / rfact);
    }
  }
  return out;
}

std::vector<ScreeningOp> generic_screenings(const G0Algebra& A) {
  const auto& g = *A.grading.g;
  const auto rb = restricted_base(A.grading);
  const auto ch = chi(A.grading);
  std::vector<ScreeningOp> ops;
  for (size_t i = 0; i < rb.classes.size(); ++i) {
    ScreeningOp op;
    op.kind = ScreeningOp::Kind::Generic;
    op.deg2 = rb.class_deg2[i];
    op.roots = rb.classes[i];
    op.name = "Q[" + g.names[op.roots.front()] + "]";
    for (int a : op.roots) op.weights.push_back(ch[a]);
    op.target = class_module(A, op.roots);
    if (op.deg2 != 1 && op.deg2 != 2)
      throw NotGoodGrading("restricted base element of degree other than 1/2 or 1");
    ops.push_back(std::move(op));
  }
  return ops;
}

Momentum screening_momentum(const G0Algebra& A, int alpha) {
  const auto& g = *A.grading.g;
  const auto& alg = *A.alg;
  const int h = static_cast<int>(alg.heisenberg().size());
  if (h != static_cast<int>(A.g0.size())) throw UndefinedAction("exponential screenings need g_0 = h");
  Vector p(h);
  for (int i = 0; i < h; ++i) p[i] = Scalar(-g.weight[alpha][A.g0[i]]);
  Momentum mu(h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) mu[i] += alg.gram_inverse()[i][j] * p[j];
  return normalize_momentum(mu);
}

std::vector<ScreeningOp> exponential_screenings(const G0Algebra& A) {
  if (!A.grading.abelian_g0()) throw UndefinedAction("exponential screenings need g_0 = h");
  const auto& g = *A.grading.g;
  const auto rb = restricted_base(A.grading);
  const auto ch = chi(A.grading);
  VertexAlgebra V = A.vertex();
  std::vector<ScreeningOp> ops;
  for (size_t i = 0; i < rb.classes.size(); ++i) {
    const int alpha = rb.classes[i].front();
    ScreeningOp op;
    op.kind = ScreeningOp::Kind::Exponential;
    op.deg2 = rb.class_deg2[i];
    op.roots = rb.classes[i];
    op.name = "Q[" + g.names[alpha] + "]";
    op.weights = {ch[alpha]};
    State e = V.lattice(screening_momentum(A, alpha));
    if (op.deg2 == 2) {
      op.field = e * Scalar(ch[alpha]);
    } else {
      op.field = V.mode(A.Phi[alpha], -1, e);
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

State screening_apply(const G0Algebra& A, const ScreeningOp& op, const State& v) {
  if (op.kind == ScreeningOp::Kind::Exponential) return field_mode(A.vertex().fock(), op.field, 0, v);
  const auto& g = *A.grading.g;
  const ClassModule& M = *op.target;
  const Module fock = Module::fock(A.alg);
  State out;
  for (const auto& [mono, c] : v.terms()) {
    auto [jm, fm] = split(A, mono);
    const State Apart(jm), Bpart(fm);
    const int pA = modes_parity(*A.alg, jm);
    const int dA = fock.depth2(jm), dB = fock.depth2(fm);
    for (size_t i = 0; i < op.roots.size(); ++i) {
      const int alpha = op.roots[i];
      if (op.deg2 == 2) {
        if (op.weights[i] == 0) continue;
        out.add(combine(A, M, s_alpha_apply(A, M, alpha, Apart, 1), Bpart), c * Scalar(op.weights[i]));
        continue;
      }
      const int sg = sign_of(g.parity[alpha] * pA);
      // Phi_(-n) B nonzero needs -n <= (dB-1)/2; S_n A nonzero needs n <= dA/2.
      for (int n = -((dB - 1) >= 0 ? (dB - 1) / 2 : -1); 2 * n <= dA; ++n) {
        State s = s_alpha_apply(A, M, alpha, Apart, n);
        if (s.is_zero()) continue;
        State f = apply_mode(fock, A.Phi[alpha], -n, Bpart);
        if (f.is_zero()) continue;
        out.add(combine(A, M, s, f), c * Scalar(sg));
      }
    }
  }
  return out;
}

KernelReport screening_kernel(const G0Algebra& A, const std::vector<ScreeningOp>& ops, int weight2) {
  std::vector<LinearMap> maps;
  for (const auto& op : ops) maps.push_back([&A, &op](const State& v) { return screening_apply(A, op, v); });
  return kernel_basis(graded_basis(*A.alg, weight2), maps, weight2);
}

}  // namespace wfree
