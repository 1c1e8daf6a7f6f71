#include "wfree/brst.hpp"

#include <functional>

#include "wfree/character.hpp"
#include "wfree/lambda.hpp"

namespace wfree {

namespace {

int sign_of(int p) { return (p & 1) ? -1 : 1; }

Scalar supertrace_term(const GoodGrading& gr, int v, int w, bool project_left) {
  const auto& g = *gr.g;
  auto av = g.ad(v), aw = g.ad(w);
  Rational s = 0;
  for (int a = 0; a < g.dim; ++a)
    for (int b = 0; b < g.dim; ++b) {
      // (X p_+ Y)_aa with p_+ on the middle index, or (p_+ X Y)_aa on the outer one
      const int projected = project_left ? a : b;
      if (gr.deg2[projected] <= 0) continue;
      s += sign_of(g.parity[a]) * av[a][b] * aw[b][a];
    }
  return Scalar(s);
}

}  // namespace

Scalar a_k(const GoodGrading& gr, const Level& level, int v, int w) {
  return supertrace_term(gr, v, w, false) + level.k() * Scalar(gr.g->form[v][w]);
}

Scalar b_k(const GoodGrading& gr, const Level& level, int v, int w) {
  return supertrace_term(gr, v, w, true) + level.k() * Scalar(gr.g->form[v][w]);
}

BrstComplex build_complex(const GoodGrading& gr, const Level& level) {
  const auto& g = *gr.g;
  BrstComplex C;
  C.grading = gr;
  C.level_form = tau_form(gr, level);
  C.low = gr.basis_le(0);
  C.plus = gr.basis_gt(0);
  C.half = gr.basis_of_degree(1);
  C.J.assign(g.dim, -1);
  C.phi.assign(g.dim, -1);
  C.Phi.assign(g.dim, -1);
  auto alg = std::make_shared<ConformalAlgebra>();
  for (int u : C.low) C.J[u] = alg->add_generator({"J[" + g.names[u] + "]", g.parity[u], 2 - gr.deg2[u], 0});
  for (int a : C.plus)
    C.phi[a] = alg->add_generator({"phi^[" + g.names[a] + "]", (g.parity[a] + 1) & 1, gr.deg2[a], 1});
  for (int a : C.half) C.Phi[a] = alg->add_generator({"Phi[" + g.names[a] + "]", g.parity[a], 1, 0});
  const auto ch = chi(gr);
  auto chi_of = [&](const SparseVec& v) {
    Rational s = 0;
    for (const auto& [w, x] : v) s += x * ch[w];
    return s;
  };

  for (size_t i = 0; i < C.low.size(); ++i)
    for (size_t j = i; j < C.low.size(); ++j) {
      const int u = C.low[i], v = C.low[j];
      GenCombo c0, c1;
      for (const auto& [w, x] : g.br[u][v]) c0.terms.push_back({C.J[w], 0, Scalar(x)});
      c1.central = C.level_form.tau[u][v];
      alg->set_bracket(C.J[u], C.J[v], {c0, c1});
    }
  // [phi^alpha_l J^u] = sum_beta c^alpha_{u,beta} phi^beta
  for (int a : C.plus)
    for (int u : C.low) {
      GenCombo c0;
      for (int b : C.plus) {
        Rational x = g.c(a, u, b);
        if (x != 0) c0.terms.push_back({C.phi[b], 0, Scalar(x)});
      }
      if (!c0.is_zero()) alg->set_bracket(C.phi[a], C.J[u], {c0});
    }
  for (size_t i = 0; i < C.half.size(); ++i)
    for (size_t j = i; j < C.half.size(); ++j) {
      const int a = C.half[i], b = C.half[j];
      alg->set_bracket(C.Phi[a], C.Phi[b], {GenCombo{{}, Scalar(chi_of(g.br[a][b]))}});
    }
  C.alg = alg;

  VertexAlgebra V = C.vertex();
  C.d_gen.assign(alg->size(), State());
  for (int u : C.low) {
    State d;
    for (int b : C.plus) {
      const State pb = V.gen(C.phi[b]);
      for (int a : C.low) {
        Rational x = g.c(a, u, b);
        if (x != 0) d.add(V.normal_order(V.gen(C.J[a]), pb), Scalar(-sign_of(g.parity[a]) * x));
      }
      for (int a : C.half) {
        Rational x = g.c(a, u, b);
        if (x != 0) d.add(V.normal_order(V.gen(C.Phi[a]), pb), Scalar(x));
      }
      d.add(V.gen(C.phi[b], 1), a_k(gr, level, u, b));
      Rational y = chi_of(g.br[u][b]);
      if (y != 0) d.add(pb, Scalar(y));
    }
    C.d_gen[C.J[u]] = std::move(d);
  }
  for (int a : C.plus) {
    State d;
    for (int b : C.plus)
      for (int c : C.plus) {
        Rational x = g.c(a, b, c);
        if (x != 0)
          d.add(V.normal_order(V.gen(C.phi[b]), V.gen(C.phi[c])),
                Scalar(Rational(-sign_of(g.parity[a] * g.parity[b]), 2) * x));
      }
    C.d_gen[C.phi[a]] = std::move(d);
  }
  for (int a : C.half) {
    State d;
    for (int b : C.half) {
      Rational x = chi_of(g.br[b][a]);
      if (x != 0) d.add(V.gen(C.phi[b]), Scalar(x));
    }
    C.d_gen[C.Phi[a]] = std::move(d);
  }
  return C;
}

State d0(const BrstComplex& C, const State& v) {
  const Module fock = Module::fock(C.alg);
  // d(a_(n) R) = (da)_(n) R + (-1)^{p(a)} a_(n) dR
  std::map<Monomial, State> memo;
  std::function<State(const Monomial&)> rec = [&](const Monomial& m) -> State {
    if (m.modes.empty()) return State();
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    const Mode md = m.modes.front();
    const State rest(Monomial{{m.modes.begin() + 1, m.modes.end()}, m.top});
    State r = field_mode(fock, C.d_gen[md.gen], md.n, rest);
    State dr;
    for (const auto& [mm, c] : rest.terms()) dr.add(rec(mm), c);
    State tail = apply_mode(fock, md.gen, md.n, dr);
    r.add(tail, Scalar(sign_of(C.alg->gen(md.gen).parity)));
    return memo.emplace(m, std::move(r)).first->second;
  };
  State out;
  for (const auto& [m, c] : v.terms()) out.add(rec(m), c);
  return out;
}

Matrix d0_matrix(const BrstComplex& C, int weight2, int charge) {
  auto src = graded_basis(*C.alg, weight2, charge);
  auto dst = graded_basis(*C.alg, weight2, charge + 1);
  std::map<Monomial, int> row;
  for (size_t i = 0; i < dst.size(); ++i) row[dst[i]] = static_cast<int>(i);
  Matrix M = zero_matrix(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (size_t j = 0; j < src.size(); ++j) {
    const State img = d0(C, State(src[j]));
    for (const auto& [m, c] : img.terms()) {
      auto it = row.find(m);
      if (it == row.end()) throw std::logic_error("d_(0) left its graded piece");
      M[it->second][j] = c;
    }
  }
  return M;
}

std::vector<CohomologyEntry> cohomology_dims(const BrstComplex& C, int max_weight2) {
  std::vector<CohomologyEntry> out;
  for (int w = 0; w <= max_weight2; ++w) {
    // charge c is bounded by the number of ghost modes, each of doubled weight >= 1
    std::vector<int> dims, ranks;
    for (int c = 0; c <= w + 1; ++c) {
      const int n = static_cast<int>(graded_basis(*C.alg, w, c).size());
      dims.push_back(n);
      ranks.push_back(n == 0 ? 0 : rank(d0_matrix(C, w, c), n));
    }
    for (int c = 0; c <= w; ++c) {
      const int h = dims[c] - ranks[c] - (c > 0 ? ranks[c - 1] : 0);
      out.push_back({w, c, dims[c], h});
    }
  }
  return out;
}

KernelReport h0_basis(const BrstComplex& C, int weight2) {
  return kernel_basis(graded_basis(*C.alg, weight2, 0), {[&C](const State& v) { return d0(C, v); }},
                      weight2);
}

State miura_project(const BrstComplex& C, const G0Algebra& A, const State& v) {
  const auto& gr = C.grading;
  std::vector<int> to_g0(C.alg->size(), -2);  // -2 kills the monomial, -1 rejects it
  for (int u : C.low) to_g0[C.J[u]] = gr.deg2[u] == 0 ? A.J[u] : -2;
  for (int a : C.plus) to_g0[C.phi[a]] = -1;
  for (int a : C.half) to_g0[C.Phi[a]] = A.Phi[a];
  State out;
  for (const auto& [m, c] : v.terms()) {
    Monomial r;
    bool keep = true;
    for (const auto& md : m.modes) {
      const int t = to_g0[md.gen];
      if (t == -1) throw NonZeroCharge("miura projection needs a charge zero state");
      if (t == -2) {
        keep = false;
        continue;
      }
      r.modes.push_back({static_cast<int16_t>(t), md.n});
    }
    if (keep) out.add(r, c);
  }
  return out;
}

std::vector<std::string> full_complex_mismatches(const BrstComplex& C) {
  const auto& gr = C.grading;
  const auto& g = *gr.g;
  const Scalar k = C.level_form.level.k();
  const auto ch = chi(gr);
  auto chi_of = [&](const SparseVec& v) {
    Rational s = 0;
    for (const auto& [w, x] : v) s += x * ch[w];
    return s;
  };

  auto full = std::make_shared<ConformalAlgebra>();
  std::vector<int> U(g.dim), lo(g.dim, -1), up(g.dim, -1), F(g.dim, -1);
  // weights: u is 1, every fermion 1/2; each piece of d is then homogeneous
  for (int a = 0; a < g.dim; ++a) U[a] = full->add_generator({"u[" + g.names[a] + "]", g.parity[a], 2, 0});
  for (int a : C.plus) lo[a] = full->add_generator({"phi_[" + g.names[a] + "]", (g.parity[a] + 1) & 1, 1, -1});
  for (int a : C.plus) up[a] = full->add_generator({"phi^[" + g.names[a] + "]", (g.parity[a] + 1) & 1, 1, 1});
  for (int a : C.half) F[a] = full->add_generator({"Phi[" + g.names[a] + "]", g.parity[a], 1, 0});
  for (int a = 0; a < g.dim; ++a)
    for (int b = a; b < g.dim; ++b) {
      GenCombo c0, c1;
      for (const auto& [w, x] : g.br[a][b]) c0.terms.push_back({U[w], 0, Scalar(x)});
      c1.central = k * Scalar(g.form[a][b]);
      full->set_bracket(U[a], U[b], {c0, c1});
    }
  for (int a : C.plus) full->set_bracket(lo[a], up[a], {GenCombo{{}, Scalar(1)}});
  for (size_t i = 0; i < C.half.size(); ++i)
    for (size_t j = i; j < C.half.size(); ++j) {
      const int a = C.half[i], b = C.half[j];
      full->set_bracket(F[a], F[b], {GenCombo{{}, Scalar(chi_of(g.br[a][b]))}});
    }
  VertexAlgebra W(full);
  const Module& fock = W.fock();

  State d;
  for (int a : C.plus) {
    d.add(W.normal_order(W.gen(U[a]), W.gen(up[a])), Scalar(sign_of(g.parity[a])));
    if (ch[a] != 0) d.add(W.gen(up[a]), Scalar(ch[a]));
  }
  for (int a : C.plus)
    for (int b : C.plus)
      for (int c : C.plus) {
        Rational x = g.c(c, a, b);
        if (x == 0) continue;
        State t = W.normal_order(W.gen(lo[c]), W.normal_order(W.gen(up[a]), W.gen(up[b])));
        d.add(t, Scalar(Rational(-sign_of(g.parity[a] * g.parity[c]), 2) * x));
      }
  for (int a : C.half) d.add(W.normal_order(W.gen(up[a]), W.gen(F[a])));

  std::vector<State> iota_gen(C.alg->size());
  for (int u : C.low) {
    State s = W.gen(U[u]);
    for (int a : C.plus)
      for (int b : C.plus) {
        Rational x = g.c(a, u, b);
        if (x != 0) s.add(W.normal_order(W.gen(lo[a]), W.gen(up[b])), Scalar(sign_of(g.parity[a]) * x));
      }
    iota_gen[C.J[u]] = std::move(s);
  }
  for (int a : C.plus) iota_gen[C.phi[a]] = W.gen(up[a]);
  for (int a : C.half) iota_gen[C.Phi[a]] = W.gen(F[a]);

  std::map<Monomial, State> memo;
  std::function<State(const Monomial&)> iota_m = [&](const Monomial& m) -> State {
    if (m.modes.empty()) return W.vacuum();
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    const Mode md = m.modes.front();
    const Monomial tail{{m.modes.begin() + 1, m.modes.end()}, m.top};
    State r = field_mode(fock, iota_gen[md.gen], md.n, iota_m(tail));
    return memo.emplace(m, std::move(r)).first->second;
  };
  auto iota = [&](const State& v) {
    State out;
    for (const auto& [m, c] : v.terms()) out.add(iota_m(m), c);
    return out;
  };

  std::vector<std::string> bad;
  VertexAlgebra V = C.vertex();
  for (int a = 0; a < C.alg->size(); ++a) {
    for (int b = 0; b < C.alg->size(); ++b) {
      LambdaPoly lk = lambda_bracket(V, V.gen(a), V.gen(b));
      LambdaPoly lf = lambda_bracket(W, iota_gen[a], iota_gen[b]);
      lk.trim();
      lf.trim();
      const size_t n = std::max(lk.c.size(), lf.c.size());
      for (size_t i = 0; i < n; ++i)
        if (!(iota(lk.coeff(i)) == lf.coeff(i)))
          bad.push_back("bracket " + C.alg->gen(a).name + " " + C.alg->gen(b).name + " at lambda^" +
                        std::to_string(i));
    }
    if (!(field_mode(fock, d, 0, iota_gen[a]) == iota(C.d_gen[a])))
      bad.push_back("d_(0) " + C.alg->gen(a).name);
  }
  return bad;
}

}  // namespace wfree
