#include "wfree/wbn.hpp"

#include <bit>

namespace wfree {

Scalar wbn_gamma(int i, const Scalar& gamma2) {
  Scalar p(1);
  for (int j = 1; j <= i; ++j) p *= Scalar(1) - Scalar(2 * j * (2 * j - 1)) * gamma2;
  return p;
}

WBnModel build_wbn(int n, WBnModel::Mode mode, const Level& level) {
  if (n < 1) throw std::invalid_argument("WB_n needs n >= 1");
  WBnModel m;
  m.n = n;
  m.mode = mode;
  Scalar gamma, norm(1);
  m.scale2 = Scalar(1);
  switch (mode) {
    case WBnModel::Mode::FreeGamma:
      gamma = Scalar::var();
      break;
    case WBnModel::Mode::FreeGammaPlus: {
      Scalar t = Scalar::var();
      gamma = t - t.inverse();
      break;
    }
    case WBnModel::Mode::Level: {
      Scalar nu2 = Scalar(2) * level.k() + Scalar(2 * n + 1);
      if (nu2.is_zero()) throw CriticalLevel("k = -n - 1/2");
      norm = nu2;
      gamma = Scalar(-2) * (level.k() + Scalar(n));  // gamma / gamma_+
      m.scale2 = nu2.inverse().pow(n);              // gamma_+^{2n}
      break;
    }
  }
  m.gamma2 = mode == WBnModel::Mode::Level
                 ? norm - Scalar(2) + norm.inverse()
                 : gamma * gamma;

  auto alg = std::make_shared<ConformalAlgebra>();
  const bool lvl = mode == WBnModel::Mode::Level;
  for (int i = 1; i <= n; ++i)
    m.boson.push_back(alg->add_generator({(lvl ? "B" : "b") + std::to_string(i), 0, 2, 0}));
  m.psi = alg->add_generator({"Psi", 1, 1, 0});
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      GenCombo c0, c1;
      if (i == j) c1.central = norm;
      alg->set_bracket(m.boson[i], m.boson[j], {c0, c1});
    }
  alg->set_bracket(m.psi, m.psi, {GenCombo{{}, Scalar(1)}});
  alg->set_heisenberg(m.boson);
  m.alg = alg;

  VertexAlgebra V(alg);
  State G = V.gen(m.psi);
  for (int i = n; i-- > 0;) G = V.T(G) * gamma + V.mode(m.boson[i], -1, G);
  m.G = G;
  m.GG = lambda_bracket(V, G, G);
  for (auto& c : m.GG.c) c *= m.scale2;
  m.GG.trim();

  for (int i = 1; i <= n; ++i) m.gamma_i.push_back(wbn_gamma(i, m.gamma2));
  if (m.GG.c.size() != static_cast<size_t>(2 * n + 1) || !(m.GG.coeff(2 * n) == V.vacuum() * m.gamma_i.back()))
    throw TopCoefficientMismatch("top lambda coefficient of [G_l G] is not gamma_n");
  m.W.push_back(m.GG.coeff(0));
  for (int j = 1; j <= 2 * n - 2; ++j) {
    const Scalar& gi = m.gamma_i[(j + 1) / 2 - 1];
    m.W.push_back(m.GG.coeff(j) * gi.inverse());
  }
  return m;
}

std::vector<State> wbn_screenings(const WBnModel& m) {
  if (m.mode == WBnModel::Mode::FreeGamma) throw std::invalid_argument("screenings need gamma_+");
  VertexAlgebra V = m.vertex();
  // gamma_+ alpha_i in boson coordinates
  Scalar c = m.mode == WBnModel::Mode::Level ? m.alg->gram()[0][0].inverse() : Scalar::var();
  std::vector<State> out;
  for (int i = 0; i < m.n; ++i) {
    Momentum mu(m.n);
    mu[i] = c;
    if (i + 1 < m.n) mu[i + 1] = -c;
    State e = V.lattice(mu);
    out.push_back(i + 1 < m.n ? e : V.mode(m.psi, -1, e));
  }
  return out;
}

State mod_c2(const State& s) {
  State out;
  for (const auto& [m, c] : s.terms()) {
    bool keep = true;
    for (const auto& md : m.modes)
      if (md.n <= -2) keep = false;
    if (keep) out.add(m, c);
  }
  return out;
}

State elementary_b2(const WBnModel& m, int r) {
  VertexAlgebra V = m.vertex();
  State out;
  const int n = m.n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    State s = V.vacuum();
    for (int j = n; j-- > 0;)
      if (mask & (1u << j)) s = V.mode(m.boson[j], -1, V.mode(m.boson[j], -1, s));
    out += s;
  }
  return out;
}

}  // namespace wfree
