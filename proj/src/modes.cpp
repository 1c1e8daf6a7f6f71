#include <algorithm>
#include <functional>

#include "wfree/algebra.hpp"

namespace wfree {

namespace {

int sign_of(int p) { return (p & 1) ? -1 : 1; }

long floor_div2(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

Monomial tail(const Monomial& m) {
  Monomial r;
  r.modes.assign(m.modes.begin() + 1, m.modes.end());
  r.top = m.top;
  return r;
}

// [a_(n), b_(m)] applied to r.
State commutator(const Module& M, int a, int n, int b, int m, const Monomial& r) {
  State out;
  const auto& br = M.alg().bracket(a, b);
  for (size_t j = 0; j < br.size(); ++j) {
    const GenCombo& c = br[j];
    if (c.is_zero()) continue;
    Scalar bin = binomial(n, static_cast<long>(j));
    if (bin.is_zero()) continue;
    const int q = n + m - static_cast<int>(j);
    for (const auto& t : c.terms) {
      Scalar f = bin * t.coeff * Scalar(sign_of(t.deriv)) * binomial(q, t.deriv);
      if (f.is_zero()) continue;
      out.add(apply_mode(M, t.gen, q - t.deriv, r), f);
    }
    if (!c.central.is_zero() && q == -1) out.add(r, bin * c.central);
  }
  return out;
}

}  // namespace

Scalar binomial(long n, long j) {
  if (j < 0) return Scalar();
  mpz_class num = 1, den = 1;
  for (long i = 0; i < j; ++i) {
    num *= (n - i);
    den *= (i + 1);
  }
  return Scalar(Rational(num, den));
}

State apply_mode(const Module& M, int gen, int n, const Monomial& v) {
  const auto& alg = M.alg();
  if (v.modes.empty()) {
    if (n <= -1) {
      Monomial r = v;
      r.modes.push_back({static_cast<int16_t>(gen), static_cast<int16_t>(n)});
      return State(r);
    }
    State out;
    for (const auto& [t, c] : M.top_action(gen, n, v.top)) out.add(Monomial{{}, t}, c);
    return out;
  }
  const Mode key{static_cast<int16_t>(gen), static_cast<int16_t>(n)};
  const Mode first = v.modes.front();
  if (n <= -1) {
    if (key < first || (key == first && alg.gen(gen).parity == 0)) {
      Monomial r;
      r.modes.reserve(v.modes.size() + 1);
      r.modes.push_back(key);
      r.modes.insert(r.modes.end(), v.modes.begin(), v.modes.end());
      r.top = v.top;
      return State(r);
    }
    if (key == first) {
      // odd generator: a_(n) a_(n) = 1/2 [a_(n), a_(n)]
      State c = commutator(M, gen, n, gen, n, tail(v));
      c *= Scalar(Rational(1, 2));
      return c;
    }
  }
  const Monomial rest = tail(v);
  const int s = sign_of(alg.gen(gen).parity * alg.gen(first.gen).parity);
  State moved = apply_mode(M, gen, n, rest);
  State out = apply_mode(M, first.gen, first.n, moved);
  if (s < 0) out *= Scalar(-1);
  out += commutator(M, gen, n, first.gen, first.n, rest);
  return out;
}

State apply_mode(const Module& M, int gen, int n, const State& v) {
  State out;
  for (const auto& [m, c] : v.terms()) out.add(apply_mode(M, gen, n, m), c);
  return out;
}

// ---------------------------------------------------------------- exponentials

namespace {

State heis_mode(const Module& M, const Momentum& mu, int n, const State& v) {
  State out;
  const auto& h = M.alg().heisenberg();
  // mu_(n) = sum_i c_i h_i(n) with c = mu itself (coordinates in the Heisenberg basis).
  for (size_t i = 0; i < mu.size(); ++i)
    if (!mu[i].is_zero()) out.add(apply_mode(M, h[i], n, v), mu[i]);
  return out;
}

State shifted(const State& s, const Momentum& mu) {
  State out;
  for (const auto& [m, c] : s.terms()) {
    Monomial r = m;
    Momentum sum = r.top.mom.empty() ? Momentum(mu.size()) : r.top.mom;
    for (size_t i = 0; i < mu.size(); ++i) sum[i] += mu[i];
    r.top.mom = normalize_momentum(std::move(sum));
    out.add(r, c);
  }
  return out;
}

long integral_pairing(const Scalar& s) {
  if (!s.is_constant()) throw NonIntegralPairing("momentum pairing is not constant: " + s.str());
  Rational q = s.constant();
  if (q.get_den() != 1) throw NonIntegralPairing("momentum pairing is not integral: " + to_string(q));
  return q.get_num().get_si();
}

State exponential_mono(const Module& M, const Momentum& mu, int p, const Monomial& u) {
  if (!M.is_fock()) throw UndefinedAction("lattice operators act only on Fock modules");
  if (mu.size() != M.alg().heisenberg().size()) throw UndefinedAction("momentum has wrong dimension");
  const long s0 = integral_pairing(M.pairing(mu, u.top.mom));
  const int du = M.depth2(u);
  // E^+ part: w_d = -(1/d) sum_{n=1}^d mu_(n) w_{d-n}
  std::vector<State> w{State(u)};
  for (int d = 1; 2 * d <= du; ++d) {
    State acc;
    for (int n = 1; n <= d; ++n) acc += heis_mode(M, mu, n, w[d - n]);
    acc *= Scalar(Rational(-1, d));
    w.push_back(std::move(acc));
  }
  State out;
  for (int d = 0; d < static_cast<int>(w.size()); ++d) {
    if (w[d].is_zero()) continue;
    const long e = -p - 1 - s0 + d;
    if (e < 0) continue;
    // E^- part: u_i = (1/i) sum_{m=1}^i mu_(-m) u_{i-m}
    std::vector<State> ue{w[d]};
    for (long i = 1; i <= e; ++i) {
      State acc;
      for (long m = 1; m <= i; ++m) acc += heis_mode(M, mu, static_cast<int>(-m), ue[i - m]);
      acc *= Scalar(Rational(1, i));
      ue.push_back(std::move(acc));
    }
    out += shifted(ue[e], mu);
  }
  return out;
}

State field_mode_mono(const Module& M, const Monomial& a, int p, const Monomial& u);

State field_mode_state(const Module& M, const Monomial& a, int p, const State& v) {
  State out;
  for (const auto& [m, c] : v.terms()) out.add(field_mode_mono(M, a, p, m), c);
  return out;
}

State field_mode_mono(const Module& M, const Monomial& a, int p, const Monomial& u) {
  if (a.modes.empty()) {
    if (a.top.mom.empty()) return p == -1 ? State(u) : State();
    return exponential_mono(M, a.top.mom, p, u);
  }
  const auto& alg = M.alg();
  const int g = a.modes.front().gen;
  const int s = -a.modes.front().n - 1;  // a = :(d^s g / s!) B:
  const Monomial B = tail(a);
  const int du = M.depth2(u);
  int dB = 0, pB = 0;
  for (const auto& md : B.modes) {
    dB += alg.gen(md.gen).weight2 - 2 * (md.n + 1);
    pB += alg.gen(md.gen).parity;
  }
  long sB = 0;
  if (!B.top.mom.empty() && M.is_fock()) sB = integral_pairing(M.pairing(B.top.mom, u.top.mom));
  const int w2g = alg.gen(g).weight2;
  State out;
  // sum_{j<0} c_(j) B_(p-j-1) u, with c_(j) = (-1)^s binom(j,s) g_(j-s)
  const long qmax = floor_div2(dB + du - 2 - 2 * sB);
  for (long j = p - 1 - qmax; j <= -1; ++j) {
    State x = field_mode_mono(M, B, static_cast<int>(p - j - 1), u);
    if (x.is_zero()) continue;
    Scalar c = Scalar(sign_of(s)) * binomial(j, s);
    out.add(apply_mode(M, g, static_cast<int>(j - s), x), c);
  }
  // (-1)^{p(g)p(B)} sum_{j>=0} B_(p-j-1) c_(j) u
  const int sg = sign_of(alg.gen(g).parity * pB);
  const long imax = floor_div2(du + w2g - 2);  // largest i = j - s with g_(i) u possibly nonzero
  for (long i = 0; i <= imax; ++i) {
    const long j = i + s;
    State y = apply_mode(M, g, static_cast<int>(i), u);
    if (y.is_zero()) continue;
    Scalar c = Scalar(sg * sign_of(s)) * binomial(j, s);
    out.add(field_mode_state(M, B, static_cast<int>(p - j - 1), y), c);
  }
  return out;
}

}  // namespace

State exponential_mode(const Module& M, const Momentum& mu, int p, const State& v) {
  State out;
  Momentum m = normalize_momentum(mu);
  for (const auto& [u, c] : v.terms()) {
    if (m.empty()) {
      if (p == -1) out.add(u, c);
      continue;
    }
    out.add(exponential_mono(M, m, p, u), c);
  }
  return out;
}

State field_mode(const Module& M, const State& A, int p, const State& v) {
  State out;
  for (const auto& [a, ca] : A.terms())
    for (const auto& [u, cu] : v.terms()) out.add(field_mode_mono(M, a, p, u), ca * cu);
  return out;
}

State substitute(const Module& target, const std::vector<State>& images, const State& v,
                 const std::vector<State>& top_images) {
  std::map<Monomial, State> memo;
  std::function<State(const Monomial&)> rec = [&](const Monomial& m) -> State {
    if (m.modes.empty()) {
      if (!m.top.mom.empty()) throw UndefinedAction("substitution of a lattice state");
      if (top_images.empty()) return State(Monomial{});
      return top_images.at(m.top.index);
    }
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    const Mode md = m.modes.front();
    State r = field_mode(target, images.at(md.gen), md.n, rec(tail(m)));
    return memo.emplace(m, std::move(r)).first->second;
  };
  State out;
  for (const auto& [m, c] : v.terms()) out.add(rec(m), c);
  return out;
}

// ---------------------------------------------------------------- vertex algebra

State VertexAlgebra::vacuum() const { return State(Monomial{}); }

State VertexAlgebra::lattice(const Momentum& mu) const {
  return State(Monomial{{}, Top{0, normalize_momentum(mu)}});
}

State VertexAlgebra::gen(int g, int deriv) const { return mode(g, -1 - deriv, vacuum()); }

State VertexAlgebra::gen(const std::string& name, int deriv) const {
  int g = alg_->index(name);
  if (g < 0) throw std::invalid_argument("unknown generator " + name);
  return gen(g, deriv);
}

State VertexAlgebra::T(const State& a) const {
  State out;
  for (const auto& [m, c] : a.terms()) {
    const size_t k = m.modes.size();
    State suffix(Monomial{{}, m.top});
    State deriv;
    if (!m.top.mom.empty()) {
      // T|mu> = mu_(-1)|mu>
      const auto& h = alg_->heisenberg();
      for (size_t i = 0; i < m.top.mom.size(); ++i)
        if (!m.top.mom[i].is_zero()) deriv.add(mode(h[i], -1, suffix), m.top.mom[i]);
    }
    for (size_t i = k; i-- > 0;) {
      const Mode md = m.modes[i];
      State d = mode(md.gen, md.n, deriv);
      d.add(mode(md.gen, md.n - 1, suffix), Scalar(-md.n));
      deriv = std::move(d);
      suffix = mode(md.gen, md.n, suffix);
    }
    out.add(deriv, c);
  }
  return out;
}

int VertexAlgebra::parity(const State& s) const {
  int p = -1;
  for (const auto& [m, c] : s.terms()) {
    int q = fock_.parity(m);
    if (p >= 0 && q != p) throw std::invalid_argument("state is not parity homogeneous");
    p = q;
  }
  return p < 0 ? 0 : p;
}

int VertexAlgebra::depth2(const State& s) const {
  int d = 0;
  for (const auto& [m, c] : s.terms()) d = std::max(d, fock_.depth2(m));
  return d;
}

}  // namespace wfree
