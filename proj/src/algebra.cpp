#include "wfree/algebra.hpp"

#include <algorithm>

namespace wfree {

namespace {

int sign_of(int p) { return (p & 1) ? -1 : 1; }

void add_term(std::vector<BracketTerm>& terms, int gen, int deriv, const Scalar& c) {
  if (c.is_zero()) return;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (it->gen == gen && it->deriv == deriv) {
      it->coeff += c;
      if (it->coeff.is_zero()) terms.erase(it);
      return;
    }
  }
  terms.push_back({gen, deriv, c});
  std::sort(terms.begin(), terms.end(), [](const BracketTerm& x, const BracketTerm& y) {
    return std::tie(x.gen, x.deriv) < std::tie(y.gen, y.deriv);
  });
}

bool same_combo(const GenCombo& a, const GenCombo& b) {
  if (a.central != b.central || a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].gen != b.terms[i].gen || a.terms[i].deriv != b.terms[i].deriv ||
        a.terms[i].coeff != b.terms[i].coeff)
      return false;
  return true;
}

std::vector<GenCombo> trimmed(std::vector<GenCombo> v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

}  // namespace

// ---------------------------------------------------------------- algebra

int ConformalAlgebra::add_generator(Generator g) {
  if (index(g.name) >= 0) throw std::invalid_argument("duplicate generator " + g.name);
  gens_.push_back(std::move(g));
  for (auto& row : table_) row.emplace_back();
  table_.emplace_back(gens_.size());
  heis_pos_.push_back(-1);
  return size() - 1;
}

int ConformalAlgebra::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (gens_[i].name == name) return i;
  return -1;
}

void ConformalAlgebra::set_bracket(int a, int b, std::vector<GenCombo> by_j) {
  for (auto& c : by_j) {
    std::vector<BracketTerm> merged;
    for (const auto& t : c.terms) add_term(merged, t.gen, t.deriv, t.coeff);
    c.terms = std::move(merged);
  }
  by_j = trimmed(std::move(by_j));
  // b_(n) a = -p(a,b) sum_i (-1)^{n+i} T^(i) (a_(n+i) b)
  const int p = sign_of(gens_[a].parity * gens_[b].parity);
  std::vector<GenCombo> rev(by_j.size());
  for (size_t n = 0; n < by_j.size(); ++n) {
    for (size_t m = n; m < by_j.size(); ++m) {
      const int i = static_cast<int>(m - n);
      const Scalar s(-p * sign_of(static_cast<int>(m)));
      for (const auto& t : by_j[m].terms)
        add_term(rev[n].terms, t.gen, t.deriv + i, s * binomial(t.deriv + i, i) * t.coeff);
      if (i == 0) rev[n].central += s * by_j[m].central;
    }
  }
  rev = trimmed(std::move(rev));
  if (a == b) {
    bool ok = rev.size() == by_j.size();
    for (size_t n = 0; ok && n < rev.size(); ++n) ok = same_combo(rev[n], by_j[n]);
    if (!ok) throw std::invalid_argument("bracket of " + gens_[a].name + " with itself violates skew-symmetry");
  }
  table_[a][b] = std::move(by_j);
  table_[b][a] = std::move(rev);
}

void ConformalAlgebra::set_heisenberg(std::vector<int> gens) {
  heis_ = std::move(gens);
  std::fill(heis_pos_.begin(), heis_pos_.end(), -1);
  const int h = static_cast<int>(heis_.size());
  gram_ = zero_matrix(h, h);
  for (int i = 0; i < h; ++i) {
    heis_pos_[heis_[i]] = i;
    if (gens_[heis_[i]].parity != 0 || gens_[heis_[i]].weight2 != 2)
      throw std::invalid_argument("Heisenberg generators must be even of weight one");
  }
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      const auto& br = table_[heis_[i]][heis_[j]];
      if (br.size() > 2 || (!br.empty() && !br[0].is_zero()) || (br.size() == 2 && !br[1].terms.empty()))
        throw std::invalid_argument("generators are not a Heisenberg subalgebra");
      if (br.size() == 2) gram_[i][j] = br[1].central;
    }
  gram_inv_ = h ? inverse(gram_) : Matrix{};
}

Momentum normalize_momentum(Momentum m) {
  for (const auto& x : m)
    if (!x.is_zero()) return m;
  return {};
}

// ---------------------------------------------------------------- state

void State::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void State::add(const State& s, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [m, x] : s.terms_) add(m, c.is_one() ? x : x * c);
}

Scalar State::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

State State::operator-() const {
  State r = *this;
  for (auto& [m, x] : r.terms_) x = -x;
  return r;
}

State& State::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

// ---------------------------------------------------------------- module

Module Module::fock(AlgebraPtr alg) {
  Module m;
  m.alg_ = std::move(alg);
  m.fock_ = true;
  m.tops_ = {{"vac", 0}};
  return m;
}

Module Module::induced(AlgebraPtr alg, std::vector<TopSpec> tops,
                       std::map<int, std::vector<std::vector<Scalar>>> zero_modes) {
  Module m;
  m.alg_ = std::move(alg);
  m.fock_ = false;
  m.tops_ = std::move(tops);
  m.zero_modes_ = std::move(zero_modes);
  return m;
}

int Module::parity(const Monomial& m) const {
  int p = 0;
  for (const auto& md : m.modes) p += alg_->gen(md.gen).parity;
  if (!fock_) p += tops_.at(m.top.index).parity;
  return p & 1;
}

int Module::depth2(const Monomial& m) const {
  int d = 0;
  for (const auto& md : m.modes) d += alg_->gen(md.gen).weight2 - 2 * (md.n + 1);
  return d;
}

int Module::charge(const Monomial& m) const {
  int c = 0;
  for (const auto& md : m.modes) c += alg_->gen(md.gen).charge;
  return c;
}

Scalar Module::pairing(const Momentum& a, const Momentum& b) const {
  if (a.empty() || b.empty()) return Scalar();
  const auto& g = alg_->gram();
  Scalar s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero() && !g[i][j].is_zero()) s += a[i] * g[i][j] * b[j];
  }
  return s;
}

std::vector<std::pair<Top, Scalar>> Module::top_action(int gen, int n, const Top& t) const {
  std::vector<std::pair<Top, Scalar>> out;
  if (n != 0) return out;
  if (fock_) {
    int pos = alg_->heisenberg_position(gen);
    if (pos < 0 || t.mom.empty()) return out;
    Scalar s;
    for (size_t j = 0; j < t.mom.size(); ++j) s += alg_->gram()[pos][j] * t.mom[j];
    if (!s.is_zero()) out.emplace_back(t, s);
    return out;
  }
  auto it = zero_modes_.find(gen);
  if (it == zero_modes_.end()) return out;
  const auto& mat = it->second;
  for (size_t i = 0; i < mat.size(); ++i)
    if (!mat[i][t.index].is_zero()) out.emplace_back(Top{static_cast<int>(i), {}}, mat[i][t.index]);
  return out;
}

}  // namespace wfree
