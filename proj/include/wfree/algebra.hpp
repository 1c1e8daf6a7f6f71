#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfree/linalg.hpp"
#include "wfree/scalar.hpp"

namespace wfree {

struct UndefinedAction : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonIntegralPairing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Generator {
  std::string name;
  int parity = 0;
  int weight2 = 2;  // doubled conformal weight
  int charge = 0;
};

// c * d^deriv g / deriv!
struct BracketTerm {
  int gen;
  int deriv;
  Scalar coeff;
};

// a_(j) b: a combination of generator derivatives plus a multiple of |0>.
struct GenCombo {
  std::vector<BracketTerm> terms;
  Scalar central;
  bool is_zero() const { return terms.empty() && central.is_zero(); }
};

// Lie conformal superalgebra given by generators and their lambda-brackets,
// whose universal enveloping vertex algebra is the ambient space.
class ConformalAlgebra {
 public:
  int add_generator(Generator g);
  // Sets a_(j) b for j = 0..by_j.size()-1 and fills b_(n) a by skew-symmetry.
  void set_bracket(int a, int b, std::vector<GenCombo> by_j);
  // Declares the even weight-one generators whose brackets are central; the
  // Gram matrix is read off from their brackets.
  void set_heisenberg(std::vector<int> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int i) const { return gens_[i]; }
  int index(const std::string& name) const;  // -1 if absent
  const std::vector<GenCombo>& bracket(int a, int b) const { return table_[a][b]; }

  const std::vector<int>& heisenberg() const { return heis_; }
  int heisenberg_position(int gen) const { return heis_pos_[gen]; }
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inv_; }

 private:
  std::vector<Generator> gens_;
  std::vector<std::vector<std::vector<GenCombo>>> table_;
  std::vector<int> heis_;
  std::vector<int> heis_pos_;
  Matrix gram_, gram_inv_;
};

using AlgebraPtr = std::shared_ptr<const ConformalAlgebra>;

struct Mode {
  int16_t gen;
  int16_t n;
  friend auto operator<=>(const Mode&, const Mode&) = default;
};

// Coordinates of a lattice momentum in the Heisenberg basis; empty means zero.
using Momentum = std::vector<Scalar>;
Momentum normalize_momentum(Momentum m);

struct Top {
  int index = 0;
  Momentum mom;
  friend auto operator<=>(const Top&, const Top&) = default;
  friend bool operator==(const Top&, const Top&) = default;
};

// PBW monomial: creation modes sorted by (generator, mode), applied to a top vector.
struct Monomial {
  std::vector<Mode> modes;
  Top top;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class State {
 public:
  using Map = std::map<Monomial, Scalar>;
  State() = default;
  State(const Monomial& m, Scalar c = Scalar(1)) { add(m, std::move(c)); }

  void add(const Monomial& m, const Scalar& c);
  void add(const State& s, const Scalar& c = Scalar(1));
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  Scalar coeff(const Monomial& m) const;

  State operator-() const;
  State& operator+=(const State& o) {
    add(o);
    return *this;
  }
  State& operator-=(const State& o) {
    add(o, Scalar(-1));
    return *this;
  }
  State& operator*=(const Scalar& c);
  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(State a, const Scalar& c) { return a *= c; }
  friend State operator*(const Scalar& c, State a) { return a *= c; }
  friend bool operator==(const State& a, const State& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

struct TopSpec {
  std::string name;
  int parity = 0;
};

// A module generated from top vectors on which the non-negative modes act
// through zero modes only.
class Module {
 public:
  // The vacuum module together with all lattice sectors |mu>.
  static Module fock(AlgebraPtr alg);
  // Tops x_i with zero-mode matrices: zero_modes[g][i][j] is the coefficient
  // of x_i in g_(0) x_j.
  static Module induced(AlgebraPtr alg, std::vector<TopSpec> tops,
                        std::map<int, std::vector<std::vector<Scalar>>> zero_modes);

  bool is_fock() const { return fock_; }
  const ConformalAlgebra& alg() const { return *alg_; }
  const AlgebraPtr& alg_ptr() const { return alg_; }
  const std::vector<TopSpec>& tops() const { return tops_; }

  int parity(const Monomial& m) const;
  int depth2(const Monomial& m) const;  // doubled weight above the top
  int charge(const Monomial& m) const;

  // g_(n) on a top vector for n >= 0.
  std::vector<std::pair<Top, Scalar>> top_action(int gen, int n, const Top& t) const;

  // (mu|nu) for momenta in Heisenberg coordinates.
  Scalar pairing(const Momentum& a, const Momentum& b) const;

 private:
  AlgebraPtr alg_;
  bool fock_ = true;
  std::vector<TopSpec> tops_;
  std::map<int, std::vector<std::vector<Scalar>>> zero_modes_;
};

// ---- mode algebra

Scalar binomial(long n, long j);  // generalized, n may be negative

// g_(n) v
State apply_mode(const Module& m, int gen, int n, const State& v);
State apply_mode(const Module& m, int gen, int n, const Monomial& v);

// Y(A,z) = sum A_(p) z^{-p-1} for A in the Fock vertex algebra, acting on m.
State field_mode(const Module& m, const State& A, int p, const State& v);

// Modes of the lattice vertex operator of |mu>.
State exponential_mode(const Module& m, const Momentum& mu, int p, const State& v);

// Extends a generator assignment g -> images[g] (states of `target`) to
// states: g_(n) R goes to images[g]_(n) applied to the image of R. Tops of the
// source go to top_images[index] (the vacuum when empty). Only a vertex algebra
// morphism when the images satisfy the source brackets.
State substitute(const Module& target, const std::vector<State>& images, const State& v,
                 const std::vector<State>& top_images = {});

// A vertex algebra: the Fock module of a conformal algebra with translation.
class VertexAlgebra {
 public:
  explicit VertexAlgebra(AlgebraPtr alg) : alg_(alg), fock_(Module::fock(alg)) {}

  const ConformalAlgebra& alg() const { return *alg_; }
  const AlgebraPtr& alg_ptr() const { return alg_; }
  const Module& fock() const { return fock_; }

  State vacuum() const;
  State lattice(const Momentum& mu) const;  // |mu>
  State gen(int g, int deriv = 0) const;    // d^deriv g / deriv!
  State gen(const std::string& name, int deriv = 0) const;
  State T(const State& a) const;
  State nprod(const State& a, int n, const State& b) const { return field_mode(fock_, a, n, b); }
  State normal_order(const State& a, const State& b) const { return nprod(a, -1, b); }
  // Applies a creation mode g_(n) to a state.
  State mode(int g, int n, const State& v) const { return apply_mode(fock_, g, n, v); }

  int parity(const State& s) const;  // throws if inhomogeneous
  int depth2(const State& s) const;  // max over terms

 private:
  AlgebraPtr alg_;
  Module fock_;
};

}  // namespace wfree
