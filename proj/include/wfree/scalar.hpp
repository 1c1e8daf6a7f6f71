#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wfree {

using Rational = mpq_class;

Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

// Dense univariate polynomial with rational coefficients, lowest degree first.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly var();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int i) const;
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& q);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }

  // a = q*b + r with deg r < deg b.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  Poly monic() const;
  // Makes coefficients coprime integers with positive leading coefficient.
  Poly primitive() const;

  Rational eval(const Rational& x) const;
  std::string str(std::string_view var = "k") const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  std::vector<Rational> c_;
  void trim();
};

Poly gcd(Poly a, Poly b);  // monic, gcd(0,0)=0

// Element of Q(x): reduced fraction with monic denominator.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(Poly num, Poly den);

  static Scalar var();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_one() const { return is_constant() && num_.coeff(0) == 1; }
  Rational constant() const;  // throws unless is_constant()

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;
  Scalar pow(int e) const;

  // Evaluates at x; nullopt when the denominator vanishes there.
  std::optional<Rational> eval(const Rational& x) const;

  std::string str(std::string_view var = "k") const;
  static Scalar parse(std::string_view s, std::string_view var = "k");

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  Poly num_, den_;
  void normalize();
};

struct ScalarParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The level parameter: either the indeterminate k or a fixed rational value.
class Level {
 public:
  Level() = default;
  static Level symbolic() { return Level{}; }
  static Level value(Rational v) {
    Level l;
    l.v_ = std::move(v);
    return l;
  }
  bool is_symbolic() const { return !v_.has_value(); }
  Scalar k() const { return v_ ? Scalar(*v_) : Scalar::var(); }
  const std::optional<Rational>& fixed() const { return v_; }
  std::string str() const { return v_ ? to_string(*v_) : std::string("k"); }

 private:
  std::optional<Rational> v_;
};

struct CriticalLevel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Splits a polynomial into linear factors with rational roots and a remaining
// cofactor; used to print denominators as "k+2" style factors.
std::vector<std::string> factor_strings(const Poly& p, std::string_view var = "k");

}  // namespace wfree
