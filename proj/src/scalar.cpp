#include "wfree/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wfree {

Rational parse_rational(std::string_view s) {
  std::string t(s);
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
          t.end());
  if (t.empty()) throw ScalarParseError("empty rational");
  Rational q;
  if (q.set_str(t, 10) != 0) throw ScalarParseError("bad rational: " + t);
  if (q.get_den() == 0) throw ScalarParseError("zero denominator: " + t);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const Rational& c) {
  if (c != 0) {
    c_.push_back(c);
    c_.back().canonicalize();
  }
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

Poly Poly::var() { return Poly(std::vector<Rational>{0, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  if (o.c_.size() == 1) return *this *= o.c_[0];
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& q) {
  if (q == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= q;
  return *this;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  r = a;
  q = Poly();
  if (a.degree() < b.degree()) return;
  std::vector<Rational> qc(a.degree() - b.degree() + 1);
  const Rational& lb = b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational f = r.lead() / lb;
    qc[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) r.c_[i + shift] -= f * b.c_[i];
    r.trim();
  }
  q = Poly(std::move(qc));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  Rational inv = 1 / lead();
  r *= inv;
  return r;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  mpz_class l = 1, g = 0;
  for (const auto& x : c_) l = lcm(l, mpz_class(x.get_den()));
  Poly r = *this;
  r *= Rational(l);
  for (const auto& x : r.c_) g = gcd(g, mpz_class(x.get_num()));
  if (r.lead() < 0) g = -g;
  r *= Rational(1) / Rational(g);
  return r;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

std::string coeff_prefix(const Rational& a, int deg, bool first) {
  std::string s;
  Rational m = abs(a);
  if (a < 0)
    s += first ? "-" : "-";
  else if (!first)
    s += "+";
  if (deg == 0 || m != 1) {
    s += to_string(m);
    if (deg > 0) s += "*";
  }
  return s;
}

}  // namespace

std::string Poly::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    if (c_[d] == 0) continue;
    s += coeff_prefix(c_[d], d, first);
    if (d >= 1) s += var;
    if (d >= 2) s += "^" + std::to_string(d);
    first = false;
  }
  return s;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (size_t i = a.c_.size(); i-- > 0;) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

Scalar Scalar::var() { return Scalar(Poly::var(), Poly(1)); }

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      Poly q, r;
      Poly::divmod(num_, g, q, r);
      num_ = std::move(q);
      Poly::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  Rational l = den_.lead();
  if (l != 1) {
    Rational inv = 1 / l;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational Scalar::constant() const {
  if (!is_constant()) throw std::logic_error("scalar is not constant: " + str());
  return num_.coeff(0) / den_.coeff(0);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  num_ *= o.num_;
  if (den_.is_constant() && o.den_.is_constant()) return *this;
  den_ *= o.den_;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::optional<Rational> Scalar::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) return std::nullopt;
  return num_.eval(x) / d;
}

std::string Scalar::str(std::string_view var) const {
  if (den_.is_constant() && den_.coeff(0) == 1) return num_.str(var);
  if (is_constant()) return to_string(constant());
  std::string n = num_.str(var), d = den_.str(var);
  bool num_simple = num_.is_constant() || (num_.coeffs().size() >= 1 && [&] {
                      int nz = 0;
                      for (const auto& c : num_.coeffs()) nz += (c != 0);
                      return nz == 1;
                    }());
  std::string out = num_simple ? n : "(" + n + ")";
  return out + "/(" + d + ")";
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view s, std::string_view var) : s_(s), var_(var) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  std::string_view s_, var_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw ScalarParseError(what + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool at_primary_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
           s_.substr(pos_, var_.size()) == var_;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v *= unary();
      } else if (peek('/')) {
        ++pos_;
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (at_primary_start()) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Scalar power() {
    Scalar b = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      b = b.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return b;
  }

  Scalar primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (s_[pos_] == '(') {
      ++pos_;
      Scalar v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (!var_.empty() && s_.substr(pos_, var_.size()) == var_) {
      pos_ += var_.size();
      return Scalar::var();
    }
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("unexpected character");
    return Scalar(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view s, std::string_view var) { return Parser(s, var).parse(); }

// ---------------------------------------------------------------- factors

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> d;
  if (n == 0) return d;
  for (mpz_class i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
    if (i > 100000) break;  // large constants: fall back to the cofactor
  }
  return d;
}

}  // namespace

std::vector<std::string> factor_strings(const Poly& p0, std::string_view var) {
  std::vector<std::string> out;
  Poly p = p0.primitive();
  if (p.degree() <= 0) return out;
  std::vector<Rational> roots;
  bool changed = true;
  while (changed && p.degree() > 0) {
    changed = false;
    if (p.coeff(0) == 0) {
      roots.emplace_back(0);
      Poly q, r;
      Poly::divmod(p, Poly::var(), q, r);
      p = q.primitive();
      changed = true;
      continue;
    }
    mpz_class a0(p.coeff(0).get_num()), an(p.lead().get_num());
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int sgn : {1, -1}) {
          Rational cand(num * sgn, den);
          cand.canonicalize();
          if (p.eval(cand) == 0) {
            roots.push_back(cand);
            Poly q, r;
            Poly::divmod(p, Poly(std::vector<Rational>{-cand, 1}), q, r);
            p = q.primitive();
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
      if (changed) break;
    }
  }
  std::sort(roots.begin(), roots.end());
  for (const auto& r : roots) {
    Poly lin = Poly(std::vector<Rational>{-r, 1}).primitive();
    out.push_back(lin.str(var));
  }
  if (p.degree() > 0) out.push_back(p.str(var));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace wfree
