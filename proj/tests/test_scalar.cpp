#include <catch2/catch_amalgamated.hpp>

#include "wfree/linalg.hpp"
#include "wfree/scalar.hpp"

using namespace wfree;

TEST_CASE("scalar arithmetic", "[scalar]") {
  Scalar k = Scalar::var();
  SECTION("canonical form") {
    Scalar a = (k * k - Scalar(4)) / (k + Scalar(2));
    REQUIRE(a == k - Scalar(2));
    REQUIRE(a.str() == "k-2");
    Scalar b = Scalar(2) / (Scalar(2) * k + Scalar(4));
    REQUIRE(b.str() == "1/(k+2)");
    REQUIRE(b.den() == Poly(std::vector<Rational>{2, 1}));
  }
  SECTION("field axioms on samples") {
    Scalar a = (k + Scalar(1)) / (k - Scalar(3)), b = Scalar(Rational(3, 7)) * k * k, c = k.inverse();
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a / a == Scalar(1));
    REQUIRE((a - a).is_zero());
  }
  SECTION("parse round trip") {
    for (std::string s : {"k+2", "-1/2", "(2*k+1)/(k+3)", "3/2*k^2-k", "-k/(k^2+1)", "0", "1/(k+2)"}) {
      Scalar x = Scalar::parse(s);
      REQUIRE(Scalar::parse(x.str()) == x);
    }
    REQUIRE(Scalar::parse("2k+4") == Scalar(2) * (k + Scalar(2)));
    REQUIRE_THROWS_AS(Scalar::parse("k/0"), ScalarParseError);
    REQUIRE_THROWS_AS(Scalar::parse("k+"), ScalarParseError);
  }
  SECTION("evaluation") {
    Scalar a = Scalar(1) / (k + Scalar(2));
    REQUIRE(!a.eval(-2).has_value());
    REQUIRE(*a.eval(1) == Rational(1, 3));
  }
  SECTION("factor strings") {
    Poly p = ((k + Scalar(2)) * (Scalar(2) * k - Scalar(3)) * (k * k + Scalar(1))).num();
    auto f = factor_strings(p);
    REQUIRE(f == std::vector<std::string>{"2*k-3", "k+2", "k^2+1"});
  }
}

TEST_CASE("linear algebra", "[linalg]") {
  Scalar k = Scalar::var();
  SECTION("nullspace over Q(k)") {
    Matrix m = {{Scalar(1), k, k * k}, {k + Scalar(1), Scalar(0), Scalar(1)}};
    auto ns = nullspace(m, 3);
    REQUIRE(ns.size() == 1);
    for (const auto& row : m) {
      Scalar s;
      for (int j = 0; j < 3; ++j) s += row[j] * ns[0][j];
      REQUIRE(s.is_zero());
    }
    REQUIRE(ns[0][2] == Scalar(1));
  }
  SECTION("rank drops at special values only symbolically") {
    Matrix m = {{k - Scalar(1), Scalar(1)}, {Scalar(0), k + Scalar(2)}};
    REQUIRE(rank(m, 2) == 2);
    REQUIRE(determinant(m) == (k - Scalar(1)) * (k + Scalar(2)));
  }
  SECTION("inverse") {
    Matrix m = {{Scalar(2), k}, {Scalar(1), Scalar(1)}};
    Matrix mi = inverse(m);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Scalar s;
        for (int l = 0; l < 2; ++l) s += m[i][l] * mi[l][j];
        REQUIRE(s == Scalar(i == j ? 1 : 0));
      }
  }
}
