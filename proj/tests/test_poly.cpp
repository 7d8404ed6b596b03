#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lrslab/format.hpp"
#include "lrslab/poly.hpp"

using namespace lrslab;

namespace {

Poly random_poly(const FieldPtr& F, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<i64> d(0, F->q() - 1);
  std::vector<Fe> c;
  for (int i = 0; i < deg; ++i) c.push_back(F->element_at(d(rng)));
  c.push_back(F->element_at(1 + d(rng) % (F->q() - 1)));  // nonzero lead
  return Poly::from_fes(F, std::move(c));
}

}  // namespace

TEST_CASE("divmod satisfies a = q*b + r with deg r < deg b") {
  std::mt19937_64 rng(12345);
  for (auto spec : {std::pair<i64, int>{2, 1}, {5, 1}, {3, 2}, {7, 1}}) {
    auto F = Field::make(spec.first, spec.second);
    for (int trial = 0; trial < 200; ++trial) {
      Poly a = random_poly(F, 1 + static_cast<int>(rng() % 8), rng);
      Poly b = random_poly(F, static_cast<int>(rng() % 5), rng);
      auto [q, r] = divmod(a, b);
      REQUIRE(q * b + r == a);
      REQUIRE((r.is_zero() || r.degree() < b.degree()));
    }
  }
  auto F5 = Field::make(5, 1);
  REQUIRE_THROWS_AS(divmod(parse_poly(F5, "x^2+1"), Poly::zero(F5)), std::domain_error);
}

TEST_CASE("gcd is monic, divides both arguments, and absorbs multiples") {
  std::mt19937_64 rng(777);
  auto F7 = Field::make(7, 1);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = random_poly(F7, 1 + static_cast<int>(rng() % 6), rng);
    Poly b = random_poly(F7, 1 + static_cast<int>(rng() % 6), rng);
    Poly g = gcd(a, b);
    REQUIRE(g.is_monic());
    REQUIRE(divides(g, a));
    REQUIRE(divides(g, b));
    REQUIRE(gcd(a * b, b) == monic(b));
  }
}

TEST_CASE("exact_div and divides are consistent") {
  auto F3 = Field::make(3, 1);
  Poly f = parse_poly(F3, "x^2+1");
  Poly g = parse_poly(F3, "x+1");
  REQUIRE(divides(f, f * g));
  REQUIRE(exact_div(f * g, f) == g);
  REQUIRE_FALSE(divides(g, f));  // x = -1 is not a root of x^2+1 over F_3
  REQUIRE_THROWS_AS(exact_div(f, g), std::domain_error);
}

TEST_CASE("cyclotomic polynomials: degree and product identity") {
  for (i64 p : {2, 3, 5, 7, 11, 13}) {
    auto F = Field::make(p, 1);
    for (i64 m = 1; m <= 30; ++m) {
      if (m % p == 0) {
        if (m >= p) REQUIRE_THROWS_AS(cyclotomic(m, F), std::invalid_argument);
        continue;
      }
      REQUIRE(cyclotomic(m, F).degree() == euler_phi(m));
      // prod over d | m of Phi_d = x^m - 1 (all d coprime to p since m is)
      Poly prod = Poly::from_ints(F, {1});
      for (i64 d = 1; d <= m; ++d)
        if (m % d == 0) prod = prod * cyclotomic(d, F);
      REQUIRE(prod == xm_minus_1(F, m));
    }
  }
}

TEST_CASE("cyclotomic worked values") {
  auto F7 = Field::make(7, 1);
  REQUIRE(cyclotomic(1, F7) == parse_poly(F7, "x-1"));
  REQUIRE(cyclotomic(2, F7) == parse_poly(F7, "x+1"));
  REQUIRE(cyclotomic(6, F7) == parse_poly(F7, "x^2-x+1"));
  auto F3 = Field::make(3, 1);
  REQUIRE(cyclotomic(4, F3) == parse_poly(F3, "x^2+1"));
  REQUIRE(cyclotomic(8, F3) == parse_poly(F3, "x^4+1"));
}

TEST_CASE("euler_phi basics") {
  REQUIRE(euler_phi(1) == 1);
  REQUIRE(euler_phi(4) == 2);
  REQUIRE(euler_phi(6) == 2);
  REQUIRE(euler_phi(30) == 8);
  REQUIRE_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("poly_order: worked values and divisibility of q^deg - 1 for irreducibles") {
  auto F3 = Field::make(3, 1);
  REQUIRE(poly_order(parse_poly(F3, "x^2-x-1")) == 8);  // Fibonacci over F_3
  auto F7 = Field::make(7, 1);
  REQUIRE(poly_order(parse_poly(F7, "x-3")) == 6);
  REQUIRE(poly_order(parse_poly(F7, "x^3+2*x^2+2*x+1")) == 6);
  REQUIRE(poly_order(xm_minus_1(F7, 6)) == 6);
  REQUIRE_THROWS_AS(poly_order(parse_poly(F7, "x^2+x")), std::invalid_argument);

  // for irreducible f with f(0) != 0, ord(f) | q^deg(f) - 1
  for (i64 c0 = 1; c0 < 7; ++c0)
    for (i64 c1 = 0; c1 < 7; ++c1) {
      Poly f = Poly::from_ints(F7, {c0, c1, 1});
      bool irred = true;
      for (i64 r = 0; r < 7 && irred; ++r)
        if (f.eval(F7->from_int(r)).is_zero()) irred = false;
      if (!irred) continue;
      REQUIRE((49 - 1) % poly_order(f) == 0);
    }
}

TEST_CASE("compose_xk spreads coefficients") {
  auto F5 = Field::make(5, 1);
  Poly f = parse_poly(F5, "x^2+3*x+4");
  REQUIRE(compose_xk(f, 3) == parse_poly(F5, "x^6+3*x^3+4"));
  REQUIRE(compose_xk(f, 1) == f);
  REQUIRE_THROWS_AS(compose_xk(f, 0), std::invalid_argument);
}

TEST_CASE("roots_with_mult finds multiplicities and splitting fields") {
  auto F7 = Field::make(7, 1);
  Poly f = parse_poly(F7, "x-3") * parse_poly(F7, "x-3") * parse_poly(F7, "x-5");
  auto spec = roots_with_mult(f, 1);
  REQUIRE(spec.split_completely);
  REQUIRE(spec.ext_degree == 1);
  REQUIRE(spec.roots.size() == 2);
  i64 total = 0;
  bool saw_double = false;
  for (auto& [r, mult] : spec.roots) {
    total += mult;
    if (r == spec.into_split(F7->from_int(3))) saw_double = (mult == 2);
  }
  REQUIRE(total == 3);
  REQUIRE(saw_double);

  // x^2 + 1 over F_7 splits only in F_49
  auto spec2 = roots_with_mult(parse_poly(F7, "x^2+1"), 2);
  REQUIRE(spec2.split_completely);
  REQUIRE(spec2.ext_degree == 2);
  REQUIRE(spec2.roots.size() == 2);
  for (auto& [r, mult] : spec2.roots)
    REQUIRE((r * r + spec2.split_field->one()).is_zero());
}

TEST_CASE("xm_minus_1 matches explicit construction") {
  auto F2 = Field::make(2, 1);
  REQUIRE(xm_minus_1(F2, 3) == parse_poly(F2, "x^3+1"));
  auto F5 = Field::make(5, 1);
  REQUIRE(xm_minus_1(F5, 4) == parse_poly(F5, "x^4+4"));
}
