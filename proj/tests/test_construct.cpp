#include <catch2/catch_amalgamated.hpp>

#include "lrslab/construct.hpp"
#include "lrslab/format.hpp"

using namespace lrslab;

namespace {

bool is_halving_prime(i64 p) {
  return p >= 7 && p % 4 == 3 && detail::is_prime_i64(p);
}

}  // namespace

TEST_CASE("halving construction: worked windows") {
  auto r7 = halving_construction(7);
  REQUIRE(sequence_str(r7.seq->window()) == "1,5,3,4,2,6");
  REQUIRE(r7.match);
  REQUIRE(r7.stilde_identity_ok);
  REQUIRE(r7.report.ans_sequence);
  REQUIRE(r7.f_computed == parse_poly(r7.seq->field(), "x^3+2*x^2+2*x+1"));

  auto r11 = halving_construction(11);
  REQUIRE(sequence_str(r11.seq->window()) == "1,9,3,7,5,6,4,8,2,10");
  REQUIRE(r11.match);
  REQUIRE(r11.report.ans_sequence);
}

TEST_CASE("halving construction: sweep over p = 3 mod 4 up to 100") {
  for (i64 p = 7; p <= 100; ++p) {
    if (!is_halving_prime(p)) continue;
    auto res = halving_construction(p);
    i64 r = (p - 1) / 2;
    auto F = res.seq->field();
    REQUIRE(res.seq->period() == p - 1);
    REQUIRE(res.match);
    REQUIRE(res.stilde_identity_ok);
    REQUIRE(res.report.ans_sequence);
    REQUIRE(res.report.group->order() == p - 1);  // presents F_p^*
    // f_s = (x+1)(x^r - 1)/(x - 1)
    Poly claimed = exact_div(parse_poly(F, "x+1") * xm_minus_1(F, r), parse_poly(F, "x-1"));
    REQUIRE(res.f_computed == claimed);
    // the closed-form identity s~ * (x+1)^2 = (x^{r+1}-1)(x^r+1)
    Poly st = s_tilde(*res.seq);
    Poly lhs = st * parse_poly(F, "x^2+2*x+1");
    Poly rhs = (xm_minus_1(F, r + 1)) * (xm_minus_1(F, r) + Poly::from_ints(F, {2}));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("halving construction rejects bad primes") {
  REQUIRE_THROWS_AS(halving_construction(5), std::invalid_argument);   // 1 mod 4
  REQUIRE_THROWS_AS(halving_construction(3), std::invalid_argument);   // too small
  REQUIRE_THROWS_AS(halving_construction(15), std::invalid_argument);  // composite
}

TEST_CASE("alternating construction: both residue branches") {
  // p = 7 mod 12: f_s = (x+1)(x^r-1)/(x-1)
  for (i64 p : {7, 19, 31, 43}) {
    auto res = alternating_construction(p);
    auto F = res.seq->field();
    i64 r = (p - 1) / 2;
    REQUIRE(res.match);
    REQUIRE(res.report.ans_sequence);
    REQUIRE(res.f_computed ==
            exact_div(parse_poly(F, "x+1") * xm_minus_1(F, r), parse_poly(F, "x-1")));
    REQUIRE(res.f_computed.degree() == r);
  }
  // p = 11 mod 12: one further linear factor (x - 1/3) divides out
  for (i64 p : {11, 23, 47, 59}) {
    auto res = alternating_construction(p);
    auto F = res.seq->field();
    i64 r = (p - 1) / 2;
    REQUIRE(res.match);
    REQUIRE(res.report.ans_sequence);
    Poly big = exact_div(parse_poly(F, "x+1") * xm_minus_1(F, r), parse_poly(F, "x-1"));
    Fe third = F->inv(F->from_int(3));
    Poly lin = Poly::from_fes(F, {F->neg(third), F->one()});
    REQUIRE(res.f_computed == exact_div(big, lin));
    REQUIRE(res.f_computed.degree() == r - 1);
  }
}

TEST_CASE("constructed windows sum to zero") {
  for (i64 p : {7, 11, 19, 23, 31}) {
    for (int which = 0; which < 2; ++which) {
      auto res = which == 0 ? halving_construction(p) : alternating_construction(p);
      if (!res.seq) continue;
      auto F = res.seq->field();
      Fe acc = F->zero();
      for (const auto& x : res.seq->window()) acc = acc + x;
      REQUIRE(acc.is_zero());
    }
  }
}

TEST_CASE("extension by k = 2: the worked size-12 subgroup of F_49^*") {
  auto F7 = Field::make(7, 1);
  auto s = PeriodicSeq::from_window(F7, parse_sequence(F7, "1,3,4,6,5,2"));
  auto ext = extend_ans(s, 2);
  REQUIRE(ext.seq.period() == 12);
  REQUIRE(ext.seq.field()->q() == 49);
  REQUIRE(ext.tilde_identity_ok);
  REQUIRE(ext.divides_g);
  REQUIRE(ext.presents_L);
  REQUIRE(ext.report.ans_sequence);
  REQUIRE(ext.report.group->order() == 12);
  // g(x) = f(x^2)
  Poly f49 = parse_poly(ext.seq.field(), "x^3+2*x^2+2*x+1");
  REQUIRE(ext.g == compose_xk(f49, 2));
  REQUIRE(poly_str(ext.g) == "x^6+2*x^4+2*x^2+1");
  REQUIRE(divides(ext.f_t, ext.g));
}

TEST_CASE("extension chain: k = 3 and then nested k = 2") {
  auto F7 = Field::make(7, 1);
  auto s = PeriodicSeq::from_window(F7, parse_sequence(F7, "1,3,4,6,5,2"));
  auto e3 = extend_ans(s, 3);
  REQUIRE(e3.seq.period() == 18);
  REQUIRE(e3.report.ans_sequence);
  REQUIRE(e3.tilde_identity_ok);
  auto e2 = extend_ans(e3.seq, 2);
  REQUIRE(e2.seq.period() == 36);
  REQUIRE(e2.report.ans_sequence);
}

TEST_CASE("extend_with_reps validates the transversal") {
  auto F7 = Field::make(7, 1);
  auto F49 = Field::make(7, 2);
  auto hom = embed_field(F7, F49);
  auto s = PeriodicSeq::from_window(F7, parse_sequence(F7, "1,3,4,6,5,2"));
  // a transversal that is not one: both reps in the same coset of M
  std::vector<Fe> bad{F49->one(), hom(F7->from_int(3))};
  REQUIRE_THROWS_AS(extend_with_reps(s, bad), std::invalid_argument);
}

TEST_CASE("permutation presentations of the full group and the m = 4 count") {
  auto F5 = Field::make(5, 1);
  auto s1 = permutation_presentation(4, F5, {2, 1, 3});  // 1,-1,a,-a with a = 2
  REQUIRE(sequence_str(s1.window()) == "1,4,2,3");
  REQUIRE(minimal_recursion(s1) == parse_poly(F5, "x^3+x^2+x+1"));
  auto s2 = permutation_presentation(4, F5, {1, 3, 2});  // 1,a,-a,-1
  REQUIRE(sequence_str(s2.window()) == "1,2,3,4");
  REQUIRE(minimal_recursion(s2) == parse_poly(F5, "x^3+x^2+x+1"));

  auto count = count_presentations(4, F5);
  REQUIRE(count.total_with_s0_1 >= 6);  // at least 3! arrangements
  REQUIRE(count.cyclic_count == 2);     // phi(4) geometric presentations
}
