#include <catch2/catch_amalgamated.hpp>

#include "lrslab/format.hpp"
#include "lrslab/search.hpp"

using namespace lrslab;

TEST_CASE("host field enumeration: smallest field per prime containing m-th roots") {
  auto fields = enumerate_host_fields(6, 20);
  // p = 2, 3 divide 6 and are skipped; 5 needs 6 | 5^2-1; 7 works directly;
  // 11 needs 11^2; 13 works directly; 17 needs 17^2; 19 works directly
  std::vector<std::pair<i64, int>> got;
  for (const auto& F : fields) got.emplace_back(F->p(), F->e());
  std::vector<std::pair<i64, int>> want{{5, 2}, {7, 1}, {11, 2}, {13, 1}, {17, 2}, {19, 1}};
  REQUIRE(got == want);
}

TEST_CASE("worked search: m = 6 up to p_max = 50") {
  SearchSpec spec;
  spec.m = 6;
  spec.p_max = 50;
  auto rep = search_ans(spec);
  REQUIRE(rep.exhaustive);
  REQUIRE_FALSE(rep.short_circuit_prime_power);
  REQUIRE(rep.equivalence_classes == 1);
  i64 hit_fields = 0;
  for (const auto& fr : rep.fields) {
    REQUIRE(fr.exhaustive);
    REQUIRE(fr.seeds_enumerated == fr.seeds_theoretical);
    if (!fr.hits.empty()) {
      ++hit_fields;
      REQUIRE(fr.p == 7);
      REQUIRE(fr.hits.size() == 1);
      REQUIRE(sequence_str(fr.hits[0].window) == "1,3,4,6,5,2");
      REQUIRE(poly_str(fr.hits[0].f_s) == "x^3+2*x^2+2*x+1");
    }
  }
  REQUIRE(hit_fields == 1);
}

TEST_CASE("prime-power sizes short-circuit, and the debug path agrees") {
  for (i64 m : {4, 8, 9}) {
    SearchSpec fast;
    fast.m = m;
    fast.p_max = 23;
    auto rep = search_ans(fast);
    REQUIRE(rep.short_circuit_prime_power);
    REQUIRE(rep.equivalence_classes == 0);

    SearchSpec slow = fast;
    slow.debug_enumerate = true;
    auto rep2 = search_ans(slow);
    REQUIRE_FALSE(rep2.short_circuit_prime_power);
    REQUIRE(rep2.exhaustive);
    REQUIRE(rep2.equivalence_classes == 0);
    for (const auto& fr : rep2.fields) REQUIRE(fr.hits.empty());
  }
}

TEST_CASE("the halving window class shows up at m = 10, p = 11") {
  SearchSpec spec;
  spec.m = 10;
  spec.p_max = 11;
  auto rep = search_ans(spec);
  REQUIRE(rep.exhaustive);
  bool found_11 = false;
  for (const auto& fr : rep.fields)
    if (fr.p == 11 && !fr.hits.empty()) found_11 = true;
  REQUIRE(found_11);
  // the constructed halving window must land in one of the reported classes
  auto F11 = Field::make(11, 1);
  REQUIRE(verify_hit(parse_sequence(F11, "1,9,3,7,5,6,4,8,2,10"), F11));
}

TEST_CASE("multithreaded search is byte-identical to single-threaded") {
  for (int threads : {2, 4}) {
    SearchSpec one;
    one.m = 6;
    one.p_max = 50;
    one.threads = 1;
    SearchSpec many = one;
    many.threads = threads;
    auto a = search_json(search_ans(one));
    auto b = search_json(search_ans(many));
    REQUIRE(a.dump() == b.dump());
  }
}

TEST_CASE("verify_hit accepts exactly the ANS windows") {
  auto F7 = Field::make(7, 1);
  REQUIRE(verify_hit(parse_sequence(F7, "1,3,4,6,5,2"), F7));
  REQUIRE(verify_hit(parse_sequence(F7, "1,5,3,4,2,6"), F7));   // halving window
  REQUIRE_FALSE(verify_hit(parse_sequence(F7, "1,3,2,6,4,5"), F7));  // cyclic
  REQUIRE_FALSE(verify_hit(parse_sequence(F7, "1,2,3,4,5,6"), F7));  // not closed
}

TEST_CASE("quadratic survey over F_9 finds the known x^2 - a^2 family") {
  auto F9 = Field::make(3, 2);
  auto rep = search_nonstandard_quadratic(F9);
  REQUIRE(rep.family_cross_check_ok);
  REQUIRE_FALSE(rep.hits.empty());
  bool family_seen = false;
  for (const auto& h : rep.hits) {
    REQUIRE(h.noncyclic_presentations > 0);
    REQUIRE(group_generated(F9, {h.a, h.b}).order() == h.group_order);
    if (h.known_family) {
      family_seen = true;
      REQUIRE(h.b == F9->neg(h.a));
      i64 ord = F9->mul_order(h.a);
      REQUIRE(ord % 2 == 0);
      REQUIRE(ord > 4);
    }
  }
  REQUIRE(family_seen);
}

TEST_CASE("quadratic survey over F_7 and F_13") {
  for (auto pe : {std::pair<i64, int>{7, 1}, {13, 1}}) {
    auto F = Field::make(pe.first, pe.second);
    auto rep = search_nonstandard_quadratic(F);
    REQUIRE(rep.family_cross_check_ok);
    REQUIRE(rep.pairs_examined == (F->q() - 1) * (F->q() - 2) / 2);
  }
}

TEST_CASE("search argument validation") {
  SearchSpec bad;
  bad.m = 1;
  bad.p_max = 10;
  REQUIRE_THROWS_AS(search_ans(bad), std::invalid_argument);
  bad.m = 6;
  bad.p_max = 0;
  REQUIRE_THROWS_AS(search_ans(bad), std::invalid_argument);
}
