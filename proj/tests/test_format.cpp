#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "lrslab/selftest.hpp"

using namespace lrslab;

TEST_CASE("field spec round trips") {
  for (const std::string& spec : {"7", "3^2", "2^4", "7^2/1,0,1"}) {
    auto F = parse_field(spec);
    auto G = parse_field(field_spec(F));
    REQUIRE(F->p() == G->p());
    REQUIRE(F->e() == G->e());
    REQUIRE(F->modulus() == G->modulus());
  }
  REQUIRE(parse_field("7")->q() == 7);
  REQUIRE(parse_field("3^2")->q() == 9);
  REQUIRE_THROWS_AS(parse_field("4"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_field(""), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_field("7^x"), std::invalid_argument);
}

TEST_CASE("element parsing and printing round trips in all fields up to q = 49") {
  for (auto pe : {std::pair<i64, int>{2, 1}, {7, 1}, {3, 2}, {2, 3}, {7, 2}}) {
    auto F = Field::make(pe.first, pe.second);
    for (i64 i = 0; i < F->q(); ++i) {
      Fe x = F->element_at(i);
      REQUIRE(parse_element(F, element_str(x)) == x);
    }
  }
  auto F9 = Field::make(3, 2);
  REQUIRE(element_str(F9->from_int(2)) == "2");
  REQUIRE(parse_element(F9, "1+2*w") == parse_element(F9, "2*w+1"));
  REQUIRE_THROWS_AS(parse_element(F9, "w^5+q"), std::invalid_argument);
}

TEST_CASE("sequence parsing and printing round trips") {
  auto F7 = Field::make(7, 1);
  auto w = parse_sequence(F7, "1,3,4,6,5,2");
  REQUIRE(w.size() == 6);
  REQUIRE(sequence_str(w) == "1,3,4,6,5,2");
  auto F9 = Field::make(3, 2);
  auto v = parse_sequence(F9, "1,w,2*w+1");
  REQUIRE(sequence_str(v) == "1,w,1+2*w");
  REQUIRE(parse_sequence(F9, sequence_str(v)) == v);
}

TEST_CASE("polynomial parsing: human syntax and bracket syntax") {
  auto F7 = Field::make(7, 1);
  REQUIRE(parse_poly(F7, "x^3+2*x^2+2*x+1") == Poly::from_ints(F7, {1, 2, 2, 1}));
  REQUIRE(parse_poly(F7, "x^3-2*x^2+2*x-1") == Poly::from_ints(F7, {-1, 2, -2, 1}));
  REQUIRE(parse_poly(F7, "[1,2,2,1]") == Poly::from_ints(F7, {1, 2, 2, 1}));
  REQUIRE(parse_poly(F7, "x") == Poly::monomial(F7, 1));
  REQUIRE(parse_poly(F7, "5") == Poly::from_ints(F7, {5}));
  REQUIRE_THROWS_AS(parse_poly(F7, "x^+3"), std::invalid_argument);
}

TEST_CASE("poly_str is parseable and stable") {
  auto F7 = Field::make(7, 1);
  for (const std::string& s : {"x^3+2*x^2+2*x+1", "x^5+3*x^4+4*x^3+6*x^2+5*x+2", "x-3", "6"}) {
    Poly f = parse_poly(F7, s);
    REQUIRE(parse_poly(F7, poly_str(f)) == f);
  }
  REQUIRE(poly_str(parse_poly(F7, "x^3-2*x^2+2*x-1")) == "x^3+5*x^2+2*x+6");
  // extension-field coefficients print with parentheses only when composite
  auto F49 = Field::make(7, 2);
  REQUIRE(poly_str(parse_poly(F49, "[1,0,2,0,2,0,1]")) == "x^6+2*x^4+2*x^2+1");
}

TEST_CASE("JSON reports use stable key order and plain strings") {
  auto F7 = Field::make(7, 1);
  auto s = PeriodicSeq::from_window(F7, parse_sequence(F7, "1,3,4,6,5,2"));
  auto rep = classify_presentation(s);
  json j = report_json(rep, F7);
  REQUIRE(j["field"] == "7");
  REQUIRE(j["period"] == 6);
  REQUIRE(j["f_s_str"] == "x^3+2*x^2+2*x+1");
  REQUIRE(j["is_group"] == true);
  REQUIRE(j["is_cyclic"] == false);
  REQUIRE(j["ans_sequence"] == true);
  // byte stability: two computations dump identically
  REQUIRE(j.dump() == report_json(classify_presentation(s), F7).dump());
}

TEST_CASE("JSON round trips byte-identically through parse + re-serialize") {
  auto F7 = Field::make(7, 1);
  auto s = PeriodicSeq::from_window(F7, parse_sequence(F7, "1,3,4,6,5,2"));
  for (const json& j : {report_json(classify_presentation(s), F7),
                        construction_json(halving_construction(7)),
                        search_json(search_ans(SearchSpec{6, 50})) }) {
    std::string text = j.dump(2);
    REQUIRE(json::parse(text).dump(2) == text);
  }
}

TEST_CASE("selftest corpus: fresh run passes; a corrupted entry is reported") {
  std::ostringstream sink;
  auto res = run_selftests("field.", sink);
  REQUIRE(res.passed > 0);
  REQUIRE(res.failed == 0);

  auto corpus = selftest_corpus();
  size_t n = corpus.size();
  corpus.push_back(SelfTestCase{"fixture.deliberately_corrupt", [] { return false; }});
  std::ostringstream sink2;
  auto res2 = run_selftests(corpus, "", sink2);
  REQUIRE(res2.passed == static_cast<i64>(n));
  REQUIRE(res2.failed == 1);
  REQUIRE(res2.failures == std::vector<std::string>{"fixture.deliberately_corrupt"});

  std::ostringstream sink3;
  auto res3 = run_selftests("construct", sink3);
  REQUIRE(res3.failed == 0);
  REQUIRE(res3.passed == 4);  // only the construction goldens run
}

TEST_CASE("window_json and poly_json carry element strings in order") {
  auto F7 = Field::make(7, 1);
  auto w = parse_sequence(F7, "1,3,4");
  json jw = window_json(w);
  REQUIRE(jw.size() == 3);
  REQUIRE(jw[1] == "3");
  json jp = poly_json(parse_poly(F7, "x^2+3*x+5"));
  REQUIRE(jp.size() == 3);
  REQUIRE(jp[0] == "5");  // constant term first
  REQUIRE(jp[2] == "1");
}
