#ifndef LRSLAB_SELFTEST_HPP
#define LRSLAB_SELFTEST_HPP

// Embedded golden corpus: quick end-to-end checks of the worked examples the
// library is built around, runnable from the CLI (`lrslab selftest`).

#include <functional>

#include "lrslab/format.hpp"

namespace lrslab {

struct SelfTestCase {
  std::string name;
  std::function<bool()> run;
};

inline std::vector<SelfTestCase> selftest_corpus() {
  std::vector<SelfTestCase> cases;
  auto add = [&](std::string name, std::function<bool()> fn) {
    cases.push_back(SelfTestCase{std::move(name), std::move(fn)});
  };

  add("field.make_f9_modulus", [] {
    auto F9 = Field::make(3, 2);
    return F9->modulus() == std::vector<i64>{1, 0, 1};
  });
  add("field.order_of_3_in_f7", [] {
    auto F7 = Field::make(7, 1);
    return F7->mul_order(F7->from_int(3)) == 6;
  });
  add("poly.gcd_m6_example", [] {
    auto F7 = Field::make(7, 1);
    Poly st = parse_poly(F7, "x^5+3*x^4+4*x^3+6*x^2+5*x+2");
    Poly g = gcd(xm_minus_1(F7, 6), st);
    return g == parse_poly(F7, "x^3-2*x^2+2*x-1");
  });
  add("poly.cyclotomic_basics", [] {
    auto F7 = Field::make(7, 1);
    auto F3 = Field::make(3, 1);
    return cyclotomic(1, F7) == parse_poly(F7, "x-1") &&
           cyclotomic(6, F7) == parse_poly(F7, "x^2-x+1") &&
           cyclotomic(4, F3) == parse_poly(F3, "x^2+1");
  });
  add("poly.order_fibonacci_f3", [] {
    auto F3 = Field::make(3, 1);
    return poly_order(parse_poly(F3, "x^2-x-1")) == 8;
  });
  add("lrs.impulse_minimal_recursion", [] {
    auto F3 = Field::make(3, 1);
    auto F7 = Field::make(7, 1);
    return minimal_recursion(impulse(4, F3)) == xm_minus_1(F3, 4) &&
           minimal_recursion(impulse(6, F7)) == xm_minus_1(F7, 6);
  });
  add("lrs.m6_window_minimal_recursion", [] {
    auto F7 = Field::make(7, 1);
    auto s = PeriodicSeq::from_window(F7, parse_sequence(F7, "1,3,4,6,5,2"));
    return minimal_recursion(s) == parse_poly(F7, "x^3+2*x^2+2*x+1");
  });
  add("lrs.m6_iterate", [] {
    auto F7 = Field::make(7, 1);
    Recursion rec(parse_poly(F7, "x^3+2*x^2+2*x+1"));
    auto w = iterate(rec, parse_sequence(F7, "1,3,4"), 6);
    return sequence_str(w) == "1,3,4,6,5,2" && detect_period(rec, parse_sequence(F7, "1,3,4")) == 6;
  });
  add("lrs.f9_fibonacci_period_8", [] {
    auto F9 = Field::make(3, 2);
    Poly f = parse_poly(F9, "x^2-x-1");
    auto roots = roots_with_mult(f, 1);
    if (!roots.split_completely || roots.roots.empty()) return false;
    Fe omega = roots.roots[0].first;
    Recursion rec(f);
    return detect_period(rec, {F9->one(), omega}) == 8;
  });
  add("binom.base_cases", [] {
    return binom_int(-3, 0) == 1 && binom_int(0, 0) == 1 && binom_int(4, 0) == 1 &&
           binom_int(5, 2) == 10 && binom_int(-1, 2) == 1;
  });
  add("binom.s_of_nj", [] {
    return s_of_nj_identity(3, 5, 1, 7) == 0 && s_of_nj_identity(2, 4, 3, 5) == 2 &&
           s_of_nj_identity(1, 1, 0, 2) == 0;
  });
  add("binom.seq_periods", [] {
    return binom_seq_period(1, 3) == 3 && binom_seq_period(3, 2) == 4 && binom_seq_period(4, 5) == 5;
  });
  add("classify.m6_window_is_ans", [] {
    auto F7 = Field::make(7, 1);
    auto s = PeriodicSeq::from_window(F7, parse_sequence(F7, "1,3,4,6,5,2"));
    auto rep = classify_presentation(s);
    return rep.ans_sequence && rep.is_group && rep.group->order() == 6 && !rep.is_cyclic &&
           rep.zeros_generate_group &&
           rep.standardness == Standardness::non_standard_presentation;
  });
  add("classify.cyclic_window_standard", [] {
    auto F7 = Field::make(7, 1);
    auto s = PeriodicSeq::from_window(F7, parse_sequence(F7, "1,3,2,6,4,5"));
    auto rep = classify_presentation(s);
    return rep.is_cyclic && rep.cyclic_ratio == F7->from_int(3) &&
           rep.f_s == parse_poly(F7, "x-3") && !rep.ans_sequence;
  });
  add("classify.ans_polynomial", [] {
    auto F7 = Field::make(7, 1);
    return is_ans_polynomial(parse_poly(F7, "x^3+2*x^2+2*x+1"), 6) &&
           !is_ans_polynomial(parse_poly(F7, "x-1"), 6);
  });
  add("classify.prime_power_rule", [] {
    return check_prime_power_rule(8) && !check_prime_power_rule(6) && !check_prime_power_rule(14);
  });
  add("construct.halving_p7", [] {
    auto res = halving_construction(7);
    return sequence_str(res.seq->window()) == "1,5,3,4,2,6" && res.match &&
           res.stilde_identity_ok &&
           res.f_computed == parse_poly(res.seq->field(), "x^3+2*x^2+2*x+1") &&
           res.report.ans_sequence;
  });
  add("construct.alternating_p7_branch", [] {
    auto res = alternating_construction(7);
    return res.match && res.f_computed == parse_poly(res.seq->field(), "x^3+2*x^2+2*x+1");
  });
  add("construct.extend_m6_by_2", [] {
    auto res = halving_construction(7);
    auto base = PeriodicSeq::from_window(res.seq->field(),
                                         parse_sequence(res.seq->field(), "1,3,4,6,5,2"));
    auto ext = extend_ans(base, 2);
    return ext.seq.period() == 12 && ext.tilde_identity_ok && ext.divides_g &&
           ext.presents_L && ext.report.ans_sequence &&
           poly_str(ext.g) == "x^6+2*x^4+2*x^2+1";
  });
  add("construct.m4_presentations_f5", [] {
    auto F5 = Field::make(5, 1);
    auto alpha = F5->primitive_mth_root(4);
    if (!alpha || *alpha != F5->from_int(2)) return false;
    auto s1 = PeriodicSeq::from_window(F5, parse_sequence(F5, "1,4,2,3"));  // 1,-1,a,-a
    auto s2 = PeriodicSeq::from_window(F5, parse_sequence(F5, "1,2,3,4"));  // 1,a,-a,-1
    Poly want = parse_poly(F5, "x^3+x^2+x+1");
    return minimal_recursion(s1) == want && minimal_recursion(s2) == want;
  });
  add("search.verify_hits", [] {
    auto F7 = Field::make(7, 1);
    return verify_hit(parse_sequence(F7, "1,3,4,6,5,2"), F7) &&
           !verify_hit(parse_sequence(F7, "1,3,2,6,4,5"), F7);
  });
  add("search.m8_short_circuit", [] {
    SearchSpec spec;
    spec.m = 8;
    spec.p_max = 100;
    auto rep = search_ans(spec);
    return rep.short_circuit_prime_power && rep.equivalence_classes == 0;
  });

  return cases;
}

struct SelfTestResult {
  i64 passed = 0;
  i64 failed = 0;
  std::vector<std::string> failures;
};

inline SelfTestResult run_selftests(const std::vector<SelfTestCase>& corpus,
                                    const std::string& filter, std::ostream& out) {
  SelfTestResult res;
  for (const auto& tc : corpus) {
    if (!filter.empty() && tc.name.find(filter) == std::string::npos) continue;
    bool ok = false;
    try {
      ok = tc.run();
    } catch (const std::exception& e) {
      out << "FAIL " << tc.name << " (exception: " << e.what() << ")\n";
      res.failures.push_back(tc.name);
      ++res.failed;
      continue;
    }
    out << (ok ? "ok   " : "FAIL ") << tc.name << "\n";
    if (ok) {
      ++res.passed;
    } else {
      ++res.failed;
      res.failures.push_back(tc.name);
    }
  }
  return res;
}

inline SelfTestResult run_selftests(const std::string& filter, std::ostream& out) {
  return run_selftests(selftest_corpus(), filter, out);
}

}  // namespace lrslab

#endif  // LRSLAB_SELFTEST_HPP
