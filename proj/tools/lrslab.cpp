// lrslab: CLI for linear recurring sequence subgroups over finite fields.
//
// Exit codes: 0 success, 1 domain error (bad field / window / parameters),
// 2 capped (non-exhaustive) search, 64 usage error.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "lrslab/selftest.hpp"

using namespace lrslab;

namespace {

int env_threads() {
  const char* v = std::getenv("LRSLAB_THREADS");
  if (!v) return 1;
  try {
    return std::max(1, std::stoi(v));
  } catch (...) {
    return 1;
  }
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// Accepts either a full field spec ("3^2") or a bare prime power ("9").
FieldPtr parse_field_or_prime_power(const std::string& s) {
  if (s.find('^') != std::string::npos || s.find('/') != std::string::npos)
    return parse_field(s);
  i64 q = std::stoll(s);
  if (q < 2) throw std::invalid_argument("not a prime power: " + s);
  i64 p = q;
  for (i64 d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  i64 e = 0, t = q;
  while (t > 1 && t % p == 0) {
    t /= p;
    ++e;
  }
  if (t != 1) throw std::invalid_argument("not a prime power: " + s);
  return Field::make(p, e);
}

std::string report_text(const PresentationReport& rep, const FieldPtr& F) {
  std::ostringstream os;
  os << "field:        " << field_spec(F) << "\n";
  os << "period:       " << rep.m << "\n";
  os << "f_s:          " << poly_str(rep.f_s) << "\n";
  os << "subgroup:     " << (rep.is_group ? "yes (order " + std::to_string(rep.group->order()) + ")" : "no") << "\n";
  os << "cyclic:       " << (rep.is_cyclic ? "yes (ratio " + element_str(*rep.cyclic_ratio) + ")" : "no") << "\n";
  if (rep.is_group)
    os << "presentation: "
       << (rep.standardness == Standardness::non_standard_presentation ? "non-standard" : "standard")
       << "\n";
  os << "ans:          " << (rep.ans_sequence ? "yes" : "no") << "\n";
  if (rep.is_group) os << "zeros generate group: " << (rep.zeros_generate_group ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear recurring sequence subgroups over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit canonical JSON instead of text");

  std::string field_spec_s, seq_s, poly_s, base_file, filter;
  i64 m = 0, p = 0, p_max = 0, k = 2;
  int threads = env_threads();
  bool exhaustive = false, debug_enumerate = false;

  auto* minpoly = app.add_subcommand("minpoly", "minimal recursion of a periodic window");
  minpoly->add_option("--field", field_spec_s, "field spec p[^e[/c0,c1,...]]")->required();
  minpoly->add_option("--seq", seq_s, "window, comma-separated elements")->required();

  auto* classify_cmd = app.add_subcommand("classify", "full presentation report for a window");
  classify_cmd->add_option("--field", field_spec_s)->required();
  classify_cmd->add_option("--seq", seq_s)->required();
  classify_cmd->add_option("--f", poly_s, "optional recursion polynomial to check against");

  auto* verify = app.add_subcommand("verify", "check a window for the ANS property");
  verify->add_option("--field", field_spec_s)->required();
  verify->add_option("--seq", seq_s)->required();

  auto* construct = app.add_subcommand("construct", "build the explicit ANS presentations");
  auto* halving = construct->add_subcommand("halving", "window 1,-2,3,... over F_p (p = 3 mod 4)");
  halving->add_option("--p", p)->required();
  auto* alternating = construct->add_subcommand("alternating", "window 1,-1,3,-3,... over F_p");
  alternating->add_option("--p", p)->required();
  auto* extend = construct->add_subcommand("extend", "coset-interleaved extension of an ANS window");
  extend->add_option("--base", base_file, "JSON file with {field, window}");
  extend->add_option("--field", field_spec_s, "base field spec (alternative to --base)");
  extend->add_option("--seq", seq_s, "base window (alternative to --base)");
  extend->add_option("--k", k, "index of the extension")->required();
  construct->require_subcommand(1);

  // also reachable as a top-level subcommand
  auto* extend_top = app.add_subcommand("extend", "coset-interleaved extension of an ANS window");
  extend_top->add_option("--base", base_file, "JSON file with {field, window}");
  extend_top->add_option("--field", field_spec_s, "base field spec");
  extend_top->add_option("--seq", seq_s, "base window");
  extend_top->add_option("--k", k, "index of the extension")->required();

  auto* search = app.add_subcommand("search", "exhaustive / pruned searches");
  auto* sans = search->add_subcommand("ans", "ANS subgroups of size m across host fields");
  sans->add_option("--m", m)->required();
  sans->add_option("--p-max", p_max)->required();
  sans->add_option("--threads", threads);
  sans->add_flag("--exhaustive", exhaustive, "fail (exit 2) unless the search completed exhaustively");
  sans->add_flag("--debug-enumerate", debug_enumerate, "enumerate prime-power sizes instead of short-circuiting");
  auto* squad = search->add_subcommand("quad", "minimally non-standard quadratics over F_q");
  squad->add_option("--q", field_spec_s, "field spec")->required();
  search->require_subcommand(1);

  auto* selftest = app.add_subcommand("selftest", "run the embedded golden corpus");
  selftest->add_option("--filter", filter, "substring filter on test names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (*minpoly) {
      auto F = parse_field(field_spec_s);
      auto s = PeriodicSeq::from_window(F, parse_sequence(F, seq_s));
      Poly fs = minimal_recursion(s);
      json j;
      j["field"] = lrslab::field_spec(F);
      j["window"] = window_json(s.window());
      j["f_s"] = poly_json(fs);
      j["f_s_str"] = poly_str(fs);
      emit(j, as_json, poly_str(fs) + "\n");
    } else if (*classify_cmd) {
      auto F = parse_field(field_spec_s);
      auto s = PeriodicSeq::from_window(F, parse_sequence(F, seq_s));
      std::optional<Poly> f;
      if (!poly_s.empty()) f = parse_poly(F, poly_s);
      auto rep = classify_presentation(s, f);
      emit(report_json(rep, F), as_json, report_text(rep, F));
    } else if (*verify) {
      auto F = parse_field(field_spec_s);
      bool ok = verify_hit(parse_sequence(F, seq_s), F);
      json j;
      j["ans"] = ok;
      emit(j, as_json, std::string(ok ? "ans" : "not-ans") + "\n");
      return ok ? 0 : 1;
    } else if (*halving || *alternating) {
      ConstructionResult res = (*halving) ? halving_construction(p) : alternating_construction(p);
      std::ostringstream os;
      os << "window:  " << sequence_str(res.seq->window()) << "\n"
         << "f_s:     " << poly_str(res.f_computed) << "\n"
         << "claimed: " << poly_str(res.f_claimed) << (res.match ? " (match)" : " (MISMATCH)") << "\n"
         << "ans:     " << (res.report.ans_sequence ? "yes" : "no") << "\n";
      emit(construction_json(res), as_json, os.str());
      if (!res.match || !res.stilde_identity_ok || !res.report.ans_sequence) return 1;
    } else if (*extend || *extend_top) {
      FieldPtr F;
      std::vector<Fe> w;
      if (!base_file.empty()) {
        std::ifstream in(base_file);
        if (!in) throw std::invalid_argument("cannot open " + base_file);
        json j = json::parse(in);
        F = parse_field(j.at("field").get<std::string>());
        for (const auto& el : j.at("window")) w.push_back(parse_element(F, el.get<std::string>()));
      } else if (!field_spec_s.empty() && !seq_s.empty()) {
        F = parse_field(field_spec_s);
        w = parse_sequence(F, seq_s);
      } else {
        std::cerr << "extend needs --base or --field/--seq\n";
        return 64;
      }
      auto s = PeriodicSeq::from_window(F, w);
      auto res = extend_ans(s, k);
      std::ostringstream os;
      os << "field:  " << lrslab::field_spec(res.seq.field()) << "\n"
         << "window: " << sequence_str(res.seq.window()) << "\n"
         << "g:      " << poly_str(res.g) << "\n"
         << "f_t:    " << poly_str(res.f_t) << "\n"
         << "ans:    " << (res.report.ans_sequence ? "yes" : "no") << "\n";
      emit(extension_json(res), as_json, os.str());
      if (!res.report.ans_sequence) return 1;
    } else if (*sans) {
      SearchSpec spec;
      spec.m = m;
      spec.p_max = p_max;
      spec.threads = threads;
      spec.debug_enumerate = debug_enumerate;
      auto rep = search_ans(spec);
      std::ostringstream os;
      if (rep.short_circuit_prime_power) {
        os << "empty: prime power size (never automatically non-standard)\n";
      } else {
        for (const auto& fr : rep.fields)
          for (const auto& h : fr.hits)
            os << "p=" << fr.p << " q=" << fr.q << " window " << sequence_str(h.window)
               << "  f_s=" << poly_str(h.f_s) << "\n";
        os << rep.equivalence_classes << " equivalence class(es), "
           << (rep.exhaustive ? "exhaustive" : "CAPPED (non-exhaustive)") << "\n";
      }
      emit(search_json(rep), as_json, os.str());
      if (!rep.exhaustive) return 2;
      (void)exhaustive;
    } else if (*squad) {
      auto F = parse_field_or_prime_power(field_spec_s);
      auto rep = search_nonstandard_quadratic(F);
      std::ostringstream os;
      for (const auto& h : rep.hits)
        os << "f=(x-" << element_str(h.a) << ")(x-" << element_str(h.b) << ")"
           << " group order " << h.group_order << ", " << h.noncyclic_presentations
           << " non-cyclic presentation(s)" << (h.known_family ? " [known x^2-a^2 family]" : "")
           << "\n";
      os << rep.hits.size() << " minimally non-standard quadratic(s)\n";
      emit(quad_json(rep), as_json, os.str());
    } else if (*selftest) {
      auto res = run_selftests(filter, std::cout);
      std::cout << res.passed << " passed, " << res.failed << " failed\n";
      if (res.failed > 0) return 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
