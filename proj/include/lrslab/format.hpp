#ifndef LRSLAB_FORMAT_HPP
#define LRSLAB_FORMAT_HPP

// Text formats for the CLI and the JSON report contract.
//   field spec:   p | p^e | p^e/c0,c1,...,ce   (modulus coeffs low-to-high)
//   element:      bare integer in prime fields, else c0+c1*w+c2*w^2+...
//   sequence:     comma-separated element literals
//   polynomial:   human form x^3+2*x^2+2*x+1 or coefficient list [1,2,2,1]
// JSON output is canonical: ordered keys, exact integers/strings, no floats.

#include <cctype>

#include <nlohmann/json.hpp>

#include "lrslab/search.hpp"

namespace lrslab {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- parsing

namespace detail {
inline i64 parse_i64(const std::string& s) {
  size_t pos = 0;
  i64 v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
  return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}
}  // namespace detail

inline FieldPtr parse_field(const std::string& spec) {
  std::string head = spec, mod;
  if (auto slash = spec.find('/'); slash != std::string::npos) {
    head = spec.substr(0, slash);
    mod = spec.substr(slash + 1);
  }
  i64 p;
  int e = 1;
  if (auto caret = head.find('^'); caret != std::string::npos) {
    p = detail::parse_i64(head.substr(0, caret));
    e = static_cast<int>(detail::parse_i64(head.substr(caret + 1)));
  } else {
    p = detail::parse_i64(head);
  }
  std::optional<std::vector<i64>> modulus;
  if (!mod.empty()) {
    std::vector<i64> c;
    for (const auto& part : detail::split(mod, ',')) c.push_back(detail::parse_i64(part));
    modulus = c;
  }
  return Field::make(p, e, modulus);
}

inline std::string field_spec(const FieldPtr& F) {
  if (F->e() == 1) return std::to_string(F->p());
  std::string s = std::to_string(F->p()) + "^" + std::to_string(F->e()) + "/";
  for (size_t i = 0; i < F->modulus().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(F->modulus()[i]);
  }
  return s;
}

/// Parses sums of terms over the generator w: "3", "-2", "2+w", "1+2*w^3".
inline Fe parse_element(const FieldPtr& F, const std::string& text) {
  std::vector<i64> c(static_cast<size_t>(F->e()), 0);
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  bool first = true;
  while (i < text.size()) {
    i64 sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      sign = (text[i] == '-') ? -1 : 1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("bad element literal: " + text);
    }
    skip_ws();
    i64 coef = 1;
    bool have_coef = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      coef = detail::parse_i64(text.substr(i, j - i));
      i = j;
      have_coef = true;
    }
    skip_ws();
    i64 wexp = 0;
    if (i < text.size() && (text[i] == '*' || text[i] == 'w')) {
      if (text[i] == '*') { ++i; skip_ws(); }
      if (i >= text.size() || text[i] != 'w') throw std::invalid_argument("bad element literal: " + text);
      ++i;
      wexp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        wexp = detail::parse_i64(text.substr(i, j - i));
        i = j;
      }
    } else if (!have_coef) {
      throw std::invalid_argument("bad element literal: " + text);
    }
    if (wexp >= F->e())
      throw std::invalid_argument("generator power out of range in: " + text);
    c[static_cast<size_t>(wexp)] += sign * coef;
    first = false;
    skip_ws();
  }
  if (first) throw std::invalid_argument("empty element literal");
  return F->from_coeffs(std::move(c));
}

inline std::string element_str(const Fe& x) {
  const auto& F = x.field;
  if (F->e() == 1) return std::to_string(x.c[0]);
  std::string s;
  for (int i = 0; i < F->e(); ++i) {
    if (x.c[static_cast<size_t>(i)] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(x.c[0]);
    } else {
      if (x.c[static_cast<size_t>(i)] != 1) s += std::to_string(x.c[static_cast<size_t>(i)]) + "*";
      s += (i == 1) ? "w" : "w^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

inline std::vector<Fe> parse_sequence(const FieldPtr& F, const std::string& text) {
  std::vector<Fe> out;
  for (const auto& part : detail::split(text, ',')) out.push_back(parse_element(F, part));
  return out;
}

inline std::string sequence_str(const std::vector<Fe>& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += element_str(w[i]);
  }
  return s;
}

inline Poly parse_poly(const FieldPtr& F, const std::string& text) {
  std::string t = text;
  // coefficient-list form [c0,c1,...] with element literals
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw std::invalid_argument("unterminated coefficient list");
    std::vector<Fe> c;
    for (const auto& part : detail::split(t.substr(1, t.size() - 2), ','))
      c.push_back(parse_element(F, part));
    return Poly::from_fes(F, std::move(c));
  }
  // human form: sum of [coef][*][x[^k]] terms with integer coefficients
  std::vector<i64> coeffs;
  size_t i = 0;
  auto skip_ws = [&] { while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i; };
  auto bump = [&](i64 exp, i64 v) {
    if (static_cast<size_t>(exp) >= coeffs.size()) coeffs.resize(static_cast<size_t>(exp) + 1, 0);
    coeffs[static_cast<size_t>(exp)] += v;
  };
  skip_ws();
  bool first = true;
  while (i < t.size()) {
    i64 sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = (t[i] == '-') ? -1 : 1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("bad polynomial literal: " + text);
    }
    skip_ws();
    i64 coef = 1;
    bool have_coef = false;
    if (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
      size_t j = i;
      while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
      coef = detail::parse_i64(t.substr(i, j - i));
      i = j;
      have_coef = true;
    }
    skip_ws();
    i64 exp = 0;
    if (i < t.size() && (t[i] == '*' || t[i] == 'x')) {
      if (t[i] == '*') { ++i; skip_ws(); }
      if (i >= t.size() || t[i] != 'x') throw std::invalid_argument("bad polynomial literal: " + text);
      ++i;
      exp = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        size_t j = i;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        exp = detail::parse_i64(t.substr(i, j - i));
        i = j;
      }
    } else if (!have_coef) {
      throw std::invalid_argument("bad polynomial literal: " + text);
    }
    bump(exp, sign * coef);
    first = false;
    skip_ws();
  }
  if (first) throw std::invalid_argument("empty polynomial literal");
  return Poly::from_ints(F, coeffs);
}

inline std::string poly_str(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (int i = f.degree(); i >= 0; --i) {
    Fe c = f.coeff(i);
    if (c.is_zero()) continue;
    if (!s.empty()) s += "+";
    std::string cs = element_str(c);
    bool composite = cs.find('+') != std::string::npos || cs.find('w') != std::string::npos;
    if (composite) cs = "(" + cs + ")";
    if (i == 0) {
      s += cs;
    } else {
      if (cs != "1") s += cs + "*";
      s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return s;
}

// ------------------------------------------------------------------ JSON

inline json poly_json(const Poly& f) {
  json arr = json::array();
  for (const auto& c : f.coeffs) arr.push_back(element_str(c));
  return arr;
}

inline json window_json(const std::vector<Fe>& w) {
  json arr = json::array();
  for (const auto& x : w) arr.push_back(element_str(x));
  return arr;
}

inline json report_json(const PresentationReport& rep, const FieldPtr& F) {
  json j;
  j["field"] = field_spec(F);
  j["period"] = rep.m;
  j["f_s"] = poly_json(rep.f_s);
  j["f_s_str"] = poly_str(rep.f_s);
  j["is_group"] = rep.is_group;
  if (rep.group) j["group"] = window_json(rep.group->elems);
  j["is_cyclic"] = rep.is_cyclic;
  if (rep.cyclic_ratio) j["cyclic_ratio"] = element_str(*rep.cyclic_ratio);
  if (rep.zeros.split_field) {
    json zeros = json::array();
    for (const auto& [root, mult] : rep.zeros.roots) {
      json z;
      z["root"] = element_str(root);
      z["multiplicity"] = mult;
      zeros.push_back(z);
    }
    j["zeros_field"] = field_spec(rep.zeros.split_field);
    j["zeros"] = zeros;
    j["zeros_split_completely"] = rep.zeros.split_completely;
  }
  j["zeros_generate_group"] = rep.zeros_generate_group;
  j["ans_sequence"] = rep.ans_sequence;
  if (rep.ans_for_f) j["ans_for_f"] = *rep.ans_for_f;
  j["standardness"] = rep.standardness == Standardness::non_standard_presentation
                          ? "non-standard-presentation"
                          : "standard-presentation";
  j["degenerate"] = rep.degenerate;
  return j;
}

inline json construction_json(const ConstructionResult& res) {
  json j;
  const auto& F = res.seq->field();
  j["field"] = field_spec(F);
  j["window"] = window_json(res.seq->window());
  j["f_claimed"] = poly_json(res.f_claimed);
  j["f_computed"] = poly_json(res.f_computed);
  j["match"] = res.match;
  j["stilde_identity_ok"] = res.stilde_identity_ok;
  j["report"] = report_json(res.report, F);
  return j;
}

inline json extension_json(const ExtensionResult& res) {
  json j;
  const auto& F = res.seq.field();
  j["field"] = field_spec(F);
  j["window"] = window_json(res.seq.window());
  j["g"] = poly_json(res.g);
  j["g_str"] = poly_str(res.g);
  j["f_t"] = poly_json(res.f_t);
  j["tilde_identity_ok"] = res.tilde_identity_ok;
  j["f_t_divides_g"] = res.divides_g;
  j["presents_L"] = res.presents_L;
  j["report"] = report_json(res.report, F);
  return j;
}

inline json search_json(const SearchReport& rep) {
  json j;
  j["m"] = rep.spec.m;
  j["p_max"] = rep.spec.p_max;
  j["normalize"] = rep.spec.normalize;
  j["debug_enumerate"] = rep.spec.debug_enumerate;
  j["short_circuit_prime_power"] = rep.short_circuit_prime_power;
  if (rep.short_circuit_prime_power) j["reason"] = "prime power size";
  json fields = json::array();
  for (const auto& fr : rep.fields) {
    json f;
    f["p"] = fr.p;
    f["e"] = fr.e;
    f["q"] = fr.q;
    json hits = json::array();
    for (const auto& h : fr.hits) {
      json hj;
      hj["window"] = window_json(h.window);
      hj["f_s"] = poly_json(h.f_s);
      hj["f_s_str"] = poly_str(h.f_s);
      hits.push_back(hj);
    }
    f["hits"] = hits;
    f["divisors_considered"] = fr.divisors_considered;
    f["divisors_pruned"] = fr.divisors_pruned;
    f["seeds_enumerated"] = fr.seeds_enumerated;
    f["seeds_theoretical"] = fr.seeds_theoretical;
    f["exhaustive"] = fr.exhaustive;
    fields.push_back(f);
  }
  j["fields"] = fields;
  j["equivalence_classes"] = rep.equivalence_classes;
  j["exhaustive"] = rep.exhaustive;
  return j;
}

inline json quad_json(const QuadReport& rep) {
  json j;
  j["field"] = field_spec(rep.field);
  j["pairs_examined"] = rep.pairs_examined;
  json hits = json::array();
  for (const auto& h : rep.hits) {
    json hj;
    hj["a"] = element_str(h.a);
    hj["b"] = element_str(h.b);
    hj["group_order"] = h.group_order;
    hj["noncyclic_presentations"] = h.noncyclic_presentations;
    hj["known_family"] = h.known_family;
    hits.push_back(hj);
  }
  j["hits"] = hits;
  j["family_cross_check_ok"] = rep.family_cross_check_ok;
  return j;
}

}  // namespace lrslab

#endif  // LRSLAB_FORMAT_HPP
