#ifndef LRSLAB_CLASSIFY_HPP
#define LRSLAB_CLASSIFY_HPP

// Classification of a periodic window: does it present a multiplicative
// subgroup, is the presentation cyclic (standard) or not, is the subgroup
// automatically non-standard (Phi_{p,m} | s~), and do the zeros of f_s
// generate the group.

#include "lrslab/lrs.hpp"

namespace lrslab {

enum class Standardness { standard_presentation, non_standard_presentation };

struct PresentationReport {
  i64 m = 0;
  Poly f_s;
  bool is_group = false;
  std::optional<MulGroup> group;
  bool is_cyclic = false;
  std::optional<Fe> cyclic_ratio;
  RootSpectrum zeros;
  bool zeros_generate_group = false;
  bool ans_sequence = false;
  std::optional<bool> ans_for_f;
  Standardness standardness = Standardness::standard_presentation;
  bool degenerate = false;  // m shares a factor with the characteristic
};

/// The window entries as a multiplicative subgroup, if they form one of
/// size m (distinct, nonzero, contain 1, product-closed); absent otherwise.
inline std::optional<MulGroup> presents_subgroup(const PeriodicSeq& s) {
  const auto& F = s.field();
  std::vector<Fe> elems = s.window();
  for (const auto& x : elems)
    if (x.is_zero()) return std::nullopt;
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) return std::nullopt;
  MulGroup g{F, elems};
  if (!g.contains(F->one())) return std::nullopt;
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (!g.contains(F->mul(a, b))) return std::nullopt;
  return g;
}

/// Window forms a subgroup of size m and Phi_{p,m} divides s~.
inline bool is_ans_sequence(const PeriodicSeq& s) {
  i64 m = s.period();
  if (m <= 1) return false;
  if (m % s.field()->p() == 0)
    throw std::invalid_argument("is_ans_sequence needs gcd(m, p) = 1");
  if (!presents_subgroup(s)) return false;
  return divides(cyclotomic(m, s.field()), s_tilde(s));
}

/// f divides (x^m - 1) / ((x - 1) * Phi_{p,m}).
inline bool is_ans_polynomial(const Poly& f, i64 m) {
  if (m <= 1) throw std::invalid_argument("is_ans_polynomial needs m > 1");
  const auto& F = f.field;
  if (m % F->p() == 0) throw std::invalid_argument("is_ans_polynomial needs gcd(m, p) = 1");
  Poly d = exact_div(xm_minus_1(F, m), Poly::from_ints(F, {-1, 1}));
  auto [q, r] = divmod(d, cyclotomic(m, F));
  if (!r.is_zero()) throw std::logic_error("Phi_{p,m} must divide (x^m-1)/(x-1)");
  if (f.is_zero()) return false;
  return divides(monic(f), q);
}

/// m is a prime power (such sizes can never be automatically non-standard;
/// the search engine uses this as an a-priori filter).
inline bool check_prime_power_rule(i64 m) {
  if (m < 2) throw std::invalid_argument("check_prime_power_rule needs m >= 2");
  return detail::factorize(m).size() == 1;
}

inline PresentationReport classify_presentation(const PeriodicSeq& s,
                                                const std::optional<Poly>& f = std::nullopt,
                                                int max_ext_degree = 6) {
  const auto& F = s.field();
  PresentationReport rep;
  rep.m = s.period();
  rep.f_s = minimal_recursion(s);
  rep.degenerate = (rep.m % F->p() == 0);

  auto grp = presents_subgroup(s);
  rep.is_group = grp.has_value();
  rep.group = grp;

  // cyclic detection: constant successive ratio around the whole window
  const auto& w = s.window();
  bool any_zero = std::any_of(w.begin(), w.end(), [](const Fe& x) { return x.is_zero(); });
  if (!any_zero) {
    Fe ratio = F->div(s.at(1), s.at(0));
    bool cyc = true;
    for (i64 n = 0; n < rep.m && cyc; ++n)
      cyc = (F->div(s.at(n + 1), s.at(n)) == ratio);
    if (cyc) {
      rep.is_cyclic = true;
      rep.cyclic_ratio = ratio;
    }
  } else if (rep.m == 1 && w[0].is_zero()) {
    rep.is_cyclic = false;  // zero sequence: no ratio
  }

  if (!rep.f_s.is_zero() && rep.f_s.degree() >= 1 && !rep.f_s.coeff(0).is_zero()) {
    rep.zeros = roots_with_mult(rep.f_s, max_ext_degree);
    if (rep.is_group && rep.zeros.split_completely) {
      std::vector<Fe> roots;
      for (const auto& [r, mult] : rep.zeros.roots) {
        (void)mult;
        roots.push_back(r);
      }
      MulGroup gen = group_generated(rep.zeros.split_field, roots);
      // compare against the embedded window set
      std::vector<Fe> img;
      for (const auto& x : rep.group->elems) img.push_back(rep.zeros.into_split(x));
      std::sort(img.begin(), img.end());
      rep.zeros_generate_group = (gen.elems == img);
    }
  }

  if (rep.is_group && rep.m > 1 && !rep.degenerate) rep.ans_sequence = is_ans_sequence(s);
  if (f) rep.ans_for_f = (rep.m > 1 && !rep.degenerate) ? is_ans_polynomial(*f, rep.m) : false;

  rep.standardness = (rep.is_group && !rep.is_cyclic)
                         ? Standardness::non_standard_presentation
                         : Standardness::standard_presentation;
  return rep;
}

/// Exhaustive confirmation of the repeated-root theorem: every
/// (x - a)^k-sequence whose window presents a subgroup is cyclic with ratio
/// a. Seeds are normalized to s_0 = 1 over nonzero entries (shift/scale
/// invariance loses no presentation class); fields checked are the base
/// field of a and its extensions up to max_ext_degree. seed_cap of 0 means
/// unlimited.
struct RepeatedRootCheck {
  i64 seeds_tried = 0;
  i64 group_presentations = 0;
  bool all_cyclic_with_ratio_a = true;
  bool capped = false;
  std::vector<MulGroup> groups_seen;
};

inline RepeatedRootCheck check_repeated_root_theorem(const Fe& a, int k, i64 seed_cap = 0,
                                                     int max_ext_degree = 2) {
  if (a.is_zero()) throw std::invalid_argument("a must be nonzero");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto& base = a.field;
  RepeatedRootCheck out;
  for (int d = 1; d <= max_ext_degree; ++d) {
    FieldPtr E = (d == 1) ? base : Field::make(base->p(), base->e() * d);
    FieldHom hom = embed_field(base, E);
    Fe ae = hom(a);
    Poly lin = Poly::from_fes(E, {E->neg(ae), E->one()});
    Poly f = Poly::from_ints(E, {1});
    for (int i = 0; i < k; ++i) f = f * lin;
    Recursion rec(f);
    // odometer over seeds (1, t_1, ..., t_{k-1}), t_i nonzero
    std::vector<i64> idx(static_cast<size_t>(k - 1), 1);
    bool done = (k == 1);
    auto run_seed = [&](const std::vector<Fe>& seed) {
      ++out.seeds_tried;
      i64 per = detect_period(rec, seed);
      std::vector<Fe> win = iterate(rec, seed, per);
      PeriodicSeq s = PeriodicSeq::from_window(E, win);
      auto grp = presents_subgroup(s);
      if (!grp) return;
      ++out.group_presentations;
      PresentationReport rep = classify_presentation(s);
      bool ok = rep.is_cyclic && rep.cyclic_ratio && *rep.cyclic_ratio == ae;
      if (s.period() == 1) ok = rep.is_cyclic;  // trivial group {1}: ratio is 1
      if (!ok) out.all_cyclic_with_ratio_a = false;
      bool seen = false;
      for (const auto& g : out.groups_seen) seen = seen || (g == *grp);
      if (!seen) out.groups_seen.push_back(*grp);
    };
    if (k == 1) {
      run_seed({E->one()});
    } else {
      while (!done) {
        std::vector<Fe> seed{E->one()};
        bool valid = true;
        for (i64 ix : idx) {
          Fe x = E->element_at(ix);
          if (x.is_zero()) { valid = false; break; }
          seed.push_back(x);
        }
        if (valid) {
          if (seed_cap > 0 && out.seeds_tried >= seed_cap) { out.capped = true; return out; }
          run_seed(seed);
        }
        // advance odometer
        int pos = k - 2;
        while (pos >= 0) {
          if (++idx[static_cast<size_t>(pos)] < E->q()) break;
          idx[static_cast<size_t>(pos)] = 1;
          --pos;
        }
        if (pos < 0) done = true;
      }
    }
  }
  return out;
}

/// The three candidate f-subgroups for f = (x - a)(x - b) with distinct
/// nonzero roots in the base field, plus an exhaustive seed scan confirming
/// that any non-cyclic presentation presents <a, b>.
struct Degree2Report {
  Fe a, b;
  MulGroup gen_ab, gen_a, gen_b;
  bool known_family = false;  // f = x^2 - a^2 with ord(a) even and > 4
  std::vector<std::vector<Fe>> noncyclic_windows;  // all present gen_ab
  bool smaller_groups_all_cyclic = true;
};

inline Degree2Report degree2_distinct_root_candidates(const Poly& f) {
  if (f.is_zero() || f.degree() != 2 || !f.is_monic())
    throw std::invalid_argument("expected a monic degree-2 polynomial");
  const auto& F = f.field;
  RootSpectrum spec = roots_with_mult(f, 1);
  if (spec.roots.size() != 2)
    throw std::invalid_argument("expected two distinct roots in the base field");
  Fe a = spec.roots[0].first, b = spec.roots[1].first;
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("roots must be nonzero");
  Degree2Report rep{a, b, group_generated(F, {a, b}), group_generated(F, {a}),
                    group_generated(F, {b}), false, {}, true};
  // the known family: b = -a with ord(a) even and > 4
  if (b == F->neg(a) || a == F->neg(b)) {
    i64 orda = F->mul_order(a);
    rep.known_family = (orda % 2 == 0 && orda > 4);
  }
  Recursion rec(f);
  for (i64 i0 = 1; i0 < F->q(); ++i0) {
    for (i64 i1 = 1; i1 < F->q(); ++i1) {
      std::vector<Fe> seed{F->element_at(i0), F->element_at(i1)};
      i64 per = detect_period(rec, seed);
      PeriodicSeq s = PeriodicSeq::from_window(F, iterate(rec, seed, per));
      auto grp = presents_subgroup(s);
      if (!grp) continue;
      PresentationReport r = classify_presentation(s);
      if (!r.is_cyclic) {
        if (*grp == rep.gen_ab)
          rep.noncyclic_windows.push_back(s.window());
        else
          rep.smaller_groups_all_cyclic = false;
      }
    }
  }
  return rep;
}

}  // namespace lrslab

#endif  // LRSLAB_CLASSIFY_HPP
