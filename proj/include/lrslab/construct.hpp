#ifndef LRSLAB_CONSTRUCT_HPP
#define LRSLAB_CONSTRUCT_HPP

// Explicit automatically non-standard presentations of F_p^* for
// p = 2r + 1, r >= 3 odd (two window families), the coset-interleaving
// extension of an ANS subgroup, and the (m-1)! permutation presentations
// for f = (x^m - 1)/(x - 1).

#include "lrslab/classify.hpp"

namespace lrslab {

struct ConstructionResult {
  std::optional<PeriodicSeq> seq;
  Poly f_claimed;   // the stated recursion / minimal polynomial
  Poly f_computed;  // via minimal_recursion
  bool match = false;
  bool stilde_identity_ok = false;  // the closed-form identity for s~
  PresentationReport report;
};

namespace detail {
inline void require_halving_prime(i64 p) {
  if (!is_prime_i64(p) || p < 7 || p % 4 != 3)
    throw std::invalid_argument("need a prime p >= 7 with p = 3 mod 4 (so r = (p-1)/2 is odd)");
}

/// (x + 1)(x^r - 1)/(x - 1) over F_p.
inline Poly halving_claimed_poly(const FieldPtr& F, i64 r) {
  Poly xp1 = Poly::from_ints(F, {1, 1});
  Poly geo = exact_div(xm_minus_1(F, r), Poly::from_ints(F, {-1, 1}));
  return xp1 * geo;
}
}  // namespace detail

/// Window 1, -2, 3, -4, ..., -(r-1), r, -r, r-1, ..., 2, -1 over F_p with
/// p = 2r + 1. Verifies the closed form
/// s~ (x+1)^2 = (x^{r+1} - 1)(x^r + 1) and the minimal recursion
/// (x + 1)(x^r - 1)/(x - 1), and classifies the window (ANS, group F_p^*).
inline ConstructionResult halving_construction(i64 p) {
  detail::require_halving_prime(p);
  i64 r = (p - 1) / 2;
  FieldPtr F = Field::make(p, 1);
  std::vector<Fe> w;
  for (i64 i = 0; i < r; ++i) w.push_back(F->from_int((i % 2 == 0 ? 1 : -1) * (i + 1)));
  for (i64 j = 0; j < r; ++j) w.push_back(F->from_int((j % 2 == 0 ? -1 : 1) * (r - j)));
  ConstructionResult out;
  out.seq = PeriodicSeq::from_window(F, w);
  out.f_claimed = detail::halving_claimed_poly(F, r);
  out.f_computed = minimal_recursion(*out.seq);
  out.match = (out.f_computed == out.f_claimed);
  Poly lhs = s_tilde(*out.seq) * Poly::from_ints(F, {1, 2, 1});  // s~ * (x+1)^2
  Poly rhs = xm_minus_1(F, r + 1) * (xm_minus_1(F, r) + Poly::from_ints(F, {2}));
  out.stilde_identity_ok = (lhs == rhs);
  out.report = classify_presentation(*out.seq);
  return out;
}

/// Window 1, -1, 3, -3, ..., r-2, -(r-2), r, 2, -2, ..., r-1, -(r-1), r+1
/// over F_p with p = 2r + 1. The minimal recursion depends on p mod 12:
/// (x+1)(x^r-1)/(x-1) when p = 7 mod 12, and that divided by (x - 1/3) when
/// p = 11 mod 12 (1/3 is then an r-th root of unity, enlarging the gcd).
/// The s~ closed form checked is a(x)(x-1)(x^r+1)/(x+1) with
/// a(x) = (x+1)(x^{r-2} + 3x^{r-4} + ... + (r-2)x) + r.
inline ConstructionResult alternating_construction(i64 p) {
  detail::require_halving_prime(p);
  i64 r = (p - 1) / 2;
  FieldPtr F = Field::make(p, 1);
  std::vector<Fe> w;
  for (i64 o = 1; o <= r - 2; o += 2) {
    w.push_back(F->from_int(o));
    w.push_back(F->from_int(-o));
  }
  w.push_back(F->from_int(r));
  for (i64 ev = 2; ev <= r - 1; ev += 2) {
    w.push_back(F->from_int(ev));
    w.push_back(F->from_int(-ev));
  }
  w.push_back(F->from_int(r + 1));
  ConstructionResult out;
  out.seq = PeriodicSeq::from_window(F, w);
  Poly base = detail::halving_claimed_poly(F, r);
  if (p % 12 == 7) {
    out.f_claimed = base;
  } else {
    Fe third = F->inv(F->from_int(3));
    out.f_claimed = exact_div(base, Poly::from_fes(F, {F->neg(third), F->one()}));
  }
  out.f_computed = minimal_recursion(*out.seq);
  out.match = (out.f_computed == out.f_claimed);
  // a(x) = (x+1) * sum_{odd o <= r-2} o x^{r-1-o} + r
  std::vector<Fe> ac(static_cast<size_t>(r - 1), F->zero());
  for (i64 o = 1; o <= r - 2; o += 2) ac[static_cast<size_t>(r - 1 - o)] = F->from_int(o);
  Poly a = Poly::from_fes(F, std::move(ac)) * Poly::from_ints(F, {1, 1}) + Poly::from_ints(F, {r});
  Poly xr_plus_1 = xm_minus_1(F, r) + Poly::from_ints(F, {2});
  Poly rhs = a * Poly::from_ints(F, {-1, 1}) * exact_div(xr_plus_1, Poly::from_ints(F, {1, 1}));
  out.stilde_identity_ok = (s_tilde(*out.seq) == rhs);
  out.report = classify_presentation(*out.seq);
  return out;
}

/// Interleaved extension: t_{kj+i} = e_i s_j for a transversal e_0..e_{k-1}
/// of L/M. Verifies t~ = e~(x) s~(x^k), that t presents L, that
/// f_t | f_s(x^k), and that L is again ANS.
struct ExtensionResult {
  PeriodicSeq seq;           // t, length km
  Poly g;                    // f_s(x^k)
  Poly f_t;                  // minimal recursion of t
  bool tilde_identity_ok = false;
  bool divides_g = false;
  bool presents_L = false;
  PresentationReport report;

  ExtensionResult(PeriodicSeq t, Poly g_, Poly ft) : seq(std::move(t)), g(std::move(g_)), f_t(std::move(ft)) {}
};

inline ExtensionResult extend_with_reps(const PeriodicSeq& s, const std::vector<Fe>& reps) {
  const auto& E = s.field();
  i64 m = s.period();
  i64 k = static_cast<i64>(reps.size());
  if (k < 1) throw std::invalid_argument("need at least one coset representative");
  if ((k * m) % E->p() == 0) throw std::invalid_argument("extension needs gcd(km, p) = 1");
  if (!is_ans_sequence(s) && k > 1)
    throw std::invalid_argument("base sequence must present an ANS subgroup");
  MulGroup M = *presents_subgroup(s);
  // reps must be a transversal: all products e_i^{-1} e_j (i != j) outside M
  for (size_t i = 0; i < reps.size(); ++i) {
    if (reps[i].is_zero()) throw std::invalid_argument("zero coset representative");
    for (size_t j = 0; j < reps.size(); ++j)
      if (i != j && M.contains(E->mul(E->inv(reps[i]), reps[j])))
        throw std::invalid_argument("representatives are not in distinct cosets");
  }
  std::vector<Fe> t(static_cast<size_t>(k * m), E->zero());
  for (i64 j = 0; j < m; ++j)
    for (i64 i = 0; i < k; ++i)
      t[static_cast<size_t>(k * j + i)] = E->mul(reps[static_cast<size_t>(i)], s.at(j));
  PeriodicSeq ts = PeriodicSeq::from_window(E, t);
  if (ts.period() != k * m) throw std::logic_error("extension window is not of minimal period km");

  Poly fs = minimal_recursion(s);
  Poly g = compose_xk(fs, k);
  ExtensionResult out(ts, g, minimal_recursion(ts));
  // e~(x) = e_0 x^{k-1} + ... + e_{k-1}
  std::vector<Fe> ec(static_cast<size_t>(k), E->zero());
  for (i64 i = 0; i < k; ++i) ec[static_cast<size_t>(k - 1 - i)] = reps[static_cast<size_t>(i)];
  Poly etilde = Poly::from_fes(E, std::move(ec));
  out.tilde_identity_ok = (s_tilde(ts) == etilde * compose_xk(s_tilde(s), k));
  out.divides_g = divides(out.f_t, g);
  auto L = presents_subgroup(ts);
  out.presents_L = L.has_value() && L->order() == k * m;
  out.report = classify_presentation(ts);
  return out;
}

/// Extension with default representatives: the window is first embedded in
/// the smallest extension field hosting a subgroup L of order k*m, L is the
/// cyclic subgroup of that order, and e_i = g^i for the deterministic
/// (lex-smallest) generator g of L — powers of g lie in distinct cosets of M
/// since gM generates the order-k quotient L/M.
inline ExtensionResult extend_ans(const PeriodicSeq& s, i64 k, int max_ext_degree = 6) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto& base = s.field();
  i64 m = s.period();
  i64 km = k * m;
  if (km % base->p() == 0) throw std::invalid_argument("extension needs gcd(km, p) = 1");
  // smallest d with km | p^(e*d) - 1
  for (int d = 1; d <= max_ext_degree; ++d) {
    i64 q = 1;
    bool over = false;
    for (int i = 0; i < base->e() * d; ++i) {
      if (q > ((i64(1) << 31) - 1) / base->p()) { over = true; break; }
      q *= base->p();
    }
    if (over) break;
    if ((q - 1) % km != 0) continue;
    FieldPtr E = (d == 1) ? base : Field::make(base->p(), base->e() * d);
    FieldHom hom = embed_field(base, E);
    std::vector<Fe> w;
    for (const auto& x : s.window()) w.push_back(hom(x));
    PeriodicSeq se = PeriodicSeq::from_window(E, w);
    Fe g = *E->primitive_mth_root(km);
    std::vector<Fe> reps;
    for (i64 i = 0; i < k; ++i) reps.push_back(E->pow(g, i));
    return extend_with_reps(se, reps);
  }
  throw std::domain_error("no hosting extension for the requested subgroup size within the bound");
}

/// Window 1, alpha^{pi(1)}, ..., alpha^{pi(m-1)} for a permutation pi of
/// 1..m-1; always an f-sequence for f = (x^m - 1)/(x - 1).
inline PeriodicSeq permutation_presentation(i64 m, const FieldPtr& ctx, const std::vector<int>& perm) {
  if (m < 4) throw std::invalid_argument("permutation presentations need m >= 4");
  if (m % ctx->p() == 0) throw std::invalid_argument("need gcd(m, p) = 1");
  if (static_cast<i64>(perm.size()) != m - 1) throw std::invalid_argument("permutation must act on 1..m-1");
  std::vector<bool> seen(static_cast<size_t>(m), false);
  for (int v : perm) {
    if (v < 1 || v >= m || seen[static_cast<size_t>(v)]) throw std::invalid_argument("not a permutation of 1..m-1");
    seen[static_cast<size_t>(v)] = true;
  }
  auto alpha = ctx->primitive_mth_root(m);
  if (!alpha) throw std::invalid_argument("field has no primitive m-th root of unity");
  std::vector<Fe> w{ctx->one()};
  for (int v : perm) w.push_back(ctx->pow(*alpha, v));
  PeriodicSeq s = PeriodicSeq::from_window(ctx, w);
  Poly f = exact_div(xm_minus_1(ctx, m), Poly::from_ints(ctx, {-1, 1}));
  if (!is_f_sequence(s, f)) throw std::logic_error("permutation window failed the f-sequence check");
  return s;
}

/// Exhaustive count of permutation presentations with s_0 = 1 for
/// f = (x^m - 1)/(x - 1), plus the number of cyclic ones among them.
struct PresentationCount {
  i64 total_with_s0_1 = 0;
  i64 cyclic_count = 0;
};

inline PresentationCount count_presentations(i64 m, const FieldPtr& ctx) {
  if (m < 4) throw std::invalid_argument("count_presentations needs m >= 4");
  if (m > 8) throw std::invalid_argument("factorial enumeration capped at m = 8");
  PresentationCount out;
  std::vector<int> perm;
  for (int i = 1; i < m; ++i) perm.push_back(i);
  do {
    PeriodicSeq s = permutation_presentation(m, ctx, perm);
    ++out.total_with_s0_1;
    if (classify_presentation(s).is_cyclic) ++out.cyclic_count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace lrslab

#endif  // LRSLAB_CONSTRUCT_HPP
