#ifndef LRSLAB_SEARCH_HPP
#define LRSLAB_SEARCH_HPP

// Exhaustive / pruned search for automatically non-standard subgroups of a
// given size m across host fields. Strategy: fix M = <alpha> for the
// deterministic primitive m-th root alpha; any ANS presentation has a
// squarefree minimal recursion dividing D(x) = (x^m-1)/((x-1) Phi_{p,m})
// whose zero set generates M, so candidate recursions are products of
// (x - beta) over subsets of the m-th roots of unity of order not in {1, m}
// with order-lcm m. Seeds are injective windows over M with s_0 = 1.

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "lrslab/construct.hpp"

namespace lrslab {

struct SearchSpec {
  i64 m = 0;
  i64 p_max = 0;
  bool normalize = true;        // fix s_0 = 1 and report shift/scale classes
  bool debug_enumerate = false; // enumerate prime-power sizes instead of short-circuiting
  i64 seed_cap = 100'000'000;   // per field
  double time_cap_seconds = 600.0;  // per field
  int threads = 1;
};

struct SearchHit {
  std::vector<Fe> window;  // canonical class representative
  Poly f_s;
};

struct FieldSearchResult {
  i64 p = 0;
  int e = 1;
  i64 q = 0;
  std::vector<SearchHit> hits;
  i64 divisors_considered = 0;
  i64 divisors_pruned = 0;  // zero set does not generate M
  i64 seeds_enumerated = 0;
  i64 seeds_theoretical = 0;  // sum over kept divisors of (m-1)!/(m-k)!
  bool exhaustive = true;
};

struct SearchReport {
  SearchSpec spec;
  bool short_circuit_prime_power = false;
  std::vector<FieldSearchResult> fields;
  i64 equivalence_classes = 0;
  bool exhaustive = true;
};

/// Smallest host field per prime p <= p_max with p coprime to m: F_{p^d}
/// with d the multiplicative order of p mod m.
inline std::vector<FieldPtr> enumerate_host_fields(i64 m, i64 p_max) {
  if (m < 2) throw std::invalid_argument("enumerate_host_fields needs m >= 2");
  std::vector<FieldPtr> out;
  for (i64 p = 2; p <= p_max; ++p) {
    if (!detail::is_prime_i64(p)) continue;
    if (m % p == 0) continue;
    int d = 1;
    i64 pw = p % m;
    while (pw != 1) {
      pw = pw * p % m;
      ++d;
    }
    i64 q = 1;
    bool over = false;
    for (int i = 0; i < d; ++i) {
      if (q > ((i64(1) << 31) - 1) / p) { over = true; break; }
      q *= p;
    }
    if (over) continue;  // beyond desk scale; caller sees the gap via spec echo
    out.push_back(Field::make(p, d));
  }
  return out;
}

namespace detail {

/// Canonical class representative: the lexicographically least window among
/// {(c * s_{n+d})_n : c in M, 0 <= d < m} under the discrete-log element
/// ordering w.r.t. alpha (deterministic because alpha is).
inline std::vector<Fe> canonical_window(const std::vector<Fe>& w, const MulGroup& M,
                                        const std::map<std::vector<i64>, i64>& dlog) {
  const auto& F = M.field;
  i64 m = static_cast<i64>(w.size());
  auto key = [&](const std::vector<Fe>& v) {
    std::vector<i64> k;
    k.reserve(v.size());
    for (const auto& x : v) k.push_back(dlog.at(x.c));
    return k;
  };
  std::vector<Fe> best = w;
  std::vector<i64> best_key = key(w);
  for (i64 d = 0; d < m; ++d) {
    for (const auto& c : M.elems) {
      std::vector<Fe> cand(static_cast<size_t>(m), F->zero());
      for (i64 n = 0; n < m; ++n)
        cand[static_cast<size_t>(n)] = F->mul(c, w[static_cast<size_t>((n + d) % m)]);
      std::vector<i64> ck = key(cand);
      if (ck < best_key) {
        best = std::move(cand);
        best_key = std::move(ck);
      }
    }
  }
  return best;
}

struct DivisorTask {
  size_t field_idx;
  Poly g;  // candidate minimal recursion
};

}  // namespace detail

/// Independent re-verification of a candidate window: classify only, no
/// search state.
inline bool verify_hit(const std::vector<Fe>& window, const FieldPtr& field) {
  PeriodicSeq s = PeriodicSeq::from_window(field, window);
  return classify_presentation(s).ans_sequence;
}

inline SearchReport search_ans(const SearchSpec& spec) {
  if (spec.m < 2) throw std::invalid_argument("search needs m >= 2");
  if (spec.p_max < 2) throw std::invalid_argument("search needs p_max >= 2");
  SearchReport rep;
  rep.spec = spec;
  if (check_prime_power_rule(spec.m) && !spec.debug_enumerate) {
    rep.short_circuit_prime_power = true;
    return rep;
  }
  std::vector<FieldPtr> fields = enumerate_host_fields(spec.m, spec.p_max);
  rep.fields.resize(fields.size());

  i64 m = spec.m;
  // prepare per-field context (group M, dlog table, divisor candidates)
  struct FieldCtx {
    FieldPtr F;
    MulGroup M;
    std::map<std::vector<i64>, i64> dlog;
    std::vector<Poly> divisors;  // kept candidates
    i64 pruned = 0;
    i64 considered = 0;
  };
  std::vector<FieldCtx> fctx;
  std::vector<detail::DivisorTask> tasks;
  for (size_t fi = 0; fi < fields.size(); ++fi) {
    const auto& F = fields[fi];
    Fe alpha = *F->primitive_mth_root(m);
    std::vector<Fe> pows;
    std::map<std::vector<i64>, i64> dlog;
    for (i64 i = 0; i < m; ++i) {
      Fe x = F->pow(alpha, i);
      pows.push_back(x);
      dlog[x.c] = i;
    }
    MulGroup M = group_generated(F, {alpha});
    // roots of D(x): alpha^i with order neither 1 nor m
    std::vector<std::pair<Fe, i64>> droots;  // (root, order)
    for (i64 i = 1; i < m; ++i) {
      i64 ord = m / std::gcd(i, m);
      if (ord != m) droots.emplace_back(pows[static_cast<size_t>(i)], ord);
    }
    FieldCtx ctx{F, M, std::move(dlog), {}, 0, 0};
    size_t nd = droots.size();
    for (size_t mask = 1; mask < (size_t(1) << nd); ++mask) {
      ++ctx.considered;
      i64 l = 1;
      for (size_t b = 0; b < nd; ++b)
        if (mask & (size_t(1) << b)) l = std::lcm(l, droots[b].second);
      if (l != m) {
        ++ctx.pruned;
        continue;
      }
      Poly g = Poly::from_ints(F, {1});
      for (size_t b = 0; b < nd; ++b)
        if (mask & (size_t(1) << b))
          g = g * Poly::from_fes(F, {F->neg(droots[b].first), F->one()});
      ctx.divisors.push_back(std::move(g));
    }
    for (size_t di = 0; di < ctx.divisors.size(); ++di)
      tasks.push_back(detail::DivisorTask{fi, ctx.divisors[di]});
    fctx.push_back(std::move(ctx));
  }

  // run (field, divisor) tasks; results merged in task order for determinism
  struct TaskResult {
    std::vector<std::pair<std::vector<Fe>, Poly>> hits;  // canonical window, f_s
    i64 seeds = 0;
    bool capped = false;
  };
  std::vector<TaskResult> results(tasks.size());
  std::atomic<size_t> next_task{0};

  auto run_task = [&](size_t ti) {
    const auto& task = tasks[ti];
    const auto& ctx = fctx[task.field_idx];
    const auto& F = ctx.F;
    TaskResult& res = results[ti];
    auto t0 = std::chrono::steady_clock::now();
    int k = task.g.degree();
    Recursion rec(task.g);
    // injective seeds over M with s_0 = 1
    const auto& Melems = ctx.M.elems;
    std::vector<size_t> choice(static_cast<size_t>(k), 0);
    std::vector<bool> used(Melems.size(), false);
    std::vector<Fe> seed(static_cast<size_t>(k), F->zero());
    // position 0 is fixed to 1
    size_t one_idx = 0;
    for (size_t i = 0; i < Melems.size(); ++i)
      if (Melems[i] == F->one()) one_idx = i;
    std::function<void(int)> recurse = [&](int pos) {
      if (res.capped) return;
      if (pos == k) {
        ++res.seeds;
        if (res.seeds % 4096 == 0) {
          auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          if (res.seeds > spec.seed_cap || dt > spec.time_cap_seconds) {
            res.capped = true;
            return;
          }
        }
        std::vector<Fe> win = iterate(rec, seed, m);
        // window must be a permutation of M (then minimal period is m)
        std::vector<Fe> sorted = win;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != Melems) return;
        if (!verify_hit(win, F)) return;
        res.hits.emplace_back(detail::canonical_window(win, ctx.M, ctx.dlog),
                              minimal_recursion(PeriodicSeq::from_window(F, win)));
        return;
      }
      for (size_t i = 0; i < Melems.size(); ++i) {
        if (used[i]) continue;
        if (pos == 0 && spec.normalize && i != one_idx) continue;
        used[i] = true;
        seed[static_cast<size_t>(pos)] = Melems[i];
        recurse(pos + 1);
        used[i] = false;
        if (res.capped) return;
      }
    };
    recurse(0);
  };

  int nthreads = std::max(1, spec.threads);
  if (nthreads == 1) {
    for (size_t ti = 0; ti < tasks.size(); ++ti) run_task(ti);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        while (true) {
          size_t ti = next_task.fetch_add(1);
          if (ti >= tasks.size()) break;
          run_task(ti);
        }
      });
    for (auto& th : pool) th.join();
  }

  // deterministic ordered merge
  for (size_t fi = 0; fi < fields.size(); ++fi) {
    auto& fr = rep.fields[fi];
    fr.p = fields[fi]->p();
    fr.e = fields[fi]->e();
    fr.q = fields[fi]->q();
    fr.divisors_considered = fctx[fi].considered;
    fr.divisors_pruned = fctx[fi].pruned;
    for (const auto& g : fctx[fi].divisors) {
      i64 cnt = 1;
      for (i64 i = 0; i < g.degree() - 1; ++i) cnt *= (m - 1 - i);
      fr.seeds_theoretical += cnt;
    }
  }
  std::set<std::pair<size_t, std::vector<std::vector<i64>>>> seen;  // (field, window coeffs)
  for (size_t ti = 0; ti < tasks.size(); ++ti) {
    size_t fi = tasks[ti].field_idx;
    auto& fr = rep.fields[fi];
    fr.seeds_enumerated += results[ti].seeds;
    if (results[ti].capped) fr.exhaustive = false;
    for (auto& [win, fs] : results[ti].hits) {
      std::vector<std::vector<i64>> key;
      for (const auto& x : win) key.push_back(x.c);
      if (seen.insert({fi, key}).second) fr.hits.push_back(SearchHit{win, fs});
    }
  }
  for (const auto& fr : rep.fields) {
    rep.equivalence_classes += static_cast<i64>(fr.hits.size());
    rep.exhaustive = rep.exhaustive && fr.exhaustive;
  }
  return rep;
}

/// Exhaustive scan for minimally non-standard quadratics f = (x-a)(x-b),
/// a != b, both nonzero in the given field: windows presenting M = <a, b>
/// non-cyclically with f_s = f.
struct QuadHit {
  Fe a, b;
  i64 group_order = 0;
  i64 noncyclic_presentations = 0;
  bool known_family = false;  // f = x^2 - a^2 with ord(a) even > 4
};

struct QuadReport {
  FieldPtr field;
  std::vector<QuadHit> hits;
  i64 pairs_examined = 0;
  bool family_cross_check_ok = true;  // every in-range x^2 - a^2 was found
};

inline QuadReport search_nonstandard_quadratic(const FieldPtr& F) {
  QuadReport rep;
  rep.field = F;
  for (i64 ia = 1; ia < F->q(); ++ia) {
    Fe a = F->element_at(ia);
    if (a.is_zero()) continue;
    for (i64 ib = ia + 1; ib < F->q(); ++ib) {
      Fe b = F->element_at(ib);
      if (b.is_zero()) continue;
      ++rep.pairs_examined;
      Poly f = Poly::from_fes(F, {F->neg(a), F->one()}) * Poly::from_fes(F, {F->neg(b), F->one()});
      MulGroup M = group_generated(F, {a, b});
      i64 mm = M.order();
      if (mm % F->p() == 0) continue;  // cannot be presented (m | q-1 anyway)
      Recursion rec(f);
      QuadHit hit{a, b, mm, 0, false};
      // seeds (1, t), t in M: shift/scale-normalized
      for (const auto& t : M.elems) {
        if (t == F->one()) continue;
        std::vector<Fe> seed{F->one(), t};
        i64 per = detect_period(rec, seed);
        if (per != mm) continue;
        PeriodicSeq s = PeriodicSeq::from_window(F, iterate(rec, seed, per));
        auto grp = presents_subgroup(s);
        if (!grp || !(*grp == M)) continue;
        PresentationReport r = classify_presentation(s);
        if (!r.is_cyclic && r.f_s == f) ++hit.noncyclic_presentations;
      }
      if (hit.noncyclic_presentations > 0) {
        if (b == F->neg(a)) {
          i64 orda = F->mul_order(a);
          hit.known_family = (orda % 2 == 0 && orda > 4);
        }
        rep.hits.push_back(hit);
      }
    }
  }
  // cross-check: the x^2 - a^2 family (a of even order > 4) must appear
  for (i64 ia = 1; ia < F->q(); ++ia) {
    Fe a = F->element_at(ia);
    if (a.is_zero()) continue;
    i64 orda = F->mul_order(a);
    if (orda % 2 != 0 || orda <= 4) continue;
    bool found = false;
    for (const auto& h : rep.hits) {
      bool same_pair = (h.a == a && h.b == F->neg(a)) || (h.b == a && h.a == F->neg(a));
      found = found || (same_pair && h.noncyclic_presentations > 0);
    }
    rep.family_cross_check_ok = rep.family_cross_check_ok && found;
  }
  return rep;
}

}  // namespace lrslab

#endif  // LRSLAB_SEARCH_HPP
