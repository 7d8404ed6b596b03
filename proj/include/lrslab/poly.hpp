#ifndef LRSLAB_POLY_HPP
#define LRSLAB_POLY_HPP

// Dense polynomial arithmetic over a Field: division, gcd, cyclotomic
// polynomials, order of a polynomial, root finding in extensions, and
// x -> x^k composition.

#include <map>
#include <mutex>

#include "lrslab/field.hpp"

namespace lrslab {

/// Dense polynomial, coeffs[i] is the degree-i coefficient. Canonical form:
/// no trailing zero coefficients; the zero polynomial has an empty vector
/// (its degree is the distinguished "is_zero" state, never -1 arithmetic).
struct Poly {
  FieldPtr field;
  std::vector<Fe> coeffs;

  static Poly zero(const FieldPtr& f) { return Poly{f, {}}; }
  static Poly from_fes(const FieldPtr& f, std::vector<Fe> c) {
    Poly r{f, std::move(c)};
    r.trim();
    return r;
  }
  static Poly from_ints(const FieldPtr& f, const std::vector<i64>& c) {
    std::vector<Fe> v;
    v.reserve(c.size());
    for (i64 x : c) v.push_back(f->from_int(x));
    return from_fes(f, std::move(v));
  }
  /// x^n with coefficient c (default 1)
  static Poly monomial(const FieldPtr& f, int n, std::optional<Fe> c = std::nullopt) {
    std::vector<Fe> v(n + 1, f->zero());
    v[n] = c ? *c : f->one();
    return from_fes(f, std::move(v));
  }

  bool is_zero() const { return coeffs.empty(); }
  int degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return static_cast<int>(coeffs.size()) - 1;
  }
  const Fe& lead() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs.back();
  }
  Fe coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return field->zero();
    return coeffs[static_cast<size_t>(i)];
  }
  bool is_monic() const { return !is_zero() && lead() == field->one(); }

  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }

  Fe eval(const Fe& x) const {
    Fe acc = field->zero();
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
      acc = field->add(field->mul(acc, x), coeffs[static_cast<size_t>(i)]);
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

namespace detail {
inline void check_same(const Poly& a, const Poly& b) {
  if (!a.field->same_as(*b.field)) throw std::invalid_argument("mixed field contexts");
}
}  // namespace detail

inline Poly operator+(const Poly& a, const Poly& b) {
  detail::check_same(a, b);
  std::vector<Fe> c(std::max(a.coeffs.size(), b.coeffs.size()), a.field->zero());
  for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] = a.field->add(c[i], b.coeffs[i]);
  return Poly::from_fes(a.field, std::move(c));
}

inline Poly operator-(const Poly& a, const Poly& b) {
  detail::check_same(a, b);
  std::vector<Fe> c(std::max(a.coeffs.size(), b.coeffs.size()), a.field->zero());
  for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] = a.field->sub(c[i], b.coeffs[i]);
  return Poly::from_fes(a.field, std::move(c));
}

inline Poly operator*(const Poly& a, const Poly& b) {
  detail::check_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field);
  std::vector<Fe> c(a.coeffs.size() + b.coeffs.size() - 1, a.field->zero());
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs.size(); ++j)
      c[i + j] = a.field->add(c[i + j], a.field->mul(a.coeffs[i], b.coeffs[j]));
  }
  return Poly::from_fes(a.field, std::move(c));
}

inline Poly operator*(const Poly& a, const Fe& s) {
  std::vector<Fe> c = a.coeffs;
  for (auto& x : c) x = a.field->mul(x, s);
  return Poly::from_fes(a.field, std::move(c));
}

/// (quotient, remainder) with deg r < deg divisor.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  detail::check_same(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& F = a.field;
  std::vector<Fe> rem = a.coeffs;
  int db = b.degree();
  if (a.is_zero() || a.degree() < db) return {Poly::zero(F), a};
  std::vector<Fe> quot(a.coeffs.size() - static_cast<size_t>(db), F->zero());
  Fe linv = F->inv(b.lead());
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    Fe c = F->mul(rem[static_cast<size_t>(i)], linv);
    if (c.is_zero()) continue;
    quot[static_cast<size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(i - db + j)] =
          F->sub(rem[static_cast<size_t>(i - db + j)], F->mul(c, b.coeffs[static_cast<size_t>(j)]));
  }
  return {Poly::from_fes(F, std::move(quot)), Poly::from_fes(F, std::move(rem))};
}

inline bool divides(const Poly& a, const Poly& b) {
  // a | b
  if (a.is_zero()) return b.is_zero();
  return divmod(b, a).second.is_zero();
}

/// Exact division; throws if the remainder is nonzero.
inline Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: division is not exact");
  return q;
}

inline Poly monic(const Poly& a) {
  if (a.is_zero()) return a;
  return a * a.field->inv(a.lead());
}

/// Monic gcd; gcd(a, 0) is monic(a), gcd(0, 0) is 0.
inline Poly gcd(Poly a, Poly b) {
  detail::check_same(a, b);
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Coefficient i of f becomes coefficient k*i of the result: g(x) = f(x^k).
inline Poly compose_xk(const Poly& f, i64 k) {
  if (k < 1) throw std::invalid_argument("compose_xk needs k >= 1");
  if (f.is_zero()) return f;
  std::vector<Fe> c(static_cast<size_t>(f.degree()) * static_cast<size_t>(k) + 1, f.field->zero());
  for (size_t i = 0; i < f.coeffs.size(); ++i) c[i * static_cast<size_t>(k)] = f.coeffs[i];
  return Poly::from_fes(f.field, std::move(c));
}

inline i64 euler_phi(i64 m) {
  if (m < 1) throw std::invalid_argument("euler_phi needs m >= 1");
  i64 r = m;
  for (auto [p, k] : detail::factorize(m)) {
    (void)k;
    r = r / p * (p - 1);
  }
  return r;
}

namespace detail {
// Cyclotomic polynomials over the prime field, cached per (p, m).
// Computed by the inductive quotient Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d.
inline std::vector<i64> cyclotomic_fp(i64 m, i64 p) {
  static std::map<std::pair<i64, i64>, std::vector<i64>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  // iterative fill for all divisors of m, smallest first
  std::vector<i64> divs;
  for (i64 d = 1; d <= m; ++d)
    if (m % d == 0) divs.push_back(d);
  auto fp = Field::make(p, 1);
  std::map<i64, Poly> phi;
  for (i64 d : divs) {
    auto kd = std::make_pair(p, d);
    if (auto c = cache.find(kd); c != cache.end()) {
      phi[d] = Poly::from_ints(fp, c->second);
      continue;
    }
    std::vector<i64> xm1(static_cast<size_t>(d) + 1, 0);
    xm1[0] = p - 1;
    xm1[static_cast<size_t>(d)] = 1;
    Poly num = Poly::from_ints(fp, xm1);
    for (i64 dd : divs) {
      if (dd >= d || d % dd != 0) continue;
      num = exact_div(num, phi[dd]);
    }
    phi[d] = num;
    std::vector<i64> ints;
    ints.reserve(num.coeffs.size());
    for (const auto& fe : num.coeffs) ints.push_back(fe.c[0]);
    cache[kd] = std::move(ints);
  }
  return cache[key];
}
}  // namespace detail

/// Phi_{p,m}, the m-th cyclotomic polynomial reduced in ctx. Needs p coprime
/// to m; degree is euler_phi(m) and every root has multiplicative order m.
inline Poly cyclotomic(i64 m, const FieldPtr& ctx) {
  if (m < 1) throw std::invalid_argument("cyclotomic needs m >= 1");
  if (m % ctx->p() == 0) throw std::invalid_argument("cyclotomic needs gcd(m, p) = 1");
  return Poly::from_ints(ctx, detail::cyclotomic_fp(m, ctx->p()));
}

/// Smallest n >= 1 with f | x^n - 1, by linear scan of x^n mod f.
inline i64 poly_order(const Poly& f, i64 scan_cap = 10'000'000) {
  if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("poly_order needs deg f >= 1");
  if (f.coeff(0).is_zero()) throw std::invalid_argument("poly_order needs f(0) != 0");
  const auto& F = f.field;
  Poly fm = monic(f);
  Poly xn = Poly::monomial(F, 1);
  xn = divmod(xn, fm).second;
  Poly one = Poly::from_ints(F, {1});
  Poly x = Poly::monomial(F, 1);
  for (i64 n = 1; n <= scan_cap; ++n) {
    if (xn == one) return n;
    xn = divmod(xn * x, fm).second;
  }
  throw std::domain_error("poly_order scan cap exceeded");
}

/// Roots with multiplicities, in the smallest extension F_{p^{e*d}},
/// d <= max_ext_degree, in which f splits. split_completely is false when
/// the bound (or the element-scan size guard) was hit; then the entries are
/// the partial spectrum over the largest field tried.
struct RootSpectrum {
  FieldPtr split_field;
  FieldHom into_split;                  // embedding of the base field
  std::vector<std::pair<Fe, int>> roots;  // sorted by coefficient-lex order
  int ext_degree = 1;
  bool split_completely = false;
};

inline RootSpectrum roots_with_mult(const Poly& f, int max_ext_degree = 6,
                                    i64 scan_guard = 2'000'000) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const auto& base = f.field;
  RootSpectrum best;
  for (int d = 1; d <= max_ext_degree; ++d) {
    // element-scan size guard: stay desk-scale (the base field itself is
    // always scanned)
    if (d > 1) {
      i64 q = 1;
      bool over = false;
      for (int i = 0; i < base->e() * d; ++i) {
        if (q > scan_guard / base->p()) { over = true; break; }
        q *= base->p();
      }
      if (over) break;
    }
    FieldPtr ext = (d == 1) ? base : Field::make(base->p(), base->e() * d);
    FieldHom hom = embed_field(base, ext);
    std::vector<Fe> cc;
    cc.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) cc.push_back(hom(c));
    Poly g = Poly::from_fes(ext, std::move(cc));
    RootSpectrum spec{ext, hom, {}, d, false};
    Poly rem = g;
    for (i64 i = 0; i < ext->q(); ++i) {
      Fe x = ext->element_at(i);
      if (!g.eval(x).is_zero()) continue;
      int mult = 0;
      Poly lin = Poly::from_fes(ext, {ext->neg(x), ext->one()});
      while (true) {
        auto [qq, rr] = divmod(rem, lin);
        if (!rr.is_zero()) break;
        rem = qq;
        ++mult;
      }
      spec.roots.emplace_back(x, mult);
    }
    if (!rem.is_zero() && rem.degree() == 0) {
      spec.split_completely = true;
      return spec;
    }
    best = spec;  // partial; keep the deepest attempt
  }
  return best;
}

}  // namespace lrslab

#endif  // LRSLAB_POLY_HPP
