#ifndef LRSLAB_FIELD_HPP
#define LRSLAB_FIELD_HPP

// Exact arithmetic in F_p and F_{p^e}, element orders, subgroup generation.
// Fields are desk-scale: q = p^e < 2^31, so every product fits in a 64-bit
// signed intermediate and q-1 factors by trial division.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrslab {

using i64 = long long;

namespace detail {

inline bool is_prime_i64(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::pair<i64, int>> factorize(i64 n) {
  std::vector<std::pair<i64, int>> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int k = 0;
      while (n % d == 0) { n /= d; ++k; }
      out.emplace_back(d, k);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Dense F_p[x] helpers used only for modulus selection / irreducibility.
// Coefficients low-to-high, trimmed.
using FpPoly = std::vector<i64>;

inline void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, i64 p) {
  std::vector<i64> prod(a.size() + b.size() ? a.size() + b.size() - 1 : 0, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  // reduce by monic mod
  int md = static_cast<int>(mod.size()) - 1;
  for (int i = static_cast<int>(prod.size()) - 1; i >= md; --i) {
    i64 c = prod[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= md; ++j)
      prod[i - md + j] = ((prod[i - md + j] - c * mod[j]) % p + p) % p;
  }
  prod.resize(md);
  fp_trim(prod);
  return prod;
}

inline FpPoly fp_pow_x(i64 exp_p, int times, const FpPoly& mod, i64 p) {
  // x^(p^times) mod `mod`, by repeated frobenius power
  FpPoly r{0, 1};
  fp_trim(r);
  for (int t = 0; t < times; ++t) {
    // r <- r^p mod `mod` via square-and-multiply on exponent p
    FpPoly base = r, acc{1};
    i64 e = exp_p;
    while (e > 0) {
      if (e & 1) acc = fp_mulmod(acc, base, mod, p);
      base = fp_mulmod(base, base, mod, p);
      e >>= 1;
    }
    r = acc;
  }
  return r;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, i64 p) {
  fp_trim(a); fp_trim(b);
  while (!b.empty()) {
    // a mod b
    i64 lead_inv = 1;
    {
      i64 lb = b.back(), t = 1, e = p - 2, base = lb;
      while (e > 0) {
        if (e & 1) t = t * base % p;
        base = base * base % p;
        e >>= 1;
      }
      lead_inv = t;
    }
    while (a.size() >= b.size()) {
      i64 c = a.back() * lead_inv % p;
      size_t off = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j)
        a[off + j] = ((a[off + j] - c * b[j]) % p + p) % p;
      fp_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin irreducibility test for a monic polynomial over F_p.
inline bool fp_irreducible(const FpPoly& f, i64 p) {
  int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  FpPoly x{0, 1};
  FpPoly xq = fp_pow_x(p, n, f, p);
  // x^(p^n) == x (mod f)
  if (xq != x) return false;
  for (auto [r, mult] : factorize(n)) {
    (void)mult;
    FpPoly h = fp_pow_x(p, n / static_cast<int>(r), f, p);
    // gcd(x^(p^(n/r)) - x, f) must be 1
    FpPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    fp_trim(diff);
    FpPoly g = fp_gcd(diff, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of F_{p^e}: a coefficient vector of length e, entries in [0, p).
struct Fe {
  FieldPtr field;
  std::vector<i64> c;

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](i64 v) { return v == 0; });
  }
  friend bool operator==(const Fe& a, const Fe& b) { return a.c == b.c; }
  friend bool operator!=(const Fe& a, const Fe& b) { return a.c != b.c; }
  friend bool operator<(const Fe& a, const Fe& b) {
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
  }
};

/// F_{p^e} given by characteristic, degree, and a monic irreducible modulus.
/// Immutable after construction; all operations are pure.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr make(i64 p, int e, std::optional<std::vector<i64>> modulus = std::nullopt) {
    if (!detail::is_prime_i64(p)) throw std::invalid_argument("characteristic is not prime: " + std::to_string(p));
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    i64 q = 1;
    for (int i = 0; i < e; ++i) {
      if (q > ((i64(1) << 31) - 1) / p) throw std::invalid_argument("field size exceeds 2^31");
      q *= p;
    }
    std::vector<i64> mod;
    if (e == 1) {
      if (modulus && !(modulus->size() == 2 && (*modulus)[1] % p == 1))
        throw std::invalid_argument("prime field takes no nontrivial modulus");
      mod = {0, 1};  // x, unused
    } else if (modulus) {
      mod = *modulus;
      if (static_cast<int>(mod.size()) != e + 1) throw std::invalid_argument("modulus degree mismatch");
      for (auto& v : mod) v = ((v % p) + p) % p;
      if (mod.back() != 1) throw std::invalid_argument("modulus must be monic");
      if (!detail::fp_irreducible(mod, p)) throw std::invalid_argument("modulus is reducible over F_p");
    } else {
      mod = pick_modulus(p, e);
    }
    return FieldPtr(new Field(p, e, q, std::move(mod)));
  }

  i64 p() const { return p_; }
  int e() const { return e_; }
  i64 q() const { return q_; }
  const std::vector<i64>& modulus() const { return modulus_; }

  bool same_as(const Field& o) const {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
  }

  Fe zero() const { return Fe{shared_from_this(), std::vector<i64>(e_, 0)}; }
  Fe one() const { return from_int(1); }
  Fe from_int(i64 v) const {
    std::vector<i64> c(e_, 0);
    c[0] = ((v % p_) + p_) % p_;
    return Fe{shared_from_this(), std::move(c)};
  }
  Fe from_coeffs(std::vector<i64> c) const {
    if (static_cast<int>(c.size()) > e_) throw std::invalid_argument("too many coefficients");
    c.resize(e_, 0);
    for (auto& v : c) v = ((v % p_) + p_) % p_;
    return Fe{shared_from_this(), std::move(c)};
  }

  /// Element with enumeration index i in coefficient-lex order
  /// (c0 most significant). 0 <= i < q.
  Fe element_at(i64 i) const {
    std::vector<i64> c(e_, 0);
    for (int k = e_ - 1; k >= 0; --k) { c[k] = i % p_; i /= p_; }
    return Fe{shared_from_this(), std::move(c)};
  }
  i64 index_of(const Fe& x) const {
    i64 i = 0;
    for (int k = 0; k < e_; ++k) i = i * p_ + x.c[k];
    return i;
  }

  Fe add(const Fe& a, const Fe& b) const {
    check(a); check(b);
    Fe r = a;
    for (int i = 0; i < e_; ++i) r.c[i] = (r.c[i] + b.c[i]) % p_;
    return r;
  }
  Fe sub(const Fe& a, const Fe& b) const {
    check(a); check(b);
    Fe r = a;
    for (int i = 0; i < e_; ++i) r.c[i] = ((r.c[i] - b.c[i]) % p_ + p_) % p_;
    return r;
  }
  Fe neg(const Fe& a) const {
    check(a);
    Fe r = a;
    for (int i = 0; i < e_; ++i) r.c[i] = (p_ - r.c[i]) % p_;
    return r;
  }
  Fe mul(const Fe& a, const Fe& b) const {
    check(a); check(b);
    if (e_ == 1) return Fe{shared_from_this(), {a.c[0] * b.c[0] % p_}};
    std::vector<i64> prod(2 * e_ - 1, 0);
    for (int i = 0; i < e_; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < e_; ++j)
        prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % p_;
    }
    for (int i = 2 * e_ - 2; i >= e_; --i) {
      i64 c = prod[i];
      if (c == 0) continue;
      for (int j = 0; j < e_; ++j)
        prod[i - e_ + j] = ((prod[i - e_ + j] - c * modulus_[j]) % p_ + p_) % p_;
    }
    prod.resize(e_);
    return Fe{shared_from_this(), std::move(prod)};
  }
  Fe pow(const Fe& a, i64 n) const {
    check(a);
    if (n < 0) return pow(inv(a), -n);
    Fe r = one(), base = a;
    while (n > 0) {
      if (n & 1) r = mul(r, base);
      base = mul(base, base);
      n >>= 1;
    }
    return r;
  }
  Fe inv(const Fe& a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("division by zero");
    return pow(a, q_ - 2);
  }
  Fe div(const Fe& a, const Fe& b) const { return mul(a, inv(b)); }

  /// Smallest n >= 1 with x^n = 1; divides q - 1.
  i64 mul_order(const Fe& x) const {
    check(x);
    if (x.is_zero()) throw std::domain_error("mul_order of zero");
    i64 n = q_ - 1;
    for (auto [r, k] : detail::factorize(q_ - 1)) {
      (void)k;
      while (n % r == 0 && pow(x, n / r) == one()) n /= r;
    }
    return n;
  }

  /// Some element of order exactly m (the lex-smallest), absent if m does not
  /// divide q - 1.
  std::optional<Fe> primitive_mth_root(i64 m) const {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if ((q_ - 1) % m != 0) return std::nullopt;
    if (m == 1) return one();
    // the order-m elements are g^{(q-1)/m * j} for gcd(j, m) = 1, where g is
    // any generator; generators are dense, so a lex scan finds one quickly,
    // and the lex-smallest root is then the minimum of phi(m) candidates
    std::optional<Fe> gen;
    for (i64 i = 1; i < q_ && !gen; ++i) {
      Fe x = element_at(i);
      if (!x.is_zero() && mul_order(x) == q_ - 1) gen = x;
    }
    if (!gen) return std::nullopt;  // unreachable: F_q^* is cyclic
    Fe base = pow(*gen, (q_ - 1) / m);
    std::optional<Fe> best;
    Fe cur = base;
    for (i64 j = 1; j < m; ++j) {
      if (std::gcd(j, m) == 1 && (!best || index_of(cur) < index_of(*best))) best = cur;
      cur = mul(cur, base);
    }
    return best;
  }

 private:
  Field(i64 p, int e, i64 q, std::vector<i64> mod)
      : p_(p), e_(e), q_(q), modulus_(std::move(mod)) {}

  void check(const Fe& a) const {
    if (!a.field || !a.field->same_as(*this))
      throw std::invalid_argument("mixed field contexts");
  }

  // Lex-smallest monic irreducible of degree e over F_p, coefficients
  // compared low-to-high. Deterministic, so repeated make(p, e) agree.
  static std::vector<i64> pick_modulus(i64 p, int e) {
    std::vector<i64> c(e + 1, 0);
    c[e] = 1;
    // odometer over (c0, c1, ..., c_{e-1}), c0 outermost (most significant)
    i64 total = 1;
    for (int i = 0; i < e; ++i) total *= p;
    // zero constant term means divisible by x, so start at c0 = 1
    i64 start = total / p;
    for (i64 idx = start; idx < total; ++idx) {
      i64 v = idx;
      for (int k = e - 1; k >= 0; --k) { c[k] = v % p; v /= p; }
      if (detail::fp_irreducible(c, p)) return c;
    }
    throw std::logic_error("no irreducible polynomial found");  // impossible
  }

  i64 p_;
  int e_;
  i64 q_;
  std::vector<i64> modulus_;
};

inline Fe operator+(const Fe& a, const Fe& b) { return a.field->add(a, b); }
inline Fe operator-(const Fe& a, const Fe& b) { return a.field->sub(a, b); }
inline Fe operator*(const Fe& a, const Fe& b) { return a.field->mul(a, b); }
inline Fe operator/(const Fe& a, const Fe& b) { return a.field->div(a, b); }
inline Fe operator-(const Fe& a) { return a.field->neg(a); }
inline Fe pow(const Fe& a, i64 n) { return a.field->pow(a, n); }
inline Fe inv(const Fe& a) { return a.field->inv(a); }
inline i64 mul_order(const Fe& a) { return a.field->mul_order(a); }

/// A multiplicative subgroup as a sorted, deduplicated element list.
struct MulGroup {
  FieldPtr field;
  std::vector<Fe> elems;  // sorted by coefficient-lex order

  i64 order() const { return static_cast<i64>(elems.size()); }
  bool contains(const Fe& x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
  }
  friend bool operator==(const MulGroup& a, const MulGroup& b) {
    return a.elems == b.elems;
  }
};

/// Closure of a generator set under multiplication. Empty set gives {1}.
inline MulGroup group_generated(const FieldPtr& field, const std::vector<Fe>& gens) {
  for (const auto& g : gens)
    if (g.is_zero()) throw std::invalid_argument("zero cannot generate a multiplicative group");
  std::set<Fe> s;
  s.insert(field->one());
  std::vector<Fe> frontier(s.begin(), s.end());
  while (!frontier.empty()) {
    std::vector<Fe> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Fe y = field->mul(x, g);
        if (s.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return MulGroup{field, std::vector<Fe>(s.begin(), s.end())};
}

/// Subgroup of order n of the (cyclic) group F_q^*; requires n | q - 1.
inline MulGroup subgroup_of_order(const FieldPtr& field, i64 n) {
  auto g = field->primitive_mth_root(n);
  if (!g) throw std::invalid_argument("no subgroup of that order");
  return group_generated(field, {*g});
}

/// Field homomorphism F_{p^a} -> F_{p^b} with a | b; the generator of the
/// source maps to the lex-smallest root of the source modulus in the target.
struct FieldHom {
  FieldPtr src;
  FieldPtr dst;
  Fe gen_image;

  Fe operator()(const Fe& x) const {
    if (!x.field || !x.field->same_as(*src))
      throw std::invalid_argument("element not in the source field");
    Fe acc = dst->zero();
    for (int i = src->e() - 1; i >= 0; --i)
      acc = dst->add(dst->mul(acc, gen_image), dst->from_int(x.c[i]));
    return acc;
  }
};

inline FieldHom embed_field(const FieldPtr& src, const FieldPtr& dst) {
  if (src->p() != dst->p()) throw std::invalid_argument("embedding requires equal characteristic");
  if (dst->e() % src->e() != 0) throw std::invalid_argument("source degree must divide target degree");
  if (src->e() == 1) return FieldHom{src, dst, dst->zero()};
  if (src->same_as(*dst)) {
    // identity: generator maps to itself
    std::vector<i64> g(dst->e(), 0);
    g[1] = 1;
    return FieldHom{src, dst, dst->from_coeffs(g)};
  }
  const auto& mod = src->modulus();
  for (i64 i = 0; i < dst->q(); ++i) {
    Fe x = dst->element_at(i);
    Fe acc = dst->zero();
    for (int k = static_cast<int>(mod.size()) - 1; k >= 0; --k)
      acc = dst->add(dst->mul(acc, x), dst->from_int(mod[k]));
    if (acc.is_zero()) return FieldHom{src, dst, x};
  }
  throw std::logic_error("no root of source modulus in target field");
}

}  // namespace lrslab

#endif  // LRSLAB_FIELD_HPP
