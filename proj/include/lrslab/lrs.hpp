#ifndef LRSLAB_LRS_HPP
#define LRSLAB_LRS_HPP

// Linear recurring sequences: generation from a recursion, period detection,
// the s~ window polynomial, the minimal-recursion gcd formula
// f_s = (x^m - 1) / (x^m - 1, s~), and the spectral (sum of c_i alpha_i^n)
// decomposition of a periodic sequence.

#include "lrslab/binom.hpp"
#include "lrslab/poly.hpp"

namespace lrslab {

/// One minimal-period window of a bi-infinite periodic sequence.
class PeriodicSeq {
 public:
  /// Builds from any window; the stored window is trimmed to the minimal
  /// period of the periodic extension (smallest divisor d of the window
  /// length with w[i] == w[i mod d]).
  static PeriodicSeq from_window(const FieldPtr& field, std::vector<Fe> w) {
    if (w.empty()) throw std::invalid_argument("empty window");
    for (const auto& x : w)
      if (!x.field || !x.field->same_as(*field))
        throw std::invalid_argument("window entry from a different field");
    size_t n = w.size();
    for (size_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      bool ok = true;
      for (size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i % d]);
      if (ok) {
        w.resize(d);
        return PeriodicSeq(field, std::move(w));
      }
    }
    return PeriodicSeq(field, std::move(w));  // unreachable (d = n always fits)
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<Fe>& window() const { return w_; }
  i64 period() const { return static_cast<i64>(w_.size()); }
  const Fe& at(i64 n) const {
    i64 m = period();
    return w_[static_cast<size_t>(((n % m) + m) % m)];
  }

 private:
  PeriodicSeq(FieldPtr f, std::vector<Fe> w) : field_(std::move(f)), w_(std::move(w)) {}
  FieldPtr field_;
  std::vector<Fe> w_;
};

/// A linear recurrence given by its monic characteristic polynomial f with
/// f(0) != 0 (so the recurrence runs in both directions).
class Recursion {
 public:
  explicit Recursion(Poly f) : f_(std::move(f)) {
    if (f_.is_zero()) throw std::invalid_argument("zero recursion polynomial");
    if (!f_.is_monic()) f_ = monic(f_);
    if (f_.degree() > 0 && f_.coeff(0).is_zero())
      throw std::invalid_argument("recursion needs nonzero constant term");
  }

  const Poly& poly() const { return f_; }
  int order() const { return f_.degree(); }

  /// s_n = c_{k-1} s_{n-1} + ... + c_0 s_{n-k} with c_i = -coeff(i) of f.
  Fe step_forward(const std::vector<Fe>& state) const {
    const auto& F = f_.field;
    Fe acc = F->zero();
    int k = order();
    for (int i = 0; i < k; ++i)
      acc = F->sub(acc, F->mul(f_.coeff(i), state[static_cast<size_t>(i)]));
    return acc;  // state = (s_{n-k}, ..., s_{n-1}) -> s_n
  }

  /// s_{n-k} = c_0^{-1} (s_n - c_{k-1} s_{n-1} - ... - c_1 s_{n-k+1})
  Fe step_backward(const std::vector<Fe>& state) const {
    const auto& F = f_.field;
    int k = order();
    // state = (s_{n-k+1}, ..., s_n); solve f(sigma) s = 0 for s_{n-k}
    Fe acc = F->zero();
    for (int i = 1; i <= k; ++i)
      acc = F->add(acc, F->mul(f_.coeff(i), state[static_cast<size_t>(i - 1)]));
    return F->neg(F->div(acc, f_.coeff(0)));
  }

 private:
  Poly f_;
};

/// Forward terms s_0, ..., s_{count-1} of the f-sequence with the given seed
/// (seed length must equal deg f). count may exceed the seed length.
inline std::vector<Fe> iterate(const Recursion& rec, const std::vector<Fe>& seed, i64 count) {
  int k = rec.order();
  if (static_cast<int>(seed.size()) != k) throw std::invalid_argument("seed length must equal recursion order");
  if (count < 0) throw std::invalid_argument("count must be >= 0");
  std::vector<Fe> out = seed;
  if (static_cast<i64>(out.size()) >= count) {
    out.resize(static_cast<size_t>(count), rec.poly().field->zero());
    return out;
  }
  out.reserve(static_cast<size_t>(count));
  std::vector<Fe> state(seed.begin(), seed.end());
  while (static_cast<i64>(out.size()) < count) {
    Fe next = rec.step_forward(state);
    out.push_back(next);
    state.erase(state.begin());
    state.push_back(next);
  }
  return out;
}

/// Backward terms s_{-1}, s_{-2}, ..., s_{-count} (in that order).
inline std::vector<Fe> iterate_back(const Recursion& rec, const std::vector<Fe>& seed, i64 count) {
  int k = rec.order();
  if (static_cast<int>(seed.size()) != k) throw std::invalid_argument("seed length must equal recursion order");
  std::vector<Fe> out;
  out.reserve(static_cast<size_t>(count));
  std::vector<Fe> state(seed.begin(), seed.end());  // (s_{n-k+1..n}) with n = k-1
  for (i64 i = 0; i < count; ++i) {
    Fe prev = rec.step_backward(state);
    out.push_back(prev);
    state.pop_back();
    state.insert(state.begin(), prev);
  }
  return out;
}

/// Minimal period of the bi-infinite f-sequence with the given seed: the
/// first return of the state vector to its initial value. Zero seed gives 1.
inline i64 detect_period(const Recursion& rec, const std::vector<Fe>& seed) {
  int k = rec.order();
  if (static_cast<int>(seed.size()) != k) throw std::invalid_argument("seed length must equal recursion order");
  if (k == 0) return 1;
  bool zero = std::all_of(seed.begin(), seed.end(), [](const Fe& x) { return x.is_zero(); });
  if (zero) return 1;
  std::vector<Fe> state = seed;
  i64 n = 0;
  // purely periodic since f(0) != 0; the state walk is a pure cycle
  do {
    Fe next = rec.step_forward(state);
    state.erase(state.begin());
    state.push_back(next);
    ++n;
  } while (state != seed);
  return n;
}

/// s~(x) = s_0 x^{m-1} + s_1 x^{m-2} + ... + s_{m-1}.
inline Poly s_tilde(const PeriodicSeq& s) {
  i64 m = s.period();
  std::vector<Fe> c(static_cast<size_t>(m), s.field()->zero());
  for (i64 i = 0; i < m; ++i) c[static_cast<size_t>(m - 1 - i)] = s.window()[static_cast<size_t>(i)];
  return Poly::from_fes(s.field(), std::move(c));
}

/// The impulse sequence u^(m) with window (0, ..., 0, 1); its minimal
/// recursion is x^m - 1.
inline PeriodicSeq impulse(i64 m, const FieldPtr& field) {
  if (m < 1) throw std::invalid_argument("impulse needs m >= 1");
  std::vector<Fe> w(static_cast<size_t>(m), field->zero());
  w.back() = field->one();
  return PeriodicSeq::from_window(field, std::move(w));
}

inline Poly xm_minus_1(const FieldPtr& field, i64 m) {
  std::vector<Fe> c(static_cast<size_t>(m) + 1, field->zero());
  c[0] = field->neg(field->one());
  c[static_cast<size_t>(m)] = field->one();
  return Poly::from_fes(field, std::move(c));
}

/// f_s = (x^m - 1) / (x^m - 1, s~).
inline Poly minimal_recursion(const PeriodicSeq& s) {
  i64 m = s.period();
  Poly num = xm_minus_1(s.field(), m);
  Poly g = gcd(num, s_tilde(s));
  return exact_div(num, g);
}

/// true iff the window satisfies the recursion f, i.e. f_s | f. A non-monic
/// f is normalized by its leading coefficient first.
inline bool is_f_sequence(const PeriodicSeq& s, const Poly& f) {
  if (f.is_zero()) return false;
  return divides(minimal_recursion(s), monic(f));
}

namespace detail {
/// Gaussian elimination over a field; returns the unique solution of A x = b
/// (A square and invertible expected at the call sites here).
inline std::vector<Fe> solve_linear(const FieldPtr& F, std::vector<std::vector<Fe>> a,
                                    std::vector<Fe> b) {
  size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Fe pinv = F->inv(a[col][col]);
    for (size_t j = col; j < n; ++j) a[col][j] = F->mul(a[col][j], pinv);
    b[col] = F->mul(b[col], pinv);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Fe factor = a[r][col];
      for (size_t j = col; j < n; ++j) a[r][j] = F->sub(a[r][j], F->mul(factor, a[col][j]));
      b[r] = F->sub(b[r], F->mul(factor, b[col]));
    }
  }
  return b;
}
}  // namespace detail

/// Spectral form of a periodic sequence with gcd(m, p) = 1: the roots
/// alpha_i of f_s in its splitting field together with the coefficients c_i
/// of s_n = sum c_i alpha_i^n. All roots are simple, so the inner coefficient
/// lists of the general theory collapse to single c_i here.
struct SpectralForm {
  FieldPtr split_field;
  FieldHom into_split;
  std::vector<std::pair<Fe, Fe>> terms;  // (root, coefficient)
};

inline SpectralForm spectral_decompose(const PeriodicSeq& s, int max_ext_degree = 6) {
  i64 m = s.period();
  if (m % s.field()->p() == 0)
    throw std::invalid_argument("spectral decomposition needs gcd(m, p) = 1");
  Poly fs = minimal_recursion(s);
  if (fs.degree() == 0) return SpectralForm{s.field(), embed_field(s.field(), s.field()), {}};
  RootSpectrum spec = roots_with_mult(fs, max_ext_degree);
  if (!spec.split_completely)
    throw std::domain_error("f_s did not split within the extension bound");
  const auto& E = spec.split_field;
  size_t t = spec.roots.size();
  // Vandermonde system s_n = sum c_i alpha_i^n, n = 0..t-1
  std::vector<std::vector<Fe>> a(t, std::vector<Fe>(t, E->zero()));
  std::vector<Fe> b(t, E->zero());
  for (size_t n = 0; n < t; ++n) {
    for (size_t i = 0; i < t; ++i) a[n][i] = E->pow(spec.roots[i].first, static_cast<i64>(n));
    b[n] = spec.into_split(s.window()[n % s.window().size()]);
  }
  std::vector<Fe> c = detail::solve_linear(E, std::move(a), std::move(b));
  SpectralForm out{E, spec.into_split, {}};
  for (size_t i = 0; i < t; ++i) out.terms.emplace_back(spec.roots[i].first, c[i]);
  // reconstruction must match the full window
  for (i64 n = 0; n < m; ++n) {
    Fe acc = E->zero();
    for (const auto& [root, coef] : out.terms)
      acc = E->add(acc, E->mul(coef, E->pow(root, n)));
    if (acc != spec.into_split(s.at(n)))
      throw std::logic_error("spectral reconstruction mismatch");
  }
  return out;
}

/// lcm of the multiplicative orders of the roots of f_s; equals the minimal
/// period m whenever gcd(m, p) = 1.
inline i64 lcm_order_check(const PeriodicSeq& s, int max_ext_degree = 6) {
  if (s.period() % s.field()->p() == 0)
    throw std::invalid_argument("lcm_order_check needs gcd(m, p) = 1");
  Poly fs = minimal_recursion(s);
  if (fs.degree() == 0) return 1;  // zero sequence
  RootSpectrum spec = roots_with_mult(fs, max_ext_degree);
  if (!spec.split_completely)
    throw std::domain_error("f_s did not split within the extension bound");
  i64 l = 1;
  for (const auto& [root, mult] : spec.roots) {
    (void)mult;
    l = std::lcm(l, spec.split_field->mul_order(root));
  }
  return l;
}

}  // namespace lrslab

#endif  // LRSLAB_LRS_HPP
