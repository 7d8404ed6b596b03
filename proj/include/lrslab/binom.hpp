#ifndef LRSLAB_BINOM_HPP
#define LRSLAB_BINOM_HPP

// Generalized binomial coefficients C(n, j) for n, j in Z, defined by the
// Pascal recurrence together with C(n, 0) = 1 for all n, C(0, j) = 0 for
// j != 0, and the reflection C(n+j-1, j) = (-1)^j C(-n, j).
// Consequences used here: C(n, j) = 0 for j < 0, and for n < 0
// C(n, j) = (-1)^j C(-n+j-1, j).

#include <stdexcept>

#include "lrslab/field.hpp"

namespace lrslab {

namespace detail {
inline i64 binom_nonneg(i64 n, i64 j) {
  // exact C(n, j) for n >= 0; ranges here are small, guard overflow anyway
  if (j < 0 || j > n) return 0;
  if (j > n - j) j = n - j;
  i64 r = 1;
  for (i64 i = 1; i <= j; ++i) {
    i64 num = n - j + i;
    i64 g = std::gcd(r, i);
    i64 ri = r / g, ii = i / g;
    if (num % ii != 0) throw std::overflow_error("binom: non-integral step");
    if (ri > (i64(1) << 62) / num) throw std::overflow_error("binom overflow");
    r = ri * (num / ii);
  }
  return r;
}
}  // namespace detail

/// Exact generalized binomial coefficient over Z.
inline i64 binom_int(i64 n, i64 j) {
  if (j < 0) return 0;
  if (j == 0) return 1;
  if (n >= 0) return detail::binom_nonneg(n, j);
  i64 v = detail::binom_nonneg(-n + j - 1, j);
  return (j % 2 == 0) ? v : -v;
}

/// C(n, j) mod p for any integer n, by Lucas' theorem plus reflection.
inline i64 binom_mod(i64 n, i64 j, i64 p) {
  if (!detail::is_prime_i64(p)) throw std::invalid_argument("binom_mod needs prime p");
  if (j < 0) return 0;
  if (j == 0) return 1;
  i64 sign = 1;
  if (n < 0) {
    n = -n + j - 1;
    if (j % 2 != 0) sign = -1;
  }
  if (j > n) return 0;
  i64 r = 1;
  i64 nn = n, jj = j;
  while (jj > 0 || nn > 0) {
    i64 nd = nn % p, jd = jj % p;
    if (jd > nd) return 0;
    r = r * (detail::binom_nonneg(nd, jd) % p) % p;
    nn /= p;
    jj /= p;
  }
  return ((sign * r) % p + p) % p;
}

/// Closed form of S(n, j) = sum_i (-1)^i C(m, i) C(n-i, j) mod p:
/// 0 for 0 <= j <= m-1, and C(n-m, j-m) mod p for j >= m.
inline i64 s_of_nj_identity(i64 m, i64 n, i64 j, i64 p) {
  if (m < 1 || n < m || j < 0) throw std::invalid_argument("s_of_nj_identity: need m >= 1, n >= m, j >= 0");
  if (j <= m - 1) return 0;
  return binom_mod(n - m, j - m, p);
}

/// Minimal period of n -> C(n, j) mod p: p^r with p^{r-1} <= j < p^r,
/// verified by direct scan.
inline i64 binom_seq_period(i64 j, i64 p) {
  if (j < 1) throw std::invalid_argument("binom_seq_period needs j >= 1");
  if (!detail::is_prime_i64(p)) throw std::invalid_argument("binom_seq_period needs prime p");
  i64 period = p;
  while (period <= j) period *= p;
  // verify: period is a period ...
  for (i64 n = -period; n < period; ++n)
    if (binom_mod(n, j, p) != binom_mod(n + period, j, p))
      throw std::logic_error("binom_seq_period: claimed period fails");
  // ... and no proper divisor is (divisors of p^r are smaller powers of p)
  if (period > p) {
    i64 d = period / p;
    bool witness = false;
    for (i64 n = 0; n < period && !witness; ++n)
      witness = binom_mod(n, j, p) != binom_mod(n + d, j, p);
    if (!witness) throw std::logic_error("binom_seq_period: period not minimal");
  }
  return period;
}

}  // namespace lrslab

#endif  // LRSLAB_BINOM_HPP
