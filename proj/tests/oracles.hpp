#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the rational type.

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "smoothram/rational.hpp"

namespace oracle {

using smoothram::Rational;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline int mobius(u64 n) {
  int sign = 1;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

inline u64 phi(u64 n) {
  u64 count = 0;
  for (u64 k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

/// sum over reduced residues a mod q of cos(2 pi a n / q).
inline double ramanujan_exp_sum(u64 q, i64 n) {
  double s = 0;
  for (u64 a = 1; a <= q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    const double angle = 2 * std::numbers::pi * static_cast<double>(a) *
                         static_cast<double>(((n % static_cast<i64>(q)) + static_cast<i64>(q)) %
                                             static_cast<i64>(q)) /
                         static_cast<double>(q);
    s += std::cos(angle);
  }
  return s;
}

inline bool is_smooth(u64 n, u64 bound) {
  for (u64 p = 2; p <= bound && n > 1; ++p) {
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

inline bool is_sifted(u64 n, u64 bound) {
  for (u64 p = 2; p <= bound && p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

/// g(m) = sum_{d | m, d <= Q} g'(d) by trial division.
inline Rational range_q_value(const std::vector<Rational>& gprime, u64 m) {
  Rational s = 0;
  for (u64 d = 1; d <= gprime.size(); ++d) {
    if (m % d == 0) s += gprime[d - 1];
  }
  return s;
}

}  // namespace oracle
