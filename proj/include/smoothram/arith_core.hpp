#pragma once

// Exact elementary arithmetic functions and finite-table Dirichlet algebra.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "smoothram/rational.hpp"

namespace smoothram {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

/// n together with its prime factorization, primes strictly ascending.
class FactoredInteger {
 public:
  explicit FactoredInteger(u64 n);

  u64 value() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

 private:
  u64 n_;
  std::vector<PrimePower> factors_;
};

/// All primes <= limit, ascending (plain sieve of Eratosthenes).
std::vector<u64> primes_up_to(u64 limit);

/// Trial-division factorization over a cached prime list. Rejects n = 0.
std::vector<PrimePower> factorize(u64 n);

int mobius(u64 n);
u64 euler_phi(u64 n);
unsigned omega(u64 n);
std::vector<u64> divisors(u64 n);
u64 lcm_checked(u64 a, u64 b);

/// c_q(n) = sum_{d | (q, n)} d mu(q/d), with (q, 0) = q. Rejects q = 0.
i64 ramanujan_sum(u64 q, i64 n);

/// c_q(.) for a fixed modulus; factors q once.
class RamanujanSum {
 public:
  explicit RamanujanSum(u64 q);

  u64 modulus() const { return q_; }
  i64 operator()(i64 n) const;
  /// Same value reduced to a residue in [0, q).
  i64 at_residue(u64 r) const;

 private:
  u64 q_;
  std::vector<PrimePower> factors_;
  std::vector<i64> by_residue_;
};

/// Exact values on [1, X]. Index 0 is never stored and is rejected.
class FunctionTable {
 public:
  /// values[k] is the value at n = k + 1.
  explicit FunctionTable(std::vector<Rational> values);

  static FunctionTable generate(u64 upper, const std::function<Rational(u64)>& f);

  u64 upper() const { return values_.size(); }
  const Rational& operator()(u64 n) const;
  std::span<const Rational> values() const { return values_; }

  bool operator==(const FunctionTable&) const = default;

 private:
  std::vector<Rational> values_;
};

/// F' = F * mu on the same window.
FunctionTable eratosthenes_transform(const FunctionTable& table);
/// F(n) = sum_{d | n} F'(d): the inverse of eratosthenes_transform.
FunctionTable inverse_transform(const FunctionTable& transform);
/// (a * b)(n) on the common window [1, min(Xa, Xb)].
FunctionTable dirichlet_convolution(const FunctionTable& a, const FunctionTable& b);

}  // namespace smoothram
