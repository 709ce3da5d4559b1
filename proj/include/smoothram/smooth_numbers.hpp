#pragma once

// Q-smooth and Q-sifted integers. Series over smooth numbers get exact
// Euler products or certified tail bounds.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "smoothram/arith_core.hpp"

namespace smoothram {

/// A smoothness bound Q >= 2 with its primes and exact Euler products.
/// Q need not be prime; only the primes <= Q matter.
class SmoothContext {
 public:
  explicit SmoothContext(u64 bound);

  u64 bound() const { return bound_; }
  const std::vector<u64>& primes() const { return primes_; }
  std::size_t prime_count() const { return primes_.size(); }
  /// prod_{p <= Q} (1 - 1/p)
  const Rational& totient_product() const { return totient_product_; }
  /// prod_{p <= Q} (1 - 1/p)^{-1} = sum_{t smooth} 1/t
  const Rational& smooth_harmonic() const { return smooth_harmonic_; }
  /// P_Q = prod_{p <= Q} p
  const Integer& primorial() const { return primorial_; }

 private:
  u64 bound_;
  std::vector<u64> primes_;
  Rational totient_product_;
  Rational smooth_harmonic_;
  Integer primorial_;
};

bool is_smooth(u64 n, const SmoothContext& ctx);
bool is_sifted(u64 n, const SmoothContext& ctx);
/// The unique t in (Q) with n / t in )Q(.
u64 smooth_part(u64 n, const SmoothContext& ctx);

/// Q-smooth integers in [1, X], ascending. Generated by a min-heap merge
/// over exponent vectors; each n is produced once from its largest prime.
std::vector<u64> smooth_up_to(const SmoothContext& ctx, u64 limit);

struct SiftedCount {
  u64 count;
  Rational main_term;  // prod(1 - 1/p) * X
  /// |count - main_term| <= error_bound = 2^{pi(Q)}
  Integer error_bound;
};

/// Inclusion-exclusion count sum_{d | P_Q} mu(d) floor(X/d).
SiftedCount sifted_count(const SmoothContext& ctx, u64 limit);

/// sum_{m smooth} m^s = prod_{p <= Q} (1 - p^s)^{-1} for a negative integer s.
Rational smooth_power_series(const SmoothContext& ctx, const Rational& s);

/// Rankin parameters: exponent epsilon of the majorant t^{epsilon - 1},
/// Rankin shift delta and truncation point X.
struct TailParams {
  Rational epsilon;
  Rational delta;
  u64 truncation = 1;

  /// Throws std::invalid_argument unless 0 <= epsilon, 0 < delta and
  /// epsilon + delta < 1 and truncation >= 1.
  void validate() const;
};

/// Certified B with sum_{t smooth, t > X} t^{epsilon - 1} <= B, where
/// B = X^{-delta} prod_p (1 - p^{epsilon + delta - 1})^{-1} with every
/// irrational power rounded in the safe direction.
Rational rankin_tail_bound(const SmoothContext& ctx, const TailParams& params);

struct RankinChoice {
  Rational delta;
  Rational bound;
};

/// Grid search delta in {1/16, 2/16, ...} (epsilon + delta < 1) for the
/// smallest Rankin bound.
RankinChoice rankin_tail_bound_auto(const SmoothContext& ctx, const Rational& epsilon,
                                    u64 truncation);

/// Upper bound on prod_p (1 - p^s)^{-1} for rational s < 0.
Rational euler_product_upper(const SmoothContext& ctx, const Rational& s);

/// sum_{t smooth, t > X} 1/t, exactly.
Rational smooth_reciprocal_tail(const SmoothContext& ctx, u64 limit);

/// Certified upper bound on sum_{t smooth, t > Y} t^{epsilon - 1}, Y >= 0
/// (Y = 0 bounds the whole series). epsilon = 0 is exact; otherwise Rankin
/// with the given delta, or the best grid delta when none is given.
Rational smooth_power_tail(const SmoothContext& ctx, const Rational& epsilon, u64 after,
                           const std::optional<Rational>& delta = std::nullopt);

/// Closed-form sum_{t smooth} w(t)/t for weights that only depend on
/// min(v_p(t), caps[i]) for each prime p = primes()[i]. The weight is
/// called on the capped representative prod p^{min(v_p, cap)}.
Rational capped_smooth_series(const SmoothContext& ctx, std::span<const unsigned> caps,
                              const std::function<Rational(u64)>& weight);

/// Caps large enough for functions of gcd(t, m): v_p(m) for each p <= Q.
std::vector<unsigned> valuation_caps(const SmoothContext& ctx, u64 m);

/// sum_{t in (Q), t > Y} w(t)/t, exactly, for a capped weight as above.
/// Y = 0 gives the whole series.
Rational capped_smooth_tail(const SmoothContext& ctx, std::span<const unsigned> caps,
                            const std::function<Rational(u64)>& weight, u64 after);

/// sum_{t in (Q), t > Y} (m, t)/t, exactly.
Rational smooth_gcd_tail(const SmoothContext& ctx, u64 m, u64 after);

}  // namespace smoothram
