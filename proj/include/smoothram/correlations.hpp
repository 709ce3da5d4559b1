#pragma once

// Fair shifted convolution sums C_{f,g}(N, a) = sum_{n <= N} f(n) g(n + a)
// with g of range Q. C is periodic in a, so everything is read off a table
// over two periods.

#include <optional>
#include <vector>

#include "smoothram/bounded_value.hpp"
#include "smoothram/coefficients.hpp"
#include "smoothram/transforms.hpp"

namespace smoothram {

/// g of range Q <= N, and the shift only enters through g's argument. The
/// second part holds by construction: f and g are shift-free objects.
struct BasicHypothesisWitness {
  bool range_ok = false;
  bool fair = true;
  bool valid() const { return range_ok && fair; }
};

BasicHypothesisWitness basic_hypothesis(const RangeQFunction& g, u64 length);

/// Direct sum over n <= N. Throws std::invalid_argument if Q > N.
Rational correlation(const ArithmeticFunction& f, const RangeQFunction& g, u64 length, u64 a);

/// lcm(1, ..., Q); 1 for Q = 1.
u64 correlation_period(u64 range);

class CorrelationTable {
 public:
  /// Builds C(a) over two periods (auditing periodicity) and C'(d) for
  /// d <= transform_bound. Throws std::invalid_argument on a BH violation and
  /// PeriodicityError if the audit fails.
  CorrelationTable(ArithmeticFunction f, RangeQFunction g, u64 length,
                   u64 transform_bound = 20000);

  const ArithmeticFunction& f() const { return f_; }
  const RangeQFunction& g() const { return g_; }
  u64 length() const { return length_; }
  u64 range() const { return g_.range(); }
  u64 period() const { return period_; }
  u64 transform_bound() const { return transform_bound_; }
  BasicHypothesisWitness witness() const { return basic_hypothesis(g_, length_); }

  /// C(N, a) for any a >= 1 (periodic lookup).
  Rational value(u64 a) const;
  /// C'(N, d); cached for d <= transform_bound, computed directly beyond.
  Rational transform(u64 d) const;
  /// max_a |C(N, a)| over one period.
  const Rational& max_abs() const { return max_abs_; }
  /// True when C(a) depends only on gcd(a, period); then C' vanishes off
  /// the divisors of the period.
  bool is_even() const { return even_; }

  /// sum_{n <= N} f(n) c_q(n + r) for q <= Q, any r >= 0.
  Rational shifted_ramanujan_sum(u64 q, u64 r) const;
  /// sum_{n <= N} f(n) c_l(n).
  Rational twisted_sum(u64 ell) const;

 private:
  ArithmeticFunction f_;
  RangeQFunction g_;
  u64 length_;
  u64 period_;
  u64 transform_bound_;
  std::vector<Integer> numerators_;  // C(a) * denominator_, a in [1, period]
  Integer denominator_;
  std::vector<Integer> transform_numerators_;  // C'(d) * denominator_, d <= bound
  Rational max_abs_;
  bool even_ = false;
  std::vector<std::vector<Rational>> shifted_;  // [q - 1][r], q with ghat(q) != 0
};

/// sum_{q <= Q} ghat(q) sum_{n <= N} f(n) c_q(n + a).
Rational prop1_decomposition(const CorrelationTable& table, u64 a);

/// (ghat(l) / phi(l)) sum_{n <= N} f(n) c_l(n); 0 for l > Q.
Rational correlation_coefficient(const CorrelationTable& table, u64 ell);

/// Cesaro mean of C against c_l over one period, divided by phi(l).
Rational correlation_carmichael_mean(const CorrelationTable& table, u64 ell);

/// Exact Wintner series sum_{l | d} C'(d)/d when C is even, else nullopt.
std::optional<Rational> correlation_wintner_exact(const CorrelationTable& table, u64 ell);

/// Uncertified partial sum sum_{d <= X, l | d} C'(d)/d.
Rational correlation_wintner_partial(const CorrelationTable& table, u64 ell, u64 cutoff);

/// G_(V)(a) = sum_{d | a, d in (V)} C'(d).
Rational smooth_restricted_correlation(const CorrelationTable& table, const SmoothContext& ctx,
                                       u64 a);
/// The same through the Mobius switch on table values.
Rational smooth_restricted_correlation_switch(const CorrelationTable& table,
                                              const SmoothContext& ctx, u64 a);

/// sum_{d in (V), l | d} C'(d)/d, certified from |C'(d)| <= 2^pi(V) max|C|
/// on V-smooth d. Exact when C is even.
BoundedValue smooth_wintner(const CorrelationTable& table, const SmoothContext& ctx, u64 ell,
                            const Truncation& trunc = {});

/// prod(1 - 1/p) / phi(l) sum_{t in (V)} C(t) c_l(t)/t, certified from
/// |C(t) c_l(t)| <= max|C| (l, t). Exactly 0 for l not in (V).
BoundedValue smooth_carmichael(const CorrelationTable& table, const SmoothContext& ctx, u64 ell,
                               const Truncation& trunc = {});

struct Corollary2Report {
  u64 ell = 1;
  Rational coefficient;             // (ghat(l)/phi(l)) sum f(n) c_l(n)
  BoundedValue smooth_part;         // transform side
  BoundedValue smooth_part_carmichael;
  BoundedValue nonsmooth_tail;      // coefficient - smooth_part
  Rational nonsmooth_partial;       // uncertified, d <= X
  Rational nonsmooth_partial_double;  // uncertified, d <= 2X
  bool consistent = false;          // both smooth-part evaluations intersect
};

/// Splits the full Wintner series of C at (V) into smooth and non-smooth d.
Corollary2Report corollary2_identity(const CorrelationTable& table, const SmoothContext& ctx,
                                     u64 ell, const Truncation& trunc = {});

/// sum_{l in (V), l <= L} (sum_{d not in (V), l | d} C'(d)/d) c_l(a) with a
/// certified bound for l > L. Needs L >= Q.
BoundedValue asymptotic_reef_tail(const CorrelationTable& table, const SmoothContext& ctx,
                                  u64 a, u64 max_index, const Truncation& trunc = {});

}  // namespace smoothram
