#include "smoothram/correlations.hpp"

#include <numeric>
#include <stdexcept>

namespace smoothram {

namespace {

Rational integer_q(u64 n) { return make_rational(n, u64{1}); }

// |C'(d)| <= 2^omega(d) max|C| and omega(d) <= pi(V) on V-smooth d.
Rational smooth_transform_bound(const CorrelationTable& table, const SmoothContext& ctx) {
  Integer two_pi;
  mpz_ui_pow_ui(two_pi.get_mpz_t(), 2, ctx.prime_count());
  return Rational(two_pi) * table.max_abs();
}

}  // namespace

BasicHypothesisWitness basic_hypothesis(const RangeQFunction& g, u64 length) {
  BasicHypothesisWitness w;
  w.range_ok = g.range() <= length;
  return w;
}

u64 correlation_period(u64 range) {
  u64 period = 1;
  for (u64 k = 2; k <= range; ++k) period = lcm_checked(period, k);
  return period;
}

Rational correlation(const ArithmeticFunction& f, const RangeQFunction& g, u64 length, u64 a) {
  if (!basic_hypothesis(g, length).valid()) {
    throw std::invalid_argument("correlation: g has range " + std::to_string(g.range()) +
                                " > N = " + std::to_string(length));
  }
  if (a == 0) throw std::invalid_argument("correlation: shift must be positive");
  Rational sum = 0;
  for (u64 n = 1; n <= length; ++n) {
    const Rational fn = f.value(n);
    if (fn != 0) sum += fn * g.value(n + a);
  }
  return sum;
}

CorrelationTable::CorrelationTable(ArithmeticFunction f, RangeQFunction g, u64 length,
                                   u64 transform_bound)
    : f_(std::move(f)), g_(std::move(g)), length_(length), transform_bound_(transform_bound) {
  if (length == 0) throw std::invalid_argument("CorrelationTable: N must be positive");
  if (!witness().valid()) {
    throw std::invalid_argument("CorrelationTable: g has range " + std::to_string(range()) +
                                " > N = " + std::to_string(length));
  }
  period_ = correlation_period(range());

  std::vector<Rational> f_values;
  f_values.reserve(length);
  for (u64 n = 1; n <= length; ++n) f_values.push_back(f_.value(n));
  const ScaledIntegers fs = ScaledIntegers::from(f_values);
  const ScaledIntegers gs = ScaledIntegers::from(
      std::vector<Rational>(g_.gprime_values().begin(), g_.gprime_values().end()));
  denominator_ = fs.denominator * gs.denominator;

  // g(m) * gs.denominator on [1, N + 2 period] by a divisor sieve.
  const u64 span = length + 2 * period_;
  std::vector<Integer> g_num(span + 1);
  for (u64 d = 1; d <= range(); ++d) {
    const Integer& w = gs.numerators[d - 1];
    if (w == 0) continue;
    for (u64 m = d; m <= span; m += d) g_num[m] += w;
  }

  std::vector<u64> support;
  for (u64 n = 1; n <= length; ++n) {
    if (fs.numerators[n - 1] != 0) support.push_back(n);
  }
  std::vector<Integer> two_periods(2 * period_ + 1);
  for (u64 a = 1; a <= 2 * period_; ++a) {
    Integer& acc = two_periods[a];
    for (u64 n : support) {
      mpz_addmul(acc.get_mpz_t(), fs.numerators[n - 1].get_mpz_t(), g_num[n + a].get_mpz_t());
    }
  }
  for (u64 a = 1; a <= period_; ++a) {
    if (two_periods[a] != two_periods[a + period_]) {
      throw PeriodicityError("C(N, a) is not periodic with period " + std::to_string(period_) +
                             " at a = " + std::to_string(a));
    }
  }
  numerators_.assign(two_periods.begin() + 1, two_periods.begin() + 1 + period_);

  Integer max_num = 0;
  even_ = true;
  for (u64 a = 1; a <= period_; ++a) {
    const Integer& v = numerators_[a - 1];
    if (abs(v) > max_num) max_num = abs(v);
    if (even_ && v != numerators_[std::gcd(a, period_) - 1]) even_ = false;
  }
  max_abs_ = Rational(max_num, denominator_);
  max_abs_.canonicalize();

  // C' = C * mu by the prime-wise sieve on numerators.
  transform_numerators_.resize(transform_bound_);
  for (u64 d = 1; d <= transform_bound_; ++d) {
    transform_numerators_[d - 1] = numerators_[(d - 1) % period_];
  }
  for (u64 p : primes_up_to(transform_bound_)) {
    for (u64 i = (transform_bound_ / p) * p; i >= p; i -= p) {
      transform_numerators_[i - 1] -= transform_numerators_[i / p - 1];
    }
  }

  shifted_.resize(range());
  for (u64 q = 1; q <= range(); ++q) {
    if (g_.ghat(q) == 0) continue;
    const RamanujanSum c(q);
    auto& row = shifted_[q - 1];
    row.assign(q, Rational(0));
    for (u64 r = 0; r < q; ++r) {
      for (u64 n : support) {
        row[r] += f_values[n - 1] * Rational(static_cast<long>(c.at_residue((n + r) % q)));
      }
    }
  }
}

Rational CorrelationTable::value(u64 a) const {
  if (a == 0) throw std::out_of_range("CorrelationTable: shift must be positive");
  Rational v(numerators_[(a - 1) % period_], denominator_);
  v.canonicalize();
  return v;
}

Rational CorrelationTable::transform(u64 d) const {
  if (d == 0) throw std::out_of_range("CorrelationTable: d must be positive");
  if (d <= transform_bound_) {
    Rational v(transform_numerators_[d - 1], denominator_);
    v.canonicalize();
    return v;
  }
  if (even_ && period_ % d != 0) return 0;
  Integer acc = 0;
  for (u64 t : divisors(d)) {
    const int m = mobius(d / t);
    if (m > 0) acc += numerators_[(t - 1) % period_];
    if (m < 0) acc -= numerators_[(t - 1) % period_];
  }
  Rational v(acc, denominator_);
  v.canonicalize();
  return v;
}

Rational CorrelationTable::shifted_ramanujan_sum(u64 q, u64 r) const {
  if (q == 0 || q > range()) throw std::out_of_range("shifted_ramanujan_sum: q outside [1, Q]");
  const auto& row = shifted_[q - 1];
  if (!row.empty()) return row[r % q];
  Rational sum = 0;
  const RamanujanSum c(q);
  for (u64 n = 1; n <= length_; ++n) {
    sum += f_.value(n) * Rational(static_cast<long>(c.at_residue((n + r) % q)));
  }
  return sum;
}

Rational CorrelationTable::twisted_sum(u64 ell) const {
  const RamanujanSum c(ell);
  Rational sum = 0;
  for (u64 n = 1; n <= length_; ++n) {
    sum += f_.value(n) * Rational(static_cast<long>(c(static_cast<i64>(n))));
  }
  return sum;
}

Rational prop1_decomposition(const CorrelationTable& table, u64 a) {
  Rational sum = 0;
  for (u64 q = 1; q <= table.range(); ++q) {
    const Rational h = table.g().ghat(q);
    if (h != 0) sum += h * table.shifted_ramanujan_sum(q, a);
  }
  return sum;
}

Rational correlation_coefficient(const CorrelationTable& table, u64 ell) {
  if (ell == 0) throw std::invalid_argument("correlation_coefficient: l must be positive");
  if (ell > table.range()) return 0;
  const Rational h = table.g().ghat(ell);
  if (h == 0) return 0;
  return h / integer_q(euler_phi(ell)) * table.twisted_sum(ell);
}

Rational correlation_carmichael_mean(const CorrelationTable& table, u64 ell) {
  return carmichael_periodic_exact([&](u64 a) { return table.value(a); }, table.period(), ell);
}

std::optional<Rational> correlation_wintner_exact(const CorrelationTable& table, u64 ell) {
  if (!table.is_even()) return std::nullopt;
  Rational sum = 0;
  if (table.period() % ell != 0) return sum;
  for (u64 d : divisors(table.period())) {
    if (d % ell == 0) sum += table.transform(d) / integer_q(d);
  }
  return sum;
}

Rational correlation_wintner_partial(const CorrelationTable& table, u64 ell, u64 cutoff) {
  Rational sum = 0;
  for (u64 d = ell; d <= cutoff; d += ell) sum += table.transform(d) / integer_q(d);
  return sum;
}

Rational smooth_restricted_correlation(const CorrelationTable& table, const SmoothContext& ctx,
                                       u64 a) {
  Rational sum = 0;
  for (u64 d : divisors(smooth_part(a, ctx))) sum += table.transform(d);
  return sum;
}

Rational smooth_restricted_correlation_switch(const CorrelationTable& table,
                                              const SmoothContext& ctx, u64 a) {
  Rational sum = 0;
  for (u64 t : divisors(a)) {
    if (is_smooth(t, ctx) && is_sifted(a / t, ctx)) sum += table.value(t);
  }
  return sum;
}

BoundedValue smooth_wintner(const CorrelationTable& table, const SmoothContext& ctx, u64 ell,
                            const Truncation& trunc) {
  if (ell == 0) throw std::invalid_argument("smooth_wintner: l must be positive");
  if (!is_smooth(ell, ctx)) return BoundedValue::exact(0);
  if (table.is_even()) {
    Rational sum = 0;
    if (table.period() % ell == 0) {
      for (u64 d : divisors(table.period())) {
        if (d % ell == 0 && is_smooth(d, ctx)) sum += table.transform(d) / integer_q(d);
      }
    }
    return BoundedValue::exact(sum);
  }
  const u64 y = trunc.cutoff / ell;
  Rational sum = 0;
  if (y > 0) {
    for (u64 k : smooth_up_to(ctx, y)) {
      const u64 d = ell * k;
      sum += table.transform(d) / integer_q(d);
    }
  }
  const Rational k_tail = y == 0 ? ctx.smooth_harmonic() : smooth_reciprocal_tail(ctx, y);
  return {sum, smooth_transform_bound(table, ctx) / integer_q(ell) * k_tail};
}

BoundedValue smooth_carmichael(const CorrelationTable& table, const SmoothContext& ctx, u64 ell,
                               const Truncation& trunc) {
  if (ell == 0) throw std::invalid_argument("smooth_carmichael: l must be positive");
  if (!is_smooth(ell, ctx)) return BoundedValue::exact(0);
  const Rational scale = ctx.totient_product() / integer_q(euler_phi(ell));
  const RamanujanSum c(ell);
  Rational sum = 0;
  for (u64 t : smooth_up_to(ctx, trunc.cutoff)) {
    const i64 ct = c(static_cast<i64>(t));
    if (ct != 0) sum += table.value(t) * Rational(static_cast<long>(ct)) / integer_q(t);
  }
  const Rational tail = table.max_abs() * smooth_gcd_tail(ctx, ell, trunc.cutoff);
  return {scale * sum, scale * tail};
}

Corollary2Report corollary2_identity(const CorrelationTable& table, const SmoothContext& ctx,
                                     u64 ell, const Truncation& trunc) {
  Corollary2Report r;
  r.ell = ell;
  r.coefficient = correlation_coefficient(table, ell);
  r.smooth_part = smooth_wintner(table, ctx, ell, trunc);
  r.smooth_part_carmichael = smooth_carmichael(table, ctx, ell, trunc);
  r.nonsmooth_tail = {r.coefficient - r.smooth_part.center, r.smooth_part.radius};
  for (u64 d = ell; d <= 2 * trunc.cutoff; d += ell) {
    if (is_smooth(d, ctx)) continue;
    const Rational term = table.transform(d) / integer_q(d);
    if (d <= trunc.cutoff) r.nonsmooth_partial += term;
    r.nonsmooth_partial_double += term;
  }
  r.consistent = r.smooth_part.intersects(r.smooth_part_carmichael);
  return r;
}

BoundedValue asymptotic_reef_tail(const CorrelationTable& table, const SmoothContext& ctx,
                                  u64 a, u64 max_index, const Truncation& trunc) {
  if (a == 0) throw std::invalid_argument("asymptotic_reef_tail: a must be positive");
  if (max_index < table.range()) {
    throw std::invalid_argument("asymptotic_reef_tail: L must be >= Q");
  }
  BoundedValue total = BoundedValue::exact(0);
  for (u64 ell : smooth_up_to(ctx, max_index)) {
    const i64 c = ramanujan_sum(ell, static_cast<i64>(a));
    if (c == 0) continue;
    const BoundedValue nonsmooth =
        BoundedValue::exact(correlation_coefficient(table, ell)) -
        smooth_wintner(table, ctx, ell, trunc);
    total += nonsmooth * Rational(static_cast<long>(c));
  }
  // For l > L >= Q the coefficient vanishes; |smooth part| <= B H_V / l and
  // |c_l(a)| <= (l, a). An even C has no smooth part beyond its period.
  const bool none_left = table.is_even() && max_index >= table.period();
  if (!none_left) {
    total.radius += smooth_transform_bound(table, ctx) * ctx.smooth_harmonic() *
                    smooth_gcd_tail(ctx, a, max_index);
  }
  return total;
}

}  // namespace smoothram
