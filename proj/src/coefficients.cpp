#include "smoothram/coefficients.hpp"

#include <numeric>
#include <stdexcept>

namespace smoothram {

namespace {

Rational integer_q(u64 n) { return make_rational(n, u64{1}); }

Rational c_value(const RamanujanSum& c, u64 n) {
  return Rational(static_cast<long>(c(static_cast<i64>(n))));
}

// Upper bound on l^(eps - 1).
Rational index_factor(u64 ell, const Rational& eps) {
  if (eps == 0) return make_rational(u64{1}, ell);
  return pow_upper(integer_q(ell), eps - 1);
}

unsigned floor_log(u64 p, u64 d) {
  unsigned k = 0;
  for (u64 pk = p; pk <= d; pk *= p) {
    ++k;
    if (pk > d / p) break;
  }
  return k;
}

}  // namespace

BoundedValue wintner_restricted(const ArithmeticFunction& spec, const SmoothContext& ctx,
                                u64 ell, const Truncation& trunc) {
  if (ell == 0) throw std::invalid_argument("wintner_restricted: l must be positive");
  if (!is_smooth(ell, ctx)) return BoundedValue::exact(0);

  if (const auto& support = spec.transform_support()) {
    Rational sum = 0;
    if (ell <= *support) {
      for (u64 k : smooth_up_to(ctx, *support / ell)) {
        const u64 d = ell * k;
        sum += spec.transform(d) / integer_q(d);
      }
    }
    return BoundedValue::exact(sum);
  }

  const auto& cert = spec.transform_certificate();
  if (!cert) {
    throw CertificateError(spec.name() + ": Wintner series needs a transform growth certificate");
  }
  const u64 y = trunc.cutoff / ell;
  Rational sum = 0;
  if (y > 0) {
    for (u64 k : smooth_up_to(ctx, y)) {
      const u64 d = ell * k;
      sum += spec.transform(d) / integer_q(d);
    }
  }
  // |F'(lK)|/(lK) <= C l^(eps-1) K^(eps-1)
  const Rational radius = cert->constant * index_factor(ell, cert->exponent) *
                          smooth_power_tail(ctx, cert->exponent, y, trunc.delta);
  return {sum, radius};
}

BoundedValue carmichael_formula(const ArithmeticFunction& spec, const SmoothContext& ctx,
                                u64 ell, const Truncation& trunc) {
  if (ell == 0 || !is_smooth(ell, ctx)) {
    throw std::invalid_argument("carmichael_formula: l = " + std::to_string(ell) +
                                " is not smooth; the product formula only covers l in (V)");
  }
  const RamanujanSum c(ell);
  const Rational scale = ctx.totient_product() / integer_q(euler_phi(ell));

  if (const auto& support = spec.transform_support()) {
    // F(t) c_l(t) depends on v_p(t) only up to max(v_p(l), log_p D).
    std::vector<unsigned> caps = valuation_caps(ctx, ell);
    for (std::size_t i = 0; i < caps.size(); ++i) {
      caps[i] = std::max(caps[i], floor_log(ctx.primes()[i], *support));
    }
    const Rational series = capped_smooth_series(
        ctx, caps, [&](u64 rep) -> Rational { return spec.value(rep) * c_value(c, rep); });
    return BoundedValue::exact(scale * series);
  }

  const auto& cert = spec.value_certificate();
  if (!cert) {
    throw CertificateError(spec.name() + ": Carmichael formula needs a value growth certificate");
  }
  Rational sum = 0;
  for (u64 t : smooth_up_to(ctx, trunc.cutoff)) {
    sum += spec.value(t) * c_value(c, t) / integer_q(t);
  }
  // |c_l(t)| <= (l, t); for eps = 0 the gcd majorant tail is exact.
  const Rational tail =
      cert->exponent == 0
          ? smooth_gcd_tail(ctx, ell, trunc.cutoff)
          : Rational(integer_q(ell) *
                     smooth_power_tail(ctx, cert->exponent, trunc.cutoff, trunc.delta));
  return {scale * sum, scale * cert->constant * tail};
}

std::vector<std::pair<u64, Rational>> carmichael_empirical(const ArithmeticFunction& spec,
                                                           u64 ell,
                                                           const std::vector<u64>& xs) {
  const RamanujanSum c(ell);
  const Rational inv_phi = make_rational(u64{1}, euler_phi(ell));
  std::vector<std::pair<u64, Rational>> out;
  Rational running = 0;
  u64 n = 0;
  for (u64 x : xs) {
    if (x == 0 || x < n) throw std::invalid_argument("carmichael_empirical: xs must ascend");
    for (++n; n <= x; ++n) running += spec.value(n) * c_value(c, n);
    --n;
    out.emplace_back(x, inv_phi * running / integer_q(x));
  }
  return out;
}

Rational carmichael_periodic_exact(const std::function<Rational(u64)>& f, u64 period, u64 ell) {
  if (period == 0 || ell == 0) {
    throw std::invalid_argument("carmichael_periodic_exact: period and l must be positive");
  }
  for (u64 a = 1; a <= period; ++a) {
    if (f(a) != f(a + period)) {
      throw PeriodicityError("period " + std::to_string(period) + " fails at a = " +
                             std::to_string(a));
    }
  }
  const RamanujanSum c(ell);
  const u64 len = lcm_checked(period, ell);
  Rational sum = 0;
  for (u64 a = 1; a <= len; ++a) sum += f((a - 1) % period + 1) * c_value(c, a);
  return sum / (integer_q(len) * integer_q(euler_phi(ell)));
}

ExpansionResult re_expansion_partial(const ArithmeticFunction& spec, const SmoothContext& ctx,
                                     u64 a, u64 max_index, const Truncation& trunc) {
  if (a == 0 || max_index == 0) {
    throw std::invalid_argument("re_expansion_partial: a and L must be positive");
  }
  ExpansionResult out;
  out.partial = BoundedValue::exact(0);
  for (u64 ell : smooth_up_to(ctx, max_index)) {
    const i64 c = ramanujan_sum(ell, static_cast<i64>(a));
    if (c == 0) continue;
    out.partial += wintner_restricted(spec, ctx, ell, trunc) * Rational(static_cast<long>(c));
  }
  out.target = smooth_restrict(spec, ctx, a);
  out.residual = abs_value(out.partial.center - out.target);
  return out;
}

CoefficientRecord coefficient_record(const ArithmeticFunction& spec, const SmoothContext& ctx,
                                     u64 ell, const Truncation& trunc) {
  CoefficientRecord rec;
  rec.ell = ell;
  rec.cutoff = trunc.cutoff;
  rec.wintner = wintner_restricted(spec, ctx, ell, trunc);
  if (!is_smooth(ell, ctx)) {
    rec.carmichael = BoundedValue::exact(0);
    rec.method = "zero";
    return rec;
  }
  rec.carmichael = carmichael_formula(spec, ctx, ell, trunc);
  rec.method = rec.wintner.is_exact() && rec.carmichael.is_exact() ? "exact" : "truncated";
  return rec;
}

CoefficientRecord coefficient_record_to_target(const ArithmeticFunction& spec,
                                               const SmoothContext& ctx, u64 ell,
                                               const Rational& target, Truncation trunc,
                                               u64 cap) {
  for (;;) {
    CoefficientRecord rec = coefficient_record(spec, ctx, ell, trunc);
    if (rec.wintner.radius <= target && rec.carmichael.radius <= target) return rec;
    if (trunc.cutoff > cap / 2) {
      throw TruncationError("l = " + std::to_string(ell) + ": radius " +
                            to_string(std::max(rec.wintner.radius, rec.carmichael.radius)) +
                            " above target " + to_string(target) + " at cutoff " +
                            std::to_string(trunc.cutoff) + " (cap " + std::to_string(cap) + ")");
    }
    trunc.cutoff *= 2;
  }
}

std::vector<CoefficientRecord> coefficient_table(const ArithmeticFunction& spec,
                                                 const SmoothContext& ctx, u64 max_index,
                                                 const Truncation& trunc) {
  std::vector<CoefficientRecord> out;
  out.reserve(max_index);
  for (u64 ell = 1; ell <= max_index; ++ell) {
    out.push_back(coefficient_record(spec, ctx, ell, trunc));
  }
  return out;
}

DelangeCheck dual_delange_check(const ArithmeticFunction& spec, const SmoothContext& ctx,
                                const std::vector<CoefficientRecord>& records, u64 max_index,
                                const Truncation& trunc) {
  std::map<u64, const CoefficientRecord*> by_index;
  for (const auto& r : records) by_index[r.ell] = &r;

  DelangeCheck out;
  for (u64 ell : smooth_up_to(ctx, max_index)) {
    const auto it = by_index.find(ell);
    if (it == by_index.end()) {
      throw std::invalid_argument("dual_delange_check: no record for l = " + std::to_string(ell));
    }
    out.partial += integer_q(u64{1} << omega(ell)) * it->second->wintner.magnitude();
  }

  if (const auto& support = spec.transform_support()) {
    // Only l dividing some d <= D can be nonzero, so the tail is a finite sum.
    for (u64 ell : smooth_up_to(ctx, *support)) {
      if (ell <= max_index) continue;
      out.tail_bound += integer_q(u64{1} << omega(ell)) *
                        abs_value(wintner_restricted(spec, ctx, ell, trunc).center);
    }
    return out;
  }
  const auto& cert = spec.transform_certificate();
  if (!cert) {
    throw CertificateError(spec.name() + ": summability tail needs a transform certificate");
  }
  // 2^omega(l) <= 2^pi(V) and |F'(lK)|/(lK) <= C l^(eps-1) K^(eps-1).
  Integer two_pi;
  mpz_ui_pow_ui(two_pi.get_mpz_t(), 2, ctx.prime_count());
  out.tail_bound = Rational(two_pi) * cert->constant *
                   smooth_power_tail(ctx, cert->exponent, max_index, trunc.delta) *
                   smooth_power_tail(ctx, cert->exponent, 0, trunc.delta);
  return out;
}

UniquenessReport uniqueness_compare(const std::map<u64, Rational>& candidate,
                                    const std::vector<CoefficientRecord>& records) {
  std::map<u64, const CoefficientRecord*> by_index;
  for (const auto& r : records) by_index[r.ell] = &r;
  UniquenessReport out;
  for (const auto& [ell, value] : candidate) {
    const auto it = by_index.find(ell);
    if (it == by_index.end()) {
      out.unchecked.push_back(ell);
    } else if (!it->second->wintner.contains(value)) {
      out.flagged.push_back(ell);
    }
  }
  return out;
}

}  // namespace smoothram
