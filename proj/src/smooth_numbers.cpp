#include "smoothram/smooth_numbers.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace smoothram {

SmoothContext::SmoothContext(u64 bound) : bound_(bound), primes_(primes_up_to(bound)) {
  if (bound < 2) throw std::invalid_argument("SmoothContext: Q must be >= 2");
  totient_product_ = 1;
  primorial_ = 1;
  for (u64 p : primes_) {
    totient_product_ *= make_rational(p - 1, p);
    primorial_ *= static_cast<unsigned long>(p);
  }
  smooth_harmonic_ = 1 / totient_product_;
}

bool is_smooth(u64 n, const SmoothContext& ctx) {
  if (n == 0) throw std::invalid_argument("is_smooth: n must be positive");
  for (u64 p : ctx.primes()) {
    while (n % p == 0) n /= p;
    if (n == 1) return true;
  }
  return n == 1;
}

bool is_sifted(u64 n, const SmoothContext& ctx) {
  if (n == 0) throw std::invalid_argument("is_sifted: n must be positive");
  for (u64 p : ctx.primes()) {
    if (n % p == 0) return false;
  }
  return true;
}

u64 smooth_part(u64 n, const SmoothContext& ctx) {
  if (n == 0) throw std::invalid_argument("smooth_part: n must be positive");
  u64 t = 1;
  for (u64 p : ctx.primes()) {
    while (n % p == 0) {
      n /= p;
      t *= p;
    }
  }
  return t;
}

std::vector<u64> smooth_up_to(const SmoothContext& ctx, u64 limit) {
  if (limit == 0) throw std::invalid_argument("smooth_up_to: X must be positive");
  const auto& primes = ctx.primes();
  using Entry = std::pair<u64, std::size_t>;  // value, index of its largest prime
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  heap.push({1, 0});
  std::vector<u64> out;
  while (!heap.empty()) {
    const auto [x, first] = heap.top();
    heap.pop();
    out.push_back(x);
    for (std::size_t j = first; j < primes.size(); ++j) {
      if (x > limit / primes[j]) break;
      heap.push({x * primes[j], j});
    }
  }
  return out;
}

namespace {

void inclusion_exclusion(const std::vector<u64>& primes, std::size_t i, u64 d, int sign,
                         u64 limit, i64& acc) {
  if (i == primes.size()) {
    acc += sign * static_cast<i64>(limit / d);
    return;
  }
  inclusion_exclusion(primes, i + 1, d, sign, limit, acc);
  // Larger d only adds zero terms; primes are ascending.
  if (d <= limit / primes[i]) {
    inclusion_exclusion(primes, i + 1, d * primes[i], -sign, limit, acc);
  }
}

}  // namespace

SiftedCount sifted_count(const SmoothContext& ctx, u64 limit) {
  if (limit == 0) throw std::invalid_argument("sifted_count: X must be positive");
  i64 acc = 0;
  inclusion_exclusion(ctx.primes(), 0, 1, 1, limit, acc);
  SiftedCount out;
  out.count = static_cast<u64>(acc);
  out.main_term = ctx.totient_product() * make_rational(limit, u64{1});
  mpz_ui_pow_ui(out.error_bound.get_mpz_t(), 2, ctx.prime_count());
  return out;
}

Rational smooth_power_series(const SmoothContext& ctx, const Rational& s) {
  if (s >= 0) throw std::invalid_argument("smooth_power_series: needs s < 0 (diverges)");
  if (s.get_den() != 1) {
    throw std::invalid_argument("smooth_power_series: s must be an integer for an exact value");
  }
  const long e = s.get_num().get_si();
  Rational out = 1;
  for (u64 p : ctx.primes()) {
    out /= 1 - pow_exact(make_rational(p, u64{1}), e);
  }
  return out;
}

void TailParams::validate() const {
  if (epsilon < 0) throw std::invalid_argument("TailParams: epsilon must be >= 0");
  if (delta <= 0) throw std::invalid_argument("TailParams: delta must be > 0");
  if (epsilon + delta >= 1) throw std::invalid_argument("TailParams: needs epsilon + delta < 1");
  if (truncation == 0) throw std::invalid_argument("TailParams: truncation must be >= 1");
}

Rational euler_product_upper(const SmoothContext& ctx, const Rational& s) {
  if (s >= 0) throw std::invalid_argument("euler_product_upper: needs s < 0");
  Rational out = 1;
  for (u64 p : ctx.primes()) {
    const Rational term = pow_upper(make_rational(p, u64{1}), s);
    if (term >= 1) throw std::domain_error("euler_product_upper: exponent too close to 0");
    out /= 1 - term;
  }
  return out;
}

Rational rankin_tail_bound(const SmoothContext& ctx, const TailParams& params) {
  params.validate();
  const Rational x = make_rational(params.truncation, u64{1});
  return pow_upper(x, -params.delta) *
         euler_product_upper(ctx, params.epsilon + params.delta - 1);
}

RankinChoice rankin_tail_bound_auto(const SmoothContext& ctx, const Rational& epsilon,
                                    u64 truncation) {
  std::optional<RankinChoice> best;
  for (long j = 1; j < 16; ++j) {
    const Rational delta = make_rational(static_cast<i64>(j), i64{16});
    if (epsilon + delta >= 1) break;
    const Rational bound = rankin_tail_bound(ctx, {epsilon, delta, truncation});
    if (!best || bound < best->bound) best = RankinChoice{delta, bound};
  }
  if (!best) throw std::invalid_argument("rankin_tail_bound_auto: epsilon leaves no room for delta");
  return *best;
}

Rational smooth_reciprocal_tail(const SmoothContext& ctx, u64 limit) {
  // Sum 1/t over common denominator prod p^{floor(log_p X)}.
  Integer den = 1;
  for (u64 p : ctx.primes()) {
    u64 pk = p;
    while (pk <= limit / p) pk *= p;
    if (pk <= limit) den *= static_cast<unsigned long>(pk);
  }
  Integer num = 0;
  for (u64 t : smooth_up_to(ctx, limit)) {
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), den.get_mpz_t(), t);
    num += q;
  }
  Rational partial(num, den);
  partial.canonicalize();
  return ctx.smooth_harmonic() - partial;
}

Rational smooth_power_tail(const SmoothContext& ctx, const Rational& epsilon, u64 after,
                           const std::optional<Rational>& delta) {
  if (epsilon < 0 || epsilon >= 1) {
    throw std::invalid_argument("smooth_power_tail: epsilon must lie in [0, 1)");
  }
  if (epsilon == 0) {
    return after == 0 ? ctx.smooth_harmonic() : smooth_reciprocal_tail(ctx, after);
  }
  if (after == 0) return euler_product_upper(ctx, epsilon - 1);
  if (delta) return rankin_tail_bound(ctx, {epsilon, *delta, after});
  return rankin_tail_bound_auto(ctx, epsilon, after).bound;
}

namespace {

struct CappedWalker {
  const std::vector<u64>& primes;
  std::span<const unsigned> caps;
  const std::function<Rational(u64)>& weight;
  Rational total = 0;

  void walk(std::size_t i, u64 rep, const Rational& factor) {
    if (i == primes.size()) {
      total += weight(rep) * factor;
      return;
    }
    const u64 p = primes[i];
    const Rational inv_p = make_rational(u64{1}, p);
    Rational scale = 1;
    u64 r = rep;
    for (unsigned k = 0; k < caps[i]; ++k) {
      walk(i + 1, r, factor * scale);
      scale *= inv_p;
      r *= p;
    }
    // Exponents >= cap share one class: sum_{k >= cap} p^{-k} = p^{-cap} p/(p-1).
    walk(i + 1, r, factor * scale * make_rational(p, p - 1));
  }
};

}  // namespace

Rational capped_smooth_series(const SmoothContext& ctx, std::span<const unsigned> caps,
                              const std::function<Rational(u64)>& weight) {
  if (caps.size() != ctx.prime_count()) {
    throw std::invalid_argument("capped_smooth_series: one cap per prime <= Q required");
  }
  CappedWalker walker{ctx.primes(), caps, weight};
  walker.walk(0, 1, Rational(1));
  return walker.total;
}

std::vector<unsigned> valuation_caps(const SmoothContext& ctx, u64 m) {
  if (m == 0) throw std::invalid_argument("valuation_caps: m must be positive");
  std::vector<unsigned> caps;
  caps.reserve(ctx.prime_count());
  for (u64 p : ctx.primes()) {
    unsigned v = 0;
    while (m % p == 0) {
      m /= p;
      ++v;
    }
    caps.push_back(v);
  }
  return caps;
}

Rational capped_smooth_tail(const SmoothContext& ctx, std::span<const unsigned> caps,
                            const std::function<Rational(u64)>& weight, u64 after) {
  Rational tail = capped_smooth_series(ctx, caps, weight);
  if (after == 0) return tail;
  for (u64 t : smooth_up_to(ctx, after)) tail -= weight(t) / make_rational(t, u64{1});
  return tail;
}

Rational smooth_gcd_tail(const SmoothContext& ctx, u64 m, u64 after) {
  const auto caps = valuation_caps(ctx, m);
  return capped_smooth_tail(
      ctx, caps, [m](u64 t) -> Rational { return make_rational(std::gcd(m, t), u64{1}); },
      after);
}

}  // namespace smoothram
