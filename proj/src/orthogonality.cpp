#include "smoothram/orthogonality.hpp"

#include <numeric>
#include <stdexcept>

namespace smoothram {

namespace {

Rational integer_q(u64 n) { return make_rational(n, u64{1}); }

void require_smooth(const SmoothContext& ctx, u64 q, u64 ell, const char* who) {
  if (q == 0 || ell == 0 || !is_smooth(q, ctx) || !is_smooth(ell, ctx)) {
    throw std::invalid_argument(std::string(who) + ": q = " + std::to_string(q) +
                                " and l = " + std::to_string(ell) + " must both be " +
                                std::to_string(ctx.bound()) + "-smooth");
  }
}

std::vector<unsigned> joint_caps(const SmoothContext& ctx, u64 q, u64 ell) {
  auto caps = valuation_caps(ctx, q);
  const auto other = valuation_caps(ctx, ell);
  for (std::size_t i = 0; i < caps.size(); ++i) caps[i] = std::max(caps[i], other[i]);
  return caps;
}

}  // namespace

Rational prop2_exact(u64 q, u64 ell) {
  if (q == 0 || ell == 0) throw std::invalid_argument("prop2_exact: q and l must be positive");
  i64 sum = 0;
  for (u64 qq : divisors(q)) {
    const int mq = mobius(q / qq);
    if (mq == 0) continue;
    for (u64 ll : divisors(ell)) {
      const int ml = mobius(ell / ll);
      if (ml != 0) sum += mq * ml * static_cast<i64>(std::gcd(ll, qq));
    }
  }
  return Rational(static_cast<long>(sum));
}

BoundedValue prop2_truncated(const SmoothContext& ctx, u64 q, u64 ell, const Truncation& trunc) {
  require_smooth(ctx, q, ell, "prop2_truncated");
  const RamanujanSum cq(q);
  const RamanujanSum cl(ell);
  Rational sum = 0;
  for (u64 t : smooth_up_to(ctx, trunc.cutoff)) {
    const i64 v = cq(static_cast<i64>(t)) * cl(static_cast<i64>(t));
    if (v != 0) sum += Rational(static_cast<long>(v)) / integer_q(t);
  }
  const auto caps = joint_caps(ctx, q, ell);
  const Rational tail = capped_smooth_tail(
      ctx, caps,
      [q, ell](u64 t) -> Rational { return integer_q(std::gcd(q, t) * std::gcd(ell, t)); },
      trunc.cutoff);
  return {ctx.totient_product() * sum, ctx.totient_product() * tail};
}

Rational prop2_series_closed_form(const SmoothContext& ctx, u64 q, u64 ell) {
  require_smooth(ctx, q, ell, "prop2_series_closed_form");
  const RamanujanSum cq(q);
  const RamanujanSum cl(ell);
  const auto caps = joint_caps(ctx, q, ell);
  return ctx.totient_product() *
         capped_smooth_series(ctx, caps, [&](u64 t) -> Rational {
           return Rational(static_cast<long>(cq(static_cast<i64>(t)) * cl(static_cast<i64>(t))));
         });
}

BoundedValue remark3_absolute_convergence(const SmoothContext& ctx, u64 q, u64 ell,
                                          const Truncation& trunc) {
  require_smooth(ctx, q, ell, "remark3_absolute_convergence");
  const RamanujanSum cq(q);
  const RamanujanSum cl(ell);
  Rational partial = 0;
  for (u64 t : smooth_up_to(ctx, trunc.cutoff)) {
    const i64 v = cq(static_cast<i64>(t)) * cl(static_cast<i64>(t));
    if (v != 0) partial += Rational(static_cast<long>(v < 0 ? -v : v)) / integer_q(t);
  }
  const auto caps = joint_caps(ctx, q, ell);
  const Rational tail = capped_smooth_tail(
      ctx, caps,
      [q, ell](u64 t) -> Rational { return integer_q(std::gcd(q, t) * std::gcd(ell, t)); },
      trunc.cutoff);
  const Rational half = tail / 2;
  return {partial + half, half};
}

OrthogonalityResult orthogonality_result(const SmoothContext& ctx, u64 q, u64 ell,
                                         const Truncation& trunc) {
  OrthogonalityResult r;
  r.q = q;
  r.ell = ell;
  r.exact_value = prop2_exact(q, ell);
  r.truncated = prop2_truncated(ctx, q, ell, trunc);
  r.expected = q == ell ? integer_q(euler_phi(ell)) : Rational(0);
  return r;
}

OrthogonalityMatrix orthogonality_matrix(const SmoothContext& ctx, u64 max_index) {
  OrthogonalityMatrix m;
  m.indices = smooth_up_to(ctx, max_index);
  for (u64 q : m.indices) {
    auto& row = m.values.emplace_back();
    row.reserve(m.indices.size());
    for (u64 ell : m.indices) row.push_back(prop2_exact(q, ell));
  }
  return m;
}

Rational carmichael_orthogonality_mean(u64 ell, u64 q, i64 n) {
  const RamanujanSum cl(ell);
  const RamanujanSum cq(q);
  const u64 len = lcm_checked(ell, q);
  i64 sum = 0;
  for (u64 a = 1; a <= len; ++a) {
    sum += cl(static_cast<i64>(a)) * cq(n + static_cast<i64>(a));
  }
  return Rational(static_cast<long>(sum)) / integer_q(len);
}

}  // namespace smoothram
