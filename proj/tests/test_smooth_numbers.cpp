#include <doctest.h>

#include "oracles.hpp"
#include "smoothram/smooth_numbers.hpp"

using namespace smoothram;

TEST_CASE("smooth enumeration matches a brute filter") {
  for (u64 q : {2, 3, 4, 5, 7, 10, 13}) {
    const SmoothContext ctx(q);
    std::vector<u64> expected;
    for (u64 n = 1; n <= 3000; ++n) {
      if (oracle::is_smooth(n, q)) expected.push_back(n);
    }
    CAPTURE(q);
    CHECK(smooth_up_to(ctx, 3000) == expected);
    for (u64 n = 1; n <= 500; ++n) {
      CHECK(is_smooth(n, ctx) == oracle::is_smooth(n, q));
      CHECK(is_sifted(n, ctx) == oracle::is_sifted(n, q));
      const u64 t = smooth_part(n, ctx);
      CHECK(n % t == 0);
      CHECK(oracle::is_smooth(t, q));
      CHECK(oracle::is_sifted(n / t, q));
    }
  }
}

TEST_CASE("sifted count is exact and within 2^pi(Q) of the main term") {
  for (u64 q : {2, 3, 5, 7, 11, 13}) {
    const SmoothContext ctx(q);
    for (u64 x : {1, 17, 100, 997, 5000}) {
      u64 brute = 0;
      for (u64 n = 1; n <= x; ++n) brute += oracle::is_sifted(n, q);
      const auto sc = sifted_count(ctx, x);
      CHECK(sc.count == brute);
      CHECK(abs_value(Rational(static_cast<unsigned long>(sc.count)) - sc.main_term) <=
            Rational(sc.error_bound));
    }
  }
}

TEST_CASE("Euler products") {
  CHECK(smooth_power_series(SmoothContext(3), -1) == 3);
  CHECK(smooth_power_series(SmoothContext(2), -1) == 2);
  CHECK(smooth_power_series(SmoothContext(3), -2) == make_rational(3, 2));
  const SmoothContext ctx(5);
  CHECK(ctx.smooth_harmonic() == make_rational(15, 4));
  CHECK(ctx.totient_product() * ctx.smooth_harmonic() == 1);
  CHECK(ctx.primorial() == 30);
}

TEST_CASE("exact reciprocal and gcd tails") {
  const SmoothContext ctx(5);
  Rational head = 0;
  for (u64 t : smooth_up_to(ctx, 1000)) head += make_rational(u64{1}, t);
  CHECK(head + smooth_reciprocal_tail(ctx, 1000) == ctx.smooth_harmonic());
  CHECK(smooth_power_tail(ctx, 0, 1000) == smooth_reciprocal_tail(ctx, 1000));

  for (u64 m : {1, 6, 12, 45, 7}) {
    Rational window = 0;
    for (u64 t : smooth_up_to(ctx, 5000)) {
      if (t > 200) window += make_rational(std::gcd(m, t), t);
    }
    CHECK(smooth_gcd_tail(ctx, m, 200) - smooth_gcd_tail(ctx, m, 5000) == window);
  }

  const std::vector<unsigned> caps(ctx.prime_count(), 0);
  CHECK(capped_smooth_series(ctx, caps, [](u64) { return Rational(1); }) ==
        ctx.smooth_harmonic());
}

TEST_CASE("Rankin bounds dominate the partial tails") {
  const SmoothContext ctx(3);
  const Rational eps = make_rational(1, 4);
  const u64 x = 100;
  Rational window = 0;
  for (u64 t : smooth_up_to(ctx, 200000)) {
    if (t > x) window += pow_lower(make_rational(t, u64{1}), eps - 1);
  }
  const auto choice = rankin_tail_bound_auto(ctx, eps, x);
  CHECK(choice.bound >= window);
  CHECK(rankin_tail_bound(ctx, {eps, choice.delta, x}) == choice.bound);
  CHECK(smooth_power_tail(ctx, eps, x) >= window);
  CHECK_THROWS(TailParams{eps, make_rational(3, 4), 1}.validate());
  CHECK(euler_product_upper(ctx, -1) >= 3);
}
