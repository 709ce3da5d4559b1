#include <doctest.h>

#include "oracles.hpp"
#include "smoothram/orthogonality.hpp"

using namespace smoothram;

TEST_CASE("exact orthogonality on the divisor double sum") {
  for (u64 q = 1; q <= 60; ++q) {
    for (u64 ell = 1; ell <= 60; ++ell) {
      CHECK(prop2_exact(q, ell) == (q == ell ? make_rational(oracle::phi(ell), u64{1}) : 0));
    }
  }
}

TEST_CASE("the series form in closed form and truncated") {
  for (u64 v : {2, 3, 5}) {
    const SmoothContext ctx(v);
    const auto idx = smooth_up_to(ctx, 24);
    for (u64 q : idx) {
      for (u64 ell : idx) {
        CAPTURE(v);
        CAPTURE(q);
        CAPTURE(ell);
        const Rational expected = prop2_exact(q, ell);
        CHECK(prop2_series_closed_form(ctx, q, ell) == expected);
        const auto t = prop2_truncated(ctx, q, ell, {3000, std::nullopt});
        CHECK(t.contains(expected));
        CHECK(t.radius > 0);
      }
    }
  }
  CHECK_THROWS(prop2_truncated(SmoothContext(3), 5, 1));
}

TEST_CASE("absolute convergence enclosure") {
  const SmoothContext ctx(3);
  for (u64 q : {1, 2, 6}) {
    for (u64 ell : {1, 3, 4}) {
      const auto coarse = remark3_absolute_convergence(ctx, q, ell, {500, std::nullopt});
      const auto fine = remark3_absolute_convergence(ctx, q, ell, {50000, std::nullopt});
      CHECK(fine.inside(coarse));
      Rational partial = 0;
      for (u64 t : smooth_up_to(ctx, 50000)) {
        partial += make_rational(static_cast<u64>(std::abs(ramanujan_sum(q, static_cast<i64>(t)) *
                                                           ramanujan_sum(ell, static_cast<i64>(t)))),
                                 t);
      }
      CHECK(fine.lower() == partial);
    }
  }
}

TEST_CASE("matrix and Cesaro mean") {
  const auto m = orthogonality_matrix(SmoothContext(3), 30);
  CHECK(m.indices == std::vector<u64>{1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 27});
  for (std::size_t i = 0; i < m.indices.size(); ++i) {
    for (std::size_t j = 0; j < m.indices.size(); ++j) {
      CHECK(m.values[i][j] == (i == j ? make_rational(oracle::phi(m.indices[i]), u64{1}) : 0));
    }
  }
  for (u64 ell = 1; ell <= 10; ++ell) {
    for (u64 q = 1; q <= 10; ++q) {
      for (i64 n = -5; n <= 5; ++n) {
        CHECK(carmichael_orthogonality_mean(ell, q, n) ==
              (q == ell ? Rational(ramanujan_sum(ell, n)) : 0));
      }
    }
  }
  const auto r = orthogonality_result(SmoothContext(2), 4, 4);
  CHECK(r.expected == 2);
  CHECK(r.exact_value == 2);
}
