#include <doctest.h>

#include "oracles.hpp"
#include "smoothram/transforms.hpp"

using namespace smoothram;

TEST_CASE("catalog transforms match the computed transform") {
  for (const char* id : {"constant-one", "indicator:1", "indicator:6", "ramanujan-sum:4",
                         "ramanujan-sum:12", "mu", "mu-squared", "phi-over-n", "identity",
                         "zero"}) {
    CAPTURE(id);
    const auto spec = ArithmeticFunction::from_catalog(id);
    const auto values = FunctionTable::generate(300, [&](u64 n) { return spec.value(n); });
    const auto transform = eratosthenes_transform(values);
    for (u64 n = 1; n <= 300; ++n) CHECK(spec.transform(n) == transform(n));
    CHECK_NOTHROW(spec.audit_certificates(2000));
  }
  CHECK_THROWS(ArithmeticFunction::from_catalog("nope"));
  CHECK_THROWS(ArithmeticFunction::from_catalog("indicator:0"));
}

TEST_CASE("certificates are validated and audited") {
  const auto table = FunctionTable::generate(50, [](u64 n) { return make_rational(n % 3, u64{1}); });
  CHECK_THROWS_AS(ArithmeticFunction::from_values(table, GrowthCertificate{1, 1}),
                  CertificateError);
  CHECK_THROWS_AS(ArithmeticFunction::from_values(table, GrowthCertificate{0, 0}),
                  CertificateError);
  const auto loose = ArithmeticFunction::from_values(table, GrowthCertificate{2, 0});
  CHECK_NOTHROW(loose.audit_certificates());
  const auto tight = ArithmeticFunction::from_values(table, GrowthCertificate{1, 0});
  CHECK_THROWS_AS(tight.audit_certificates(), CertificateError);

  const GrowthCertificate root{1, make_rational(1, 2)};
  CHECK(root.admits(4, 2));
  CHECK_FALSE(root.admits(4, make_rational(201, 100)));
}

TEST_CASE("smooth restriction") {
  for (u64 v : {2, 3, 5}) {
    const SmoothContext ctx(v);
    const auto ident = ArithmeticFunction::identity();
    const auto one = ArithmeticFunction::constant_one();
    for (u64 n = 1; n <= 400; ++n) {
      // sum of phi(d) over smooth d | n is the smooth part of n.
      u64 sp = 1;
      for (u64 d = 1; d <= n; ++d) {
        if (n % d == 0 && oracle::is_smooth(d, v)) sp = d;
      }
      CHECK(smooth_restrict(ident, ctx, n) == make_rational(sp, u64{1}));
      CHECK(smooth_restrict(one, ctx, n) == 1);
      for (const char* id : {"mu", "indicator:4", "ramanujan-sum:6", "phi-over-n"}) {
        const auto spec = ArithmeticFunction::from_catalog(id);
        CHECK(smooth_restrict(spec, ctx, n) == mobius_switch_rhs(spec, ctx, n));
      }
    }
  }
}

TEST_CASE("range-Q functions") {
  const std::vector<Rational> gp = {make_rational(1, 2), 0, -3, make_rational(5, 4), 1};
  const auto g = RangeQFunction::build(gp);
  CHECK(g.range() == 5);
  for (u64 m = 1; m <= 200; ++m) {
    CHECK(g.value(m) == oracle::range_q_value(gp, m));
    CHECK(finite_ramanujan_eval(g, m) == g.value(m));
  }
  for (u64 q = 1; q <= 7; ++q) {
    Rational hat = 0;
    for (u64 d = q; d <= 5; d += q) hat += gp[d - 1] / make_rational(d, u64{1});
    CHECK(g.ghat(q) == hat);
  }
  const auto c3 = RangeQFunction::from_spec(ArithmeticFunction::ramanujan_sum(3), 5);
  for (u64 m = 1; m <= 30; ++m) CHECK(c3.value(m) == ramanujan_sum(3, static_cast<i64>(m)));
}

TEST_CASE("function file format") {
  const auto delta = parse_function_text("#mode=eratosthenes\n1\t1/1\n");
  for (u64 n = 1; n <= 20; ++n) {
    CHECK(delta.value(n) == 1);
    CHECK(delta.transform(n) == (n == 1 ? 1 : 0));
  }
  const auto neg = parse_function_text("#mode=eratosthenes\n3\t-2/5\n");
  CHECK(neg.transform(3) == make_rational(-2, 5));
  CHECK(neg.value(6) == make_rational(-2, 5));

  const auto direct = parse_function_text("#mode=direct #C=2 #eps=0\n1\t1\n2\t-1/2\n3\t2\n");
  CHECK(direct.value(2) == make_rational(-1, 2));
  CHECK(direct.transform(3) == 1);

  CHECK_THROWS_AS(parse_function_text("#mode=eratosthenes\n1\t1\n1\t2\n"), ParseError);
  CHECK_THROWS_AS(parse_function_text("#mode=direct\n1\t1\n3\t1\n"), ParseError);
  CHECK_THROWS_AS(parse_function_text("#mode=direct\n1\t0.5\n"), ParseError);
  CHECK_THROWS_AS(parse_function_text("#mode=direct #eps=1/2\n1\t1\n"), ParseError);
  CHECK_THROWS_AS(parse_function_text("#mode=sideways\n1\t1\n"), ParseError);
  CHECK_THROWS_AS(parse_function_text("#mode=direct #C=1 #eps=0\n1\t1\n2\t3\n"),
                  CertificateError);
}
