#include <doctest.h>

#include "oracles.hpp"
#include "smoothram/orthogonality.hpp"
#include "smoothram/reef_experiments.hpp"

using namespace smoothram;

TEST_CASE("counterexample instances") {
  auto r = counterexample1(10, 5, 2, 3);
  CHECK(r.lhs == 2);
  CHECK(r.rhs == make_rational(1, 2));
  CHECK(r.defect == make_rational(3, 2));

  r = counterexample1(10, 5, 4, 5);
  CHECK(r.lhs == 4);
  CHECK(r.rhs == make_rational(1, 4));
  CHECK(r.defect == make_rational(15, 4));

  r = counterexample1(10, 5, 3, 4);
  CHECK(r.lhs == 2);
  CHECK(r.rhs == 0);

  CHECK_THROWS_AS(counterexample1(10, 5, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(counterexample1(10, 5, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(counterexample1(4, 5, 2, 3), std::invalid_argument);

  // The defect at a = 1 does not depend on N.
  for (u64 n : {5, 10, 50}) CHECK(counterexample1(n, 5, 4, 5).defect == make_rational(15, 4));
}

TEST_CASE("Reef right-hand side") {
  const ReefInstance inst{10, 5, 2, 3};
  const CorrelationTable table(inst.f(), inst.g(), 10);
  for (u64 a = 1; a <= 30; ++a) {
    const Rational direct = reef_rhs(inst.f(), inst.g(), 10, a);
    CHECK(direct == reef_rhs(table, a));
    // (1/phi(q0)) c_q0(n0) c_q0(a)
    CHECK(direct == make_rational(ramanujan_sum(3, 2) * ramanujan_sum(3, static_cast<i64>(a)),
                                  i64{2}));
  }
  const auto zero = ArithmeticFunction::zero();
  CHECK(reef_rhs(zero, inst.g(), 10, 3) == 0);

  const auto one = RangeQFunction::from_spec(ArithmeticFunction::constant_one(), 1);
  const auto mu = ArithmeticFunction::mobius_function();
  for (u64 a = 1; a <= 10; ++a) CHECK(reef_report(mu, one, 20, a).defect == 0);
}

TEST_CASE("shifted orthogonality evaluator") {
  const SmoothContext ctx(3);
  for (i64 n : {-4, 0, 1, 7}) {
    const auto v = conjecture1_eval(ctx, 1, 1, n);
    CHECK(v == BoundedValue::exact(1));
  }
  for (u64 q : smooth_up_to(ctx, 12)) {
    for (u64 ell : smooth_up_to(ctx, 12)) {
      for (i64 k : {0, 1, -2}) {
        const auto v = conjecture1_eval(ctx, q, ell, k * static_cast<i64>(q));
        CHECK(v.is_exact());
        CHECK(v.contains(prop2_exact(q, ell)));
      }
    }
  }
  const auto v = conjecture1_eval(ctx, 3, 1, 1, {20000, std::nullopt});
  CHECK_FALSE(v.contains(0));
  CHECK(v.upper() < 0);
  CHECK_THROWS(conjecture1_eval(ctx, 5, 1, 1));
}

TEST_CASE("falsifier sweep is deterministic") {
  const SmoothContext ctx(3);
  const auto a = conjecture1_sweep(ctx, {});
  const auto b = conjecture1_sweep(ctx, {});
  REQUIRE(a.witnesses.size() == 1);
  const auto& w = a.witnesses.front();
  CHECK(w.q == 3);
  CHECK(w.ell == 1);
  CHECK(w.n == 1);
  CHECK(w.status == PointStatus::kViolation);
  CHECK(w.interval == b.witnesses.front().interval);
  CHECK(a.points == b.points);

  // A true zero can never be decided by truncation.
  const auto p = conjecture1_point(ctx, 2, 1, 1, 1000, 8000);
  CHECK(p.status == PointStatus::kUndecided);
  CHECK(p.cutoff == 8000);
  CHECK(to_string(p.status) == "undecided");
}

TEST_CASE("residual profiles") {
  CHECK(within_power_range(10, 100, make_rational(1, 2)));
  CHECK_FALSE(within_power_range(11, 100, make_rational(1, 2)));
  CHECK(within_power_range(100, 100, 0));
  CHECK_THROWS(within_power_range(1, 10, 1));

  const ReefInstance inst{10, 5, 2, 3};
  const auto t = approximate_reef_residual(inst.f(), inst.g(), 10, 10, make_rational(1, 2));
  CHECK(t.rows.size() == 10);
  CHECK(t.rows.front().defect == make_rational(3, 2));
  CHECK(t.shifts_in_range == 3);
  for (const auto& row : t.rows) CHECK(row.defect == row.lhs - row.rhs);

  const auto one = RangeQFunction::from_spec(ArithmeticFunction::constant_one(), 1);
  const auto flat = approximate_reef_residual(ArithmeticFunction::mobius_squared(), one, 25, 25, 0);
  CHECK(flat.max_abs_defect == 0);
}

TEST_CASE("seeded instances replay") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 5; ++i) {
    const auto x = random_bh_instance(a, 50, 10);
    const auto y = random_bh_instance(b, 50, 10);
    CHECK(x.label == y.label);
    CHECK(x.length >= x.g.range());
    for (u64 n = 1; n <= x.length; ++n) CHECK(x.f.value(n) == y.f.value(n));
  }
  CHECK(catalog_bh_instances().size() == 42);
}
