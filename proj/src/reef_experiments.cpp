#include "smoothram/reef_experiments.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace smoothram {

namespace {

Rational integer_q(u64 n) { return make_rational(n, u64{1}); }

Rational c_value(const RamanujanSum& c, i64 n) { return Rational(static_cast<long>(c(n))); }

std::vector<unsigned> joint_caps(const SmoothContext& ctx, u64 q, u64 ell) {
  auto caps = valuation_caps(ctx, q);
  const auto other = valuation_caps(ctx, ell);
  for (std::size_t i = 0; i < caps.size(); ++i) caps[i] = std::max(caps[i], other[i]);
  return caps;
}

// Small random rational p/q, |p| <= 5, 1 <= q <= 4, zero about a third of the time.
Rational draw_entry(std::mt19937_64& rng) {
  if (rng() % 3 == 0) return 0;
  const i64 p = static_cast<i64>(rng() % 11) - 5;
  const i64 q = static_cast<i64>(rng() % 4) + 1;
  return make_rational(p, q);
}

}  // namespace

void ReefInstance::validate() const {
  if (n0 < 1 || n0 > length) throw std::invalid_argument("ReefInstance: need 1 <= n0 <= N");
  if (q0 <= 2 || q0 > range) throw std::invalid_argument("ReefInstance: need 2 < q0 <= Q");
  if (range > length) throw std::invalid_argument("ReefInstance: need Q <= N");
}

ArithmeticFunction ReefInstance::f() const { return ArithmeticFunction::indicator(n0); }

RangeQFunction ReefInstance::g() const {
  return RangeQFunction::from_spec(ArithmeticFunction::ramanujan_sum(q0), range);
}

Rational reef_rhs(const ArithmeticFunction& f, const RangeQFunction& g, u64 length, u64 a) {
  Rational sum = 0;
  for (u64 ell = 1; ell <= g.range(); ++ell) {
    const Rational h = g.ghat(ell);
    if (h == 0) continue;
    const RamanujanSum c(ell);
    const i64 ca = c(static_cast<i64>(a));
    if (ca == 0) continue;
    Rational twisted = 0;
    for (u64 n = 1; n <= length; ++n) twisted += f.value(n) * c_value(c, static_cast<i64>(n));
    sum += h / integer_q(euler_phi(ell)) * twisted * Rational(static_cast<long>(ca));
  }
  return sum;
}

Rational reef_rhs(const CorrelationTable& table, u64 a) {
  Rational sum = 0;
  for (u64 ell = 1; ell <= table.range(); ++ell) {
    const i64 ca = ramanujan_sum(ell, static_cast<i64>(a));
    if (ca != 0) sum += correlation_coefficient(table, ell) * Rational(static_cast<long>(ca));
  }
  return sum;
}

ReefReport reef_report(const ArithmeticFunction& f, const RangeQFunction& g, u64 length, u64 a) {
  ReefReport r;
  r.lhs = correlation(f, g, length, a);
  r.rhs = reef_rhs(f, g, length, a);
  r.defect = r.lhs - r.rhs;
  return r;
}

ReefReport counterexample1(u64 length, u64 range, u64 n0, u64 q0) {
  const ReefInstance inst{length, range, n0, q0};
  inst.validate();
  if ((n0 + 1) % q0 != 0) {
    throw std::invalid_argument("counterexample1: needs n0 = -1 (mod q0); got n0 = " +
                                std::to_string(n0) + ", q0 = " + std::to_string(q0));
  }
  return reef_report(inst.f(), inst.g(), length, 1);
}

BoundedValue conjecture1_eval(const SmoothContext& ctx, u64 q, u64 ell, i64 n,
                              const Truncation& trunc) {
  if (q == 0 || ell == 0 || !is_smooth(q, ctx) || !is_smooth(ell, ctx)) {
    throw std::invalid_argument("conjecture1_eval: q and l must be smooth");
  }
  const RamanujanSum cq(q);
  const RamanujanSum cl(ell);
  const i64 qi = static_cast<i64>(q);
  if (n % qi == 0) {
    // c_q(n + t) = c_q(t): a capped-valuation weight.
    const auto caps = joint_caps(ctx, q, ell);
    const Rational series = capped_smooth_series(ctx, caps, [&](u64 t) -> Rational {
      return c_value(cq, static_cast<i64>(t)) * c_value(cl, static_cast<i64>(t));
    });
    return BoundedValue::exact(ctx.totient_product() * series);
  }
  Rational sum = 0;
  for (u64 t : smooth_up_to(ctx, trunc.cutoff)) {
    const i64 v = cq(n + static_cast<i64>(t)) * cl(static_cast<i64>(t));
    if (v != 0) sum += Rational(static_cast<long>(v)) / integer_q(t);
  }
  // |c_q(m)| <= phi(q) and |c_l(t)| <= (l, t).
  const Rational tail = integer_q(euler_phi(q)) * smooth_gcd_tail(ctx, ell, trunc.cutoff);
  return {ctx.totient_product() * sum, ctx.totient_product() * tail};
}

Rational conjecture1_expected(u64 q, u64 ell, i64 n) {
  if (q != ell) return 0;
  return Rational(static_cast<long>(ramanujan_sum(ell, n)));
}

std::string to_string(PointStatus status) {
  switch (status) {
    case PointStatus::kConsistent: return "consistent";
    case PointStatus::kViolation: return "violation";
    case PointStatus::kUndecided: return "undecided";
  }
  return "undecided";
}

Conjecture1Point conjecture1_point(const SmoothContext& ctx, u64 q, u64 ell, i64 n,
                                   u64 start_cutoff, u64 cutoff_cap) {
  Conjecture1Point pt;
  pt.q = q;
  pt.ell = ell;
  pt.n = n;
  pt.expected = conjecture1_expected(q, ell, n);
  u64 cutoff = std::max<u64>(start_cutoff, 1);
  for (;;) {
    pt.interval = conjecture1_eval(ctx, q, ell, n, {cutoff, std::nullopt});
    pt.cutoff = cutoff;
    if (!pt.interval.contains(pt.expected)) {
      pt.status = PointStatus::kViolation;
      return pt;
    }
    if (pt.interval.is_exact()) {
      pt.status = PointStatus::kConsistent;
      return pt;
    }
    if (cutoff > cutoff_cap / 2) {
      pt.status = PointStatus::kUndecided;
      return pt;
    }
    cutoff *= 2;
  }
}

SweepResult conjecture1_sweep(const SmoothContext& ctx, const SweepOptions& options) {
  const u64 period = correlation_period(ctx.bound());
  const u64 max_index = options.max_index ? options.max_index : period;
  const u64 max_shift = options.max_shift ? options.max_shift : period;
  const auto indices = smooth_up_to(ctx, max_index);

  SweepResult out;
  for (u64 q : indices) {
    for (u64 ell : indices) {
      for (u64 m = 0; m <= max_shift; ++m) {
        for (int sign : {1, -1}) {
          if (m == 0 && sign < 0) continue;
          const i64 n = sign * static_cast<i64>(m);
          auto pt = conjecture1_point(ctx, q, ell, n, options.start_cutoff, options.cutoff_cap);
          ++out.points;
          switch (pt.status) {
            case PointStatus::kConsistent: ++out.consistent; break;
            case PointStatus::kUndecided: out.undecided.push_back(std::move(pt)); break;
            case PointStatus::kViolation:
              out.witnesses.push_back(std::move(pt));
              if (options.stop_after && out.witnesses.size() >= options.stop_after) return out;
              break;
          }
        }
      }
    }
  }
  return out;
}

bool within_power_range(u64 a, u64 length, const Rational& delta) {
  if (delta < 0 || delta >= 1) throw std::invalid_argument("delta must lie in [0, 1)");
  // a <= N^((w - u)/w)  <=>  a^w <= N^(w - u) for delta = u/w.
  const unsigned long w = delta.get_den().get_ui();
  const unsigned long u = delta.get_num().get_ui();
  Integer lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), a, w);
  mpz_ui_pow_ui(rhs.get_mpz_t(), length, w - u);
  return lhs <= rhs;
}

ResidualTable approximate_reef_residual(const ArithmeticFunction& f, const RangeQFunction& g,
                                        u64 length, u64 max_shift, const Rational& delta) {
  if (max_shift == 0 || max_shift > length) {
    throw std::invalid_argument("approximate_reef_residual: need 1 <= a_max <= N");
  }
  const CorrelationTable table(f, g, length, 1);
  std::vector<Rational> coefficient(g.range() + 1);
  for (u64 ell = 1; ell <= g.range(); ++ell) coefficient[ell] = correlation_coefficient(table, ell);

  ResidualTable out;
  out.delta = delta;
  for (u64 a = 1; a <= max_shift; ++a) {
    ResidualRow row;
    row.a = a;
    row.lhs = table.value(a);
    for (u64 ell = 1; ell <= g.range(); ++ell) {
      if (coefficient[ell] == 0) continue;
      row.rhs += coefficient[ell] * Rational(static_cast<long>(ramanujan_sum(ell, static_cast<i64>(a))));
    }
    row.defect = row.lhs - row.rhs;
    const Rational size = abs_value(row.defect);
    out.max_abs_defect = std::max(out.max_abs_defect, size);
    if (within_power_range(a, length, delta)) {
      ++out.shifts_in_range;
      out.max_abs_defect_in_range = std::max(out.max_abs_defect_in_range, size);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<ReefTailPoint> asymptotic_reef_profile(const CorrelationTable& table, u64 a,
                                                   u64 max_index,
                                                   const std::vector<u64>& bounds,
                                                   const Truncation& trunc) {
  std::vector<ReefTailPoint> out;
  for (u64 v : bounds) {
    const SmoothContext ctx(v);
    out.push_back({v, asymptotic_reef_tail(table, ctx, a, std::max(max_index, table.range()),
                                           trunc)});
  }
  return out;
}

BhInstance random_bh_instance(std::mt19937_64& rng, u64 max_length, u64 max_range) {
  if (max_range == 0 || max_length < max_range) {
    throw std::invalid_argument("random_bh_instance: need 1 <= max_range <= max_length");
  }
  const u64 range = 1 + rng() % max_range;
  const u64 length = range + rng() % (max_length - range + 1);
  std::vector<Rational> f_values(length);
  for (auto& v : f_values) v = draw_entry(rng);
  std::vector<Rational> gprime(range);
  for (auto& v : gprime) v = draw_entry(rng);
  return {"random N=" + std::to_string(length) + " Q=" + std::to_string(range),
          ArithmeticFunction::from_values(FunctionTable(std::move(f_values)), std::nullopt,
                                          "random-f"),
          RangeQFunction::build(std::move(gprime)), length};
}

std::vector<BhInstance> catalog_bh_instances() {
  const std::vector<std::string> fs = {"constant-one", "indicator:2", "indicator:7", "mu",
                                       "mu-squared",   "phi-over-n",  "ramanujan-sum:3"};
  struct GChoice {
    std::string id;
    u64 range;
  };
  const std::vector<GChoice> gs = {{"constant-one", 1}, {"ramanujan-sum:3", 3},
                                   {"ramanujan-sum:4", 6}, {"mu", 5},
                                   {"phi-over-n", 4},      {"ramanujan-sum:10", 10}};
  std::vector<BhInstance> out;
  for (const auto& f : fs) {
    for (const auto& g : gs) {
      const u64 length = 12;
      out.push_back({f + " x " + g.id + "|" + std::to_string(g.range),
                     ArithmeticFunction::from_catalog(f),
                     RangeQFunction::from_spec(ArithmeticFunction::from_catalog(g.id), g.range),
                     length});
    }
  }
  return out;
}

}  // namespace smoothram
