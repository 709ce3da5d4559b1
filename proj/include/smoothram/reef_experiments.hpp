#pragma once

// Experiments on the finite Reef expansion of correlations: the exact
// counterexample and a certified falsifier for shifted orthogonality.
// Residual profiles for the approximate version are measured, not judged.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "smoothram/correlations.hpp"

namespace smoothram {

/// f = 1_{n0}, g = c_{q0} of range Q, with 1 <= n0 <= N, 2 < q0 <= Q <= N.
struct ReefInstance {
  u64 length = 10;
  u64 range = 5;
  u64 n0 = 2;
  u64 q0 = 3;

  /// Throws std::invalid_argument on violated constraints.
  void validate() const;
  ArithmeticFunction f() const;
  RangeQFunction g() const;
};

struct ReefReport {
  Rational lhs;     // C_{f,g}(N, a)
  Rational rhs;     // sum_{l <= Q} coefficient(l) c_l(a)
  Rational defect;  // lhs - rhs
};

/// sum_{l <= Q} (ghat(l)/phi(l)) (sum_{n <= N} f(n) c_l(n)) c_l(a).
Rational reef_rhs(const ArithmeticFunction& f, const RangeQFunction& g, u64 length, u64 a);
Rational reef_rhs(const CorrelationTable& table, u64 a);

ReefReport reef_report(const ArithmeticFunction& f, const RangeQFunction& g, u64 length, u64 a);

/// The a = 1 instance with n0 = -1 mod q0: lhs = phi(q0), rhs = mu(q0)^2/phi(q0).
/// Throws std::invalid_argument unless n0 = -1 mod q0.
ReefReport counterexample1(u64 length, u64 range, u64 n0, u64 q0);

/// prod(1 - 1/p) sum_{t in (Q)} c_q(n + t) c_l(t)/t. Exact in closed form
/// when q | n; otherwise truncated with radius from |c_q| <= phi(q) and
/// |c_l(t)| <= (l, t).
BoundedValue conjecture1_eval(const SmoothContext& ctx, u64 q, u64 ell, i64 n,
                              const Truncation& trunc = {});

/// 1_{q=l} c_l(n).
Rational conjecture1_expected(u64 q, u64 ell, i64 n);

enum class PointStatus { kConsistent, kViolation, kUndecided };

std::string to_string(PointStatus status);

struct Conjecture1Point {
  u64 q = 1;
  u64 ell = 1;
  i64 n = 0;
  BoundedValue interval;
  Rational expected;
  PointStatus status = PointStatus::kUndecided;
  u64 cutoff = 0;
};

struct SweepOptions {
  u64 max_index = 0;   // q, l <= max_index; 0 means lcm(2, ..., Q)
  u64 max_shift = 0;   // |n| <= max_shift; 0 means lcm(2, ..., Q)
  u64 start_cutoff = 10000;
  u64 cutoff_cap = u64{1} << 24;
  std::size_t stop_after = 1;  // witnesses to collect; 0 sweeps everything
};

struct SweepResult {
  std::vector<Conjecture1Point> witnesses;
  std::vector<Conjecture1Point> undecided;
  std::size_t points = 0;
  std::size_t consistent = 0;
};

/// Evaluates one point, doubling X while the interval still contains the
/// conjectured value and is not exact, up to the cap.
Conjecture1Point conjecture1_point(const SmoothContext& ctx, u64 q, u64 ell, i64 n,
                                   u64 start_cutoff, u64 cutoff_cap);

/// Order: q ascending, then l, then |n| with n before -n.
SweepResult conjecture1_sweep(const SmoothContext& ctx, const SweepOptions& options = {});

struct ResidualRow {
  u64 a = 1;
  Rational lhs;
  Rational rhs;
  Rational defect;
};

struct ResidualTable {
  std::vector<ResidualRow> rows;
  Rational max_abs_defect;
  /// Same maximum over a <= N^(1 - delta).
  Rational max_abs_defect_in_range;
  u64 shifts_in_range = 0;
  Rational delta;
};

/// True iff a <= N^(1 - delta), decided with integers.
bool within_power_range(u64 a, u64 length, const Rational& delta);

ResidualTable approximate_reef_residual(const ArithmeticFunction& f, const RangeQFunction& g,
                                        u64 length, u64 max_shift, const Rational& delta);

struct ReefTailPoint {
  u64 v = 2;
  BoundedValue tail;
};

/// Non-smooth tails at shift a for each V in `bounds`.
std::vector<ReefTailPoint> asymptotic_reef_profile(const CorrelationTable& table, u64 a,
                                                   u64 max_index,
                                                   const std::vector<u64>& bounds,
                                                   const Truncation& trunc = {});

/// A seeded BH pair: f a random small-rational table on [1, N], g' random
/// on [1, Q] with Q <= N.
struct BhInstance {
  std::string label;
  ArithmeticFunction f;
  RangeQFunction g;
  u64 length;
};

/// Draws N in [Q, max_length] and Q in [1, max_range] from the generator.
/// Entries are p/q with |p| <= 5, 1 <= q <= 4, about a third of them zero.
BhInstance random_bh_instance(std::mt19937_64& rng, u64 max_length, u64 max_range);

/// Catalog pairs: f from the catalog, g of small range.
std::vector<BhInstance> catalog_bh_instances();

}  // namespace smoothram
