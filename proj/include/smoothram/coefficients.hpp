#pragma once

// Carmichael and Wintner coefficients of smooth restrictions F_(V).
// The smooth Ramanujan expansion and its summability checks sit on top.

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "smoothram/bounded_value.hpp"
#include "smoothram/transforms.hpp"

namespace smoothram {

/// Cutoff for truncated smooth series. The Rankin shift is tuned over the
/// grid j/16 unless `delta` is given; epsilon always comes from the
/// function's own growth certificate.
struct Truncation {
  u64 cutoff = 10000;
  std::optional<Rational> delta;
};

/// Raised when a caller-asserted period does not hold.
class PeriodicityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Win_l(F_(V)) = sum_{d in (V), l | d} F'(d)/d. Exactly 0 for l not in (V);
/// exact when F' has finite support; otherwise the partial sum over d <= X
/// with a tail radius from the transform certificate.
BoundedValue wintner_restricted(const ArithmeticFunction& spec, const SmoothContext& ctx,
                                u64 ell, const Truncation& trunc = {});

/// prod(1 - 1/p) / phi(l) * sum_{t in (V)} F(t) c_l(t) / t for l in (V).
/// Evaluated in closed form over capped-valuation classes when F' has
/// finite support, otherwise truncated at X with a certified tail.
BoundedValue carmichael_formula(const ArithmeticFunction& spec, const SmoothContext& ctx,
                                u64 ell, const Truncation& trunc = {});

/// (1/phi(l)) (1/x) sum_{n <= x} F(n) c_l(n) for each x. Diagnostic only.
std::vector<std::pair<u64, Rational>> carmichael_empirical(const ArithmeticFunction& spec,
                                                           u64 ell,
                                                           const std::vector<u64>& xs);

/// Cesaro mean for an F of period T: (1/phi(l)) (1/L) sum_{a <= L} F(a) c_l(a)
/// with L = lcm(T, l). F(a) = F(a + T) is audited for a <= T first.
Rational carmichael_periodic_exact(const std::function<Rational(u64)>& f, u64 period, u64 ell);

struct ExpansionResult {
  BoundedValue partial;  // sum_{l in (V), l <= L} Win_l c_l(a)
  Rational target;       // F_(V)(a)
  Rational residual;     // |partial.center - target|
};

ExpansionResult re_expansion_partial(const ArithmeticFunction& spec, const SmoothContext& ctx,
                                     u64 a, u64 max_index, const Truncation& trunc = {});

struct CoefficientRecord {
  u64 ell = 1;
  BoundedValue wintner;
  BoundedValue carmichael;
  std::vector<std::pair<u64, Rational>> carmichael_empirical;
  /// "zero" (l not smooth), "exact" or "truncated".
  std::string method;
  u64 cutoff = 0;
};

CoefficientRecord coefficient_record(const ArithmeticFunction& spec, const SmoothContext& ctx,
                                     u64 ell, const Truncation& trunc = {});

/// Doubles the cutoff from `trunc.cutoff` until both radii are <= target.
/// Throws TruncationError once the cutoff would exceed `cap`.
CoefficientRecord coefficient_record_to_target(const ArithmeticFunction& spec,
                                               const SmoothContext& ctx, u64 ell,
                                               const Rational& target, Truncation trunc = {},
                                               u64 cap = u64{1} << 22);

/// Records for every l in [1, L].
std::vector<CoefficientRecord> coefficient_table(const ArithmeticFunction& spec,
                                                 const SmoothContext& ctx, u64 max_index,
                                                 const Truncation& trunc = {});

struct DelangeCheck {
  Rational partial;     // sum_{l <= L} 2^omega(l) |Win_l| using upper interval ends
  Rational tail_bound;  // certified bound on the same sum over l > L
};

/// Needs records for every l in (V) up to L.
DelangeCheck dual_delange_check(const ArithmeticFunction& spec, const SmoothContext& ctx,
                                const std::vector<CoefficientRecord>& records, u64 max_index,
                                const Truncation& trunc = {});

struct UniquenessReport {
  std::vector<u64> flagged;    // candidate outside the record interval
  std::vector<u64> unchecked;  // no record for this index
  bool consistent() const { return flagged.empty(); }
};

UniquenessReport uniqueness_compare(const std::map<u64, Rational>& candidate,
                                    const std::vector<CoefficientRecord>& records);

}  // namespace smoothram
