#pragma once

// Orthogonality of Ramanujan sums twisted by the smooth weight 1/t:
//   (1 / sum_{t in (Q)} 1/t) sum_{t in (Q)} c_q(t) c_l(t) / t = phi(l) 1_{q=l}.

#include <vector>

#include "smoothram/bounded_value.hpp"
#include "smoothram/coefficients.hpp"

namespace smoothram {

/// sum_{q' | q} sum_{l' | l} mu(q/q') mu(l/l') (l', q'). Defined for all
/// q, l >= 1.
Rational prop2_exact(u64 q, u64 ell);

/// prod(1 - 1/p) sum_{t in (Q), t <= X} c_q(t) c_l(t)/t with the exact tail
/// of the majorant (q, t)(l, t)/t as radius. Rejects non-smooth q or l.
BoundedValue prop2_truncated(const SmoothContext& ctx, u64 q, u64 ell,
                             const Truncation& trunc = {});

/// The same series summed in closed form over capped-valuation classes.
Rational prop2_series_closed_form(const SmoothContext& ctx, u64 q, u64 ell);

/// Encloses sum_{t in (Q)} |c_q(t) c_l(t)|/t between the partial sum and
/// the partial sum plus the majorant tail.
BoundedValue remark3_absolute_convergence(const SmoothContext& ctx, u64 q, u64 ell,
                                          const Truncation& trunc = {});

struct OrthogonalityResult {
  u64 q = 1;
  u64 ell = 1;
  Rational exact_value;
  BoundedValue truncated;
  Rational expected;  // phi(l) 1_{q=l}
};

OrthogonalityResult orthogonality_result(const SmoothContext& ctx, u64 q, u64 ell,
                                         const Truncation& trunc = {});

/// Exact matrix of prop2_exact over the smooth indices <= max_index.
struct OrthogonalityMatrix {
  std::vector<u64> indices;
  std::vector<std::vector<Rational>> values;  // [row q][column l]
};

OrthogonalityMatrix orthogonality_matrix(const SmoothContext& ctx, u64 max_index);

/// (1/L) sum_{a <= L} c_l(a) c_q(n + a) with L = lcm(l, q); equals
/// 1_{q=l} c_l(n).
Rational carmichael_orthogonality_mean(u64 ell, u64 q, i64 n);

}  // namespace smoothram
