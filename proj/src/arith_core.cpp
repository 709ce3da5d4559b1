#include "smoothram/arith_core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace smoothram {

namespace {

constexpr u64 kCachedPrimeLimit = 1u << 16;
constexpr u64 kResidueCacheLimit = 1u << 16;

const std::vector<u64>& cached_primes() {
  static const std::vector<u64> primes = primes_up_to(kCachedPrimeLimit);
  return primes;
}

// Value of c_{p^a}(n) given b = min(v_p(n), a).
i64 local_ramanujan(u64 p, unsigned a, unsigned b) {
  i64 pa1 = 1;
  for (unsigned i = 1; i < a; ++i) pa1 *= static_cast<i64>(p);
  if (b >= a) return pa1 * static_cast<i64>(p) - pa1;
  if (b + 1 == a) return -pa1;
  return 0;
}

unsigned capped_valuation(u64 p, u64 n, unsigned cap) {
  unsigned v = 0;
  while (v < cap && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<PrimePower> factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> out;
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  for (u64 p : cached_primes()) {
    if (p * p > n) break;
    take(p);
  }
  // Beyond the cached list continue with odd candidates.
  for (u64 p = kCachedPrimeLimit + 1; p <= n / p; p += 2) take(p);
  if (n > 1) out.push_back({n, 1});
  return out;
}

FactoredInteger::FactoredInteger(u64 n) : n_(n), factors_(factorize(n)) {}

int mobius(u64 n) {
  int sign = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

unsigned omega(u64 n) { return static_cast<unsigned>(factorize(n).size()); }

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& pp : factorize(n)) {
    const std::size_t base = out.size();
    u64 power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 lcm_checked(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  const u64 g = std::gcd(a, b);
  const u64 q = a / g;
  if (q > UINT64_MAX / b) throw std::overflow_error("lcm overflows 64 bits");
  return q * b;
}

i64 ramanujan_sum(u64 q, i64 n) { return RamanujanSum(q)(n); }

RamanujanSum::RamanujanSum(u64 q) : q_(q) {
  if (q == 0) throw std::invalid_argument("ramanujan_sum: modulus must be positive");
  factors_ = factorize(q);
  if (q <= kResidueCacheLimit) {
    by_residue_.resize(q);
    for (u64 r = 0; r < q; ++r) {
      i64 value = 1;
      for (const auto& pp : factors_) {
        const unsigned b = r == 0 ? pp.exponent : capped_valuation(pp.prime, r, pp.exponent);
        value *= local_ramanujan(pp.prime, pp.exponent, b);
        if (value == 0) break;
      }
      by_residue_[r] = value;
    }
  }
}

i64 RamanujanSum::at_residue(u64 r) const {
  if (!by_residue_.empty()) return by_residue_[r];
  // The divisor sum over d | (q, r) factors prime by prime.
  i64 value = 1;
  for (const auto& pp : factors_) {
    const unsigned b = r == 0 ? pp.exponent : capped_valuation(pp.prime, r, pp.exponent);
    value *= local_ramanujan(pp.prime, pp.exponent, b);
    if (value == 0) break;
  }
  return value;
}

i64 RamanujanSum::operator()(i64 n) const {
  const i64 q = static_cast<i64>(q_);
  i64 r = n % q;
  if (r < 0) r += q;
  return at_residue(static_cast<u64>(r));
}

FunctionTable::FunctionTable(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("FunctionTable needs X >= 1");
}

FunctionTable FunctionTable::generate(u64 upper, const std::function<Rational(u64)>& f) {
  std::vector<Rational> values;
  values.reserve(upper);
  for (u64 n = 1; n <= upper; ++n) values.push_back(f(n));
  return FunctionTable(std::move(values));
}

const Rational& FunctionTable::operator()(u64 n) const {
  if (n == 0 || n > values_.size()) {
    throw std::out_of_range("FunctionTable index " + std::to_string(n) +
                            " outside [1, " + std::to_string(values_.size()) + "]");
  }
  return values_[n - 1];
}

FunctionTable eratosthenes_transform(const FunctionTable& table) {
  const u64 x = table.upper();
  std::vector<Rational> v(table.values().begin(), table.values().end());
  // F * mu = prod_p (1 - S_p), S_p shifting n -> n/p; descend so that
  // v[n/p] still holds the pre-pass value.
  for (u64 p : primes_up_to(x)) {
    for (u64 i = (x / p) * p; i >= p; i -= p) v[i - 1] -= v[i / p - 1];
  }
  return FunctionTable(std::move(v));
}

FunctionTable inverse_transform(const FunctionTable& transform) {
  const u64 x = transform.upper();
  std::vector<Rational> v(transform.values().begin(), transform.values().end());
  for (u64 p : primes_up_to(x)) {
    for (u64 i = p; i <= x; i += p) v[i - 1] += v[i / p - 1];
  }
  return FunctionTable(std::move(v));
}

FunctionTable dirichlet_convolution(const FunctionTable& a, const FunctionTable& b) {
  const u64 x = std::min(a.upper(), b.upper());
  std::vector<Rational> v(x);
  for (u64 d = 1; d <= x; ++d) {
    if (a(d) == 0) continue;
    for (u64 m = 1; d * m <= x; ++m) v[d * m - 1] += a(d) * b(m);
  }
  return FunctionTable(std::move(v));
}

}  // namespace smoothram
