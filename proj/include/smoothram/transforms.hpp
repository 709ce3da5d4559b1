#pragma once

// Arithmetic functions given by values or by their Eratosthenes transform,
// plus the finite-range functions g used in correlations.

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smoothram/arith_core.hpp"
#include "smoothram/smooth_numbers.hpp"

namespace smoothram {

enum class SpecMode { kDirectValues, kEratosthenesGiven };

/// Asserts |h(n)| <= constant * n^exponent for all n >= 1, exponent in [0, 1).
struct GrowthCertificate {
  Rational constant;
  Rational exponent;

  /// Throws CertificateError on constant <= 0 or exponent outside [0, 1).
  void validate() const;
  /// Exact check of |value| <= constant * n^exponent.
  bool admits(u64 n, const Rational& value) const;
};

/// An arithmetic function F together with its Eratosthenes transform F'.
/// Either side may be primary; the other is derived by (inverse) Mobius
/// inversion. Certificates bound F and F' separately.
class ArithmeticFunction {
 public:
  using Evaluator = std::function<Rational(u64)>;

  struct Parts {
    std::string name;
    SpecMode mode = SpecMode::kDirectValues;
    Evaluator values;     // F, may be empty when mode is kEratosthenesGiven
    Evaluator transform;  // F', may be empty when mode is kDirectValues
    std::optional<GrowthCertificate> value_certificate;
    std::optional<GrowthCertificate> transform_certificate;
    /// F' vanishes beyond this bound.
    std::optional<u64> transform_support;
    /// F (and hence F') only defined on [1, domain_limit].
    std::optional<u64> domain_limit;
  };

  explicit ArithmeticFunction(Parts parts);

  // Catalog.
  static ArithmeticFunction constant_one();
  static ArithmeticFunction indicator(u64 n0);
  static ArithmeticFunction ramanujan_sum(u64 q0);
  static ArithmeticFunction mobius_function();
  static ArithmeticFunction mobius_squared();
  static ArithmeticFunction phi_over_n();
  /// F(n) = n, F' = phi. Carries no transform certificate (none exists).
  static ArithmeticFunction identity();
  static ArithmeticFunction zero();
  /// Looks up a catalog id such as "constant-one", "indicator:5",
  /// "ramanujan-sum:3", "mu", "mu-squared", "phi-over-n", "identity", "zero".
  static ArithmeticFunction from_catalog(const std::string& id);

  /// Direct values on [1, X]; F' is computed once on the same window.
  static ArithmeticFunction from_values(FunctionTable table,
                                        std::optional<GrowthCertificate> certificate,
                                        std::string name = "table");
  /// F' given on [1, D] and zero beyond; F(n) = sum_{d | n, d <= D} F'(d).
  static ArithmeticFunction from_transform(FunctionTable transform,
                                           std::optional<GrowthCertificate> certificate,
                                           std::string name = "table");

  const std::string& name() const { return parts_->name; }
  SpecMode mode() const { return parts_->mode; }

  Rational value(u64 n) const;
  Rational transform(u64 n) const;

  const std::optional<GrowthCertificate>& value_certificate() const {
    return parts_->value_certificate;
  }
  const std::optional<GrowthCertificate>& transform_certificate() const {
    return parts_->transform_certificate;
  }
  const std::optional<u64>& transform_support() const { return parts_->transform_support; }
  const std::optional<u64>& domain_limit() const { return parts_->domain_limit; }

  /// Samples n <= limit (clipped to the domain) and throws CertificateError
  /// on the first value exceeding its certificate.
  void audit_certificates(u64 limit = 10000) const;

 private:
  std::shared_ptr<const Parts> parts_;
};

/// F(n).
Rational evaluate(const ArithmeticFunction& spec, u64 n);

/// F_(Q)(n) = sum over Q-smooth divisors d of n of F'(d).
Rational smooth_restrict(const ArithmeticFunction& spec, const SmoothContext& ctx, u64 n);

/// sum over t | a with t Q-smooth and a/t Q-sifted of F(t).
Rational mobius_switch_rhs(const ArithmeticFunction& spec, const SmoothContext& ctx, u64 a);

/// g(m) = sum_{d | m, d <= Q} g'(d) with ghat(q) = sum_{d <= Q, q | d} g'(d)/d.
class RangeQFunction {
 public:
  /// gprime[k] is g'(k + 1); Q = gprime.size().
  static RangeQFunction build(std::vector<Rational> gprime);
  /// Truncates spec's transform to [1, Q].
  static RangeQFunction from_spec(const ArithmeticFunction& spec, u64 range);

  u64 range() const { return gprime_.size(); }
  Rational gprime(u64 d) const;
  /// Zero for q > Q.
  Rational ghat(u64 q) const;
  /// Direct truncated divisor sum.
  Rational value(u64 m) const;

  std::span<const Rational> gprime_values() const { return gprime_; }
  std::span<const Rational> ghat_values() const { return ghat_; }

 private:
  std::vector<Rational> gprime_;
  std::vector<Rational> ghat_;
};

RangeQFunction build_range_q(std::vector<Rational> gprime);

/// Parses the tab-separated function format:
///
///   #mode=direct|eratosthenes #C=<rational> #eps=<rational>
///   n<TAB>p/q
///
/// Eratosthenes tables treat missing indices as 0; direct tables must cover
/// every n in [1, max n]. The certificate (if any) is audited before return.
ArithmeticFunction parse_function_text(std::string_view text, std::string name = "file");
ArithmeticFunction parse_function_file(const std::string& path);

/// sum_{q <= Q} ghat(q) c_q(m).
Rational finite_ramanujan_eval(const RangeQFunction& g, u64 m);

}  // namespace smoothram
