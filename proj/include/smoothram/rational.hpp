#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smoothram {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised on malformed input text (rationals, function files, CLI values).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a growth certificate is invalid or fails its sampling audit.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a certified truncation cannot reach its target radius below
/// the configured cutoff cap.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(std::uint64_t num, std::uint64_t den = 1);
inline Rational make_rational(int num, int den = 1) {
  return make_rational(std::int64_t{num}, std::int64_t{den});
}

/// Canonical "p/q" text: lowest terms, denominator always present, leading
/// '-' for negatives.
std::string to_string(const Rational& value);

/// Accepts "p", "p/q", with optional leading sign. No decimal points or
/// exponents; q must be nonzero.
Rational parse_rational(std::string_view text);

Rational abs_value(const Rational& value);

/// Upper and lower dyadic bounds for base^exponent with base > 0 and a
/// rational exponent. The results are certified in the stated direction and
/// exact whenever the root is exact.
Rational pow_upper(const Rational& base, const Rational& exponent,
                   unsigned fraction_bits = 96);
Rational pow_lower(const Rational& base, const Rational& exponent,
                   unsigned fraction_bits = 96);

/// Exact power for integer exponents (negative allowed).
Rational pow_exact(const Rational& base, long exponent);

/// Integers over a shared denominator. Used for fast exact dot products.
struct ScaledIntegers {
  std::vector<Integer> numerators;
  Integer denominator{1};

  static ScaledIntegers from(const std::vector<Rational>& values);
  Rational at(std::size_t i) const;
};

}  // namespace smoothram
