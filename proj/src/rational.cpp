#include "smoothram/rational.hpp"

#include <algorithm>
#include <cctype>

namespace smoothram {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

Rational make_rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(Integer(static_cast<unsigned long>(num)),
             Integer(static_cast<unsigned long>(den)));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) {
    throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational abs_value(const Rational& value) { return abs(value); }

Rational pow_exact(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  Rational b = base;
  if (exponent < 0) {
    if (b == 0) throw std::domain_error("zero to a negative power");
    b = 1 / b;
    exponent = -exponent;
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), b.get_den().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Rational pow_bound(const Rational& base, const Rational& exponent,
                   unsigned fraction_bits, bool upper) {
  if (base <= 0) throw std::domain_error("pow bound needs a positive base");
  Integer u = exponent.get_num();
  const Integer& v = exponent.get_den();
  if (u == 0) return Rational(1);
  if (!u.fits_slong_p() || !v.fits_ulong_p() || abs(u) > 100000 ||
      v > 100000) {
    throw std::domain_error("exponent too large for exact power bounds");
  }
  const Rational y = pow_exact(base, u.get_si());
  const unsigned long root = v.get_ui();
  if (root == 1) return y;

  // Pick the dyadic scale so the root has at least fraction_bits bits.
  long shift = (static_cast<long>(mpz_sizeinbase(y.get_den().get_mpz_t(), 2)) -
                static_cast<long>(mpz_sizeinbase(y.get_num().get_mpz_t(), 2))) /
                   static_cast<long>(root) +
               2;
  const unsigned long k = fraction_bits + static_cast<unsigned long>(std::max(0L, shift));

  Integer scaled_num = y.get_num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), k * root);
  Integer t;
  if (upper) {
    mpz_cdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), y.get_den().get_mpz_t());
  } else {
    mpz_fdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), y.get_den().get_mpz_t());
  }
  Integer r;
  mpz_root(r.get_mpz_t(), t.get_mpz_t(), root);
  if (upper) {
    Integer check;
    mpz_pow_ui(check.get_mpz_t(), r.get_mpz_t(), root);
    if (check < t) r += 1;
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, k);
  Rational out(r, scale);
  out.canonicalize();
  return out;
}

}  // namespace

Rational pow_upper(const Rational& base, const Rational& exponent,
                   unsigned fraction_bits) {
  return pow_bound(base, exponent, fraction_bits, true);
}

Rational pow_lower(const Rational& base, const Rational& exponent,
                   unsigned fraction_bits) {
  return pow_bound(base, exponent, fraction_bits, false);
}

ScaledIntegers ScaledIntegers::from(const std::vector<Rational>& values) {
  ScaledIntegers out;
  Integer den = 1;
  for (const auto& v : values) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  }
  out.denominator = den;
  out.numerators.reserve(values.size());
  for (const auto& v : values) {
    out.numerators.push_back(v.get_num() * (den / v.get_den()));
  }
  return out;
}

Rational ScaledIntegers::at(std::size_t i) const {
  Rational r(numerators.at(i), denominator);
  r.canonicalize();
  return r;
}

}  // namespace smoothram
