#include "smoothram/transforms.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace smoothram {

namespace {

Rational rational_pow(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return out;
}

Rational ratio(i64 num, u64 den = 1) { return make_rational(num, static_cast<i64>(den)); }

u64 parse_index(std::string_view text) {
  if (text.empty()) throw ParseError("empty index");
  u64 n = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("bad index '" + std::string(text) + "'");
    if (n > (UINT64_MAX - 9) / 10) throw ParseError("index too large");
    n = n * 10 + static_cast<u64>(c - '0');
  }
  if (n == 0) throw ParseError("index 0 is not allowed");
  return n;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

void GrowthCertificate::validate() const {
  if (constant <= 0) throw CertificateError("certificate constant must be positive");
  if (exponent < 0 || exponent >= 1) {
    throw CertificateError("certificate exponent must lie in [0, 1), got " + to_string(exponent));
  }
}

bool GrowthCertificate::admits(u64 n, const Rational& value) const {
  // |v| <= C n^(u/w)  <=>  |v|^w <= C^w n^u
  const unsigned long w = exponent.get_den().get_ui();
  const unsigned long u = exponent.get_num().get_ui();
  Integer nu;
  mpz_ui_pow_ui(nu.get_mpz_t(), n, u);
  return rational_pow(abs_value(value), w) <= rational_pow(constant, w) * nu;
}

ArithmeticFunction::ArithmeticFunction(Parts parts)
    : parts_(std::make_shared<const Parts>(std::move(parts))) {
  if (!parts_->values && !parts_->transform) {
    throw std::invalid_argument("ArithmeticFunction needs values or a transform");
  }
  if (parts_->value_certificate) parts_->value_certificate->validate();
  if (parts_->transform_certificate) parts_->transform_certificate->validate();
}

Rational ArithmeticFunction::value(u64 n) const {
  if (n == 0) throw std::out_of_range(name() + ": n must be positive");
  if (parts_->domain_limit && n > *parts_->domain_limit) {
    throw std::out_of_range(name() + ": n = " + std::to_string(n) + " beyond table bound " +
                            std::to_string(*parts_->domain_limit));
  }
  if (parts_->values) return parts_->values(n);
  Rational sum = 0;
  for (u64 d : divisors(n)) {
    if (parts_->transform_support && d > *parts_->transform_support) break;
    sum += parts_->transform(d);
  }
  return sum;
}

Rational ArithmeticFunction::transform(u64 n) const {
  if (n == 0) throw std::out_of_range(name() + ": n must be positive");
  if (parts_->transform_support && n > *parts_->transform_support) return 0;
  if (parts_->domain_limit && n > *parts_->domain_limit) {
    throw std::out_of_range(name() + ": transform at " + std::to_string(n) +
                            " beyond table bound " + std::to_string(*parts_->domain_limit));
  }
  if (parts_->transform) return parts_->transform(n);
  Rational sum = 0;
  for (u64 d : divisors(n)) {
    const int m = mobius(n / d);
    if (m != 0) sum += m * parts_->values(d);
  }
  return sum;
}

void ArithmeticFunction::audit_certificates(u64 limit) const {
  if (parts_->domain_limit) limit = std::min(limit, *parts_->domain_limit);
  auto audit = [&](const GrowthCertificate& cert, bool transform_side) {
    for (u64 n = 1; n <= limit; ++n) {
      const Rational v = transform_side ? transform(n) : value(n);
      if (!cert.admits(n, v)) {
        throw CertificateError(name() + ": " + (transform_side ? "transform" : "value") +
                               " certificate (C=" + to_string(cert.constant) +
                               ", eps=" + to_string(cert.exponent) + ") fails at n=" +
                               std::to_string(n) + " with value " + to_string(v));
      }
    }
  };
  if (parts_->value_certificate) audit(*parts_->value_certificate, false);
  if (parts_->transform_certificate) audit(*parts_->transform_certificate, true);
}

ArithmeticFunction ArithmeticFunction::constant_one() {
  Parts p;
  p.name = "constant-one";
  p.mode = SpecMode::kEratosthenesGiven;
  p.values = [](u64) { return Rational(1); };
  p.transform = [](u64 n) { return Rational(n == 1 ? 1 : 0); };
  p.value_certificate = GrowthCertificate{1, 0};
  p.transform_certificate = GrowthCertificate{1, 0};
  p.transform_support = 1;
  return ArithmeticFunction(std::move(p));
}

ArithmeticFunction ArithmeticFunction::zero() {
  Parts p;
  p.name = "zero";
  p.mode = SpecMode::kEratosthenesGiven;
  p.values = [](u64) { return Rational(0); };
  p.transform = [](u64) { return Rational(0); };
  p.value_certificate = GrowthCertificate{1, 0};
  p.transform_certificate = GrowthCertificate{1, 0};
  p.transform_support = 1;
  return ArithmeticFunction(std::move(p));
}

ArithmeticFunction ArithmeticFunction::indicator(u64 n0) {
  if (n0 == 0) throw std::invalid_argument("indicator: n0 must be positive");
  Parts p;
  p.name = "indicator:" + std::to_string(n0);
  p.mode = SpecMode::kDirectValues;
  p.values = [n0](u64 n) { return Rational(n == n0 ? 1 : 0); };
  // (1_{n0} * mu)(n) = mu(n / n0) when n0 | n.
  p.transform = [n0](u64 n) { return Rational(n % n0 == 0 ? mobius(n / n0) : 0); };
  p.value_certificate = GrowthCertificate{1, 0};
  p.transform_certificate = GrowthCertificate{1, 0};
  return ArithmeticFunction(std::move(p));
}

ArithmeticFunction ArithmeticFunction::ramanujan_sum(u64 q0) {
  auto cq = std::make_shared<const RamanujanSum>(q0);
  Parts p;
  p.name = "ramanujan-sum:" + std::to_string(q0);
  p.mode = SpecMode::kEratosthenesGiven;
  p.values = [cq](u64 n) { return Rational(static_cast<long>((*cq)(static_cast<i64>(n)))); };
  p.transform = [q0](u64 d) {
    return q0 % d == 0 ? ratio(static_cast<i64>(d) * mobius(q0 / d)) : Rational(0);
  };
  p.value_certificate = GrowthCertificate{make_rational(euler_phi(q0), u64{1}), 0};
  p.transform_certificate = GrowthCertificate{make_rational(q0, u64{1}), 0};
  p.transform_support = q0;
  return ArithmeticFunction(std::move(p));
}

ArithmeticFunction ArithmeticFunction::mobius_function() {
  Parts p;
  p.name = "mu";
  p.mode = SpecMode::kDirectValues;
  p.values = [](u64 n) { return Rational(mobius(n)); };
  // mu * mu is multiplicative: p -> -2, p^2 -> 1, p^k -> 0 for k >= 3.
  p.transform = [](u64 n) {
    long v = 1;
    for (const auto& pp : factorize(n)) {
      if (pp.exponent >= 3) return Rational(0);
      if (pp.exponent == 1) v *= -2;
    }
    return Rational(v);
  };
  p.value_certificate = GrowthCertificate{1, 0};
  // 2^{#simple primes} <= 5 n^{1/4}: only p < 16 have 2 > p^{1/4}, and
  // 2^6 / (2*3*5*7*11*13)^{1/4} < 5.
  p.transform_certificate = GrowthCertificate{5, make_rational(i64{1}, i64{4})};
  return ArithmeticFunction(std::move(p));
}

ArithmeticFunction ArithmeticFunction::mobius_squared() {
  Parts p;
  p.name = "mu-squared";
  p.mode = SpecMode::kDirectValues;
  p.values = [](u64 n) { return Rational(mobius(n) == 0 ? 0 : 1); };
  // mu^2 = sum_{d^2 | n} mu(d), so (mu^2)'(n) = mu(sqrt n) on squares.
  p.transform = [](u64 n) {
    u64 r = 1;
    for (const auto& pp : factorize(n)) {
      if (pp.exponent % 2 != 0) return Rational(0);
      for (unsigned i = 0; i < pp.exponent / 2; ++i) r *= pp.prime;
    }
    return Rational(mobius(r));
  };
  p.value_certificate = GrowthCertificate{1, 0};
  p.transform_certificate = GrowthCertificate{1, 0};
  return ArithmeticFunction(std::move(p));
}

ArithmeticFunction ArithmeticFunction::phi_over_n() {
  Parts p;
  p.name = "phi-over-n";
  p.mode = SpecMode::kDirectValues;
  p.values = [](u64 n) { return make_rational(euler_phi(n), n); };
  p.transform = [](u64 n) { return ratio(mobius(n), n); };
  p.value_certificate = GrowthCertificate{1, 0};
  p.transform_certificate = GrowthCertificate{1, 0};
  return ArithmeticFunction(std::move(p));
}

ArithmeticFunction ArithmeticFunction::identity() {
  Parts p;
  p.name = "identity";
  p.mode = SpecMode::kDirectValues;
  p.values = [](u64 n) { return make_rational(n, u64{1}); };
  p.transform = [](u64 n) { return make_rational(euler_phi(n), u64{1}); };
  return ArithmeticFunction(std::move(p));
}

ArithmeticFunction ArithmeticFunction::from_catalog(const std::string& id) {
  const auto colon = id.find(':');
  const std::string head = id.substr(0, colon);
  auto argument = [&]() -> u64 {
    if (colon == std::string::npos) throw ParseError("catalog id '" + id + "' needs ':<n>'");
    return parse_index(std::string_view(id).substr(colon + 1));
  };
  if (head == "constant-one") return constant_one();
  if (head == "zero") return zero();
  if (head == "indicator") return indicator(argument());
  if (head == "ramanujan-sum") return ramanujan_sum(argument());
  if (head == "mu") return mobius_function();
  if (head == "mu-squared") return mobius_squared();
  if (head == "phi-over-n") return phi_over_n();
  if (head == "identity") return identity();
  throw ParseError("unknown catalog id '" + id + "'");
}

ArithmeticFunction ArithmeticFunction::from_values(FunctionTable table,
                                                   std::optional<GrowthCertificate> certificate,
                                                   std::string name) {
  auto values = std::make_shared<const FunctionTable>(std::move(table));
  auto transform = std::make_shared<const FunctionTable>(eratosthenes_transform(*values));
  Parts p;
  p.name = std::move(name);
  p.mode = SpecMode::kDirectValues;
  p.values = [values](u64 n) { return (*values)(n); };
  p.transform = [transform](u64 n) { return (*transform)(n); };
  p.value_certificate = std::move(certificate);
  p.domain_limit = values->upper();
  return ArithmeticFunction(std::move(p));
}

ArithmeticFunction ArithmeticFunction::from_transform(FunctionTable transform,
                                                      std::optional<GrowthCertificate> certificate,
                                                      std::string name) {
  auto table = std::make_shared<const FunctionTable>(std::move(transform));
  // Finite support bounds F by sum |F'(d)|.
  Rational total = 0;
  for (const auto& v : table->values()) total += abs_value(v);
  Parts p;
  p.name = std::move(name);
  p.mode = SpecMode::kEratosthenesGiven;
  p.transform = [table](u64 n) { return (*table)(n); };
  p.transform_certificate = std::move(certificate);
  if (total > 0) p.value_certificate = GrowthCertificate{total, 0};
  p.transform_support = table->upper();
  return ArithmeticFunction(std::move(p));
}

Rational evaluate(const ArithmeticFunction& spec, u64 n) { return spec.value(n); }

Rational smooth_restrict(const ArithmeticFunction& spec, const SmoothContext& ctx, u64 n) {
  Rational sum = 0;
  for (u64 d : divisors(smooth_part(n, ctx))) sum += spec.transform(d);
  return sum;
}

Rational mobius_switch_rhs(const ArithmeticFunction& spec, const SmoothContext& ctx, u64 a) {
  Rational sum = 0;
  for (u64 t : divisors(a)) {
    if (is_smooth(t, ctx) && is_sifted(a / t, ctx)) sum += spec.value(t);
  }
  return sum;
}

RangeQFunction RangeQFunction::build(std::vector<Rational> gprime) {
  if (gprime.empty()) throw std::invalid_argument("RangeQFunction: Q must be >= 1");
  RangeQFunction g;
  g.gprime_ = std::move(gprime);
  const u64 range = g.gprime_.size();
  g.ghat_.assign(range, Rational(0));
  for (u64 q = 1; q <= range; ++q) {
    for (u64 d = q; d <= range; d += q) {
      g.ghat_[q - 1] += g.gprime_[d - 1] / make_rational(d, u64{1});
    }
  }
  return g;
}

RangeQFunction RangeQFunction::from_spec(const ArithmeticFunction& spec, u64 range) {
  std::vector<Rational> gprime;
  gprime.reserve(range);
  for (u64 d = 1; d <= range; ++d) gprime.push_back(spec.transform(d));
  return build(std::move(gprime));
}

RangeQFunction build_range_q(std::vector<Rational> gprime) {
  return RangeQFunction::build(std::move(gprime));
}

Rational RangeQFunction::gprime(u64 d) const {
  if (d == 0) throw std::out_of_range("gprime: d must be positive");
  return d <= range() ? gprime_[d - 1] : Rational(0);
}

Rational RangeQFunction::ghat(u64 q) const {
  if (q == 0) throw std::out_of_range("ghat: q must be positive");
  return q <= range() ? ghat_[q - 1] : Rational(0);
}

Rational RangeQFunction::value(u64 m) const {
  if (m == 0) throw std::out_of_range("RangeQFunction: m must be positive");
  Rational sum = 0;
  const u64 top = std::min<u64>(m, range());
  for (u64 d = 1; d <= top; ++d) {
    if (m % d == 0) sum += gprime_[d - 1];
  }
  return sum;
}

Rational finite_ramanujan_eval(const RangeQFunction& g, u64 m) {
  Rational sum = 0;
  for (u64 q = 1; q <= g.range(); ++q) {
    const Rational& h = g.ghat_values()[q - 1];
    if (h == 0) continue;
    sum += h * Rational(static_cast<long>(ramanujan_sum(q, static_cast<i64>(m))));
  }
  return sum;
}

ArithmeticFunction parse_function_text(std::string_view text, std::string name) {
  std::optional<SpecMode> mode;
  std::optional<Rational> constant;
  std::optional<Rational> exponent;
  std::map<u64, Rational> entries;
  bool header_seen = false;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '#') {
      if (header_seen || !entries.empty()) throw ParseError(where + "unexpected header line");
      header_seen = true;
      std::istringstream tokens{std::string(line)};
      std::string token;
      while (tokens >> token) {
        if (token.front() != '#') throw ParseError(where + "header token '" + token + "'");
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw ParseError(where + "header token '" + token + "'");
        const std::string key = token.substr(1, eq - 1);
        const std::string val = token.substr(eq + 1);
        try {
          if (key == "mode") {
            if (val == "direct") mode = SpecMode::kDirectValues;
            else if (val == "eratosthenes") mode = SpecMode::kEratosthenesGiven;
            else throw ParseError("unknown mode '" + val + "'");
          } else if (key == "C") {
            constant = parse_rational(val);
          } else if (key == "eps") {
            exponent = parse_rational(val);
          } else {
            throw ParseError("unknown header key '" + key + "'");
          }
        } catch (const ParseError& e) {
          throw ParseError(where + e.what());
        }
      }
      continue;
    }

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError(where + "expected 'n<TAB>p/q'");
    u64 n;
    Rational v;
    try {
      n = parse_index(trim(line.substr(0, tab)));
      v = parse_rational(trim(line.substr(tab + 1)));
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
    if (!entries.emplace(n, v).second) {
      throw ParseError(where + "duplicate index " + std::to_string(n));
    }
  }

  if (!mode) throw ParseError("missing '#mode=' header");
  if (entries.empty()) throw ParseError("no entries");
  if (exponent && !constant) throw ParseError("'#eps=' given without '#C='");
  std::optional<GrowthCertificate> certificate;
  if (constant) certificate = GrowthCertificate{*constant, exponent.value_or(Rational(0))};

  const u64 upper = entries.rbegin()->first;
  if (upper > (u64{1} << 24)) throw ParseError("table index " + std::to_string(upper) + " too large");
  std::vector<Rational> values(upper, Rational(0));
  for (const auto& [n, v] : entries) values[n - 1] = v;

  if (*mode == SpecMode::kDirectValues) {
    if (entries.size() != upper) {
      u64 missing = 1;
      while (entries.count(missing)) ++missing;
      throw ParseError("direct table misses index " + std::to_string(missing));
    }
    auto spec = ArithmeticFunction::from_values(FunctionTable(std::move(values)), certificate,
                                                std::move(name));
    spec.audit_certificates();
    return spec;
  }
  auto spec = ArithmeticFunction::from_transform(FunctionTable(std::move(values)), certificate,
                                                 std::move(name));
  spec.audit_certificates();
  return spec;
}

ArithmeticFunction parse_function_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_function_text(buffer.str(), path);
}

}  // namespace smoothram
