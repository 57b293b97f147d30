#include "semicat/semiring.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "semicat/error.hpp"

namespace semicat {

namespace {

bool integral(const Rational& x) { return denominator(x.value) == 1; }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::size_t alternative_for(SemiringKind kind) {
  switch (kind) {
    case SemiringKind::boolean: return 0;
    case SemiringKind::natural: return 1;
    case SemiringKind::integer: return 2;
    case SemiringKind::rational: return 3;
    case SemiringKind::real: return 4;
    case SemiringKind::complex: return 5;
    case SemiringKind::split_complex: return 6;
    case SemiringKind::prime_field: return 7;
    case SemiringKind::quantale: return 8;
  }
  return 0;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint32_t exp, std::uint32_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

/// "a" followed by "+b<unit>" or "-b<unit>", with magnitude printed unsigned.
std::string format_pair(double re, double im, char unit) {
  std::string out = format_double(re);
  out += std::signbit(im) ? '-' : '+';
  out += format_double(std::fabs(im));
  out += unit;
  return out;
}

struct LiteralReader {
  std::string_view spec;
  std::string_view text;

  [[noreturn]] void fail(std::size_t pos, std::string_view reason) const {
    std::ostringstream msg;
    msg << spec << ": malformed literal '" << text << "' at position " << pos
        << ": " << reason;
    throw ParseError(msg.str(), pos);
  }

  // Parses [sign]digits spanning exactly [begin, end).
  BigInt integer(std::size_t begin, std::size_t end, bool allow_sign) const {
    std::size_t i = begin;
    bool negative = false;
    if (i < end && (text[i] == '+' || text[i] == '-')) {
      if (!allow_sign) fail(i, "sign not allowed");
      negative = text[i] == '-';
      ++i;
    }
    if (i == end) fail(i, "expected digits");
    for (std::size_t k = i; k < end; ++k) {
      if (text[k] < '0' || text[k] > '9') fail(k, "expected a digit");
    }
    BigInt v(std::string(text.substr(i, end - i)));
    return negative ? BigInt(-v) : v;
  }

  double floating(std::size_t begin, std::size_t end) const {
    std::size_t i = begin;
    if (i < end && text[i] == '+') ++i;
    if (i == end) fail(i, "expected a number");
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + end, v);
    auto stop = static_cast<std::size_t>(ptr - text.data());
    if (ec != std::errc() || stop != end) fail(ec != std::errc() ? i : stop, "expected a decimal number");
    if (!std::isfinite(v)) fail(i, "non-finite value");
    return v;
  }

  // "a", "b<unit>", "a+b<unit>", "a-b<unit>"; an empty magnitude means 1.
  std::pair<double, double> pair(char unit) const {
    const std::size_t n = text.size();
    if (n == 0) fail(0, "empty literal");
    if (text[n - 1] != unit) return {floating(0, n), 0.0};
    std::size_t split = std::string_view::npos;
    for (std::size_t k = n - 1; k-- > 1;) {
      if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    auto imaginary = [&](std::size_t begin) {
      const std::size_t end = n - 1;
      std::size_t i = begin;
      double sign = 1.0;
      if (i < end && (text[i] == '+' || text[i] == '-')) {
        sign = text[i] == '-' ? -1.0 : 1.0;
        ++i;
      }
      if (i == end) return sign;
      return sign * floating(i, end);
    };
    if (split == std::string_view::npos) return {0.0, imaginary(0)};
    return {floating(0, split), imaginary(split)};
  }
};

}  // namespace

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Semiring Semiring::boolean() { return {SemiringKind::boolean, 0.0, 0}; }
Semiring Semiring::natural() { return {SemiringKind::natural, 0.0, 0}; }
Semiring Semiring::integer() { return {SemiringKind::integer, 0.0, 0}; }
Semiring Semiring::rational() { return {SemiringKind::rational, 0.0, 0}; }
Semiring Semiring::real(double tolerance) { return {SemiringKind::real, tolerance, 0}; }
Semiring Semiring::complex(double tolerance) { return {SemiringKind::complex, tolerance, 0}; }
Semiring Semiring::split_complex(double tolerance) {
  return {SemiringKind::split_complex, tolerance, 0};
}
Semiring Semiring::quantale() { return {SemiringKind::quantale, 0.0, 0}; }

Semiring Semiring::prime_field(std::uint32_t p) {
  if (p > 97 || !is_prime(p)) {
    throw UsageError("prime field modulus must be a prime <= 97, got " + std::to_string(p));
  }
  return {SemiringKind::prime_field, 0.0, p};
}

Semiring Semiring::by_name(std::string_view name) {
  if (name == "bool") return boolean();
  if (name == "nat") return natural();
  if (name == "int") return integer();
  if (name == "rational") return rational();
  if (name == "real") return real();
  if (name == "complex") return complex();
  if (name == "split-complex") return split_complex();
  if (name == "quantale") return quantale();
  if (name.size() > 1 && name[0] == 'z') {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), p);
    if (ec == std::errc() && ptr == name.data() + name.size()) return prime_field(p);
  }
  throw UsageError("unknown semiring '" + std::string(name) + "'");
}

std::vector<Semiring> Semiring::registered() {
  return {boolean(),  natural(), integer(),       rational(),       real(),
          complex(),  split_complex(), prime_field(5), quantale()};
}

std::string Semiring::name() const {
  switch (kind_) {
    case SemiringKind::boolean: return "bool";
    case SemiringKind::natural: return "nat";
    case SemiringKind::integer: return "int";
    case SemiringKind::rational: return "rational";
    case SemiringKind::real: return "real";
    case SemiringKind::complex: return "complex";
    case SemiringKind::split_complex: return "split-complex";
    case SemiringKind::prime_field: return "z" + std::to_string(modulus_);
    case SemiringKind::quantale: return "quantale";
  }
  return "?";
}

bool Semiring::is_exact() const {
  return kind_ != SemiringKind::real && kind_ != SemiringKind::complex &&
         kind_ != SemiringKind::split_complex;
}

bool Semiring::has_identity_involution() const {
  return kind_ != SemiringKind::complex && kind_ != SemiringKind::split_complex;
}

bool Semiring::is_ring() const {
  return kind_ != SemiringKind::boolean && kind_ != SemiringKind::natural &&
         kind_ != SemiringKind::quantale;
}

bool Semiring::contains(const Scalar& a) const {
  if (a.index() != alternative_for(kind_)) return false;
  if (kind_ == SemiringKind::prime_field) return std::get<Residue>(a).modulus == modulus_;
  return true;
}

void Semiring::require(const Scalar& a) const {
  if (!contains(a)) {
    throw UsageError("value does not belong to semiring " + name());
  }
}

Scalar Semiring::zero() const { return from_int(0); }
Scalar Semiring::one() const { return from_int(1); }

Scalar Semiring::from_int(long long k) const {
  if (k < 0 && !is_ring()) {
    throw UsageError("semiring " + name() + " has no negative integers");
  }
  switch (kind_) {
    case SemiringKind::boolean: return k != 0;
    case SemiringKind::natural: return Natural{BigInt(k)};
    case SemiringKind::integer: return Integer{BigInt(k)};
    case SemiringKind::rational: return Rational{BigRational(k)};
    case SemiringKind::real: return Real{static_cast<double>(k)};
    case SemiringKind::complex: return Complex{{static_cast<double>(k), 0.0}};
    case SemiringKind::split_complex: return SplitComplex{static_cast<double>(k), 0.0};
    case SemiringKind::prime_field: {
      long long r = k % static_cast<long long>(modulus_);
      if (r < 0) r += modulus_;
      return Residue{static_cast<std::uint32_t>(r), modulus_};
    }
    case SemiringKind::quantale: return k == 0 ? Chain3::bot : Chain3::top;
  }
  throw UsageError("unreachable semiring kind");
}

Scalar Semiring::add(const Scalar& a, const Scalar& b) const {
  require(a);
  require(b);
  return std::visit(
      overloaded{
          [](bool x, bool y) -> Scalar { return x || y; },
          [](const Natural& x, const Natural& y) -> Scalar { return Natural{x.value + y.value}; },
          [](const Integer& x, const Integer& y) -> Scalar { return Integer{x.value + y.value}; },
          [](const Rational& x, const Rational& y) -> Scalar {
            if (integral(x) && integral(y)) return Rational{BigRational(numerator(x.value) + numerator(y.value))};
            return Rational{x.value + y.value};
          },
          [](Real x, Real y) -> Scalar { return Real{x.value + y.value}; },
          [](const Complex& x, const Complex& y) -> Scalar { return Complex{x.value + y.value}; },
          [](SplitComplex x, SplitComplex y) -> Scalar { return SplitComplex{x.a + y.a, x.b + y.b}; },
          [](Residue x, Residue y) -> Scalar {
            return Residue{(x.value + y.value) % x.modulus, x.modulus};
          },
          [](Chain3 x, Chain3 y) -> Scalar { return std::max(x, y); },
          [](const auto&, const auto&) -> Scalar { throw UsageError("mixed semiring values"); },
      },
      a, b);
}

Scalar Semiring::mul(const Scalar& a, const Scalar& b) const {
  require(a);
  require(b);
  return std::visit(
      overloaded{
          [](bool x, bool y) -> Scalar { return x && y; },
          [](const Natural& x, const Natural& y) -> Scalar { return Natural{x.value * y.value}; },
          [](const Integer& x, const Integer& y) -> Scalar { return Integer{x.value * y.value}; },
          [](const Rational& x, const Rational& y) -> Scalar {
            if (integral(x) && integral(y)) return Rational{BigRational(numerator(x.value) * numerator(y.value))};
            return Rational{x.value * y.value};
          },
          [](Real x, Real y) -> Scalar { return Real{x.value * y.value}; },
          [](const Complex& x, const Complex& y) -> Scalar { return Complex{x.value * y.value}; },
          [](SplitComplex x, SplitComplex y) -> Scalar {
            return SplitComplex{x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a};
          },
          [](Residue x, Residue y) -> Scalar {
            auto prod = static_cast<std::uint64_t>(x.value) * y.value;
            return Residue{static_cast<std::uint32_t>(prod % x.modulus), x.modulus};
          },
          [](Chain3 x, Chain3 y) -> Scalar { return std::min(x, y); },
          [](const auto&, const auto&) -> Scalar { throw UsageError("mixed semiring values"); },
      },
      a, b);
}

Scalar Semiring::star(const Scalar& a) const {
  require(a);
  if (const auto* z = std::get_if<Complex>(&a)) return Complex{std::conj(z->value)};
  if (const auto* s = std::get_if<SplitComplex>(&a)) return SplitComplex{s->a, -s->b};
  return a;
}

bool Semiring::eq(const Scalar& a, const Scalar& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case SemiringKind::real:
      return std::fabs(std::get<Real>(a).value - std::get<Real>(b).value) <= tolerance_;
    case SemiringKind::complex: {
      const auto x = std::get<Complex>(a).value;
      const auto y = std::get<Complex>(b).value;
      return std::fabs(x.real() - y.real()) <= tolerance_ &&
             std::fabs(x.imag() - y.imag()) <= tolerance_;
    }
    case SemiringKind::split_complex: {
      const auto x = std::get<SplitComplex>(a);
      const auto y = std::get<SplitComplex>(b);
      return std::fabs(x.a - y.a) <= tolerance_ && std::fabs(x.b - y.b) <= tolerance_;
    }
    default:
      return a == b;
  }
}

bool Semiring::is_zero(const Scalar& a) const { return eq(a, zero()); }
bool Semiring::is_one(const Scalar& a) const { return eq(a, one()); }

std::optional<Scalar> Semiring::negate(const Scalar& a) const {
  require(a);
  if (!is_ring()) {
    if (is_zero(a)) return a;
    return std::nullopt;
  }
  return std::visit(
      overloaded{
          [](const Integer& x) -> Scalar { return Integer{-x.value}; },
          [](const Rational& x) -> Scalar { return Rational{-x.value}; },
          [](Real x) -> Scalar { return Real{-x.value}; },
          [](const Complex& x) -> Scalar { return Complex{-x.value}; },
          [](SplitComplex x) -> Scalar { return SplitComplex{-x.a, -x.b}; },
          [](Residue x) -> Scalar { return Residue{(x.modulus - x.value) % x.modulus, x.modulus}; },
          [](const auto& x) -> Scalar { return x; },
      },
      a);
}

std::optional<Scalar> Semiring::inverse(const Scalar& a) const {
  require(a);
  switch (kind_) {
    case SemiringKind::boolean:
      if (std::get<bool>(a)) return a;
      return std::nullopt;
    case SemiringKind::natural:
      if (std::get<Natural>(a).value == 1) return a;
      return std::nullopt;
    case SemiringKind::integer: {
      const auto& v = std::get<Integer>(a).value;
      if (v == 1 || v == -1) return a;
      return std::nullopt;
    }
    case SemiringKind::rational: {
      const auto& v = std::get<Rational>(a).value;
      if (v == 0) return std::nullopt;
      return Rational{BigRational(1) / v};
    }
    case SemiringKind::real: {
      const double v = std::get<Real>(a).value;
      if (std::fabs(v) <= tolerance_) return std::nullopt;
      return Real{1.0 / v};
    }
    case SemiringKind::complex: {
      const auto v = std::get<Complex>(a).value;
      if (std::abs(v) <= tolerance_) return std::nullopt;
      return Complex{1.0 / v};
    }
    case SemiringKind::split_complex: {
      const auto v = std::get<SplitComplex>(a);
      const double norm = v.a * v.a - v.b * v.b;
      if (std::fabs(norm) <= tolerance_) return std::nullopt;
      return SplitComplex{v.a / norm, -v.b / norm};
    }
    case SemiringKind::prime_field: {
      const auto v = std::get<Residue>(a);
      if (v.value == 0) return std::nullopt;
      return Residue{pow_mod(v.value, v.modulus - 2, v.modulus), v.modulus};
    }
    case SemiringKind::quantale:
      if (std::get<Chain3>(a) == Chain3::top) return a;
      return std::nullopt;
  }
  return std::nullopt;
}

double Semiring::magnitude(const Scalar& a) const {
  require(a);
  return std::visit(
      overloaded{
          [](bool x) { return x ? 1.0 : 0.0; },
          [](const Natural& x) { return x.value.convert_to<double>(); },
          [](const Integer& x) { return std::fabs(x.value.convert_to<double>()); },
          [](const Rational& x) { return std::fabs(x.value.convert_to<double>()); },
          [](Real x) { return std::fabs(x.value); },
          [](const Complex& x) { return std::abs(x.value); },
          [](SplitComplex x) { return std::sqrt(std::fabs(x.a * x.a - x.b * x.b)); },
          [](Residue x) { return x.value == 0 ? 0.0 : 1.0; },
          [](Chain3 x) { return static_cast<double>(x); },
      },
      a);
}

Scalar Semiring::parse(std::string_view text) const {
  const std::string spec = name();
  LiteralReader in{spec, text};
  const std::size_t n = text.size();
  if (n == 0) in.fail(0, "empty literal");
  switch (kind_) {
    case SemiringKind::boolean:
      if (text == "0") return false;
      if (text == "1") return true;
      in.fail(0, "expected 0 or 1");
    case SemiringKind::natural:
      return Natural{in.integer(0, n, false)};
    case SemiringKind::integer:
      return Integer{in.integer(0, n, true)};
    case SemiringKind::rational: {
      const auto slash = text.find('/');
      if (slash == std::string_view::npos) return Rational{BigRational(in.integer(0, n, true))};
      BigInt num = in.integer(0, slash, true);
      BigInt den = in.integer(slash + 1, n, false);
      if (den == 0) in.fail(slash + 1, "zero denominator");
      return Rational{BigRational(num, den)};
    }
    case SemiringKind::real:
      return Real{in.floating(0, n)};
    case SemiringKind::complex: {
      auto [re, im] = in.pair('i');
      return Complex{{re, im}};
    }
    case SemiringKind::split_complex: {
      auto [a, b] = in.pair('j');
      return SplitComplex{a, b};
    }
    case SemiringKind::prime_field: {
      std::size_t end = n;
      const auto mod_at = text.find(" mod ");
      if (mod_at != std::string_view::npos) {
        BigInt p = in.integer(mod_at + 5, n, false);
        if (p != modulus_) in.fail(mod_at + 5, "modulus does not match " + spec);
        end = mod_at;
      }
      BigInt k = in.integer(0, end, true);
      BigInt r = k % BigInt(modulus_);
      if (r < 0) r += modulus_;
      return Residue{r.convert_to<std::uint32_t>(), modulus_};
    }
    case SemiringKind::quantale:
      if (text == "bot") return Chain3::bot;
      if (text == "half") return Chain3::half;
      if (text == "top") return Chain3::top;
      in.fail(0, "expected bot, half or top");
  }
  in.fail(0, "unsupported semiring");
}

std::string Semiring::format(const Scalar& a) const {
  require(a);
  return std::visit(
      overloaded{
          [](bool x) -> std::string { return x ? "1" : "0"; },
          [](const Natural& x) { return x.value.str(); },
          [](const Integer& x) { return x.value.str(); },
          [](const Rational& x) {
            const BigInt num = boost::multiprecision::numerator(x.value);
            const BigInt den = boost::multiprecision::denominator(x.value);
            if (den == 1) return num.str();
            return num.str() + "/" + den.str();
          },
          [](Real x) { return format_double(x.value); },
          [](const Complex& x) { return format_pair(x.value.real(), x.value.imag(), 'i'); },
          [](SplitComplex x) { return format_pair(x.a, x.b, 'j'); },
          [](Residue x) { return std::to_string(x.value) + " mod " + std::to_string(x.modulus); },
          [](Chain3 x) -> std::string {
            switch (x) {
              case Chain3::bot: return "bot";
              case Chain3::half: return "half";
              case Chain3::top: return "top";
            }
            return "?";
          },
      },
      a);
}

namespace {

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BigInt huge(std::mt19937_64& rng) {
  BigInt v = 1;
  for (int i = 0; i < 3; ++i) v = v * BigInt(rng()) + 1;
  return v;
}

}  // namespace

Scalar Semiring::random(std::mt19937_64& rng) const {
  const bool big = uniform_int(rng, 0, 9) == 0;
  switch (kind_) {
    case SemiringKind::boolean: return uniform_int(rng, 0, 1) == 1;
    case SemiringKind::natural:
      return Natural{big ? huge(rng) : BigInt(uniform_int(rng, 0, 50))};
    case SemiringKind::integer: {
      BigInt v = big ? huge(rng) : BigInt(uniform_int(rng, 0, 50));
      if (uniform_int(rng, 0, 1) == 1) v = -v;
      return Integer{v};
    }
    case SemiringKind::rational: {
      BigInt num = big ? huge(rng) : BigInt(uniform_int(rng, -30, 30));
      BigInt den = uniform_int(rng, 1, 12);
      return Rational{BigRational(num, den)};
    }
    case SemiringKind::real: return Real{unit_double(rng) * 20.0 - 10.0};
    case SemiringKind::complex:
      return Complex{{unit_double(rng) * 20.0 - 10.0, unit_double(rng) * 20.0 - 10.0}};
    case SemiringKind::split_complex:
      return SplitComplex{unit_double(rng) * 20.0 - 10.0, unit_double(rng) * 20.0 - 10.0};
    case SemiringKind::prime_field:
      return Residue{static_cast<std::uint32_t>(uniform_int(rng, 0, modulus_ - 1)), modulus_};
    case SemiringKind::quantale:
      return static_cast<Chain3>(uniform_int(rng, 0, 2));
  }
  return zero();
}

Scalar Semiring::random_small(std::mt19937_64& rng) const {
  switch (kind_) {
    case SemiringKind::boolean: return uniform_int(rng, 0, 1) == 1;
    case SemiringKind::natural: return Natural{BigInt(uniform_int(rng, 0, 3))};
    case SemiringKind::integer: return Integer{BigInt(uniform_int(rng, -3, 3))};
    case SemiringKind::rational:
      return Rational{BigRational(BigInt(uniform_int(rng, -3, 3)), BigInt(uniform_int(rng, 1, 3)))};
    case SemiringKind::real: return Real{static_cast<double>(uniform_int(rng, -3, 3))};
    case SemiringKind::complex:
      return Complex{{static_cast<double>(uniform_int(rng, -2, 2)),
                      static_cast<double>(uniform_int(rng, -2, 2))}};
    case SemiringKind::split_complex:
      return SplitComplex{static_cast<double>(uniform_int(rng, -2, 2)),
                          static_cast<double>(uniform_int(rng, -2, 2))};
    case SemiringKind::prime_field:
    case SemiringKind::quantale:
      return random(rng);
  }
  return zero();
}

}  // namespace semicat
