#include "slopegap/rational.hpp"

#include "slopegap/errors.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace slopegap {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorKind::Parse, "bad rational component '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rational Rational::reduce(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = narrow(n);
  r.den_ = narrow(d);
  return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = reduce(n, d); }

Rational Rational::operator-() const { return reduce(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  *this = reduce(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                 static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = reduce(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                 static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = reduce(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  *this = reduce(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << to_string(q); }

std::string to_string(const Vec2& v) { return "<" + to_string(v.x) + "," + to_string(v.y) + ">"; }

std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << to_string(v); }

}  // namespace slopegap
