#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace slopegap {

// Exact rational on 64-bit integers with 128-bit intermediates; overflow throws.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational reduce(__int128 n, __int128 d);
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// "p/q" in lowest terms; integers are printed without a denominator.
std::string to_string(const Rational& q);

// Accepts "p", "p/q" and optional leading sign.
Rational parse_rational(std::string_view text);

inline long double to_ld(const Rational& q) {
  return static_cast<long double>(q.numerator()) / static_cast<long double>(q.denominator());
}

inline double to_double(const Rational& q) { return static_cast<double>(to_ld(q)); }

inline Rational abs(const Rational& q) { return q < 0 ? -q : q; }

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

inline std::int64_t floor(const Rational& q) { return floor_div(q.numerator(), q.denominator()); }
inline std::int64_t ceil(const Rational& q) { return ceil_div(q.numerator(), q.denominator()); }

std::ostream& operator<<(std::ostream& os, const Rational& q);

struct Vec2 {
  Rational x;
  Rational y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

// Lexicographic, so vectors can key ordered containers.
inline bool operator<(const Vec2& a, const Vec2& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

std::string to_string(const Vec2& v);
std::ostream& operator<<(std::ostream& os, const Vec2& v);

}  // namespace slopegap
