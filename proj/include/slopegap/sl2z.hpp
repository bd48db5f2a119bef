#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace slopegap {

// S = [[0,-1],[1,0]], T = [[1,1],[0,1]].
enum class Letter : char { S, T, SInv, TInv };

using Word = std::vector<Letter>;

Letter inverse(Letter l);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(Letter l, int k);  // negative k uses the inverse letter

// Compact form with run-length exponents, e.g. "T^3 S T^2"; empty word is "I".
std::string to_string(const Word& w);
// Accepts "TTTSTT", "T^3 S T^2", "S^-1", "I".
Word parse_word(std::string_view text);

struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  static Mat2 S() { return {0, -1, 1, 0}; }
  static Mat2 T() { return {1, 1, 0, 1}; }

  std::int64_t det() const { return a * d - b * c; }
  std::int64_t trace() const { return a + d; }
  Mat2 inverse() const { return {d, -b, -c, a}; }  // det 1 assumed

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 to_matrix(Letter l);
Mat2 to_matrix(const Word& w);
std::string to_string(const Mat2& m);

// A word w with to_matrix(w) == m; m must have determinant 1.
Word decompose(const Mat2& m);

// Some M in SL(2,Z) with first column (p, q); requires gcd(p, q) = 1.
Mat2 complete_column(std::int64_t p, std::int64_t q);

}  // namespace slopegap
