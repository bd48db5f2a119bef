#include "slopegap/sl2z.hpp"

#include "slopegap/errors.hpp"
#include "slopegap/rational.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace slopegap {

Letter inverse(Letter l) {
  switch (l) {
    case Letter::S: return Letter::SInv;
    case Letter::SInv: return Letter::S;
    case Letter::T: return Letter::TInv;
    case Letter::TInv: return Letter::T;
  }
  return l;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word power(Letter l, int k) {
  if (k < 0) return Word(static_cast<std::size_t>(-k), inverse(l));
  return Word(static_cast<std::size_t>(k), l);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "I";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long run = static_cast<long>(j - i);
    bool is_inv = w[i] == Letter::SInv || w[i] == Letter::TInv;
    if (!out.empty()) out += ' ';
    out += (w[i] == Letter::S || w[i] == Letter::SInv) ? 'S' : 'T';
    if (is_inv) out += "^-" + std::to_string(run);
    else if (run > 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.') {
      ++i;
      continue;
    }
    if (ch == 'I') {
      ++i;
      continue;
    }
    if (ch != 'S' && ch != 'T') throw Error(ErrorKind::Parse, "bad word letter '" + std::string(1, ch) + "'");
    Letter l = ch == 'S' ? Letter::S : Letter::T;
    ++i;
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t j = i;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string_view num = text.substr(i, j - i);
      if (!num.empty() && num.front() == '+') num.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), exp);
      if (num.empty() || ec != std::errc() || ptr != num.data() + num.size())
        throw Error(ErrorKind::Parse, "bad exponent in word");
      i = j;
    }
    Word run = power(l, static_cast<int>(exp));
    out.insert(out.end(), run.begin(), run.end());
  }
  return out;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 to_matrix(Letter l) {
  switch (l) {
    case Letter::S: return Mat2::S();
    case Letter::SInv: return Mat2::S().inverse();
    case Letter::T: return Mat2::T();
    case Letter::TInv: return Mat2::T().inverse();
  }
  return {};
}

Mat2 to_matrix(const Word& w) {
  Mat2 m;
  for (Letter l : w) m = m * to_matrix(l);
  return m;
}

std::string to_string(const Mat2& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
         std::to_string(m.d) + "]]";
}

Word decompose(const Mat2& m) {
  if (m.det() != 1) throw Error(ErrorKind::Parse, "matrix " + to_string(m) + " is not in SL(2,Z)");
  // Row-reduce by left multiplication with T^-k and S^-1; the applied letters are undone at the end.
  Mat2 a = m;
  Word applied;
  while (a.c != 0) {
    std::int64_t k = floor_div(a.a, a.c);
    Word shift = power(Letter::T, static_cast<int>(-k));
    applied.insert(applied.end(), shift.begin(), shift.end());
    a = to_matrix(shift) * a;
    applied.push_back(Letter::SInv);
    a = to_matrix(Letter::SInv) * a;
  }
  // Now a = +-[[1, b], [0, 1]].
  Word tail;
  if (a.a == 1) {
    tail = power(Letter::T, static_cast<int>(a.b));
  } else {
    tail = concat(Word{Letter::S, Letter::S}, power(Letter::T, static_cast<int>(-a.b)));
  }
  // applied = [L1, L2, ...] with ... L2 L1 m = a, so m = L1^-1 L2^-1 ... a.
  Word out;
  for (Letter l : applied) out.push_back(inverse(l));
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

Mat2 complete_column(std::int64_t p, std::int64_t q) {
  // Extended Euclid: p*s - q*r = 1.
  std::int64_t old_r = p, r = q, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t quot = floor_div(old_r, r);
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  // old_s * p + old_t * q = old_r = +-1
  if (old_r != 1 && old_r != -1) throw Error(ErrorKind::Parse, "direction is not primitive");
  std::int64_t sign = old_r;
  // p * (old_s*sign) - q * (-old_t*sign) = 1
  return {p, -old_t * sign, q, old_s * sign};
}

}  // namespace slopegap
