#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ci2 {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is binom(n-k+i, i)
  }
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// "a" or "a/b" with b > 0 after normalization.
inline std::string to_string(const BigRat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

// Accepts optional sign, decimal digits, optional "/denominator".
inline BigRat parse_rational(const std::string& s) {
  auto bad = [&]() -> BigRat {
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  };
  if (s.empty()) return bad();
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits_ok = [](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false)) return bad();
  if (num[0] == '+') num.erase(0, 1);  // cpp_int's parser rejects a leading '+'
  BigInt n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in literal: '" + s + "'");
  return BigRat(n, d);
}

}  // namespace ci2
