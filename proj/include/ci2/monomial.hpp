#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace ci2 {

// Exponent vector over a fixed variable set x0..x{n-1}.
struct Monomial {
  std::vector<uint32_t> e;

  Monomial() = default;
  explicit Monomial(size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<uint32_t> exps) : e(std::move(exps)) {}

  static Monomial one(size_t nvars) { return Monomial(nvars); }
  static Monomial var(size_t i, size_t nvars) {
    Monomial m(nvars);
    m.e[i] = 1;
    return m;
  }

  size_t nvars() const { return e.size(); }
  uint32_t degree() const { return std::accumulate(e.begin(), e.end(), 0u); }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
  }

  Monomial operator*(const Monomial& o) const {
    assert(e.size() == o.e.size());
    Monomial r(e.size());
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    assert(e.size() == o.e.size());
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // quotient o / this, valid only when divides(o)
  Monomial divide_into(const Monomial& o) const {
    assert(divides(o));
    Monomial r(e.size());
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = o.e[i] - e[i];
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    assert(e.size() == o.e.size());
    Monomial r(e.size());
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(e[i], o.e[i]);
    return r;
  }

  bool coprime(const Monomial& o) const {
    assert(e.size() == o.e.size());
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0 && o.e[i] != 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }

  std::string str(const std::string& stem = "x") const {
    if (is_one()) return "1";
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += stem + std::to_string(i);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }
};

// a comes before b (a < b) in graded reverse lexicographic order:
// compare total degree first; on a tie, scan exponents from the last
// variable down, and at the first difference the monomial with the
// LARGER exponent there is the smaller one.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  assert(a.e.size() == b.e.size());
  uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  }
  return false;
}

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

}  // namespace ci2
