#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ci2/field.hpp"

namespace ci2 {

// Dense univariate polynomial over a field K, coefficients low to high,
// no trailing zeros. Zero polynomial = empty vector, degree -1.
template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }

  static UPoly zero() { return UPoly(); }
  static UPoly constant(const K& k) {
    UPoly r;
    if (!FieldOps<K>::is_zero(k)) r.c_.push_back(k);
    return r;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(size_t i) const {
    if (i < c_.size()) return c_[i];
    assert(!c_.empty());
    return FieldOps<K>::zero_like(c_[0]);
  }
  const K& lead() const {
    assert(!c_.empty());
    return c_.back();
  }

  UPoly operator+(const UPoly& o) const {
    std::vector<K> r = c_.size() >= o.c_.size() ? c_ : o.c_;
    const std::vector<K>& s = c_.size() >= o.c_.size() ? o.c_ : c_;
    for (size_t i = 0; i < s.size(); ++i) r[i] += s[i];
    return UPoly(std::move(r));
  }
  UPoly operator-(const UPoly& o) const { return *this + o.negate(); }
  UPoly negate() const {
    std::vector<K> r = c_;
    for (auto& x : r) x = -x;
    UPoly u;
    u.c_ = std::move(r);
    return u;
  }

  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<K> r(c_.size() + o.c_.size() - 1, FieldOps<K>::zero_like(c_[0]));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(r));
  }

  UPoly scaled(const K& k) const {
    if (FieldOps<K>::is_zero(k)) return UPoly();
    std::vector<K> r = c_;
    for (auto& x : r) x *= k;
    return UPoly(std::move(r));
  }

  // (quotient, remainder) with deg rem < deg divisor
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (degree() < d.degree()) return {UPoly(), *this};
    K dinv = FieldOps<K>::inverse(d.lead());
    std::vector<K> rem = c_;
    std::vector<K> quo(c_.size() - d.c_.size() + 1, FieldOps<K>::zero_like(c_[0]));
    for (size_t shift = quo.size(); shift-- > 0;) {
      K& top = rem[shift + d.c_.size() - 1];
      if (FieldOps<K>::is_zero(top)) continue;
      K q = top * dinv;
      quo[shift] = q;
      for (size_t j = 0; j < d.c_.size(); ++j) rem[shift + j] -= q * d.c_[j];
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return scaled(FieldOps<K>::inverse(lead()));
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<K> r(c_.size() - 1, FieldOps<K>::zero_like(c_[0]));
    for (size_t i = 1; i < c_.size(); ++i)
      r[i - 1] = c_[i] * FieldOps<K>::from_int_like(c_[i], static_cast<long long>(i));
    return UPoly(std::move(r));
  }

  K eval(const K& t) const {
    if (is_zero()) return FieldOps<K>::zero_like(t);
    K acc = FieldOps<K>::zero_like(t);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

  bool operator==(const UPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

 private:
  void trim() {
    while (!c_.empty() && FieldOps<K>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

// monic gcd via the Euclidean algorithm
template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    UPoly<K> r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace ci2
