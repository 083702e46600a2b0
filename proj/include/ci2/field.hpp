#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ci2/numeric.hpp"
#include "ci2/rng.hpp"

namespace ci2 {

// characteristic 0 = rationals; otherwise an odd prime < 2^31.
// Characteristic 2 is rejected globally: symmetric rank needs 1/2, and the
// derivative-based squarefree test degenerates.
struct FieldSpec {
  uint32_t characteristic = 0;

  static FieldSpec rationals() { return FieldSpec{0}; }

  static FieldSpec prime_field(uint64_t p) {
    if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
    if (p < 3 || p >= (1ULL << 31))
      throw std::invalid_argument("field characteristic must be an odd prime < 2^31");
    for (uint64_t d = 3; d * d <= p; d += 2)
      if (p % d == 0)
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (p % 2 == 0) throw std::invalid_argument("field characteristic must be odd");
    return FieldSpec{static_cast<uint32_t>(p)};
  }

  static FieldSpec make(uint64_t characteristic) {
    return characteristic == 0 ? rationals() : prime_field(characteristic);
  }

  bool is_rationals() const { return characteristic == 0; }
  bool operator==(const FieldSpec& o) const { return characteristic == o.characteristic; }
};

// Prime-field element carrying its modulus. Two words per element is a
// non-issue at this scale and makes mixed-modulus bugs assert immediately.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(uint64_t value, uint32_t p) : v_(static_cast<uint32_t>(value % p)), p_(p) { assert(p >= 3); }

  static Fp zero(uint32_t p) { return Fp(0, p); }
  static Fp one(uint32_t p) { return Fp(1, p); }
  static Fp from_int(long long x, uint32_t p) {
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += p;
    return Fp(static_cast<uint64_t>(r), p);
  }

  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const {
    check(o);
    uint64_t s = static_cast<uint64_t>(v_) + o.v_;
    if (s >= p_) s -= p_;
    return Fp(s, p_, 0);
  }
  Fp operator-(const Fp& o) const {
    check(o);
    uint64_t s = static_cast<uint64_t>(v_) + p_ - o.v_;
    if (s >= p_) s -= p_;
    return Fp(s, p_, 0);
  }
  Fp operator*(const Fp& o) const {
    check(o);
    return Fp(static_cast<uint64_t>(v_) * o.v_ % p_, p_, 0);
  }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, 0); }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero");
    // extended Euclid on (v, p); p prime so gcd = 1
    int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      int64_t q = a / b;
      int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    assert(a == 1);
    if (x0 < 0) x0 += p_;
    return Fp(static_cast<uint64_t>(x0), p_, 0);
  }
  Fp operator/(const Fp& o) const { check(o); return *this * o.inverse(); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  bool operator==(const Fp& o) const { check(o); return v_ == o.v_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

 private:
  Fp(uint64_t v, uint32_t p, int) : v_(static_cast<uint32_t>(v)), p_(p) {}
  void check(const Fp& o) const {
    (void)o;
    assert(p_ != 0 && o.p_ == p_ && "mixed or unset moduli");
  }
  uint32_t v_, p_;
};

// The generic polynomial/matrix code is templated on the coefficient type K
// (Fp or BigRat) and reaches field structure through these traits. BigRat has
// no ambient context; Fp needs the modulus of an exemplar to mint constants.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Fp> {
  static bool is_zero(const Fp& x) { return x.is_zero(); }
  static Fp zero_like(const Fp& x) { return Fp::zero(x.modulus()); }
  static Fp one_like(const Fp& x) { return Fp::one(x.modulus()); }
  static Fp from_int_like(const Fp& x, long long v) { return Fp::from_int(v, x.modulus()); }
  static Fp inverse(const Fp& x) { return x.inverse(); }
  static std::string str(const Fp& x) { return std::to_string(x.value()); }
  static Fp random(const FieldSpec& f, Rng& rng) {
    return Fp(rng.below(f.characteristic), f.characteristic);
  }
  static Fp random_nonzero(const FieldSpec& f, Rng& rng) {
    return Fp(1 + rng.below(f.characteristic - 1), f.characteristic);
  }
  static Fp zero_of(const FieldSpec& f) { return Fp::zero(f.characteristic); }
  static Fp one_of(const FieldSpec& f) { return Fp::one(f.characteristic); }
  static Fp from_rational(const BigRat& r, const FieldSpec& f) {
    BigInt p(f.characteristic);
    BigInt n = numerator(r) % p, d = denominator(r) % p;
    if (n < 0) n += p;
    if (d == 0) throw std::domain_error("denominator vanishes in the prime field");
    Fp nn(static_cast<uint64_t>(n), f.characteristic);
    Fp dd(static_cast<uint64_t>(d), f.characteristic);
    return nn / dd;
  }
};

template <>
struct FieldOps<BigRat> {
  static bool is_zero(const BigRat& x) { return x == 0; }
  static BigRat zero_like(const BigRat&) { return BigRat(0); }
  static BigRat one_like(const BigRat&) { return BigRat(1); }
  static BigRat from_int_like(const BigRat&, long long v) { return BigRat(v); }
  static BigRat inverse(const BigRat& x) {
    if (x == 0) throw std::domain_error("inverse of zero");
    return BigRat(1) / x;
  }
  static std::string str(const BigRat& x) { return to_string(x); }
  // random rationals: small integers; used only for probabilistic line tests
  static BigRat random(const FieldSpec&, Rng& rng) {
    return BigRat(static_cast<long long>(rng.below(2001)) - 1000);
  }
  static BigRat random_nonzero(const FieldSpec& f, Rng& rng) {
    for (;;) {
      BigRat r = random(f, rng);
      if (r != 0) return r;
    }
  }
  static BigRat zero_of(const FieldSpec&) { return BigRat(0); }
  static BigRat one_of(const FieldSpec&) { return BigRat(1); }
  static BigRat from_rational(const BigRat& r, const FieldSpec&) { return r; }
};

}  // namespace ci2
