#pragma once

#include <cassert>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ci2/field.hpp"
#include "ci2/monomial.hpp"
#include "ci2/upoly.hpp"

namespace ci2 {

// Sparse multivariate polynomial: grevlex-ascending term map, so the leading
// term is rbegin(). No zero coefficients are ever stored; equal polynomials
// compare equal as maps.
template <class K>
class Poly {
 public:
  using TermMap = std::map<Monomial, K, GrevlexLess>;

  Poly() : nvars_(0) {}
  explicit Poly(size_t nvars) : nvars_(nvars) {}

  static Poly zero(size_t nvars) { return Poly(nvars); }
  static Poly constant(size_t nvars, const K& k) {
    Poly r(nvars);
    r.add_term(Monomial::one(nvars), k);
    return r;
  }
  static Poly variable(size_t i, size_t nvars, const K& one) {
    Poly r(nvars);
    r.add_term(Monomial::var(i, nvars), one);
    return r;
  }

  size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }

  // total degree; -1 for the zero polynomial (grevlex is graded, so the
  // last term carries the maximal total degree)
  int degree() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.degree()); }

  bool is_homogeneous() const {
    if (t_.empty()) return true;
    return t_.begin()->first.degree() == t_.rbegin()->first.degree();
  }

  const Monomial& leading_monomial() const {
    assert(!t_.empty());
    return t_.rbegin()->first;
  }
  const K& leading_coeff() const {
    assert(!t_.empty());
    return t_.rbegin()->second;
  }

  K coeff(const Monomial& m) const {
    auto it = t_.find(m);
    if (it != t_.end()) return it->second;
    return t_.empty() ? K{} : FieldOps<K>::zero_like(t_.begin()->second);
  }

  void add_term(const Monomial& m, const K& c) {
    assert(m.nvars() == nvars_);
    if (FieldOps<K>::is_zero(c)) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (FieldOps<K>::is_zero(it->second)) t_.erase(it);
    }
  }

  Poly operator+(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    Poly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + o.negate(); }
  Poly negate() const {
    Poly r(nvars_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
  }

  Poly operator*(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    Poly r(nvars_);
    for (const auto& [m1, c1] : t_)
      for (const auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
    return r;
  }

  Poly scaled(const K& k) const {
    Poly r(nvars_);
    if (FieldOps<K>::is_zero(k)) return r;
    for (const auto& [m, c] : t_) r.add_term(m, c * k);
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(FieldOps<K>::inverse(leading_coeff()));
  }

  Poly times_monomial(const Monomial& m, const K& c) const {
    Poly r(nvars_);
    if (FieldOps<K>::is_zero(c)) return r;
    for (const auto& [mm, cc] : t_) r.t_.emplace(mm * m, cc * c);
    return r;
  }

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  K eval(const std::vector<K>& x) const {
    assert(x.size() == nvars_);
    K acc = t_.empty() ? K{} : FieldOps<K>::zero_like(t_.begin()->second);
    if (t_.empty() && !x.empty()) acc = FieldOps<K>::zero_like(x[0]);
    for (const auto& [m, c] : t_) {
      K term = c;
      for (size_t i = 0; i < nvars_; ++i)
        for (uint32_t k = 0; k < m.e[i]; ++k) term *= x[i];
      acc += term;
    }
    return acc;
  }

  Poly derivative(size_t var) const {
    assert(var < nvars_);
    Poly r(nvars_);
    for (const auto& [m, c] : t_) {
      if (m.e[var] == 0) continue;
      Monomial d = m;
      d.e[var] -= 1;
      r.add_term(d, c * FieldOps<K>::from_int_like(c, m.e[var]));
    }
    return r;
  }

  // full substitution x_i -> sub[i]; the result lives in sub[i]'s variables
  Poly subst(const std::vector<Poly>& sub) const {
    assert(sub.size() == nvars_);
    size_t out_n = sub.empty() ? 0 : sub[0].nvars();
    // powers[i][k] = sub[i]^k, grown on demand
    std::vector<std::vector<Poly>> powers(nvars_);
    auto power = [&](size_t i, uint32_t k) -> const Poly& {
      auto& cache = powers[i];
      if (cache.empty()) {
        K one = FieldOps<K>::one_like(first_coeff_or_one());
        cache.push_back(Poly::constant(out_n, one));
      }
      while (cache.size() <= k) cache.push_back(cache.back() * sub[i]);
      return cache[k];
    };
    Poly r(out_n);
    for (const auto& [m, c] : t_) {
      Poly term = Poly::constant(out_n, c);
      for (size_t i = 0; i < nvars_; ++i)
        if (m.e[i] > 0) term = term * power(i, m.e[i]);
      r = r + term;
    }
    return r;
  }

  // substitute only one variable, keeping the ambient variable set
  Poly subst_var(size_t var, const Poly& expr) const {
    if (is_zero()) return *this;
    std::vector<Poly> sub;
    sub.reserve(nvars_);
    K one = FieldOps<K>::one_like(first_coeff_or_one());
    for (size_t i = 0; i < nvars_; ++i)
      sub.push_back(i == var ? expr : Poly::variable(i, nvars_, one));
    return subst(sub);
  }

  Poly homogeneous_component(uint32_t d) const {
    Poly r(nvars_);
    for (const auto& [m, c] : t_)
      if (m.degree() == d) r.t_.emplace(m, c);
    return r;
  }

  // restriction to the parametrized line x = a + t*b, as a univariate in t
  UPoly<K> restrict_to_line(const std::vector<K>& a, const std::vector<K>& b) const {
    assert(a.size() == nvars_ && b.size() == nvars_);
    UPoly<K> acc;
    std::vector<std::vector<UPoly<K>>> powers(nvars_);
    auto power = [&](size_t i, uint32_t k) -> const UPoly<K>& {
      auto& cache = powers[i];
      if (cache.empty()) {
        cache.push_back(UPoly<K>::constant(FieldOps<K>::one_like(a[i])));
        cache.push_back(UPoly<K>(std::vector<K>{a[i], b[i]}));
      }
      while (cache.size() <= k) cache.push_back(cache.back() * cache[1]);
      return cache[k];
    };
    for (const auto& [m, c] : t_) {
      UPoly<K> term = UPoly<K>::constant(c);
      for (size_t i = 0; i < nvars_; ++i)
        if (m.e[i] > 0) term = term * power(i, m.e[i]);
      acc = acc + term;
    }
    return acc;
  }

  std::string str(const std::string& stem = "x") const {
    if (t_.empty()) return "0";
    std::string s;
    // print leading term first
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      std::string cs = FieldOps<K>::str(it->second);
      if (it->first.is_one()) {
        s += cs;
      } else if (cs == "1") {
        s += it->first.str(stem);
      } else {
        s += cs + "*" + it->first.str(stem);
      }
    }
    return s;
  }

 private:
  K first_coeff_or_one() const {
    if (!t_.empty()) return t_.begin()->second;
    return K{};
  }
  size_t nvars_;
  TermMap t_;
};

// Exact division by a single polynomial: reduce f by d until either nothing
// is left (divisible, quotient accumulated) or a leading monomial survives
// that LM(d) cannot divide (not divisible). With one divisor the remainder
// is unique, so the early exit is sound.
template <class K>
bool poly_divides(const Poly<K>& d, const Poly<K>& f, Poly<K>* quotient = nullptr) {
  if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (d.nvars() != f.nvars()) throw std::invalid_argument("operands live in different rings");
  Poly<K> q(f.nvars());
  Poly<K> r = f;
  const Monomial& dl = d.leading_monomial();
  K dinv = FieldOps<K>::inverse(d.leading_coeff());
  while (!r.is_zero()) {
    const Monomial& rl = r.leading_monomial();
    if (!dl.divides(rl)) return false;
    Monomial m = dl.divide_into(rl);
    K c = r.leading_coeff() * dinv;
    Poly<K> t(f.nvars());
    t.add_term(m, c);
    q = q + t;
    r = r - d.times_monomial(m, c);
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

// all monomials in nvars variables of exact total degree d, grevlex ascending
inline std::vector<Monomial> monomials_of_degree(size_t nvars, uint32_t d) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  // recursive enumeration, then sort canonically
  auto rec = [&](auto&& self, size_t i, uint32_t rem) -> void {
    if (i + 1 == nvars) {
      cur.e[i] = rem;
      out.push_back(cur);
      cur.e[i] = 0;
      return;
    }
    for (uint32_t k = 0; k <= rem; ++k) {
      cur.e[i] = k;
      self(self, i + 1, rem - k);
    }
    cur.e[i] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial(size_t{0}));
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

}  // namespace ci2
