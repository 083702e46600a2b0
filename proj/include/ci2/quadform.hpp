#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ci2/field.hpp"
#include "ci2/numeric.hpp"
#include "ci2/poly.hpp"
#include "ci2/rng.hpp"
#include "ci2/upoly.hpp"

namespace ci2 {

template <class K>
struct SymMat {
  size_t n = 0;
  std::vector<K> a;  // row-major, kept symmetric

  SymMat() = default;
  SymMat(size_t n_, const K& zero) : n(n_), a(n_ * n_, zero) {}

  K& at(size_t i, size_t j) { return a[i * n + j]; }
  const K& at(size_t i, size_t j) const { return a[i * n + j]; }

  void set_sym(size_t i, size_t j, const K& v) {
    at(i, j) = v;
    at(j, i) = v;
  }

  bool is_zero() const {
    for (const K& x : a)
      if (!FieldOps<K>::is_zero(x)) return false;
    return true;
  }
};

// Gram matrix of a homogeneous quadratic: diagonal from the squares, halved
// cross coefficients elsewhere. Characteristic 2 never gets this far.
template <class K>
SymMat<K> from_quadratic_poly(const Poly<K>& q, const K& zero) {
  size_t n = q.nvars();
  SymMat<K> A(n, zero);
  if (q.is_zero()) return A;
  if (q.degree() != 2 || !q.is_homogeneous())
    throw std::invalid_argument("expected a homogeneous quadratic");
  K half = FieldOps<K>::inverse(FieldOps<K>::from_int_like(q.leading_coeff(), 2));
  for (const auto& [m, c] : q.terms()) {
    size_t i = n, j = n;
    for (size_t v = 0; v < n; ++v) {
      if (m.e[v] == 2) { i = j = v; break; }
      if (m.e[v] == 1) (i == n ? i : j) = v;
    }
    if (i == j)
      A.at(i, i) = c;
    else
      A.set_sym(i, j, c * half);
  }
  return A;
}

// rank by symmetric congruence elimination; when no diagonal pivot survives,
// a nonzero off-diagonal entry a(i,j) is folded onto the diagonal by adding
// row j to row i and column j to column i, producing 2*a(i,j) at (i,i)
template <class K>
int symmetric_rank(SymMat<K> A) {
  size_t n = A.n;
  size_t r = 0;
  while (r < n) {
    size_t piv = n;
    for (size_t i = r; i < n; ++i)
      if (!FieldOps<K>::is_zero(A.at(i, i))) { piv = i; break; }
    if (piv == n) {
      size_t oi = n, oj = n;
      for (size_t i = r; i < n && oi == n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (!FieldOps<K>::is_zero(A.at(i, j))) { oi = i; oj = j; break; }
      if (oi == n) break;  // remaining block is zero
      for (size_t k = 0; k < n; ++k) A.at(oi, k) += A.at(oj, k);
      for (size_t k = 0; k < n; ++k) A.at(k, oi) += A.at(k, oj);
      piv = oi;
    }
    if (piv != r) {
      for (size_t k = 0; k < n; ++k) std::swap(A.at(piv, k), A.at(r, k));
      for (size_t k = 0; k < n; ++k) std::swap(A.at(k, piv), A.at(k, r));
    }
    K d = A.at(r, r);
    K dinv = FieldOps<K>::inverse(d);
    for (size_t i = r + 1; i < n; ++i) {
      if (FieldOps<K>::is_zero(A.at(i, r))) continue;
      K f = A.at(i, r) * dinv;
      for (size_t k = 0; k < n; ++k) A.at(i, k) -= f * A.at(r, k);
      for (size_t k = 0; k < n; ++k) A.at(k, i) -= f * A.at(k, r);
    }
    ++r;
  }
  return static_cast<int>(r);
}

template <class K>
int quadratic_rank(const Poly<K>& q, const K& zero) {
  return symmetric_rank(from_quadratic_poly(q, zero));
}

// P^T A P for congruence-invariance checks
template <class K>
SymMat<K> congruence_transform(const SymMat<K>& A, const std::vector<std::vector<K>>& P,
                               const K& zero) {
  size_t n = A.n;
  assert(P.size() == n);
  SymMat<K> R(n, zero);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      K s = zero;
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) s += P[k][i] * A.at(k, l) * P[l][j];
      R.at(i, j) = s;
    }
  return R;
}

// ordinary Gaussian rank of a rectangular matrix
template <class K>
int matrix_rank(std::vector<std::vector<K>> m) {
  if (m.empty() || m[0].empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (!FieldOps<K>::is_zero(m[i][c])) { piv = i; break; }
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    K inv = FieldOps<K>::inverse(m[r][c]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (FieldOps<K>::is_zero(m[i][c])) continue;
      K f = m[i][c] * inv;
      for (size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return static_cast<int>(r);
}

// One sampled member of the pencil {g2 - lambda*g1} plus the [1:0] member g1
// itself, which the finite parametrization misses.
template <class K>
struct PencilSample {
  bool at_infinity = false;
  K lambda{};
  int rank = 0;
};

template <class K>
struct PencilProfile {
  std::vector<PencilSample<K>> samples;  // [1:0], [0:1], then the seeded draws
  int min_observed = 0;

  // exact summary, filled only over the rationals
  bool exact = false;
  int generic_rank = 0;
  int rank_at_infinity = 0;
  int min_rank = 0;                // over the whole pencil, not just the samples
  std::vector<BigRat> drop_members;  // finite parameter values attaining the min
  bool min_at_infinity = false;
  UPoly<BigRat> critical_gcd;      // minor gcd one level above the min
  bool roots_complete = true;      // rational root search finished
};

namespace detail {

// determinants of all square submatrices of a matrix with univariate entries,
// memoized over (row mask, column mask) so every cofactor is computed once
class PencilMinorTable {
 public:
  PencilMinorTable(size_t n, std::vector<UPoly<BigRat>> entries)
      : n_(n), e_(std::move(entries)) {}

  const UPoly<BigRat>& det(uint32_t R, uint32_t C) {
    uint64_t key = (static_cast<uint64_t>(R) << 32) | C;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    UPoly<BigRat> d;
    if (R == 0) {
      d = UPoly<BigRat>::constant(BigRat(1));
    } else {
      uint32_t r = R & (~R + 1);  // lowest set row
      size_t ri = static_cast<size_t>(__builtin_ctz(r));
      int sign = 1;
      for (uint32_t c = C; c != 0; c &= c - 1) {
        size_t ci = static_cast<size_t>(__builtin_ctz(c));
        const UPoly<BigRat>& sub = det(R ^ r, C ^ (c & (~c + 1)));
        UPoly<BigRat> term = e_[ri * n_ + ci] * sub;
        d = sign > 0 ? d + term : d - term;
        sign = -sign;
      }
    }
    return memo_.emplace(key, std::move(d)).first->second;
  }

 private:
  size_t n_;
  std::vector<UPoly<BigRat>> e_;
  std::unordered_map<uint64_t, UPoly<BigRat>> memo_;
};

inline void subsets_of_size(size_t n, size_t k, std::vector<uint32_t>& out) {
  out.clear();
  if (k > n) return;
  uint32_t s = k == 0 ? 0 : ((1u << k) - 1);
  if (k == 0) {
    out.push_back(0);
    return;
  }
  uint32_t limit = 1u << n;
  while (s < limit) {
    out.push_back(s);
    uint32_t lo = s & (~s + 1);
    uint32_t lz = s + lo;
    s = lz | (((s ^ lz) >> 2) / lo);
  }
}

// divisors of |v|, abandoned (incomplete=true) past the trial cap
inline std::vector<BigInt> bounded_divisors(BigInt v, bool& incomplete) {
  std::vector<BigInt> out;
  if (v < 0) v = -v;
  if (v == 0) return out;
  uint64_t trials = 0;
  for (BigInt d = 1; d * d <= v; ++d) {
    if (++trials > 2000000) { incomplete = true; break; }
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

inline std::vector<BigRat> rational_roots(const UPoly<BigRat>& g, bool& complete) {
  std::vector<BigRat> roots;
  complete = true;
  if (g.degree() <= 0) return roots;
  // clear denominators
  BigInt lcm_den = 1;
  for (const BigRat& c : g.coeffs()) {
    BigInt d = denominator(c);
    lcm_den = lcm_den / gcd(lcm_den, d) * d;
  }
  std::vector<BigInt> ic;
  for (const BigRat& c : g.coeffs()) {
    BigRat scaled = c * BigRat(lcm_den);
    ic.push_back(static_cast<BigInt>(numerator(scaled)));
  }
  size_t lo = 0;
  while (lo < ic.size() && ic[lo] == 0) ++lo;
  if (lo > 0) roots.push_back(BigRat(0));
  bool incomplete = false;
  std::vector<BigInt> ps = bounded_divisors(ic[lo], incomplete);
  std::vector<BigInt> qs = bounded_divisors(ic.back(), incomplete);
  if (incomplete) {
    complete = false;
    return roots;
  }
  for (const BigInt& p : ps)
    for (const BigInt& q : qs)
      for (int sgn : {1, -1}) {
        BigRat cand(p * sgn, q);
        if (g.eval(cand) == 0) {
          bool seen = false;
          for (const BigRat& r : roots)
            if (r == cand) { seen = true; break; }
          if (!seen) roots.push_back(cand);
        }
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Ranks of g1 (the [1:0] member), g2 (lambda = 0), and `count` seeded draws.
template <class K>
void sample_pencil(const SymMat<K>& A, const SymMat<K>& B, int count, uint64_t seed,
                   const FieldSpec& field, PencilProfile<K>& out) {
  size_t n = A.n;
  K zero = A.a.empty() ? K{} : FieldOps<K>::zero_like(A.a[0]);
  auto member_rank = [&](const K& lam) {
    SymMat<K> M(n, zero);
    for (size_t i = 0; i < n * n; ++i) M.a[i] = B.a[i] - A.a[i] * lam;
    return symmetric_rank(M);
  };
  out.samples.push_back({true, zero, symmetric_rank(A)});
  out.samples.push_back({false, zero, member_rank(zero)});
  Rng rng(seed);
  for (int s = 0; s < count; ++s) {
    K lam = FieldOps<K>::random(field, rng);
    out.samples.push_back({false, lam, member_rank(lam)});
  }
  out.min_observed = out.samples.front().rank;
  for (const auto& smp : out.samples) out.min_observed = std::min(out.min_observed, smp.rank);
}

}  // namespace detail

// Sampled profile plus the exact minimum rank over the whole pencil
// {B - t*A} \cup {A}: for k descending from the generic rank, the k-minors of
// B - tA acquire a common root exactly when some member drops below rank k,
// so the minimum over finite members is the level where the minor gcd turns
// constant.
inline PencilProfile<BigRat> pencil_rank_profile(const SymMat<BigRat>& A,
                                                 const SymMat<BigRat>& B, int sample_count,
                                                 uint64_t seed) {
  if (A.n != B.n) throw std::invalid_argument("pencil members have different sizes");
  size_t n = A.n;
  if (n > 31) throw std::invalid_argument("pencil profile supports at most 31 variables");
  PencilProfile<BigRat> out;
  detail::sample_pencil(A, B, sample_count, seed, FieldSpec::rationals(), out);
  out.exact = true;
  out.rank_at_infinity = out.samples[0].rank;

  std::vector<UPoly<BigRat>> entries;
  entries.reserve(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      entries.push_back(UPoly<BigRat>(std::vector<BigRat>{B.at(i, j), -A.at(i, j)}));
  detail::PencilMinorTable table(n, std::move(entries));

  int min_finite = 0;
  UPoly<BigRat> critical;
  bool have_critical = false;
  std::vector<uint32_t> rowsets, colsets;
  for (size_t k = n; k >= 1; --k) {
    detail::subsets_of_size(n, k, rowsets);
    colsets = rowsets;
    UPoly<BigRat> g;
    bool constant_hit = false;
    for (uint32_t R : rowsets) {
      for (uint32_t C : colsets) {
        g = upoly_gcd(g, table.det(R, C));
        if (!g.is_zero() && g.degree() == 0) { constant_hit = true; break; }
      }
      if (constant_hit) break;
    }
    if (g.is_zero()) continue;  // every k-minor vanishes identically
    if (out.generic_rank == 0) out.generic_rank = static_cast<int>(k);
    if (g.degree() == 0) {
      min_finite = static_cast<int>(k);
      break;
    }
    critical = g;
    have_critical = true;
  }

  out.min_rank = std::min(min_finite, out.rank_at_infinity);
  out.min_at_infinity = out.rank_at_infinity == out.min_rank;
  out.min_observed = std::min(out.min_observed, out.min_rank);
  if (have_critical && min_finite == out.min_rank && min_finite < out.generic_rank) {
    out.critical_gcd = critical;
    out.drop_members = detail::rational_roots(critical, out.roots_complete);
  }
  return out;
}

// Prime-field profile: sampled ranks only, no exact minimum.
inline PencilProfile<Fp> pencil_rank_profile(const SymMat<Fp>& A, const SymMat<Fp>& B,
                                             int sample_count, uint64_t seed) {
  if (A.n != B.n) throw std::invalid_argument("pencil members have different sizes");
  if (A.a.empty()) throw std::invalid_argument("empty pencil");
  PencilProfile<Fp> out;
  detail::sample_pencil(A, B, sample_count, seed, FieldSpec::prime_field(A.a[0].modulus()),
                        out);
  return out;
}

}  // namespace ci2
