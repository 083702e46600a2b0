#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "ci2/expansion.hpp"
#include "ci2/grobner.hpp"
#include "ci2/poly.hpp"
#include "ci2/quadform.hpp"

namespace ci2 {

enum class PointClass { smooth, quadratic, biquadratic };

inline const char* point_class_name(PointClass c) {
  switch (c) {
    case PointClass::smooth: return "smooth";
    case PointClass::quadratic: return "quadratic";
    case PointClass::biquadratic: return "biquadratic";
  }
  return "?";
}

// Trichotomy by the rank of the two chart-linear parts, which equals the
// Jacobian rank of the pair at the point.  At a quadratic point star_gen
// names the generator carrying the nonzero linear form and lambda scales it
// onto the other generator's linear part.
template <class K>
struct PointClassification {
  PointClass kind = PointClass::smooth;
  int star_gen = -1;
  K lambda{};
};

template <class K>
PointClassification<K> classify_point(const PairExpansion<K>& pe) {
  if (!pe.on_variety())
    throw std::invalid_argument("point does not lie on the intersection");
  PointClassification<K> out;
  out.lambda = FieldOps<K>::zero_like(pe.center[pe.chart]);
  const Poly<K>& t1 = pe.q1[1];
  const Poly<K>& t2 = pe.q2[1];
  switch (linear_span_rank(t1, t2)) {
    case 2:
      out.kind = PointClass::smooth;
      break;
    case 1:
      out.kind = PointClass::quadratic;
      if (!t1.is_zero()) {
        out.star_gen = 0;
        if (!t2.is_zero())
          out.lambda = t2.leading_coeff() * FieldOps<K>::inverse(t1.leading_coeff());
      } else {
        out.star_gen = 1;
      }
      break;
    default:
      out.kind = PointClass::biquadratic;
      break;
  }
  return out;
}

// at a quadratic point: the rank of the quadratic part of the generator
// whose linear part was normalized away, i.e. of q_{2,2} - lambda*q_{1,2}
// on all chart variables
template <class K>
int point_rank(PairExpansion<K> pe) {
  if (classify_point(pe).kind != PointClass::quadratic)
    throw std::invalid_argument("point rank is defined at quadratic points only");
  if (!pe.quad_normalized && !pe.roles_swapped) normalize_quadratic_point(pe);
  int quad = pe.roles_swapped ? 0 : 1;
  K zero = FieldOps<K>::zero_like(pe.center[pe.chart]);
  return quadratic_rank(pe.series(quad)[2], zero);
}

// at a bi-quadratic point: sampled rank profile of the pencil spanned by the
// two quadratic parts, with the first generator's form as the member at
// infinity; over the rationals the profile also carries the exact minimum
template <class K>
PencilProfile<K> point_pencil_profile(const PairExpansion<K>& pe, int sample_count,
                                      uint64_t seed) {
  if (classify_point(pe).kind != PointClass::biquadratic)
    throw std::invalid_argument("pencil profile is defined at bi-quadratic points only");
  K zero = FieldOps<K>::zero_like(pe.center[pe.chart]);
  return pencil_rank_profile(from_quadratic_poly(pe.q1[2], zero),
                             from_quadratic_poly(pe.q2[2], zero), sample_count, seed);
}

template <class K>
std::vector<std::vector<Poly<K>>> jacobian(const std::vector<Poly<K>>& fs, size_t nvars) {
  std::vector<std::vector<Poly<K>>> J;
  J.reserve(fs.size());
  for (const auto& f : fs) {
    std::vector<Poly<K>> row;
    row.reserve(nvars);
    for (size_t v = 0; v < nvars; ++v) row.push_back(f.derivative(v));
    J.push_back(std::move(row));
  }
  return J;
}

namespace detail {

template <class K>
Poly<K> poly_det(const std::vector<std::vector<Poly<K>>>& m, std::vector<size_t> rows,
                 std::vector<size_t> cols) {
  size_t k = rows.size();
  if (k == 1) return m[rows[0]][cols[0]];
  Poly<K> acc(m[rows[0]][cols[0]].nvars());
  std::vector<size_t> subrows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < k; ++j) {
    std::vector<size_t> subcols;
    subcols.reserve(k - 1);
    for (size_t t = 0; t < k; ++t)
      if (t != j) subcols.push_back(cols[t]);
    Poly<K> term = m[rows[0]][cols[j]] * poly_det(m, subrows, subcols);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

inline void foreach_subset(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

// all c x c minors of a polynomial matrix, rows-major then columns-major
// subset order, each subset in lexicographic order
template <class K>
std::vector<Poly<K>> poly_matrix_minors(const std::vector<std::vector<Poly<K>>>& m, size_t c) {
  std::vector<Poly<K>> out;
  if (m.empty() || c == 0 || c > m.size() || c > m[0].size()) return out;
  detail::foreach_subset(m.size(), c, [&](const std::vector<size_t>& rows) {
    detail::foreach_subset(m[0].size(), c, [&](const std::vector<size_t>& cols) {
      out.push_back(detail::poly_det(m, rows, cols));
    });
  });
  return out;
}

// Generators of the singular locus of the affine cone: the equations plus
// every c x c minor of their Jacobian, where c is the expected codimension
// of the zero set (supplied by the caller, not inferred from the generator
// count, so overdetermined presentations stay honest).
template <class K>
std::vector<Poly<K>> singular_locus_ideal(const std::vector<Poly<K>>& fs, size_t nvars,
                                          size_t expected_codim) {
  if (expected_codim == 0 || expected_codim > fs.size())
    throw std::invalid_argument("expected codimension must be in 1..#equations");
  std::vector<Poly<K>> gens = fs;
  auto J = jacobian(fs, nvars);
  for (auto& mnr : poly_matrix_minors(J, expected_codim)) gens.push_back(std::move(mnr));
  return gens;
}

inline DimensionResult singular_locus_dimension(const std::vector<Poly<Fp>>& fs, size_t nvars,
                                                size_t expected_codim,
                                                GrobnerOptions opt = {}) {
  return projective_dimension(singular_locus_ideal(fs, nvars, expected_codim), nvars, opt);
}

}  // namespace ci2
