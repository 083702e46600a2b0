#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "ci2/poly.hpp"

namespace ci2 {

// Intersection of two hypersurfaces of degrees d1 <= d2 in projective space
// of dimension M+2, where M = d1 + d2 - 2. Homogeneous coordinates
// x0..x{M+2}; an affine chart has M+2 coordinates.
struct AmbientSetup {
  long M = 0, d1 = 0, d2 = 0;

  static AmbientSetup from_degrees(long d1, long d2) {
    if (d1 < 2) throw std::invalid_argument("d1 must be at least 2");
    if (d2 < d1) throw std::invalid_argument("degrees must satisfy d1 <= d2");
    return AmbientSetup{d1 + d2 - 2, d1, d2};
  }

  static AmbientSetup make(long M, long d1, long d2) {
    AmbientSetup s = from_degrees(d1, d2);
    if (s.M != M)
      throw std::invalid_argument("dimension mismatch: need M = d1 + d2 - 2");
    return s;
  }

  size_t ambient_vars() const { return static_cast<size_t>(M) + 3; }
  size_t chart_vars() const { return static_cast<size_t>(M) + 2; }
};

enum class ConditionTag { R0_1, R0_2, R1, R2_1, R2_2, R3_1, R3_2 };

inline const char* tag_name(ConditionTag t) {
  switch (t) {
    case ConditionTag::R0_1: return "R0.1";
    case ConditionTag::R0_2: return "R0.2";
    case ConditionTag::R1: return "R1";
    case ConditionTag::R2_1: return "R2.1";
    case ConditionTag::R2_2: return "R2.2";
    case ConditionTag::R3_1: return "R3.1";
    case ConditionTag::R3_2: return "R3.2";
  }
  return "?";
}

inline ConditionTag parse_tag(const std::string& s) {
  for (ConditionTag t : {ConditionTag::R0_1, ConditionTag::R0_2, ConditionTag::R1,
                         ConditionTag::R2_1, ConditionTag::R2_2, ConditionTag::R3_1,
                         ConditionTag::R3_2})
    if (s == tag_name(t)) return t;
  throw std::invalid_argument("unknown condition tag: " + s);
}

// Degrees of the polynomial conditions attached to a local tag, sorted
// ascending. The second block is truncated by how many linear forms the
// point class provides (two at a smooth point, one at a quadratic point,
// none at a bi-quadratic point).
inline std::vector<uint32_t> condition_degree_sequence(ConditionTag tag, long d1, long d2) {
  AmbientSetup::from_degrees(d1, d2);
  long top1 = d1, top2 = d2;
  switch (tag) {
    case ConditionTag::R1:
      if (d1 < d2) {
        top2 = d2 - 2;
      } else {
        top1 = d1 - 1;
        top2 = d2 - 1;
      }
      break;
    case ConditionTag::R2_2:
      top2 = d2 - 1;
      break;
    case ConditionTag::R3_2:
      break;
    default:
      throw std::invalid_argument(std::string(tag_name(tag)) +
                                  " has no polynomial condition sequence");
  }
  std::vector<uint32_t> out;
  for (long j = 2; j <= top1; ++j) out.push_back(static_cast<uint32_t>(j));
  for (long j = 2; j <= top2; ++j) out.push_back(static_cast<uint32_t>(j));
  std::sort(out.begin(), out.end());
  return out;
}

// Expansion of one homogeneous polynomial around a point: pick the affine
// chart of the last nonzero coordinate, rescale the point so that coordinate
// is 1, and shift to local coordinates z centered at the point. q[j] is the
// degree-j homogeneous component of the shifted polynomial.
template <class K>
struct Expansion {
  size_t chart = 0;
  std::vector<K> center;       // normalized representative, center[chart] == 1
  std::vector<Poly<K>> q;      // q[j] homogeneous of degree j in n-1 variables
};

template <class K>
Expansion<K> chart_expansion(const Poly<K>& f, std::vector<K> point) {
  size_t n = f.nvars();
  if (point.size() != n) throw std::invalid_argument("point has wrong length");
  if (!f.is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
  size_t chart = n;
  for (size_t j = n; j-- > 0;)
    if (!FieldOps<K>::is_zero(point[j])) { chart = j; break; }
  if (chart == n) throw std::invalid_argument("point has no nonzero coordinate");

  K scale = FieldOps<K>::inverse(point[chart]);
  for (auto& c : point) c *= scale;

  // x_j -> center_j + z_{k(j)} with k(j) = j below the chart index, j-1 above
  size_t zn = n - 1;
  K one = FieldOps<K>::one_like(point[chart]);
  std::vector<Poly<K>> sub;
  sub.reserve(n);
  for (size_t j = 0; j < n; ++j) {
    if (j == chart) {
      sub.push_back(Poly<K>::constant(zn, one));
    } else {
      size_t k = j < chart ? j : j - 1;
      Poly<K> s = Poly<K>::variable(k, zn, one);
      s.add_term(Monomial::one(zn), point[j]);
      sub.push_back(std::move(s));
    }
  }
  Poly<K> g = f.subst(sub);

  Expansion<K> e;
  e.chart = chart;
  e.center = std::move(point);
  int d = f.degree();
  e.q.reserve(d < 0 ? 1 : d + 1);
  for (int j = 0; j <= std::max(d, 0); ++j)
    e.q.push_back(g.homogeneous_component(static_cast<uint32_t>(j)));
  if (d < 0) e.q.assign(1, Poly<K>::zero(zn));
  return e;
}

// Joint expansion of the defining pair around one point. lead/quad roles are
// set by normalize_quadratic_point when the two linear parts are dependent.
template <class K>
struct PairExpansion {
  AmbientSetup setup;
  size_t chart = 0;
  std::vector<K> center;
  std::vector<Poly<K>> q1, q2;   // components, indices 0..d1 and 0..d2
  bool quad_normalized = false;  // q2 was replaced by q2 - lambda*q1
  bool roles_swapped = false;    // generator 2 carries the nonzero linear part
  K lambda{};

  const std::vector<Poly<K>>& series(int gen) const { return gen == 0 ? q1 : q2; }
  long gen_degree(int gen) const { return gen == 0 ? setup.d1 : setup.d2; }
  bool on_variety() const { return q1[0].is_zero() && q2[0].is_zero(); }
  const Poly<K>& linear_part(int gen) const { return gen == 0 ? q1[1] : q2[1]; }
};

template <class K>
PairExpansion<K> expand_pair(const AmbientSetup& setup, const Poly<K>& f1, const Poly<K>& f2,
                             const std::vector<K>& point) {
  if (f1.nvars() != setup.ambient_vars() || f2.nvars() != setup.ambient_vars())
    throw std::invalid_argument("polynomials do not live in the expected ambient space");
  if (!f1.is_zero() && f1.degree() != setup.d1)
    throw std::invalid_argument("first polynomial must be homogeneous of degree d1");
  if (!f2.is_zero() && f2.degree() != setup.d2)
    throw std::invalid_argument("second polynomial must be homogeneous of degree d2");
  Expansion<K> e1 = chart_expansion(f1, point);
  Expansion<K> e2 = chart_expansion(f2, point);
  assert(e1.chart == e2.chart);

  PairExpansion<K> pe;
  pe.setup = setup;
  pe.chart = e1.chart;
  pe.center = std::move(e1.center);
  pe.q1 = std::move(e1.q);
  pe.q2 = std::move(e2.q);
  size_t zn = setup.chart_vars();
  while (pe.q1.size() < static_cast<size_t>(setup.d1) + 1) pe.q1.push_back(Poly<K>::zero(zn));
  while (pe.q2.size() < static_cast<size_t>(setup.d2) + 1) pe.q2.push_back(Poly<K>::zero(zn));
  return pe;
}

// The checked form of the joint expansion: the center must lie on both
// hypersurfaces, i.e. the constant terms of both local series vanish.
template <class K>
PairExpansion<K> homogeneous_expansion(const AmbientSetup& setup, const Poly<K>& f1,
                                       const Poly<K>& f2, const std::vector<K>& point) {
  PairExpansion<K> pe = expand_pair(setup, f1, f2, point);
  if (!pe.on_variety())
    throw std::invalid_argument("expansion center does not lie on the intersection");
  return pe;
}

// rank of the span of two linear forms: 0, 1 or 2
template <class K>
int linear_span_rank(const Poly<K>& t1, const Poly<K>& t2) {
  if (t1.is_zero() && t2.is_zero()) return 0;
  if (t1.is_zero() || t2.is_zero()) return 1;
  // both nonzero: rank 1 iff proportional
  const K& c1 = t1.leading_coeff();
  const K& c2 = t2.leading_coeff();
  if (t1.leading_monomial() != t2.leading_monomial()) return 2;
  K lam = c2 * FieldOps<K>::inverse(c1);
  return (t2 - t1.scaled(lam)).is_zero() ? 1 : 2;
}

template <class K>
struct NormalizeResult {
  bool applied = false;   // q2 entries were changed
  bool swapped = false;   // generator 2 is the lead generator
  K lambda{};
};

// At a point where the two linear parts span one line, arrange for the quad
// generator's linear part to vanish. When t1 != 0 this subtracts lambda*q1
// from q2 componentwise (the chart-local form of a degree-correct generator
// change); when t1 == 0 the pair is already arranged, with roles swapped.
template <class K>
NormalizeResult<K> normalize_quadratic_point(PairExpansion<K>& pe) {
  const Poly<K>& t1 = pe.q1[1];
  const Poly<K>& t2 = pe.q2[1];
  int r = linear_span_rank(t1, t2);
  if (r != 1)
    throw std::invalid_argument("linear parts do not span a line; not a quadratic point");
  NormalizeResult<K> res;
  if (t1.is_zero()) {
    pe.roles_swapped = true;
    res.swapped = true;
    res.lambda = FieldOps<K>::zero_like(t2.leading_coeff());
    pe.lambda = res.lambda;
    return res;
  }
  if (t2.is_zero()) {
    // already in normalized shape
    pe.quad_normalized = true;
    pe.lambda = FieldOps<K>::zero_like(t1.leading_coeff());
    res.lambda = pe.lambda;
    return res;
  }
  K lam = t2.leading_coeff() * FieldOps<K>::inverse(t1.leading_coeff());
  for (size_t j = 0; j < pe.q1.size() && j < pe.q2.size(); ++j)
    pe.q2[j] = pe.q2[j] - pe.q1[j].scaled(lam);
  pe.quad_normalized = true;
  pe.lambda = lam;
  res.applied = true;
  res.lambda = lam;
  return res;
}

template <class K>
struct EliminationStep {
  size_t var;     // chart variable solved for
  Poly<K> expr;   // its value as a linear form in the surviving variables
};

template <class K>
struct ConditionSequence {
  ConditionTag tag;
  std::vector<Poly<K>> polys;            // after elimination
  std::vector<uint32_t> degrees;         // construction degree of each entry
  std::vector<EliminationStep<K>> elim;  // applied in order
};

namespace detail {

// solve t = 0 for its largest-index variable with nonzero coefficient
template <class K>
EliminationStep<K> pivot_step(const Poly<K>& t) {
  assert(!t.is_zero() && t.degree() == 1);
  size_t n = t.nvars();
  size_t pivot = n;
  K c{};
  for (size_t i = n; i-- > 0;) {
    K ci = t.coeff(Monomial::var(i, n));
    if (!FieldOps<K>::is_zero(ci)) { pivot = i; c = ci; break; }
  }
  assert(pivot < n);
  K scale = -FieldOps<K>::inverse(c);
  Poly<K> expr(n);
  for (const auto& [m, coeff] : t.terms()) {
    if (m.e[pivot] != 0) continue;
    expr.add_term(m, coeff * scale);
  }
  return EliminationStep<K>{pivot, std::move(expr)};
}

}  // namespace detail

// The local polynomial conditions for tags R1, R2.2, R3.2: the expansion
// components of both generators from degree 2 up, listed by ascending degree
// (lead generator first on ties), with the top entries dropped and linear
// parts used to eliminate variables according to the tag.
template <class K>
ConditionSequence<K> condition_sequence(PairExpansion<K> pe, ConditionTag tag) {
  if (!pe.on_variety())
    throw std::invalid_argument("expansion center does not lie on the intersection");

  ConditionSequence<K> out;
  out.tag = tag;

  int lead = 0, quad = 1;
  std::vector<Poly<K>> lin;  // linear forms used for elimination, in order

  switch (tag) {
    case ConditionTag::R1: {
      if (linear_span_rank(pe.q1[1], pe.q2[1]) != 2)
        throw std::invalid_argument("R1 needs independent linear parts");
      lin = {pe.q1[1], pe.q2[1]};
      break;
    }
    case ConditionTag::R2_2: {
      if (!pe.quad_normalized && !pe.roles_swapped) normalize_quadratic_point(pe);
      if (pe.roles_swapped) { lead = 1; quad = 0; }
      lin = {pe.series(lead)[1]};
      break;
    }
    case ConditionTag::R3_2: {
      if (!pe.q1[1].is_zero() || !pe.q2[1].is_zero())
        throw std::invalid_argument("R3.2 needs both linear parts to vanish");
      break;
    }
    default:
      throw std::invalid_argument(std::string(tag_name(tag)) +
                                  " has no polynomial condition sequence");
  }

  // standard order: ascending degree, lead generator before quad on ties
  struct Entry { int gen; long deg; };
  std::vector<Entry> entries;
  int first_gen = lead, second_gen = quad;
  if (tag == ConditionTag::R1 || tag == ConditionTag::R3_2) { first_gen = 0; second_gen = 1; }
  for (long j = 2; j <= std::max(pe.setup.d1, pe.setup.d2); ++j) {
    if (j <= pe.gen_degree(first_gen)) entries.push_back({first_gen, j});
    if (j <= pe.gen_degree(second_gen)) entries.push_back({second_gen, j});
  }

  // drop rule: two independent linear forms spend the last two entries,
  // one spends the quad generator's top entry, none spends nothing
  if (tag == ConditionTag::R1) {
    entries.pop_back();
    entries.pop_back();
  } else if (tag == ConditionTag::R2_2) {
    auto it = std::find_if(entries.rbegin(), entries.rend(), [&](const Entry& e) {
      return e.gen == quad && e.deg == pe.gen_degree(quad);
    });
    assert(it != entries.rend());
    entries.erase(std::next(it).base());
  }

  for (const Entry& e : entries) {
    out.polys.push_back(pe.series(e.gen)[static_cast<size_t>(e.deg)]);
    out.degrees.push_back(static_cast<uint32_t>(e.deg));
  }

  // eliminate one variable per available linear form
  for (size_t step = 0; step < lin.size(); ++step) {
    Poly<K> t = lin[step];
    for (const auto& done : out.elim) t = t.subst_var(done.var, done.expr);
    if (t.is_zero())
      throw std::invalid_argument("linear form degenerates during elimination");
    EliminationStep<K> st = detail::pivot_step(t);
    for (auto& p : out.polys) p = p.subst_var(st.var, st.expr);
    out.elim.push_back(std::move(st));
  }
  // re-express earlier solved variables without later-eliminated ones, so
  // each recorded expression is in surviving variables only
  for (size_t i = 0; i + 1 < out.elim.size(); ++i)
    for (size_t j = i + 1; j < out.elim.size(); ++j)
      out.elim[i].expr = out.elim[i].expr.subst_var(out.elim[j].var, out.elim[j].expr);

  return out;
}

}  // namespace ci2
