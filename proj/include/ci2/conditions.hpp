#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "ci2/expansion.hpp"
#include "ci2/grobner.hpp"
#include "ci2/points.hpp"
#include "ci2/poly.hpp"
#include "ci2/quadform.hpp"
#include "ci2/rng.hpp"
#include "ci2/singular.hpp"

namespace ci2 {

enum class Verdict { pass, fail, partial, budget_exceeded };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::partial: return "partial";
    case Verdict::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

// fail dominates, then budget-exceeded, then partial
inline Verdict combine_verdicts(Verdict a, Verdict b) {
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::fail: return 3;
      case Verdict::budget_exceeded: return 2;
      case Verdict::partial: return 1;
      case Verdict::pass: return 0;
    }
    return 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

// Deterministic work counters; wall-clock time never enters a report so
// reports stay byte-identical across runs.
struct WorkCounters {
  uint64_t spairs = 0;
  uint64_t reduction_steps = 0;
  uint64_t lines_sampled = 0;
  uint64_t points_scanned = 0;

  void add_gb(uint64_t sp, uint64_t steps) {
    spairs += sp;
    reduction_steps += steps;
  }
};

struct CheckConfig {
  GrobnerOptions gb;                      // s-pair budget for every basis run
  int squarefree_samples = 12;            // lines drawn by the squarefree test
  uint64_t enumeration_limit = 2000000;   // max projective points scanned
  long r31_codim_threshold = 11;          // singular-locus codimension demanded inside Q
  int pencil_samples = 8;                 // sampled members of the quadric pencil
  uint64_t seed = 1;
};

inline constexpr int kQuadraticPointRankMin = 9;   // quadratic points need rank >= 9
inline constexpr int kHypersurfaceRankMin = 5;     // singular points of F1 need rank >= 5

template <class K>
struct ConditionReport {
  ConditionTag tag = ConditionTag::R1;
  Verdict verdict = Verdict::pass;
  std::vector<K> point;  // expansion center for local checks, empty for global

  // witness payload; -2 marks "not computed" for dimensions (real values >= -1)
  long failing_index = -1;
  long computed_dim = -2;
  long ambient_obj_dim = -2;   // dimension of the object the codimension refers to
  int computed_rank = -1;
  int rank_threshold = 0;
  long codim_threshold = 0;
  bool has_lambda = false;
  K lambda{};
  std::vector<K> witness_point;       // offending point for enumerated sub-checks
  std::vector<std::string> justification;
  bool has_pencil = false;
  PencilProfile<K> pencil;
  WorkCounters work;
};

// ---------------------------------------------------------------------------
// squarefree test by line restriction
// ---------------------------------------------------------------------------

template <class K>
struct SquarefreeResult {
  Verdict verdict = Verdict::partial;  // pass is certain, fail is evidence-only
  uint64_t lines_tried = 0;
  uint64_t full_degree_lines = 0;
  std::vector<K> witness_a, witness_b;  // certifying line on pass, offending line on fail
};

// Restrict f to random lines a + t b. A repeated factor of f survives on
// every line where deg_t keeps the full degree, so a single squarefree
// full-degree restriction certifies that f is squarefree. The converse
// direction stays probabilistic: seeing only non-squarefree restrictions is
// reported as fail with the last line as witness.
template <class K>
SquarefreeResult<K> squarefree_probabilistic(const Poly<K>& f, const FieldSpec& field,
                                             int samples, Rng& rng) {
  SquarefreeResult<K> out;
  if (f.is_zero()) {
    out.verdict = Verdict::fail;
    return out;
  }
  if (f.degree() == 0) {
    out.verdict = Verdict::pass;
    return out;
  }
  size_t n = f.nvars();
  int degenerate_budget = samples * 4;
  for (int s = 0; s < samples && out.lines_tried < static_cast<uint64_t>(samples + degenerate_budget);) {
    ++out.lines_tried;
    std::vector<K> a(n), b(n);
    for (size_t i = 0; i < n; ++i) {
      a[i] = FieldOps<K>::random(field, rng);
      b[i] = FieldOps<K>::random(field, rng);
    }
    UPoly<K> g = f.restrict_to_line(a, b);
    if (g.degree() != f.degree()) continue;  // degenerate line, does not count
    ++out.full_degree_lines;
    ++s;
    UPoly<K> gp = g.derivative();
    UPoly<K> d = upoly_gcd(g, gp);
    if (d.degree() <= 0) {
      out.verdict = Verdict::pass;
      out.witness_a = std::move(a);
      out.witness_b = std::move(b);
      return out;
    }
    out.witness_a = a;
    out.witness_b = b;
  }
  // no squarefree restriction found: evidence of a repeated factor (or, with
  // zero full-degree lines, no evidence at all)
  out.verdict = out.full_degree_lines > 0 ? Verdict::fail : Verdict::partial;
  return out;
}

// ---------------------------------------------------------------------------
// global conditions
// ---------------------------------------------------------------------------

namespace detail {

inline std::string dim_string(long d) { return d == -1 ? std::string("empty") : std::to_string(d); }

template <class K>
uint32_t field_char(const Poly<K>& f) {
  if constexpr (std::is_same_v<K, Fp>) {
    return f.is_zero() ? 0 : f.leading_coeff().modulus();
  } else {
    (void)f;
    return 0;
  }
}

template <class K>
FieldSpec field_of(const Poly<K>& f) {
  if constexpr (std::is_same_v<K, Fp>)
    return FieldSpec::prime_field(field_char(f));
  else
    return FieldSpec::rationals();
}

// Restrict the generators to a random linear subspace with `section_vars`
// homogeneous coordinates and test whether the restricted zero set is empty.
// Projective subspaces of complementary dimension always meet a closed set of
// dimension >= (nvars - 1) - (section_vars - 1), so an empty section proves
// dim X <= nvars - section_vars - 1 for any section, lucky or not; a nonempty
// section proves nothing and the caller falls back to the exact dimension.
inline bool section_certifies_dim_bound(const std::vector<Poly<Fp>>& gens, size_t nvars,
                                        size_t section_vars, const GrobnerOptions& gb,
                                        uint64_t seed, WorkCounters& work) {
  uint32_t p = 0;
  for (const auto& g : gens)
    if (!g.is_zero()) {
      p = g.leading_coeff().modulus();
      break;
    }
  if (p == 0) return false;
  FieldSpec field = FieldSpec::prime_field(p);
  Rng rng(seed);
  std::vector<Poly<Fp>> sub;
  sub.reserve(nvars);
  for (size_t i = 0; i < nvars; ++i) {
    Poly<Fp> s(section_vars);
    for (size_t j = 0; j < section_vars; ++j) {
      Fp c = FieldOps<Fp>::random(field, rng);
      if (!c.is_zero()) s.add_term(Monomial::var(j, section_vars), c);
    }
    sub.push_back(std::move(s));
  }
  std::vector<Poly<Fp>> restricted;
  restricted.reserve(gens.size());
  for (const auto& g : gens) {
    Poly<Fp> h = g.subst(sub);
    if (!h.is_zero()) restricted.push_back(std::move(h));
  }
  if (restricted.empty()) return false;  // the subspace sits inside the zero set
  auto dim = projective_dimension(restricted, section_vars, gb);
  work.add_gb(dim.spairs_reduced, dim.reduction_steps);
  return dim.status == GbStatus::complete && dim.dim == -1;
}

}  // namespace detail

// R0.1: the first hypersurface is irreducible and reduced and its singular
// points are at worst quadratic of rank >= 5.
//   - line-restriction squarefree test (a squarefree restriction certifies);
//   - singular-locus dimension: codim >= 2 inside F1 certifies irreducible
//     and reduced exactly, and makes the line test redundant;
//   - every enumerable rational singular point must expand with a vanishing
//     linear part and a quadratic part of rank >= 5.
// pass needs an empty singular locus; a nonempty one leaves the pointwise
// sub-check sampled, hence partial.
template <class K>
ConditionReport<K> check_r01(const AmbientSetup& setup, const Poly<K>& f1,
                             const CheckConfig& cfg) {
  ConditionReport<K> rep;
  rep.tag = ConditionTag::R0_1;
  rep.rank_threshold = kHypersurfaceRankMin;
  rep.codim_threshold = 2;
  rep.ambient_obj_dim = setup.M + 1;

  if (f1.is_zero() || f1.degree() != setup.d1 || !f1.is_homogeneous())
    throw std::invalid_argument("f1 must be homogeneous of degree d1");

  Rng rng(cfg.seed);
  FieldSpec field = detail::field_of(f1);
  auto sq = squarefree_probabilistic(f1, field, cfg.squarefree_samples, rng);
  rep.work.lines_sampled = sq.lines_tried;
  if (sq.verdict == Verdict::pass)
    rep.justification.push_back("a full-degree line restriction is squarefree, so f1 has no repeated factor");
  else if (sq.verdict == Verdict::fail)
    rep.justification.push_back("every sampled full-degree line restriction has a repeated root");

  if constexpr (!std::is_same_v<K, Fp>) {
    if (sq.verdict == Verdict::fail) {
      rep.verdict = Verdict::fail;
      rep.witness_point = sq.witness_a;
      rep.justification.push_back("repeated-factor evidence on the witness line");
      return rep;
    }
    rep.verdict = Verdict::partial;
    rep.justification.push_back("singular-locus dimension is computed over prime fields only");
    return rep;
  } else {
    uint32_t p = detail::field_char(f1);
    auto sing = singular_locus_dimension({f1}, setup.ambient_vars(), 1, cfg.gb);
    rep.work.add_gb(sing.spairs_reduced, sing.reduction_steps);
    if (sing.status == GbStatus::budget_exceeded) {
      if (sq.verdict == Verdict::fail) {
        // the line test alone is evidence, not proof; without the exact
        // dimension the combined verdict stays budget-limited
        rep.justification.push_back("dimension computation exceeded the s-pair budget");
      }
      rep.verdict = Verdict::budget_exceeded;
      return rep;
    }
    rep.computed_dim = sing.dim;
    long codim = setup.M + 1 - sing.dim;  // dim F1 = M+1
    if (sing.dim >= 0 && codim < 2) {
      rep.verdict = Verdict::fail;
      rep.justification.push_back("singular locus of F1 has dimension " + detail::dim_string(sing.dim) +
                                  ", codimension " + std::to_string(codim) + " < 2 in F1");
      return rep;
    }
    rep.justification.push_back("singular locus of F1 has dimension " + detail::dim_string(sing.dim) +
                                "; codimension >= 2 makes F1 irreducible and reduced");
    if (sing.dim == -1) {
      rep.verdict = Verdict::pass;
      rep.justification.push_back("F1 is smooth, so the pointwise rank condition is vacuous");
      return rep;
    }

    // enumerate rational singular points and test each expansion
    auto ideal = singular_locus_ideal(std::vector<Poly<Fp>>{f1}, setup.ambient_vars(), 1);
    auto en = enumerate_variety_points(ideal, p, setup.ambient_vars(), cfg.enumeration_limit);
    rep.work.points_scanned = en.scanned;
    if (!en.complete) {
      rep.verdict = Verdict::partial;
      rep.justification.push_back("singular points not exhaustively enumerable within the point budget");
      return rep;
    }
    for (const auto& pt : en.points) {
      auto e = chart_expansion(f1, pt);
      assert(e.q.size() > 2 && e.q[0].is_zero() && e.q[1].is_zero());
      int rank = quadratic_rank(e.q[2], Fp::zero(p));
      if (rank < kHypersurfaceRankMin) {
        rep.verdict = Verdict::fail;
        rep.computed_rank = rank;
        rep.witness_point = pt;
        rep.justification.push_back(rank == 0
                                        ? "a singular point of F1 has vanishing quadratic part"
                                        : "a singular point of F1 has quadratic rank " +
                                              std::to_string(rank) + " < " +
                                              std::to_string(kHypersurfaceRankMin));
        return rep;
      }
    }
    rep.verdict = Verdict::partial;
    rep.justification.push_back("all " + std::to_string(en.points.size()) +
                                " rational singular points are quadratic of rank >= " +
                                std::to_string(kHypersurfaceRankMin) +
                                "; points over extensions remain unchecked");
    return rep;
  }
}

// R0.2: f2 does not restrict to zero on F1 (f1 does not divide f2) and the
// intersection is irreducible and reduced, certified by the Jacobian
// criterion: codim(Sing V in V) >= 2 for the codimension-2 complete
// intersection V.
template <class K>
ConditionReport<K> check_r02(const AmbientSetup& setup, const Poly<K>& f1, const Poly<K>& f2,
                             const CheckConfig& cfg) {
  ConditionReport<K> rep;
  rep.tag = ConditionTag::R0_2;
  rep.codim_threshold = 2;
  rep.ambient_obj_dim = setup.M;

  if (f1.is_zero() || f1.degree() != setup.d1 || !f1.is_homogeneous())
    throw std::invalid_argument("f1 must be homogeneous of degree d1");
  if (f2.is_zero() || f2.degree() != setup.d2 || !f2.is_homogeneous())
    throw std::invalid_argument("f2 must be homogeneous of degree d2");

  if (poly_divides(f1, f2)) {
    rep.verdict = Verdict::fail;
    rep.justification.push_back("f1 divides f2 exactly, so f2 restricts to zero on F1");
    return rep;
  }
  rep.justification.push_back("exact division shows f1 does not divide f2; with F1 irreducible this keeps f2 nonzero on F1");

  if constexpr (!std::is_same_v<K, Fp>) {
    rep.verdict = Verdict::partial;
    rep.justification.push_back("singular-locus dimension is computed over prime fields only");
    return rep;
  } else {
    auto ideal = singular_locus_ideal(std::vector<Poly<Fp>>{f1, f2}, setup.ambient_vars(), 2);
    // quick certificate: codim >= 2 in V means dim Sing V <= M - 2, which a
    // 3-plane section can prove outright since M + 3 - 4 - 1 = M - 2
    if (detail::section_certifies_dim_bound(ideal, setup.ambient_vars(), 4, cfg.gb,
                                            Rng(cfg.seed).fork(0x502).seed_state(), rep.work)) {
      rep.verdict = Verdict::pass;
      rep.justification.push_back("a 3-plane misses the singular locus of V, so its codimension in V is at least 2; "
                                  "a complete intersection nonsingular in codimension 1 is irreducible and reduced");
      return rep;
    }
    auto sing = projective_dimension(ideal, setup.ambient_vars(), cfg.gb);
    rep.work.add_gb(sing.spairs_reduced, sing.reduction_steps);
    if (sing.status == GbStatus::budget_exceeded) {
      rep.verdict = Verdict::budget_exceeded;
      return rep;
    }
    rep.computed_dim = sing.dim;
    long codim = setup.M - sing.dim;  // dim V = M
    if (sing.dim >= 0 && codim < 2) {
      rep.verdict = Verdict::fail;
      rep.justification.push_back("singular locus of V has dimension " + detail::dim_string(sing.dim) +
                                  ", codimension " + std::to_string(codim) + " < 2 in V");
      return rep;
    }
    rep.verdict = Verdict::pass;
    rep.justification.push_back("singular locus of V has dimension " + detail::dim_string(sing.dim) +
                                "; a complete intersection nonsingular in codimension 1 is irreducible and reduced");
    return rep;
  }
}

template <class K>
std::vector<ConditionReport<K>> check_global(const AmbientSetup& setup, const Poly<K>& f1,
                                             const Poly<K>& f2, const CheckConfig& cfg) {
  return {check_r01(setup, f1, cfg), check_r02(setup, f1, f2, cfg)};
}

// ---------------------------------------------------------------------------
// local conditions
// ---------------------------------------------------------------------------

namespace detail {

// rebuild f over the listed surviving variables only
template <class K>
Poly<K> compress_vars(const Poly<K>& f, const std::vector<size_t>& survivors) {
  Poly<K> out(survivors.size());
  for (const auto& [m, c] : f.terms()) {
    Monomial nm(survivors.size());
    uint32_t moved = 0;
    for (size_t j = 0; j < survivors.size(); ++j) {
      nm.e[j] = m.e[survivors[j]];
      moved += nm.e[j];
    }
    assert(moved == m.degree());  // f must not touch eliminated variables
    out.add_term(nm, c);
  }
  return out;
}

// the polynomial list of a condition sequence, rewritten in the variables
// that survived elimination
template <class K>
std::pair<std::vector<Poly<K>>, size_t> compressed_sequence(const PairExpansion<K>& pe,
                                                            const ConditionSequence<K>& seq) {
  std::vector<bool> gone(pe.setup.chart_vars(), false);
  for (const auto& st : seq.elim) gone[st.var] = true;
  std::vector<size_t> survivors;
  for (size_t v = 0; v < pe.setup.chart_vars(); ++v)
    if (!gone[v]) survivors.push_back(v);
  std::vector<Poly<K>> shrunk;
  shrunk.reserve(seq.polys.size());
  for (const auto& f : seq.polys) shrunk.push_back(compress_vars(f, survivors));
  return {std::move(shrunk), survivors.size()};
}

// regular-sequence verdict for one of the tags R1, R2.2, R3.2
template <class K>
ConditionReport<K> sequence_report(const PairExpansion<K>& pe, ConditionTag tag,
                                   const CheckConfig& cfg) {
  ConditionReport<K> rep;
  rep.tag = tag;
  rep.point = pe.center;
  if constexpr (!std::is_same_v<K, Fp>) {
    (void)cfg;
    rep.verdict = Verdict::partial;
    rep.justification.push_back("regular-sequence checks run over prime fields only");
    return rep;
  } else {
    ConditionSequence<Fp> seq = condition_sequence(pe, tag);
    auto [shrunk, nv] = compressed_sequence(pe, seq);
    auto rs = is_regular_sequence(shrunk, nv, cfg.gb);
    rep.work.add_gb(rs.spairs_reduced, rs.reduction_steps);
    if (rs.status == GbStatus::budget_exceeded) {
      rep.verdict = Verdict::budget_exceeded;
      return rep;
    }
    if (rs.regular) {
      rep.verdict = Verdict::pass;
      rep.computed_dim = rs.dims.empty() ? -1 : rs.dims.back();
      rep.justification.push_back("all " + std::to_string(seq.polys.size()) +
                                  " forms cut the dimension in turn");
    } else {
      rep.verdict = Verdict::fail;
      rep.failing_index = rs.first_failure;
      if (!rs.dims.empty()) rep.computed_dim = rs.dims.back();
      rep.justification.push_back("dimension fails to drop at sequence index " +
                                  std::to_string(rs.first_failure));
    }
    return rep;
  }
}

}  // namespace detail

// The local dispatch: classify the point, then check the conditions attached
// to its class. Smooth -> R1; quadratic -> R2.1 and R2.2; bi-quadratic ->
// R3.1 and R3.2.
template <class K>
std::vector<ConditionReport<K>> check_local(const AmbientSetup& setup, const Poly<K>& f1,
                                            const Poly<K>& f2, const std::vector<K>& point,
                                            const CheckConfig& cfg) {
  PairExpansion<K> pe = homogeneous_expansion(setup, f1, f2, point);
  PointClassification<K> cls = classify_point(pe);
  std::vector<ConditionReport<K>> out;

  switch (cls.kind) {
    case PointClass::smooth: {
      assert(linear_span_rank(pe.q1[1], pe.q2[1]) == 2);
      out.push_back(detail::sequence_report(pe, ConditionTag::R1, cfg));
      break;
    }
    case PointClass::quadratic: {
      assert(linear_span_rank(pe.q1[1], pe.q2[1]) == 1);
      ConditionReport<K> r21;
      r21.tag = ConditionTag::R2_1;
      r21.point = pe.center;
      r21.rank_threshold = kQuadraticPointRankMin;
      r21.has_lambda = true;
      r21.lambda = cls.lambda;
      r21.computed_rank = point_rank(pe);
      if (r21.computed_rank >= kQuadraticPointRankMin) {
        r21.verdict = Verdict::pass;
      } else {
        r21.verdict = Verdict::fail;
        r21.justification.push_back("quadratic point has rank " +
                                    std::to_string(r21.computed_rank) + " < " +
                                    std::to_string(kQuadraticPointRankMin));
      }
      out.push_back(std::move(r21));

      ConditionReport<K> r22 = detail::sequence_report(pe, ConditionTag::R2_2, cfg);
      r22.has_lambda = true;
      r22.lambda = cls.lambda;
      out.push_back(std::move(r22));
      break;
    }
    case PointClass::biquadratic: {
      assert(pe.q1[1].is_zero() && pe.q2[1].is_zero());
      ConditionReport<K> r31;
      r31.tag = ConditionTag::R3_1;
      r31.point = pe.center;
      r31.codim_threshold = cfg.r31_codim_threshold;
      r31.has_pencil = true;
      r31.pencil = point_pencil_profile(pe, cfg.pencil_samples, cfg.seed);
      if constexpr (!std::is_same_v<K, Fp>) {
        r31.verdict = Verdict::partial;
        r31.justification.push_back("singular-locus dimension is computed over prime fields only");
      } else {
        // dimensions of Q = {q12 = q22 = 0} and of its singular locus, both
        // in the chart projective space P^{M+1}
        std::vector<Poly<Fp>> qs = {pe.q1[2], pe.q2[2]};
        auto dq = projective_dimension(qs, setup.chart_vars(), cfg.gb);
        r31.work.add_gb(dq.spairs_reduced, dq.reduction_steps);
        if (dq.status == GbStatus::budget_exceeded) {
          r31.verdict = Verdict::budget_exceeded;
        } else if (pe.q1[2].is_zero() || pe.q2[2].is_zero()) {
          r31.verdict = Verdict::fail;
          r31.computed_dim = dq.dim;
          r31.justification.push_back("a quadratic part vanishes; the tangent quadric pair is degenerate");
        } else {
          auto sing = singular_locus_dimension(qs, setup.chart_vars(), 2, cfg.gb);
          r31.work.add_gb(sing.spairs_reduced, sing.reduction_steps);
          if (sing.status == GbStatus::budget_exceeded) {
            r31.verdict = Verdict::budget_exceeded;
          } else {
            r31.ambient_obj_dim = dq.dim;
            r31.computed_dim = sing.dim;
            long codim = dq.dim - sing.dim;
            if (sing.dim == -1) {
              r31.verdict = Verdict::pass;
              r31.justification.push_back("the intersection of the two tangent quadrics is smooth");
            } else if (codim >= cfg.r31_codim_threshold) {
              r31.verdict = Verdict::pass;
              r31.justification.push_back("singular locus of the tangent quadric intersection has codimension " +
                                          std::to_string(codim) + " >= " +
                                          std::to_string(cfg.r31_codim_threshold));
            } else {
              r31.verdict = Verdict::fail;
              r31.justification.push_back("singular locus of the tangent quadric intersection has dimension " +
                                          detail::dim_string(sing.dim) + ", codimension " +
                                          std::to_string(codim) + " < " +
                                          std::to_string(cfg.r31_codim_threshold));
            }
          }
        }
      }
      out.push_back(std::move(r31));
      out.push_back(detail::sequence_report(pe, ConditionTag::R3_2, cfg));
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// aggregation
// ---------------------------------------------------------------------------

template <class K>
struct MembershipReport {
  std::vector<ConditionReport<K>> global;
  std::vector<std::vector<K>> points;
  std::vector<std::vector<ConditionReport<K>>> locals;  // parallel to points
  std::vector<PointClass> classes;                      // parallel to points
  bool points_truncated = false;
  Verdict overall = Verdict::pass;
};

template <class K>
MembershipReport<K> membership_report(const AmbientSetup& setup, const Poly<K>& f1,
                                      const Poly<K>& f2, std::vector<std::vector<K>> points,
                                      const CheckConfig& cfg, bool points_truncated = false) {
  MembershipReport<K> out;
  out.global = check_global(setup, f1, f2, cfg);
  out.points = std::move(points);
  out.points_truncated = points_truncated;
  for (const auto& rep : out.global) out.overall = combine_verdicts(out.overall, rep.verdict);
  for (const auto& pt : out.points) {
    PairExpansion<K> pe = homogeneous_expansion(setup, f1, f2, pt);
    out.classes.push_back(classify_point(pe).kind);
    out.locals.push_back(check_local(setup, f1, f2, pt, cfg));
    for (const auto& rep : out.locals.back())
      out.overall = combine_verdicts(out.overall, rep.verdict);
  }
  if (out.points.empty() || out.points_truncated)
    out.overall = combine_verdicts(out.overall, Verdict::partial);
  return out;
}

// enumerate the rational points of V and check every one of them
inline MembershipReport<Fp> membership_report_enumerated(const AmbientSetup& setup,
                                                         const Poly<Fp>& f1, const Poly<Fp>& f2,
                                                         const CheckConfig& cfg) {
  uint32_t p = detail::field_char(f1);
  auto en = enumerate_variety_points({f1, f2}, p, setup.ambient_vars(), cfg.enumeration_limit);
  return membership_report(setup, f1, f2, std::move(en.points), cfg, !en.complete);
}

}  // namespace ci2
