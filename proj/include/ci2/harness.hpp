#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ci2/conditions.hpp"

namespace ci2 {

// ---------------------------------------------------------------------------
// sampling
// ---------------------------------------------------------------------------

// Density is an exact fraction so the keep/drop draw is integer-only and the
// sample stream stays byte-stable across platforms.
struct SampleSpec {
  long M = 4, d1 = 2, d2 = 4;
  uint32_t p = 101;
  uint32_t density_num = 1, density_den = 1;
  uint64_t seed = 1;
  uint64_t count = 1;

  AmbientSetup setup() const { return AmbientSetup::make(M, d1, d2); }

  void validate() const {
    setup();
    if (p == 0)
      throw std::invalid_argument("sampling draws uniform coefficients and needs a prime field; "
                                  "rational inputs must be given explicitly");
    FieldSpec::prime_field(p);
    if (density_den == 0) throw std::invalid_argument("density denominator is zero");
    if (density_num == 0)
      throw std::invalid_argument("density 0 samples the zero polynomial");
    if (density_num > density_den) throw std::invalid_argument("density exceeds 1");
  }
};

// Reproducer seed of the i-th pair in a run. Feeding it back through
// sample_pair_from_seed regenerates that pair alone.
inline uint64_t pair_seed(uint64_t run_seed, uint64_t index) {
  return Rng(run_seed).fork(index).seed_state();
}

namespace detail {

// Every degree-d monomial is kept with probability num/den, kept monomials
// get uniform nonzero coefficients. A zero draw is patched with a single
// uniform monomial so the result always has exact degree d; with density 1
// the patch is unreachable.
inline Poly<Fp> sample_form(size_t nvars, uint32_t d, uint32_t p, uint32_t num, uint32_t den,
                            Rng& rng) {
  const auto mons = monomials_of_degree(nvars, d);
  Poly<Fp> f(nvars);
  for (const auto& m : mons) {
    if (num != den && rng.below(den) >= num) continue;
    f.add_term(m, Fp(1 + rng.below(p - 1), p));
  }
  if (f.is_zero()) {
    const Monomial& m = mons[rng.below(mons.size())];
    f.add_term(m, Fp(1 + rng.below(p - 1), p));
  }
  return f;
}

}  // namespace detail

struct SampledPair {
  Poly<Fp> f1, f2;
  uint64_t seed = 0;  // regenerates this pair via sample_pair_from_seed
};

inline SampledPair sample_pair_from_seed(const SampleSpec& spec, uint64_t seed) {
  spec.validate();
  size_t n = spec.setup().ambient_vars();
  Rng rng(seed);
  SampledPair out;
  out.seed = seed;
  out.f1 = detail::sample_form(n, static_cast<uint32_t>(spec.d1), spec.p, spec.density_num,
                               spec.density_den, rng);
  out.f2 = detail::sample_form(n, static_cast<uint32_t>(spec.d2), spec.p, spec.density_num,
                               spec.density_den, rng);
  return out;
}

inline SampledPair sample_pair(const SampleSpec& spec, uint64_t index = 0) {
  return sample_pair_from_seed(spec, pair_seed(spec.seed, index));
}

// ---------------------------------------------------------------------------
// point acquisition
// ---------------------------------------------------------------------------

// |P^{nvars-1}(F_p)| = (p^nvars - 1)/(p - 1), capped to avoid overflow.
inline uint64_t projective_point_count(uint32_t p, size_t nvars, uint64_t cap) {
  uint64_t total = 0, layer = 1;  // layer = p^k
  for (size_t k = 0; k < nvars; ++k) {
    if (layer > cap || total > cap - layer) return cap + 1;
    total += layer;
    if (k + 1 < nvars) {
      if (layer > cap / p) return cap + 1;  // the next layer alone overflows the cap
      layer *= p;
    }
  }
  return total;
}

inline bool enumeration_feasible(uint32_t p, size_t nvars, uint64_t limit) {
  return projective_point_count(p, nvars, limit) <= limit;
}

// Full scan of the rational points of {f1 = f2 = 0}, rejecting the degenerate
// all-zero input for which every point would qualify.
inline PointEnumeration enumerate_points(const Poly<Fp>& f1, const Poly<Fp>& f2, uint32_t p,
                                         uint64_t limit) {
  if (p < 3) throw std::invalid_argument("point enumeration needs p >= 3");
  if (f1.is_zero() && f2.is_zero())
    throw std::invalid_argument("f1 = f2 = 0 cuts out all of projective space");
  if (f1.nvars() != f2.nvars()) throw std::invalid_argument("variable count mismatch");
  return enumerate_variety_points({f1, f2}, p, f1.nvars(), limit);
}

struct PointSample {
  std::vector<std::vector<Fp>> points;  // canonical, deduplicated, discovery order
  uint64_t planes = 0;
  uint64_t scanned = 0;
  bool reached_target = true;
};

namespace detail {

// rank of a k x n matrix over F_p by elimination on a scratch copy
inline size_t fp_matrix_rank(std::vector<std::vector<Fp>> rows) {
  size_t rank = 0, n = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < n && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    Fp inv = rows[rank][col].inverse();
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      Fp m = rows[r][col] * inv;
      for (size_t c = col; c < n; ++c) rows[r][c] -= m * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Rational points of the codimension-2 variety {f1 = f2 = 0} when the ambient
// space is too large to scan: a generic 2-plane meets the variety in a finite
// set, so draw random planes, enumerate P^2(F_p) on each, and map hits back.
// Hits are canonicalized (first nonzero coordinate 1) and deduplicated in
// discovery order; everything is driven by the rng, so a fixed seed fixes the
// point list exactly.
inline PointSample sample_variety_points(const AmbientSetup& setup, const Poly<Fp>& f1,
                                         const Poly<Fp>& f2, uint32_t p, size_t target, Rng& rng,
                                         uint64_t max_planes = 256) {
  if (f1.is_zero() || f2.is_zero())
    throw std::invalid_argument("plane sampling needs two nonzero forms");
  const size_t n = setup.ambient_vars();
  if (f1.nvars() != n || f2.nvars() != n)
    throw std::invalid_argument("forms do not live in the ambient space");
  PointSample out;
  if (target == 0) return out;
  FieldSpec field = FieldSpec::prime_field(p);
  std::set<std::vector<uint32_t>> seen;

  while (out.points.size() < target && out.planes < max_planes) {
    std::vector<std::vector<Fp>> basis(3, std::vector<Fp>(n, Fp::zero(p)));
    for (auto& row : basis)
      for (auto& c : row) c = FieldOps<Fp>::random(field, rng);
    if (detail::fp_matrix_rank(basis) < 3) continue;  // degenerate draw, not a plane
    ++out.planes;

    std::vector<Poly<Fp>> sub;
    sub.reserve(n);
    for (size_t j = 0; j < n; ++j) {
      Poly<Fp> s(3);
      for (size_t i = 0; i < 3; ++i)
        if (!basis[i][j].is_zero()) s.add_term(Monomial::var(i, 3), basis[i][j]);
      sub.push_back(std::move(s));
    }
    Poly<Fp> g1 = f1.subst(sub), g2 = f2.subst(sub);

    enumerate_projective_points(p, 3, ~uint64_t{0}, [&](const std::vector<Fp>& stu) {
      ++out.scanned;
      if (!g1.eval(stu).is_zero() || !g2.eval(stu).is_zero()) return true;
      std::vector<Fp> x(n, Fp::zero(p));
      for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < 3; ++i) x[j] += stu[i] * basis[i][j];
      size_t lead = n;
      for (size_t j = 0; j < n; ++j)
        if (!x[j].is_zero()) { lead = j; break; }
      if (lead == n) return true;  // cannot happen for a rank-3 basis
      Fp inv = x[lead].inverse();
      std::vector<uint32_t> key(n);
      for (size_t j = 0; j < n; ++j) {
        x[j] *= inv;
        key[j] = x[j].value();
      }
      if (seen.insert(std::move(key)).second) out.points.push_back(std::move(x));
      return out.points.size() < target;
    });
  }
  out.reached_target = out.points.size() >= target;
  return out;
}

// ---------------------------------------------------------------------------
// empirical statistics
// ---------------------------------------------------------------------------

enum class PointMode { automatic, enumerate_all, plane_sample };

inline const char* point_mode_name(PointMode m) {
  switch (m) {
    case PointMode::automatic: return "auto";
    case PointMode::enumerate_all: return "enumerate";
    case PointMode::plane_sample: return "sample";
  }
  return "?";
}

struct StatsOptions {
  PointMode mode = PointMode::automatic;
  uint64_t points_per_pair = 10;  // 0 skips local checks entirely
  uint64_t max_planes = 256;
  unsigned threads = 0;  // 0 = hardware concurrency; merge order is fixed either way
  CheckConfig check;
};

struct TagTally {
  uint64_t pass = 0, fail = 0, partial = 0, budget = 0;
  uint64_t total() const { return pass + fail + partial + budget; }
};

struct PairOutcome {
  uint64_t index = 0;
  uint64_t seed = 0;      // reproducer; 0 for injected pairs
  bool injected = false;
  bool enumerated = false;      // point source was a full scan
  bool points_complete = true;  // scan finished / sampling reached its target
  MembershipReport<Fp> report;
};

struct RunReport {
  int schema = 1;
  SampleSpec spec;
  PointMode mode = PointMode::automatic;  // resolved, never automatic
  uint64_t points_per_pair = 0;
  std::vector<PairOutcome> pairs;
  std::map<ConditionTag, TagTally> tallies;  // every condition report, global and local
  uint64_t pairs_passed = 0, pairs_failed = 0, pairs_partial = 0, pairs_budget = 0;
  std::vector<uint64_t> failure_seeds;  // reproducers of failed sampled pairs, index order
  WorkCounters work;
  Verdict overall = Verdict::pass;
};

// Runs membership_report over `count` sampled pairs plus any injected ones
// (injected first, then sampled; indices are stream positions). Pairs are
// independent jobs; workers fill a pre-indexed slot table and the merge walks
// it in stream order, so the report does not depend on the thread count.
inline RunReport empirical_stats(const SampleSpec& spec, const StatsOptions& options,
                                 const std::vector<SampledPair>& injected = {}) {
  spec.validate();
  const AmbientSetup setup = spec.setup();
  const size_t n = setup.ambient_vars();

  RunReport run;
  run.spec = spec;
  run.points_per_pair = options.points_per_pair;
  run.mode = options.mode != PointMode::automatic ? options.mode
             : enumeration_feasible(spec.p, n, options.check.enumeration_limit)
                 ? PointMode::enumerate_all
                 : PointMode::plane_sample;

  const uint64_t jobs = injected.size() + spec.count;
  std::vector<PairOutcome> slots(jobs);
  std::vector<std::exception_ptr> errors(jobs);

  auto run_job = [&](uint64_t i) {
    PairOutcome out;
    out.index = i;
    SampledPair pair;
    if (i < injected.size()) {
      out.injected = true;
      pair = injected[i];
      pair.seed = 0;
    } else {
      pair = sample_pair(spec, i - injected.size());
    }
    out.seed = pair.seed;
    uint64_t local = out.injected ? Rng(spec.seed).fork(~i).seed_state() : pair.seed;

    CheckConfig cfg = options.check;
    cfg.seed = Rng(local).fork(1).seed_state();

    std::vector<std::vector<Fp>> points;
    bool truncated = false;
    if (options.points_per_pair > 0) {
      if (run.mode == PointMode::enumerate_all) {
        out.enumerated = true;
        auto en = enumerate_points(pair.f1, pair.f2, spec.p, cfg.enumeration_limit);
        points = std::move(en.points);
        out.points_complete = en.complete;
        if (points.size() > options.points_per_pair) {
          points.resize(options.points_per_pair);
          out.points_complete = false;
        }
        truncated = !out.points_complete;
      } else {
        Rng prng(Rng(local).fork(2).seed_state());
        auto ps = sample_variety_points(setup, pair.f1, pair.f2, spec.p,
                                        options.points_per_pair, prng, options.max_planes);
        points = std::move(ps.points);
        out.points_complete = ps.reached_target;
        // sampled points never claim to cover the variety
        truncated = true;
      }
    }
    out.report = membership_report(setup, pair.f1, pair.f2, std::move(points), cfg, truncated);
    return out;
  };

  std::atomic<uint64_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      uint64_t i = cursor.fetch_add(1);
      if (i >= jobs) return;
      try {
        slots[i] = run_job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned want = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (want == 0) want = 1;
  if (want > jobs) want = static_cast<unsigned>(jobs);
  if (want <= 1 || jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(want);
    for (unsigned t = 0; t < want; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (uint64_t i = 0; i < jobs; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);

  for (uint64_t i = 0; i < jobs; ++i) {
    PairOutcome& out = slots[i];
    auto absorb = [&](const ConditionReport<Fp>& rep) {
      TagTally& t = run.tallies[rep.tag];
      switch (rep.verdict) {
        case Verdict::pass: ++t.pass; break;
        case Verdict::fail: ++t.fail; break;
        case Verdict::partial: ++t.partial; break;
        case Verdict::budget_exceeded: ++t.budget; break;
      }
      run.work.spairs += rep.work.spairs;
      run.work.reduction_steps += rep.work.reduction_steps;
      run.work.lines_sampled += rep.work.lines_sampled;
      run.work.points_scanned += rep.work.points_scanned;
    };
    for (const auto& rep : out.report.global) absorb(rep);
    for (const auto& locals : out.report.locals)
      for (const auto& rep : locals) absorb(rep);

    switch (out.report.overall) {
      case Verdict::pass: ++run.pairs_passed; break;
      case Verdict::fail: ++run.pairs_failed; break;
      case Verdict::partial: ++run.pairs_partial; break;
      case Verdict::budget_exceeded: ++run.pairs_budget; break;
    }
    if (out.report.overall == Verdict::fail && !out.injected)
      run.failure_seeds.push_back(out.seed);
    run.overall = combine_verdicts(run.overall, out.report.overall);
    run.pairs.push_back(std::move(out));
  }
  return run;
}

// process exit codes shared by every CLI subcommand
inline int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::partial: return 0;  // incomplete evidence is not a failure
    case Verdict::fail: return 1;
    case Verdict::budget_exceeded: return 3;
  }
  return 2;
}

}  // namespace ci2
