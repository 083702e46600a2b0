#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ci2/harness.hpp"

#include <set>
#include <string>
#include <vector>

#include "support/mk.hpp"
#include "support/naive.hpp"

using namespace ci2;

namespace {

constexpr uint32_t kP = 101;

SampleSpec spec_at(uint32_t p, uint64_t seed, uint64_t count) {
  SampleSpec s;
  s.p = p;
  s.seed = seed;
  s.count = count;
  return s;
}

template <class K>
bool same_report(const ConditionReport<K>& a, const ConditionReport<K>& b) {
  bool eq = a.tag == b.tag && a.verdict == b.verdict && a.point == b.point &&
            a.failing_index == b.failing_index && a.computed_dim == b.computed_dim &&
            a.ambient_obj_dim == b.ambient_obj_dim && a.computed_rank == b.computed_rank &&
            a.rank_threshold == b.rank_threshold && a.codim_threshold == b.codim_threshold &&
            a.has_lambda == b.has_lambda && (!a.has_lambda || a.lambda == b.lambda) &&
            a.witness_point == b.witness_point && a.justification == b.justification &&
            a.has_pencil == b.has_pencil && a.work.spairs == b.work.spairs &&
            a.work.reduction_steps == b.work.reduction_steps &&
            a.work.lines_sampled == b.work.lines_sampled &&
            a.work.points_scanned == b.work.points_scanned;
  if (!eq) return false;
  if (!a.has_pencil) return true;
  if (a.pencil.samples.size() != b.pencil.samples.size()) return false;
  for (size_t i = 0; i < a.pencil.samples.size(); ++i) {
    const auto &x = a.pencil.samples[i], &y = b.pencil.samples[i];
    if (x.at_infinity != y.at_infinity || x.rank != y.rank) return false;
    if (!x.at_infinity && !(x.lambda == y.lambda)) return false;
  }
  return a.pencil.min_observed == b.pencil.min_observed;
}

bool same_membership(const MembershipReport<Fp>& a, const MembershipReport<Fp>& b) {
  if (a.global.size() != b.global.size() || a.points != b.points ||
      a.locals.size() != b.locals.size() || a.classes != b.classes ||
      a.points_truncated != b.points_truncated || a.overall != b.overall)
    return false;
  for (size_t i = 0; i < a.global.size(); ++i)
    if (!same_report(a.global[i], b.global[i])) return false;
  for (size_t i = 0; i < a.locals.size(); ++i) {
    if (a.locals[i].size() != b.locals[i].size()) return false;
    for (size_t j = 0; j < a.locals[i].size(); ++j)
      if (!same_report(a.locals[i][j], b.locals[i][j])) return false;
  }
  return true;
}

bool same_run(const RunReport& a, const RunReport& b) {
  if (a.mode != b.mode || a.points_per_pair != b.points_per_pair ||
      a.pairs.size() != b.pairs.size() || a.pairs_passed != b.pairs_passed ||
      a.pairs_failed != b.pairs_failed || a.pairs_partial != b.pairs_partial ||
      a.pairs_budget != b.pairs_budget || a.failure_seeds != b.failure_seeds ||
      a.overall != b.overall || a.work.spairs != b.work.spairs ||
      a.work.reduction_steps != b.work.reduction_steps ||
      a.work.lines_sampled != b.work.lines_sampled ||
      a.work.points_scanned != b.work.points_scanned)
    return false;
  if (a.tallies.size() != b.tallies.size()) return false;
  for (const auto& [tag, t] : a.tallies) {
    auto it = b.tallies.find(tag);
    if (it == b.tallies.end()) return false;
    if (t.pass != it->second.pass || t.fail != it->second.fail ||
        t.partial != it->second.partial || t.budget != it->second.budget)
      return false;
  }
  for (size_t i = 0; i < a.pairs.size(); ++i) {
    const auto &x = a.pairs[i], &y = b.pairs[i];
    if (x.index != y.index || x.seed != y.seed || x.injected != y.injected ||
        x.enumerated != y.enumerated || x.points_complete != y.points_complete)
      return false;
    if (!same_membership(x.report, y.report)) return false;
  }
  return true;
}

std::vector<uint32_t> values(const std::vector<Fp>& pt) {
  std::vector<uint32_t> v;
  for (const Fp& c : pt) v.push_back(c.value());
  return v;
}

// x0 x1 + c (x2^2 + ... + x6^2): smooth for c != 0, a rank-two quadric at c = 0
Poly<Fp> rank_drop_member(uint32_t p, uint32_t c) {
  Poly<Fp> f = mkp(p, 7, {{1, {1, 1}}});
  for (size_t i = 2; i < 7; ++i) {
    Monomial m = Monomial::var(i, 7) * Monomial::var(i, 7);
    if (c != 0) f.add_term(m, Fp(c, p));
  }
  return f;
}

}  // namespace

TEST_CASE("sample specs validate their inputs") {
  CHECK_NOTHROW(spec_at(kP, 1, 1).validate());
  SampleSpec s = spec_at(0, 1, 1);
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);  // sampling needs a prime field
  s = spec_at(4, 1, 1);
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);  // 4 is not prime
  s = spec_at(kP, 1, 1);
  s.density_den = 0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = spec_at(kP, 1, 1);
  s.density_num = 0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);  // would sample the zero polynomial
  s = spec_at(kP, 1, 1);
  s.density_num = 3;
  s.density_den = 2;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = spec_at(kP, 1, 1);
  s.M = 5;  // 2 + 4 != 5 + 2
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("pair seeds regenerate their pairs exactly") {
  SampleSpec spec = spec_at(kP, 7, 1);
  for (uint64_t i = 0; i < 4; ++i) {
    SampledPair a = sample_pair(spec, i);
    CHECK(a.seed == pair_seed(7, i));
    SampledPair b = sample_pair_from_seed(spec, a.seed);
    CHECK(a.f1 == b.f1);
    CHECK(a.f2 == b.f2);
  }
  CHECK_FALSE(sample_pair(spec, 0).f1 == sample_pair(spec, 1).f1);
  // the reproducer stream depends on the run seed alone
  CHECK(pair_seed(7, 0) != pair_seed(8, 0));
}

TEST_CASE("sampled forms are homogeneous of exact degree") {
  SampleSpec spec = spec_at(kP, 3, 1);
  SampledPair full = sample_pair(spec, 0);
  CHECK(full.f1.nvars() == 7);
  CHECK(full.f1.degree() == 2);
  CHECK(full.f1.is_homogeneous());
  CHECK(full.f1.terms().size() == 28);  // density 1 keeps every monomial
  CHECK(full.f2.degree() == 4);
  CHECK(full.f2.is_homogeneous());
  CHECK(full.f2.terms().size() == 210);

  spec.density_num = 1;
  spec.density_den = 2;
  SampledPair half = sample_pair(spec, 0);
  CHECK(half.f1.degree() == 2);
  CHECK(half.f1.is_homogeneous());
  CHECK(half.f1.terms().size() < 28);
  CHECK(half.f2.degree() == 4);

  // a vanishing density draw is patched back to a single monomial
  spec.density_den = 1000000;
  SampledPair thin = sample_pair(spec, 0);
  CHECK(thin.f1.terms().size() == 1);
  CHECK(thin.f1.degree() == 2);
  CHECK(thin.f2.terms().size() == 1);
  CHECK(thin.f2.degree() == 4);
}

TEST_CASE("projective point counts respect the cap") {
  const uint64_t big = ~uint64_t{0} / 4;
  CHECK(projective_point_count(5, 7, big) == 19531);
  CHECK(projective_point_count(3, 4, big) == 40);
  CHECK(projective_point_count(5, 3, big) == 31);
  CHECK(projective_point_count(2, 3, big) == 7);
  CHECK(projective_point_count(101, 7, 2000000) == 2000001);  // cap + 1 marks overflow
  CHECK(enumeration_feasible(5, 7, 2000000));
  CHECK(enumeration_feasible(5, 7, 19531));
  CHECK_FALSE(enumeration_feasible(5, 7, 19530));
  CHECK_FALSE(enumeration_feasible(101, 7, 2000000));
}

TEST_CASE("full enumeration matches the brute force oracle") {
  // the line x0 = x1 = 0 in P^3 over F_3
  auto l1 = mkp(3, 4, {{1, {1}}});
  auto l2 = mkp(3, 4, {{1, {0, 1}}});
  auto line = enumerate_points(l1, l2, 3, 1000);
  CHECK(line.complete);
  CHECK(line.scanned == 40);
  REQUIRE(line.points.size() == 4);
  CHECK(line.points.size() == naive::projective_zero_count({l1, l2}, 3, 4));
  CHECK(values(line.points[0]) == std::vector<uint32_t>{0, 0, 1, 0});
  CHECK(values(line.points[1]) == std::vector<uint32_t>{0, 0, 1, 1});
  CHECK(values(line.points[2]) == std::vector<uint32_t>{0, 0, 1, 2});
  CHECK(values(line.points[3]) == std::vector<uint32_t>{0, 0, 0, 1});

  // the smooth conic x0 x1 = x2^2 over F_5 has p + 1 = 6 rational points
  auto conic = mkp(5, 3, {{1, {1, 1}}, {-1, {0, 0, 2}}});
  auto zero = Poly<Fp>(3);
  auto en = enumerate_points(conic, zero, 5, 1000);
  CHECK(en.complete);
  CHECK(en.scanned == 31);
  REQUIRE(en.points.size() == 6);
  CHECK(en.points.size() == naive::projective_zero_count({conic}, 5, 3));
  std::set<std::vector<uint32_t>> got;
  for (const auto& pt : en.points) {
    CHECK(conic.eval(pt).is_zero());
    got.insert(values(pt));
  }
  std::set<std::vector<uint32_t>> want{{1, 0, 0}, {1, 1, 1}, {1, 1, 4},
                                       {1, 4, 2}, {1, 4, 3}, {0, 1, 0}};
  CHECK(got == want);

  CHECK_THROWS_AS(enumerate_points(conic, zero, 2, 1000), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_points(zero, zero, 5, 1000), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_points(conic, l1, 5, 1000), std::invalid_argument);
}

TEST_CASE("plane sampling is seeded canonical and deduplicated") {
  AmbientSetup setup = AmbientSetup::make(4, 2, 4);
  auto f1 = mkp(kP, 7, {{1, {1, 1}}, {1, {0, 0, 1, 1}}, {1, {0, 0, 0, 0, 1, 1}},
                        {1, {0, 0, 0, 0, 0, 0, 2}}});
  Poly<Fp> f2(7);
  for (size_t i = 0; i < 7; ++i) {
    Monomial m = Monomial::var(i, 7);
    f2.add_term(m * m * m * m, Fp(1, kP));
  }

  Rng rng(42);
  PointSample ps = sample_variety_points(setup, f1, f2, kP, 10, rng);
  CHECK(ps.reached_target);
  REQUIRE(ps.points.size() == 10);
  CHECK(ps.planes >= 1);
  CHECK(ps.scanned > 0);
  std::set<std::vector<uint32_t>> uniq;
  for (const auto& pt : ps.points) {
    CHECK(f1.eval(pt).is_zero());
    CHECK(f2.eval(pt).is_zero());
    size_t lead = 0;
    while (lead < pt.size() && pt[lead].is_zero()) ++lead;
    REQUIRE(lead < pt.size());
    CHECK(pt[lead].value() == 1);  // canonical representative
    uniq.insert(values(pt));
  }
  CHECK(uniq.size() == 10);

  Rng again(42);
  PointSample rerun = sample_variety_points(setup, f1, f2, kP, 10, again);
  CHECK(rerun.planes == ps.planes);
  CHECK(rerun.scanned == ps.scanned);
  REQUIRE(rerun.points.size() == 10);
  for (size_t i = 0; i < 10; ++i) CHECK(values(rerun.points[i]) == values(ps.points[i]));

  Rng other(43);
  PointSample shifted = sample_variety_points(setup, f1, f2, kP, 10, other);
  CHECK_FALSE(values(shifted.points[0]) == values(ps.points[0]));

  Rng idle(1);
  PointSample none = sample_variety_points(setup, f1, f2, kP, 0, idle);
  CHECK(none.points.empty());
  CHECK(none.planes == 0);
  CHECK(none.reached_target);

  Rng bad(1);
  CHECK_THROWS_AS(sample_variety_points(setup, Poly<Fp>(7), f2, kP, 1, bad),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_variety_points(setup, mkp(kP, 5, {{1, {2}}}), f2, kP, 1, bad),
                  std::invalid_argument);
}

TEST_CASE("empirical stats resolve the point mode from the field") {
  StatsOptions opt;
  opt.points_per_pair = 4;
  opt.threads = 1;

  SampleSpec small = spec_at(5, 11, 2);
  RunReport r5 = empirical_stats(small, opt);
  CHECK(r5.mode == PointMode::enumerate_all);
  REQUIRE(r5.pairs.size() == 2);
  for (uint64_t i = 0; i < 2; ++i) {
    CHECK(r5.pairs[i].index == i);
    CHECK(r5.pairs[i].seed == pair_seed(11, i));
    CHECK_FALSE(r5.pairs[i].injected);
    CHECK(r5.pairs[i].enumerated);
    CHECK(r5.pairs[i].report.points.size() <= 4);
  }

  SampleSpec large = spec_at(kP, 11, 1);
  RunReport r101 = empirical_stats(large, opt);
  CHECK(r101.mode == PointMode::plane_sample);
  CHECK_FALSE(r101.pairs[0].enumerated);
  CHECK(r101.pairs[0].report.points_truncated);  // samples never cover the variety
  CHECK(r101.overall != Verdict::pass);

  CHECK(std::string(point_mode_name(r5.mode)) == "enumerate");
  CHECK(std::string(point_mode_name(r101.mode)) == "sample");
  CHECK(std::string(point_mode_name(PointMode::automatic)) == "auto");
}

TEST_CASE("run reports do not depend on the thread count") {
  StatsOptions one;
  one.points_per_pair = 3;
  one.threads = 1;
  StatsOptions three = one;
  three.threads = 3;

  SampleSpec spec = spec_at(5, 19, 3);
  RunReport a = empirical_stats(spec, one);
  RunReport b = empirical_stats(spec, three);
  CHECK(same_run(a, b));
  RunReport c = empirical_stats(spec, one);  // and repeat runs are identical
  CHECK(same_run(a, c));
}

TEST_CASE("injected pairs run first and keep no reproducer seed") {
  // repeated linear factor fails the irreducibility check; the second form is
  // divisible by the first, so the intersection check fails at the division
  auto f1v = mkp(kP, 7, {{1, {2}}, {2, {1, 1}}, {1, {0, 2}}});
  Poly<Fp> mult = mkp(kP, 7, {{1, {0, 0, 2}}, {1, {0, 0, 0, 2}}});
  Poly<Fp> f2v = f1v * mult;
  SampledPair bad{f1v, f2v, 12345};

  StatsOptions opt;
  opt.points_per_pair = 0;  // geometry only, no point acquisition
  opt.threads = 1;
  SampleSpec spec = spec_at(kP, 21, 1);
  RunReport run = empirical_stats(spec, opt, {bad});

  REQUIRE(run.pairs.size() == 2);
  CHECK(run.pairs[0].injected);
  CHECK(run.pairs[0].seed == 0);  // injected pairs carry no reproducer
  CHECK(run.pairs[0].report.overall == Verdict::fail);
  CHECK_FALSE(run.pairs[1].injected);
  CHECK(run.pairs[1].seed == pair_seed(21, 0));

  CHECK(run.tallies.at(ConditionTag::R0_1).fail == 1);
  CHECK(run.tallies.at(ConditionTag::R0_1).total() == 2);
  CHECK(run.tallies.at(ConditionTag::R0_2).fail == 1);
  CHECK(run.pairs_failed == 1);
  CHECK(run.overall == Verdict::fail);
  CHECK(run.failure_seeds.empty());  // injected failures are not reproducible draws
}

TEST_CASE("degenerate sampled pairs surface their reproducer seeds") {
  SampleSpec spec = spec_at(kP, 33, 2);
  spec.density_num = 1;
  spec.density_den = 1000000;  // collapses each draw to a single monomial
  StatsOptions opt;
  opt.points_per_pair = 0;
  opt.threads = 1;
  RunReport run = empirical_stats(spec, opt);

  // a monomial quadric is either a square or a product of two lines; both
  // fail the irreducibility check, so every pair lands in failure_seeds
  CHECK(run.pairs_failed == 2);
  REQUIRE(run.failure_seeds.size() == 2);
  CHECK(run.failure_seeds[0] == pair_seed(33, 0));
  CHECK(run.failure_seeds[1] == pair_seed(33, 1));
  for (uint64_t s : run.failure_seeds) {
    SampledPair again = sample_pair_from_seed(spec, s);
    CHECK(again.f1.terms().size() == 1);
    auto rep = check_r01(spec.setup(), again.f1, CheckConfig{});
    CHECK(rep.verdict == Verdict::fail);
  }
}

TEST_CASE("verifier failure rate tracks the field size") {
  CheckConfig cfg;
  AmbientSetup setup = AmbientSetup::make(4, 2, 4);

  // exhaustive over F_3: the pencil member degenerates only at c = 0
  int fails3 = 0;
  for (uint32_t c = 0; c < 3; ++c) {
    auto rep = check_r01(setup, rank_drop_member(3, c), cfg);
    if (rep.verdict == Verdict::fail) {
      ++fails3;
      CHECK(c == 0);
      CHECK(rep.computed_dim == 4);  // Sing = {x0 = x1 = 0}
    } else {
      CHECK(rep.verdict == Verdict::pass);
    }
  }
  CHECK(fails3 == 1);

  // 50 uniform draws over F_11 fail exactly when the draw lands on 0
  Rng draw(2026);
  int zeros = 0, fails11 = 0;
  for (int i = 0; i < 50; ++i) {
    uint32_t c = static_cast<uint32_t>(draw.below(11));
    if (c == 0) ++zeros;
    auto rep = check_r01(setup, rank_drop_member(11, c), cfg);
    if (rep.verdict == Verdict::fail) ++fails11;
  }
  CHECK(fails11 == zeros);
  CHECK(zeros >= 1);
  CHECK(zeros * 3 < 50);  // observed rate sits near 1/11, well under the 1/3 of F_3
}

TEST_CASE("exit codes map verdicts for scripting") {
  CHECK(verdict_exit_code(Verdict::pass) == 0);
  CHECK(verdict_exit_code(Verdict::partial) == 0);
  CHECK(verdict_exit_code(Verdict::fail) == 1);
  CHECK(verdict_exit_code(Verdict::budget_exceeded) == 3);
}
