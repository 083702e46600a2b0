#include "ci2/bounds.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ci2/expansion.hpp"

namespace ci2 {

namespace {

std::vector<uint32_t> regime_degrees(long d1, long d2, Regime r) {
  ConditionTag tag =
      r == Regime::smooth ? ConditionTag::R1 : ConditionTag::R2_2;
  return condition_degree_sequence(tag, d1, d2);
}

BigInt min_over(const std::vector<BigInt>& v) {
  BigInt m = v.front();
  for (const BigInt& x : v) m = std::min(m, x);
  return m;
}

long floor_div(const BigRat& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return static_cast<long>(q);
}

}  // namespace

const char* bound_tag_label(BoundTag t) {
  switch (t) {
    case BoundTag::r01_irred: return "R0.1-irred";
    case BoundTag::r01_rank: return "R0.1-rank";
    case BoundTag::r02: return "R0.2";
    case BoundTag::r1: return "R1";
    case BoundTag::r2_1: return "R2.1";
    case BoundTag::r2_2: return "R2.2";
    case BoundTag::r3_1: return "R3.1";
    case BoundTag::r3_2: return "R3.2";
  }
  return "?";
}

BoundTag parse_bound_tag(const std::string& s) {
  for (BoundTag t : {BoundTag::r01_irred, BoundTag::r01_rank, BoundTag::r02,
                     BoundTag::r1, BoundTag::r2_1, BoundTag::r2_2,
                     BoundTag::r3_1, BoundTag::r3_2}) {
    if (s == bound_tag_label(t)) return t;
  }
  throw std::invalid_argument("unknown bound tag: " + s);
}

const char* regime_name(Regime r) {
  return r == Regime::smooth ? "smooth" : "singular";
}

void validate_params(long M, long d1, long d2, bool exploratory) {
  long floor_m = exploratory ? 11 : 13;
  if (M < floor_m)
    throw std::invalid_argument("M must be at least " +
                                std::to_string(floor_m));
  if (d1 < 2 || d1 > d2)
    throw std::invalid_argument("degrees must satisfy 2 <= d1 <= d2");
  if (d1 + d2 != M + 2)
    throw std::invalid_argument("degrees must satisfy d1 + d2 == M + 2");
}

BigInt condition_bound(BoundTag tag, long M, long d1, long d2,
                       bool exploratory) {
  validate_params(M, d1, d2, exploratory);
  switch (tag) {
    case BoundTag::r01_irred: return BigInt(M) * (M + 3) / 2;
    case BoundTag::r01_rank: return binomial(M - 1, 2) + 1;
    case BoundTag::r02: return binomial(M + 2, 2) - 2;
    case BoundTag::r1:
    case BoundTag::r2_2:
    case BoundTag::r3_2:
      return BigInt(M - 5) * (M - 6) / 2 - (M + 1);
    case BoundTag::r2_1: return binomial(M - 5, 2) + 1;
    case BoundTag::r3_1: return binomial(M - 9, 2) - 1;
  }
  throw std::invalid_argument("unknown bound tag");
}

BoundLedger theorem02_minimum(long M, long d1, long d2, bool exploratory) {
  validate_params(M, d1, d2, exploratory);
  BoundLedger l;
  l.M = M;
  l.d1 = d1;
  l.d2 = d2;
  l.r01_irred = condition_bound(BoundTag::r01_irred, M, d1, d2, exploratory);
  l.r01_rank = condition_bound(BoundTag::r01_rank, M, d1, d2, exploratory);
  l.r02 = condition_bound(BoundTag::r02, M, d1, d2, exploratory);
  l.r1 = condition_bound(BoundTag::r1, M, d1, d2, exploratory);
  l.r2_2 = l.r1;
  l.r3_2 = l.r1;
  l.r2_1 = condition_bound(BoundTag::r2_1, M, d1, d2, exploratory);
  l.r3_1 = condition_bound(BoundTag::r3_1, M, d1, d2, exploratory);
  l.minimum = min_over({l.r01_irred, l.r01_rank, l.r02, l.r1, l.r2_2, l.r3_2,
                        l.r2_1, l.r3_1});
  l.target = BigInt(M - 9) * (M - 10) / 2 - 1;
  l.min_is_r31 = (l.minimum == l.r3_1);
  l.meets_target = (l.minimum >= l.target);
  l.r01_irred_generic = binomial(d1 + M + 1, M + 1) - (M + 3);
  l.r02_constrained =
      binomial(d2 + M + 2, d2) -
      (BigInt(M + 3) + binomial(d2 + M + 1, d2 - 1) +
       binomial(d2 - d1 + M + 2, d2 - d1));
  return l;
}

Method1Table method1_table(long M, long d1, long d2, Regime regime,
                           bool exploratory) {
  validate_params(M, d1, d2, exploratory);
  Method1Table t;
  t.regime = regime;
  t.M = M;
  t.d1 = d1;
  t.d2 = d2;
  std::vector<uint32_t> degs = regime_degrees(d1, d2, regime);
  long shift = regime == Regime::smooth ? 0 : 1;
  long rows = regime == Regime::smooth ? M - 3 : M - 2;
  for (long k = 1; k <= rows; ++k) {
    Method1Entry e;
    e.k = k;
    e.beta = static_cast<long>(degs[static_cast<size_t>(k - 1)]);
    e.alpha = M + shift - k + e.beta;
    e.value = binomial(e.alpha, e.beta);
    if (t.entries.empty() || e.value < t.minimum) t.minimum = e.value;
    if (k >= 3 && (k == 3 || e.value < t.tail_minimum))
      t.tail_minimum = e.value;
    t.entries.push_back(e);
  }
  if (d1 == 2) {
    t.claimed = binomial(M + shift, 2);
    t.claim_exact = (t.minimum == t.claimed);
    t.claim_holds = t.claim_exact;
  } else {
    t.claimed = binomial(d2 + shift, 3);
    t.claim_exact = (t.tail_minimum == t.claimed);
    // the constant-alpha tail of the printed table needs a single of degree
    // d1+1 in the sequence: d2 >= d1+3 (smooth) resp. d2 >= d1+2 (singular)
    long slack = regime == Regime::smooth ? 3 : 2;
    t.claim_holds = (d2 - d1 >= slack) ? t.claim_exact
                                       : (t.tail_minimum >= t.claimed);
  }
  return t;
}

BigInt theta_b(long M, long d1, long d2, long b, Regime regime,
               bool exploratory) {
  validate_params(M, d1, d2, exploratory);
  std::vector<uint32_t> degs = regime_degrees(d1, d2, regime);
  long n = static_cast<long>(degs.size());
  if (b < 0 || b > n)
    throw std::invalid_argument("b out of range for theta_b");
  BigInt prefix = 0;
  for (long j = 0; j < b; ++j) prefix += degs[static_cast<size_t>(j)];
  BigInt last = degs.back();
  BigInt mult = regime == Regime::smooth ? (M - 1 - b) : (M - b);
  return mult * (prefix + last - b) + 1;
}

BigInt omega1(long M, long d2, long t) {
  return BigInt(M - 1 - 2 * t) * (t * t + t + d2 - 2) + 1;
}

BigInt omega2(long M, long t) {
  return BigInt(M - 2 * t + 1) * (t * t - 2 * t + M) + 1;
}

BigRat omega2_rational(long M, const BigRat& t) {
  BigRat a = BigRat(M) - 2 * t + 1;
  BigRat b = t * t - 2 * t + M;
  return a * b + 1;
}

BigInt omega3(long M, long d2, long t) {
  return BigInt(M - 2 - 2 * t) * (t * t + 2 * t + d2 - 1) + 1;
}

BigInt omega4(long M, long t) {
  return BigInt(M - 2 * t + 2) * (t * t - 3 * t + M + 1) + 1;
}

BigInt omega4_as_printed(long M, long t) {
  return BigInt(M - 2 * t + 2) * (t * t - 3 * t + M - 1);
}

OmegaReport omega_report(long M, long d1, long d2) {
  OmegaReport r;
  r.M = M;
  r.d1 = d1;
  r.d2 = d2;
  r.checked = (d1 + 2 <= d2);
  if (!r.checked) return r;
  r.omega1_matches_theta = true;
  for (long l = 1; l <= d1 - 1; ++l) {
    if (omega1(M, d2, l) != theta_b(M, d1, d2, 2 * l, Regime::smooth, true))
      r.omega1_matches_theta = false;
  }
  bool link = (omega2(M, d1) == omega1(M, d2, d1 - 1));
  bool left = (omega2(M, 2) == BigInt(M) * (M - 3) + 1);
  BigRat mid = omega2_rational(M, BigRat(M - 2, 2));
  BigRat mid_stated = BigRat(3, 4) * (BigInt(M) * M - 4 * M + 12) + 1;
  r.omega2_links = link && left && (mid == mid_stated);
  r.omega3_matches_theta = true;
  for (long l = 0; l <= d1 - 2; ++l) {
    if (omega3(M, d2, l) !=
        theta_b(M, d1, d2, 2 * l + 1, Regime::smooth, true))
      r.omega3_matches_theta = false;
  }
  r.omega4_link = (omega3(M, d2, d1 - 2) == omega4(M, d1));
  r.omega4_printed_differs = (omega4(M, d1) != omega4_as_printed(M, d1));
  return r;
}

namespace {

// true when the sequence never strictly increases after a strict decrease
bool unimodal(const std::vector<BigInt>& v) {
  bool decreased = false;
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1]) decreased = true;
    else if (v[i] > v[i - 1] && decreased) return false;
  }
  return true;
}

}  // namespace

Prop35Sweep prop35_sweep(long M, long d1, long d2, bool exploratory) {
  validate_params(M, d1, d2, exploratory);
  Prop35Sweep s;
  s.M = M;
  s.d1 = d1;
  s.d2 = d2;
  s.target = BigInt(M - 2) * (M - 1) / 2 + 1;

  s.all_hold = true;
  for (Regime regime : {Regime::smooth, Regime::singular}) {
    for (long b = 1; b <= M - 4; ++b) {
      if (theta_b(M, d1, d2, b, regime, exploratory) < s.target) {
        if (s.all_hold) {
          s.first_failure_b = b;
          s.first_failure_regime = regime;
        }
        s.all_hold = false;
      }
    }
  }

  // The closed forms for theta_2 and theta_1 are stated in the generic case
  // d1 + 2 <= d2 where the top sequence degree is d2 - 2; at the boundary
  // splits the actual value strictly dominates the closed form.
  bool generic = (d1 + 2 <= d2);
  BigInt t2 = theta_b(M, d1, d2, 2, Regime::smooth, exploratory);
  BigInt t2_form = BigInt(M - 3) * d2 + 1;
  s.theta2_identity = generic ? (t2 == t2_form) : (t2 > t2_form);
  BigInt t1 = theta_b(M, d1, d2, 1, Regime::smooth, exploratory);
  BigInt t1_form = BigInt(M - 2) * (d2 - 1) + 1;
  s.omega3_zero_identity = generic ? (t1 == t1_form) : (t1 > t1_form);

  s.theta_b0 = theta_b(M, d1, d2, 0, Regime::smooth, exploratory);
  s.b0_holds = (s.theta_b0 >= s.target);

  s.theta_m4 = theta_b(M, d1, d2, M - 4, Regime::smooth, exploratory);
  s.m4_stated = BigRat(3, 4) * (BigInt(M) * M - 4 * M + 6) + 1;
  s.m4_holds = (BigRat(s.theta_m4) >= s.m4_stated);

  std::vector<uint32_t> smooth_degs = regime_degrees(d1, d2, Regime::smooth);
  s.plane_value = -BigInt(3) * (M - 3);
  for (uint32_t m : smooth_degs) s.plane_value += binomial(m + 2, 2);
  s.plane_stated =
      BigRat(BigInt(M) * (M + 4) * (M + 2), 24) - 3 * M + 1;
  s.plane_holds = (BigRat(s.plane_value) >= s.plane_stated);

  s.sing_b0 = theta_b(M, d1, d2, 0, Regime::singular, exploratory);
  s.sing_b0_stated = BigRat(BigInt(M) * M, 2) + 1;
  s.sing_b0_holds = (BigRat(s.sing_b0) >= s.sing_b0_stated);

  std::vector<uint32_t> sing_degs = regime_degrees(d1, d2, Regime::singular);
  s.sing_plane_value = -BigInt(3) * (M - 2);
  for (uint32_t m : sing_degs) s.sing_plane_value += binomial(m + 2, 2);
  s.sing_plane_holds = (BigRat(s.sing_plane_value) >= s.plane_stated);

  s.sing_dominates_smooth_form = true;
  for (long b = 1; b <= M - 3; ++b) {
    BigInt prefix = 0;
    for (long j = 0; j < b; ++j) prefix += sing_degs[static_cast<size_t>(j)];
    BigInt second_last = sing_degs[sing_degs.size() - 2];
    BigInt smooth_form = BigInt(M - 1 - b) * (prefix + second_last - b) + 1;
    if (theta_b(M, d1, d2, b, Regime::singular, exploratory) < smooth_form)
      s.sing_dominates_smooth_form = false;
  }

  std::vector<BigInt> consecutive, evens, odds;
  for (long b = 2 * (d1 - 1); b <= M - 4; ++b)
    consecutive.push_back(theta_b(M, d1, d2, b, Regime::smooth, exploratory));
  for (long b = 2; b <= std::min(2 * (d1 - 1), M - 4); b += 2)
    evens.push_back(theta_b(M, d1, d2, b, Regime::smooth, exploratory));
  for (long b = 1; b <= std::min(2 * d1 - 3, M - 4); b += 2)
    odds.push_back(theta_b(M, d1, d2, b, Regime::smooth, exploratory));
  s.gamma_shape = unimodal(consecutive) && unimodal(evens) && unimodal(odds);

  s.omegas = omega_report(M, d1, d2);
  bool omega_ok =
      !s.omegas.checked ||
      (s.omegas.omega1_matches_theta && s.omegas.omega2_links &&
       s.omegas.omega3_matches_theta && s.omegas.omega4_link &&
       s.omegas.omega4_printed_differs);

  s.ok = s.all_hold && s.theta2_identity && s.omega3_zero_identity &&
         s.b0_holds && s.m4_holds && s.plane_holds && s.sing_b0_holds &&
         s.sing_plane_holds && s.sing_dominates_smooth_form &&
         s.gamma_shape && omega_ok;
  return s;
}

const char* chain_variant_name(ChainVariant v) {
  switch (v) {
    case ChainVariant::smooth: return "smooth";
    case ChainVariant::quad_i: return "quad-i";
    case ChainVariant::quad_ii: return "quad-ii";
    case ChainVariant::biquad: return "biquad";
  }
  return "?";
}

ChainVariant parse_chain_variant(const std::string& s) {
  for (ChainVariant v : {ChainVariant::smooth, ChainVariant::quad_i,
                         ChainVariant::quad_ii, ChainVariant::biquad}) {
    if (s == chain_variant_name(v)) return v;
  }
  throw std::invalid_argument("unknown chain variant: " + s);
}

ChainResult hypertangent_chain(long d1, long d2, ChainVariant v) {
  if (d1 < 2 || d1 > d2)
    throw std::invalid_argument("degrees must satisfy 2 <= d1 <= d2");
  ChainResult r;
  r.variant = v;
  r.d1 = d1;
  r.d2 = d2;
  r.doubled_block_dropped = (d1 == 2);

  auto push_single = [&r](long i) {
    r.factors.push_back({i, false, BigRat(i + 1, i)});
  };
  if (v == ChainVariant::smooth) {
    push_single(1);
    push_single(2);
  } else if (v == ChainVariant::quad_i) {
    push_single(2);
  }
  for (long i = 3; i <= d1 - 1; ++i) {
    BigRat f(i + 1, i);
    r.factors.push_back({i, true, f * f});
  }
  long start = d1 == 2 ? 3 : d1;
  long end = v == ChainVariant::smooth  ? d2 - 3
             : v == ChainVariant::biquad ? d2 - 1
                                          : d2 - 2;
  for (long i = start; i <= end; ++i) push_single(i);

  r.product = 1;
  for (const ChainFactor& f : r.factors) r.product *= f.value;

  switch (v) {
    case ChainVariant::smooth:
      r.closed_form = BigRat(d1 * (d2 - 2), 3);
      r.threshold_value = BigRat(4 * (d2 - 2), 3 * d2);
      break;
    case ChainVariant::quad_i:
      r.closed_form = BigRat(d1 * (d2 - 1), 6);
      r.threshold_value = BigRat(7 * (d2 - 1), 6 * d2);
      break;
    case ChainVariant::quad_ii:
      r.closed_form = BigRat(d1 * (d2 - 1), 9);
      r.threshold_value = BigRat(72 * (d2 - 1), 63 * d2);
      break;
    case ChainVariant::biquad:
      r.closed_form = BigRat(d1 * d2, 9);
      break;
  }
  r.identity = (r.product == r.closed_form);
  r.dominates = (r.product >= r.closed_form);
  long slack = v == ChainVariant::smooth  ? 2
               : v == ChainVariant::biquad ? 0
                                            : 1;
  r.general_case = (d1 >= 3 && d2 - d1 >= slack);

  if (v == ChainVariant::biquad) {
    r.consistency = BigRat(9, d1 * d2) * r.closed_form;
    r.threshold_value = r.consistency;
    r.threshold_applies = true;
    r.threshold_holds = (r.consistency == 1);
    r.threshold_equality = r.threshold_holds;
  } else {
    r.threshold_applies = (d2 >= 8);
    bool strict = (v == ChainVariant::quad_i);
    r.threshold_holds =
        r.threshold_applies &&
        (strict ? r.threshold_value > 1 : r.threshold_value >= 1);
    r.threshold_equality = (r.threshold_value == 1);
  }
  return r;
}

BigRat improved_4n2(const BigRat& alpha) {
  if (alpha <= 1 || alpha > 2)
    throw std::domain_error("alpha must lie in (1, 2]");
  return alpha * alpha / (alpha - 1);
}

BigRat graph_bound(const BigRat& sl, const BigRat& su) {
  if (sl < 1)
    throw std::domain_error("lower multiplicity sum must be >= 1");
  if (su < 0)
    throw std::domain_error("upper multiplicity sum must be >= 0");
  BigRat num = 2 * sl + su;
  return num * num / (sl * (sl + su));
}

BigRat beta_fn(const BigRat& t) {
  if (t <= 1) throw std::domain_error("t must exceed 1");
  return t * t * t / (t - 1);
}

std::vector<BigRat> rational_grid(const BigRat& lo, const BigRat& hi,
                                  long max_den, bool include_lo) {
  std::vector<BigRat> out;
  for (long q = 1; q <= max_den; ++q) {
    long p_lo = floor_div(lo * q);
    long p_hi = floor_div(hi * q) + 1;
    for (long p = p_lo; p <= p_hi; ++p) {
      BigRat x(p, q);
      bool above = include_lo ? (x >= lo) : (x > lo);
      if (above && x <= hi) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GridCheck sweep_improved_4n2(long max_den) {
  GridCheck c;
  c.name = "improved-4n2-lower-bound";
  c.holds = true;
  std::vector<BigRat> grid = rational_grid(1, 2, max_den, false);
  c.points = static_cast<long>(grid.size());
  bool first = true;
  for (const BigRat& x : grid) {
    BigRat v = improved_4n2(x);
    if (v < 4) c.holds = false;
    if (v == 4) {
      c.equality_seen = true;
      if (x != 2) c.holds = false;  // equality only at alpha = 2
    }
    if (first || v < c.worst_value) {
      c.worst_value = v;
      c.worst_x = x;
      first = false;
    }
  }
  return c;
}

GridCheck sweep_beta_shape(long max_den) {
  GridCheck c;
  c.name = "beta-shape";
  c.holds = true;
  std::vector<BigRat> down = rational_grid(1, BigRat(3, 2), max_den, false);
  std::vector<BigRat> up = rational_grid(BigRat(3, 2), 4, max_den, true);
  c.points = static_cast<long>(down.size() + up.size());
  for (size_t i = 1; i < down.size(); ++i)
    if (beta_fn(down[i]) >= beta_fn(down[i - 1])) c.holds = false;
  for (size_t i = 1; i < up.size(); ++i)
    if (beta_fn(up[i]) <= beta_fn(up[i - 1])) c.holds = false;
  c.worst_x = BigRat(3, 2);
  c.worst_value = beta_fn(c.worst_x);
  if (c.worst_value != BigRat(27, 4)) c.holds = false;
  c.equality_seen = true;
  for (const BigRat& x : down)
    if (beta_fn(x) < c.worst_value) c.holds = false;
  for (const BigRat& x : up)
    if (beta_fn(x) < c.worst_value) c.holds = false;
  return c;
}

GridCheck sweep_graph_bound(long alpha_den, long steps) {
  GridCheck c;
  c.name = "graph-bound-constrained-minimum";
  c.holds = true;
  std::vector<BigRat> alphas = rational_grid(1, 2, alpha_den, false);
  bool first = true;
  for (const BigRat& a : alphas) {
    BigRat need = improved_4n2(a);
    BigRat boundary = (2 - a) / (a - 1);
    for (long k = 0; k <= steps; ++k) {
      BigRat su = boundary + BigRat(k, 16);
      BigRat g = graph_bound(1, su);
      ++c.points;
      if (g < need) c.holds = false;
      if (g == need) c.equality_seen = true;
      BigRat margin = g - need;
      if (first || margin < c.worst_value) {
        c.worst_value = margin;
        c.worst_x = a;
        first = false;
      }
    }
  }
  return c;
}

std::vector<InequalityCheck> exclusion_margins(long d1, long d2,
                                               long max_den) {
  if (d1 < 1 || d2 < 1)
    throw std::domain_error("degrees must be positive");
  std::vector<InequalityCheck> out;
  std::vector<BigRat> grid = rational_grid(1, 2, max_den, false);

  auto grid_min = [&grid](const std::function<BigRat(const BigRat&)>& f) {
    BigRat m = f(grid.front());
    for (const BigRat& x : grid) m = std::min(m, BigRat(f(x)));
    return m;
  };
  auto push = [&out](const std::string& name, const BigRat& lhs,
                     const BigRat& rhs, const std::string& rel) {
    InequalityCheck c;
    c.name = name;
    c.lhs = lhs;
    c.rhs = rhs;
    c.relation = rel;
    if (rel == ">=") c.holds = (lhs >= rhs);
    else if (rel == ">") c.holds = (lhs > rhs);
    else if (rel == "<") c.holds = (lhs < rhs);
    else c.holds = (lhs == rhs);
    c.equality = (lhs == rhs);
    out.push_back(c);
  };

  push("quadratic-2plane-multiplicity",
       grid_min([](const BigRat& a) { return 2 * a * a + 8 * (3 - a); }), 16,
       ">=");
  push("quadratic-exclusion-step",
       grid_min([](const BigRat& a) {
         return 2 * (beta_fn(a) - BigRat(7, 4));
       }),
       10, ">=");
  push("quadratic-3plane-multiplicity",
       grid_min([](const BigRat& a) { return 4 * a * a + 16 * (3 - a); }), 32,
       ">=");
  push("biquadratic-exclusion-step",
       grid_min([](const BigRat& a) { return 2 * beta_fn(a); }),
       BigRat(27, 2), ">=");
  push("codim2-ratio-vs-required", 7, 16, "<");
  push("quadratic-final-contradiction", BigRat(72, 7), BigRat(27, 2), "<");
  push("biquadratic-final-contradiction", 9, BigRat(27, 2), "<");
  push("nu-ratio-refinement", BigRat(7, 2), 4, "<");
  BigRat b32 = beta_fn(BigRat(3, 2));
  BigRat display = 2 * b32 - BigRat(7, 4);
  BigRat simplified = 2 * (b32 - BigRat(7, 4));
  push("exclusion-display-offset", display - simplified, BigRat(7, 4), "==");
  push("biquadratic-chain-consistency",
       BigRat(9, d1 * d2) * BigRat(d1 * d2, 9), 1, "==");
  return out;
}

}  // namespace ci2
