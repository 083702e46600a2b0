#pragma once

#include <string>
#include <vector>

#include "ci2/numeric.hpp"

namespace ci2 {

// Closed-form codimension estimates, binomial tables, theta/omega sweeps,
// hypertangent product chains and the exclusion-margin arithmetic.
// Everything here is exact integer/rational arithmetic; zero tolerance.

enum class BoundTag {
  r01_irred,
  r01_rank,
  r02,
  r1,
  r2_1,
  r2_2,
  r3_1,
  r3_2,
};

const char* bound_tag_label(BoundTag t);
BoundTag parse_bound_tag(const std::string& s);

// Throws std::invalid_argument unless d1 + d2 == M + 2, 2 <= d1 <= d2 and
// M >= 13 (relaxed to M >= 11 when exploratory is set).
void validate_params(long M, long d1, long d2, bool exploratory = false);

BigInt condition_bound(BoundTag tag, long M, long d1, long d2,
                       bool exploratory = false);

struct BoundLedger {
  long M = 0, d1 = 0, d2 = 0;
  BigInt r01_irred, r01_rank, r02, r1, r2_2, r3_2, r2_1, r3_1;
  BigInt minimum;
  BigInt target;  // (M-9)(M-10)/2 - 1
  bool min_is_r31 = false;
  bool meets_target = false;
  // supporting expressions reported alongside the stated bounds
  BigInt r01_irred_generic;  // binom(d1+M+1, M+1) - (M+3) at the given d1
  BigInt r02_constrained;    // the full degree-d2 expression at the given pair
};

BoundLedger theorem02_minimum(long M, long d1, long d2,
                              bool exploratory = false);

// Degree regime for the binomial tables and theta sweeps: `smooth` uses the
// R1 degree sequence in M variables, `singular` the R2.2 sequence in M+1.
enum class Regime { smooth, singular };
const char* regime_name(Regime r);

struct Method1Entry {
  long k = 0;
  long alpha = 0;
  long beta = 0;
  BigInt value;  // binom(alpha, beta)
};

struct Method1Table {
  Regime regime = Regime::smooth;
  long M = 0, d1 = 0, d2 = 0;
  std::vector<Method1Entry> entries;  // k = 1..M-3 (smooth), 1..M-2 (singular)
  BigInt minimum;                     // over the full table
  BigInt tail_minimum;                // over k >= 3
  BigInt claimed;                     // stated minimum for this (d1, regime)
  // d1 = 2: full minimum equals binom(M+shift, 2).  d1 >= 3: the tail
  // minimum equals binom(d2+shift, 3) on generic splits (where the table's
  // constant-alpha tail exists) and dominates it on boundary splits.
  bool claim_holds = false;
  bool claim_exact = false;  // raw equality tail_minimum == claimed
};

Method1Table method1_table(long M, long d1, long d2, Regime regime,
                           bool exploratory = false);

// theta_b over the regime's degree sequence m_1 <= m_2 <= ...:
//   smooth:   (M-1-b) * (sum_{j<=b} m_j + m_last - b) + 1,  0 <= b <= M-2
//   singular: (M-b)   * (sum_{j<=b} m_j + m_last - b) + 1,  0 <= b <= M-1
// m_last is the actual top degree: d2-2 (smooth) and d2-1 (singular) in the
// generic split d1+2 <= d2, one higher on the boundary splits.
BigInt theta_b(long M, long d1, long d2, long b, Regime regime,
               bool exploratory = false);

BigInt omega1(long M, long d2, long t);  // (M-1-2t)(t^2+t+d2-2)+1
BigInt omega2(long M, long t);           // (M-2t+1)(t^2-2t+M)+1
BigRat omega2_rational(long M, const BigRat& t);
BigInt omega3(long M, long d2, long t);  // (M-2-2t)(t^2+2t+d2-1)+1
// The printed form of the fourth auxiliary polynomial does not satisfy the
// endpoint identity omega3(d1-2) == omega4(d1); the corrected form does.
// Both are kept so the discrepancy stays visible.
BigInt omega4(long M, long t);             // (M-2t+2)(t^2-3t+M+1)+1
BigInt omega4_as_printed(long M, long t);  // (M-2t+2)(t^2-3t+M-1)

struct OmegaReport {
  long M = 0, d1 = 0, d2 = 0;
  bool checked = false;  // identities apply in the generic case d1+2 <= d2
  bool omega1_matches_theta = false;  // theta_{2l} == omega1(l), l = 1..d1-1
  bool omega2_links = false;          // omega2(d1) == omega1(d1-1), endpoints
  bool omega3_matches_theta = false;  // theta_{2l+1} == omega3(l), l=0..d1-2
  bool omega4_link = false;           // omega3(d1-2) == omega4(d1), corrected
  bool omega4_printed_differs = false;
};

OmegaReport omega_report(long M, long d1, long d2);

struct Prop35Sweep {
  long M = 0, d1 = 0, d2 = 0;
  BigInt target;  // (M-2)(M-1)/2 + 1
  // headline: theta_b >= target for b = 1..M-4 in both regimes
  bool all_hold = false;
  long first_failure_b = -1;
  Regime first_failure_regime = Regime::smooth;
  bool theta2_identity = false;       // smooth theta_2 == (M-3) d2 + 1
  bool omega3_zero_identity = false;  // smooth theta_1 == (M-2)(d2-1) + 1
  BigInt theta_b0;  // smooth theta_0
  bool b0_holds = false;
  BigInt theta_m4;    // smooth theta_{M-4}
  BigRat m4_stated;   // 3/4 (M^2 - 4M + 6) + 1
  bool m4_holds = false;
  BigInt plane_value;   // smooth b = M-3: sum binom(m_i+2, 2) - 3(M-3)
  BigRat plane_stated;  // M(M+4)(M+2)/24 - 3M + 1
  bool plane_holds = false;
  BigInt sing_b0;       // singular theta_0
  BigRat sing_b0_stated;  // M^2/2 + 1
  bool sing_b0_holds = false;
  BigInt sing_plane_value;  // singular b = M-2: sum binom(m_i+2,2) - 3(M-2)
  bool sing_plane_holds = false;
  // singular theta_b dominates the smooth-shaped expression for b = 1..M-3
  bool sing_dominates_smooth_form = false;
  // unimodality: theta over consecutive b in [2(d1-1), M-4], theta over even
  // b in [2, 2(d1-1)] and odd b in [1, 2d1-3] never increase after a decrease
  bool gamma_shape = false;
  OmegaReport omegas;
  bool ok = false;  // conjunction of everything above
};

Prop35Sweep prop35_sweep(long M, long d1, long d2, bool exploratory = false);

enum class ChainVariant { smooth, quad_i, quad_ii, biquad };
const char* chain_variant_name(ChainVariant v);
ChainVariant parse_chain_variant(const std::string& s);

struct ChainFactor {
  long i = 0;          // hypertangent degree
  bool doubled = false;
  BigRat value;        // (i+1)/i, squared when doubled
};

struct ChainResult {
  ChainVariant variant = ChainVariant::smooth;
  long d1 = 0, d2 = 0;
  std::vector<ChainFactor> factors;
  BigRat product;
  BigRat closed_form;
  bool identity = false;     // product == closed_form
  bool dominates = false;    // product >= closed_form
  bool general_case = false; // telescoping range is non-degenerate
  bool doubled_block_dropped = false;  // d1 == 2
  BigRat threshold_value;
  bool threshold_applies = false;  // d2 >= 8
  bool threshold_holds = false;
  bool threshold_equality = false;
  BigRat consistency;  // biquad: (9/(d1 d2)) * closed_form
};

ChainResult hypertangent_chain(long d1, long d2, ChainVariant v);

// alpha^2/(alpha-1) on (1, 2]; equals 4 at alpha = 2.
BigRat improved_4n2(const BigRat& alpha);
// (2 sl + su)^2 / (sl (sl + su)); requires sl >= 1, su >= 0.
BigRat graph_bound(const BigRat& sl, const BigRat& su);
// t^3/(t-1) on (1, oo); minimum 27/4 at t = 3/2.
BigRat beta_fn(const BigRat& t);

struct GridCheck {
  std::string name;
  bool holds = false;
  BigRat worst_x;
  BigRat worst_value;
  bool equality_seen = false;
  long points = 0;
};

// All reduced p/q with q <= max_den in the stated interval, sorted.
std::vector<BigRat> rational_grid(const BigRat& lo, const BigRat& hi,
                                  long max_den, bool include_lo);

GridCheck sweep_improved_4n2(long max_den = 64);
GridCheck sweep_beta_shape(long max_den = 64);
GridCheck sweep_graph_bound(long alpha_den = 16, long steps = 64);

struct InequalityCheck {
  std::string name;
  BigRat lhs;
  BigRat rhs;
  std::string relation;  // ">=", ">", "<", "=="
  bool holds = false;
  bool equality = false;
};

std::vector<InequalityCheck> exclusion_margins(long d1, long d2,
                                               long max_den = 64);

}  // namespace ci2
