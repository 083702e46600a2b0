#include "ci2/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ci2/io.hpp"

namespace ci2 {
namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void parse_density(const std::string& s, SampleSpec& spec) {
  auto slash = s.find('/');
  try {
    spec.density_num = std::stoull(s.substr(0, slash));
    spec.density_den = slash == std::string::npos ? 1 : std::stoull(s.substr(slash + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed density '" + s + "', expected n or n/m");
  }
}

void regime_notice(long M, std::ostream& err) {
  if (M < 13)
    err << "note: M = " << M << " is below the M >= 13 regime of the statements; "
        << "results are desk-scale evidence only\n";
}

int verdict_to_exit(Verdict v) {
  int code = verdict_exit_code(v);
  return code;  // 0 pass/partial, 1 fail, 3 budget exceeded
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

void print_ledger_text(const BoundLedger& l, std::ostream& out) {
  out << "bound ledger  M=" << l.M << "  d1=" << l.d1 << "  d2=" << l.d2 << "\n";
  auto row = [&](const char* label, const BigInt& v) {
    out << "  " << label;
    for (size_t i = std::string(label).size(); i < 12; ++i) out << ' ';
    out << to_string(v) << "\n";
  };
  row("R0.1-irred", l.r01_irred);
  row("R0.1-rank", l.r01_rank);
  row("R0.2", l.r02);
  row("R1", l.r1);
  row("R2.2", l.r2_2);
  row("R3.2", l.r3_2);
  row("R2.1", l.r2_1);
  row("R3.1", l.r3_1);
  row("minimum", l.minimum);
  out << "  target      " << to_string(l.target) << "  ("
      << (l.meets_target ? "met" : "NOT met") << (l.min_is_r31 ? ", attained by R3.1" : "")
      << ")\n";
  out << "  supporting: R0.1-irred generic " << to_string(l.r01_irred_generic)
      << ", R0.2 constrained " << to_string(l.r02_constrained) << "\n";
}

struct BoundsOpts {
  long M = 0, d1 = 0, d2 = 0;
  long sweep_max = 60;
  bool sweep = false;
  bool exploratory = false;
  std::string format = "text";
};

int run_bounds(const BoundsOpts& o, std::ostream& out, std::ostream& err) {
  if (!o.sweep) {
    BoundLedger l = theorem02_minimum(o.M, o.d1, o.d2, o.exploratory);
    if (o.format == "structured")
      write_document(out, ledger_to_json(l));
    else
      print_ledger_text(l, out);
    if (!l.meets_target) {
      err << "ledger minimum misses the target\n";
      return kExitFail;
    }
    return kExitPass;
  }
  bool all_ok = true;
  long pairs = 0;
  Json rows = Json::array();
  for (long M = 13; M <= o.sweep_max; ++M) {
    for (long d1 = 2; 2 * d1 <= M + 2; ++d1) {
      long d2 = M + 2 - d1;
      BoundLedger l = theorem02_minimum(M, d1, d2);
      ++pairs;
      bool ok = l.meets_target && l.min_is_r31;
      all_ok = all_ok && ok;
      if (o.format == "structured") {
        Json r;
        r["M"] = M;
        r["d1"] = d1;
        r["d2"] = d2;
        r["minimum"] = bigint_json(l.minimum);
        r["target"] = bigint_json(l.target);
        r["ok"] = ok;
        rows.push_back(r);
      } else if (!ok) {
        out << "MISS at M=" << M << " d1=" << d1 << " d2=" << d2 << ": minimum "
            << to_string(l.minimum) << " vs target " << to_string(l.target) << "\n";
      }
    }
  }
  if (o.format == "structured") {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "ledger-sweep";
    j["M_max"] = o.sweep_max;
    j["pairs"] = pairs;
    j["rows"] = rows;
    j["all_ok"] = all_ok;
    write_document(out, j);
  } else {
    out << "ledger sweep M=13.." << o.sweep_max << ": " << pairs << " admissible pairs, "
        << (all_ok ? "every minimum meets the target" : "TARGET MISSED") << "\n";
  }
  return all_ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// chains
// ---------------------------------------------------------------------------

void print_chain_text(const ChainResult& c, std::ostream& out) {
  out << "chain " << chain_variant_name(c.variant) << "  d1=" << c.d1 << " d2=" << c.d2 << "\n";
  out << "  product     " << to_string(c.product) << "\n";
  out << "  closed form " << to_string(c.closed_form) << "  ("
      << (c.identity ? "identity" : c.dominates ? "product dominates" : "VIOLATED") << ", "
      << (c.general_case ? "generic split" : "boundary split") << ")\n";
  if (c.threshold_applies)
    out << "  threshold   " << to_string(c.threshold_value) << " "
        << (c.threshold_holds ? (c.threshold_equality ? "holds with equality" : "holds") : "FAILS")
        << "\n";
}

int run_chains(long d1, long d2, const std::string& variant, const std::string& format,
               std::ostream& out, std::ostream& err) {
  std::vector<ChainVariant> vs;
  if (variant == "all")
    vs = {ChainVariant::smooth, ChainVariant::quad_i, ChainVariant::quad_ii, ChainVariant::biquad};
  else
    vs = {parse_chain_variant(variant)};
  bool ok = true;
  Json rows = Json::array();
  for (ChainVariant v : vs) {
    ChainResult c = hypertangent_chain(d1, d2, v);
    bool this_ok = c.dominates && (!c.general_case || c.identity) &&
                   (!c.threshold_applies || c.threshold_holds);
    ok = ok && this_ok;
    if (format == "structured")
      rows.push_back(chain_to_json(c));
    else
      print_chain_text(c, out);
  }
  if (format == "structured") {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "chain-set";
    j["chains"] = rows;
    j["all_ok"] = ok;
    write_document(out, j);
  }
  if (!ok) err << "a chain claim failed\n";
  return ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// inequalities
// ---------------------------------------------------------------------------

int run_inequalities(long d1, long d2, long max_den, const std::string& format, std::ostream& out,
                     std::ostream& err) {
  std::vector<GridCheck> grids = {sweep_improved_4n2(max_den), sweep_beta_shape(max_den),
                                  sweep_graph_bound()};
  std::vector<InequalityCheck> margins = exclusion_margins(d1, d2, max_den);
  bool ok = true;
  for (const auto& g : grids) ok = ok && g.holds;
  for (const auto& m : margins) ok = ok && m.holds;
  if (format == "structured") {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "inequalities";
    j["d1"] = d1;
    j["d2"] = d2;
    Json gs = Json::array();
    for (const auto& g : grids) gs.push_back(grid_to_json(g));
    j["grids"] = gs;
    Json ms = Json::array();
    for (const auto& m : margins) ms.push_back(inequality_to_json(m));
    j["margins"] = ms;
    j["all_ok"] = ok;
    write_document(out, j);
  } else {
    for (const auto& g : grids)
      out << "grid " << g.name << ": " << (g.holds ? "holds" : "FAILS") << ", worst "
          << to_string(g.worst_value) << " at " << to_string(g.worst_x)
          << (g.equality_seen ? ", equality seen" : "") << ", " << g.points << " points\n";
    for (const auto& m : margins)
      out << "margin " << m.name << ": " << to_string(m.lhs) << " " << m.relation << " "
          << to_string(m.rhs) << " " << (m.holds ? "holds" : "FAILS")
          << (m.equality ? " with equality" : "") << "\n";
  }
  if (!ok) err << "an inequality failed\n";
  return ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// classify / check
// ---------------------------------------------------------------------------

template <class K>
int run_classify_typed(const Json& doc, const std::string& points_file, const CheckConfig& cfg,
                       const std::string& format, std::ostream& out, std::ostream& err) {
  PairInput<K> in = pair_input_from_json<K>(doc);
  regime_notice(in.setup.M, err);
  if (!points_file.empty()) {
    auto extra = points_from_json<K>(load_json(points_file), in.setup.ambient_vars(), in.field);
    in.points.insert(in.points.end(), extra.begin(), extra.end());
  }
  if (in.points.empty()) throw std::invalid_argument("classify needs at least one point");
  Json rows = Json::array();
  for (size_t i = 0; i < in.points.size(); ++i) {
    PairExpansion<K> pe = homogeneous_expansion(in.setup, in.f1, in.f2, in.points[i]);
    PointClassification<K> cls = classify_point(pe);
    Json r;
    r["point"] = point_to_json(in.points[i]);
    r["class"] = point_class_name(cls.kind);
    std::string extra;
    if (cls.kind == PointClass::quadratic) {
      r["star_gen"] = cls.star_gen;
      r["lambda"] = coeff_to_string(cls.lambda);
      int rank = point_rank(pe);
      r["rank"] = rank;
      extra = ", lambda " + coeff_to_string(cls.lambda) + ", rank " + std::to_string(rank);
    } else if (cls.kind == PointClass::biquadratic) {
      auto prof = point_pencil_profile(pe, cfg.pencil_samples, cfg.seed);
      r["pencil"] = pencil_to_json(prof);
      extra = ", pencil min rank observed " + std::to_string(prof.min_observed);
    }
    rows.push_back(r);
    if (format == "text")
      out << "point " << i << " " << point_to_text(in.points[i]) << ": "
          << point_class_name(cls.kind) << extra << "\n";
  }
  if (format == "structured") {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "classification";
    j["setup"] = setup_to_json(in.setup);
    j["points"] = rows;
    write_document(out, j);
  }
  return kExitPass;
}

template <class K>
void print_report_text(const ConditionReport<K>& r, const std::string& indent, std::ostream& out) {
  out << indent << tag_name(r.tag) << ": " << verdict_name(r.verdict);
  if (r.computed_rank >= 0)
    out << "  (rank " << r.computed_rank << ", needs >= " << r.rank_threshold << ")";
  if (r.computed_dim != -2) {
    out << "  (dim " << (r.computed_dim == -1 ? std::string("empty")
                                              : std::to_string(r.computed_dim));
    if (r.codim_threshold > 0) out << ", codim threshold " << r.codim_threshold;
    out << ")";
  }
  if (r.failing_index >= 0) out << "  [sequence fails at index " << r.failing_index << "]";
  out << "\n";
  for (const auto& line : r.justification) out << indent << "  - " << line << "\n";
  if (!r.witness_point.empty()) out << indent << "  witness " << point_to_text(r.witness_point) << "\n";
}

template <class K>
int run_check_typed(const Json& doc, const std::string& points_file, bool enumerate,
                    const CheckConfig& cfg, const std::string& format, std::ostream& out,
                    std::ostream& err) {
  PairInput<K> in = pair_input_from_json<K>(doc);
  regime_notice(in.setup.M, err);
  if (!points_file.empty()) {
    auto extra = points_from_json<K>(load_json(points_file), in.setup.ambient_vars(), in.field);
    in.points.insert(in.points.end(), extra.begin(), extra.end());
  }
  MembershipReport<K> rep;
  if (enumerate) {
    if constexpr (std::is_same_v<K, Fp>) {
      rep = membership_report_enumerated(in.setup, in.f1, in.f2, cfg);
    } else {
      throw std::invalid_argument("point enumeration needs a prime field");
    }
  } else {
    rep = membership_report(in.setup, in.f1, in.f2, in.points, cfg);
  }
  if (format == "structured") {
    write_document(out, membership_to_json(rep));
  } else {
    out << "check  M=" << in.setup.M << " d1=" << in.setup.d1 << " d2=" << in.setup.d2
        << "  field "
        << (in.field.is_rationals() ? std::string("Q")
                                    : "F_" + std::to_string(in.field.characteristic))
        << "\n";
    for (const auto& g : rep.global) print_report_text(g, "  global ", out);
    for (size_t i = 0; i < rep.points.size(); ++i) {
      out << "  point " << point_to_text(rep.points[i]) << ": "
          << point_class_name(rep.classes[i]) << "\n";
      for (const auto& r : rep.locals[i]) print_report_text(r, "    ", out);
    }
    if (rep.points_truncated) out << "  (point list truncated)\n";
    if (rep.points.empty()) out << "  (no points checked)\n";
    out << "overall: " << verdict_name(rep.overall) << "\n";
  }
  return verdict_to_exit(rep.overall);
}

// ---------------------------------------------------------------------------
// sample / stats
// ---------------------------------------------------------------------------

int run_sample(const SampleSpec& spec, const std::string& format, std::ostream& out) {
  FieldSpec field = FieldSpec::prime_field(spec.p);
  AmbientSetup setup = spec.setup();
  Json pairs = Json::array();
  for (uint64_t i = 0; i < spec.count; ++i) {
    SampledPair sp = sample_pair(spec, i);
    Json doc = pair_to_json(field, setup, sp.f1, sp.f2);
    doc["seed"] = sp.seed;
    if (format == "text") {
      out << "pair " << i << "  (seed " << sp.seed << ")\n";
      out << "  f1 = " << poly_to_text(sp.f1) << "\n";
      out << "  f2 = " << poly_to_text(sp.f2) << "\n";
    }
    pairs.push_back(doc);
  }
  if (format == "structured") {
    if (spec.count == 1) {
      write_document(out, pairs[0]);
    } else {
      Json j;
      j["schema"] = kSchemaVersion;
      j["kind"] = "sample-set";
      j["spec"] = sample_spec_to_json(spec);
      j["pairs"] = pairs;
      write_document(out, j);
    }
  }
  return kExitPass;
}

int run_stats(const SampleSpec& spec, const StatsOptions& options, const std::string& format,
              std::ostream& out, std::ostream& err) {
  regime_notice(spec.M, err);
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep = empirical_stats(spec, options);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (format == "structured") {
    write_document(out, run_report_to_json(rep));
  } else {
    out << "run report  " << rep.pairs.size() << " pairs  M=" << spec.M << " d1=" << spec.d1
        << " d2=" << spec.d2 << " p=" << spec.p << "  seed " << spec.seed << "  mode "
        << point_mode_name(rep.mode) << "  points/pair " << rep.points_per_pair << "\n";
    for (const auto& [tag, t] : rep.tallies) {
      out << "  " << tag_name(tag) << ": " << t.pass << " pass";
      if (t.fail) out << ", " << t.fail << " fail";
      if (t.partial) out << ", " << t.partial << " partial";
      if (t.budget) out << ", " << t.budget << " budget-exceeded";
      out << "\n";
    }
    out << "pairs: " << rep.pairs_passed << " passed, " << rep.pairs_failed << " failed, "
        << rep.pairs_partial << " partial, " << rep.pairs_budget << " budget-exceeded\n";
    if (rep.failure_seeds.empty()) {
      out << "failure seeds: none\n";
    } else {
      out << "failure seeds:";
      for (uint64_t s : rep.failure_seeds) out << " " << s;
      out << "\n";
    }
    out << "overall: " << verdict_name(rep.overall) << "\n";
  }
  err << "elapsed " << ms << " ms\n";
  return verdict_to_exit(rep.overall);
}

// ---------------------------------------------------------------------------
// gb
// ---------------------------------------------------------------------------

int run_gb(const Json& doc, const CheckConfig& cfg, bool with_singular, const std::string& format,
           std::ostream& out, std::ostream& err) {
  FieldSpec field = document_field(doc);
  if (field.is_rationals())
    throw std::invalid_argument("the basis debugger works over prime fields");
  PairInput<Fp> in = pair_input_from_json<Fp>(doc);
  std::vector<Poly<Fp>> gens = {in.f1, in.f2};
  if (with_singular)
    gens = singular_locus_ideal(gens, in.setup.ambient_vars(), 2);
  GrobnerResult res = groebner_basis(gens, cfg.gb);
  long dim = -2;
  if (res.status == GbStatus::complete) {
    DimensionResult dr = projective_dimension(gens, in.setup.ambient_vars(), cfg.gb);
    if (dr.status == GbStatus::complete) dim = dr.dim;
  }
  if (format == "structured") {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = "groebner";
    j["generators"] = gens.size();
    j["status"] = res.status == GbStatus::complete ? "complete" : "budget-exceeded";
    j["basis_size"] = res.basis.size();
    j["spairs_reduced"] = res.spairs_reduced;
    j["reduction_steps"] = res.reduction_steps;
    if (dim != -2) j["projective_dimension"] = dim;
    Json lead = Json::array();
    for (const auto& g : res.basis) {
      Json exps = Json::array();
      for (size_t i = 0; i < g.nvars(); ++i) exps.push_back(g.leading_monomial().e[i]);
      lead.push_back(exps);
    }
    j["leading_exponents"] = lead;
    write_document(out, j);
  } else {
    out << "groebner basis of " << gens.size() << " generators in " << in.setup.ambient_vars()
        << " vars over F_" << field.characteristic << "\n";
    out << "status " << (res.status == GbStatus::complete ? "complete" : "budget-exceeded")
        << ", " << res.basis.size() << " elements, " << res.spairs_reduced << " s-pairs, "
        << res.reduction_steps << " reduction steps\n";
    if (dim != -2)
      out << "projective dimension "
          << (dim == -1 ? std::string("empty") : std::to_string(dim)) << "\n";
    out << "leading terms:";
    for (const auto& g : res.basis) {
      Poly<Fp> lt(g.nvars());
      lt.add_term(g.leading_monomial(), g.leading_coeff());
      out << " " << poly_to_text(lt);
    }
    out << "\n";
  }
  if (res.status != GbStatus::complete) {
    err << "s-pair budget exceeded\n";
    return kExitBudget;
  }
  return kExitPass;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"verifier and bound ledger for codimension-2 complete intersections"};
  app.require_subcommand(1);

  // bounds
  BoundsOpts bo;
  auto* bounds = app.add_subcommand("bounds", "condition codimension ledger and target check");
  bounds->add_option("--M", bo.M, "dimension of V");
  bounds->add_option("--d1", bo.d1, "first degree");
  bounds->add_option("--d2", bo.d2, "second degree");
  bounds->add_flag("--sweep", bo.sweep, "sweep all admissible pairs for M = 13..max");
  bounds->add_option("--max", bo.sweep_max, "sweep upper bound for M")->default_val(60);
  bounds->add_flag("--exploratory", bo.exploratory, "relax the M floor to 11");
  bounds->add_option("--format", bo.format)->check(CLI::IsMember({"text", "structured"}));

  // chains
  long cd1 = 0, cd2 = 0;
  std::string cvariant = "all", cformat = "text";
  auto* chains = app.add_subcommand("chains", "hypertangent product chains and thresholds");
  chains->add_option("--d1", cd1, "first degree")->required();
  chains->add_option("--d2", cd2, "second degree")->required();
  chains->add_option("--variant", cvariant)
      ->check(CLI::IsMember({"all", "smooth", "quad-i", "quad-ii", "biquad"}));
  chains->add_option("--format", cformat)->check(CLI::IsMember({"text", "structured"}));

  // inequalities
  long id1 = 6, id2 = 9, imax_den = 64;
  std::string iformat = "text";
  auto* ineq = app.add_subcommand("inequalities", "exact grid sweeps and exclusion margins");
  ineq->add_option("--d1", id1, "first degree for the margin set");
  ineq->add_option("--d2", id2, "second degree for the margin set");
  ineq->add_option("--max-den", imax_den, "grid denominator bound");
  ineq->add_option("--format", iformat)->check(CLI::IsMember({"text", "structured"}));

  // classify
  std::string clinput, clpoints, clformat = "text";
  uint64_t clseed = 1;
  auto* classify = app.add_subcommand("classify", "classify points of V as smooth/quadratic/biquadratic");
  classify->add_option("--input", clinput, "pair document")->required();
  classify->add_option("--points-file", clpoints, "extra points document");
  classify->add_option("--seed", clseed, "seed for pencil sampling");
  classify->add_option("--format", clformat)->check(CLI::IsMember({"text", "structured"}));

  // check
  std::string ckinput, ckpoints, ckformat = "text";
  bool ckenum = false;
  uint64_t ckbudget = 1000000, ckseed = 1, cklimit = 2000000;
  auto* check = app.add_subcommand("check", "run the regularity conditions on a pair");
  check->add_option("--input", ckinput, "pair document")->required();
  check->add_option("--points-file", ckpoints, "extra points document");
  check->add_flag("--enumerate", ckenum, "enumerate all rational points of V");
  check->add_option("--budget", ckbudget, "s-pair budget per basis run");
  check->add_option("--limit", cklimit, "projective enumeration limit");
  check->add_option("--seed", ckseed, "seed for randomized subroutines");
  check->add_option("--format", ckformat)->check(CLI::IsMember({"text", "structured"}));

  // sample
  SampleSpec sspec;
  std::string sdensity = "1", sformat = "text";
  auto* sample = app.add_subcommand("sample", "draw random pairs over a prime field");
  sample->add_option("--M", sspec.M, "dimension of V");
  sample->add_option("--d1", sspec.d1, "first degree");
  sample->add_option("--d2", sspec.d2, "second degree");
  sample->add_option("--p", sspec.p, "field characteristic");
  sample->add_option("--seed", sspec.seed, "run seed");
  sample->add_option("--count", sspec.count, "number of pairs");
  sample->add_option("--density", sdensity, "monomial keep fraction n or n/m");
  sample->add_option("--format", sformat)->check(CLI::IsMember({"text", "structured"}));

  // stats
  SampleSpec tspec;
  StatsOptions topts;
  std::string tdensity = "1", tmode = "auto", tformat = "text";
  uint64_t tbudget = 1000000;
  auto* stats = app.add_subcommand("stats", "empirical condition statistics over a sample stream");
  stats->add_option("--M", tspec.M, "dimension of V");
  stats->add_option("--d1", tspec.d1, "first degree");
  stats->add_option("--d2", tspec.d2, "second degree");
  stats->add_option("--p", tspec.p, "field characteristic");
  stats->add_option("--seed", tspec.seed, "run seed");
  stats->add_option("--count", tspec.count, "number of pairs");
  stats->add_option("--density", tdensity, "monomial keep fraction n or n/m");
  stats->add_option("--points", topts.points_per_pair, "points checked per pair");
  stats->add_option("--mode", tmode)->check(CLI::IsMember({"auto", "enumerate", "sample"}));
  stats->add_option("--threads", topts.threads, "worker threads (0 = hardware)");
  stats->add_option("--budget", tbudget, "s-pair budget per basis run");
  stats->add_option("--format", tformat)->check(CLI::IsMember({"text", "structured"}));

  // gb
  std::string ginput, gformat = "text";
  bool gsingular = false;
  uint64_t gbudget = 1000000;
  auto* gb = app.add_subcommand("gb", "debug: basis, size and dimension of the pair ideal");
  gb->add_option("--input", ginput, "pair document")->required();
  gb->add_flag("--singular", gsingular, "use the singular-locus ideal instead");
  gb->add_option("--budget", gbudget, "s-pair budget");
  gb->add_option("--format", gformat)->check(CLI::IsMember({"text", "structured"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (app.got_subcommand(bounds)) return run_bounds(bo, out, err);
    if (app.got_subcommand(chains)) return run_chains(cd1, cd2, cvariant, cformat, out, err);
    if (app.got_subcommand(ineq)) return run_inequalities(id1, id2, imax_den, iformat, out, err);
    if (app.got_subcommand(classify)) {
      Json doc = load_json(clinput);
      CheckConfig cfg;
      cfg.seed = clseed;
      if (document_field(doc).is_rationals())
        return run_classify_typed<BigRat>(doc, clpoints, cfg, clformat, out, err);
      return run_classify_typed<Fp>(doc, clpoints, cfg, clformat, out, err);
    }
    if (app.got_subcommand(check)) {
      Json doc = load_json(ckinput);
      CheckConfig cfg;
      cfg.gb.spair_budget = ckbudget;
      cfg.enumeration_limit = cklimit;
      cfg.seed = ckseed;
      if (document_field(doc).is_rationals())
        return run_check_typed<BigRat>(doc, ckpoints, ckenum, cfg, ckformat, out, err);
      return run_check_typed<Fp>(doc, ckpoints, ckenum, cfg, ckformat, out, err);
    }
    if (app.got_subcommand(sample)) {
      parse_density(sdensity, sspec);
      sspec.validate();
      return run_sample(sspec, sformat, out);
    }
    if (app.got_subcommand(stats)) {
      parse_density(tdensity, tspec);
      tspec.validate();
      topts.check.gb.spair_budget = tbudget;
      topts.mode = tmode == "enumerate" ? PointMode::enumerate_all
                   : tmode == "sample"  ? PointMode::plane_sample
                                        : PointMode::automatic;
      return run_stats(tspec, topts, tformat, out, err);
    }
    if (app.got_subcommand(gb)) {
      Json doc = load_json(ginput);
      CheckConfig cfg;
      cfg.gb.spair_budget = gbudget;
      return run_gb(doc, cfg, gsingular, gformat, out, err);
    }
  } catch (const Json::exception& e) {
    err << "error: malformed document: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  err << "error: no subcommand\n";
  return kExitInput;
}

}  // namespace ci2
