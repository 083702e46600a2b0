#pragma once

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "ci2/bounds.hpp"
#include "ci2/conditions.hpp"
#include "ci2/expansion.hpp"
#include "ci2/field.hpp"
#include "ci2/harness.hpp"
#include "ci2/numeric.hpp"
#include "ci2/poly.hpp"
#include "ci2/singular.hpp"

namespace ci2 {

// Structured documents are JSON with alphabetically sorted keys (nlohmann's
// default map container), so every serialization is byte-deterministic.
using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// scalars
// ---------------------------------------------------------------------------

inline std::string coeff_to_string(const Fp& c) { return std::to_string(c.value()); }
inline std::string coeff_to_string(const BigRat& c) { return to_string(c); }

template <class K>
K coeff_from_string(const std::string& s, const FieldSpec& field) {
  if (std::is_same_v<K, Fp> && field.is_rationals())
    throw std::invalid_argument("prime-field coefficient requested without a characteristic");
  return FieldOps<K>::from_rational(parse_rational(s), field);
}

inline Json bigint_json(const BigInt& v) { return Json(to_string(v)); }
inline Json bigrat_json(const BigRat& v) { return Json(to_string(v)); }

// ---------------------------------------------------------------------------
// polynomials and points
// ---------------------------------------------------------------------------

// A polynomial literal is a list of [coefficient-string, exponent-vector]
// pairs, leading term first.
template <class K>
Json poly_to_json(const Poly<K>& f) {
  Json terms = Json::array();
  const auto& t = f.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    Json exps = Json::array();
    for (size_t i = 0; i < f.nvars(); ++i) exps.push_back(it->first.e[i]);
    terms.push_back(Json::array({coeff_to_string(it->second), exps}));
  }
  return terms;
}

template <class K>
Poly<K> poly_from_json(const Json& j, size_t nvars, const FieldSpec& field) {
  if (!j.is_array()) throw std::invalid_argument("polynomial literal must be an array of terms");
  Poly<K> f(nvars);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_string() || !term[1].is_array())
      throw std::invalid_argument("each term must be [coefficient-string, exponent-vector]");
    if (term[1].size() != nvars)
      throw std::invalid_argument("exponent vector length " + std::to_string(term[1].size()) +
                                  " does not match variable count " + std::to_string(nvars));
    Monomial m(nvars);
    for (size_t i = 0; i < nvars; ++i) {
      long e = term[1][i].get<long>();
      if (e < 0 || e > 10000) throw std::invalid_argument("exponent out of range");
      m.e[i] = static_cast<uint32_t>(e);
    }
    f.add_term(m, coeff_from_string<K>(term[0].get<std::string>(), field));
  }
  return f;
}

template <class K>
Json point_to_json(const std::vector<K>& pt) {
  Json out = Json::array();
  for (const auto& c : pt) out.push_back(coeff_to_string(c));
  return out;
}

template <class K>
std::vector<K> point_from_json(const Json& j, size_t nvars, const FieldSpec& field) {
  if (!j.is_array() || j.size() != nvars)
    throw std::invalid_argument("point must list exactly " + std::to_string(nvars) + " coordinates");
  std::vector<K> pt;
  pt.reserve(nvars);
  for (const auto& c : j) pt.push_back(coeff_from_string<K>(c.get<std::string>(), field));
  return pt;
}

// Human-readable form, leading term first: "3*x0^2*x1 + x2^3 + 7".
template <class K>
std::string poly_to_text(const Poly<K>& f, const std::string& var_prefix = "x",
                         size_t index_base = 0) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& t = f.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string c = coeff_to_string(it->second);
    std::string mono;
    for (size_t i = 0; i < f.nvars(); ++i) {
      uint32_t e = it->first.e[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_prefix + std::to_string(i + index_base);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += c;
    else if (c == "1")
      out += mono;
    else
      out += c + "*" + mono;
  }
  return out;
}

template <class K>
std::string point_to_text(const std::vector<K>& pt) {
  std::string out = "(";
  for (size_t i = 0; i < pt.size(); ++i) {
    if (i) out += ", ";
    out += coeff_to_string(pt[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// field, setup, pair documents
// ---------------------------------------------------------------------------

inline Json field_to_json(const FieldSpec& f) {
  Json j;
  j["characteristic"] = f.characteristic;
  return j;
}

inline FieldSpec field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("characteristic"))
    throw std::invalid_argument("field must be an object with a characteristic");
  return FieldSpec::make(j.at("characteristic").get<uint64_t>());
}

inline Json setup_to_json(const AmbientSetup& s) {
  Json j;
  j["M"] = s.M;
  j["d1"] = s.d1;
  j["d2"] = s.d2;
  return j;
}

inline AmbientSetup setup_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("setup must be an object");
  return AmbientSetup::make(j.at("M").get<long>(), j.at("d1").get<long>(), j.at("d2").get<long>());
}

template <class K>
struct PairInput {
  FieldSpec field;
  AmbientSetup setup;
  Poly<K> f1{0}, f2{0};
  std::vector<std::vector<K>> points;
};

template <class K>
Json pair_to_json(const FieldSpec& field, const AmbientSetup& setup, const Poly<K>& f1,
                  const Poly<K>& f2, const std::vector<std::vector<K>>& points = {}) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "pair";
  j["field"] = field_to_json(field);
  j["setup"] = setup_to_json(setup);
  j["f1"] = poly_to_json(f1);
  j["f2"] = poly_to_json(f2);
  if (!points.empty()) {
    Json pts = Json::array();
    for (const auto& pt : points) pts.push_back(point_to_json(pt));
    j["points"] = pts;
  }
  return j;
}

inline FieldSpec document_field(const Json& j) {
  if (!j.is_object() || !j.contains("field"))
    throw std::invalid_argument("document carries no field");
  return field_from_json(j.at("field"));
}

template <class K>
PairInput<K> pair_input_from_json(const Json& j) {
  PairInput<K> in;
  in.field = document_field(j);
  in.setup = setup_from_json(j.at("setup"));
  size_t n = in.setup.ambient_vars();
  in.f1 = poly_from_json<K>(j.at("f1"), n, in.field);
  in.f2 = poly_from_json<K>(j.at("f2"), n, in.field);
  if (j.contains("points"))
    for (const auto& pt : j.at("points")) in.points.push_back(point_from_json<K>(pt, n, in.field));
  return in;
}

template <class K>
std::vector<std::vector<K>> points_from_json(const Json& j, size_t nvars, const FieldSpec& field) {
  const Json& arr = j.is_object() && j.contains("points") ? j.at("points") : j;
  if (!arr.is_array()) throw std::invalid_argument("points document must be an array of points");
  std::vector<std::vector<K>> pts;
  for (const auto& pt : arr) pts.push_back(point_from_json<K>(pt, nvars, field));
  return pts;
}

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

inline Json work_to_json(const WorkCounters& w) {
  Json j;
  j["spairs"] = w.spairs;
  j["reduction_steps"] = w.reduction_steps;
  j["lines_sampled"] = w.lines_sampled;
  j["points_scanned"] = w.points_scanned;
  return j;
}

template <class K>
Json pencil_to_json(const PencilProfile<K>& p) {
  Json j;
  Json samples = Json::array();
  for (const auto& s : p.samples) {
    Json e;
    e["at_infinity"] = s.at_infinity;
    if (!s.at_infinity) e["lambda"] = coeff_to_string(s.lambda);
    e["rank"] = s.rank;
    samples.push_back(e);
  }
  j["samples"] = samples;
  j["min_observed"] = p.min_observed;
  j["exact"] = p.exact;
  if (p.exact) {
    j["generic_rank"] = p.generic_rank;
    j["rank_at_infinity"] = p.rank_at_infinity;
    j["min_rank"] = p.min_rank;
    Json drops = Json::array();
    for (const auto& d : p.drop_members) drops.push_back(to_string(d));
    j["drop_members"] = drops;
    j["min_at_infinity"] = p.min_at_infinity;
    j["roots_complete"] = p.roots_complete;
  }
  return j;
}

template <class K>
Json condition_report_to_json(const ConditionReport<K>& r) {
  Json j;
  j["tag"] = tag_name(r.tag);
  j["verdict"] = verdict_name(r.verdict);
  if (!r.point.empty()) j["point"] = point_to_json(r.point);
  if (r.failing_index >= 0) j["failing_index"] = r.failing_index;
  if (r.computed_dim != -2) j["computed_dim"] = r.computed_dim;
  if (r.ambient_obj_dim != -2) j["ambient_obj_dim"] = r.ambient_obj_dim;
  if (r.computed_rank >= 0) j["computed_rank"] = r.computed_rank;
  if (r.rank_threshold > 0) j["rank_threshold"] = r.rank_threshold;
  if (r.codim_threshold > 0) j["codim_threshold"] = r.codim_threshold;
  if (r.has_lambda) j["lambda"] = coeff_to_string(r.lambda);
  if (!r.witness_point.empty()) j["witness_point"] = point_to_json(r.witness_point);
  j["justification"] = r.justification;
  if (r.has_pencil) j["pencil"] = pencil_to_json(r.pencil);
  j["work"] = work_to_json(r.work);
  return j;
}

template <class K>
Json membership_to_json(const MembershipReport<K>& m) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "membership-report";
  Json global = Json::array();
  for (const auto& r : m.global) global.push_back(condition_report_to_json(r));
  j["global"] = global;
  Json pts = Json::array();
  for (const auto& pt : m.points) pts.push_back(point_to_json(pt));
  j["points"] = pts;
  Json classes = Json::array();
  for (PointClass c : m.classes) classes.push_back(point_class_name(c));
  j["classes"] = classes;
  Json locals = Json::array();
  for (const auto& reps : m.locals) {
    Json row = Json::array();
    for (const auto& r : reps) row.push_back(condition_report_to_json(r));
    locals.push_back(row);
  }
  j["locals"] = locals;
  j["points_truncated"] = m.points_truncated;
  j["overall"] = verdict_name(m.overall);
  return j;
}

inline Json sample_spec_to_json(const SampleSpec& s) {
  Json j;
  j["M"] = s.M;
  j["d1"] = s.d1;
  j["d2"] = s.d2;
  j["p"] = s.p;
  j["density_num"] = s.density_num;
  j["density_den"] = s.density_den;
  j["seed"] = s.seed;
  j["count"] = s.count;
  return j;
}

inline Json run_report_to_json(const RunReport& r) {
  Json j;
  j["schema"] = r.schema;
  j["kind"] = "run-report";
  j["spec"] = sample_spec_to_json(r.spec);
  j["mode"] = point_mode_name(r.mode);
  j["points_per_pair"] = r.points_per_pair;
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json e;
    e["index"] = p.index;
    e["seed"] = p.seed;
    e["injected"] = p.injected;
    e["enumerated"] = p.enumerated;
    e["points_complete"] = p.points_complete;
    e["report"] = membership_to_json(p.report);
    pairs.push_back(e);
  }
  j["pairs"] = pairs;
  Json tallies;
  for (const auto& [tag, t] : r.tallies) {
    Json e;
    e["pass"] = t.pass;
    e["fail"] = t.fail;
    e["partial"] = t.partial;
    e["budget"] = t.budget;
    tallies[tag_name(tag)] = e;
  }
  j["tallies"] = tallies;
  j["pairs_passed"] = r.pairs_passed;
  j["pairs_failed"] = r.pairs_failed;
  j["pairs_partial"] = r.pairs_partial;
  j["pairs_budget"] = r.pairs_budget;
  j["failure_seeds"] = r.failure_seeds;
  j["work"] = work_to_json(r.work);
  j["overall"] = verdict_name(r.overall);
  return j;
}

// ---------------------------------------------------------------------------
// bounds documents
// ---------------------------------------------------------------------------

inline Json ledger_to_json(const BoundLedger& l) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "bound-ledger";
  j["M"] = l.M;
  j["d1"] = l.d1;
  j["d2"] = l.d2;
  Json b;
  b["R0.1-irred"] = bigint_json(l.r01_irred);
  b["R0.1-rank"] = bigint_json(l.r01_rank);
  b["R0.2"] = bigint_json(l.r02);
  b["R1"] = bigint_json(l.r1);
  b["R2.1"] = bigint_json(l.r2_1);
  b["R2.2"] = bigint_json(l.r2_2);
  b["R3.1"] = bigint_json(l.r3_1);
  b["R3.2"] = bigint_json(l.r3_2);
  j["bounds"] = b;
  j["minimum"] = bigint_json(l.minimum);
  j["target"] = bigint_json(l.target);
  j["min_is_R3.1"] = l.min_is_r31;
  j["meets_target"] = l.meets_target;
  j["R0.1-irred-generic"] = bigint_json(l.r01_irred_generic);
  j["R0.2-constrained"] = bigint_json(l.r02_constrained);
  return j;
}

inline Json chain_to_json(const ChainResult& c) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "chain";
  j["variant"] = chain_variant_name(c.variant);
  j["d1"] = c.d1;
  j["d2"] = c.d2;
  Json factors = Json::array();
  for (const auto& f : c.factors) {
    Json e;
    e["i"] = f.i;
    e["doubled"] = f.doubled;
    e["value"] = bigrat_json(f.value);
    factors.push_back(e);
  }
  j["factors"] = factors;
  j["product"] = bigrat_json(c.product);
  j["closed_form"] = bigrat_json(c.closed_form);
  j["identity"] = c.identity;
  j["dominates"] = c.dominates;
  j["general_case"] = c.general_case;
  j["doubled_block_dropped"] = c.doubled_block_dropped;
  j["threshold_value"] = bigrat_json(c.threshold_value);
  j["threshold_applies"] = c.threshold_applies;
  j["threshold_holds"] = c.threshold_holds;
  j["threshold_equality"] = c.threshold_equality;
  j["consistency"] = bigrat_json(c.consistency);
  return j;
}

inline Json grid_to_json(const GridCheck& g) {
  Json j;
  j["name"] = g.name;
  j["holds"] = g.holds;
  j["worst_x"] = bigrat_json(g.worst_x);
  j["worst_value"] = bigrat_json(g.worst_value);
  j["equality_seen"] = g.equality_seen;
  j["points"] = g.points;
  return j;
}

inline Json inequality_to_json(const InequalityCheck& c) {
  Json j;
  j["name"] = c.name;
  j["lhs"] = bigrat_json(c.lhs);
  j["relation"] = c.relation;
  j["rhs"] = bigrat_json(c.rhs);
  j["holds"] = c.holds;
  j["equality"] = c.equality;
  return j;
}

inline Json method1_to_json(const Method1Table& t) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "binomial-table";
  j["regime"] = regime_name(t.regime);
  j["M"] = t.M;
  j["d1"] = t.d1;
  j["d2"] = t.d2;
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    Json row;
    row["k"] = e.k;
    row["alpha"] = e.alpha;
    row["beta"] = e.beta;
    row["value"] = bigint_json(e.value);
    entries.push_back(row);
  }
  j["entries"] = entries;
  j["minimum"] = bigint_json(t.minimum);
  j["tail_minimum"] = bigint_json(t.tail_minimum);
  j["claimed"] = bigint_json(t.claimed);
  j["claim_holds"] = t.claim_holds;
  j["claim_exact"] = t.claim_exact;
  return j;
}

inline Json omega_to_json(const OmegaReport& o) {
  Json j;
  j["checked"] = o.checked;
  j["omega1_matches_theta"] = o.omega1_matches_theta;
  j["omega2_links"] = o.omega2_links;
  j["omega3_matches_theta"] = o.omega3_matches_theta;
  j["omega4_link"] = o.omega4_link;
  j["omega4_printed_differs"] = o.omega4_printed_differs;
  return j;
}

inline Json prop35_to_json(const Prop35Sweep& s) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "theta-sweep";
  j["M"] = s.M;
  j["d1"] = s.d1;
  j["d2"] = s.d2;
  j["target"] = bigint_json(s.target);
  j["all_hold"] = s.all_hold;
  j["first_failure_b"] = s.first_failure_b;
  j["theta2_identity"] = s.theta2_identity;
  j["omega3_zero_identity"] = s.omega3_zero_identity;
  j["theta_b0"] = bigint_json(s.theta_b0);
  j["b0_holds"] = s.b0_holds;
  j["theta_m4"] = bigint_json(s.theta_m4);
  j["m4_stated"] = bigrat_json(s.m4_stated);
  j["m4_holds"] = s.m4_holds;
  j["plane_value"] = bigint_json(s.plane_value);
  j["plane_stated"] = bigrat_json(s.plane_stated);
  j["plane_holds"] = s.plane_holds;
  j["sing_b0"] = bigint_json(s.sing_b0);
  j["sing_b0_stated"] = bigrat_json(s.sing_b0_stated);
  j["sing_b0_holds"] = s.sing_b0_holds;
  j["sing_plane_value"] = bigint_json(s.sing_plane_value);
  j["sing_plane_holds"] = s.sing_plane_holds;
  j["sing_dominates_smooth_form"] = s.sing_dominates_smooth_form;
  j["gamma_shape"] = s.gamma_shape;
  j["omegas"] = omega_to_json(s.omegas);
  j["ok"] = s.ok;
  return j;
}

inline void write_document(std::ostream& os, const Json& j) { os << j.dump(2) << "\n"; }

inline std::string document_string(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ci2
