#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "ci2/field.hpp"
#include "ci2/poly.hpp"

namespace ci2 {

// Exponent vector packed one byte per variable: vars 0..7 in w0, 8..15 in w1,
// variable i at byte i. Total degree cached. Exponents are capped at 120 so
// the SWAR byte tricks below stay borrow/carry safe.
struct PackedExp {
  uint32_t deg = 0;
  uint64_t w0 = 0, w1 = 0;

  static constexpr uint32_t kMaxExp = 120;
  static constexpr uint64_t kHigh = 0x8080808080808080ULL;
  static constexpr uint64_t kPad = 0x0707070707070707ULL;  // 127 - kMaxExp per byte

  static PackedExp from_monomial(const Monomial& m) {
    if (m.nvars() > 16)
      throw std::invalid_argument("packed engine supports at most 16 variables");
    PackedExp r;
    for (size_t i = 0; i < m.nvars(); ++i) {
      if (m.e[i] > kMaxExp) throw std::overflow_error("exponent exceeds engine limit 120");
      if (i < 8)
        r.w0 |= static_cast<uint64_t>(m.e[i]) << (8 * i);
      else
        r.w1 |= static_cast<uint64_t>(m.e[i]) << (8 * (i - 8));
      r.deg += m.e[i];
    }
    return r;
  }

  Monomial to_monomial(size_t nvars) const {
    Monomial m(nvars);
    for (size_t i = 0; i < nvars; ++i) m.e[i] = get(i);
    return m;
  }

  uint32_t get(size_t i) const {
    uint64_t w = i < 8 ? w0 : w1;
    return static_cast<uint32_t>((w >> (8 * (i & 7))) & 0xFF);
  }

  bool is_one() const { return deg == 0; }

  bool operator==(const PackedExp& o) const {
    return deg == o.deg && w0 == o.w0 && w1 == o.w1;
  }
  bool operator!=(const PackedExp& o) const { return !(*this == o); }

  PackedExp times(const PackedExp& o) const {
    PackedExp r;
    r.deg = deg + o.deg;
    r.w0 = w0 + o.w0;
    r.w1 = w1 + o.w1;
    // any byte above 120 sets its high bit after padding by 7
    if ((((r.w0 + kPad) | (r.w1 + kPad)) & kHigh) != 0)
      throw std::overflow_error("exponent exceeds engine limit 120 in product");
    return r;
  }

  // per-byte <=; bytes <= 127 keep the borrow pattern honest
  bool divides(const PackedExp& o) const {
    if (deg > o.deg) return false;
    return (((o.w0 - w0) | (o.w1 - w1)) & kHigh) == 0;
  }

  PackedExp quotient_of(const PackedExp& o) const {  // o / this
    PackedExp r;
    r.deg = o.deg - deg;
    r.w0 = o.w0 - w0;
    r.w1 = o.w1 - w1;
    return r;
  }

  PackedExp lcm_with(const PackedExp& o) const {
    PackedExp r;
    for (size_t i = 0; i < 16; ++i) {
      uint32_t v = std::max(get(i), o.get(i));
      if (i < 8)
        r.w0 |= static_cast<uint64_t>(v) << (8 * i);
      else
        r.w1 |= static_cast<uint64_t>(v) << (8 * (i - 8));
      r.deg += v;
    }
    return r;
  }

  bool coprime_with(const PackedExp& o) const {
    for (size_t i = 0; i < 16; ++i)
      if (get(i) != 0 && o.get(i) != 0) return false;
    return true;
  }

  uint16_t support_mask() const {
    uint16_t m = 0;
    for (size_t i = 0; i < 16; ++i)
      if (get(i) != 0) m |= static_cast<uint16_t>(1u << i);
    return m;
  }
};

// grevlex, via one degree compare and one 128-bit unsigned compare: with the
// last variable in the most significant byte, the most significant differing
// byte is the largest differing variable, and smaller there means greater.
inline bool packed_greater(const PackedExp& a, const PackedExp& b) {
  if (a.deg != b.deg) return a.deg > b.deg;
  if (a.w1 != b.w1) return a.w1 < b.w1;
  return a.w0 < b.w0;
}
inline bool packed_less(const PackedExp& a, const PackedExp& b) { return packed_greater(b, a); }

struct ETerm {
  PackedExp m;
  uint32_t c;
};
using EPoly = std::vector<ETerm>;  // strictly descending in grevlex, no zero coeffs

enum class GbStatus { complete, budget_exceeded };

struct GrobnerOptions {
  uint64_t spair_budget = 1000000;
  bool tail_reduce = true;  // false: minimal basis only (same leading terms, cheaper)
  // Stop as soon as the finalized leading terms cover a whole degree, which
  // certifies an empty projective zero set. Sound because homogeneous normal
  // selection processes lcm degrees in non-decreasing order, so every leading
  // term below the current frontier is final. The basis is then a certificate
  // prefix, not a full Groebner basis.
  bool stop_when_irrelevant = false;
};

struct GrobnerResult {
  GbStatus status = GbStatus::complete;
  bool irrelevant_certified = false;  // leading terms cover a whole degree
  std::vector<Poly<Fp>> basis;     // reduced basis when complete, ascending leading monomials
  uint64_t spairs_reduced = 0;
  uint64_t reductions_to_zero = 0;
  uint64_t reduction_steps = 0;

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(basis.size());
    for (const auto& g : basis) out.push_back(g.leading_monomial());
    return out;
  }
};

namespace gb {

class Engine {
 public:
  Engine(uint32_t p, size_t nvars) : p_(p), nvars_(nvars) {
    if (nvars > 16) throw std::invalid_argument("packed engine supports at most 16 variables");
    // nm_count_[k][d] = #monomials of degree d in k variables, saturated; the
    // dense path only reads entries bounded by an already-capped total count
    const size_t maxd = 16 * PackedExp::kMaxExp + 1;
    constexpr uint64_t sat = ~uint64_t{0} / 2;
    nm_count_.assign(nvars_ + 1, std::vector<uint64_t>(maxd + 1, 0));
    nm_count_[0][0] = 1;
    for (size_t k = 1; k <= nvars_; ++k) {
      nm_count_[k][0] = 1;
      for (size_t d = 1; d <= maxd; ++d) {
        uint64_t s = nm_count_[k - 1][d] + nm_count_[k][d - 1];
        nm_count_[k][d] = s < nm_count_[k][d - 1] || s > sat ? sat : s;
      }
    }
    barrett_ = ~uint64_t{0} / p_;
  }

  // floor-quotient estimate off by at most 2; two corrections settle a < 2^63
  uint32_t mod_p(uint64_t a) const {
    uint64_t q = static_cast<uint64_t>((static_cast<unsigned __int128>(a) * barrett_) >> 64);
    uint64_t r = a - q * p_;
    if (r >= p_) r -= p_;
    if (r >= p_) r -= p_;
    return static_cast<uint32_t>(r);
  }

  uint32_t p() const { return p_; }
  size_t nvars() const { return nvars_; }

  EPoly convert(const Poly<Fp>& f) const {
    EPoly r;
    r.reserve(f.term_count());
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
      r.push_back({PackedExp::from_monomial(it->first), it->second.value()});
    return r;
  }

  Poly<Fp> convert_back(const EPoly& f) const {
    Poly<Fp> r(nvars_);
    for (const ETerm& t : f) r.add_term(t.m.to_monomial(nvars_), Fp(t.c, p_));
    return r;
  }

  void make_monic(EPoly& f) const {
    if (f.empty() || f[0].c == 1) return;
    uint64_t inv = Fp(f[0].c, p_).inverse().value();
    for (ETerm& t : f) t.c = static_cast<uint32_t>(t.c * inv % p_);
  }

  // Division with remainder against the monic reducers G; skip omits one
  // index. Homogeneous input stays in its own degree, which admits a dense
  // single-sweep pass over the ranked monomials of that degree; anything else
  // falls back to the heap variant.
  EPoly normal_form(const EPoly& f, const std::vector<EPoly>& G, uint64_t& steps,
                    size_t skip = static_cast<size_t>(-1)) {
    if (f.empty()) return f;
    if (dense_enabled_ && f[0].m.deg == f.back().m.deg &&
        degree_monomial_count(f[0].m.deg) <= kDenseCap) {
      bool all_homogeneous = true;
      for (const auto& g : G)
        if (!g.empty() && g[0].m.deg != g.back().m.deg) {
          all_homogeneous = false;
          break;
        }
      if (all_homogeneous) return normal_form_dense(f, G, steps, skip);
    }
    return normal_form_heap(f, G, steps, skip);
  }

  void set_dense_enabled(bool on) { dense_enabled_ = on; }

  // true when every monomial of degree d is divisible by a leading monomial;
  // oversized degrees are never tested and report false
  bool leading_covers_degree(const std::vector<EPoly>& G, uint32_t d) {
    if (degree_monomial_count(d) > kDenseCap) return false;
    for (const PackedExp& m : degree_monomials(d)) {
      bool covered = false;
      for (const auto& g : G)
        if (!g.empty() && g[0].m.divides(m)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  }

  // heap division: pop the greatest pending monomial, coalesce duplicates,
  // emit if no leading monomial in G divides it, otherwise push the tail of
  // the first dividing reducer. Reducers must be monic.
  EPoly normal_form_heap(const EPoly& f, const std::vector<EPoly>& G, uint64_t& steps,
                         size_t skip = static_cast<size_t>(-1)) const {
    struct Less {
      bool operator()(const ETerm& a, const ETerm& b) const { return packed_less(a.m, b.m); }
    };
    std::priority_queue<ETerm, std::vector<ETerm>, Less> heap(Less{}, f);
    EPoly r;
    while (!heap.empty()) {
      PackedExp m = heap.top().m;
      uint64_t c = heap.top().c;
      heap.pop();
      while (!heap.empty() && heap.top().m == m) {
        c += heap.top().c;
        heap.pop();
      }
      c %= p_;
      if (c == 0) continue;
      const EPoly* g = nullptr;
      for (size_t i = 0; i < G.size(); ++i) {
        if (i == skip || G[i].empty()) continue;
        if (G[i][0].m.divides(m)) {
          g = &G[i];
          break;
        }
      }
      if (!g) {
        r.push_back({m, static_cast<uint32_t>(c)});
        continue;
      }
      ++steps;
      PackedExp q = (*g)[0].m.quotient_of(m);
      for (size_t k = 1; k < g->size(); ++k) {
        uint32_t nc = static_cast<uint32_t>(static_cast<uint64_t>(p_ - (*g)[k].c) * c % p_);
        heap.push({(*g)[k].m.times(q), nc});
      }
    }
    return r;
  }

  // s-polynomial of two monic polynomials
  EPoly spoly(const EPoly& f, const EPoly& g) const {
    PackedExp l = f[0].m.lcm_with(g[0].m);
    PackedExp u = f[0].m.quotient_of(l), v = g[0].m.quotient_of(l);
    EPoly a = shifted(f, u), b = shifted(g, v);
    return subtract(a, b);
  }

 private:
  static constexpr uint64_t kDenseCap = 500000;

  uint64_t degree_monomial_count(uint32_t d) const {
    return d < nm_count_[nvars_].size() ? nm_count_[nvars_][d] : kDenseCap + 1;
  }

  // all monomials of total degree d, grevlex descending, cached per degree
  const std::vector<PackedExp>& degree_monomials(uint32_t d) {
    auto it = mons_cache_.find(d);
    if (it != mons_cache_.end()) return it->second;
    std::vector<PackedExp> mons;
    Monomial cur(nvars_);
    auto rec = [&](auto&& self, size_t i, uint32_t rem) -> void {
      if (i + 1 == nvars_) {
        cur.e[i] = rem;
        mons.push_back(PackedExp::from_monomial(cur));
        cur.e[i] = 0;
        return;
      }
      for (uint32_t k = 0; k <= rem; ++k) {
        cur.e[i] = k;
        self(self, i + 1, rem - k);
      }
      cur.e[i] = 0;
    };
    if (nvars_ > 0) rec(rec, 0, d);
    std::sort(mons.begin(), mons.end(), packed_greater);
    return mons_cache_.emplace(d, std::move(mons)).first->second;
  }

  // Descending-rank position of m among the monomials of its degree: group
  // by the exponent of the most significant (last) variable, where a smaller
  // exponent sorts greater, then recurse on the remaining variables.
  size_t dense_rank(const PackedExp& m) const {
    size_t rank = 0;
    uint32_t rem = m.deg;
    for (size_t j = nvars_ - 1; j > 0; --j) {
      uint32_t e = m.get(j);
      for (uint32_t t = 0; t < e; ++t) rank += static_cast<size_t>(nm_count_[j][rem - t]);
      rem -= e;
    }
    return rank;
  }

  // One descending sweep over the degree-D coefficient vector: each position
  // is either emitted or eliminated exactly once, and eliminations only touch
  // strictly smaller monomials, so no position is ever revisited.
  EPoly normal_form_dense(const EPoly& f, const std::vector<EPoly>& G, uint64_t& steps,
                          size_t skip) {
    const auto& mons = degree_monomials(f[0].m.deg);
    std::vector<PackedExp> lms;  // contiguous leading monomials for the divisor scan
    std::vector<const EPoly*> owners;
    lms.reserve(G.size());
    owners.reserve(G.size());
    for (size_t k = 0; k < G.size(); ++k) {
      if (k == skip || G[k].empty()) continue;
      lms.push_back(G[k][0].m);
      owners.push_back(&G[k]);
    }
    std::vector<uint32_t> v(mons.size(), 0);
    for (const ETerm& t : f) {
      size_t idx = dense_rank(t.m);
      assert(mons[idx] == t.m);
      v[idx] = t.c;
    }
    EPoly r;
    for (size_t i = 0; i < v.size(); ++i) {
      uint32_t c = v[i];
      if (c == 0) continue;
      const PackedExp& m = mons[i];
      const EPoly* g = nullptr;
      for (size_t k = 0; k < lms.size(); ++k)
        if (lms[k].divides(m)) {
          g = owners[k];
          break;
        }
      if (!g) {
        r.push_back({m, c});
        continue;
      }
      ++steps;
      PackedExp q = (*g)[0].m.quotient_of(m);
      for (size_t k = 1; k < g->size(); ++k) {
        size_t idx = dense_rank((*g)[k].m.times(q));
        assert(mons[idx] == (*g)[k].m.times(q));
        v[idx] = mod_p(v[idx] + static_cast<uint64_t>(c) * (p_ - (*g)[k].c));
      }
    }
    return r;
  }

  EPoly shifted(const EPoly& f, const PackedExp& q) const {
    EPoly r;
    r.reserve(f.size());
    for (const ETerm& t : f) r.push_back({t.m.times(q), t.c});
    return r;
  }

  EPoly subtract(const EPoly& a, const EPoly& b) const {
    EPoly r;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && packed_greater(a[i].m, b[j].m))) {
        r.push_back(a[i++]);
      } else if (i == a.size() || packed_greater(b[j].m, a[i].m)) {
        r.push_back({b[j].m, static_cast<uint32_t>(p_ - b[j].c)});
        ++j;
      } else {
        uint64_t c = (static_cast<uint64_t>(a[i].c) + p_ - b[j].c) % p_;
        if (c != 0) r.push_back({a[i].m, static_cast<uint32_t>(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  uint32_t p_;
  size_t nvars_;
  uint64_t barrett_ = 0;
  bool dense_enabled_ = true;
  std::vector<std::vector<uint64_t>> nm_count_;
  std::map<uint32_t, std::vector<PackedExp>> mons_cache_;
};

struct Pair {
  uint32_t i, j;
  PackedExp l;
};

// pair update on adding G[t]: filter the new pairs by strict lcm divisibility,
// keep one representative per lcm value, drop coprime survivors, then prune
// old pairs whose lcm is properly refined through the new leading monomial
inline void update_pairs(std::vector<Pair>& P, const std::vector<EPoly>& G, uint32_t t) {
  const PackedExp& T = G[t][0].m;
  std::vector<Pair> D;
  D.reserve(t);
  for (uint32_t i = 0; i < t; ++i)
    if (!G[i].empty()) D.push_back({i, t, G[i][0].m.lcm_with(T)});

  std::vector<char> keep(D.size(), 1);
  for (size_t a = 0; a < D.size(); ++a) {
    for (size_t b = 0; b < D.size(); ++b) {
      if (a == b) continue;
      if (D[b].l.divides(D[a].l) && D[b].l != D[a].l) {
        keep[a] = 0;
        break;
      }
    }
  }
  for (size_t a = 0; a < D.size(); ++a) {
    if (!keep[a]) continue;
    for (size_t b = 0; b < a; ++b)
      if (keep[b] && D[b].l == D[a].l) {
        keep[a] = 0;
        break;
      }
  }
  for (size_t a = 0; a < D.size(); ++a)
    if (keep[a] && G[D[a].i][0].m.coprime_with(T)) keep[a] = 0;

  std::vector<Pair> out;
  out.reserve(P.size() + D.size());
  for (const Pair& pr : P) {
    if (T.divides(pr.l) && G[pr.i][0].m.lcm_with(T) != pr.l && G[pr.j][0].m.lcm_with(T) != pr.l)
      continue;
    out.push_back(pr);
  }
  for (size_t a = 0; a < D.size(); ++a)
    if (keep[a]) out.push_back(D[a]);
  P = std::move(out);
}

// normal selection: lowest lcm degree, then grevlex-smallest lcm, then indices
inline size_t select_pair(const std::vector<Pair>& P) {
  size_t best = 0;
  for (size_t k = 1; k < P.size(); ++k) {
    const Pair &a = P[k], &b = P[best];
    if (a.l.deg != b.l.deg) {
      if (a.l.deg < b.l.deg) best = k;
    } else if (a.l != b.l) {
      if (packed_less(a.l, b.l)) best = k;
    } else if (a.i != b.i) {
      if (a.i < b.i) best = k;
    } else if (a.j < b.j) {
      best = k;
    }
  }
  return best;
}

}  // namespace gb

namespace detail {

inline void buchberger_add(gb::Engine& eng, std::vector<EPoly>& G, std::vector<gb::Pair>& P,
                           EPoly f) {
  eng.make_monic(f);
  G.push_back(std::move(f));
  gb::update_pairs(P, G, static_cast<uint32_t>(G.size() - 1));
}

inline GbStatus buchberger_run(gb::Engine& eng, std::vector<EPoly>& G, std::vector<gb::Pair>& P,
                               const GrobnerOptions& opt, uint64_t& spairs, uint64_t& zeroes,
                               uint64_t& steps, bool* irrelevant = nullptr) {
  uint32_t frontier = 0;  // all leading terms of strictly smaller degree are final
  while (!P.empty()) {
    if (spairs >= opt.spair_budget) return GbStatus::budget_exceeded;
    size_t k = gb::select_pair(P);
    gb::Pair pr = P[k];
    if (irrelevant && opt.stop_when_irrelevant && pr.l.deg > frontier) {
      if (frontier > 0 && eng.leading_covers_degree(G, frontier)) {
        *irrelevant = true;
        return GbStatus::complete;
      }
      frontier = pr.l.deg;
    }
    P.erase(P.begin() + static_cast<long>(k));
    EPoly s = eng.spoly(G[pr.i], G[pr.j]);
    EPoly h = eng.normal_form(s, G, steps);
    ++spairs;
    if (h.empty())
      ++zeroes;
    else
      buchberger_add(eng, G, P, std::move(h));
  }
  return GbStatus::complete;
}

// minimal then reduced: drop dominated leading monomials, tail-reduce each
// survivor against the others, sort ascending. Tail reduction is skipped for
// callers that only consume leading terms.
inline std::vector<EPoly> reduce_basis(gb::Engine& eng, std::vector<EPoly> G, uint64_t& steps,
                                       bool tail_reduce) {
  std::sort(G.begin(), G.end(),
            [](const EPoly& a, const EPoly& b) { return packed_less(a[0].m, b[0].m); });
  std::vector<EPoly> kept;
  for (EPoly& g : G) {
    bool dominated = false;
    for (const EPoly& h : kept)
      if (h[0].m.divides(g[0].m)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(std::move(g));
  }
  if (tail_reduce) {
    for (size_t i = 0; i < kept.size(); ++i) {
      EPoly r = eng.normal_form(kept[i], kept, steps, i);
      kept[i] = std::move(r);
    }
    std::sort(kept.begin(), kept.end(),
              [](const EPoly& a, const EPoly& b) { return packed_less(a[0].m, b[0].m); });
  }
  return kept;
}

}  // namespace detail

inline GrobnerResult groebner_basis(const std::vector<Poly<Fp>>& gens,
                                    GrobnerOptions opt = {}) {
  GrobnerResult res;
  uint32_t p = 0;
  size_t nvars = 0;
  bool any = false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    p = g.leading_coeff().modulus();
    nvars = g.nvars();
    any = true;
    break;
  }
  if (!any) return res;  // zero ideal: empty basis, complete

  gb::Engine eng(p, nvars);
  std::vector<EPoly> G;
  std::vector<gb::Pair> P;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.nvars() != nvars || g.leading_coeff().modulus() != p)
      throw std::invalid_argument("generators live in different rings");
    if (!g.is_homogeneous())
      throw std::invalid_argument("generators must be homogeneous");
    detail::buchberger_add(eng, G, P, eng.convert(g));
  }
  res.status = detail::buchberger_run(eng, G, P, opt, res.spairs_reduced,
                                      res.reductions_to_zero, res.reduction_steps,
                                      &res.irrelevant_certified);
  if (res.status == GbStatus::complete && !res.irrelevant_certified)
    G = detail::reduce_basis(eng, std::move(G), res.reduction_steps, opt.tail_reduce);
  res.basis.reserve(G.size());
  for (const EPoly& g : G) res.basis.push_back(eng.convert_back(g));
  if (res.status != GbStatus::complete)
    std::sort(res.basis.begin(), res.basis.end(), [](const Poly<Fp>& a, const Poly<Fp>& b) {
      return grevlex_less(a.leading_monomial(), b.leading_monomial());
    });
  return res;
}

inline Poly<Fp> normal_form(const Poly<Fp>& f, const std::vector<Poly<Fp>>& basis) {
  if (f.is_zero()) return f;
  gb::Engine eng(f.leading_coeff().modulus(), f.nvars());
  std::vector<EPoly> G;
  G.reserve(basis.size());
  for (const auto& b : basis) {
    if (b.is_zero()) continue;
    EPoly e = eng.convert(b);
    eng.make_monic(e);
    G.push_back(std::move(e));
  }
  uint64_t steps = 0;
  return eng.convert_back(eng.normal_form(eng.convert(f), G, steps));
}

// Dimension of the projective zero set from the leading monomials of a basis:
// largest coordinate subspace meeting no leading support, minus one. The
// empty set and the irrelevant case both land at -1.
inline long projective_dimension_from_leading(const std::vector<Poly<Fp>>& basis, size_t nvars) {
  if (nvars > 16) throw std::invalid_argument("packed engine supports at most 16 variables");
  std::vector<uint16_t> masks;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    uint16_t m = 0;
    const Monomial& lm = g.leading_monomial();
    for (size_t i = 0; i < nvars; ++i)
      if (lm.e[i] != 0) m |= static_cast<uint16_t>(1u << i);
    if (m == 0) return -1;  // a unit: empty zero set
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<uint16_t> minimal;
  for (uint16_t m : masks) {
    bool redundant = false;
    for (uint16_t q : minimal)
      if ((q & ~m) == 0) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(m);
  }
  long best = -1;  // no admissible subset found yet
  uint32_t full = nvars >= 16 ? 0xFFFFu : ((1u << nvars) - 1);
  for (uint32_t S = 0; S <= full; ++S) {
    int pc = __builtin_popcount(S);
    if (pc <= best) continue;
    bool ok = true;
    for (uint16_t m : minimal)
      if ((m & ~S) == 0) {
        ok = false;
        break;
      }
    if (ok) best = pc;
  }
  return best - 1;  // best == -1 only when even the empty set is excluded
}

struct DimensionResult {
  GbStatus status = GbStatus::complete;
  long dim = -1;  // valid only when status == complete
  uint64_t spairs_reduced = 0;
  uint64_t reduction_steps = 0;
  size_t basis_size = 0;
};

inline DimensionResult projective_dimension(const std::vector<Poly<Fp>>& gens, size_t nvars,
                                            GrobnerOptions opt = {}) {
  DimensionResult r;
  opt.tail_reduce = false;          // only leading terms feed the dimension
  opt.stop_when_irrelevant = true;  // an empty zero set can be certified early
  GrobnerResult gbres = groebner_basis(gens, opt);
  r.status = gbres.status;
  r.spairs_reduced = gbres.spairs_reduced;
  r.reduction_steps = gbres.reduction_steps;
  r.basis_size = gbres.basis.size();
  if (r.status == GbStatus::complete)
    r.dim = gbres.irrelevant_certified ? -1 : projective_dimension_from_leading(gbres.basis, nvars);
  return r;
}

struct RegularSequenceResult {
  GbStatus status = GbStatus::complete;
  bool regular = false;
  long first_failure = -1;       // index of the first entry that fails; -1 if none
  std::vector<long> dims;        // projective dimension after each checked prefix
  uint64_t spairs_reduced = 0;
  uint64_t reductions_to_zero = 0;
  uint64_t reduction_steps = 0;
};

// Homogeneous entries form a regular sequence iff each prefix cuts the
// projective dimension by exactly one. Zero or constant entries fail where
// they stand. Prefix bases are grown incrementally.
inline RegularSequenceResult is_regular_sequence(const std::vector<Poly<Fp>>& polys,
                                                 size_t nvars, GrobnerOptions opt = {}) {
  RegularSequenceResult res;
  if (polys.empty()) {
    res.regular = true;
    return res;
  }
  uint32_t p = 0;
  for (const auto& f : polys)
    if (!f.is_zero()) {
      p = f.leading_coeff().modulus();
      break;
    }
  if (p == 0) {  // all zero
    res.first_failure = 0;
    return res;
  }
  gb::Engine eng(p, nvars);
  std::vector<EPoly> G;
  std::vector<gb::Pair> P;
  for (size_t i = 0; i < polys.size(); ++i) {
    const Poly<Fp>& f = polys[i];
    if (f.is_zero() || f.degree() < 1) {
      res.first_failure = static_cast<long>(i);
      return res;
    }
    if (f.nvars() != nvars) throw std::invalid_argument("entry lives in the wrong ring");
    if (!f.is_homogeneous()) throw std::invalid_argument("entries must be homogeneous");
    detail::buchberger_add(eng, G, P, eng.convert(f));
    res.status = detail::buchberger_run(eng, G, P, opt, res.spairs_reduced,
                                        res.reductions_to_zero, res.reduction_steps);
    if (res.status == GbStatus::budget_exceeded) return res;
    std::vector<Poly<Fp>> lms;
    lms.reserve(G.size());
    for (const EPoly& g : G) lms.push_back(eng.convert_back(EPoly{g[0]}));
    long dim = projective_dimension_from_leading(lms, nvars);
    res.dims.push_back(dim);
    long expected = static_cast<long>(nvars) - 2 - static_cast<long>(i);
    if (dim != expected) {
      res.first_failure = static_cast<long>(i);
      return res;
    }
  }
  res.regular = true;
  return res;
}

}  // namespace ci2
