#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ci2/field.hpp"
#include "ci2/poly.hpp"

namespace ci2 {

// Canonical representatives of projective space over F_p: the first nonzero
// coordinate equals 1. Blocks are ordered by pivot position, and the free
// coordinates behind the pivot count up like an odometer with the last one
// fastest. Visits at most `limit` points; returns false when truncated.
inline bool enumerate_projective_points(uint32_t p, size_t n, uint64_t limit,
                                        const std::function<bool(const std::vector<Fp>&)>& visit) {
  uint64_t scanned = 0;
  std::vector<Fp> pt(n, Fp::zero(p));
  for (size_t pivot = 0; pivot < n; ++pivot) {
    for (size_t i = 0; i < n; ++i) pt[i] = Fp::zero(p);
    pt[pivot] = Fp::from_int(1, p);
    std::vector<uint32_t> digits(n > pivot + 1 ? n - pivot - 1 : 0, 0);
    for (;;) {
      if (scanned++ >= limit) return false;
      if (!visit(pt)) return true;  // visitor asked to stop
      size_t k = digits.size();
      while (k > 0) {
        --k;
        if (++digits[k] < p) break;
        digits[k] = 0;
      }
      bool rolled = digits.empty() || (k == 0 && digits[0] == 0);
      for (size_t i = 0; i < digits.size(); ++i) pt[pivot + 1 + i] = Fp(digits[i], p);
      if (rolled) break;
    }
  }
  return true;
}

struct PointEnumeration {
  std::vector<std::vector<Fp>> points;
  bool complete = true;   // false when the scan hit the limit
  uint64_t scanned = 0;
};

// All canonical projective points where every generator vanishes.
inline PointEnumeration enumerate_variety_points(const std::vector<Poly<Fp>>& gens, uint32_t p,
                                                 size_t nvars, uint64_t limit) {
  PointEnumeration out;
  out.complete = enumerate_projective_points(p, nvars, limit, [&](const std::vector<Fp>& pt) {
    ++out.scanned;
    for (const auto& g : gens)
      if (!g.eval(pt).is_zero()) return true;
    out.points.push_back(pt);
    return true;
  });
  return out;
}

}  // namespace ci2
