#pragma once
// Bisection reference for the equilibrium pressure of instantaneous relaxation.
// Each phase k satisfies, at pressure p,
//   alpha_k(p) [p + g pi + (g-1)(pI+p)/2] = alpha_k0 [p_k + g pi + (g-1)(pI+p)/2]
// (integrated phasic energy with the linearized interfacial pressure), and the
// equilibrium is the p for which alpha_1(p) + alpha_2(p) = 1.
#include <cmath>
#include <optional>

#include "sixeq/eos.hpp"
#include "sixeq/state.hpp"

namespace sixeq::testing {

inline double oracle_alpha(double a0, double pk, const EosParams& e, double pI, double p) {
  const double h = 0.5 * (e.gamma - 1.0) * (pI + p);
  return a0 * (pk + e.gamma * e.pi_inf + h) / (p + e.gamma * e.pi_inf + h);
}

inline std::optional<double> bisect_equilibrium(const PrimitiveState& w, const EosParams& e1,
                                                const EosParams& e2, double pI) {
  auto g = [&](double p) {
    return oracle_alpha(w.alpha1, w.p1, e1, pI, p) + oracle_alpha(1.0 - w.alpha1, w.p2, e2, pI, p) -
           1.0;
  };
  double lo = std::min(w.p1, w.p2), hi = std::max(w.p1, w.p2);
  double glo = g(lo), ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if ((glo > 0.0) == (ghi > 0.0)) return std::nullopt;
  for (int it = 0; it < 400 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace sixeq::testing
