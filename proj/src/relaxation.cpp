#include "sixeq/relaxation.hpp"

#include <cmath>
#include <sstream>

#include "sixeq/error.hpp"

namespace sixeq {

double interfacial_pressure(const PrimitiveState& w, const EosParams& eos1, const EosParams& eos2) {
  const double Z1 = w.rho1 * sound_speed(eos1, w.rho1, w.p1);
  const double Z2 = w.rho2 * sound_speed(eos2, w.rho2, w.p2);
  return (Z2 * w.p1 + Z1 * w.p2) / (Z1 + Z2);
}

RelaxationQuadratic relaxation_quadratic(const PrimitiveState& w, const EosParams& eos1,
                                         const EosParams& eos2) {
  const double g1 = eos1.gamma, g2 = eos2.gamma;
  const double pi1 = eos1.pi_inf, pi2 = eos2.pi_inf;
  const double a1 = w.alpha1, a2 = 1.0 - w.alpha1;
  RelaxationQuadratic r;
  r.pI = interfacial_pressure(w, eos1, eos2);
  const double k1 = 2.0 * g1 * pi1 + (g1 - 1.0) * r.pI;
  const double k2 = 2.0 * g2 * pi2 + (g2 - 1.0) * r.pI;
  r.a = 1.0 + g2 * a1 + g1 * a2;
  r.b = k1 * a2 + k2 * a1 - (1.0 + g2) * a1 * w.p1 - (1.0 + g1) * a2 * w.p2;
  r.c = -k2 * a1 * w.p1 - k1 * a2 * w.p2;
  return r;
}

double equilibrium_alpha1(const PrimitiveState& w, const EosParams& eos1, double pI, double p) {
  const double g1 = eos1.gamma;
  const double k1 = 2.0 * g1 * eos1.pi_inf + (g1 - 1.0) * pI;
  return w.alpha1 * ((g1 - 1.0) * p + 2.0 * w.p1 + k1) / ((g1 + 1.0) * p + k1);
}

namespace {

struct Candidate {
  bool thermo_ok = false;  // p + pi_k > 0 and positive alpha denominators
  bool alpha_ok = false;
  double alpha1 = 0.0;
};

Candidate check_root(const PrimitiveState& w, const EosParams& eos1, const EosParams& eos2,
                     double pI, double p) {
  Candidate c;
  if (!std::isfinite(p)) return c;
  if (!(p + eos1.pi_inf > 0.0) || !(p + eos2.pi_inf > 0.0)) return c;
  const double d1 = (eos1.gamma + 1.0) * p + 2.0 * eos1.gamma * eos1.pi_inf + (eos1.gamma - 1.0) * pI;
  const double d2 = (eos2.gamma + 1.0) * p + 2.0 * eos2.gamma * eos2.pi_inf + (eos2.gamma - 1.0) * pI;
  if (!(d1 > 0.0) || !(d2 > 0.0)) return c;
  c.thermo_ok = true;
  c.alpha1 = equilibrium_alpha1(w, eos1, pI, p);
  c.alpha_ok = c.alpha1 > 0.0 && c.alpha1 < 1.0;
  return c;
}

}  // namespace

RelaxationResult relax_pressure(const ConservedState& q0, const EosParams& eos1,
                                const EosParams& eos2) {
  const ResolvedState s = resolve(q0, eos1, eos2);
  const PrimitiveState& w = s.w;
  if (w.p1 == w.p2) return {w.p1, w.alpha1, q0};

  const RelaxationQuadratic quad = relaxation_quadratic(w, eos1, eos2);
  double disc = quad.b * quad.b - 4.0 * quad.a * quad.c;
  if (disc < 0.0) {
    if (disc < -1e-12 * quad.b * quad.b) {
      std::ostringstream msg;
      msg << "relaxation quadratic has no real root (discriminant " << disc << ")";
      throw Error(ErrorKind::RelaxationFailure, msg.str());
    }
    disc = 0.0;
  }
  // Cancellation-free pair of roots.
  const double t = -0.5 * (quad.b + std::copysign(std::sqrt(disc), quad.b));
  double r1 = t / quad.a;
  double r2 = t != 0.0 ? quad.c / t : r1;
  const double hi = std::max(r1, r2);
  const double lo = std::min(r1, r2);

  double pStar = 0.0;
  double alphaStar = 0.0;
  bool found = false;
  bool positivity_lost = false;
  for (double p : {hi, lo}) {
    const Candidate c = check_root(w, eos1, eos2, quad.pI, p);
    if (!c.thermo_ok) continue;
    if (!c.alpha_ok) {
      positivity_lost = true;
      continue;
    }
    pStar = p;
    alphaStar = c.alpha1;
    found = true;
    break;
  }
  if (!found) {
    std::ostringstream msg;
    msg << "relaxation roots " << hi << ", " << lo << " from p1 = " << w.p1 << ", p2 = " << w.p2
        << ", alpha1 = " << w.alpha1;
    if (positivity_lost) {
      throw Error(ErrorKind::Positivity, "relaxed alpha1 leaves (0, 1): " + msg.str());
    }
    throw Error(ErrorKind::RelaxationFailure, "no admissible relaxation root: " + msg.str());
  }

  RelaxationResult out;
  out.pStar = pStar;
  out.alpha1Star = alphaStar;
  out.qStar = q0;
  const double work = 0.5 * (quad.pI + pStar) * (alphaStar - w.alpha1);
  out.qStar[kAlpha1] = alphaStar;
  out.qStar[kEnergy1] = q0[kEnergy1] - work;
  out.qStar[kEnergy2] = q0[kEnergy2] + work;
  return out;
}

void relax_field(std::span<ConservedState> cells, const EosParams& eos1, const EosParams& eos2) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    try {
      cells[i] = relax_pressure(cells[i], eos1, eos2).qStar;
    } catch (const Error& e) {
      FailureRecord rec;
      rec.cell = i;
      rec.i = i;
      rec.field = "pressure";
      rec.detail = e.what();
      throw Error(e.kind(), "cell " + std::to_string(i) + ": " + e.what(), rec);
    }
  }
}

}  // namespace sixeq
