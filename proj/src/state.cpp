#include "sixeq/state.hpp"

#include <cmath>
#include <string>

#include "sixeq/error.hpp"

namespace sixeq {

const char* var_name(std::size_t slot) {
  switch (slot) {
    case kAlpha1: return "alpha1";
    case kMass1: return "alpha1_rho1";
    case kMass2: return "alpha2_rho2";
    case kMomX: return "rho_u";
    case kMomY: return "rho_v";
    case kEnergy1: return "alpha1_rho1_E1";
    case kEnergy2: return "alpha2_rho2_E2";
    default: return "?";
  }
}

bool try_resolve(const ConservedState& q, const EosParams& eos1, const EosParams& eos2,
                 ResolvedState& out, const char** bad_field) noexcept {
  auto fail = [&](const char* f) {
    if (bad_field) *bad_field = f;
    return false;
  };
  for (std::size_t k = 0; k < kNumVars; ++k) {
    if (!std::isfinite(q[k])) return fail(var_name(k));
  }
  const double a1 = q[kAlpha1];
  const double a2 = 1.0 - a1;
  if (!(a1 > 0.0 && a1 < 1.0)) return fail("alpha1");
  const double m1 = q[kMass1];
  const double m2 = q[kMass2];
  if (!(m1 > 0.0)) return fail("alpha1_rho1");
  if (!(m2 > 0.0)) return fail("alpha2_rho2");

  const double rho = m1 + m2;
  const double u = q[kMomX] / rho;
  const double v = q[kMomY] / rho;
  const double ke = 0.5 * (u * u + v * v);
  const double r1 = m1 / a1;
  const double r2 = m2 / a2;
  const double e1 = q[kEnergy1] / m1 - ke;
  const double e2 = q[kEnergy2] / m2 - ke;
  const double p1 = (eos1.gamma - 1.0) * r1 * (e1 - eos1.eta) - eos1.gamma * eos1.pi_inf;
  const double p2 = (eos2.gamma - 1.0) * r2 * (e2 - eos2.eta) - eos2.gamma * eos2.pi_inf;
  if (!(p1 + eos1.pi_inf > 0.0)) return fail("p1");
  if (!(p2 + eos2.pi_inf > 0.0)) return fail("p2");

  out.q = q;
  out.w = PrimitiveState{a1, r1, r2, {u, v}, p1, p2};
  out.alpha2 = a2;
  out.rho = rho;
  out.Y1 = m1 / rho;
  out.Y2 = m2 / rho;
  out.pbar = a1 * p1 + a2 * p2;
  out.c1 = std::sqrt(eos1.gamma * (p1 + eos1.pi_inf) / r1);
  out.c2 = std::sqrt(eos2.gamma * (p2 + eos2.pi_inf) / r2);
  out.cf = std::sqrt(out.Y1 * out.c1 * out.c1 + out.Y2 * out.c2 * out.c2);
  return true;
}

ResolvedState resolve(const ConservedState& q, const EosParams& eos1, const EosParams& eos2) {
  ResolvedState r;
  const char* bad = nullptr;
  if (!try_resolve(q, eos1, eos2, r, &bad)) {
    throw Error(ErrorKind::InadmissibleState, std::string("inadmissible state: ") + bad);
  }
  return r;
}

void check_admissible(const PrimitiveState& w, const EosParams& eos1, const EosParams& eos2) {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::InadmissibleState, what); };
  if (!std::isfinite(w.alpha1) || !std::isfinite(w.rho1) || !std::isfinite(w.rho2) ||
      !std::isfinite(w.vel.x) || !std::isfinite(w.vel.y) || !std::isfinite(w.p1) ||
      !std::isfinite(w.p2)) {
    bad("non-finite primitive state");
  }
  if (!(w.alpha1 > 0.0 && w.alpha1 < 1.0)) bad("alpha1 outside (0, 1)");
  if (!(w.rho1 > 0.0)) bad("rho1 must be positive");
  if (!(w.rho2 > 0.0)) bad("rho2 must be positive");
  if (!(w.p1 + eos1.pi_inf > 0.0)) bad("p1 + pi1 must be positive");
  if (!(w.p2 + eos2.pi_inf > 0.0)) bad("p2 + pi2 must be positive");
}

PrimitiveState to_primitive(const ConservedState& q, const EosParams& eos1, const EosParams& eos2) {
  return resolve(q, eos1, eos2).w;
}

ConservedState to_conserved(const PrimitiveState& w, const EosParams& eos1, const EosParams& eos2) {
  check_admissible(w, eos1, eos2);
  const double a2 = 1.0 - w.alpha1;
  const double m1 = w.alpha1 * w.rho1;
  const double m2 = a2 * w.rho2;
  const double rho = m1 + m2;
  const double ke = 0.5 * dot(w.vel, w.vel);
  ConservedState q;
  q[kAlpha1] = w.alpha1;
  q[kMass1] = m1;
  q[kMass2] = m2;
  q[kMomX] = rho * w.vel.x;
  q[kMomY] = rho * w.vel.y;
  q[kEnergy1] = m1 * (internal_energy(eos1, w.rho1, w.p1) + ke);
  q[kEnergy2] = m2 * (internal_energy(eos2, w.rho2, w.p2) + ke);
  return q;
}

double frozen_sound_speed(const PrimitiveState& w, const EosParams& eos1, const EosParams& eos2) {
  check_admissible(w, eos1, eos2);
  const double m1 = w.alpha1 * w.rho1;
  const double m2 = (1.0 - w.alpha1) * w.rho2;
  const double c1 = sound_speed(eos1, w.rho1, w.p1);
  const double c2 = sound_speed(eos2, w.rho2, w.p2);
  return std::sqrt((m1 * c1 * c1 + m2 * c2 * c2) / (m1 + m2));
}

double wood_sound_speed(const PrimitiveState& w, const EosParams& eos1, const EosParams& eos2) {
  check_admissible(w, eos1, eos2);
  const double a2 = 1.0 - w.alpha1;
  const double rho = w.alpha1 * w.rho1 + a2 * w.rho2;
  const double c1 = sound_speed(eos1, w.rho1, w.p1);
  const double c2 = sound_speed(eos2, w.rho2, w.p2);
  const double inv = w.alpha1 / (w.rho1 * c1 * c1) + a2 / (w.rho2 * c2 * c2);
  return std::sqrt(1.0 / (rho * inv));
}

MixtureDiagnostics mixture_diagnostics(const ConservedState& q, const EosParams& eos1,
                                       const EosParams& eos2) {
  const ResolvedState r = resolve(q, eos1, eos2);
  MixtureDiagnostics d;
  d.rho = r.rho;
  d.pbar = r.pbar;
  d.Y1 = r.Y1;
  d.c_frozen = r.cf;
  d.c_wood = wood_sound_speed(r.w, eos1, eos2);
  d.E_mix = (q[kEnergy1] + q[kEnergy2]) / r.rho;
  return d;
}

}  // namespace sixeq
