#include "sixeq/fluxes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sixeq/error.hpp"

namespace sixeq {

StateVector physical_flux(const ResolvedState& s, Vec2 n) {
  const Vec2 u = s.w.vel;
  const double un = dot(u, n);
  const auto& q = s.q;
  StateVector f;
  f[kAlpha1] = 0.0;
  f[kMass1] = q[kMass1] * un;
  f[kMass2] = q[kMass2] * un;
  f[kMomX] = q[kMomX] * un + s.pbar * n.x;
  f[kMomY] = q[kMomY] * un + s.pbar * n.y;
  f[kEnergy1] = (q[kEnergy1] + s.w.alpha1 * s.w.p1) * un;
  f[kEnergy2] = (q[kEnergy2] + s.alpha2 * s.w.p2) * un;
  return f;
}

StateVector physical_flux(const ConservedState& q, const EosParams& eos1, const EosParams& eos2,
                          Vec2 n) {
  return physical_flux(resolve(q, eos1, eos2), n);
}

StateVector rusanov_flux(const ResolvedFace& f) {
  const double s = std::max(std::abs(dot(f.L.w.vel, f.n)) + f.L.cf,
                            std::abs(dot(f.R.w.vel, f.n)) + f.R.cf);
  const StateVector FL = physical_flux(f.L, f.n);
  const StateVector FR = physical_flux(f.R, f.n);
  StateVector out;
  for (std::size_t k = 0; k < kNumVars; ++k) {
    out[k] = 0.5 * (FL[k] + FR[k]) - 0.5 * s * (f.R.q[k] - f.L.q[k]);
  }
  return out;
}

StateVector rusanov_flux(const FaceContext& ctx, const EosParams& eos1, const EosParams& eos2) {
  const ResolvedState L = resolve(ctx.qL, eos1, eos2);
  const ResolvedState R = resolve(ctx.qR, eos1, eos2);
  return rusanov_flux(ResolvedFace{L, R, ctx.normal});
}

namespace {

ConservedState star_state(const ResolvedState& s, Vec2 n, double sw, double sStar, double tol) {
  const double un = dot(s.w.vel, n);
  const double gap = sw - sStar;
  if (std::abs(gap) <= tol) {
    if (std::abs(sw - un) <= tol) return s.q;
    std::ostringstream msg;
    msg << "HLLC fan collapsed: s = " << sw << ", s* = " << sStar << " with u.n = " << un;
    throw Error(ErrorKind::DegenerateFan, msg.str());
  }
  const double rel = sw - un;
  const double chi = rel / gap;
  const double E1 = s.q[kEnergy1] / s.q[kMass1];
  const double E2 = s.q[kEnergy2] / s.q[kMass2];
  const double E1s = E1 + (sStar - un) * (sStar + s.w.p1 / (s.w.rho1 * rel));
  const double E2s = E2 + (sStar - un) * (sStar + s.w.p2 / (s.w.rho2 * rel));
  const Vec2 tang = s.w.vel - un * n;
  ConservedState q;
  q[kAlpha1] = s.w.alpha1;
  q[kMass1] = s.q[kMass1] * chi;
  q[kMass2] = s.q[kMass2] * chi;
  q[kMomX] = s.rho * chi * (sStar * n.x + tang.x);
  q[kMomY] = s.rho * chi * (sStar * n.y + tang.y);
  q[kEnergy1] = q[kMass1] * E1s;
  q[kEnergy2] = q[kMass2] * E2s;
  return q;
}

}  // namespace

HllcWaveFan hllc_wave_fan(const ResolvedFace& f, double tol) {
  const auto& L = f.L;
  const auto& R = f.R;
  const double uL = dot(L.w.vel, f.n);
  const double uR = dot(R.w.vel, f.n);
  HllcWaveFan fan;
  fan.sL = std::min(uL - L.cf, uR - R.cf);
  fan.sR = std::max(uL + L.cf, uR + R.cf);
  const double num = R.pbar - L.pbar + L.rho * uL * (fan.sL - uL) - R.rho * uR * (fan.sR - uR);
  const double den = L.rho * (fan.sL - uL) - R.rho * (fan.sR - uR);
  if (!(den != 0.0) || !std::isfinite(num)) {
    throw Error(ErrorKind::DegenerateFan, "HLLC contact speed undefined");
  }
  fan.sStar = num / den;
  const double scale =
      tol * std::max({std::abs(fan.sL), std::abs(fan.sR), L.cf, R.cf});
  fan.qStarL = star_state(L, f.n, fan.sL, fan.sStar, scale);
  fan.qStarR = star_state(R, f.n, fan.sR, fan.sStar, scale);
  return fan;
}

HllcWaveFan hllc_wave_fan(const FaceContext& ctx, const EosParams& eos1, const EosParams& eos2,
                          double tol) {
  const ResolvedState L = resolve(ctx.qL, eos1, eos2);
  const ResolvedState R = resolve(ctx.qR, eos1, eos2);
  return hllc_wave_fan(ResolvedFace{L, R, ctx.normal}, tol);
}

StateVector hllc_flux(const ResolvedFace& f, const HllcWaveFan& fan) {
  StateVector out;
  if (0.0 <= fan.sL) {
    out = physical_flux(f.L, f.n);
  } else if (0.0 <= fan.sStar) {
    out = physical_flux(f.L, f.n) + fan.sL * (fan.qStarL - f.L.q);
  } else if (0.0 <= fan.sR) {
    out = physical_flux(f.R, f.n) + fan.sR * (fan.qStarR - f.R.q);
  } else {
    out = physical_flux(f.R, f.n);
  }
  out[kAlpha1] = 0.0;
  return out;
}

StateVector hllc_flux(const FaceContext& ctx, const EosParams& eos1, const EosParams& eos2) {
  const ResolvedState L = resolve(ctx.qL, eos1, eos2);
  const ResolvedState R = resolve(ctx.qR, eos1, eos2);
  const ResolvedFace f{L, R, ctx.normal};
  return hllc_flux(f, hllc_wave_fan(f));
}

}  // namespace sixeq
