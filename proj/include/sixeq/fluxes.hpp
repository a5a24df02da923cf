#pragma once

#include "sixeq/eos.hpp"
#include "sixeq/state.hpp"

namespace sixeq {

/// One cell face: left/right states and the unit normal pointing L -> R.
struct FaceContext {
  ConservedState qL;
  ConservedState qR;
  Vec2 normal{1.0, 0.0};
};

/// Same face with both sides already resolved. This is what the solver's hot
/// loop passes around; the FaceContext overloads resolve and forward.
struct ResolvedFace {
  const ResolvedState& L;
  const ResolvedState& R;
  Vec2 n;
};

struct HllcWaveFan {
  double sL = 0.0;
  double sStar = 0.0;
  double sR = 0.0;
  ConservedState qStarL;
  ConservedState qStarR;
};

inline constexpr double kDefaultFanTolerance = 1e-12;

StateVector physical_flux(const ResolvedState& s, Vec2 n);
StateVector physical_flux(const ConservedState& q, const EosParams& eos1, const EosParams& eos2,
                          Vec2 n);

/// Rusanov flux with the frozen sound speed. Dissipation acts on every slot,
/// including alpha1 (the BR alpha terms rely on it for stability).
StateVector rusanov_flux(const ResolvedFace& f);
StateVector rusanov_flux(const FaceContext& ctx, const EosParams& eos1, const EosParams& eos2);

/// Davis speed estimates, mixture contact speed and the two star states.
/// Throws DegenerateFan when s# and s* coincide (relative to `tol`) while mass
/// still crosses the external wave.
HllcWaveFan hllc_wave_fan(const ResolvedFace& f, double tol = kDefaultFanTolerance);
HllcWaveFan hllc_wave_fan(const FaceContext& ctx, const EosParams& eos1, const EosParams& eos2,
                          double tol = kDefaultFanTolerance);

/// Flux-form HLLC. The alpha1 slot is zero; noncons handles it.
StateVector hllc_flux(const ResolvedFace& f, const HllcWaveFan& fan);
StateVector hllc_flux(const FaceContext& ctx, const EosParams& eos1, const EosParams& eos2);

}  // namespace sixeq
