#include "sixeq/waveprop.hpp"

#include <algorithm>

namespace sixeq {

Fluctuations hllc_fluctuations(const HllcWaveFan& fan, const ConservedState& qL,
                               const ConservedState& qR) {
  const StateVector W1 = fan.qStarL - qL;
  const StateVector W2 = fan.qStarR - fan.qStarL;
  const StateVector W3 = qR - fan.qStarR;
  Fluctuations out;
  for (std::size_t k = 0; k < kNumVars; ++k) {
    out.aMinus[k] = std::min(fan.sL, 0.0) * W1[k] + std::min(fan.sStar, 0.0) * W2[k] +
                    std::min(fan.sR, 0.0) * W3[k];
    out.aPlus[k] = std::max(fan.sL, 0.0) * W1[k] + std::max(fan.sStar, 0.0) * W2[k] +
                   std::max(fan.sR, 0.0) * W3[k];
  }
  return out;
}

Fluctuations hllc_fluctuations(const ResolvedFace& f) {
  return hllc_fluctuations(hllc_wave_fan(f), f.L.q, f.R.q);
}

Fluctuations hllc_fluctuations(const FaceContext& ctx, const EosParams& eos1,
                               const EosParams& eos2) {
  const ResolvedState L = resolve(ctx.qL, eos1, eos2);
  const ResolvedState R = resolve(ctx.qR, eos1, eos2);
  return hllc_fluctuations(ResolvedFace{L, R, ctx.normal});
}

}  // namespace sixeq
