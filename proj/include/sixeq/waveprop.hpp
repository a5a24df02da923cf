#pragma once

#include "sixeq/fluxes.hpp"

namespace sixeq {

/// A-minus dQ and A-plus dQ at one face. The update is
/// q_j -= dt/dx (aMinus_{j+1/2} + aPlus_{j-1/2}).
struct Fluctuations {
  StateVector aMinus;
  StateVector aPlus;
};

/// Three-wave splitting of the HLLC fan: W1 = q*L - qL, W2 = q*R - q*L,
/// W3 = qR - q*R at speeds sL, s*, sR.
Fluctuations hllc_fluctuations(const HllcWaveFan& fan, const ConservedState& qL,
                               const ConservedState& qR);
Fluctuations hllc_fluctuations(const ResolvedFace& f);
Fluctuations hllc_fluctuations(const FaceContext& ctx, const EosParams& eos1,
                               const EosParams& eos2);

}  // namespace sixeq
