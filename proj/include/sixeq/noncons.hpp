#pragma once

#include <string>
#include <vector>

#include "sixeq/fluxes.hpp"

namespace sixeq {

enum class NonconsVariant { BR2023, BR2015, Crouzet };

const char* to_string(NonconsVariant v) noexcept;
/// Accepts "BR2023", "br-2023", "br2023" and similar spellings.
NonconsVariant parse_noncons(const std::string& name);

/// T-minus / T-plus of one face. Only the alpha1, E1c and E2c slots are ever
/// nonzero, and the E2c slot is the exact negation of the E1c slot.
struct NonconsContribution {
  StateVector minus;
  StateVector plus;
};

NonconsContribution br2023(const ResolvedFace& f);
NonconsContribution br2015(const ResolvedFace& f);
NonconsContribution crouzet(const ResolvedFace& f);
NonconsContribution noncons_contribution(NonconsVariant v, const ResolvedFace& f);

NonconsContribution br2023(const FaceContext& ctx, const EosParams& eos1, const EosParams& eos2);
NonconsContribution br2015(const FaceContext& ctx, const EosParams& eos1, const EosParams& eos2);
NonconsContribution crouzet(const FaceContext& ctx, const EosParams& eos1, const EosParams& eos2);

struct AlphaSlots {
  double minus = 0.0;
  double plus = 0.0;
};

/// Upwinded alpha1 transport for the flux-form HLLC scheme:
/// minus = min(s*, 0) (aR - aL), plus = -max(s*, 0) (aR - aL).
AlphaSlots hllc_upwind_alpha(double alphaL, double alphaR, double sStar);
AlphaSlots hllc_upwind_alpha(const FaceContext& ctx, double sStar);

struct PcConsistencyReport {
  std::size_t samples = 0;
  /// max over samples and slots of |D-(w, w, n)|
  double max_equal_state = 0.0;
  /// max over samples of |(D- + D+) - <u.n> (aR - aL)| in the alpha1 slot,
  /// with D- = T-, D+ = -T+
  double max_path_deviation = 0.0;
};

PcConsistencyReport pc_consistency_check(NonconsVariant v, const std::vector<FaceContext>& samples,
                                         const EosParams& eos1, const EosParams& eos2);

}  // namespace sixeq
