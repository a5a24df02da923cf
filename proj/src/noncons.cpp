#include "sixeq/noncons.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "sixeq/error.hpp"

namespace sixeq {

const char* to_string(NonconsVariant v) noexcept {
  switch (v) {
    case NonconsVariant::BR2023: return "BR2023";
    case NonconsVariant::BR2015: return "BR2015";
    case NonconsVariant::Crouzet: return "Crouzet";
  }
  return "?";
}

NonconsVariant parse_noncons(const std::string& name) {
  std::string key;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  if (key == "br2023") return NonconsVariant::BR2023;
  if (key == "br2015") return NonconsVariant::BR2015;
  if (key == "crouzet") return NonconsVariant::Crouzet;
  throw Error(ErrorKind::Config,
              "unknown noncons variant '" + name + "' (expected BR2023, BR2015 or Crouzet)");
}

namespace {

inline double avg(double a, double b) { return 0.5 * (a + b); }

NonconsContribution assemble(double tMinusAlpha, double tPlusAlpha, double sigMinus,
                             double sigPlus) {
  NonconsContribution c;
  c.minus[kAlpha1] = tMinusAlpha;
  c.minus[kEnergy1] = sigMinus;
  c.minus[kEnergy2] = -sigMinus;
  c.plus[kAlpha1] = tPlusAlpha;
  c.plus[kEnergy1] = sigPlus;
  c.plus[kEnergy2] = -sigPlus;
  return c;
}

// Per-side quantities read by all three variants, already projected on n.
struct Side {
  double u, a1, a2, Y1, Y2, a1p1, a2p2;
};

Side side(const ResolvedState& s, Vec2 n) {
  return {dot(s.w.vel, n), s.w.alpha1, s.alpha2, s.Y1, s.Y2, s.w.alpha1 * s.w.p1,
          s.alpha2 * s.w.p2};
}

}  // namespace

NonconsContribution br2023(const ResolvedFace& f) {
  const Side L = side(f.L, f.n);
  const Side R = side(f.R, f.n);
  const double u = avg(L.u, R.u);
  const double ua = avg(L.u * L.a1, R.u * R.a1);
  const double uY2a1p1 = avg(L.u * L.Y2 * L.a1p1, R.u * R.Y2 * R.a1p1);
  const double uY2 = avg(L.u * L.Y2, R.u * R.Y2);
  const double uY1a2p2 = avg(L.u * L.Y1 * L.a2p2, R.u * R.Y1 * R.a2p2);
  const double uY1 = avg(L.u * L.Y1, R.u * R.Y1);
  const double sigM = -(uY2a1p1 - uY2 * L.a1p1) + (uY1a2p2 - uY1 * L.a2p2);
  const double sigP = -(uY2a1p1 - uY2 * R.a1p1) + (uY1a2p2 - uY1 * R.a2p2);
  return assemble(ua - u * L.a1, ua - u * R.a1, sigM, sigP);
}

NonconsContribution br2015(const ResolvedFace& f) {
  const Side L = side(f.L, f.n);
  const Side R = side(f.R, f.n);
  const double u = avg(L.u, R.u);
  const double a = avg(L.a1, R.a1);
  const double uY2 = avg(L.u * L.Y2, R.u * R.Y2);
  const double uY1 = avg(L.u * L.Y1, R.u * R.Y1);
  const double a1p1 = avg(L.a1p1, R.a1p1);
  const double a2p2 = avg(L.a2p2, R.a2p2);
  const double sigM = -(uY2 * a1p1 - uY2 * L.a1p1) + (uY1 * a2p2 - uY1 * L.a2p2);
  const double sigP = -(uY2 * a1p1 - uY2 * R.a1p1) + (uY1 * a2p2 - uY1 * R.a2p2);
  return assemble(u * a - u * L.a1, u * a - u * R.a1, sigM, sigP);
}

NonconsContribution crouzet(const ResolvedFace& f) {
  const Side L = side(f.L, f.n);
  const Side R = side(f.R, f.n);
  const double a = avg(L.a1, R.a1);
  const double a1p1 = avg(L.a1p1, R.a1p1);
  const double a2p2 = avg(L.a2p2, R.a2p2);
  const double sigM = -L.u * (L.Y2 * a1p1 - L.Y1 * a2p2);
  const double sigP = -R.u * (R.Y2 * a1p1 - R.Y1 * a2p2);
  return assemble(L.u * a, R.u * a, sigM, sigP);
}

NonconsContribution noncons_contribution(NonconsVariant v, const ResolvedFace& f) {
  switch (v) {
    case NonconsVariant::BR2023: return br2023(f);
    case NonconsVariant::BR2015: return br2015(f);
    case NonconsVariant::Crouzet: return crouzet(f);
  }
  throw Error(ErrorKind::Internal, "bad noncons variant");
}

namespace {

template <class Fn>
NonconsContribution via_context(Fn fn, const FaceContext& ctx, const EosParams& eos1,
                                const EosParams& eos2) {
  const ResolvedState L = resolve(ctx.qL, eos1, eos2);
  const ResolvedState R = resolve(ctx.qR, eos1, eos2);
  return fn(ResolvedFace{L, R, ctx.normal});
}

}  // namespace

NonconsContribution br2023(const FaceContext& ctx, const EosParams& eos1, const EosParams& eos2) {
  return via_context([](const ResolvedFace& f) { return br2023(f); }, ctx, eos1, eos2);
}
NonconsContribution br2015(const FaceContext& ctx, const EosParams& eos1, const EosParams& eos2) {
  return via_context([](const ResolvedFace& f) { return br2015(f); }, ctx, eos1, eos2);
}
NonconsContribution crouzet(const FaceContext& ctx, const EosParams& eos1, const EosParams& eos2) {
  return via_context([](const ResolvedFace& f) { return crouzet(f); }, ctx, eos1, eos2);
}

AlphaSlots hllc_upwind_alpha(double alphaL, double alphaR, double sStar) {
  const double jump = alphaR - alphaL;
  return {std::min(sStar, 0.0) * jump, -std::max(sStar, 0.0) * jump};
}

AlphaSlots hllc_upwind_alpha(const FaceContext& ctx, double sStar) {
  return hllc_upwind_alpha(ctx.qL[kAlpha1], ctx.qR[kAlpha1], sStar);
}

PcConsistencyReport pc_consistency_check(NonconsVariant v, const std::vector<FaceContext>& samples,
                                         const EosParams& eos1, const EosParams& eos2) {
  PcConsistencyReport rep;
  for (const auto& ctx : samples) {
    const ResolvedState L = resolve(ctx.qL, eos1, eos2);
    const ResolvedState R = resolve(ctx.qR, eos1, eos2);

    const auto same = noncons_contribution(v, ResolvedFace{L, L, ctx.normal});
    for (std::size_t k = 0; k < kNumVars; ++k) {
      rep.max_equal_state = std::max(rep.max_equal_state, std::abs(same.minus[k]));
    }

    const auto c = noncons_contribution(v, ResolvedFace{L, R, ctx.normal});
    const double path = avg(dot(L.w.vel, ctx.normal), dot(R.w.vel, ctx.normal)) *
                        (R.w.alpha1 - L.w.alpha1);
    const double dev = std::abs((c.minus[kAlpha1] - c.plus[kAlpha1]) - path);
    rep.max_path_deviation = std::max(rep.max_path_deviation, dev);
    ++rep.samples;
  }
  return rep;
}

}  // namespace sixeq
