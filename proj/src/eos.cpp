#include "sixeq/eos.hpp"

#include <cmath>
#include <string>

#include "sixeq/error.hpp"

namespace sixeq {
namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::InvalidInput, std::string("non-finite ") + what);
  }
}

void require_positive_density(double rho) {
  require_finite(rho, "density");
  if (rho <= 0.0) {
    throw Error(ErrorKind::InvalidInput, "density must be positive, got " + std::to_string(rho));
  }
}

}  // namespace

void EosParams::validate() const {
  require_finite(gamma, "gamma");
  require_finite(pi_inf, "pi_inf");
  require_finite(eta, "eta");
  if (gamma <= 1.0) {
    throw Error(ErrorKind::InvalidInput, "gamma must exceed 1, got " + std::to_string(gamma));
  }
  if (pi_inf < 0.0) {
    throw Error(ErrorKind::InvalidInput, "pi_inf must be non-negative, got " + std::to_string(pi_inf));
  }
}

double pressure(const EosParams& eos, double rho, double e) {
  require_positive_density(rho);
  require_finite(e, "internal energy");
  return (eos.gamma - 1.0) * rho * (e - eos.eta) - eos.gamma * eos.pi_inf;
}

double internal_energy(const EosParams& eos, double rho, double p) {
  require_positive_density(rho);
  require_finite(p, "pressure");
  return (p + eos.gamma * eos.pi_inf) / ((eos.gamma - 1.0) * rho) + eos.eta;
}

double sound_speed(const EosParams& eos, double rho, double p) {
  require_positive_density(rho);
  require_finite(p, "pressure");
  const double shifted = p + eos.pi_inf;
  if (shifted <= 0.0) {
    throw Error(ErrorKind::InadmissibleState,
                "p + pi_inf = " + std::to_string(shifted) + " <= 0, hyperbolicity lost");
  }
  return std::sqrt(eos.gamma * shifted / rho);
}

double mixture_pressure(const EosParams& eos1, const EosParams& eos2, double alpha1,
                        double rho1, double rho2, double e_mix) {
  require_finite(alpha1, "volume fraction");
  require_finite(e_mix, "mixture internal energy");
  if (alpha1 < 0.0 || alpha1 > 1.0) {
    throw Error(ErrorKind::InvalidInput, "volume fraction outside [0, 1]");
  }
  const double alpha2 = 1.0 - alpha1;
  // A vanishing phase contributes nothing, whatever its density.
  const double m1 = alpha1 > 0.0 ? alpha1 * rho1 : 0.0;
  const double m2 = alpha2 > 0.0 ? alpha2 * rho2 : 0.0;
  if (alpha1 > 0.0) require_positive_density(rho1);
  if (alpha2 > 0.0) require_positive_density(rho2);

  const double rho_e = (m1 + m2) * e_mix;
  const double g1 = eos1.gamma - 1.0;
  const double g2 = eos2.gamma - 1.0;
  const double offset = m1 * eos1.eta + m2 * eos2.eta;
  const double stiff = alpha1 * eos1.gamma * eos1.pi_inf / g1 + alpha2 * eos2.gamma * eos2.pi_inf / g2;
  const double denom = alpha1 / g1 + alpha2 / g2;
  if (!(denom > 0.0)) {
    throw Error(ErrorKind::Internal, "degenerate mixture pressure denominator");
  }
  return (rho_e - offset - stiff) / denom;
}

}  // namespace sixeq
