#pragma once

namespace sixeq {

/// Stiffened-gas constants of one phase: p = (gamma-1) rho (e - eta) - gamma pi_inf.
struct EosParams {
  double gamma = 1.4;
  double pi_inf = 0.0;  // Pa
  double eta = 0.0;     // J/kg

  /// Throws InvalidInput unless gamma > 1 and pi_inf >= 0 (all finite).
  void validate() const;
  bool operator==(const EosParams&) const = default;
};

// The three phasic laws below never clamp: admissibility (p + pi_inf > 0) is
// the caller's business, except for sound_speed which needs it to exist.

double pressure(const EosParams& eos, double rho, double e);

double internal_energy(const EosParams& eos, double rho, double p);

/// sqrt(gamma (p + pi_inf) / rho). Throws InadmissibleState when p + pi_inf <= 0.
double sound_speed(const EosParams& eos, double rho, double p);

/// Pressure of a two-phase mixture at mechanical equilibrium, from the mixture
/// specific internal energy e_mix (rho e = a1 rho1 e1 + a2 rho2 e2).
/// alpha1 may sit on the closed interval [0, 1] (single-phase limits).
double mixture_pressure(const EosParams& eos1, const EosParams& eos2, double alpha1,
                        double rho1, double rho2, double e_mix);

}  // namespace sixeq
