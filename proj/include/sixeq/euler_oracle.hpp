#pragma once

#include "sixeq/eos.hpp"

namespace sixeq {

struct EulerState {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;
};

enum class WaveKind { Shock, Rarefaction };

const char* to_string(WaveKind k) noexcept;

/// Exact solution of a 1D Riemann problem for the Euler equations with a
/// stiffened-gas law on each side (the two sides may use different laws).
struct EulerFan {
  EulerState left;
  EulerState right;
  EosParams eosL;
  EosParams eosR;

  double pStar = 0.0;
  double uStar = 0.0;
  double rhoStarL = 0.0;
  double rhoStarR = 0.0;
  WaveKind leftWave = WaveKind::Rarefaction;
  WaveKind rightWave = WaveKind::Rarefaction;
  // Speeds of the outer edges. A shock has head == tail.
  double leftHead = 0.0;
  double leftTail = 0.0;
  double rightTail = 0.0;
  double rightHead = 0.0;

  int iterations = 0;
  double residual = 0.0;  // |f(pStar)|

  EulerState sample(double xi) const;
};

/// f(p) = fL(p) + fR(p) + (uR - uL); its root is the star pressure.
double euler_pressure_function(const EulerState& l, const EulerState& r, const EosParams& eosL,
                               const EosParams& eosR, double p);

EulerFan solve_exact(const EulerState& l, const EulerState& r, const EosParams& eos);
/// Throws Vacuum when the data open a vacuum, NoConvergence after 100 iterations.
EulerFan solve_exact(const EulerState& l, const EulerState& r, const EosParams& eosL,
                     const EosParams& eosR);

EulerState sample(const EulerFan& fan, double xi);

}  // namespace sixeq
