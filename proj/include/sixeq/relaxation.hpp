#pragma once

#include <span>

#include "sixeq/state.hpp"

namespace sixeq {

struct RelaxationResult {
  double pStar = 0.0;
  double alpha1Star = 0.0;
  ConservedState qStar;
};

/// Coefficients of a p^2 + b p + c = 0 for the equilibrium pressure.
struct RelaxationQuadratic {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double pI = 0.0;
};

/// Impedance-weighted mean (Z2 p1 + Z1 p2) / (Z1 + Z2) with Z_k = rho_k c_k.
double interfacial_pressure(const PrimitiveState& w, const EosParams& eos1, const EosParams& eos2);

RelaxationQuadratic relaxation_quadratic(const PrimitiveState& w, const EosParams& eos1,
                                         const EosParams& eos2);

/// Equilibrium volume fraction reached at pressure p from the pre-state w.
double equilibrium_alpha1(const PrimitiveState& w, const EosParams& eos1, double pI, double p);

/// Instantaneous pressure relaxation of one cell. Masses and momentum are
/// copied bitwise; the phasic energies exchange -1/2 (pI + p*) d(alpha1).
/// Throws RelaxationFailure when no admissible root exists and Positivity
/// when the root leaves alpha1 outside (0, 1).
RelaxationResult relax_pressure(const ConservedState& q0, const EosParams& eos1,
                                const EosParams& eos2);

/// Cellwise relax_pressure. On failure the thrown Error carries a
/// FailureRecord whose `cell` is the lowest failing index.
void relax_field(std::span<ConservedState> cells, const EosParams& eos1, const EosParams& eos2);

}  // namespace sixeq
