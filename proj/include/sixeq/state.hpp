#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "sixeq/eos.hpp"

namespace sixeq {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Vec2&) const = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }

// Slot layout of the 6-equation vector q = (a1, a1 rho1, a2 rho2, rho u, a1 rho1 E1, a2 rho2 E2).
// Momentum always has two slots; 1D grids keep the y slot at zero.
enum Var : std::size_t {
  kAlpha1 = 0,
  kMass1 = 1,
  kMass2 = 2,
  kMomX = 3,
  kMomY = 4,
  kEnergy1 = 5,
  kEnergy2 = 6,
};
inline constexpr std::size_t kNumVars = 7;

const char* var_name(std::size_t slot);

/// State-shaped vector: conserved states, numerical fluxes, fluctuations and
/// non-conservative contributions all share this layout.
struct StateVector {
  std::array<double, kNumVars> v{};

  double& operator[](std::size_t k) { return v[k]; }
  double operator[](std::size_t k) const { return v[k]; }

  double alpha1() const { return v[kAlpha1]; }
  double m1() const { return v[kMass1]; }
  double m2() const { return v[kMass2]; }
  Vec2 mom() const { return {v[kMomX], v[kMomY]}; }
  double E1c() const { return v[kEnergy1]; }
  double E2c() const { return v[kEnergy2]; }

  StateVector& operator+=(const StateVector& o) {
    for (std::size_t k = 0; k < kNumVars; ++k) v[k] += o.v[k];
    return *this;
  }
  StateVector& operator-=(const StateVector& o) {
    for (std::size_t k = 0; k < kNumVars; ++k) v[k] -= o.v[k];
    return *this;
  }
  StateVector& operator*=(double s) {
    for (auto& x : v) x *= s;
    return *this;
  }
  bool operator==(const StateVector&) const = default;
};

inline StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
inline StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
inline StateVector operator*(double s, StateVector a) { return a *= s; }
inline StateVector operator-(StateVector a) { return a *= -1.0; }

using ConservedState = StateVector;

struct PrimitiveState {
  double alpha1 = 0.5;
  double rho1 = 1.0;
  double rho2 = 1.0;
  Vec2 vel{};
  double p1 = 1.0;
  double p2 = 1.0;

  bool operator==(const PrimitiveState&) const = default;
};

struct MixtureDiagnostics {
  double rho = 0.0;
  double pbar = 0.0;
  double Y1 = 0.0;
  double c_frozen = 0.0;
  double c_wood = 0.0;
  double E_mix = 0.0;  // specific total energy (E1c + E2c) / rho
};

/// A conserved state together with everything the face kernels read from it,
/// derived once per cell per step.
struct ResolvedState {
  ConservedState q;
  PrimitiveState w;
  double alpha2 = 0.0;
  double rho = 0.0;
  double Y1 = 0.0;
  double Y2 = 0.0;
  double pbar = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double cf = 0.0;
};

/// Non-throwing resolution used in hot loops. On failure returns false and
/// names the offending field in `bad_field`.
bool try_resolve(const ConservedState& q, const EosParams& eos1, const EosParams& eos2,
                 ResolvedState& out, const char** bad_field) noexcept;

/// Throws InadmissibleState naming the offending field.
ResolvedState resolve(const ConservedState& q, const EosParams& eos1, const EosParams& eos2);

PrimitiveState to_primitive(const ConservedState& q, const EosParams& eos1, const EosParams& eos2);
ConservedState to_conserved(const PrimitiveState& w, const EosParams& eos1, const EosParams& eos2);

double frozen_sound_speed(const PrimitiveState& w, const EosParams& eos1, const EosParams& eos2);
double wood_sound_speed(const PrimitiveState& w, const EosParams& eos1, const EosParams& eos2);
MixtureDiagnostics mixture_diagnostics(const ConservedState& q, const EosParams& eos1,
                                       const EosParams& eos2);

/// Throws InadmissibleState unless 0 < alpha1 < 1, rho_k > 0, p_k + pi_k > 0.
void check_admissible(const PrimitiveState& w, const EosParams& eos1, const EosParams& eos2);

}  // namespace sixeq
