#pragma once
// Shared helpers for the unit tests: seeded samplers and tolerance checks.
#include <cmath>
#include <random>

#include "sixeq/eos.hpp"
#include "sixeq/state.hpp"

namespace sixeq::testing {

inline bool rel_close(double a, double b, double tol, double floor = 1e-300) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), floor});
}

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(unsigned long long seed) : rng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

  // Ideal gas or stiffened gas with a water-like pi.
  EosParams eos(bool stiffened) {
    EosParams e;
    e.gamma = uniform(1.1, stiffened ? 6.0 : 1.8);
    e.pi_inf = stiffened ? log_uniform(1e6, 1e10) : 0.0;
    e.eta = 0.0;
    return e;
  }

  PrimitiveState primitive(const EosParams& e1, const EosParams& e2, bool with_v = false) {
    PrimitiveState w;
    w.alpha1 = uniform(0.01, 0.99);
    w.rho1 = log_uniform(0.1, 2000.0);
    w.rho2 = log_uniform(0.1, 2000.0);
    w.vel = {uniform(-50.0, 50.0), with_v ? uniform(-50.0, 50.0) : 0.0};
    // pressures in (-pi, ...) kept well inside the admissible range
    w.p1 = log_uniform(1e3, 1e9) - 0.5 * e1.pi_inf;
    w.p2 = log_uniform(1e3, 1e9) - 0.5 * e2.pi_inf;
    return w;
  }
};

// Stiffened draws: pi below the pressures so p* is well conditioned relative to itself.
struct RelaxDraw {
  EosParams e1, e2;
  PrimitiveState w;
};
inline RelaxDraw relaxation_draw(Sampler& s, bool stiff) {
  RelaxDraw d;
  d.e1 = {s.uniform(1.1, stiff ? 6.0 : 1.8), stiff ? s.log_uniform(1e5, 1e9) : 0.0, 0.0};
  d.e2 = {s.uniform(1.1, 1.8), 0.0, 0.0};
  d.w.alpha1 = s.uniform(0.01, 0.99);
  d.w.rho1 = s.log_uniform(0.1, 2000.0);
  d.w.rho2 = s.log_uniform(0.1, 100.0);
  d.w.vel = {s.uniform(-100.0, 100.0), 0.0};
  d.w.p1 = s.log_uniform(1e4, 1e9);
  d.w.p2 = s.log_uniform(1e4, 1e9);
  return d;
}

}  // namespace sixeq::testing
