#include "sixeq/euler_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sixeq/error.hpp"

namespace sixeq {

const char* to_string(WaveKind k) noexcept {
  return k == WaveKind::Shock ? "shock" : "rarefaction";
}

namespace {

// Everything below works with the shifted pressure P = p + pi, for which the
// stiffened gas behaves like an ideal gas with the same gamma.
struct Side {
  double rho, u, P, g, pi, c;
};

Side make_side(const EulerState& s, const EosParams& e) {
  if (!(s.rho > 0.0) || !std::isfinite(s.u)) {
    throw Error(ErrorKind::InvalidInput, "Euler state needs rho > 0 and finite u");
  }
  const double P = s.p + e.pi_inf;
  if (!(P > 0.0)) throw Error(ErrorKind::InadmissibleState, "Euler state has p + pi <= 0");
  return {s.rho, s.u, P, e.gamma, e.pi_inf, std::sqrt(e.gamma * P / s.rho)};
}

// Wave curve of one side and its derivative, at star pressure p.
void wave_curve(const Side& s, double p, double& f, double& df) {
  const double P = p + s.pi;
  const double g = s.g;
  if (P > s.P) {
    const double A = 2.0 / ((g + 1.0) * s.rho);
    const double B = (g - 1.0) / (g + 1.0) * s.P;
    const double q = std::sqrt(A / (P + B));
    f = (P - s.P) * q;
    df = q * (1.0 - 0.5 * (P - s.P) / (P + B));
  } else {
    const double z = (g - 1.0) / (2.0 * g);
    const double r = P / s.P;
    f = 2.0 * s.c / (g - 1.0) * (std::pow(r, z) - 1.0);
    df = std::pow(r, -(g + 1.0) / (2.0 * g)) / (s.rho * s.c);
  }
}

double fn(const Side& L, const Side& R, double p, double* dfp = nullptr) {
  double fl, dl, fr, dr;
  wave_curve(L, p, fl, dl);
  wave_curve(R, p, fr, dr);
  if (dfp) *dfp = dl + dr;
  return fl + fr + (R.u - L.u);
}

}  // namespace

double euler_pressure_function(const EulerState& l, const EulerState& r, const EosParams& eosL,
                               const EosParams& eosR, double p) {
  return fn(make_side(l, eosL), make_side(r, eosR), p);
}

EulerFan solve_exact(const EulerState& l, const EulerState& r, const EosParams& eos) {
  return solve_exact(l, r, eos, eos);
}

EulerFan solve_exact(const EulerState& l, const EulerState& r, const EosParams& eosL,
                     const EosParams& eosR) {
  eosL.validate();
  eosR.validate();
  const Side L = make_side(l, eosL);
  const Side R = make_side(r, eosR);

  // f is increasing; at the lowest admissible pressure it must be negative.
  const double p_min = -std::min(L.pi, R.pi);
  if (fn(L, R, p_min) >= 0.0) {
    throw Error(ErrorKind::Vacuum, "initial data generate a vacuum");
  }

  double lo = p_min;
  double hi = std::max(l.p, r.p);
  for (int k = 0; fn(L, R, hi) < 0.0; ++k) {
    if (k > 200) throw Error(ErrorKind::NoConvergence, "cannot bracket the star pressure");
    hi = hi + std::max(std::abs(hi), 1.0) + (hi - lo);
  }

  // Two-rarefaction guess in shifted pressures, then safeguarded Newton.
  double p;
  if (L.g == R.g) {
    const double g = L.g;
    const double z = (g - 1.0) / (2.0 * g);
    const double num = L.c + R.c - 0.5 * (g - 1.0) * (R.u - L.u);
    const double den = L.c / std::pow(L.P, z) + R.c / std::pow(R.P, z);
    const double shift = 0.5 * (L.pi + R.pi);
    p = num > 0.0 ? std::pow(num / den, 1.0 / z) - shift : 0.5 * (lo + hi);
  } else {
    p = 0.5 * (l.p + r.p) - 0.125 * (R.u - L.u) * (L.rho + R.rho) * (L.c + R.c);
  }
  if (!(p > lo && p < hi)) p = 0.5 * (lo + hi);

  EulerFan fan;
  int it = 0;
  double f = 0.0;
  for (; it < 100; ++it) {
    double df = 0.0;
    f = fn(L, R, p, &df);
    if (f == 0.0) break;
    if (f < 0.0) lo = p; else hi = p;
    double next = p - f / df;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    const double change = std::abs(next - p);
    p = next;
    if (change <= 1e-15 * (std::abs(p) + std::max(L.pi, R.pi)) || hi - lo <= 0.0) {
      f = fn(L, R, p);
      break;
    }
  }
  if (it >= 100) {
    throw Error(ErrorKind::NoConvergence, "Euler star pressure did not converge in 100 iterations");
  }

  fan.left = l;
  fan.right = r;
  fan.eosL = eosL;
  fan.eosR = eosR;
  fan.iterations = it + 1;
  fan.residual = std::abs(f);
  fan.pStar = p;
  double fl, fr, d;
  wave_curve(L, p, fl, d);
  wave_curve(R, p, fr, d);
  fan.uStar = 0.5 * (L.u + R.u) + 0.5 * (fr - fl);

  auto star_side = [](const Side& s, double p_star, double u_star, bool left, double& rho_star,
                      WaveKind& kind, double& head, double& tail) {
    const double g = s.g;
    const double Ps = p_star + s.pi;
    const double ratio = Ps / s.P;
    const double sgn = left ? -1.0 : 1.0;
    if (Ps > s.P) {
      kind = WaveKind::Shock;
      const double gm = (g - 1.0) / (g + 1.0);
      rho_star = s.rho * (ratio + gm) / (gm * ratio + 1.0);
      head = tail = s.u + sgn * s.c *
                              std::sqrt((g + 1.0) / (2.0 * g) * ratio + (g - 1.0) / (2.0 * g));
    } else {
      kind = WaveKind::Rarefaction;
      rho_star = s.rho * std::pow(ratio, 1.0 / g);
      const double c_star = s.c * std::pow(ratio, (g - 1.0) / (2.0 * g));
      head = s.u + sgn * s.c;
      tail = u_star + sgn * c_star;
    }
  };
  star_side(L, p, fan.uStar, true, fan.rhoStarL, fan.leftWave, fan.leftHead, fan.leftTail);
  star_side(R, p, fan.uStar, false, fan.rhoStarR, fan.rightWave, fan.rightHead, fan.rightTail);
  return fan;
}

EulerState EulerFan::sample(double xi) const {
  const bool leftOfContact = xi <= uStar;
  const EulerState& s = leftOfContact ? left : right;
  const EosParams& e = leftOfContact ? eosL : eosR;
  const double g = e.gamma;
  const double P = s.p + e.pi_inf;
  const double c = std::sqrt(g * P / s.rho);
  if (leftOfContact) {
    if (leftWave == WaveKind::Shock) {
      return xi < leftHead ? s : EulerState{rhoStarL, uStar, pStar};
    }
    if (xi < leftHead) return s;
    if (xi > leftTail) return EulerState{rhoStarL, uStar, pStar};
    const double w = 2.0 / (g + 1.0) + (g - 1.0) / ((g + 1.0) * c) * (s.u - xi);
    return EulerState{s.rho * std::pow(w, 2.0 / (g - 1.0)),
                      2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * s.u + xi),
                      P * std::pow(w, 2.0 * g / (g - 1.0)) - e.pi_inf};
  }
  if (rightWave == WaveKind::Shock) {
    return xi > rightHead ? s : EulerState{rhoStarR, uStar, pStar};
  }
  if (xi > rightHead) return s;
  if (xi < rightTail) return EulerState{rhoStarR, uStar, pStar};
  const double w = 2.0 / (g + 1.0) - (g - 1.0) / ((g + 1.0) * c) * (s.u - xi);
  return EulerState{s.rho * std::pow(w, 2.0 / (g - 1.0)),
                    2.0 / (g + 1.0) * (-c + 0.5 * (g - 1.0) * s.u + xi),
                    P * std::pow(w, 2.0 * g / (g - 1.0)) - e.pi_inf};
}

EulerState sample(const EulerFan& fan, double xi) { return fan.sample(xi); }

}  // namespace sixeq
