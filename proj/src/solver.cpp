#include "sixeq/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "sixeq/relaxation.hpp"
#include "sixeq/waveprop.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sixeq {

const char* to_string(FluxKind f) noexcept {
  switch (f) {
    case FluxKind::Rusanov: return "Rusanov";
    case FluxKind::Hllc: return "HLLC";
    case FluxKind::HllcWavePropagation: return "HLLC-WP";
  }
  return "?";
}

FluxKind parse_flux(const std::string& name) {
  std::string key;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  if (key == "rusanov") return FluxKind::Rusanov;
  if (key == "hllc") return FluxKind::Hllc;
  if (key == "hllcwp" || key == "wavepropagation" || key == "hllcwavepropagation") {
    return FluxKind::HllcWavePropagation;
  }
  throw Error(ErrorKind::Config,
              "unknown flux '" + name + "' (expected Rusanov, HLLC or HLLC-WP)");
}

void SchemeConfig::validate() const {
  if (!std::isfinite(courant) || courant <= 0.0 || courant > 1.0) {
    throw Error(ErrorKind::Config, "courant must lie in (0, 1], got " + std::to_string(courant));
  }
  if (alpha_floor) {
    const double e = *alpha_floor;
    if (!std::isfinite(e) || e <= 0.0 || e >= 0.5) {
      throw Error(ErrorKind::Config, "alpha_floor must lie in (0, 0.5)");
    }
  }
  if (threads < 0) throw Error(ErrorKind::Config, "threads must be >= 0");
}

std::string SchemeConfig::label() const {
  if (flux == FluxKind::HllcWavePropagation) return "HLLC-WP";
  return std::string(to_string(flux)) + "+" + to_string(noncons);
}

bool SchemeConfig::known_fragile() const {
  return flux == FluxKind::Hllc && noncons == NonconsVariant::Crouzet;
}

Grid Grid::make(const RiemannCase& c, std::size_t nx, std::size_t ny) {
  c.validate();
  if (nx == 0) throw Error(ErrorKind::InvalidInput, "grid needs at least one cell");
  Grid g;
  g.dim = c.dim;
  g.nx = nx;
  g.ny = c.dim == 2 ? (ny == 0 ? nx : ny) : 1;
  g.x_lo = c.x_lo;
  g.x_hi = c.x_hi;
  g.y_lo = c.y_lo;
  g.y_hi = c.y_hi;
  g.bc.fill(c.boundary);
  g.cells.assign(g.px() * g.py(), ConservedState{});
  for (std::size_t j = 0; j < g.ny; ++j) {
    for (std::size_t i = 0; i < g.nx; ++i) {
      g.cell(static_cast<long>(i), static_cast<long>(j)) =
          to_conserved(c.initial_state(g.xc(i), g.yc(j)), c.eos1, c.eos2);
    }
  }
  apply_boundary(g);
  return g;
}

namespace {

ConservedState ghost_of(const ConservedState& q, Boundary b, std::size_t mom_slot) {
  ConservedState out = q;
  if (b == Boundary::Reflective) out[mom_slot] = -out[mom_slot];
  return out;
}

}  // namespace

void apply_boundary(Grid& g) {
  const long nx = static_cast<long>(g.nx);
  const long ny = static_cast<long>(g.ny);
  for (long j = 0; j < ny; ++j) {
    g.cell(-1, j) = ghost_of(g.cell(0, j), g.bc[0], kMomX);
    g.cell(nx, j) = ghost_of(g.cell(nx - 1, j), g.bc[1], kMomX);
  }
  if (g.dim != 2) return;
  for (long i = -1; i <= nx; ++i) {
    g.cell(i, -1) = ghost_of(g.cell(i, 0), g.bc[2], kMomY);
    g.cell(i, ny) = ghost_of(g.cell(i, ny - 1), g.bc[3], kMomY);
  }
}

double compute_dt(const Grid& g, const EosParams& eos1, const EosParams& eos2, double courant) {
  double smax = 0.0;
  for (std::size_t j = 0; j < g.ny; ++j) {
    for (std::size_t i = 0; i < g.nx; ++i) {
      const ResolvedState r =
          resolve(g.cell(static_cast<long>(i), static_cast<long>(j)), eos1, eos2);
      double s = std::abs(r.w.vel.x) + r.cf;
      if (g.dim == 2) s = std::max(s, std::abs(r.w.vel.y) + r.cf);
      smax = std::max(smax, s);
    }
  }
  const double h = g.dim == 2 ? std::min(g.dx(), g.dy()) : g.dx();
  const double dt = courant * h / (g.dim * smax);
  if (!std::isfinite(dt) || dt <= 0.0) {
    throw Error(ErrorKind::InvalidInput, "non-finite or zero wave speed in compute_dt");
  }
  return dt;
}

const char* ledger_slot_name(std::size_t k) {
  static const char* names[kLedgerSlots] = {"m1", "m2", "mom_x", "mom_y", "energy"};
  return k < kLedgerSlots ? names[k] : "?";
}

namespace {

std::array<long double, kLedgerSlots> ledger_slots(const StateVector& q) {
  return {q[kMass1], q[kMass2], q[kMomX], q[kMomY],
          static_cast<long double>(q[kEnergy1]) + q[kEnergy2]};
}

void sum_totals(const Grid& g, std::array<long double, kLedgerSlots>& tot,
                std::array<long double, kLedgerSlots>& mag) {
  tot.fill(0.0L);
  mag.fill(0.0L);
  for (std::size_t j = 0; j < g.ny; ++j) {
    for (std::size_t i = 0; i < g.nx; ++i) {
      const auto s = ledger_slots(g.cell(static_cast<long>(i), static_cast<long>(j)));
      for (std::size_t k = 0; k < kLedgerSlots; ++k) {
        tot[k] += s[k];
        mag[k] += std::fabs(s[k]);
      }
    }
  }
  const long double vol = g.cell_volume();
  for (std::size_t k = 0; k < kLedgerSlots; ++k) {
    tot[k] *= vol;
    mag[k] *= vol;
  }
}

}  // namespace

void ConservationLedger::reset(const Grid& g) {
  sum_totals(g, initial, magnitude);
  current = initial;
  outflow.fill(0.0L);
  outflow_abs.fill(0.0L);
}

void ConservationLedger::record_totals(const Grid& g) {
  std::array<long double, kLedgerSlots> mag{};
  sum_totals(g, current, mag);
  for (std::size_t k = 0; k < kLedgerSlots; ++k) magnitude[k] = std::max(magnitude[k], mag[k]);
}

std::array<double, kLedgerSlots> ConservationLedger::relative_errors() const {
  std::array<double, kLedgerSlots> out{};
  for (std::size_t k = 0; k < kLedgerSlots; ++k) {
    const long double scale = magnitude[k] + outflow_abs[k];
    const long double err = std::fabs(current[k] - initial[k] + outflow[k]);
    out[k] = scale > 0.0L ? static_cast<double>(err / scale) : static_cast<double>(err);
  }
  return out;
}

double ConservationLedger::max_relative_error() const {
  const auto e = relative_errors();
  return *std::max_element(e.begin(), e.end());
}

CellFields cell_fields(const ConservedState& q, const EosParams& eos1, const EosParams& eos2) {
  const ResolvedState r = resolve(q, eos1, eos2);
  CellFields f{};
  f.alpha1 = r.w.alpha1;
  f.rho1 = r.w.rho1;
  f.rho2 = r.w.rho2;
  f.rho = r.rho;
  f.u = r.w.vel.x;
  f.v = r.w.vel.y;
  f.p1 = r.w.p1;
  f.p2 = r.w.p2;
  f.pbar = r.pbar;
  f.e1 = internal_energy(eos1, r.w.rho1, r.w.p1);
  f.e2 = internal_energy(eos2, r.w.rho2, r.w.p2);
  f.E_mix = (q[kEnergy1] + q[kEnergy2]) / r.rho;
  f.c_frozen = r.cf;
  f.c_wood = wood_sound_speed(r.w, eos1, eos2);
  return f;
}

Solver::Solver(Grid grid, const EosParams& eos1, const EosParams& eos2, SchemeConfig cfg)
    : grid_(std::move(grid)), eos1_(eos1), eos2_(eos2), cfg_(cfg) {
  cfg_.validate();
  eos1_.validate();
  eos2_.validate();
  apply_boundary(grid_);
  ledger_.reset(grid_);
}

Solver::Solver(const RiemannCase& c, SchemeConfig cfg, std::size_t nx, std::size_t ny)
    : Solver(Grid::make(c, nx, ny), c.eos1, c.eos2, cfg) {}

double Solver::compute_dt() const { return sixeq::compute_dt(grid_, eos1_, eos2_, cfg_.courant); }

Snapshot Solver::snapshot() const { return Snapshot{time_, steps_, eos1_, eos2_, grid_}; }

void Solver::fail(ErrorKind kind, std::size_t padded, const std::string& field,
                  const std::string& detail) const {
  FailureRecord rec;
  rec.step = steps_ + 1;
  rec.time = time_;
  const std::size_t pi = padded % grid_.px();
  const std::size_t pj = padded / grid_.px();
  rec.i = pi == 0 ? 0 : std::min(pi - 1, grid_.nx - 1);
  rec.j = grid_.dim == 2 ? (pj == 0 ? 0 : std::min(pj - 1, grid_.ny - 1)) : 0;
  rec.cell = rec.i + grid_.nx * rec.j;
  rec.field = field;
  rec.scheme = cfg_.label();
  rec.detail = detail;
  std::ostringstream msg;
  msg << to_string(kind) << " at step " << rec.step << " (t = " << rec.time << "), cell "
      << rec.i;
  if (grid_.dim == 2) msg << "," << rec.j;
  msg << ", field " << field << ", scheme " << rec.scheme;
  if (!detail.empty()) msg << ": " << detail;
  throw Error(kind, msg.str(), rec);
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Lowest failing index seen by any thread, plus what went wrong there.
struct FirstFailure {
  std::size_t index = kNone;
  ErrorKind kind = ErrorKind::Internal;
  std::string field;
  std::string detail;

  void offer(std::size_t i, ErrorKind k, const std::string& f, const std::string& d) {
#pragma omp critical(sixeq_first_failure)
    {
      if (i < index) {
        index = i;
        kind = k;
        field = f;
        detail = d;
      }
    }
  }
};

void face_kernel(const ResolvedState& L, const ResolvedState& R, Vec2 n, const SchemeConfig& cfg,
                 StateVector& toLeft, StateVector& toRight) {
  const ResolvedFace f{L, R, n};
  switch (cfg.flux) {
    case FluxKind::Rusanov: {
      const StateVector F = rusanov_flux(f);
      const NonconsContribution T = noncons_contribution(cfg.noncons, f);
      toLeft = F + T.minus;
      toRight = -(F + T.plus);
      return;
    }
    case FluxKind::Hllc: {
      const HllcWaveFan fan = hllc_wave_fan(f);
      const StateVector F = hllc_flux(f, fan);
      NonconsContribution T = noncons_contribution(cfg.noncons, f);
      const AlphaSlots a = hllc_upwind_alpha(L.w.alpha1, R.w.alpha1, fan.sStar);
      T.minus[kAlpha1] = a.minus;
      T.plus[kAlpha1] = a.plus;
      toLeft = F + T.minus;
      toRight = -(F + T.plus);
      return;
    }
    case FluxKind::HllcWavePropagation: {
      const Fluctuations fl = hllc_fluctuations(hllc_wave_fan(f), L.q, R.q);
      toLeft = fl.aMinus;
      toRight = fl.aPlus;
      return;
    }
  }
}

int thread_count(const SchemeConfig& cfg) {
#ifdef _OPENMP
  return cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#else
  (void)cfg;
  return 1;
#endif
}

std::string describe(const ConservedState& q) {
  std::ostringstream s;
  s.precision(17);
  s << "q = [";
  for (std::size_t k = 0; k < kNumVars; ++k) s << (k ? ", " : "") << q[k];
  s << "]";
  return s.str();
}

}  // namespace

void Solver::step(double dt) {
  if (!std::isfinite(dt) || dt <= 0.0) {
    throw Error(ErrorKind::InvalidInput, "time step must be positive and finite");
  }
  Grid& g = grid_;
  apply_boundary(g);
  const int nt = thread_count(cfg_);
  const long nx = static_cast<long>(g.nx);
  const long ny = static_cast<long>(g.ny);
  const bool two_d = g.dim == 2;
  const std::size_t ncell = g.cells.size();

  resolved_.resize(ncell);
  {
    FirstFailure ff;
#pragma omp parallel for num_threads(nt) schedule(static)
    for (long k = 0; k < static_cast<long>(ncell); ++k) {
      const char* bad = nullptr;
      if (!try_resolve(g.cells[k], eos1_, eos2_, resolved_[k], &bad)) {
        ff.offer(static_cast<std::size_t>(k), ErrorKind::InadmissibleState, bad, describe(g.cells[k]));
      }
    }
    if (ff.index != kNone) fail(ff.kind, ff.index, ff.field, ff.detail);
  }

  // x faces: face f of row j sits between cells f-1 and f.
  const long nfx = nx + 1;
  xl_.resize(static_cast<std::size_t>(nfx * ny));
  xr_.resize(xl_.size());
  {
    FirstFailure ff;
#pragma omp parallel for num_threads(nt) schedule(static)
    for (long k = 0; k < nfx * ny; ++k) {
      const long f = k % nfx;
      const long j = k / nfx;
      try {
        face_kernel(resolved_[g.at(f - 1, j)], resolved_[g.at(f, j)], {1.0, 0.0}, cfg_, xl_[k],
                    xr_[k]);
      } catch (const Error& e) {
        ff.offer(g.at(f - 1, j), e.kind(), "x-face", e.what());
      }
    }
    if (ff.index != kNone) fail(ff.kind, ff.index, ff.field, ff.detail);
  }

  // y faces: face f of column i sits between cells (i, f-1) and (i, f).
  const long nfy = ny + 1;
  if (two_d) {
    yl_.resize(static_cast<std::size_t>(nfy * nx));
    yr_.resize(yl_.size());
    FirstFailure ff;
#pragma omp parallel for num_threads(nt) schedule(static)
    for (long k = 0; k < nfy * nx; ++k) {
      const long i = k % nx;
      const long f = k / nx;
      try {
        face_kernel(resolved_[g.at(i, f - 1)], resolved_[g.at(i, f)], {0.0, 1.0}, cfg_, yl_[k],
                    yr_[k]);
      } catch (const Error& e) {
        ff.offer(g.at(i, f - 1), e.kind(), "y-face", e.what());
      }
    }
    if (ff.index != kNone) fail(ff.kind, ff.index, ff.field, ff.detail);
  }

  const double lx = dt / g.dx();
  const double ly = dt / g.dy();
  next_ = g.cells;
  {
    FirstFailure ff;
#pragma omp parallel for num_threads(nt) schedule(static)
    for (long k = 0; k < nx * ny; ++k) {
      const long i = k % nx;
      const long j = k / nx;
      const std::size_t p = g.at(i, j);
      StateVector inc = lx * (xl_[(i + 1) + nfx * j] + xr_[i + nfx * j]);
      if (two_d) inc += ly * (yl_[i + nx * (j + 1)] + yr_[i + nx * j]);
      ConservedState q = g.cells[p] - inc;

      ResolvedState scratch;
      const char* bad = nullptr;
      if (!try_resolve(q, eos1_, eos2_, scratch, &bad)) {
        ff.offer(p, ErrorKind::Positivity, bad, "after hyperbolic step, " + describe(q));
        continue;
      }
      if (cfg_.relax) {
        try {
          q = relax_pressure(q, eos1_, eos2_).qStar;
        } catch (const Error& e) {
          ff.offer(p, e.kind(), "pressure", e.what());
          continue;
        }
      }
      next_[p] = q;
    }
    if (ff.index != kNone) fail(ff.kind, ff.index, ff.field, ff.detail);
  }

  std::size_t clamps = 0;
  if (cfg_.alpha_floor) {
    const double eps = *cfg_.alpha_floor;
    for (long j = 0; j < ny; ++j) {
      for (long i = 0; i < nx; ++i) {
        double& a = next_[g.at(i, j)][kAlpha1];
        const double c = std::clamp(a, eps, 1.0 - eps);
        if (c != a) {
          a = c;
          ++clamps;
        }
      }
    }
  }

  if (cfg_.relax || cfg_.alpha_floor) {
    FirstFailure ff;
#pragma omp parallel for num_threads(nt) schedule(static)
    for (long k = 0; k < nx * ny; ++k) {
      const std::size_t p = g.at(k % nx, k / nx);
      ResolvedState scratch;
      const char* bad = nullptr;
      if (!try_resolve(next_[p], eos1_, eos2_, scratch, &bad)) {
        ff.offer(p, ErrorKind::Positivity, bad, "after relaxation, " + describe(next_[p]));
      }
    }
    if (ff.index != kNone) fail(ff.kind, ff.index, ff.field, ff.detail);
  }

  // Boundary flux integrals. Wave propagation telescopes to F(q_last) - F(q_first)
  // across interior faces, which is added back here.
  const bool wp = cfg_.flux == FluxKind::HllcWavePropagation;
  std::array<long double, kLedgerSlots> out{}, out_abs{};
  auto add = [&](const StateVector& v, double w) {
    const auto s = ledger_slots(v);
    for (std::size_t k = 0; k < kLedgerSlots; ++k) {
      out[k] += w * s[k];
      out_abs[k] += std::fabs(w * s[k]);
    }
  };
  for (long j = 0; j < ny; ++j) {
    const double w = dt * g.dy();
    add(xl_[nx + nfx * j], w);
    add(xr_[0 + nfx * j], w);
    if (wp) {
      add(physical_flux(resolved_[g.at(nx - 1, j)], {1.0, 0.0}), w);
      add(physical_flux(resolved_[g.at(0, j)], {1.0, 0.0}), -w);
    }
  }
  if (two_d) {
    for (long i = 0; i < nx; ++i) {
      const double w = dt * g.dx();
      add(yl_[i + nx * ny], w);
      add(yr_[i], w);
      if (wp) {
        add(physical_flux(resolved_[g.at(i, ny - 1)], {0.0, 1.0}), w);
        add(physical_flux(resolved_[g.at(i, 0)], {0.0, 1.0}), -w);
      }
    }
  }

  g.cells.swap(next_);
  apply_boundary(g);
  time_ += dt;
  ++steps_;
  clamps_ += clamps;
  for (std::size_t k = 0; k < kLedgerSlots; ++k) {
    ledger_.outflow[k] += out[k];
    ledger_.outflow_abs[k] += out_abs[k];
  }
  ledger_.record_totals(g);
}

void Solver::step_to(double t_target) {
  step(t_target - time_);
  time_ = t_target;
}

void step(Grid& g, const SchemeConfig& cfg, const EosParams& eos1, const EosParams& eos2,
          double dt) {
  Solver s(std::move(g), eos1, eos2, cfg);
  try {
    s.step(dt);
  } catch (...) {
    g = std::move(s.grid());
    throw;
  }
  g = std::move(s.grid());
}

namespace {

double end_cell_disturbance(const Grid& now, const Grid& init, const EosParams& eos1,
                            const EosParams& eos2) {
  double worst = 0.0;
  for (long i : {0L, static_cast<long>(now.nx) - 1}) {
    const ResolvedState a = resolve(init.cell(i), eos1, eos2);
    const ResolvedState b = resolve(now.cell(i), eos1, eos2);
    const double ps = std::abs(a.pbar) + 1e-300;
    worst = std::max(worst, std::abs(b.rho - a.rho) / a.rho);
    worst = std::max(worst, std::abs(b.pbar - a.pbar) / ps);
    worst = std::max(worst, std::abs(b.w.vel.x - a.w.vel.x) / (std::abs(a.w.vel.x) + a.cf));
  }
  return worst;
}

}  // namespace

RunResult run(const RiemannCase& c, const SchemeConfig& cfg, const RunOptions& opts) {
  c.validate();
  cfg.validate();
  std::size_t nx = opts.nx;
  if (nx == 0) {
    if (c.default_meshes.empty()) throw Error(ErrorKind::Config, "case has no default mesh");
    nx = c.default_meshes.front();
  }
  std::vector<double> times = opts.snapshot_times;
  if (times.empty()) times.push_back(c.t_final);
  std::sort(times.begin(), times.end());
  for (double t : times) {
    if (!std::isfinite(t) || t < 0.0 || t > c.t_final * (1.0 + 1e-12)) {
      throw Error(ErrorKind::Config, "snapshot time outside [0, t_final]: " + std::to_string(t));
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  Solver s(c, cfg, nx, opts.ny);
  const Grid initial = s.grid();

  RunResult res;
  res.scheme = cfg.label();
  if (cfg.known_fragile()) {
    res.warnings.push_back(res.scheme + " is known-fragile: admissibility may be lost");
  }
  try {
    for (double target : times) {
      while (s.time() < target) {
        if (opts.max_steps && s.steps() >= opts.max_steps) {
          throw Error(ErrorKind::NoConvergence,
                      "step limit " + std::to_string(opts.max_steps) + " reached");
        }
        const double dt = s.compute_dt();
        // Land exactly on the target; also absorb a sliver shorter than 1e-9 dt.
        if (s.time() + dt * (1.0 + 1e-9) >= target) {
          s.step_to(target);
        } else {
          s.step(dt);
        }
      }
      res.snapshots.push_back(s.snapshot());
    }
  } catch (const Error& e) {
    res.ok = false;
    res.error_kind = e.kind();
    res.error_message = e.what();
    res.failure = e.record();
  }

  res.last = s.snapshot();
  res.ledger = s.ledger();
  res.steps = s.steps();
  res.alpha_clamps = s.alpha_clamps();
  if (c.dim == 1 && c.boundary == Boundary::Transmissive) {
    res.boundary_disturbance = end_cell_disturbance(s.grid(), initial, c.eos1, c.eos2);
    if (res.boundary_disturbance > 1e-6) {
      std::ostringstream w;
      w << "waves reached the transmissive boundary (relative disturbance "
        << res.boundary_disturbance << ")";
      res.warnings.push_back(w.str());
    }
  }
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace sixeq
