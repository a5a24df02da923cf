#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sixeq/cases.hpp"
#include "sixeq/error.hpp"
#include "sixeq/noncons.hpp"

namespace sixeq {

enum class FluxKind { Rusanov, Hllc, HllcWavePropagation };

const char* to_string(FluxKind f) noexcept;
/// Accepts "Rusanov", "HLLC", "HLLC-WP" (also "wave-propagation", "hllc_wp").
FluxKind parse_flux(const std::string& name);

struct SchemeConfig {
  FluxKind flux = FluxKind::Rusanov;
  NonconsVariant noncons = NonconsVariant::BR2023;  // ignored by HLLC-WP
  double courant = 0.9;
  bool relax = false;
  std::optional<double> alpha_floor;  // clamp alpha1 to [eps, 1 - eps] after relaxation
  int threads = 0;                    // 0: OpenMP default

  void validate() const;
  /// "Rusanov+BR2023", "HLLC+Crouzet", "HLLC-WP"
  std::string label() const;
  /// HLLC + Crouzet is allowed but expected to break on the low-density case.
  bool known_fragile() const;
};

/// Uniform grid with one ghost layer on each side of every active axis.
/// Storage is row-major over the padded index space.
struct Grid {
  int dim = 1;
  std::size_t nx = 0;
  std::size_t ny = 1;
  double x_lo = 0.0, x_hi = 1.0;
  double y_lo = 0.0, y_hi = 1.0;
  std::array<Boundary, 4> bc{};  // x-lo, x-hi, y-lo, y-hi
  std::vector<ConservedState> cells;

  static Grid make(const RiemannCase& c, std::size_t nx, std::size_t ny = 0);

  double dx() const { return (x_hi - x_lo) / static_cast<double>(nx); }
  double dy() const { return dim == 2 ? (y_hi - y_lo) / static_cast<double>(ny) : 1.0; }
  double cell_volume() const { return dx() * dy(); }
  std::size_t px() const { return nx + 2; }
  std::size_t py() const { return dim == 2 ? ny + 2 : 1; }
  std::size_t interior_count() const { return nx * ny; }

  /// Padded index of interior cell (i, j); i in [-1, nx], j in [-1, ny] reach ghosts.
  std::size_t at(long i, long j = 0) const {
    const long jj = dim == 2 ? j + 1 : 0;
    return static_cast<std::size_t>(i + 1) + px() * static_cast<std::size_t>(jj);
  }
  ConservedState& cell(long i, long j = 0) { return cells[at(i, j)]; }
  const ConservedState& cell(long i, long j = 0) const { return cells[at(i, j)]; }
  double xc(std::size_t i) const { return x_lo + (static_cast<double>(i) + 0.5) * dx(); }
  double yc(std::size_t j) const {
    return dim == 2 ? y_lo + (static_cast<double>(j) + 0.5) * dy() : 0.0;
  }
};

/// Fills ghosts: x sides first (interior rows), then y sides over the full
/// padded width, so corner ghosts come from the y sweep of x ghosts.
void apply_boundary(Grid& g);

/// dt = C min(dx, dy) / (dim max_cells max_axis(|u_axis| + c_f)).
double compute_dt(const Grid& g, const EosParams& eos1, const EosParams& eos2, double courant);

/// Slots tracked by the ledger: m1, m2, rho u, rho v, E1c + E2c.
inline constexpr std::size_t kLedgerSlots = 5;
const char* ledger_slot_name(std::size_t k);

struct ConservationLedger {
  std::array<long double, kLedgerSlots> initial{};
  std::array<long double, kLedgerSlots> current{};
  std::array<long double, kLedgerSlots> outflow{};      // time-integrated boundary flux
  std::array<long double, kLedgerSlots> outflow_abs{};  // same with |.| per term, for scaling
  std::array<long double, kLedgerSlots> magnitude{};    // max over time of sum |q| vol

  void reset(const Grid& g);
  void record_totals(const Grid& g);
  /// |current - initial + outflow| / (magnitude + outflow_abs), per slot.
  std::array<double, kLedgerSlots> relative_errors() const;
  double max_relative_error() const;
};

/// Diagnostic fields of one cell, as written to snapshots.
struct CellFields {
  double alpha1, rho1, rho2, rho, u, v, p1, p2, pbar, e1, e2, E_mix, c_frozen, c_wood;
};
CellFields cell_fields(const ConservedState& q, const EosParams& eos1, const EosParams& eos2);

struct Snapshot {
  double time = 0.0;
  std::size_t step = 0;
  EosParams eos1;
  EosParams eos2;
  Grid grid;
};

/// Owns a grid and the scratch buffers of the update. Not copyable across threads
/// while stepping; the parallelism lives inside step().
class Solver {
 public:
  Solver(Grid grid, const EosParams& eos1, const EosParams& eos2, SchemeConfig cfg);
  Solver(const RiemannCase& c, SchemeConfig cfg, std::size_t nx, std::size_t ny = 0);

  double compute_dt() const;
  /// One hyperbolic step, optional relaxation and alpha floor, then an audit.
  /// On failure throws Error with a FailureRecord and leaves the grid at time n.
  void step(double dt);
  /// Steps by t_target - time() and sets the clock to t_target exactly.
  void step_to(double t_target);

  const Grid& grid() const { return grid_; }
  Grid& grid() { return grid_; }
  double time() const { return time_; }
  std::size_t steps() const { return steps_; }
  std::size_t alpha_clamps() const { return clamps_; }
  const ConservationLedger& ledger() const { return ledger_; }
  const SchemeConfig& config() const { return cfg_; }
  const EosParams& eos1() const { return eos1_; }
  const EosParams& eos2() const { return eos2_; }
  Snapshot snapshot() const;

 private:
  Grid grid_;
  EosParams eos1_, eos2_;
  SchemeConfig cfg_;
  double time_ = 0.0;
  std::size_t steps_ = 0;
  std::size_t clamps_ = 0;
  ConservationLedger ledger_;
  std::vector<ResolvedState> resolved_;
  std::vector<StateVector> xl_, xr_, yl_, yr_;  // per-face increments to the left / right cell
  std::vector<ConservedState> next_;

  [[noreturn]] void fail(ErrorKind kind, std::size_t padded, const std::string& field,
                         const std::string& detail) const;
};

/// Free-function form: one step of `g` in place (no ledger).
void step(Grid& g, const SchemeConfig& cfg, const EosParams& eos1, const EosParams& eos2,
          double dt);

struct RunOptions {
  std::size_t nx = 0;  // 0: first default mesh of the case
  std::size_t ny = 0;
  std::vector<double> snapshot_times;  // empty: t_final only
  std::size_t max_steps = 0;           // 0: unlimited
};

struct RunResult {
  std::string scheme;
  std::vector<Snapshot> snapshots;
  Snapshot last;  // last admissible state, also on failure
  ConservationLedger ledger;
  std::size_t steps = 0;
  std::size_t alpha_clamps = 0;
  double wall_seconds = 0.0;
  double boundary_disturbance = 0.0;  // 1D transmissive runs: relative change of the end cells
  std::vector<std::string> warnings;

  bool ok = true;
  ErrorKind error_kind = ErrorKind::Internal;
  std::string error_message;
  std::optional<FailureRecord> failure;
};

/// Marches to each snapshot time, clipping dt to land on them exactly. Step
/// errors do not throw; they are recorded in the result with the state
/// reached so far. Configuration errors still throw.
RunResult run(const RiemannCase& c, const SchemeConfig& cfg, const RunOptions& opts = {});

}  // namespace sixeq
