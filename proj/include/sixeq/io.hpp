#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sixeq/cases.hpp"
#include "sixeq/euler_oracle.hpp"
#include "sixeq/solver.hpp"

namespace sixeq {

// ---------------------------------------------------------------- config

/// Raw sectioned key=value document, in file order.
struct ConfigDocument {
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> sections;

  /// Sets `section.key`, replacing an existing entry.
  void set(const std::string& dotted_key, const std::string& value);
  std::optional<std::string> get(const std::string& section, const std::string& key) const;
};

struct RunConfig {
  RiemannCase problem;
  SchemeConfig scheme;
  std::size_t n_cells = 0;  // per axis; 0 = first default mesh
  std::vector<double> snapshots;
  std::string output_dir = "out";
  bool emit_plots = false;

  bool operator==(const RunConfig& o) const;
};

/// Format:
///   [case]   builtin = <name> and/or inline keys (gamma1, pi1, ..., left_p1, q1_alpha1, ...)
///   [scheme] flux, noncons, courant, relax, alpha_floor, threads
///   [run]    n_cells, snapshots (comma list), output_dir, emit_plots
/// '#' starts a comment. Unknown or duplicate keys are errors.
ConfigDocument parse_config_document(const std::string& text);
RunConfig resolve_config(const ConfigDocument& doc);
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config(const std::string& path);

/// Self-contained inline form (no builtin reference); numbers at 17 digits.
std::string serialize_config(const RunConfig& cfg);
std::string serialize_case(const RiemannCase& c);

/// Applies "section.key=value" overrides then re-resolves.
RunConfig apply_overrides(const ConfigDocument& doc,
                          const std::vector<std::pair<std::string, std::string>>& overrides);

// ---------------------------------------------------------------- snapshots

/// Column order of the CSV schema.
std::vector<std::string> snapshot_columns(int dim);

struct SnapshotTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column_index(const std::string& name) const;  // throws Io if absent
  std::vector<double> column(const std::string& name) const;
  int dim() const;
};

SnapshotTable snapshot_table(const Snapshot& snap);
void write_snapshot(const Snapshot& snap, const std::string& path);
SnapshotTable read_snapshot(const std::string& path);

// ---------------------------------------------------------------- plots

struct PlotSeries {
  std::string label;
  std::string csv_path;
};

/// Writes a matplotlib script that plots `fields` from each series (one panel
/// per field, series overlaid; 2D snapshots become one heatmap per field and
/// series). CSV paths are referenced relative to the script's directory.
void emit_plot_script(const std::vector<PlotSeries>& series, const std::vector<std::string>& fields,
                      const std::string& script_path);

// ---------------------------------------------------------------- compare

struct FieldDiff {
  double l1 = 0.0;
  double linf = 0.0;
  std::vector<double> plateau;  // |mean_a - mean_b| per window
};

struct CompareReport {
  std::map<std::string, FieldDiff> fields;
  std::vector<std::pair<double, double>> windows;
};

/// Per-field L1 (cell-volume weighted), Linf and plateau-window mean differences.
/// Throws InvalidInput on grid mismatch.
CompareReport compare_runs(const SnapshotTable& a, const SnapshotTable& b,
                           const std::vector<std::pair<double, double>>& windows = {});
std::string compare_report_json(const CompareReport& r);

// ---------------------------------------------------------------- Euler scoring

struct EulerScore {
  EulerFan fan;
  double shock_exact = 0.0, shock_numeric = 0.0, shock_error = 0.0;
  double contact_exact = 0.0, contact_numeric = 0.0, contact_error = 0.0;
  // star-region plateau means: rho (left, right), u, pbar
  double rho_star_l = 0.0, rho_star_r = 0.0, u_star = 0.0, p_star = 0.0;
  // pbar means on each side; p_star is read on the better-conditioned side
  double p_star_l = 0.0, p_star_r = 0.0;
  std::string p_star_side;
  double rho_star_l_error = 0.0, rho_star_r_error = 0.0, u_star_error = 0.0, p_star_error = 0.0;

  double max_error() const;
};

/// Reduces each side of a 1D case to its dominant phase and scores a snapshot
/// against the exact solution: shock (rightmost pbar midpoint crossing),
/// contact (alpha1 = 0.5 crossing), errors relative to the distance travelled;
/// star plateaus averaged over the middle half of each exact star region.
/// pbar is scored on the side with the smaller gamma (p* + pi_inf).
EulerScore score_against_euler(const Snapshot& snap, const RiemannCase& c);
std::string euler_score_json(const EulerScore& s);

// ---------------------------------------------------------------- run driver

struct RunArtifacts {
  RunResult result;
  std::vector<std::string> snapshot_paths;
  std::string report_path;
  std::string report_json;
  std::string plot_script;
  std::optional<EulerScore> oracle;
};

/// Runs, writes snapshots, report.json (always, also on failure) and the
/// optional plot script under cfg.output_dir.
RunArtifacts execute_run(const RunConfig& cfg, bool score_euler = false);

std::string run_report_json(const RunConfig& cfg, const RunResult& r,
                            const std::vector<std::string>& snapshot_paths,
                            const std::optional<EulerScore>& oracle);

/// Process exit code for an error kind: 2 config, 3 positivity, 4 relaxation,
/// 5 I/O, 1 anything else.
int exit_code_for(ErrorKind k) noexcept;

}  // namespace sixeq
