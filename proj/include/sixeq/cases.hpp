#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sixeq/eos.hpp"
#include "sixeq/state.hpp"

namespace sixeq {

enum class Boundary { Transmissive, Reflective };

const char* to_string(Boundary b) noexcept;
Boundary parse_boundary(const std::string& name);

struct RiemannCase {
  std::string name;
  EosParams eos1;
  EosParams eos2;
  int dim = 1;

  // 1D data
  PrimitiveState left;
  PrimitiveState right;
  double x0 = 0.5;

  // 2D data: Q1 (x > x0, y > y0), Q2 (x < x0, y > y0), Q3 (x < x0, y < y0), Q4 (x > x0, y < y0)
  std::array<PrimitiveState, 4> quadrants{};
  double y0 = 0.0;

  double t_final = 0.0;
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;
  std::vector<std::size_t> default_meshes;
  Boundary boundary = Boundary::Transmissive;
  double courant_hint = 0.9;
  std::vector<std::string> notes;

  /// Throws InvalidInput/InadmissibleState on bad EOS, geometry or states.
  void validate() const;
  /// Initial primitive state at a cell centre.
  const PrimitiveState& initial_state(double x, double y) const;

  bool operator==(const RiemannCase&) const = default;
};

RiemannCase builtin(const std::string& name);
std::vector<std::string> builtin_names();

/// Epoxy-spinel copies with both left phasic pressures set to each p_L.
std::vector<RiemannCase> epoxy_sweep(const std::vector<double>& p_left);
/// Left pressures of the published sweep.
std::vector<double> epoxy_sweep_pressures();

struct Snapshot;

struct PlateauValue {
  double mean = 0.0;
  double max_deviation = 0.0;
};

/// Per-field mean and max |value - mean| over 1D cells with x_lo <= x <= x_hi.
/// Fields: alpha1, rho1, rho2, rho, u, p1, p2, pbar. Empty window -> InvalidInput.
std::map<std::string, PlateauValue> plateau_extract(const Snapshot& snap, double x_lo, double x_hi);

}  // namespace sixeq
