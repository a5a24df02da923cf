#include "sixeq/cases.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "sixeq/error.hpp"
#include "sixeq/solver.hpp"

namespace sixeq {

const char* to_string(Boundary b) noexcept {
  return b == Boundary::Reflective ? "reflective" : "transmissive";
}

Boundary parse_boundary(const std::string& name) {
  std::string k;
  for (char c : name) k += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (k == "transmissive") return Boundary::Transmissive;
  if (k == "reflective") return Boundary::Reflective;
  throw Error(ErrorKind::Config, "unknown boundary '" + name + "' (transmissive or reflective)");
}

void RiemannCase::validate() const {
  eos1.validate();
  eos2.validate();
  if (dim != 1 && dim != 2) throw Error(ErrorKind::InvalidInput, "dim must be 1 or 2");
  if (!(t_final > 0.0) || !std::isfinite(t_final)) {
    throw Error(ErrorKind::InvalidInput, "t_final must be positive");
  }
  if (!(x_hi > x_lo)) throw Error(ErrorKind::InvalidInput, "empty x range");
  if (dim == 2 && !(y_hi > y_lo)) throw Error(ErrorKind::InvalidInput, "empty y range");
  if (dim == 1) {
    if (!(x0 > x_lo && x0 < x_hi)) {
      throw Error(ErrorKind::InvalidInput, "x0 must lie inside the domain");
    }
    check_admissible(left, eos1, eos2);
    check_admissible(right, eos1, eos2);
  } else {
    for (const auto& q : quadrants) check_admissible(q, eos1, eos2);
  }
}

const PrimitiveState& RiemannCase::initial_state(double x, double y) const {
  if (dim == 1) return x < x0 ? left : right;
  if (y > y0) return x > x0 ? quadrants[0] : quadrants[1];
  return x < x0 ? quadrants[2] : quadrants[3];
}

namespace {

PrimitiveState prim(double a1, double r1, double r2, double u, double p1, double p2) {
  return PrimitiveState{a1, r1, r2, {u, 0.0}, p1, p2};
}

RiemannCase base(const std::string& name, double tf, double x0, EosParams e1, EosParams e2) {
  RiemannCase c;
  c.name = name;
  c.t_final = tf;
  c.x0 = x0;
  c.eos1 = e1;
  c.eos2 = e2;
  c.default_meshes = {1024, 65536};
  return c;
}

}  // namespace

RiemannCase builtin(const std::string& name) {
  const EosParams ideal{1.4, 0.0, 0.0};
  if (name == "sonic-rarefaction") {
    auto c = base(name, 0.15, 0.5, ideal, ideal);
    c.left = prim(0.8, 1.0, 1.0, 0.75, 1.0, 1.0);
    c.right = prim(0.3, 0.125, 0.125, 0.0, 0.1, 0.1);
    return c;
  }
  if (name == "low-density") {
    auto c = base(name, 0.15, 0.5, ideal, ideal);
    c.left = prim(0.8, 1.0, 1.0, -2.0, 0.4, 0.4);
    c.right = prim(0.5, 1.0, 1.0, 2.0, 0.4, 0.4);
    c.notes.push_back("HLLC+Crouzet expected to fail (corrupted densities)");
    return c;
  }
  if (name == "water-air") {
    auto c = base(name, 2.4e-4, 0.7, EosParams{4.4, 6e8, 0.0}, ideal);
    c.left = prim(1.0 - 1e-6, 1e3, 1.0, 0.0, 1e9, 1e9);
    c.right = prim(1e-6, 1e3, 1.0, 0.0, 1e5, 1e5);
    c.notes.push_back("without relaxation Rusanov+BR2023 needs C <= 0.3");
    return c;
  }
  if (name == "epoxy-spinel") {
    auto c = base(name, 2.9e-5, 0.6, EosParams{2.43, 5.3e9, 0.0}, EosParams{1.62, 141e9, 0.0});
    c.left = prim(0.5954, 1185.0, 3622.0, 0.0, 2e11, 2e11);
    c.right = prim(0.5954, 1185.0, 3622.0, 0.0, 1e5, 1e5);
    return c;
  }
  if (name == "cavitation") {
    auto c = base(name, 3.2e-3, 0.5, EosParams{2.35, 1e9, -1.167e6},
                  EosParams{1.43, 0.0, 2.030e6});
    c.left = prim(0.99, 1150.0, 0.63, -2.0, 1e5, 1e5);
    c.right = prim(0.99, 1150.0, 0.63, 2.0, 1e5, 1e5);
    c.notes.push_back("near-vacuum expansion; run with relaxation");
    return c;
  }
  if (name == "riemann-2d") {
    RiemannCase c;
    c.name = name;
    c.dim = 2;
    c.eos1 = ideal;
    c.eos2 = ideal;
    c.t_final = 0.15;
    c.x_lo = c.y_lo = -0.5;
    c.x_hi = c.y_hi = 0.5;
    c.x0 = c.y0 = 0.0;
    const PrimitiveState heavy = prim(0.8, 2.0, 1.5, 0.0, 2.0, 2.0);
    const PrimitiveState light = prim(0.4, 1.0, 0.5, 0.0, 1.0, 1.0);
    c.quadrants = {heavy, light, heavy, light};
    c.boundary = Boundary::Reflective;
    c.courant_hint = 0.45;
    c.default_meshes = {256, 2048};
    return c;
  }
  std::ostringstream msg;
  msg << "unknown case '" << name << "'; valid names:";
  for (const auto& n : builtin_names()) msg << " " << n;
  throw Error(ErrorKind::Config, msg.str());
}

std::vector<std::string> builtin_names() {
  return {"sonic-rarefaction", "low-density", "water-air", "epoxy-spinel", "cavitation",
          "riemann-2d"};
}

std::vector<double> epoxy_sweep_pressures() { return {1e6, 1e7, 1e8, 1e9, 1e10, 5e10, 1e11}; }

std::vector<RiemannCase> epoxy_sweep(const std::vector<double>& p_left) {
  const RiemannCase proto = builtin("epoxy-spinel");
  std::vector<RiemannCase> out;
  out.reserve(p_left.size());
  for (double p : p_left) {
    RiemannCase c = proto;
    c.left.p1 = p;
    c.left.p2 = p;
    std::ostringstream n;
    n << proto.name << "-pL" << p;
    c.name = n.str();
    try {
      check_admissible(c.left, c.eos1, c.eos2);
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidInput, "sweep pressure " + std::to_string(p) + ": " + e.what());
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::map<std::string, PlateauValue> plateau_extract(const Snapshot& snap, double x_lo,
                                                    double x_hi) {
  const Grid& g = snap.grid;
  if (g.dim != 1) throw Error(ErrorKind::InvalidInput, "plateau_extract needs a 1D snapshot");
  if (!(x_hi >= x_lo) || x_lo < g.x_lo || x_hi > g.x_hi) {
    throw Error(ErrorKind::InvalidInput, "plateau window outside the domain");
  }
  static const char* names[] = {"alpha1", "rho1", "rho2", "rho", "u", "p1", "p2", "pbar"};
  std::vector<std::array<double, 8>> rows;
  for (std::size_t i = 0; i < g.nx; ++i) {
    const double x = g.xc(i);
    if (x < x_lo || x > x_hi) continue;
    const CellFields f = cell_fields(g.cell(static_cast<long>(i)), snap.eos1, snap.eos2);
    rows.push_back({f.alpha1, f.rho1, f.rho2, f.rho, f.u, f.p1, f.p2, f.pbar});
  }
  if (rows.empty()) throw Error(ErrorKind::InvalidInput, "plateau window contains no cell");
  std::map<std::string, PlateauValue> out;
  for (std::size_t k = 0; k < 8; ++k) {
    double sum = 0.0;
    for (const auto& r : rows) sum += r[k];
    const double mean = sum / static_cast<double>(rows.size());
    double dev = 0.0;
    for (const auto& r : rows) dev = std::max(dev, std::abs(r[k] - mean));
    out[names[k]] = {mean, dev};
  }
  return out;
}

}  // namespace sixeq
