#include "sixeq/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sixeq {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const char* b = t.data();
  const char* e = t.data() + t.size();
  if (!t.empty() && *b == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e || t.empty()) {
    throw Error(ErrorKind::Config, "key '" + key + "': expected a number, got '" + text + "'");
  }
  return v;
}

std::size_t parse_size(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw Error(ErrorKind::Config, "key '" + key + "': expected a non-negative integer, got '" +
                                       text + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string t = lower(trim(text));
  if (t == "true" || t == "yes" || t == "on" || t == "1") return true;
  if (t == "false" || t == "no" || t == "off" || t == "0") return false;
  throw Error(ErrorKind::Config, "key '" + key + "': expected true/false, got '" + text + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (const auto& item : split(text, ',')) out.push_back(parse_double(key, item));
  return out;
}

const std::set<std::string> kSections = {"case", "scheme", "run"};

}  // namespace

void ConfigDocument::set(const std::string& dotted_key, const std::string& value) {
  const auto dot = dotted_key.find('.');
  if (dot == std::string::npos) {
    throw Error(ErrorKind::Config, "override '" + dotted_key + "' must look like section.key");
  }
  const std::string sec = dotted_key.substr(0, dot);
  const std::string key = dotted_key.substr(dot + 1);
  if (!kSections.count(sec)) throw Error(ErrorKind::Config, "unknown section '" + sec + "'");
  auto& entries = sections[sec];
  for (auto& kv : entries) {
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  }
  entries.emplace_back(key, value);
}

std::optional<std::string> ConfigDocument::get(const std::string& section,
                                               const std::string& key) const {
  auto it = sections.find(section);
  if (it == sections.end()) return std::nullopt;
  for (const auto& kv : it->second) {
    if (kv.first == key) return kv.second;
  }
  return std::nullopt;
}

ConfigDocument parse_config_document(const std::string& text) {
  ConfigDocument doc;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw Error(ErrorKind::Config, where + "unterminated section header");
      section = lower(trim(line.substr(1, line.size() - 2)));
      if (!kSections.count(section)) {
        throw Error(ErrorKind::Config, where + "unknown section [" + section + "]");
      }
      doc.sections[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Config, where + "expected key = value");
    if (section.empty()) throw Error(ErrorKind::Config, where + "key outside of a section");
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string value = trim(line.substr(eq + 1));
    auto& entries = doc.sections[section];
    for (const auto& kv : entries) {
      if (kv.first == key) {
        throw Error(ErrorKind::Config, where + "duplicate key '" + section + "." + key + "'");
      }
    }
    entries.emplace_back(key, value);
  }
  return doc;
}

namespace {

bool set_state_field(PrimitiveState& w, const std::string& field, double v) {
  if (field == "alpha1") w.alpha1 = v;
  else if (field == "rho1") w.rho1 = v;
  else if (field == "rho2") w.rho2 = v;
  else if (field == "u") w.vel.x = v;
  else if (field == "v") w.vel.y = v;
  else if (field == "p1") w.p1 = v;
  else if (field == "p2") w.p2 = v;
  else return false;
  return true;
}

const char* kStateFields[] = {"alpha1", "rho1", "rho2", "u", "v", "p1", "p2"};
const char* kRequiredStateFields[] = {"alpha1", "rho1", "rho2", "p1", "p2"};
const char* kStatePrefixes[] = {"left", "right", "q1", "q2", "q3", "q4"};

PrimitiveState* state_slot(RiemannCase& c, const std::string& prefix) {
  if (prefix == "left") return &c.left;
  if (prefix == "right") return &c.right;
  if (prefix.size() == 2 && prefix[0] == 'q' && prefix[1] >= '1' && prefix[1] <= '4') {
    return &c.quadrants[static_cast<std::size_t>(prefix[1] - '1')];
  }
  return nullptr;
}

RiemannCase resolve_case(const ConfigDocument& doc) {
  auto it = doc.sections.find("case");
  if (it == doc.sections.end()) throw Error(ErrorKind::Config, "missing [case] section");
  const auto& entries = it->second;

  RiemannCase c;
  const auto b = doc.get("case", "builtin");
  if (b) {
    c = builtin(trim(*b));
  } else {
    c.name = "custom";
    c.default_meshes = {1024};
  }

  std::set<std::string> seen;
  for (const auto& [key, value] : entries) {
    seen.insert(key);
    if (key == "builtin") continue;
    const std::string full = "case." + key;
    if (key == "name") c.name = value;
    else if (key == "dim") c.dim = static_cast<int>(parse_size(full, value));
    else if (key == "gamma1") c.eos1.gamma = parse_double(full, value);
    else if (key == "pi1") c.eos1.pi_inf = parse_double(full, value);
    else if (key == "eta1") c.eos1.eta = parse_double(full, value);
    else if (key == "gamma2") c.eos2.gamma = parse_double(full, value);
    else if (key == "pi2") c.eos2.pi_inf = parse_double(full, value);
    else if (key == "eta2") c.eos2.eta = parse_double(full, value);
    else if (key == "x0") c.x0 = parse_double(full, value);
    else if (key == "y0") c.y0 = parse_double(full, value);
    else if (key == "t_final") c.t_final = parse_double(full, value);
    else if (key == "x_lo") c.x_lo = parse_double(full, value);
    else if (key == "x_hi") c.x_hi = parse_double(full, value);
    else if (key == "y_lo") c.y_lo = parse_double(full, value);
    else if (key == "y_hi") c.y_hi = parse_double(full, value);
    else if (key == "boundary") c.boundary = parse_boundary(value);
    else if (key == "courant_hint") c.courant_hint = parse_double(full, value);
    else if (key == "meshes") {
      c.default_meshes.clear();
      for (double m : parse_list(full, value)) {
        if (m < 1 || m != std::floor(m)) throw Error(ErrorKind::Config, full + ": bad mesh size");
        c.default_meshes.push_back(static_cast<std::size_t>(m));
      }
    } else if (key == "notes") {
      c.notes.clear();
      if (!value.empty()) c.notes = split(value, '|');
    } else {
      const auto us = key.find('_');
      PrimitiveState* w = us == std::string::npos ? nullptr : state_slot(c, key.substr(0, us));
      if (!w || !set_state_field(*w, key.substr(us + 1), parse_double(full, value))) {
        throw Error(ErrorKind::Config, "unknown key '" + full + "'");
      }
    }
  }

  if (!b) {
    std::vector<std::string> required = {"t_final", "gamma1", "gamma2"};
    if (c.dim == 1) {
      required.push_back("x0");
      for (const char* side : {"left", "right"}) {
        for (const char* f : kRequiredStateFields) required.push_back(std::string(side) + "_" + f);
      }
    } else {
      for (const char* q : {"q1", "q2", "q3", "q4"}) {
        for (const char* f : kRequiredStateFields) required.push_back(std::string(q) + "_" + f);
      }
    }
    for (const auto& r : required) {
      if (!seen.count(r)) throw Error(ErrorKind::Config, "missing required key 'case." + r + "'");
    }
  }
  try {
    c.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::Config, std::string("invalid case: ") + e.what());
  }
  return c;
}

}  // namespace

RunConfig resolve_config(const ConfigDocument& doc) {
  RunConfig cfg;
  cfg.problem = resolve_case(doc);
  cfg.scheme.courant = cfg.problem.courant_hint;

  if (auto it = doc.sections.find("scheme"); it != doc.sections.end()) {
    for (const auto& [key, value] : it->second) {
      const std::string full = "scheme." + key;
      if (key == "flux") cfg.scheme.flux = parse_flux(value);
      else if (key == "noncons") cfg.scheme.noncons = parse_noncons(value);
      else if (key == "courant") cfg.scheme.courant = parse_double(full, value);
      else if (key == "relax") cfg.scheme.relax = parse_bool(full, value);
      else if (key == "alpha_floor") {
        if (lower(value) == "none" || value.empty()) cfg.scheme.alpha_floor.reset();
        else cfg.scheme.alpha_floor = parse_double(full, value);
      } else if (key == "threads") cfg.scheme.threads = static_cast<int>(parse_size(full, value));
      else throw Error(ErrorKind::Config, "unknown key '" + full + "'");
    }
  }
  if (auto it = doc.sections.find("run"); it != doc.sections.end()) {
    for (const auto& [key, value] : it->second) {
      const std::string full = "run." + key;
      if (key == "n_cells") cfg.n_cells = parse_size(full, value);
      else if (key == "snapshots") cfg.snapshots = parse_list(full, value);
      else if (key == "output_dir") cfg.output_dir = value;
      else if (key == "emit_plots") cfg.emit_plots = parse_bool(full, value);
      else throw Error(ErrorKind::Config, "unknown key '" + full + "'");
    }
  }
  cfg.scheme.validate();
  for (double t : cfg.snapshots) {
    if (!(t >= 0.0 && t <= cfg.problem.t_final)) {
      throw Error(ErrorKind::Config, "snapshot time " + fmt(t) + " outside [0, t_final]");
    }
  }
  return cfg;
}

RunConfig parse_config_text(const std::string& text) {
  return resolve_config(parse_config_document(text));
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

RunConfig apply_overrides(const ConfigDocument& doc,
                          const std::vector<std::pair<std::string, std::string>>& overrides) {
  ConfigDocument d = doc;
  for (const auto& [k, v] : overrides) d.set(k, v);
  return resolve_config(d);
}

bool RunConfig::operator==(const RunConfig& o) const {
  return problem == o.problem && scheme.flux == o.scheme.flux &&
         scheme.noncons == o.scheme.noncons && scheme.courant == o.scheme.courant &&
         scheme.relax == o.scheme.relax && scheme.alpha_floor == o.scheme.alpha_floor &&
         scheme.threads == o.scheme.threads && n_cells == o.n_cells && snapshots == o.snapshots &&
         output_dir == o.output_dir && emit_plots == o.emit_plots;
}

std::string serialize_case(const RiemannCase& c) {
  std::ostringstream s;
  s << "[case]\n";
  s << "name = " << c.name << "\n";
  s << "dim = " << c.dim << "\n";
  s << "gamma1 = " << fmt(c.eos1.gamma) << "\n";
  s << "pi1 = " << fmt(c.eos1.pi_inf) << "\n";
  s << "eta1 = " << fmt(c.eos1.eta) << "\n";
  s << "gamma2 = " << fmt(c.eos2.gamma) << "\n";
  s << "pi2 = " << fmt(c.eos2.pi_inf) << "\n";
  s << "eta2 = " << fmt(c.eos2.eta) << "\n";
  s << "x0 = " << fmt(c.x0) << "\n";
  s << "y0 = " << fmt(c.y0) << "\n";
  s << "t_final = " << fmt(c.t_final) << "\n";
  s << "x_lo = " << fmt(c.x_lo) << "\n";
  s << "x_hi = " << fmt(c.x_hi) << "\n";
  s << "y_lo = " << fmt(c.y_lo) << "\n";
  s << "y_hi = " << fmt(c.y_hi) << "\n";
  s << "boundary = " << to_string(c.boundary) << "\n";
  s << "courant_hint = " << fmt(c.courant_hint) << "\n";
  s << "meshes = ";
  for (std::size_t i = 0; i < c.default_meshes.size(); ++i) {
    s << (i ? ", " : "") << c.default_meshes[i];
  }
  s << "\n";
  s << "notes = ";
  for (std::size_t i = 0; i < c.notes.size(); ++i) s << (i ? " | " : "") << c.notes[i];
  s << "\n";
  for (const char* prefix : kStatePrefixes) {
    RiemannCase copy = c;
    const PrimitiveState& w = *state_slot(copy, prefix);
    const double vals[] = {w.alpha1, w.rho1, w.rho2, w.vel.x, w.vel.y, w.p1, w.p2};
    for (std::size_t k = 0; k < 7; ++k) {
      s << prefix << "_" << kStateFields[k] << " = " << fmt(vals[k]) << "\n";
    }
  }
  return s.str();
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream s;
  s << serialize_case(cfg.problem);
  s << "\n[scheme]\n";
  s << "flux = " << to_string(cfg.scheme.flux) << "\n";
  s << "noncons = " << to_string(cfg.scheme.noncons) << "\n";
  s << "courant = " << fmt(cfg.scheme.courant) << "\n";
  s << "relax = " << (cfg.scheme.relax ? "true" : "false") << "\n";
  s << "alpha_floor = " << (cfg.scheme.alpha_floor ? fmt(*cfg.scheme.alpha_floor) : "none")
    << "\n";
  s << "threads = " << cfg.scheme.threads << "\n";
  s << "\n[run]\n";
  s << "n_cells = " << cfg.n_cells << "\n";
  s << "snapshots = ";
  for (std::size_t i = 0; i < cfg.snapshots.size(); ++i) {
    s << (i ? ", " : "") << fmt(cfg.snapshots[i]);
  }
  s << "\n";
  s << "output_dir = " << cfg.output_dir << "\n";
  s << "emit_plots = " << (cfg.emit_plots ? "true" : "false") << "\n";
  return s.str();
}

// ---------------------------------------------------------------- snapshots

std::vector<std::string> snapshot_columns(int dim) {
  if (dim == 2) {
    return {"x",  "y",  "alpha1", "rho1", "rho2",  "rho",      "u",     "v",
            "p1", "p2", "pbar",   "e1",   "e2",    "E_mix",    "c_frozen", "c_wood"};
  }
  return {"x",  "alpha1", "rho1", "rho2", "rho",   "u",        "p1",
          "p2", "pbar",   "e1",   "e2",   "E_mix", "c_frozen", "c_wood"};
}

std::size_t SnapshotTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw Error(ErrorKind::Io, "snapshot has no column '" + name + "'");
}

std::vector<double> SnapshotTable::column(const std::string& name) const {
  const std::size_t k = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[k]);
  return out;
}

int SnapshotTable::dim() const {
  return std::find(columns.begin(), columns.end(), "y") != columns.end() ? 2 : 1;
}

SnapshotTable snapshot_table(const Snapshot& snap) {
  const Grid& g = snap.grid;
  SnapshotTable t;
  t.columns = snapshot_columns(g.dim);
  t.rows.reserve(g.interior_count());
  for (std::size_t j = 0; j < g.ny; ++j) {
    for (std::size_t i = 0; i < g.nx; ++i) {
      const CellFields f =
          cell_fields(g.cell(static_cast<long>(i), static_cast<long>(j)), snap.eos1, snap.eos2);
      if (g.dim == 2) {
        t.rows.push_back({g.xc(i), g.yc(j), f.alpha1, f.rho1, f.rho2, f.rho, f.u, f.v, f.p1, f.p2,
                          f.pbar, f.e1, f.e2, f.E_mix, f.c_frozen, f.c_wood});
      } else {
        t.rows.push_back({g.xc(i), f.alpha1, f.rho1, f.rho2, f.rho, f.u, f.p1, f.p2, f.pbar, f.e1,
                          f.e2, f.E_mix, f.c_frozen, f.c_wood});
      }
    }
  }
  return t;
}

void write_snapshot(const Snapshot& snap, const std::string& path) {
  const SnapshotTable t = snapshot_table(snap);
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write snapshot '" + path + "'");
  for (std::size_t k = 0; k < t.columns.size(); ++k) out << (k ? "," : "") << t.columns[k];
  out << "\n";
  std::string line;
  for (const auto& r : t.rows) {
    line.clear();
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k) line += ',';
      line += fmt(r[k]);
    }
    line += '\n';
    out << line;
  }
  if (!out) throw Error(ErrorKind::Io, "error while writing snapshot '" + path + "'");
}

SnapshotTable read_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read snapshot '" + path + "'");
  SnapshotTable t;
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::Io, "empty snapshot '" + path + "'");
  t.columns = split(line, ',');
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<double> row;
    row.reserve(t.columns.size());
    for (const auto& cell : split(line, ',')) {
      try {
        row.push_back(parse_double("csv", cell));
      } catch (const Error&) {
        throw Error(ErrorKind::Io, path + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
      }
    }
    if (row.size() != t.columns.size()) {
      throw Error(ErrorKind::Io, path + ":" + std::to_string(lineno) + ": wrong column count");
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------- plots

namespace {

std::string py_str(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\\' || c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> read_header(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read snapshot '" + path + "'");
  std::string line;
  std::getline(in, line);
  return split(line, ',');
}

}  // namespace

void emit_plot_script(const std::vector<PlotSeries>& series, const std::vector<std::string>& fields,
                      const std::string& script_path) {
  if (series.empty()) throw Error(ErrorKind::InvalidInput, "no snapshot to plot");
  if (fields.empty()) throw Error(ErrorKind::InvalidInput, "no field to plot");
  bool two_d = false;
  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto header = read_header(series[s].csv_path);
    const bool has_y = std::find(header.begin(), header.end(), "y") != header.end();
    if (s == 0) two_d = has_y;
    if (has_y != two_d) throw Error(ErrorKind::InvalidInput, "cannot mix 1D and 2D snapshots");
    for (const auto& f : fields) {
      if (std::find(header.begin(), header.end(), f) == header.end()) {
        throw Error(ErrorKind::InvalidInput,
                    "snapshot '" + series[s].csv_path + "' has no column '" + f + "'");
      }
    }
  }

  fs::path script = fs::absolute(script_path);
  const fs::path dir = script.parent_path();
  std::ostringstream py;
  py << "#!/usr/bin/env python3\n"
     << "# Generated by sixeq. Run from anywhere: paths are relative to this file.\n"
     << "import csv\nimport os\n\n"
     << "import matplotlib\nmatplotlib.use(\"Agg\")\n"
     << "import matplotlib.pyplot as plt\nimport numpy as np\n\n"
     << "HERE = os.path.dirname(os.path.abspath(__file__))\n"
     << "SERIES = [\n";
  for (const auto& s : series) {
    const std::string rel = fs::proximate(fs::absolute(s.csv_path), dir).generic_string();
    py << "    (" << py_str(s.label) << ", " << py_str(rel) << "),\n";
  }
  py << "]\nFIELDS = [";
  for (std::size_t i = 0; i < fields.size(); ++i) py << (i ? ", " : "") << py_str(fields[i]);
  py << "]\n\n\n"
     << "def load(rel):\n"
     << "    with open(os.path.join(HERE, rel), newline=\"\") as fh:\n"
     << "        rows = list(csv.reader(fh))\n"
     << "    data = np.array(rows[1:], dtype=float)\n"
     << "    return {name: data[:, k] for k, name in enumerate(rows[0])}\n\n\n";
  if (!two_d) {
    py << "def main():\n"
       << "    fig, axes = plt.subplots(len(FIELDS), 1, sharex=True, squeeze=False,\n"
       << "                             figsize=(7, 2.4 * len(FIELDS)))\n"
       << "    for label, rel in SERIES:\n"
       << "        d = load(rel)\n"
       << "        for ax, field in zip(axes[:, 0], FIELDS):\n"
       << "            ax.plot(d[\"x\"], d[field], lw=1, label=label)\n"
       << "            ax.set_ylabel(field)\n"
       << "    axes[-1, 0].set_xlabel(\"x\")\n"
       << "    axes[0, 0].legend(fontsize=\"small\")\n";
  } else {
    py << "def main():\n"
       << "    fig, axes = plt.subplots(len(FIELDS), len(SERIES), squeeze=False,\n"
       << "                             figsize=(4 * len(SERIES), 3.6 * len(FIELDS)))\n"
       << "    for col, (label, rel) in enumerate(SERIES):\n"
       << "        d = load(rel)\n"
       << "        xs, ys = np.unique(d[\"x\"]), np.unique(d[\"y\"])\n"
       << "        for row, field in enumerate(FIELDS):\n"
       << "            z = d[field].reshape(len(ys), len(xs))\n"
       << "            ax = axes[row, col]\n"
       << "            im = ax.pcolormesh(xs, ys, z, shading=\"nearest\")\n"
       << "            ax.set_aspect(\"equal\")\n"
       << "            ax.set_title(f\"{label}: {field}\", fontsize=\"small\")\n"
       << "            fig.colorbar(im, ax=ax)\n";
  }
  py << "    fig.tight_layout()\n"
     << "    out = os.path.splitext(os.path.abspath(__file__))[0] + \".png\"\n"
     << "    fig.savefig(out, dpi=150)\n"
     << "    print(out)\n\n\n"
     << "if __name__ == \"__main__\":\n"
     << "    main()\n";

  std::ofstream out(script);
  if (!out) throw Error(ErrorKind::Io, "cannot write plot script '" + script_path + "'");
  out << py.str();
  if (!out) throw Error(ErrorKind::Io, "error while writing '" + script_path + "'");
}

// ---------------------------------------------------------------- compare

CompareReport compare_runs(const SnapshotTable& a, const SnapshotTable& b,
                           const std::vector<std::pair<double, double>>& windows) {
  if (a.rows.size() != b.rows.size() || a.rows.empty() || a.dim() != b.dim()) {
    throw Error(ErrorKind::InvalidInput, "snapshot grids do not match");
  }
  const int dim = a.dim();
  const auto xa = a.column("x");
  const auto xb = b.column("x");
  std::vector<double> ya, yb;
  if (dim == 2) {
    ya = a.column("y");
    yb = b.column("y");
  }
  const double xspan = *std::max_element(xa.begin(), xa.end()) - *std::min_element(xa.begin(), xa.end());
  for (std::size_t i = 0; i < xa.size(); ++i) {
    bool same = std::abs(xa[i] - xb[i]) <= 1e-12 * (std::abs(xspan) + 1.0);
    if (dim == 2) same = same && std::abs(ya[i] - yb[i]) <= 1e-12 * (std::abs(xspan) + 1.0);
    if (!same) throw Error(ErrorKind::InvalidInput, "snapshot grids do not match");
  }

  // Cell size from distinct centres.
  auto spacing = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v.size() > 1 ? (v.back() - v.front()) / static_cast<double>(v.size() - 1) : 1.0;
  };
  double weight = spacing(xa);
  if (dim == 2) weight *= spacing(ya);

  CompareReport rep;
  rep.windows = windows;
  for (const auto& name : a.columns) {
    if (name == "x" || name == "y") continue;
    if (std::find(b.columns.begin(), b.columns.end(), name) == b.columns.end()) continue;
    const auto ca = a.column(name);
    const auto cb = b.column(name);
    FieldDiff d;
    for (std::size_t i = 0; i < ca.size(); ++i) {
      const double e = std::abs(ca[i] - cb[i]);
      d.l1 += e * weight;
      d.linf = std::max(d.linf, e);
    }
    for (const auto& [lo, hi] : windows) {
      double sa = 0.0, sb = 0.0;
      std::size_t n = 0;
      for (std::size_t i = 0; i < ca.size(); ++i) {
        if (xa[i] < lo || xa[i] > hi) continue;
        sa += ca[i];
        sb += cb[i];
        ++n;
      }
      if (n == 0) throw Error(ErrorKind::InvalidInput, "plateau window contains no cell");
      d.plateau.push_back(std::abs(sa - sb) / static_cast<double>(n));
    }
    rep.fields[name] = std::move(d);
  }
  return rep;
}

std::string compare_report_json(const CompareReport& r) {
  json j;
  j["windows"] = json::array();
  for (const auto& [lo, hi] : r.windows) j["windows"].push_back({lo, hi});
  for (const auto& [name, d] : r.fields) {
    j["fields"][name] = {{"l1", d.l1}, {"linf", d.linf}, {"plateau", d.plateau}};
  }
  return j.dump(2);
}

// ---------------------------------------------------------------- Euler scoring

double EulerScore::max_error() const {
  double m = 0.0;
  for (double e : {shock_error, contact_error, rho_star_l_error, rho_star_r_error, u_star_error,
                   p_star_error}) {
    if (std::isnan(e)) return e;
    m = std::max(m, e);
  }
  return m;
}

namespace {

EulerState dominant(const PrimitiveState& w, const EosParams& e1, const EosParams& e2,
                    EosParams& eos) {
  eos = w.alpha1 >= 0.5 ? e1 : e2;
  const double a2 = 1.0 - w.alpha1;
  return {w.alpha1 * w.rho1 + a2 * w.rho2, w.vel.x, w.alpha1 * w.p1 + a2 * w.p2};
}

// Linear interpolation of the x where f crosses `level` between cells i and k.
double crossing(const std::vector<double>& x, const std::vector<double>& f, std::size_t i,
                std::size_t k, double level) {
  const double d = f[k] - f[i];
  if (d == 0.0) return 0.5 * (x[i] + x[k]);
  return x[i] + (level - f[i]) / d * (x[k] - x[i]);
}

}  // namespace

EulerScore score_against_euler(const Snapshot& snap, const RiemannCase& c) {
  if (c.dim != 1 || snap.grid.dim != 1) {
    throw Error(ErrorKind::InvalidInput, "Euler scoring needs a 1D case");
  }
  const double t = snap.time;
  if (!(t > 0.0)) throw Error(ErrorKind::InvalidInput, "Euler scoring needs t > 0");
  EosParams eosL, eosR;
  const EulerState L = dominant(c.left, c.eos1, c.eos2, eosL);
  const EulerState R = dominant(c.right, c.eos1, c.eos2, eosR);

  EulerScore s;
  s.fan = solve_exact(L, R, eosL, eosR);
  const EulerFan& fan = s.fan;

  const SnapshotTable tab = snapshot_table(snap);
  const auto x = tab.column("x");
  const auto alpha = tab.column("alpha1");
  const auto pbar = tab.column("pbar");
  const auto rho = tab.column("rho");
  const auto u = tab.column("u");
  const std::size_t n = x.size();
  const double nan = std::numeric_limits<double>::quiet_NaN();

  auto rel_pos = [&](double num, double exact) {
    return std::abs(num - exact) / std::max(std::abs(exact - c.x0), 1e-300);
  };

  // Shock: prefer the right-going one.
  s.shock_exact = s.shock_numeric = s.shock_error = nan;
  if (fan.rightWave == WaveKind::Shock || fan.leftWave == WaveKind::Shock) {
    const bool right = fan.rightWave == WaveKind::Shock;
    const double outer = right ? R.p : L.p;
    const double level = 0.5 * (fan.pStar + outer);
    const double sign = fan.pStar > outer ? 1.0 : -1.0;
    s.shock_exact = c.x0 + (right ? fan.rightHead : fan.leftHead) * t;
    if (right) {
      for (std::size_t i = n - 1; i > 0; --i) {
        if (sign * (pbar[i - 1] - level) >= 0.0) {
          s.shock_numeric = crossing(x, pbar, i - 1, i, level);
          break;
        }
      }
    } else {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (sign * (pbar[i + 1] - level) >= 0.0) {
          s.shock_numeric = crossing(x, pbar, i, i + 1, level);
          break;
        }
      }
    }
    s.shock_error = rel_pos(s.shock_numeric, s.shock_exact);
  }

  // Contact: alpha1 = 1/2 crossing when the volume fraction changes side.
  s.contact_exact = c.x0 + fan.uStar * t;
  s.contact_numeric = s.contact_error = nan;
  if ((c.left.alpha1 - 0.5) * (c.right.alpha1 - 0.5) < 0.0) {
    const double side = alpha[0] - 0.5;
    for (std::size_t i = 1; i < n; ++i) {
      if ((alpha[i] - 0.5) * side <= 0.0) {
        s.contact_numeric = crossing(x, alpha, i - 1, i, 0.5);
        break;
      }
    }
    s.contact_error = rel_pos(s.contact_numeric, s.contact_exact);
  }

  // Star plateaus over the middle half of each exact star interval.
  const double xc = s.contact_exact;
  const double xl = c.x0 + fan.leftTail * t;
  const double xr = c.x0 + fan.rightTail * t;
  auto mean = [&](const std::vector<double>& f, double a, double b, std::size_t& count) {
    const double lo = a + 0.25 * (b - a);
    const double hi = b - 0.25 * (b - a);
    double sum = 0.0;
    count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] >= lo && x[i] <= hi) {
        sum += f[i];
        ++count;
      }
    }
    return count ? sum / static_cast<double>(count) : nan;
  };
  std::size_t nl = 0, nr = 0;
  s.rho_star_l = mean(rho, xl, xc, nl);
  s.rho_star_r = mean(rho, xc, xr, nr);
  const double ul = mean(u, xl, xc, nl), ur = mean(u, xc, xr, nr);
  const double pl = mean(pbar, xl, xc, nl), pr = mean(pbar, xc, xr, nr);
  s.u_star = (ul * static_cast<double>(nl) + ur * static_cast<double>(nr)) /
             static_cast<double>(nl + nr);
  s.p_star_l = pl;
  s.p_star_r = pr;
  // p is continuous across the contact; read it on the side where a density
  // error is amplified least, dp/p = gamma (p + pi) / p * drho/rho.
  const double kl = eosL.gamma * (fan.pStar + eosL.pi_inf);
  const double kr = eosR.gamma * (fan.pStar + eosR.pi_inf);
  s.p_star_side = kl < kr ? "left" : kr < kl ? "right" : "both";
  s.p_star = kl < kr   ? pl
             : kr < kl ? pr
                       : (pl * static_cast<double>(nl) + pr * static_cast<double>(nr)) /
                             static_cast<double>(nl + nr);
  auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
  s.rho_star_l_error = rel(s.rho_star_l, fan.rhoStarL);
  s.rho_star_r_error = rel(s.rho_star_r, fan.rhoStarR);
  s.u_star_error = rel(s.u_star, fan.uStar);
  s.p_star_error = rel(s.p_star, fan.pStar);
  return s;
}

namespace {

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string euler_score_json(const EulerScore& s) {
  json j;
  j["exact"] = {{"p_star", s.fan.pStar},
                {"u_star", s.fan.uStar},
                {"rho_star_left", s.fan.rhoStarL},
                {"rho_star_right", s.fan.rhoStarR},
                {"left_wave", to_string(s.fan.leftWave)},
                {"right_wave", to_string(s.fan.rightWave)},
                {"left_head", s.fan.leftHead},
                {"left_tail", s.fan.leftTail},
                {"right_tail", s.fan.rightTail},
                {"right_head", s.fan.rightHead}};
  j["shock"] = {{"exact", num(s.shock_exact)}, {"numeric", num(s.shock_numeric)},
                {"relative_error", num(s.shock_error)}};
  j["contact"] = {{"exact", num(s.contact_exact)}, {"numeric", num(s.contact_numeric)},
                  {"relative_error", num(s.contact_error)}};
  j["plateaus"] = {
      {"rho_star_left", {{"numeric", num(s.rho_star_l)}, {"relative_error", num(s.rho_star_l_error)}}},
      {"rho_star_right", {{"numeric", num(s.rho_star_r)}, {"relative_error", num(s.rho_star_r_error)}}},
      {"u_star", {{"numeric", num(s.u_star)}, {"relative_error", num(s.u_star_error)}}},
      {"p_star", {{"numeric", num(s.p_star)},
                  {"relative_error", num(s.p_star_error)},
                  {"side", s.p_star_side},
                  {"left_mean", num(s.p_star_l)},
                  {"right_mean", num(s.p_star_r)}}}};
  j["max_relative_error"] = num(s.max_error());
  return j.dump(2);
}

// ---------------------------------------------------------------- run driver

int exit_code_for(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::Config:
    case ErrorKind::InvalidInput: return 2;
    case ErrorKind::Positivity:
    case ErrorKind::InadmissibleState: return 3;
    case ErrorKind::RelaxationFailure: return 4;
    case ErrorKind::Io: return 5;
    default: return 1;
  }
}

std::string run_report_json(const RunConfig& cfg, const RunResult& r,
                            const std::vector<std::string>& snapshot_paths,
                            const std::optional<EulerScore>& oracle) {
  json j;
  j["case"] = cfg.problem.name;
  j["scheme"] = r.scheme;
  j["flux"] = to_string(cfg.scheme.flux);
  j["noncons"] = cfg.scheme.flux == FluxKind::HllcWavePropagation
                     ? json(nullptr)
                     : json(to_string(cfg.scheme.noncons));
  j["courant"] = cfg.scheme.courant;
  j["relax"] = cfg.scheme.relax;
  j["alpha_floor"] = cfg.scheme.alpha_floor ? json(*cfg.scheme.alpha_floor) : json(nullptr);
  j["known_fragile"] = cfg.scheme.known_fragile();
  j["n_cells"] = r.last.grid.nx;
  j["ok"] = r.ok;
  j["steps"] = r.steps;
  j["final_time"] = r.last.time;
  j["wall_seconds"] = r.wall_seconds;
  j["alpha_clamps"] = r.alpha_clamps;
  j["boundary_disturbance"] = r.boundary_disturbance;
  json led;
  const auto errs = r.ledger.relative_errors();
  for (std::size_t k = 0; k < kLedgerSlots; ++k) {
    led["relative_error"][ledger_slot_name(k)] = errs[k];
    led["initial"][ledger_slot_name(k)] = static_cast<double>(r.ledger.initial[k]);
    led["final"][ledger_slot_name(k)] = static_cast<double>(r.ledger.current[k]);
    led["boundary_outflow"][ledger_slot_name(k)] = static_cast<double>(r.ledger.outflow[k]);
  }
  led["max_relative_error"] = r.ledger.max_relative_error();
  j["ledger"] = led;
  j["warnings"] = r.warnings;
  j["snapshots"] = json::array();
  for (std::size_t i = 0; i < snapshot_paths.size(); ++i) {
    json s = {{"path", snapshot_paths[i]}};
    if (i < r.snapshots.size()) s["time"] = r.snapshots[i].time;
    j["snapshots"].push_back(s);
  }
  if (r.ok) {
    j["error"] = nullptr;
    j["failure"] = nullptr;
  } else {
    j["error"] = {{"kind", to_string(r.error_kind)},
                  {"message", r.error_message},
                  {"exit_code", exit_code_for(r.error_kind)}};
    if (r.failure) {
      const auto& f = *r.failure;
      j["failure"] = {{"step", f.step},   {"time", f.time},     {"cell", f.cell},
                      {"i", f.i},         {"j", f.j},           {"field", f.field},
                      {"scheme", f.scheme}, {"detail", f.detail}};
    } else {
      j["failure"] = nullptr;
    }
  }
  if (oracle) j["oracle"] = json::parse(euler_score_json(*oracle));
  return j.dump(2);
}

RunArtifacts execute_run(const RunConfig& cfg, bool score_euler) {
  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create '" + cfg.output_dir + "': " + ec.message());

  RunOptions opts;
  opts.nx = cfg.n_cells;
  opts.ny = cfg.n_cells;
  opts.snapshot_times = cfg.snapshots;

  RunArtifacts art;
  art.result = run(cfg.problem, cfg.scheme, opts);
  const RunResult& r = art.result;

  const fs::path dir(cfg.output_dir);
  for (std::size_t i = 0; i < r.snapshots.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%03zu.csv", i);
    const std::string p = (dir / name).string();
    write_snapshot(r.snapshots[i], p);
    art.snapshot_paths.push_back(p);
  }
  if (!r.ok) {
    const std::string p = (dir / "last_state.csv").string();
    write_snapshot(r.last, p);
    art.snapshot_paths.push_back(p);
  }

  if (score_euler && r.ok && cfg.problem.dim == 1) {
    art.oracle = score_against_euler(r.snapshots.back(), cfg.problem);
  }

  if (cfg.emit_plots && !art.snapshot_paths.empty()) {
    std::vector<PlotSeries> series;
    for (std::size_t i = 0; i < art.snapshot_paths.size(); ++i) {
      std::ostringstream label;
      label << r.scheme << " t=" << (i < r.snapshots.size() ? r.snapshots[i].time : r.last.time);
      series.push_back({label.str(), art.snapshot_paths[i]});
    }
    const std::vector<std::string> fields =
        cfg.problem.dim == 2 ? std::vector<std::string>{"alpha1", "rho"}
                             : std::vector<std::string>{"alpha1", "rho", "u", "pbar", "p1", "p2"};
    art.plot_script = (dir / "plot.py").string();
    emit_plot_script(series, fields, art.plot_script);
  }

  art.report_json = run_report_json(cfg, r, art.snapshot_paths, art.oracle);
  art.report_path = (dir / "report.json").string();
  std::ofstream out(art.report_path);
  if (!out) throw Error(ErrorKind::Io, "cannot write report '" + art.report_path + "'");
  out << art.report_json << "\n";
  return art;
}

}  // namespace sixeq
