// sixeq command-line driver. Talks to the library only through sixeq.h.
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "sixeq/sixeq.h"

namespace {

struct SchemeFlags {
  std::optional<std::string> config_path;
  std::optional<std::string> case_name;
  std::optional<std::string> flux, noncons, output_dir, snapshots, alpha_floor;
  std::optional<double> courant;
  std::optional<int> threads;
  std::optional<std::size_t> n_cells;
  std::optional<bool> relax, emit_plots;
  std::vector<std::string> sets;

  void attach(CLI::App* app) {
    app->add_option("config", config_path, "Config file ([case]/[scheme]/[run] sections)");
    app->add_option("--case", case_name, "Builtin case name (see `sixeq cases`)");
    app->add_option("--flux", flux, "Rusanov, HLLC or HLLC-WP");
    app->add_option("--noncons", noncons, "BR2023, BR2015 or Crouzet");
    app->add_option("--courant", courant, "Courant number in (0, 1]");
    app->add_option("--relax", relax, "Instantaneous pressure relaxation (true/false)");
    app->add_option("--alpha-floor", alpha_floor, "Clamp alpha1 to [eps, 1-eps] after relaxation, or none");
    app->add_option("--threads", threads, "OpenMP threads (0: default)");
    app->add_option("--n-cells", n_cells, "Cells per axis");
    app->add_option("--snapshots", snapshots, "Comma-separated snapshot times");
    app->add_option("--output-dir", output_dir, "Output directory");
    app->add_option("--emit-plots", emit_plots, "Write a matplotlib script (true/false)");
    app->add_option("--set", sets, "Raw override section.key=value (repeatable)");
  }
};

int report_error(sixeq_status s, const std::string& what) {
  std::cerr << "sixeq: " << what << ": " << sixeq_status_name(s) << ": " << sixeq_last_error()
            << "\n";
  return sixeq_exit_code(s);
}

// Builds a config handle from file/case plus flag overrides. Returns nullptr
// and sets `code` on failure.
sixeq_config* build_config(const SchemeFlags& f, int& code) {
  sixeq_config* cfg = nullptr;
  sixeq_status s;
  if (f.config_path) {
    s = sixeq_config_load(f.config_path->c_str(), &cfg);
  } else if (f.case_name) {
    s = sixeq_config_builtin(f.case_name->c_str(), &cfg);
  } else {
    std::cerr << "sixeq: give a config file or --case NAME\n";
    code = 2;
    return nullptr;
  }
  if (s != SIXEQ_OK) {
    code = report_error(s, "loading configuration");
    return nullptr;
  }

  std::vector<std::pair<std::string, std::string>> kv;
  if (f.config_path && f.case_name) kv.emplace_back("case.builtin", *f.case_name);
  if (f.flux) kv.emplace_back("scheme.flux", *f.flux);
  if (f.noncons) kv.emplace_back("scheme.noncons", *f.noncons);
  if (f.courant) {
    std::ostringstream v;
    v.precision(17);
    v << *f.courant;
    kv.emplace_back("scheme.courant", v.str());
  }
  if (f.relax) kv.emplace_back("scheme.relax", *f.relax ? "true" : "false");
  if (f.alpha_floor) kv.emplace_back("scheme.alpha_floor", *f.alpha_floor);
  if (f.threads) kv.emplace_back("scheme.threads", std::to_string(*f.threads));
  if (f.n_cells) kv.emplace_back("run.n_cells", std::to_string(*f.n_cells));
  if (f.snapshots) kv.emplace_back("run.snapshots", *f.snapshots);
  if (f.output_dir) kv.emplace_back("run.output_dir", *f.output_dir);
  if (f.emit_plots) kv.emplace_back("run.emit_plots", *f.emit_plots ? "true" : "false");
  for (const auto& raw : f.sets) {
    const auto eq = raw.find('=');
    if (eq == std::string::npos) {
      std::cerr << "sixeq: --set expects section.key=value, got '" << raw << "'\n";
      sixeq_config_free(cfg);
      code = 2;
      return nullptr;
    }
    kv.emplace_back(raw.substr(0, eq), raw.substr(eq + 1));
  }
  for (const auto& [k, v] : kv) {
    s = sixeq_config_set(cfg, k.c_str(), v.c_str());
    if (s != SIXEQ_OK) {
      code = report_error(s, "option " + k);
      sixeq_config_free(cfg);
      return nullptr;
    }
  }
  return cfg;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sixeq: 6-equation two-phase flow solver"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sixeq_version()));

  // run
  SchemeFlags run_flags;
  std::string oracle;
  bool print_json = false;
  bool dump_config = false;
  auto* run_cmd = app.add_subcommand("run", "Run one case");
  run_flags.attach(run_cmd);
  run_cmd->add_option("--oracle", oracle, "Score the final snapshot: euler")
      ->check(CLI::IsMember({"euler"}));
  run_cmd->add_flag("--json", print_json, "Print the run report on stdout");
  run_cmd->add_flag("--dump-config", dump_config, "Print the resolved config and exit");

  // sweep
  SchemeFlags sweep_flags;
  std::string p_left;
  auto* sweep_cmd = app.add_subcommand("sweep", "Epoxy-spinel left-pressure sweep");
  sweep_flags.attach(sweep_cmd);
  sweep_cmd->add_option("--p-left", p_left, "Comma-separated left pressures (default: published list)");

  // compare
  std::string csv_a, csv_b;
  std::vector<std::string> windows;
  auto* cmp_cmd = app.add_subcommand("compare", "Compare two snapshots");
  cmp_cmd->add_option("a", csv_a, "First snapshot CSV")->required();
  cmp_cmd->add_option("b", csv_b, "Second snapshot CSV")->required();
  cmp_cmd->add_option("--window", windows, "Plateau window lo,hi (repeatable)");

  // oracle
  std::string left = "1,0,1", right = "0.125,0,0.1", xi_list;
  double gl = 1.4, pl = 0.0, gr = 1.4, pr = 0.0;
  std::optional<double> gamma_both, pi_both;
  auto* orc_cmd = app.add_subcommand("oracle", "Exact Euler Riemann solution (stiffened gas)");
  orc_cmd->add_option("--left", left, "rho,u,p of the left state");
  orc_cmd->add_option("--right", right, "rho,u,p of the right state");
  orc_cmd->add_option("--gamma", gamma_both, "gamma of both sides");
  orc_cmd->add_option("--pi", pi_both, "pi_inf of both sides");
  orc_cmd->add_option("--gamma-left", gl, "gamma of the left side");
  orc_cmd->add_option("--pi-left", pl, "pi_inf of the left side");
  orc_cmd->add_option("--gamma-right", gr, "gamma of the right side");
  orc_cmd->add_option("--pi-right", pr, "pi_inf of the right side");
  orc_cmd->add_option("--xi", xi_list, "Comma-separated x/t sample points");

  auto* cases_cmd = app.add_subcommand("cases", "List builtin cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (*cases_cmd) {
    char* names = nullptr;
    if (sixeq_builtin_names(&names) != SIXEQ_OK) return 1;
    std::cout << names;
    sixeq_string_free(names);
    return 0;
  }

  if (*run_cmd) {
    int code = 0;
    sixeq_config* cfg = build_config(run_flags, code);
    if (!cfg) return code;
    if (dump_config) {
      char* text = nullptr;
      sixeq_config_serialize(cfg, &text);
      std::cout << text;
      sixeq_string_free(text);
      sixeq_config_free(cfg);
      return 0;
    }
    if (sixeq_config_known_fragile(cfg)) {
      std::cerr << "sixeq: warning: this scheme combination is known-fragile\n";
    }
    sixeq_result* res = nullptr;
    const sixeq_status s = sixeq_run(cfg, oracle == "euler", &res);
    sixeq_config_free(cfg);
    if (!res) return report_error(s, "run");
    if (print_json) std::cout << sixeq_result_report_json(res) << "\n";
    if (s != SIXEQ_OK) {
      std::cerr << "sixeq: run stopped: " << sixeq_status_name(s) << ": " << sixeq_last_error()
                << "\n";
    } else if (!print_json) {
      std::cout << "report: " << sixeq_result_report_path(res) << "\n";
      for (size_t i = 0; i < sixeq_result_snapshot_count(res); ++i) {
        std::cout << "snapshot: " << sixeq_result_snapshot_path(res, i) << "\n";
      }
    }
    sixeq_result_free(res);
    return sixeq_exit_code(s);
  }

  if (*sweep_cmd) {
    int code = 0;
    if (!sweep_flags.config_path && !sweep_flags.case_name) sweep_flags.case_name = "epoxy-spinel";
    sixeq_config* cfg = build_config(sweep_flags, code);
    if (!cfg) return code;
    std::vector<double> ps;
    try {
      ps = parse_doubles(p_left);
    } catch (const std::exception&) {
      std::cerr << "sixeq: --p-left expects comma-separated numbers\n";
      sixeq_config_free(cfg);
      return 2;
    }
    char* summary = nullptr;
    const sixeq_status s =
        sixeq_sweep(cfg, ps.empty() ? nullptr : ps.data(), ps.size(), &summary);
    sixeq_config_free(cfg);
    if (s != SIXEQ_OK) return report_error(s, "sweep");
    std::cout << summary << "\n";
    sixeq_string_free(summary);
    return 0;
  }

  if (*cmp_cmd) {
    std::vector<double> w;
    for (const auto& win : windows) {
      std::vector<double> v;
      try {
        v = parse_doubles(win);
      } catch (const std::exception&) {
        v.clear();
      }
      if (v.size() != 2) {
        std::cerr << "sixeq: --window expects lo,hi\n";
        return 2;
      }
      w.insert(w.end(), v.begin(), v.end());
    }
    char* rep = nullptr;
    const sixeq_status s =
        sixeq_compare(csv_a.c_str(), csv_b.c_str(), w.data(), w.size() / 2, &rep);
    if (s != SIXEQ_OK) return report_error(s, "compare");
    std::cout << rep << "\n";
    sixeq_string_free(rep);
    return 0;
  }

  if (*orc_cmd) {
    std::vector<double> l, r, xi;
    try {
      l = parse_doubles(left);
      r = parse_doubles(right);
      xi = parse_doubles(xi_list);
    } catch (const std::exception&) {
      l.clear();
    }
    if (l.size() != 3 || r.size() != 3) {
      std::cerr << "sixeq: --left/--right expect rho,u,p\n";
      return 2;
    }
    if (gamma_both) gl = gr = *gamma_both;
    if (pi_both) pl = pr = *pi_both;
    char* out = nullptr;
    const sixeq_status s = sixeq_oracle_euler({l[0], l[1], l[2]}, {r[0], r[1], r[2]},
                                              {gl, pl, 0.0}, {gr, pr, 0.0}, xi.data(), xi.size(),
                                              &out);
    if (s != SIXEQ_OK) return report_error(s, "oracle");
    std::cout << out << "\n";
    sixeq_string_free(out);
    return 0;
  }
  return 0;
}
