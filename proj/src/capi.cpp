#include "sixeq/sixeq.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sixeq/io.hpp"

using namespace sixeq;

struct sixeq_config {
  ConfigDocument doc;
  RunConfig cfg;
};

struct sixeq_result {
  RunArtifacts art;
  sixeq_status status = SIXEQ_OK;
};

namespace {

thread_local std::string g_last_error;

sixeq_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return SIXEQ_ERR_INVALID_ARGUMENT;
    case ErrorKind::InadmissibleState: return SIXEQ_ERR_INADMISSIBLE;
    case ErrorKind::DegenerateFan: return SIXEQ_ERR_DEGENERATE_FAN;
    case ErrorKind::Positivity: return SIXEQ_ERR_POSITIVITY;
    case ErrorKind::RelaxationFailure: return SIXEQ_ERR_RELAXATION;
    case ErrorKind::Vacuum: return SIXEQ_ERR_VACUUM;
    case ErrorKind::NoConvergence: return SIXEQ_ERR_NO_CONVERGENCE;
    case ErrorKind::Config: return SIXEQ_ERR_CONFIG;
    case ErrorKind::Io: return SIXEQ_ERR_IO;
    case ErrorKind::Internal: return SIXEQ_ERR_INTERNAL;
  }
  return SIXEQ_ERR_INTERNAL;
}

sixeq_status fail(sixeq_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs fn and converts every exception into a status.
template <class Fn>
sixeq_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SIXEQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SIXEQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SIXEQ_ERR_INTERNAL, "unknown exception");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

#define SIXEQ_REQUIRE(cond, what) \
  if (!(cond)) return fail(SIXEQ_ERR_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* sixeq_version(void) { return "1.0.0"; }

const char* sixeq_last_error(void) { return g_last_error.c_str(); }

const char* sixeq_status_name(sixeq_status s) {
  switch (s) {
    case SIXEQ_OK: return "ok";
    case SIXEQ_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case SIXEQ_ERR_CONFIG: return "config";
    case SIXEQ_ERR_POSITIVITY: return "positivity";
    case SIXEQ_ERR_RELAXATION: return "relaxation-failure";
    case SIXEQ_ERR_IO: return "io";
    case SIXEQ_ERR_INADMISSIBLE: return "inadmissible-state";
    case SIXEQ_ERR_DEGENERATE_FAN: return "degenerate-fan";
    case SIXEQ_ERR_VACUUM: return "vacuum";
    case SIXEQ_ERR_NO_CONVERGENCE: return "no-convergence";
    case SIXEQ_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

int sixeq_exit_code(sixeq_status s) {
  switch (s) {
    case SIXEQ_OK: return 0;
    case SIXEQ_ERR_CONFIG:
    case SIXEQ_ERR_INVALID_ARGUMENT: return 2;
    case SIXEQ_ERR_POSITIVITY:
    case SIXEQ_ERR_INADMISSIBLE: return 3;
    case SIXEQ_ERR_RELAXATION: return 4;
    case SIXEQ_ERR_IO: return 5;
    default: return 1;
  }
}

sixeq_status sixeq_builtin_names(char** out) {
  SIXEQ_REQUIRE(out, "out is NULL");
  return guarded([&] {
    std::string s;
    for (const auto& n : builtin_names()) s += n + "\n";
    *out = dup(s);
    return SIXEQ_OK;
  });
}

sixeq_status sixeq_config_parse(const char* text, sixeq_config** out) {
  SIXEQ_REQUIRE(text && out, "text and out must not be NULL");
  *out = nullptr;
  return guarded([&] {
    auto h = std::make_unique<sixeq_config>();
    h->doc = parse_config_document(text);
    h->cfg = resolve_config(h->doc);
    *out = h.release();
    return SIXEQ_OK;
  });
}

sixeq_status sixeq_config_load(const char* path, sixeq_config** out) {
  SIXEQ_REQUIRE(path && out, "path and out must not be NULL");
  *out = nullptr;
  return guarded([&] {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, std::string("cannot read config file '") + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    auto h = std::make_unique<sixeq_config>();
    h->doc = parse_config_document(ss.str());
    h->cfg = resolve_config(h->doc);
    *out = h.release();
    return SIXEQ_OK;
  });
}

sixeq_status sixeq_config_builtin(const char* case_name, sixeq_config** out) {
  SIXEQ_REQUIRE(case_name && out, "case_name and out must not be NULL");
  *out = nullptr;
  return guarded([&] {
    auto h = std::make_unique<sixeq_config>();
    h->doc.set("case.builtin", case_name);
    h->cfg = resolve_config(h->doc);
    *out = h.release();
    return SIXEQ_OK;
  });
}

sixeq_status sixeq_config_set(sixeq_config* cfg, const char* key, const char* value) {
  SIXEQ_REQUIRE(cfg && key && value, "cfg, key and value must not be NULL");
  return guarded([&] {
    ConfigDocument d = cfg->doc;
    d.set(key, value);
    RunConfig resolved = resolve_config(d);
    cfg->doc = std::move(d);
    cfg->cfg = std::move(resolved);
    return SIXEQ_OK;
  });
}

sixeq_status sixeq_config_serialize(const sixeq_config* cfg, char** out) {
  SIXEQ_REQUIRE(cfg && out, "cfg and out must not be NULL");
  return guarded([&] {
    *out = dup(serialize_config(cfg->cfg));
    return SIXEQ_OK;
  });
}

sixeq_status sixeq_config_scheme_label(const sixeq_config* cfg, char** out) {
  SIXEQ_REQUIRE(cfg && out, "cfg and out must not be NULL");
  return guarded([&] {
    *out = dup(cfg->cfg.scheme.label());
    return SIXEQ_OK;
  });
}

int sixeq_config_known_fragile(const sixeq_config* cfg) {
  return cfg && cfg->cfg.scheme.known_fragile() ? 1 : 0;
}

void sixeq_config_free(sixeq_config* cfg) { delete cfg; }

sixeq_status sixeq_run(const sixeq_config* cfg, int score_euler, sixeq_result** out) {
  SIXEQ_REQUIRE(cfg && out, "cfg and out must not be NULL");
  *out = nullptr;
  return guarded([&] {
    auto r = std::make_unique<sixeq_result>();
    r->art = execute_run(cfg->cfg, score_euler != 0);
    if (!r->art.result.ok) {
      r->status = status_of(r->art.result.error_kind);
      g_last_error = r->art.result.error_message;
    }
    const sixeq_status s = r->status;
    *out = r.release();
    return s;
  });
}

sixeq_status sixeq_result_status(const sixeq_result* r) {
  return r ? r->status : SIXEQ_ERR_INVALID_ARGUMENT;
}

const char* sixeq_result_report_json(const sixeq_result* r) {
  return r ? r->art.report_json.c_str() : nullptr;
}

const char* sixeq_result_report_path(const sixeq_result* r) {
  return r ? r->art.report_path.c_str() : nullptr;
}

size_t sixeq_result_snapshot_count(const sixeq_result* r) {
  return r ? r->art.snapshot_paths.size() : 0;
}

const char* sixeq_result_snapshot_path(const sixeq_result* r, size_t i) {
  if (!r || i >= r->art.snapshot_paths.size()) return nullptr;
  return r->art.snapshot_paths[i].c_str();
}

const char* sixeq_result_plot_script(const sixeq_result* r) {
  return r ? r->art.plot_script.c_str() : nullptr;
}

void sixeq_result_free(sixeq_result* r) { delete r; }

sixeq_status sixeq_sweep(const sixeq_config* cfg, const double* p_left, size_t n,
                         char** summary_json) {
  SIXEQ_REQUIRE(cfg && summary_json, "cfg and summary_json must not be NULL");
  SIXEQ_REQUIRE(p_left || n == 0, "p_left is NULL but n > 0");
  *summary_json = nullptr;
  return guarded([&] {
    const std::vector<double> ps =
        p_left ? std::vector<double>(p_left, p_left + n) : epoxy_sweep_pressures();
    const auto cases = epoxy_sweep(ps);
    nlohmann::json summary;
    summary["case"] = "epoxy-spinel";
    summary["scheme"] = cfg->cfg.scheme.label();
    summary["runs"] = nlohmann::json::array();
    for (std::size_t i = 0; i < cases.size(); ++i) {
      RunConfig rc = cfg->cfg;
      rc.problem = cases[i];
      rc.snapshots.clear();
      char sub[64];
      std::snprintf(sub, sizeof sub, "pL_%g", ps[i]);
      rc.output_dir = (std::filesystem::path(cfg->cfg.output_dir) / sub).string();
      const RunArtifacts art = execute_run(rc);
      summary["runs"].push_back({{"p_left", ps[i]},
                                 {"ok", art.result.ok},
                                 {"output_dir", rc.output_dir},
                                 {"report", nlohmann::json::parse(art.report_json)}});
    }
    *summary_json = dup(summary.dump(2));
    return SIXEQ_OK;
  });
}

sixeq_status sixeq_compare(const char* csv_a, const char* csv_b, const double* windows,
                           size_t n_windows, char** report_json) {
  SIXEQ_REQUIRE(csv_a && csv_b && report_json, "paths and report_json must not be NULL");
  SIXEQ_REQUIRE(windows || n_windows == 0, "windows is NULL but n_windows > 0");
  *report_json = nullptr;
  return guarded([&] {
    std::vector<std::pair<double, double>> w;
    for (size_t i = 0; i < n_windows; ++i) w.emplace_back(windows[2 * i], windows[2 * i + 1]);
    const CompareReport rep = compare_runs(read_snapshot(csv_a), read_snapshot(csv_b), w);
    *report_json = dup(compare_report_json(rep));
    return SIXEQ_OK;
  });
}

sixeq_status sixeq_oracle_euler(sixeq_euler_state left, sixeq_euler_state right,
                                sixeq_eos eos_left, sixeq_eos eos_right, const double* xi,
                                size_t n_xi, char** json_out) {
  SIXEQ_REQUIRE(json_out, "json_out must not be NULL");
  SIXEQ_REQUIRE(xi || n_xi == 0, "xi is NULL but n_xi > 0");
  *json_out = nullptr;
  return guarded([&] {
    const EosParams eL{eos_left.gamma, eos_left.pi_inf, eos_left.eta};
    const EosParams eR{eos_right.gamma, eos_right.pi_inf, eos_right.eta};
    const EulerFan fan = solve_exact({left.rho, left.u, left.p}, {right.rho, right.u, right.p},
                                     eL, eR);
    nlohmann::json j;
    j["p_star"] = fan.pStar;
    j["u_star"] = fan.uStar;
    j["rho_star_left"] = fan.rhoStarL;
    j["rho_star_right"] = fan.rhoStarR;
    j["left_wave"] = to_string(fan.leftWave);
    j["right_wave"] = to_string(fan.rightWave);
    j["speeds"] = {{"left_head", fan.leftHead},
                   {"left_tail", fan.leftTail},
                   {"right_tail", fan.rightTail},
                   {"right_head", fan.rightHead}};
    j["iterations"] = fan.iterations;
    j["residual"] = fan.residual;
    j["samples"] = nlohmann::json::array();
    for (size_t i = 0; i < n_xi; ++i) {
      const EulerState s = fan.sample(xi[i]);
      j["samples"].push_back({{"xi", xi[i]}, {"rho", s.rho}, {"u", s.u}, {"p", s.p}});
    }
    *json_out = dup(j.dump(2));
    return SIXEQ_OK;
  });
}

sixeq_status sixeq_emit_plot_script(const char* const* labels, const char* const* csv_paths,
                                    size_t n_series, const char* const* fields, size_t n_fields,
                                    const char* script_path) {
  SIXEQ_REQUIRE(csv_paths && fields && script_path, "arguments must not be NULL");
  return guarded([&] {
    std::vector<PlotSeries> series;
    for (size_t i = 0; i < n_series; ++i) {
      SIXEQ_REQUIRE(csv_paths[i], "NULL snapshot path");
      const std::string label =
          labels && labels[i] ? labels[i] : std::filesystem::path(csv_paths[i]).stem().string();
      series.push_back({label, csv_paths[i]});
    }
    std::vector<std::string> f;
    for (size_t i = 0; i < n_fields; ++i) {
      SIXEQ_REQUIRE(fields[i], "NULL field name");
      f.emplace_back(fields[i]);
    }
    emit_plot_script(series, f, script_path);
    return SIXEQ_OK;
  });
}

void sixeq_string_free(char* s) { std::free(s); }

}  // extern "C"
