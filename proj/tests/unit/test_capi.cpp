#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "sixeq/sixeq.h"

namespace fs = std::filesystem;

namespace {
struct Str {
  char* p = nullptr;
  ~Str() { sixeq_string_free(p); }
  std::string s() const { return p ? std::string(p) : std::string(); }
};

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("sixeq_test_capi_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}
}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(sixeq_version()) == "1.0.0");
  CHECK(std::string(sixeq_status_name(SIXEQ_OK)) == "ok");
  CHECK(sixeq_exit_code(SIXEQ_OK) == 0);
  CHECK(sixeq_exit_code(SIXEQ_ERR_CONFIG) == 2);
  CHECK(sixeq_exit_code(SIXEQ_ERR_POSITIVITY) == 3);
  CHECK(sixeq_exit_code(SIXEQ_ERR_RELAXATION) == 4);
  CHECK(sixeq_exit_code(SIXEQ_ERR_IO) == 5);
  Str names;
  REQUIRE(sixeq_builtin_names(&names.p) == SIXEQ_OK);
  CHECK(names.s().find("water-air") != std::string::npos);
  CHECK(names.s().find("riemann-2d") != std::string::npos);
}

TEST_CASE("config handles") {
  sixeq_config* cfg = nullptr;
  CHECK(sixeq_config_builtin("nope", &cfg) == SIXEQ_ERR_CONFIG);
  CHECK(cfg == nullptr);
  CHECK(std::string(sixeq_last_error()).find("water-air") != std::string::npos);

  REQUIRE(sixeq_config_builtin("water-air", &cfg) == SIXEQ_OK);
  CHECK(sixeq_config_set(cfg, "scheme.flux", "HLLC") == SIXEQ_OK);
  CHECK(sixeq_config_set(cfg, "scheme.noncons", "Crouzet") == SIXEQ_OK);
  Str label;
  REQUIRE(sixeq_config_scheme_label(cfg, &label.p) == SIXEQ_OK);
  CHECK(label.s() == "HLLC+Crouzet");
  CHECK(sixeq_config_known_fragile(cfg) == 1);

  // a bad value leaves the config untouched
  CHECK(sixeq_config_set(cfg, "scheme.courant", "0") == SIXEQ_ERR_CONFIG);
  CHECK(sixeq_config_set(cfg, "scheme.bogus", "1") == SIXEQ_ERR_CONFIG);
  Str text;
  REQUIRE(sixeq_config_serialize(cfg, &text.p) == SIXEQ_OK);
  CHECK(text.s().find("courant = 0.9") != std::string::npos);

  sixeq_config* back = nullptr;
  REQUIRE(sixeq_config_parse(text.p, &back) == SIXEQ_OK);
  Str text2;
  REQUIRE(sixeq_config_serialize(back, &text2.p) == SIXEQ_OK);
  CHECK(text.s() == text2.s());
  sixeq_config_free(back);
  sixeq_config_free(cfg);
  sixeq_config_free(nullptr);

  CHECK(sixeq_config_load("/nonexistent/x.cfg", &cfg) == SIXEQ_ERR_IO);
  CHECK(sixeq_config_parse(nullptr, &cfg) == SIXEQ_ERR_INVALID_ARGUMENT);
  CHECK(sixeq_config_parse("[case]\nbuiltin = water-air\n", nullptr) ==
        SIXEQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("run through the C API, success and failure") {
  const fs::path dir = scratch("run");
  sixeq_config* cfg = nullptr;
  REQUIRE(sixeq_config_builtin("sonic-rarefaction", &cfg) == SIXEQ_OK);
  REQUIRE(sixeq_config_set(cfg, "run.n_cells", "64") == SIXEQ_OK);
  REQUIRE(sixeq_config_set(cfg, "run.output_dir", (dir / "ok").c_str()) == SIXEQ_OK);
  REQUIRE(sixeq_config_set(cfg, "run.emit_plots", "true") == SIXEQ_OK);
  sixeq_result* res = nullptr;
  REQUIRE(sixeq_run(cfg, 1, &res) == SIXEQ_OK);
  CHECK(sixeq_result_status(res) == SIXEQ_OK);
  CHECK(sixeq_result_snapshot_count(res) == 1);
  CHECK(fs::exists(sixeq_result_snapshot_path(res, 0)));
  CHECK(sixeq_result_snapshot_path(res, 5) == nullptr);
  CHECK(fs::exists(sixeq_result_report_path(res)));
  CHECK(fs::exists(sixeq_result_plot_script(res)));
  CHECK(std::string(sixeq_result_report_json(res)).find("\"oracle\"") != std::string::npos);
  sixeq_result_free(res);
  sixeq_config_free(cfg);

  REQUIRE(sixeq_config_builtin("low-density", &cfg) == SIXEQ_OK);
  REQUIRE(sixeq_config_set(cfg, "scheme.flux", "HLLC") == SIXEQ_OK);
  REQUIRE(sixeq_config_set(cfg, "scheme.noncons", "Crouzet") == SIXEQ_OK);
  REQUIRE(sixeq_config_set(cfg, "run.output_dir", (dir / "bad").c_str()) == SIXEQ_OK);
  res = nullptr;
  const sixeq_status st = sixeq_run(cfg, 0, &res);
  CHECK(st == SIXEQ_ERR_POSITIVITY);
  REQUIRE(res != nullptr);
  CHECK(sixeq_result_status(res) == st);
  CHECK(std::string(sixeq_result_report_json(res)).find("HLLC+Crouzet") != std::string::npos);
  sixeq_result_free(res);
  sixeq_config_free(cfg);
}

TEST_CASE("compare and plot script through the C API") {
  const fs::path dir = scratch("cmp");
  sixeq_config* cfg = nullptr;
  REQUIRE(sixeq_config_builtin("sonic-rarefaction", &cfg) == SIXEQ_OK);
  REQUIRE(sixeq_config_set(cfg, "run.n_cells", "32") == SIXEQ_OK);
  REQUIRE(sixeq_config_set(cfg, "run.output_dir", dir.c_str()) == SIXEQ_OK);
  sixeq_result* res = nullptr;
  REQUIRE(sixeq_run(cfg, 0, &res) == SIXEQ_OK);
  const std::string csv = sixeq_result_snapshot_path(res, 0);
  sixeq_result_free(res);
  sixeq_config_free(cfg);

  const double win[2] = {0.0, 0.2};
  Str rep;
  REQUIRE(sixeq_compare(csv.c_str(), csv.c_str(), win, 1, &rep.p) == SIXEQ_OK);
  CHECK(rep.s().find("\"l1\": 0.0") != std::string::npos);
  Str bad;
  CHECK(sixeq_compare(csv.c_str(), "/nonexistent.csv", nullptr, 0, &bad.p) == SIXEQ_ERR_IO);

  const char* labels[] = {"a"};
  const char* paths[] = {csv.c_str()};
  const char* fields[] = {"alpha1", "p1"};
  CHECK(sixeq_emit_plot_script(labels, paths, 1, fields, 2, (dir / "p.py").c_str()) == SIXEQ_OK);
  CHECK(fs::exists(dir / "p.py"));
  const char* nofield[] = {"nothing"};
  CHECK(sixeq_emit_plot_script(labels, paths, 1, nofield, 1, (dir / "q.py").c_str()) ==
        SIXEQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("exact Euler oracle through the C API") {
  const sixeq_eos ideal{1.4, 0.0, 0.0};
  const double xi[3] = {-5.0, 0.0, 5.0};
  Str j;
  REQUIRE(sixeq_oracle_euler({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, ideal, ideal, xi, 3, &j.p) ==
          SIXEQ_OK);
  CHECK(j.s().find("0.3031") != std::string::npos);
  Str v;
  CHECK(sixeq_oracle_euler({1.0, -20.0, 1.0}, {1.0, 20.0, 1.0}, ideal, ideal, xi, 3, &v.p) ==
        SIXEQ_ERR_VACUUM);
  Str bad;
  CHECK(sixeq_oracle_euler({-1.0, 0.0, 1.0}, {1.0, 0.0, 1.0}, ideal, ideal, xi, 3, &bad.p) ==
        SIXEQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sweep through the C API") {
  const fs::path dir = scratch("sweep");
  sixeq_config* cfg = nullptr;
  REQUIRE(sixeq_config_builtin("epoxy-spinel", &cfg) == SIXEQ_OK);
  REQUIRE(sixeq_config_set(cfg, "run.n_cells", "32") == SIXEQ_OK);
  REQUIRE(sixeq_config_set(cfg, "scheme.relax", "true") == SIXEQ_OK);
  REQUIRE(sixeq_config_set(cfg, "run.output_dir", dir.c_str()) == SIXEQ_OK);
  const double p[2] = {1e6, 1e11};
  Str j;
  REQUIRE(sixeq_sweep(cfg, p, 2, &j.p) == SIXEQ_OK);
  CHECK(j.s().find("epoxy-spinel-pL") != std::string::npos);
  sixeq_config_free(cfg);
}
