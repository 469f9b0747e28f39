// Copyright 2026 The astat Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: builds Fock modules, runs the verification
// suites, and emits spectrum/uncertainty/measurement/limit/evolution
// tables as text, CSV or JSON.
//
// Exit codes: 0 all exact checks pass, 1 at least one relation failed,
// 2 invalid arguments.  Output bodies are deterministic for fixed flags;
// the manifest timestamp is the only run-dependent field.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "astat/limits.hpp"
#include "astat/oscillator.hpp"

using nlohmann::json;
namespace fs = std::filesystem;
using namespace astat;

namespace {

constexpr const char* kArtifactVersion = "0.1.0";

struct CommonOpts {
  std::string format = "text";
  std::string out_dir;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render_csv(const Table& table) {
  std::ostringstream os;
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    os << (c ? "," : "") << table.columns[c];
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_cell(row[c]);
    os << "\n";
  }
  return os.str();
}

std::string render_table_text(const Table& table) {
  std::ostringstream os;
  os << "# " << table.name << "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    os << (c ? "\t" : "") << table.columns[c];
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "\t" : "") << csv_cell(row[c]);
    os << "\n";
  }
  return os.str();
}

json table_to_json(const Table& table) {
  return json{{"name", table.name}, {"columns", table.columns}, {"rows", table.rows}};
}

// A finished command: reports, tables and the human-readable summary lines.
struct CommandResult {
  std::string command;
  json parameters = json::object();
  std::vector<RelationReport> reports;
  std::vector<Table> tables;
  std::vector<std::string> text_lines;
  json extra = json::object();  // additional payload (dump command)
  bool tables_in_text = true;   // verify prints summaries only
  int exit_code = 0;
};

int emit(const CommandResult& result, const CommonOpts& common) {
  std::vector<std::string> outputs;
  const bool want_files = !common.out_dir.empty();
  fs::path dir(common.out_dir);
  fs::path json_path = dir / (result.command + ".json");
  fs::path csv_path = dir / (result.command + ".csv");
  if (want_files) {
    outputs.push_back(json_path.string());
    if (common.format == "csv" && !result.tables.empty())
      outputs.push_back(csv_path.string());
  }

  json doc;
  doc["manifest"] = json{{"command", result.command},
                         {"parameters", result.parameters},
                         {"timestamp", iso_timestamp()},
                         {"artifact_version", kArtifactVersion},
                         {"outputs", outputs}};
  doc["reports"] = result.reports;
  json tables = json::array();
  for (const auto& t : result.tables) tables.push_back(table_to_json(t));
  doc["tables"] = std::move(tables);
  for (const auto& [key, value] : result.extra.items()) doc[key] = value;

  if (common.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (common.format == "csv") {
    for (const auto& t : result.tables) std::cout << render_csv(t);
  } else {
    for (const auto& line : result.text_lines) std::cout << line << "\n";
    if (result.tables_in_text)
      for (const auto& t : result.tables) std::cout << render_table_text(t);
  }

  if (want_files) {
    fs::create_directories(dir);
    std::ofstream jf(json_path);
    jf << doc.dump(2) << "\n";
    if (common.format == "csv" && !result.tables.empty()) {
      std::ofstream cf(csv_path);
      for (const auto& t : result.tables) cf << render_csv(t);
    }
  }
  return result.exit_code;
}

Table reports_table(const std::vector<RelationReport>& reports) {
  Table t;
  t.name = "reports";
  t.columns = {"identity", "indices", "family", "n", "p", "residual_max_abs", "exact_pass"};
  for (const auto& r : reports) {
    std::ostringstream idx;
    for (std::size_t k = 0; k < r.indices.size(); ++k) idx << (k ? " " : "") << r.indices[k];
    t.rows.push_back({r.identity, idx.str(), family_tag_name(r.family.tag), r.family.n,
                      r.family.p, r.residual_max_abs, r.exact_pass});
  }
  return t;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (piece.empty()) throw CLI::ValidationError("empty entry in integer list");
    out.push_back(std::stoi(piece));
  }
  return out;
}

struct TimeGrid {
  double start = 0.0, stop = 0.0, step = 0.0;
};

TimeGrid parse_time_grid(const std::string& text) {
  TimeGrid grid;
  char c1 = 0, c2 = 0;
  std::istringstream is(text);
  if (!(is >> grid.start >> c1 >> grid.stop >> c2 >> grid.step) || c1 != ':' || c2 != ':')
    throw CLI::ValidationError("--t expects start:stop:step");
  if (grid.step <= 0 || grid.stop < grid.start)
    throw CLI::ValidationError("--t expects step > 0 and stop >= start");
  return grid;
}

PhaseConvention parse_phase(const std::string& name) {
  return name == "as-printed" ? PhaseConvention::AsPrinted : PhaseConvention::Standard;
}

// ---------------------------------------------------------------------------
// verify

CommandResult run_verify(const std::string& family, int n, int p, const std::string& phase) {
  CommandResult result;
  result.command = "verify";
  result.parameters = {{"family", family}, {"n", n}, {"p", p}, {"phase", phase}};
  const PhaseConvention convention = parse_phase(phase);

  std::vector<std::pair<std::string, std::vector<RelationReport>>> suites;
  if (family == "a") {
    suites.emplace_back("A-relations", verify_A_relations(n, p));
    suites.emplace_back("gl-relations", verify_gl_relations(n, p));
    suites.emplace_back("adjointness",
                        verify_adjointness(make_cao_set(build_module(StatisticsFamily::a(n, p)))));
  } else if (family == "asuper") {
    auto module = build_module(StatisticsFamily::a_super(n, p));
    suites.emplace_back("ASuper-relations", verify_ASuper_relations(n, p, convention));
    suites.emplace_back("adjointness", verify_adjointness(make_cao_set(module, convention)));
  } else if (family == "fermi") {
    if (p != 1) throw CLI::ValidationError("the Fermi family has order p = 1");
    auto module = build_module(StatisticsFamily::fermi(n));
    suites.emplace_back("paraFermi-relations",
                        verify_paraFermi_relations(make_cao_set(module, convention), 1));
    suites.emplace_back("adjointness", verify_adjointness(make_cao_set(module, convention)));
  } else if (family == "bose") {
    auto module = build_module(StatisticsFamily::truncated_bose(n, p));
    suites.emplace_back("paraBose-relations",
                        verify_paraBose_relations(make_cao_set(module),
                                                  interior_selector(module->family())));
    suites.emplace_back("adjointness", verify_adjointness(make_cao_set(module)));
  } else {
    throw CLI::ValidationError("unknown family: " + family);
  }

  bool ok = true;
  for (const auto& [name, reports] : suites) {
    result.text_lines.push_back(summary_line(name, reports));
    ok = ok && all_pass(reports);
    result.reports.insert(result.reports.end(), reports.begin(), reports.end());
  }
  result.text_lines.push_back(ok ? "RESULT: PASS" : "RESULT: FAIL");
  result.tables.push_back(reports_table(result.reports));
  result.tables_in_text = false;
  result.exit_code = ok ? 0 : 1;
  return result;
}

// ---------------------------------------------------------------------------
// spectrum

CommandResult run_spectrum(const OscillatorConfig& cfg) {
  CommandResult result;
  result.command = "spectrum";
  result.parameters = {{"p", cfg.p}, {"hbar", cfg.hbar}, {"mass", cfg.mass}, {"omega", cfg.omega}};
  Table t;
  t.name = "spectrum";
  t.columns = {"q", "energy", "multiplicity", "energy_natural"};
  for (const auto& line : spectrum(cfg))
    t.rows.push_back({line.q, line.energy, line.multiplicity, line.energy_natural.str()});
  result.tables.push_back(std::move(t));
  return result;
}

// ---------------------------------------------------------------------------
// uncertainty

CommandResult run_uncertainty(const OscillatorConfig& cfg, const Occupation& state) {
  CommandResult result;
  result.command = "uncertainty";
  result.parameters = {{"p", cfg.p}, {"state", state},   {"hbar", cfg.hbar},
                       {"mass", cfg.mass}, {"omega", cfg.omega}};
  UncertaintyRecord rec = uncertainty_report(cfg, state);
  Table t;
  t.name = "uncertainty";
  t.columns = {"axis",      "mean_R", "mean_P",       "dR",
               "dP",        "product", "product_hbar", "window_low_hbar",
               "window_high_hbar", "within_window"};
  for (int i = 0; i < 3; ++i) {
    t.rows.push_back({i + 1, rec.mean_position[i], rec.mean_momentum[i], rec.dev_position[i],
                      rec.dev_momentum[i], rec.product[i], rec.product_hbar[i].str(),
                      rec.window_low_hbar.str(), rec.window_high_hbar.str(),
                      rec.within_window});
  }
  result.tables.push_back(std::move(t));
  result.extra["record"] = rec;
  return result;
}

// ---------------------------------------------------------------------------
// measure

CommandResult run_measure(const OscillatorConfig& cfg, const Occupation& state) {
  CommandResult result;
  result.command = "measure";
  result.parameters = {{"p", cfg.p}, {"state", state},   {"hbar", cfg.hbar},
                       {"mass", cfg.mass}, {"omega", cfg.omega}};
  auto points = measurement_support(cfg, state);
  Table t;
  t.name = "support";
  t.columns = {"x_exact", "y_exact", "z_exact", "x", "y", "z"};
  for (const auto& pt : points) {
    t.rows.push_back({pt.exact[0].str(), pt.exact[1].str(), pt.exact[2].str(), pt.coords[0],
                      pt.coords[1], pt.coords[2]});
  }
  result.tables.push_back(std::move(t));
  result.text_lines.push_back("support points: " + std::to_string(points.size()) +
                              " (unit sqrt(hbar/2 m omega))");
  return result;
}

// ---------------------------------------------------------------------------
// limit

CommandResult run_limit(int n, const std::vector<int>& p_list, int cutoff) {
  CommandResult result;
  result.command = "limit";
  result.parameters = {{"n", n}, {"p_list", p_list}, {"cutoff", cutoff}};
  auto rows = boson_limit_deviation({n, p_list, cutoff});
  Table t;
  t.name = "boson_limit";
  t.columns = {"p", "dim", "deviation_max", "bound_2L_over_p"};
  for (const auto& row : rows)
    t.rows.push_back({row.p, row.dim, row.deviation_max, row.bound});
  result.tables.push_back(std::move(t));
  return result;
}

// ---------------------------------------------------------------------------
// evolve

CommandResult run_evolve(const OscillatorConfig& cfg, const Occupation& state,
                         const TimeGrid& grid) {
  CommandResult result;
  result.command = "evolve";
  result.parameters = {{"p", cfg.p},       {"state", state},
                       {"t_start", grid.start}, {"t_stop", grid.stop},
                       {"t_step", grid.step},   {"hbar", cfg.hbar},
                       {"mass", cfg.mass},      {"omega", cfg.omega}};
  auto module = build_module(StatisticsFamily::a_super(3, cfg.p));
  auto idx = module->index_of(state);
  if (!idx) throw CLI::ValidationError("state is not a basis label of the module");

  Table t;
  t.name = "trajectory";
  t.columns = {"t", "R1", "R2", "R3", "P1", "P2", "P3"};
  for (double time = grid.start; time <= grid.stop + 1e-12; time += grid.step) {
    EvolvedObservables frame = evolve(cfg, time);
    std::vector<json> row = {time};
    for (int k = 0; k < 3; ++k)
      row.push_back(frame.position[k][*idx * frame.dim + *idx].real());
    for (int k = 0; k < 3; ++k)
      row.push_back(frame.momentum[k][*idx * frame.dim + *idx].real());
    t.rows.push_back(std::move(row));
  }
  result.tables.push_back(std::move(t));
  return result;
}

// ---------------------------------------------------------------------------
// dump

CommandResult run_dump(const std::string& family, int n, int p) {
  CommandResult result;
  result.command = "dump";
  result.parameters = {{"family", family}, {"n", n}, {"p", p}};

  StatisticsFamily fam;
  if (family == "a") fam = StatisticsFamily::a(n, p);
  else if (family == "asuper") fam = StatisticsFamily::a_super(n, p);
  else if (family == "fermi") fam = StatisticsFamily::fermi(n);
  else if (family == "bose") fam = StatisticsFamily::truncated_bose(n, p);
  else throw CLI::ValidationError("unknown family: " + family);
  if (family == "fermi" && p != 1) throw CLI::ValidationError("the Fermi family has order p = 1");

  auto module = build_module(fam);
  json operators = json::object();
  for (int i = 1; i <= n; ++i) {
    operators["a" + std::to_string(i) + "+"] = creation(module, i);
    operators["a" + std::to_string(i) + "-"] = annihilation(module, i);
  }
  result.extra["module"] = *module;
  result.extra["operators"] = std::move(operators);
  result.text_lines.push_back("module dim " + std::to_string(module->dim()));
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Fock representations and verification suites for "
               "A-statistics and A-superstatistics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kArtifactVersion);

  CommonOpts common;
  std::string family = "a";
  std::string phase = "standard";
  std::string state_text = "0,0,0";
  std::string p_list_text;
  std::string t_text = "0:6.2831853:0.1";
  int n = 3;
  int p = 1;
  int cutoff = 0;
  OscillatorConfig cfg;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", common.out_dir, "Directory for report files");
  };
  auto add_physical = [&](CLI::App* cmd) {
    cmd->add_option("--hbar", cfg.hbar, "Planck constant");
    cmd->add_option("--mass", cfg.mass, "Oscillator mass");
    cmd->add_option("--omega", cfg.omega, "Angular frequency");
  };

  CLI::App* verify = app.add_subcommand("verify", "Run the exact relation suites");
  verify->add_option("--family", family, "a | asuper | fermi | bose")
      ->check(CLI::IsMember({"a", "asuper", "fermi", "bose"}));
  verify->add_option("--n", n, "Number of modes");
  verify->add_option("--p", p, "Order of statistics (cutoff for bose)");
  verify->add_option("--phase", phase, "Sign convention for ASuper/Fermi")
      ->check(CLI::IsMember({"standard", "as-printed"}));
  add_common(verify);

  CLI::App* spec_cmd = app.add_subcommand("spectrum", "Oscillator energy levels");
  spec_cmd->add_option("--p", cfg.p, "Order of statistics");
  add_physical(spec_cmd);
  add_common(spec_cmd);

  CLI::App* unc = app.add_subcommand("uncertainty", "Standard deviations of a basis state");
  unc->add_option("--p", cfg.p, "Order of statistics");
  unc->add_option("--state", state_text, "Occupation theta_1,theta_2,theta_3");
  add_physical(unc);
  add_common(unc);

  CLI::App* measure = app.add_subcommand("measure", "Measurement support of a basis state");
  measure->add_option("--p", cfg.p, "Order of statistics (requires p > 2)");
  measure->add_option("--state", state_text, "Occupation theta_1,theta_2,theta_3");
  add_physical(measure);
  add_common(measure);

  CLI::App* limit = app.add_subcommand("limit", "Boson-limit deviation table");
  limit->add_option("--n", n, "Number of modes");
  limit->add_option("--p-list", p_list_text, "Comma-separated increasing orders")->required();
  limit->add_option("--cutoff", cutoff, "Max total occupation of the probed subspace");
  add_common(limit);

  CLI::App* evolve_cmd = app.add_subcommand("evolve", "Expectation trajectories R(t), P(t)");
  evolve_cmd->add_option("--p", cfg.p, "Order of statistics");
  evolve_cmd->add_option("--state", state_text, "Occupation theta_1,theta_2,theta_3");
  evolve_cmd->add_option("--t", t_text, "Time grid start:stop:step");
  add_physical(evolve_cmd);
  add_common(evolve_cmd);

  CLI::App* dump = app.add_subcommand("dump", "Serialize a module and its CAO matrices");
  dump->add_option("--family", family, "a | asuper | fermi | bose")
      ->check(CLI::IsMember({"a", "asuper", "fermi", "bose"}));
  dump->add_option("--n", n, "Number of modes");
  dump->add_option("--p", p, "Order of statistics");
  add_common(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CommandResult result;
    if (verify->parsed()) {
      result = run_verify(family, n, p, phase);
    } else if (spec_cmd->parsed()) {
      result = run_spectrum(cfg);
    } else if (unc->parsed()) {
      result = run_uncertainty(cfg, parse_int_list(state_text));
    } else if (measure->parsed()) {
      result = run_measure(cfg, parse_int_list(state_text));
    } else if (limit->parsed()) {
      result = run_limit(n, parse_int_list(p_list_text), cutoff);
    } else if (evolve_cmd->parsed()) {
      result = run_evolve(cfg, parse_int_list(state_text), parse_time_grid(t_text));
    } else if (dump->parsed()) {
      result = run_dump(family, n, p);
    }
    return emit(result, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
