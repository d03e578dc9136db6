// Copyright 2026 The pishape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "runner.hpp"

#include <algorithm>
#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pishape/pishape.h"

namespace pishape::cli {

namespace {

constexpr double kMatchTolerance = 1e-12;

void check(pishape_status status, std::string_view module) {
  if (status == PISHAPE_OK) return;
  const std::string msg = std::string(module) + ": " + pishape_last_error();
  if (status == PISHAPE_ERR_INVALID_ARGUMENT) throw ConfigError(msg);
  throw ComputeError(msg);
}

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "null"; }

struct Rows {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::string report;
};

Rows run_source(const SweepSpec& s) {
  pishape_source_params p;
  pishape_source_params_default(&p);
  p.m_eff = s.number("m_eff");
  p.omega = s.number("omega");
  p.beta = s.number("beta");
  p.R = s.number("R");
  p.alpha_R = s.number("alpha_R");
  p.L_x = s.number("L_x");
  p.k = s.number("k");
  p.reg_delta = s.number("reg_delta");

  Rows out;
  if (s.text("mode") == "integrated") {
    pishape_hmatrix2 h;
    check(pishape_source_hmatrix(&p, &h), "source_delta_e");
    pishape_spin_split_result r;
    check(pishape_spin_split(&h, &r), "source_delta_e");
    out.columns = {"h11", "h22", "h12_re", "h12_im", "e_up", "e_down", "delta_e"};
    out.rows.push_back({h.h11.re, h.h22.re, h.h12.re, h.h12.im, r.e_up, r.e_down, r.delta_e});
    return out;
  }

  const int nx = s.count("x_count");
  const double lo = s.number("x_frac_min") * p.L_x, hi = s.number("x_frac_max") * p.L_x;
  if (lo > hi) throw ConfigError("source_delta_e: x_frac_min must not exceed x_frac_max");
  std::vector<double> xs(static_cast<std::size_t>(nx));
  for (int i = 0; i < nx; ++i) xs[i] = nx == 1 ? lo : lo + (hi - lo) * i / (nx - 1);

  const double y_min = s.number("y_min"), y_max = s.number("y_max");
  const int ny = s.count("y_points");
  out.columns = target_columns(Target::source_delta_e);
  if (ny == 1 || y_min == y_max) {
    // A single y sample is a chart of one column; query it directly.
    for (double x : xs) {
      pishape_hmatrix2 h;
      check(pishape_source_local_hmatrix(&p, x, y_min, &h), "source_delta_e");
      pishape_spin_split_result r;
      check(pishape_spin_split(&h, &r), "source_delta_e");
      out.rows.push_back({x, y_min, r.e_up, r.e_down, r.delta_e});
    }
    return out;
  }
  if (ny < 3) throw ConfigError("source_delta_e: y_points must be 1 or at least 3");
  pishape_table* t = nullptr;
  check(pishape_source_chart(&p, xs.data(), xs.size(), y_min, y_max, static_cast<size_t>(ny), &t),
        "source_delta_e");
  for (size_t i = 0; i < pishape_table_rows(t); ++i) {
    std::vector<double> row(pishape_table_cols(t));
    for (size_t j = 0; j < row.size(); ++j) pishape_table_value(t, i, j, &row[j]);
    out.rows.push_back(std::move(row));
  }
  pishape_table_free(t);
  return out;
}

Rows run_channel(const SweepSpec& s) {
  pishape_channel_params p;
  pishape_channel_params_default(&p);
  p.kind = s.text("potential") == "harmonic" ? PISHAPE_POTENTIAL_HARMONIC : PISHAPE_POTENTIAL_QUARTIC;
  p.m_eff = s.number("m_eff");
  p.omega = s.number("omega");
  p.a = s.number("a");
  p.coulomb_k = s.number("coulomb_k");
  p.fermi_l = s.number("fermi_l");
  p.include_vc = s.text("include_vc") == "1" ? 1 : 0;

  pishape_qlm_config cfg;
  check(pishape_qlm_config_default(&p, &cfg), "channel_qlm");
  if (s.is_set("g")) {
    cfg.g = s.number("g");
    if (!(cfg.g > 0.0)) throw ConfigError("channel_qlm: g must be positive");
    cfg.y_max = 9.0 / std::sqrt(cfg.g);
  }
  if (s.is_set("y_max")) cfg.y_max = s.number("y_max");
  cfg.n_points = static_cast<size_t>(s.count("n_points"));
  cfg.max_iterations = s.count("max_iterations");
  cfg.quad_tol = s.number("quad_tol");

  pishape_qlm_result* r = nullptr;
  check(pishape_qlm_run(&p, &cfg, &r), "channel_qlm");
  Rows out;
  out.columns = target_columns(Target::channel_qlm);
  for (size_t i = 0; i < pishape_qlm_iterations(r); ++i) {
    double e = 0.0;
    pishape_qlm_energy(r, i, &e);
    out.rows.push_back({static_cast<double>(i + 1), e});
  }
  const bool complete = pishape_qlm_complete(r) != 0;
  const std::string failure = pishape_qlm_failure(r);
  pishape_qlm_free(r);
  if (!complete) throw ComputeError("channel_qlm: " + failure);
  return out;
}

Rows run_twoqubit(const SweepSpec& s) {
  double h0 = 0.0;
  pishape_complex hr{0.0, 0.0};
  if (s.text("input") == "direct") {
    h0 = s.number("h0");
    hr = {s.number("hr_re"), s.number("hr_im")};
  } else {
    pishape_twoqubit_params p;
    pishape_twoqubit_params_default(&p);
    p.m_eff = s.number("m_eff");
    p.omega = s.number("omega");
    p.a_B = s.number("a_B");
    p.lambda = s.number("lambda");
    p.k = s.number("k");
    p.alpha_R = s.number("alpha_R");
    p.coulomb_k = s.number("coulomb_k");
    p.fermi_l = s.number("fermi_l");
    p.wave_direction = s.text("wave_direction") == "along_x" ? PISHAPE_WAVE_ALONG_X : PISHAPE_WAVE_ALONG_Y;
    check(pishape_twoqubit_expectations(&p, &h0, &hr), "twoqubit_eigen");
  }

  pishape_eigen_report* r = nullptr;
  check(pishape_twoqubit_check(h0, hr, &r), "twoqubit_eigen");
  std::vector<double> row = {h0, hr.re, hr.im};
  for (auto get : {pishape_report_claimed_eigenvalue, pishape_report_numeric_eigenvalue}) {
    for (size_t i = 0; i < 4; ++i) {
      pishape_complex z{NAN, NAN};
      get(r, i, &z);
      row.insert(row.end(), {z.re, z.im});
    }
  }
  for (size_t i = 0; i < 4; ++i) {
    double res = NAN;
    pishape_report_residual(r, i, &res);
    row.push_back(res);
  }
  row.insert(row.end(), {pishape_report_set_difference(r), double(pishape_report_hermitian(r)),
                         double(pishape_report_degenerate(r))});
  Rows out{target_columns(Target::twoqubit_eigen), {std::move(row)}, pishape_report_json(r)};
  pishape_report_free(r);
  return out;
}

// Owns a gate handle for the duration of one computation.
class GateHandle {
 public:
  GateHandle() = default;
  GateHandle(const GateHandle&) = delete;
  GateHandle& operator=(const GateHandle&) = delete;
  ~GateHandle() { pishape_gate_free(g_); }
  pishape_gate** out() { return &g_; }
  const pishape_gate* get() const { return g_; }

 private:
  pishape_gate* g_ = nullptr;
};

double gate_fidelity(const GateHandle& a, const GateHandle& b) {
  double f = 0.0;
  check(pishape_gate_fidelity(a.get(), b.get(), &f), "gate_check");
  return f;
}

Rows run_gates(const SweepSpec& s) {
  const double alpha = s.number("alpha");
  GateHandle u, proj, expo, swap, sqrt_swap, cnot, synth;
  check(pishape_gate_u_swap_alpha(alpha, u.out()), "gate_check");
  check(pishape_gate_u_swap_projector(alpha, proj.out()), "gate_check");
  check(pishape_gate_exchange_evolution_expm(alpha, expo.out()), "gate_check");
  check(pishape_gate_swap(swap.out()), "gate_check");
  check(pishape_gate_sqrt_swap(sqrt_swap.out()), "gate_check");
  check(pishape_gate_cnot(cnot.out()), "gate_check");
  double synth_fidelity = 0.0;
  check(pishape_gate_cnot_from_sqrt_swap(synth.out(), nullptr, nullptr, &synth_fidelity), "gate_check");

  double unitarity = 0.0;
  check(pishape_gate_unitarity_error(u.get(), &unitarity), "gate_check");
  const pishape_complex up_down[4] = {{0, 0}, {1, 0}, {0, 0}, {0, 0}};
  pishape_complex moved[4];
  check(pishape_gate_apply(u.get(), up_down, moved), "gate_check");
  double conc = 0.0;
  check(pishape_concurrence(moved, &conc), "gate_check");
  double identity_error = 0.0;
  check(pishape_exchange_identity_error(&identity_error), "gate_check");

  const double f_swap = gate_fidelity(u, swap), f_sqrt = gate_fidelity(u, sqrt_swap);
  std::vector<double> row = {alpha,  unitarity, gate_fidelity(u, proj), gate_fidelity(u, expo),
                             f_swap, f_sqrt,    conc};
  for (size_t r = 0; r < 4; ++r) {
    for (size_t c = 0; c < 4; ++c) {
      pishape_complex z;
      check(pishape_gate_entry(u.get(), r, c, &z), "gate_check");
      row.insert(row.end(), {z.re, z.im});
    }
  }
  std::ostringstream report;
  report << "{\"alpha\":" << json_number(alpha)
         << ",\"swap_matches\":" << (f_swap >= 1.0 - kMatchTolerance ? "true" : "false")
         << ",\"sqrt_swap_matches\":" << (f_sqrt >= 1.0 - kMatchTolerance ? "true" : "false")
         << ",\"exchange_identity_error\":" << json_number(identity_error)
         << ",\"cnot_fidelity\":" << json_number(synth_fidelity)
         << ",\"cnot_matches\":" << (synth_fidelity >= 1.0 - 1e-10 ? "true" : "false") << "}";
  return {target_columns(Target::gate_check), {std::move(row)}, report.str()};
}

Rows run_point(const SweepSpec& s) {
  switch (s.target) {
    case Target::source_delta_e: return run_source(s);
    case Target::channel_qlm: return run_channel(s);
    case Target::twoqubit_eigen: return run_twoqubit(s);
    case Target::gate_check: return run_gates(s);
  }
  throw ConfigError("unknown target");
}

std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    char* end = nullptr;
    const long long v = std::strtoll(epoch, &end, 10);
    if (end != nullptr && *end == '\0') now = static_cast<std::time_t>(v);
  }
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Writes to a sibling temporary file and renames it into place.
void write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ComputeError("cannot open '" + tmp + "' for writing");
    f << content;
    if (!f.flush()) throw ComputeError("failed writing '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw ComputeError("cannot move output into '" + path + "'");
  }
}

}  // namespace

Table compute(const SweepSpec& spec) {
  Table t;
  std::vector<double> points;
  if (spec.sweep_key) {
    const SweepRange& r = spec.sweep_range;
    for (int i = 0; i < r.steps; ++i)
      points.push_back(r.steps == 1 ? r.start : r.start + (r.stop - r.start) * i / (r.steps - 1));
  } else {
    points.push_back(NAN);
  }
  bool prepend = false;
  for (double value : points) {
    SweepSpec point = spec;
    if (spec.sweep_key) point.parameters[*spec.sweep_key] = format_number(value);
    Rows rows = run_point(point);
    if (t.columns.empty()) {
      // Skip the extra column when the target already reports the swept key.
      prepend = spec.sweep_key && std::find(rows.columns.begin(), rows.columns.end(),
                                            *spec.sweep_key) == rows.columns.end();
      if (prepend) t.columns.push_back(*spec.sweep_key);
      t.columns.insert(t.columns.end(), rows.columns.begin(), rows.columns.end());
    }
    for (auto& row : rows.rows) {
      if (prepend) row.insert(row.begin(), value);
      t.rows.push_back(std::move(row));
    }
    if (!rows.report.empty()) t.reports.push_back(std::move(rows.report));
  }
  return t;
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw ComputeError("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

RunManifest make_manifest(const SweepSpec& spec) {
  RunManifest m;
  m.tool_version = pishape_version();
  m.timestamp = iso_timestamp();
  m.resolved_parameters = spec.resolved();
  std::string canonical;
  for (const auto& [k, v] : m.resolved_parameters) canonical += k + "=" + v + "\n";
  m.input_hash = sha256_hex(canonical);
  return m;
}

std::string RunManifest::to_json() const {
  std::string out = "{\"tool_version\":" + json_string(tool_version) + ",\"timestamp\":" + json_string(timestamp) +
                    ",\"resolved_parameters\":{";
  bool first = true;
  for (const auto& [k, v] : resolved_parameters) {
    out += (first ? "" : ",") + json_string(k) + ":" + json_string(v);
    first = false;
  }
  return out + "},\"input_hash\":" + json_string(input_hash) + "}";
}

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t j = 0; j < t.columns.size(); ++j) out += (j ? "," : "") + t.columns[j];
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + format_number(row[j]);
    out += "\n";
  }
  return out;
}

std::string render_json(const Table& t, const RunManifest& m) {
  std::string out = "{\n\"manifest\":" + m.to_json() + ",\n\"columns\":[";
  for (std::size_t j = 0; j < t.columns.size(); ++j) out += (j ? "," : "") + json_string(t.columns[j]);
  out += "],\n\"rows\":[";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out += i ? ",\n[" : "\n[";
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) out += (j ? "," : "") + json_number(t.rows[i][j]);
    out += "]";
  }
  out += "\n]";
  if (!t.reports.empty()) {
    out += ",\n\"reports\":[";
    for (std::size_t i = 0; i < t.reports.size(); ++i) out += (i ? ",\n" : "\n") + t.reports[i];
    out += "\n]";
  }
  return out + "\n}\n";
}

int run(const SweepSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    const Table table = compute(spec);
    const RunManifest manifest = make_manifest(spec);
    const std::string body = spec.output_format == OutputFormat::csv ? render_csv(table)
                                                                     : render_json(table, manifest);
    const std::string manifest_text = manifest.to_json() + "\n";
    if (spec.output_path == "-") {
      out << body;
      out.flush();
      err << manifest_text;
    } else {
      const std::string sidecar = spec.output_path + ".manifest.json";
      write_file(sidecar, manifest_text);
      try {
        write_file(spec.output_path, body);
      } catch (...) {
        std::error_code ec;
        std::filesystem::remove(sidecar, ec);
        throw;
      }
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pishape::cli
