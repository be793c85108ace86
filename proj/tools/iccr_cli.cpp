#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iccr/experiment.hpp"
#include "iccr/validate.hpp"

namespace {

using iccr::Boundary;
using iccr::ExperimentConfig;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::runtime_error("invalid " + what + ": '" + text + "'");
  }
  if (used != text.size()) throw std::runtime_error("invalid " + what + ": '" + text + "'");
  return v;
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw std::runtime_error("invalid " + what + ": '" + text + "'");
  }
  if (used != text.size()) throw std::runtime_error("invalid " + what + ": '" + text + "'");
  return v;
}

Boundary parse_boundary(const std::string& text) {
  if (text == "ring") return Boundary::Ring;
  if (text == "open") return Boundary::Open;
  throw std::runtime_error("boundary must be 'ring' or 'open', got '" + text + "'");
}

std::vector<double> parse_orders(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const double v = parse_double(trim(item), "entropy order");
    if (v <= 0.0) throw std::runtime_error("entropy orders must be positive");
    out.push_back(v);
  }
  if (out.empty()) throw std::runtime_error("sre_orders must not be empty");
  return out;
}

// "lo:hi:step" (inclusive) or a single value.
std::vector<double> parse_grid(const std::string& text, const std::string& what) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) return {parse_double(text, what)};
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw std::runtime_error(what + " range needs lo:hi:step");
  const double lo = parse_double(text.substr(0, c1), what);
  const double hi = parse_double(text.substr(c1 + 1, c2 - c1 - 1), what);
  const double step = parse_double(text.substr(c2 + 1), what);
  if (step <= 0.0 || hi < lo) throw std::runtime_error("bad " + what + " range '" + text + "'");
  std::vector<double> out;
  const auto count = static_cast<std::size_t>((hi - lo) / step + 1e-9) + 1;
  for (std::size_t k = 0; k < count; ++k) out.push_back(lo + static_cast<double>(k) * step);
  return out;
}

void apply_config_file(const std::string& path, ExperimentConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key == "n_qubits") {
      cfg.n_qubits = static_cast<std::uint32_t>(parse_uint(value, key));
    } else if (key == "depth") {
      cfg.depth = static_cast<std::uint32_t>(parse_uint(value, key));
    } else if (key == "meas_rate") {
      cfg.meas_rate = parse_double(value, key);
    } else if (key == "n_trajectories") {
      cfg.n_trajectories = static_cast<std::uint32_t>(parse_uint(value, key));
    } else if (key == "seed") {
      cfg.seed = parse_uint(value, key);
    } else if (key == "boundary") {
      cfg.boundary = parse_boundary(value);
    } else if (key == "initial_angle") {
      cfg.initial_angle = parse_double(value, key);
    } else if (key == "sre_orders") {
      cfg.sre_orders = parse_orders(value);
    } else if (key == "t_gate_rate") {
      cfg.t_gate_rate = parse_double(value, key);
    } else if (key == "output_path") {
      cfg.output_path = value;
    } else if (key == "record_every") {
      cfg.record_every = static_cast<std::uint32_t>(parse_uint(value, key));
    } else if (key == "n_threads") {
      cfg.n_threads = static_cast<std::uint32_t>(parse_uint(value, key));
    } else {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key '" + key +
                               "'");
    }
  }
}

void check_rates(const ExperimentConfig& cfg) {
  if (cfg.meas_rate < 0.0 || cfg.meas_rate > 1.0) {
    throw std::runtime_error("meas_rate must lie in [0, 1]");
  }
  if (cfg.t_gate_rate < 0.0 || cfg.t_gate_rate > 1.0) {
    throw std::runtime_error("t_gate_rate must lie in [0, 1]");
  }
  if (cfg.n_qubits == 0 || cfg.depth == 0 || cfg.record_every == 0 || cfg.n_trajectories == 0) {
    throw std::runtime_error("n_qubits, depth, record_every and n_trajectories must be positive");
  }
}

std::string grid_file_name(const std::string& base, std::uint32_t n, double p) {
  std::string stem = base;
  if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".csv") {
    stem.erase(stem.size() - 4);
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "_n%u_p%g.csv", n, p);
  return stem + buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monitored Clifford circuit non-stabilizerness estimator"};
  app.require_subcommand(1);

  std::string config_path, out_path, boundary_text, orders_text, log_path;
  std::uint32_t n_val = 0, depth_val = 0, traj_val = 0, record_val = 0, threads_val = 0;
  std::uint64_t seed_val = 0;
  double p_val = 0.0, angle_val = 0.0, t_rate_val = 0.0;

  auto add_common = [&](CLI::App* cmd, bool grids) {
    cmd->add_option("--config", config_path, "flat key = value config file");
    if (!grids) cmd->add_option("--n", n_val, "number of qubits");
    cmd->add_option("--depth", depth_val, "number of layers");
    if (!grids) cmd->add_option("--p", p_val, "per-site measurement rate");
    cmd->add_option("--traj", traj_val, "number of trajectories");
    cmd->add_option("--seed", seed_val, "base seed");
    cmd->add_option("--boundary", boundary_text, "ring or open");
    cmd->add_option("--angle", angle_val, "initial per-qubit angle (radians)");
    cmd->add_option("--orders", orders_text, "comma-separated entropy orders");
    cmd->add_option("--t-rate", t_rate_val, "per-site T-gadget rate");
    cmd->add_option("--out", out_path, "output CSV path" + std::string(grids ? " prefix" : ""));
    cmd->add_option("--record-every", record_val, "record stride in layers");
    cmd->add_option("--threads", threads_val, "worker threads (0 = auto)");
    cmd->add_option("--log-iterations", log_path, "write per-step JSON lines here");
  };

  CLI::App* run_cmd = app.add_subcommand("run", "run one experiment and write a CSV");
  add_common(run_cmd, false);

  std::string sweep_p_text, sweep_n_text;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "grid over p and/or n, one aggregated CSV per point");
  add_common(sweep_cmd, true);
  sweep_cmd->add_option("--p", sweep_p_text, "measurement rate grid lo:hi:step (or one value)");
  sweep_cmd->add_option("--n", sweep_n_text, "qubit-count grid lo:hi:step (or one value)");

  std::uint32_t max_n = 6;
  std::uint64_t validate_seed = 12345;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "run the dense-oracle cross-checks and print pass/fail");
  validate_cmd->add_option("--max-n", max_n, "largest width exercised");
  validate_cmd->add_option("--seed", validate_seed, "seed for the randomized checks");

  std::string bench_ns = "125,250,500,1000";
  std::uint32_t bench_depth = 50;
  double bench_p = 0.1;
  std::uint64_t bench_seed = 7;
  CLI::App* bench_cmd = app.add_subcommand("bench", "single-trajectory timing scaling report");
  bench_cmd->add_option("--n-list", bench_ns, "comma-separated qubit counts");
  bench_cmd->add_option("--depth", bench_depth, "number of layers");
  bench_cmd->add_option("--p", bench_p, "per-site measurement rate");
  bench_cmd->add_option("--seed", bench_seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    auto assemble = [&](CLI::App* cmd) {
      ExperimentConfig cfg;
      if (cmd->count("--config")) apply_config_file(config_path, cfg);
      if (cmd->count("--n") && cmd != sweep_cmd) cfg.n_qubits = n_val;
      if (cmd->count("--depth")) cfg.depth = depth_val;
      if (cmd->count("--p") && cmd != sweep_cmd) cfg.meas_rate = p_val;
      if (cmd->count("--traj")) cfg.n_trajectories = traj_val;
      if (cmd->count("--seed")) cfg.seed = seed_val;
      if (cmd->count("--boundary")) cfg.boundary = parse_boundary(boundary_text);
      if (cmd->count("--angle")) cfg.initial_angle = angle_val;
      if (cmd->count("--orders")) cfg.sre_orders = parse_orders(orders_text);
      if (cmd->count("--t-rate")) cfg.t_gate_rate = t_rate_val;
      if (cmd->count("--out")) cfg.output_path = out_path;
      if (cmd->count("--record-every")) cfg.record_every = record_val;
      if (cmd->count("--threads")) cfg.n_threads = threads_val;
      return cfg;
    };

    if (*run_cmd) {
      ExperimentConfig cfg = assemble(run_cmd);
      check_rates(cfg);
      std::vector<iccr::IterationLogEntry> log;
      const bool want_log = run_cmd->count("--log-iterations") > 0;
      const iccr::ExperimentResult result = iccr::run_experiment(cfg, want_log ? &log : nullptr);
      iccr::write_csv(result, cfg.output_path);
      if (want_log) iccr::write_iteration_log(log, log_path);
      std::cout << "wrote " << cfg.output_path << " (" << result.times.size() << " rows, "
                << cfg.n_trajectories << " trajectories)\n";
      return 0;
    }

    if (*sweep_cmd) {
      ExperimentConfig base = assemble(sweep_cmd);
      std::vector<double> p_grid = {base.meas_rate};
      if (sweep_cmd->count("--p")) p_grid = parse_grid(sweep_p_text, "meas_rate");
      std::vector<std::uint32_t> n_grid = {base.n_qubits};
      if (sweep_cmd->count("--n")) {
        n_grid.clear();
        for (const double v : parse_grid(sweep_n_text, "n_qubits")) {
          n_grid.push_back(static_cast<std::uint32_t>(v + 0.5));
        }
      }
      const bool explicit_depth = sweep_cmd->count("--depth") > 0;
      const std::string base_out =
          sweep_cmd->count("--out") ? base.output_path : std::string("sweep.csv");
      for (const std::uint32_t n : n_grid) {
        for (const double p : p_grid) {
          ExperimentConfig cfg = base;
          cfg.n_qubits = n;
          cfg.meas_rate = p;
          if (!explicit_depth) cfg.depth = 2 * n;  // default depth rule for sweeps
          cfg.output_path = grid_file_name(base_out, n, p);
          check_rates(cfg);
          iccr::write_csv(iccr::run_experiment(cfg), cfg.output_path);
          std::cout << "wrote " << cfg.output_path << "\n";
        }
      }
      return 0;
    }

    if (*validate_cmd) {
      const auto checks = iccr::run_validation_suite(max_n, validate_seed);
      return iccr::print_validation(checks, std::cout) ? 0 : 2;
    }

    if (*bench_cmd) {
      std::vector<std::uint32_t> ns;
      std::stringstream ss(bench_ns);
      std::string item;
      while (std::getline(ss, item, ',')) {
        ns.push_back(static_cast<std::uint32_t>(parse_uint(trim(item), "qubit count")));
      }
      std::vector<double> log_n, log_t;
      std::cout << "n,seconds\n";
      for (const std::uint32_t n : ns) {
        ExperimentConfig cfg;
        cfg.n_qubits = n;
        cfg.depth = bench_depth;
        cfg.meas_rate = bench_p;
        cfg.n_trajectories = 1;
        cfg.seed = bench_seed;
        cfg.record_every = bench_depth;  // keep observable evaluation out of the timing
        const auto t0 = std::chrono::steady_clock::now();
        iccr::run_trajectory(cfg, 0);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        std::cout << n << "," << dt.count() << "\n";
        log_n.push_back(std::log(static_cast<double>(n)));
        log_t.push_back(std::log(std::max(dt.count(), 1e-9)));
      }
      if (ns.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double m = static_cast<double>(ns.size());
        for (std::size_t k = 0; k < ns.size(); ++k) {
          sx += log_n[k];
          sy += log_t[k];
          sxx += log_n[k] * log_n[k];
          sxy += log_n[k] * log_t[k];
        }
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        std::cout << "log-log slope: " << slope << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
