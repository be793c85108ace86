#include "iccr/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "iccr/magic.hpp"
#include "iccr/t_gadget.hpp"
#include "iccr/two_qubit_cliffords.hpp"

namespace iccr {
namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string order_label(double order) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "m%g", order);
  return buf;
}

TrajectoryResult run_trajectory(const ExperimentConfig& cfg, std::uint32_t traj_index,
                                std::vector<IterationLogEntry>* log) {
  const std::uint32_t n = cfg.n_qubits;
  if (n == 0 || cfg.depth == 0 || cfg.record_every == 0) {
    throw std::invalid_argument("n_qubits, depth and record_every must be positive");
  }
  Rng rng = Rng::derive_stream(cfg.seed, traj_index);
  CliffordTableau tab(n);
  ProductState state(n, SingleQubitState::from_amplitudes(
                            {std::cos(cfg.initial_angle), 0.0},
                            {std::sin(cfg.initial_angle), 0.0}));

  TrajectoryResult out;
  out.n_orders = static_cast<std::uint32_t>(cfg.sre_orders.size());

  double ln_f = 0.0;
  std::uint64_t meas_count = 0;
  auto record = [&](std::uint32_t t) {
    out.times.push_back(t);
    for (const double order : cfg.sre_orders) {
      out.values.push_back(sre(state, order) / static_cast<double>(n));
    }
    out.values.push_back(static_cast<double>(nullity(state)) / static_cast<double>(n));
    out.values.push_back(ln_f);
    out.values.push_back(static_cast<double>(meas_count));
  };

  record(0);
  std::vector<std::uint32_t> drawn;
  for (std::uint32_t t = 1; t <= cfg.depth; ++t) {
    // Brick-wall layer: even layers pair (0,1),(2,3),...; odd layers pair
    // (1,2),(3,4),... plus the wrap pair (n-1,0) on a ring of even size.
    const std::uint32_t start = (t - 1) % 2;
    for (std::uint32_t a = start; a + 1 < n; a += 2) {
      tab.append_after(GateRecord::composite(
          a, a + 1, static_cast<std::uint16_t>(rng.next_below(TwoQubitCliffords::kCount))));
    }
    if (start == 1 && cfg.boundary == Boundary::Ring && n >= 2 && n % 2 == 0) {
      tab.append_after(GateRecord::composite(
          n - 1, 0, static_cast<std::uint16_t>(rng.next_below(TwoQubitCliffords::kCount))));
    }

    // Observables snapshot the state between the layer's unitaries (which do
    // not affect them) and its measurements.
    if (t % cfg.record_every == 0 || t == cfg.depth) record(t);

    if (cfg.meas_rate > 0.0) {
      drawn.clear();
      for (std::uint32_t site = 0; site < n; ++site) {
        if (rng.next_bernoulli(cfg.meas_rate)) drawn.push_back(site);
      }
      for (const std::uint32_t site : drawn) {
        const IterationReport rep = iccr_step(tab, state, site, OutcomePolicy::BornSample, rng);
        // Exact branches can land a hair above 1 by rounding; clamp so the
        // accumulated log stays monotone.
        ln_f += std::log(std::min(1.0, rep.fidelity));
        ++meas_count;
        if (log) log->push_back({t, site, false, rep});
      }
    }
    if (cfg.t_gate_rate > 0.0) {
      drawn.clear();
      for (std::uint32_t site = 0; site < n; ++site) {
        if (rng.next_bernoulli(cfg.t_gate_rate)) drawn.push_back(site);
      }
      for (const std::uint32_t site : drawn) {
        const IterationReport rep = inject_t_gate(tab, state, site, rng);
        ln_f += std::log(std::min(1.0, rep.fidelity));
        if (log) log->push_back({t, site, true, rep});
      }
    }
  }
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                std::vector<IterationLogEntry>* log) {
  const std::uint32_t m = cfg.n_trajectories;
  if (m == 0) throw std::invalid_argument("n_trajectories must be positive");

  std::vector<TrajectoryResult> results(m);
  std::vector<std::vector<IterationLogEntry>> logs(log ? m : 0);

  std::uint32_t workers = cfg.n_threads != 0 ? cfg.n_threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min(workers, m));

  std::atomic<std::uint32_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&]() {
    for (;;) {
      const std::uint32_t k = next.fetch_add(1);
      if (k >= m) return;
      try {
        results[k] = run_trajectory(cfg, k, log ? &logs[k] : nullptr);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  if (log) {
    for (auto& lg : logs) log->insert(log->end(), lg.begin(), lg.end());
  }

  const std::size_t rows = results[0].times.size();
  const std::size_t raw_cols = results[0].n_value_cols();
  for (const auto& r : results) {
    if (r.times != results[0].times) throw std::logic_error("trajectory time grids differ");
  }

  // Welford reduction in trajectory order: independent of the worker count.
  std::vector<double> mean(rows * raw_cols, 0.0), m2(rows * raw_cols, 0.0);
  for (std::uint32_t k = 0; k < m; ++k) {
    for (std::size_t c = 0; c < rows * raw_cols; ++c) {
      const double x = results[k].values[c];
      const double delta = x - mean[c];
      mean[c] += delta / static_cast<double>(k + 1);
      m2[c] += delta * (x - mean[c]);
    }
  }
  auto stderr_of = [&](std::size_t c) {
    if (m < 2) return 0.0;
    return std::sqrt(m2[c] / (static_cast<double>(m - 1) * static_cast<double>(m)));
  };

  ExperimentResult out;
  for (const double order : cfg.sre_orders) {
    out.value_columns.push_back(order_label(order));
    out.value_columns.push_back(order_label(order) + "_err");
  }
  out.value_columns.insert(out.value_columns.end(),
                           {"nullity_density", "nullity_err", "lnF", "lnF_err", "n_meas"});
  out.times = results[0].times;
  out.cells.reserve(rows * out.value_columns.size());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c + 1 < raw_cols; ++c) {
      out.cells.push_back(mean[r * raw_cols + c]);
      out.cells.push_back(stderr_of(r * raw_cols + c));
    }
    out.cells.push_back(mean[r * raw_cols + raw_cols - 1]);  // mean measurement count
  }
  return out;
}

void write_csv(const ExperimentResult& result, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  std::fputs("t", f);
  for (const auto& col : result.value_columns) std::fprintf(f, ",%s", col.c_str());
  std::fputc('\n', f);
  const std::size_t cols = result.value_columns.size();
  for (std::size_t r = 0; r < result.times.size(); ++r) {
    std::fprintf(f, "%u", result.times[r]);
    for (std::size_t c = 0; c < cols; ++c) {
      std::fprintf(f, ",%s", format_double(result.cells[r * cols + c]).c_str());
    }
    std::fputc('\n', f);
  }
  if (std::fclose(f) != 0) throw std::runtime_error("failed writing output file: " + path);
}

void write_iteration_log(const std::vector<IterationLogEntry>& entries,
                         const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open log file: " + path);
  for (const auto& e : entries) {
    const IterationReport& rep = e.report;
    std::fprintf(f, "{\"t\":%u,\"j\":%u,\"branch\":\"%s\",\"s\":%d,\"support\":%u,", e.layer,
                 e.site, to_string(rep.branch), rep.outcome, rep.support_size);
    if (rep.target_site >= 0) {
      std::fprintf(f, "\"i_star\":%d,\"q_star\":%d,", rep.target_site, rep.target_q);
    } else {
      std::fputs("\"i_star\":null,\"q_star\":null,", f);
    }
    std::fprintf(f, "\"f\":%s,\"rank_delta\":%d}\n", format_double(rep.fidelity).c_str(),
                 rep.rank_delta);
  }
  if (std::fclose(f) != 0) throw std::runtime_error("failed writing log file: " + path);
}

}  // namespace iccr
