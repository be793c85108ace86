#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iccr/iccr_step.hpp"

namespace iccr {

enum class Boundary : std::uint8_t { Ring, Open };

inline constexpr double kDefaultInitialAngle = 0.44879895051282760549;  // pi/7

// Monitored brick-wall circuit experiment description. Config files use
// flat `key = value` lines with these exact field names.
struct ExperimentConfig {
  std::uint32_t n_qubits = 16;
  std::uint32_t depth = 32;
  double meas_rate = 0.1;            // per-site measurement probability per layer
  std::uint32_t n_trajectories = 1;
  std::uint64_t seed = 1;
  Boundary boundary = Boundary::Ring;
  double initial_angle = kDefaultInitialAngle;
  std::vector<double> sre_orders = {1.0, 2.0, 3.0};
  double t_gate_rate = 0.0;          // per-site T-gadget probability per layer
  std::string output_path = "out.csv";
  std::uint32_t record_every = 1;
  std::uint32_t n_threads = 0;       // 0: one worker per hardware thread
};

// One per-step diagnostic record, emitted behind --log-iterations.
struct IterationLogEntry {
  std::uint32_t layer = 0;
  std::uint32_t site = 0;  // measured site, or the T-gadget's target
  bool gadget = false;
  IterationReport report;
};

// Per-trajectory time series. Row r (time times[r]) holds, in order, the
// per-qubit entropy density for every requested order, the nullity density,
// the accumulated ln of the kept fidelity, and the cumulative number of
// measurements performed before that row was recorded.
struct TrajectoryResult {
  std::vector<std::uint32_t> times;
  std::vector<double> values;  // row-major, n_value_cols() per row
  std::uint32_t n_orders = 0;

  std::uint32_t n_value_cols() const { return n_orders + 3; }
  double value(std::size_t row, std::size_t col) const {
    return values[row * n_value_cols() + col];
  }
};

// Aggregated table matching the CSV layout: for every per-trajectory column
// except the measurement count a (mean, standard error) pair, then the mean
// measurement count.
struct ExperimentResult {
  std::vector<std::string> value_columns;  // header names after "t"
  std::vector<std::uint32_t> times;
  std::vector<double> cells;  // row-major, value_columns.size() per row

  double cell(std::size_t row, std::size_t col) const {
    return cells[row * value_columns.size() + col];
  }
};

// Rows are recorded at t = 0 (bare initial state) and then, for each layer
// t, after the layer's unitaries but before its measurements, whenever t is
// a multiple of record_every or the final layer. Within a layer: two-qubit
// Cliffords on the layer's brick pairs, then per-site Bernoulli(meas_rate)
// measurement draws resolved in ascending site order, then per-site
// Bernoulli(t_gate_rate) gadget draws in ascending site order. The stream
// `rng` for trajectory k is derive_stream(seed, k).
TrajectoryResult run_trajectory(const ExperimentConfig& cfg, std::uint32_t traj_index,
                                std::vector<IterationLogEntry>* log = nullptr);

// Runs all trajectories (in parallel when n_threads != 1) and reduces them
// in trajectory order, so the result is independent of the worker count.
// When `log` is non-null, per-step records are appended in trajectory order.
ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                std::vector<IterationLogEntry>* log = nullptr);

// Writes `t,m1,m1_err,...,nullity_density,nullity_err,lnF,lnF_err,n_meas`
// with floats at 12 significant digits.
void write_csv(const ExperimentResult& result, const std::string& path);

// Appends one JSON object per step record to `path`
// ({"t","j","branch","s","support","i_star","q_star","f","rank_delta"}).
void write_iteration_log(const std::vector<IterationLogEntry>& entries,
                         const std::string& path);

// Column label for an entropy order: 1 -> "m1", 1.5 -> "m1.5".
std::string order_label(double order);

}  // namespace iccr
