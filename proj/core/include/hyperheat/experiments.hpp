#ifndef HYPERHEAT_EXPERIMENTS_HPP
#define HYPERHEAT_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperheat/datasets.hpp"
#include "hyperheat/resolvent.hpp"

namespace hyperheat {

// Area under the ROC curve via average ranks (ties get half credit); larger
// scores predict label +1. Throws when one class is empty.
double auc_score(std::span<const double> scores, std::span<const int> labels);

// Semi-supervised labeling state for one trial: ground truth, the revealed
// sample (uniform without replacement), and the +-1/0 start vector.
struct LabelRun {
  std::vector<int> labels;
  std::vector<int> revealed;
  VertexVector x0;
};

LabelRun make_label_run(std::span<const int> labels, double reveal_fraction, Rng& rng);

// Threshold selection for rounding a diffusion iterate: among thresholds
// whose degree-weighted mass penalty rho(tau) = <1{x > tau}, 1>_D / n stays
// within 1.1x of the tau = 0 penalty, pick the one minimizing the potential
// of the indicator.
struct SweepThreshold {
  double tau = 0.0;
  double potential = 0.0;
  int errors = 0;  // mismatches against the true labels
};

struct ManifoldConfig {
  ManifoldKind kind = ManifoldKind::TwoSpirals;
  int per_community = 300;
  int k = 5;
  double reveal_fraction = 0.05;
  std::vector<int> eval_steps = {10, 30, 100};
  int trials = 20;
  std::uint64_t seed = 0;
  double tol = 1e-8;
};

struct ManifoldTrialRow {
  int trial = 0;
  int steps = 0;
  double auc_hypergraph = 0.0;
  double auc_graph = 0.0;
  int error_hypergraph = 0;
  int error_graph = 0;
  double tau_hypergraph = 0.0;
  double tau_graph = 0.0;
};

struct ManifoldReport {
  ManifoldConfig config;
  std::vector<ManifoldTrialRow> rows;  // trials x eval_steps, trial-major
};

// Semi-supervised manifold comparison: k-NN hypergraph diffusion (l-inf
// potential, unit steps) against the k-NN graph diffusion
// x <- x - D^-1 L x, scored by AUC and sweep-threshold classification error
// at each requested step count.
ManifoldReport bench_manifold(const ManifoldConfig& config);

void write_manifold_csv(std::ostream& out, const ManifoldReport& report);
double median_auc(const ManifoldReport& report, bool hypergraph, int steps);

struct ResolventBenchConfig {
  int seeds = 20;
  int iterations = 100;
  double lambda = 0.12;
  double epsilon = 0.1;
  std::optional<double> early_stop;  // |x_t - x_{t-1}|_D^2 threshold
  std::uint64_t seed = 0;
  OracleChoice oracle = OracleChoice::Any;
  int series_terms = 100;
  double oracle_tol = 1e-8;
};

struct ResolventBenchRow {
  int index = 0;
  int vertex = 0;
  bool failed = false;
  double objective_averaged = 0.0;
  double objective_last = 0.0;
  double improvement = 0.0;  // (last - averaged) / |last|
  double seconds_averaged = 0.0;
  double seconds_last = 0.0;
};

struct ResolventBenchReport {
  ResolventBenchConfig config;
  std::vector<ResolventBenchRow> rows;
  double median_improvement = 0.0;
  double total_seconds_averaged = 0.0;
  double total_seconds_last = 0.0;
  double total_seconds_series = 0.0;  // clique-expansion geometric series baseline
  double per_iteration_seconds_averaged = 0.0;
  double per_iteration_seconds_last = 0.0;
};

// Averaged-output vs last-iterate comparison on seeds e_v - pi(e_v) for
// `seeds` random vertices, identical step size and iteration budget, plus the
// clique-expansion series baseline for timing. Per-seed failures are recorded
// and the remaining seeds continue.
ResolventBenchReport bench_resolvent(const PotentialModel& model,
                                     const ResolventBenchConfig& config);

// Deterministic rows only; wall-clock numbers stay in the metadata sidecar so
// reruns are byte-identical.
void write_resolvent_bench_csv(std::ostream& out, const ResolventBenchReport& report);

}  // namespace hyperheat

#endif  // HYPERHEAT_EXPERIMENTS_HPP
