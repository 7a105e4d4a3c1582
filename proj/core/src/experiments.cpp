#include "hyperheat/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <numeric>
#include <ostream>

#include "hyperheat/conversions.hpp"
#include "hyperheat/diffusion.hpp"
#include "hyperheat/errors.hpp"
#include "hyperheat/io.hpp"

namespace hyperheat {

namespace {

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  return values.size() % 2 == 1 ? values[m] : 0.5 * (values[m - 1] + values[m]);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Threshold rule shared by both methods; `potential_of` evaluates the method's
// potential on a 0/1 indicator vector.
template <typename PotentialOf>
SweepThreshold select_threshold(std::span<const double> x, std::span<const int> labels,
                                std::span<const double> degrees, PotentialOf&& potential_of) {
  const std::size_t n = x.size();
  std::vector<double> candidates(x.begin(), x.end());
  candidates.push_back(0.0);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto mass_penalty = [&](double tau) {
    double rho = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] > tau) rho += degrees[i];
    return rho / static_cast<double>(n);
  };
  const double rho0 = mass_penalty(0.0);

  SweepThreshold best;
  bool found = false;
  VertexVector indicator(n, 0.0);
  for (double tau : candidates) {
    if (mass_penalty(tau) > 1.1 * rho0) continue;
    for (std::size_t i = 0; i < n; ++i) indicator[i] = x[i] > tau ? 1.0 : 0.0;
    const double pot = potential_of(indicator);
    if (!found || pot < best.potential) {
      found = true;
      best.tau = tau;
      best.potential = pot;
    }
  }
  // tau = 0 is always feasible, so `found` holds here
  for (std::size_t i = 0; i < n; ++i) {
    const int pred = x[i] > best.tau ? 1 : -1;
    if (pred != labels[i]) ++best.errors;
  }
  return best;
}

}  // namespace

double auc_score(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size())
    throw InvalidArgument("auc_score: size mismatch");
  const std::size_t n = scores.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return scores[static_cast<std::size_t>(a)] < scores[static_cast<std::size_t>(b)];
  });

  std::size_t positives = 0;
  for (int l : labels) positives += l > 0 ? 1 : 0;
  const std::size_t negatives = n - positives;
  if (positives == 0 || negatives == 0)
    throw InvalidArgument("auc_score: need both classes present");

  // Average ranks across tied score groups.
  double rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && scores[static_cast<std::size_t>(order[j])] ==
                        scores[static_cast<std::size_t>(order[i])])
      ++j;
    const double avg_rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
    for (std::size_t t = i; t < j; ++t)
      if (labels[static_cast<std::size_t>(order[t])] > 0) rank_sum_pos += avg_rank;
    i = j;
  }
  const double p = static_cast<double>(positives);
  const double q = static_cast<double>(negatives);
  return (rank_sum_pos - p * (p + 1.0) / 2.0) / (p * q);
}

LabelRun make_label_run(std::span<const int> labels, double reveal_fraction, Rng& rng) {
  if (!(reveal_fraction > 0.0) || reveal_fraction > 1.0)
    throw InvalidArgument("make_label_run: reveal fraction must lie in (0, 1]");
  const std::size_t n = labels.size();
  const std::size_t reveal =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(
                                   reveal_fraction * static_cast<double>(n))));

  // Partial Fisher-Yates: uniform without replacement.
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < reveal; ++i) {
    const std::size_t j = static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(i), static_cast<std::int64_t>(n - 1)));
    std::swap(pool[i], pool[j]);
  }

  LabelRun run;
  run.labels.assign(labels.begin(), labels.end());
  run.revealed.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(reveal));
  std::sort(run.revealed.begin(), run.revealed.end());
  run.x0.assign(n, 0.0);
  for (int idx : run.revealed)
    run.x0[static_cast<std::size_t>(idx)] = labels[static_cast<std::size_t>(idx)] > 0 ? 1.0 : -1.0;
  return run;
}

ManifoldReport bench_manifold(const ManifoldConfig& config) {
  if (config.trials < 1) throw InvalidArgument("bench_manifold: trials must be >= 1");
  if (config.eval_steps.empty()) throw InvalidArgument("bench_manifold: no eval steps");

  ManifoldReport report;
  report.config = config;
  std::vector<int> steps = config.eval_steps;
  std::sort(steps.begin(), steps.end());
  const int max_steps = steps.back();

  const Rng master(config.seed);
  for (int trial = 0; trial < config.trials; ++trial) {
    Rng rng = master.fork(static_cast<std::uint64_t>(trial));
    const LabeledPoints data = make_manifold(config.kind, config.per_community, rng);
    const KnnStructures knn = knn_structures(data.points, config.k);
    const LabelRun run = make_label_run(data.labels, config.reveal_fraction, rng);

    auto hyper = std::make_shared<const Hypergraph>(knn.hypergraph);
    const PotentialModel model(hyper, EdgeNorm::linf());
    DiffusionOptions dopt;
    dopt.tol = config.tol;
    const DiffusionTrace trace = diffuse(model, run.x0, max_steps, dopt);

    // Graph baseline: x <- x - D^-1 L x with unit steps on the k-NN graph.
    const Hypergraph& graph = knn.graph;
    const auto& gdeg = graph.degrees();
    auto graph_quadratic = [&](std::span<const double> v) {
      double q = 0.0;
      for (const auto& e : graph.edges()) {
        const double d = v[static_cast<std::size_t>(e.vertices[0])] -
                         v[static_cast<std::size_t>(e.vertices[1])];
        q += e.weight * d * d;
      }
      return q;
    };
    std::vector<VertexVector> graph_at_step;
    {
      VertexVector x = run.x0;
      VertexVector lap(x.size());
      int next = 0;
      for (int t = 0; t <= max_steps; ++t) {
        if (next < static_cast<int>(steps.size()) && t == steps[static_cast<std::size_t>(next)]) {
          graph_at_step.push_back(x);
          ++next;
        }
        if (t == max_steps) break;
        std::fill(lap.begin(), lap.end(), 0.0);
        for (const auto& e : graph.edges()) {
          const auto i = static_cast<std::size_t>(e.vertices[0]);
          const auto j = static_cast<std::size_t>(e.vertices[1]);
          const double d = e.weight * (x[i] - x[j]);
          lap[i] += d;
          lap[j] -= d;
        }
        for (std::size_t i = 0; i < x.size(); ++i)
          if (gdeg[i] > 0.0) x[i] -= lap[i] / gdeg[i];
      }
    }

    for (std::size_t si = 0; si < steps.size(); ++si) {
      const int t = steps[si];
      const VertexVector xh = trace_iterate(model, trace, t, config.tol);
      const VertexVector& xg = graph_at_step[si];

      // AUC over min-max rescaled scores (rank-equivalent, kept for fidelity).
      auto rescaled = [](const VertexVector& v) {
        const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        VertexVector s(v.size(), 0.0);
        if (*hi > *lo)
          for (std::size_t i = 0; i < v.size(); ++i) s[i] = (v[i] - *lo) / (*hi - *lo);
        return s;
      };
      ManifoldTrialRow row;
      row.trial = trial;
      row.steps = t;
      row.auc_hypergraph = auc_score(rescaled(xh), run.labels);
      row.auc_graph = auc_score(rescaled(xg), run.labels);

      const SweepThreshold th_h =
          select_threshold(xh, run.labels, hyper->degrees(),
                           [&](const VertexVector& ind) { return base_potential(model, ind); });
      const SweepThreshold th_g = select_threshold(
          xg, run.labels, gdeg, [&](const VertexVector& ind) { return graph_quadratic(ind); });
      row.error_hypergraph = th_h.errors;
      row.error_graph = th_g.errors;
      row.tau_hypergraph = th_h.tau;
      row.tau_graph = th_g.tau;
      report.rows.push_back(row);
    }
  }
  return report;
}

void write_manifold_csv(std::ostream& out, const ManifoldReport& report) {
  out << "trial,steps,auc_hypergraph,auc_graph,error_hypergraph,error_graph,"
         "tau_hypergraph,tau_graph\n";
  for (const auto& r : report.rows) {
    out << r.trial << ',' << r.steps << ',' << format_double(r.auc_hypergraph) << ','
        << format_double(r.auc_graph) << ',' << r.error_hypergraph << ',' << r.error_graph
        << ',' << format_double(r.tau_hypergraph) << ',' << format_double(r.tau_graph) << '\n';
  }
}

double median_auc(const ManifoldReport& report, bool hypergraph, int steps) {
  std::vector<double> values;
  for (const auto& r : report.rows)
    if (r.steps == steps) values.push_back(hypergraph ? r.auc_hypergraph : r.auc_graph);
  return median(std::move(values));
}

ResolventBenchReport bench_resolvent(const PotentialModel& model,
                                     const ResolventBenchConfig& config) {
  if (config.seeds < 1) throw InvalidArgument("bench_resolvent: seeds must be >= 1");
  const auto& g = model.hypergraph();
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());

  ResolventBenchReport report;
  report.config = config;

  Rng rng(config.seed);
  std::vector<int> vertices(static_cast<std::size_t>(config.seeds));
  for (auto& v : vertices) v = static_cast<int>(rng.uniform_int(0, g.vertex_count() - 1));

  ResolventOptions opts;
  opts.oracle = config.oracle;
  opts.iteration_override = config.iterations;
  opts.early_stop_threshold = config.early_stop;
  opts.oracle_tol = config.oracle_tol;
  opts.lambda_lower = 0.0;  // budget comes from the override, not the theory bound

  const Hypergraph clique = clique_expansion(g);

  std::vector<double> improvements;
  for (int idx = 0; idx < config.seeds; ++idx) {
    ResolventBenchRow row;
    row.index = idx;
    row.vertex = vertices[static_cast<std::size_t>(idx)];

    VertexVector seed(n, 0.0);
    seed[static_cast<std::size_t>(row.vertex)] = 1.0;
    const double mean = g.degree(row.vertex) / g.volume();
    for (double& v : seed) v -= mean;  // s = e_v - pi(e_v)

    try {
      auto start = std::chrono::steady_clock::now();
      const ResolventSolution averaged =
          resolvent_solve(model, config.lambda, seed, config.epsilon, opts);
      row.seconds_averaged = seconds_since(start);

      start = std::chrono::steady_clock::now();
      const ResolventSolution last =
          last_iterate_heuristic(model, config.lambda, seed, config.epsilon, opts);
      row.seconds_last = seconds_since(start);

      row.objective_averaged = averaged.objective;
      row.objective_last = last.objective;
      row.improvement = (row.objective_last - row.objective_averaged) /
                        std::max(std::abs(row.objective_last), 1e-300);
      improvements.push_back(row.improvement);
    } catch (const Error&) {
      row.failed = true;
    }

    const auto series_start = std::chrono::steady_clock::now();
    graph_resolvent_series(clique, config.lambda, seed, config.series_terms);
    report.total_seconds_series += seconds_since(series_start);

    report.total_seconds_averaged += row.seconds_averaged;
    report.total_seconds_last += row.seconds_last;
    report.rows.push_back(std::move(row));
  }

  report.median_improvement = median(std::move(improvements));
  const double iters = static_cast<double>(config.iterations) *
                       static_cast<double>(config.seeds);
  report.per_iteration_seconds_averaged = report.total_seconds_averaged / iters;
  report.per_iteration_seconds_last = report.total_seconds_last / iters;
  return report;
}

void write_resolvent_bench_csv(std::ostream& out, const ResolventBenchReport& report) {
  out << "seed_index,vertex,status,objective_averaged,objective_last,improvement\n";
  for (const auto& r : report.rows) {
    out << r.index << ',' << r.vertex << ',' << (r.failed ? "failed" : "ok") << ','
        << format_double(r.objective_averaged) << ',' << format_double(r.objective_last) << ','
        << format_double(r.improvement) << '\n';
  }
}

}  // namespace hyperheat
