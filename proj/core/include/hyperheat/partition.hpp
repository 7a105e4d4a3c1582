#ifndef HYPERHEAT_PARTITION_HPP
#define HYPERHEAT_PARTITION_HPP

#include <span>
#include <vector>

#include "hyperheat/diffusion.hpp"
#include "hyperheat/potential.hpp"

namespace hyperheat {

struct SweepPrefix {
  int rank = 0;    // prefix length
  int vertex = 0;  // vertex added at this rank
  double phi = 0.0;
};

struct SweepResult {
  std::vector<int> ordering;  // vertices by value descending, ties by index
  std::vector<int> best_set;  // sorted vertex ids of the best prefix
  double phi = 0.0;
  double boundary_weight = 0.0;
  std::vector<SweepPrefix> profile;  // all n-1 proper prefixes
  int selected_step = -1;            // t* when produced by local_partition
};

// Rounds a vector to a cut: sorts vertices by value descending (ties by
// index), evaluates the conductance of every proper prefix with incremental
// per-hyperedge side counters, and returns the argmin. Prefixes whose smaller
// side has zero volume are recorded with phi = +inf and never selected.
// Throws ConstantVector when x has a single distinct value.
SweepResult sweep_cut(const Hypergraph& g, std::span<const double> x);

struct LocalPartitionOptions {
  double tol = 1e-8;  // diffusion oracle tolerance
};

// Heat-diffusion local clustering: diffuses the seed indicator for
// T = ceil(1/(3 phi_target)) steps, picks the step minimizing the Rayleigh
// quotient of x_t - pi(x_0) over t in [1, T], and sweep-cuts that iterate.
SweepResult local_partition(const PotentialModel& model, int seed_vertex, double phi_target,
                            const LocalPartitionOptions& options = {});

}  // namespace hyperheat

#endif  // HYPERHEAT_PARTITION_HPP
