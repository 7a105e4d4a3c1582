#ifndef HYPERHEAT_EDGE_NORM_HPP
#define HYPERHEAT_EDGE_NORM_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace hyperheat {

// Symmetric submodular cut function over a ground set of size k <= 12, stored
// as a full table indexed by subset bitmask. Construction exhaustively checks
// delta(0) = delta(full) = 0, symmetry delta(A) = delta(~A), submodularity
// over all subset pairs, and delta({v}) > 0 for every element.
class CutFunction {
 public:
  static constexpr int kMaxGroundSize = 12;

  static CutFunction from_table(int ground_size, std::vector<double> values);

  int ground_size() const { return k_; }
  double value(std::uint32_t mask) const { return values_[mask]; }
  double singleton(int i) const { return values_[1u << i]; }
  std::uint32_t full_mask() const { return (1u << k_) - 1u; }
  const std::vector<double>& table() const { return values_; }

  // Lovasz extension by the sorted telescoping formula; agrees with delta on
  // 0/1 indicators and is invariant under shifts by the all-ones vector.
  double lovasz(std::span<const double> x) const;

  // Base-polytope vertex for a descending order: y[order[j]] =
  // delta(S_j) - delta(S_{j-1}) with S_j the first j elements of the order.
  void greedy_vertex(std::span<const int> order_desc, std::span<double> out) const;

 private:
  CutFunction(int k, std::vector<double> values) : k_(k), values_(std::move(values)) {}

  int k_ = 0;
  std::vector<double> values_;
};

enum class NormKind { LInf, L2, Lovasz };

// Deterministic witness selection for tied extrema.
enum class WitnessPolicy {
  LowestIndex,  // unit mass on the lowest-index argmax / argmin vertex
  Balanced,     // mass spread uniformly over the tied argmax / argmin sets
};

// Per-hyperedge norm on the coordinate space of one hyperedge. Under the
// normalization enforced here every variant satisfies |x|_h <= |x|_2:
// l-inf and l2 trivially, and the Lovasz norm via a construction-time scale.
//
// The norm behind a cut function delta is s * (lovasz(x) + |1^T x|) with
// s = 1 / sqrt(sum_v delta({v})^2 + k); the shift-minimized value
// min_u |x - u 1|_h then equals s * lovasz(x).
class EdgeNorm {
 public:
  static EdgeNorm linf();
  static EdgeNorm l2();
  static EdgeNorm lovasz(std::shared_ptr<const CutFunction> cut);

  NormKind kind() const { return kind_; }
  const CutFunction& cut() const { return *cut_; }
  double lovasz_scale() const { return scale_; }

  // True norm value |x|_h.
  double norm(std::span<const double> x) const;

  // min_u |x - u 1|_h. Closed forms: (max - min)/2 for l-inf, the
  // mean-centered l2 norm for l2, s * lovasz(x) for Lovasz.
  double min_shift(std::span<const double> x) const;

  // Deterministic maximizer of <y, x> over {y : y perp 1, |y|_{h,*} <= 1};
  // writes it to y (sized |h|) and returns min_shift(x). Hyperedges with a
  // zero shift value get y = 0. tie_eps is the absolute tie width used to
  // enlarge argmax/argmin sets (pass relative_tie_eps(x)).
  double witness(std::span<const double> x, WitnessPolicy policy, double tie_eps,
                 std::span<double> y) const;

  // Linear minimization oracle over the maximizing face at x: writes the face
  // vertex minimizing <grad, y> to y. Requires min_shift(x) > 0.
  void face_lmo(std::span<const double> x, std::span<const double> grad, double tie_eps,
                std::span<double> y) const;

  // Certified upper bound on the dual norm |y|_{h,*}: exact l1/l2 norms for
  // the l-inf/l2 variants, and for Lovasz the smallest rho with
  // y/scale in rho * B(delta) (infinity when y is not 1-orthogonal).
  double dual_gauge(std::span<const double> y) const;

  // Argmax/argmin index sets within tie_eps; l-inf only. The two sets are
  // disjoint whenever min_shift(x) > 0.
  void linf_face(std::span<const double> x, double tie_eps, std::vector<int>& argmax,
                 std::vector<int>& argmin) const;

  // Relative tie width 1e-9 * (1 + |x|_inf), shrunk when the value range is
  // too narrow to keep the argmax and argmin sets disjoint.
  static double relative_tie_eps(std::span<const double> x);

 private:
  EdgeNorm(NormKind kind, std::shared_ptr<const CutFunction> cut, double scale)
      : kind_(kind), cut_(std::move(cut)), scale_(scale) {}

  NormKind kind_;
  std::shared_ptr<const CutFunction> cut_;
  double scale_ = 1.0;
};

}  // namespace hyperheat

#endif  // HYPERHEAT_EDGE_NORM_HPP
