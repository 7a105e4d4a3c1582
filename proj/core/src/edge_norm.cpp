#include "hyperheat/edge_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hyperheat/errors.hpp"
#include "hyperheat/vector_ops.hpp"

namespace hyperheat {

namespace {

// Indices sorted by value descending, ties by index ascending.
std::vector<int> descending_order(std::span<const double> x) {
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return x[static_cast<std::size_t>(a)] > x[static_cast<std::size_t>(b)];
  });
  return order;
}

}  // namespace

CutFunction CutFunction::from_table(int ground_size, std::vector<double> values) {
  if (ground_size < 2 || ground_size > kMaxGroundSize)
    throw InvalidArgument("CutFunction: ground set size must be in [2, 12]");
  const std::size_t table_size = std::size_t{1} << ground_size;
  if (values.size() != table_size)
    throw InvalidArgument("CutFunction: table must have 2^k entries, got " +
                          std::to_string(values.size()));
  require_finite(values, "CutFunction table");

  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  const double tol = 1e-9 * (1.0 + scale);
  const std::uint32_t full = static_cast<std::uint32_t>(table_size - 1);

  if (std::abs(values[0]) > tol || std::abs(values[full]) > tol)
    throw InvalidArgument("CutFunction: delta(empty) and delta(ground) must be 0");
  values[0] = 0.0;
  values[full] = 0.0;

  for (std::uint32_t a = 0; a < table_size; ++a) {
    if (std::abs(values[a] - values[full ^ a]) > tol)
      throw InvalidArgument("CutFunction: not symmetric at mask " + std::to_string(a));
  }
  for (int v = 0; v < ground_size; ++v) {
    if (!(values[1u << v] > 0.0))
      throw InvalidArgument("CutFunction: delta({v}) must be positive for every element");
  }
  for (std::uint32_t a = 0; a < table_size; ++a) {
    for (std::uint32_t b = a + 1; b < table_size; ++b) {
      if (values[a] + values[b] < values[a & b] + values[a | b] - tol)
        throw InvalidArgument("CutFunction: submodularity violated at masks " +
                              std::to_string(a) + ", " + std::to_string(b));
    }
  }
  return CutFunction(ground_size, std::move(values));
}

double CutFunction::lovasz(std::span<const double> x) const {
  const int k = k_;
  if (static_cast<int>(x.size()) != k)
    throw InvalidArgument("CutFunction::lovasz: dimension mismatch");
  const auto order = descending_order(x);
  double total = 0.0;
  std::uint32_t prefix = 0;
  for (int j = 0; j + 1 < k; ++j) {
    prefix |= 1u << order[static_cast<std::size_t>(j)];
    total += values_[prefix] * (x[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] -
                                x[static_cast<std::size_t>(order[static_cast<std::size_t>(j + 1)])]);
  }
  return total;
}

void CutFunction::greedy_vertex(std::span<const int> order_desc, std::span<double> out) const {
  std::uint32_t prefix = 0;
  double prev = 0.0;
  for (int idx : order_desc) {
    prefix |= 1u << idx;
    const double cur = values_[prefix];
    out[static_cast<std::size_t>(idx)] = cur - prev;
    prev = cur;
  }
}

EdgeNorm EdgeNorm::linf() { return EdgeNorm(NormKind::LInf, nullptr, 1.0); }

EdgeNorm EdgeNorm::l2() { return EdgeNorm(NormKind::L2, nullptr, 1.0); }

EdgeNorm EdgeNorm::lovasz(std::shared_ptr<const CutFunction> cut) {
  if (!cut) throw InvalidArgument("EdgeNorm::lovasz: null cut function");
  // Scale making |x|_h <= |x|_2 for every x: split x into its mean component
  // and its centered part, bound the extension by the l2 norm of the
  // singleton values, and fold both through Cauchy-Schwarz.
  double sq = 0.0;
  for (int v = 0; v < cut->ground_size(); ++v) {
    const double sv = cut->singleton(v);
    sq += sv * sv;
  }
  const double scale = 1.0 / std::sqrt(sq + static_cast<double>(cut->ground_size()));
  return EdgeNorm(NormKind::Lovasz, std::move(cut), scale);
}

double EdgeNorm::relative_tie_eps(std::span<const double> x) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : x) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double amp = std::max(std::abs(lo), std::abs(hi));
  double eps = 1e-9 * (1.0 + amp);
  if (hi - lo <= 2.0 * eps) eps = (hi - lo) / 4.0;
  return eps;
}

double EdgeNorm::norm(std::span<const double> x) const {
  switch (kind_) {
    case NormKind::LInf:
      return linf_norm(x);
    case NormKind::L2:
      return norm2(x);
    case NormKind::Lovasz: {
      double sum = 0.0;
      for (double v : x) sum += v;
      return scale_ * (cut_->lovasz(x) + std::abs(sum));
    }
  }
  return 0.0;
}

double EdgeNorm::min_shift(std::span<const double> x) const {
  // exactly-constant vectors shift to zero in every variant
  const auto [c_lo, c_hi] = std::minmax_element(x.begin(), x.end());
  if (*c_lo == *c_hi) return 0.0;
  switch (kind_) {
    case NormKind::LInf: {
      const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
      return (*hi - *lo) / 2.0;
    }
    case NormKind::L2: {
      double mean = 0.0;
      for (double v : x) mean += v;
      mean /= static_cast<double>(x.size());
      double sq = 0.0;
      for (double v : x) sq += (v - mean) * (v - mean);
      return std::sqrt(sq);
    }
    case NormKind::Lovasz:
      return scale_ * cut_->lovasz(x);
  }
  return 0.0;
}

void EdgeNorm::linf_face(std::span<const double> x, double tie_eps, std::vector<int>& argmax,
                         std::vector<int>& argmin) const {
  argmax.clear();
  argmin.clear();
  const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= hi - tie_eps) argmax.push_back(static_cast<int>(i));
    if (x[i] <= lo + tie_eps) argmin.push_back(static_cast<int>(i));
  }
}

double EdgeNorm::witness(std::span<const double> x, WitnessPolicy policy, double tie_eps,
                         std::span<double> y) const {
  std::fill(y.begin(), y.end(), 0.0);
  const double f = min_shift(x);
  if (!(f > 0.0)) return 0.0;

  switch (kind_) {
    case NormKind::LInf: {
      std::vector<int> argmax, argmin;
      linf_face(x, tie_eps, argmax, argmin);
      if (policy == WitnessPolicy::LowestIndex) {
        y[static_cast<std::size_t>(argmax.front())] = 0.5;
        y[static_cast<std::size_t>(argmin.front())] = -0.5;
      } else {
        const double wa = 0.5 / static_cast<double>(argmax.size());
        const double wb = 0.5 / static_cast<double>(argmin.size());
        for (int i : argmax) y[static_cast<std::size_t>(i)] += wa;
        for (int j : argmin) y[static_cast<std::size_t>(j)] -= wb;
      }
      break;
    }
    case NormKind::L2: {
      double mean = 0.0;
      for (double v : x) mean += v;
      mean /= static_cast<double>(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] - mean) / f;
      break;
    }
    case NormKind::Lovasz: {
      const auto order = descending_order(x);
      cut_->greedy_vertex(order, y);
      for (double& v : y) v *= scale_;
      break;
    }
  }
  return f;
}

void EdgeNorm::face_lmo(std::span<const double> x, std::span<const double> grad, double tie_eps,
                        std::span<double> y) const {
  std::fill(y.begin(), y.end(), 0.0);
  switch (kind_) {
    case NormKind::LInf: {
      std::vector<int> argmax, argmin;
      linf_face(x, tie_eps, argmax, argmin);
      int best_hi = argmax.front();
      for (int i : argmax)
        if (grad[static_cast<std::size_t>(i)] < grad[static_cast<std::size_t>(best_hi)])
          best_hi = i;
      int best_lo = argmin.front();
      for (int j : argmin)
        if (grad[static_cast<std::size_t>(j)] > grad[static_cast<std::size_t>(best_lo)])
          best_lo = j;
      y[static_cast<std::size_t>(best_hi)] = 0.5;
      y[static_cast<std::size_t>(best_lo)] = -0.5;
      break;
    }
    case NormKind::L2: {
      // Strictly convex ball: the maximizing face is the single witness point.
      witness(x, WitnessPolicy::LowestIndex, tie_eps, y);
      break;
    }
    case NormKind::Lovasz: {
      // Order by x descending; inside each tie block the greedy vertex is a
      // free choice over the block's sub-base-polytope, so order by grad
      // ascending there to minimize <grad, y>.
      auto order = descending_order(x);
      std::size_t start = 0;
      while (start < order.size()) {
        std::size_t end = start + 1;
        while (end < order.size() &&
               x[static_cast<std::size_t>(order[start])] -
                       x[static_cast<std::size_t>(order[end])] <=
                   tie_eps)
          ++end;
        std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                         order.begin() + static_cast<std::ptrdiff_t>(end), [&](int a, int b) {
                           return grad[static_cast<std::size_t>(a)] <
                                  grad[static_cast<std::size_t>(b)];
                         });
        start = end;
      }
      cut_->greedy_vertex(order, y);
      for (double& v : y) v *= scale_;
      break;
    }
  }
}

double EdgeNorm::dual_gauge(std::span<const double> y) const {
  switch (kind_) {
    case NormKind::LInf: {
      double s = 0.0;
      for (double v : y) s += std::abs(v);
      return s;
    }
    case NormKind::L2:
      return norm2(y);
    case NormKind::Lovasz: {
      const int k = cut_->ground_size();
      double ymax = 0.0;
      for (double v : y) ymax = std::max(ymax, std::abs(v));
      double total = 0.0;
      for (double v : y) total += v;
      if (std::abs(total) > 1e-9 * (1.0 + ymax) * scale_)
        return std::numeric_limits<double>::infinity();
      // Smallest rho with y/scale in rho * B(delta): max subset-sum ratio.
      double rho = 0.0;
      const std::uint32_t full = cut_->full_mask();
      for (std::uint32_t mask = 1; mask < full; ++mask) {
        double ysum = 0.0;
        for (int i = 0; i < k; ++i)
          if (mask & (1u << i)) ysum += y[static_cast<std::size_t>(i)] / scale_;
        const double dv = cut_->value(mask);
        if (dv > 1e-12) {
          rho = std::max(rho, ysum / dv);
        } else if (ysum > 1e-9 * (1.0 + ymax / scale_)) {
          return std::numeric_limits<double>::infinity();
        }
      }
      return rho;
    }
  }
  return 0.0;
}

}  // namespace hyperheat
