#ifndef HYPERHEAT_VECTOR_OPS_HPP
#define HYPERHEAT_VECTOR_OPS_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "hyperheat/errors.hpp"

namespace hyperheat {

// Dense real vector indexed by vertex id.
using VertexVector = std::vector<double>;

inline double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// <x, y>_W = sum_i w_i x_i y_i for a diagonal weight vector w.
inline double dot_weighted(std::span<const double> x, std::span<const double> y,
                           std::span<const double> w) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * x[i] * y[i];
  return s;
}

inline double norm_weighted_sq(std::span<const double> x, std::span<const double> w) {
  return dot_weighted(x, x, w);
}

inline double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

inline double linf_norm(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(std::span<double> x, double alpha) {
  for (double& v : x) v *= alpha;
}

// Degree-weighted mean <x,1>_D / Vol; the scalar behind pi(x).
inline double degree_mean(std::span<const double> x, std::span<const double> degrees,
                          double volume) {
  if (volume <= 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += degrees[i] * x[i];
  return s / volume;
}

inline void require_finite(std::span<const double> x, const char* what) {
  for (double v : x) {
    if (!std::isfinite(v)) throw InvalidArgument(std::string(what) + ": non-finite entry");
  }
}

}  // namespace hyperheat

#endif  // HYPERHEAT_VECTOR_OPS_HPP
