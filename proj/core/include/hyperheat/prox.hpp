#ifndef HYPERHEAT_PROX_HPP
#define HYPERHEAT_PROX_HPP

#include <memory>
#include <span>
#include <vector>

#include "hyperheat/hypergraph.hpp"

namespace hyperheat {

// Symmetric positive-definite geometry R for the mirror-descent solver,
// together with caller-supplied constants ell <= F(x)/((1/2)|x|_R^2) <= u.
class ProxOperator {
 public:
  ProxOperator(double ell, double u);
  virtual ~ProxOperator() = default;

  virtual void apply(std::span<const double> v, std::span<double> out) const = 0;
  virtual void apply_inverse(std::span<const double> v, std::span<double> out) const = 0;

  double ell() const { return ell_; }
  double u() const { return u_; }

  double quadratic(std::span<const double> v) const;  // <v, R v>

 private:
  double ell_;
  double u_;
};

class IdentityProx final : public ProxOperator {
 public:
  IdentityProx(double ell, double u) : ProxOperator(ell, u) {}
  void apply(std::span<const double> v, std::span<double> out) const override;
  void apply_inverse(std::span<const double> v, std::span<double> out) const override;
};

class DiagonalProx final : public ProxOperator {
 public:
  DiagonalProx(std::vector<double> diagonal, double ell, double u);
  void apply(std::span<const double> v, std::span<double> out) const override;
  void apply_inverse(std::span<const double> v, std::span<double> out) const override;

 private:
  std::vector<double> diag_;
};

// Degree geometry R = D.
std::unique_ptr<DiagonalProx> make_degree_prox(const Hypergraph& g, double ell, double u);

// Clique-expansion geometry R = L_clique + eps_scale * D, dense-factored at
// construction. Heuristic alternative to the degree prox; no rate guarantees.
class CliqueProx final : public ProxOperator {
 public:
  CliqueProx(const Hypergraph& g, double eps_scale, double ell, double u);
  ~CliqueProx() override;
  CliqueProx(CliqueProx&&) noexcept;
  void apply(std::span<const double> v, std::span<double> out) const override;
  void apply_inverse(std::span<const double> v, std::span<double> out) const override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace hyperheat

#endif  // HYPERHEAT_PROX_HPP
