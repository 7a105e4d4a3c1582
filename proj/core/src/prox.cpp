#include "hyperheat/prox.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "hyperheat/conversions.hpp"
#include "hyperheat/errors.hpp"
#include "hyperheat/vector_ops.hpp"

namespace hyperheat {

ProxOperator::ProxOperator(double ell, double u) : ell_(ell), u_(u) {
  if (!(ell > 0.0) || !(u > 0.0) || ell > u)
    throw NonpositiveConstants("prox constants must satisfy 0 < ell <= u");
}

double ProxOperator::quadratic(std::span<const double> v) const {
  std::vector<double> rv(v.size());
  apply(v, rv);
  return dot(v, rv);
}

void IdentityProx::apply(std::span<const double> v, std::span<double> out) const {
  std::copy(v.begin(), v.end(), out.begin());
}

void IdentityProx::apply_inverse(std::span<const double> v, std::span<double> out) const {
  std::copy(v.begin(), v.end(), out.begin());
}

DiagonalProx::DiagonalProx(std::vector<double> diagonal, double ell, double u)
    : ProxOperator(ell, u), diag_(std::move(diagonal)) {
  for (double d : diag_)
    if (!(d > 0.0)) throw NonpositiveConstants("diagonal prox requires positive entries");
}

void DiagonalProx::apply(std::span<const double> v, std::span<double> out) const {
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = diag_[i] * v[i];
}

void DiagonalProx::apply_inverse(std::span<const double> v, std::span<double> out) const {
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / diag_[i];
}

std::unique_ptr<DiagonalProx> make_degree_prox(const Hypergraph& g, double ell, double u) {
  return std::make_unique<DiagonalProx>(g.degrees(), ell, u);
}

struct CliqueProx::Impl {
  Eigen::MatrixXd r;
  Eigen::LDLT<Eigen::MatrixXd> factor;
};

CliqueProx::CliqueProx(const Hypergraph& g, double eps_scale, double ell, double u)
    : ProxOperator(ell, u), impl_(std::make_unique<Impl>()) {
  if (!(eps_scale > 0.0)) throw NonpositiveConstants("clique prox requires eps_scale > 0");
  const int n = g.vertex_count();
  const Hypergraph clique = clique_expansion(g);
  impl_->r = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : clique.edges()) {
    const int i = e.vertices[0];
    const int j = e.vertices[1];
    impl_->r(i, i) += e.weight;
    impl_->r(j, j) += e.weight;
    impl_->r(i, j) -= e.weight;
    impl_->r(j, i) -= e.weight;
  }
  for (int i = 0; i < n; ++i) impl_->r(i, i) += eps_scale * g.degree(i);
  impl_->factor.compute(impl_->r);
  if (impl_->factor.info() != Eigen::Success)
    throw Error("clique prox factorization failed");
}

CliqueProx::~CliqueProx() = default;
CliqueProx::CliqueProx(CliqueProx&&) noexcept = default;

void CliqueProx::apply(std::span<const double> v, std::span<double> out) const {
  Eigen::Map<const Eigen::VectorXd> vm(v.data(), static_cast<Eigen::Index>(v.size()));
  Eigen::Map<Eigen::VectorXd> om(out.data(), static_cast<Eigen::Index>(out.size()));
  om = impl_->r * vm;
}

void CliqueProx::apply_inverse(std::span<const double> v, std::span<double> out) const {
  Eigen::Map<const Eigen::VectorXd> vm(v.data(), static_cast<Eigen::Index>(v.size()));
  Eigen::Map<Eigen::VectorXd> om(out.data(), static_cast<Eigen::Index>(out.size()));
  om = impl_->factor.solve(vm);
}

}  // namespace hyperheat
