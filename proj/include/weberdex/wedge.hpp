#pragma once

#include <string>
#include <vector>

#include "weberdex/kernel_series.hpp"
#include "weberdex/mbquad.hpp"
#include "weberdex/report.hpp"
#include "weberdex/transforms.hpp"

namespace weberdex {

/// Wedge 0 <= theta <= beta with data g on the edge theta = beta.
struct WedgeProblem {
  double alpha = 0.25;
  double beta = kPi / 2;
  SampledFunction boundary_g;

  WedgeProblem() = default;
  WedgeProblem(double alpha, double beta, SampledFunction g);
  /// Throws DomainError unless 0 < beta < 2 pi and g is given on the real line.
  void validate() const;
};

/// The default fixture: beta = pi/2, alpha = 1/4, g(tau) = tau^2 e^{-tau^2}.
WedgeProblem default_wedge_problem();

struct WedgeField {
  std::vector<double> r_grid;
  std::vector<double> theta_grid;
  std::vector<double> values;  // row-major, values[i * theta_grid.size() + j] = u(r_i, theta_j)
  std::vector<std::string> warnings;

  double at(std::size_t i, std::size_t j) const { return values[i * theta_grid.size() + j]; }
};

/// Spectral solution prepared once: Gauss nodes in tau with g folded onto tau >= 0.
class WedgeSolver {
 public:
  explicit WedgeSolver(const WedgeProblem& prob, const QuadratureConfig& cfg = {});
  double operator()(double r, double theta) const;
  /// W_alpha(r, tau_j) on the nodes.
  std::vector<double> kernel_column(double r) const;
  /// sum_j w_j W(r, tau_j) sinh(theta tau_j)/sinh(beta tau_j) g_j for a kernel column.
  double combine(const std::vector<double>& column, double theta) const;
  double tau_cutoff() const { return cutoff_; }
  bool odd_part_dropped() const { return odd_dropped_; }

 private:
  WedgeProblem prob_;
  double cutoff_ = 0.0;
  bool odd_dropped_ = false;
  std::vector<double> tau_;
  std::vector<double> weight_;  // Gauss weight times g(tau) + g(-tau)
  std::vector<KernelSeries> series_;
};

/// sinh(theta tau)/sinh(beta tau), theta/beta at tau = 0.
double sinh_ratio(double theta, double beta, double tau);

double wedge_solution(const WedgeProblem& prob, double r, double theta, const QuadratureConfig& cfg = {});
WedgeField wedge_field(const WedgeProblem& prob, const std::vector<double>& r_grid,
                       const std::vector<double>& theta_grid, const QuadratureConfig& cfg = {});

struct PdeResidual {
  double residual = 0.0;
  double scale = 0.0;  // largest term magnitude
};
/// Polar form of the fourth-order PDE by central differences at grid node (i, j);
/// needs 2 <= i < n_r - 2, 2 <= j < n_theta - 2 and uniform spacing.
PdeResidual pde_residual_ex(const WedgeProblem& prob, const WedgeField& field, std::size_t i, std::size_t j);
double pde_residual(const WedgeProblem& prob, const WedgeField& field, std::size_t i, std::size_t j);

/// max |u(r, 0)| (lhs, abs_err) and max relative |u(r, beta) - G_alpha g(r)| (rhs, rel_err).
IdentityReport boundary_audit(const WedgeProblem& prob, const WedgeField& field, const QuadratureConfig& cfg = {});

}  // namespace weberdex
