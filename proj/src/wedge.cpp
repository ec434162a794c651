#include "weberdex/wedge.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "weberdex/errors.hpp"
#include "weberdex/quadrature.hpp"

namespace weberdex {

WedgeProblem::WedgeProblem(double a, double b, SampledFunction g) : alpha(a), beta(b), boundary_g(std::move(g)) {
  validate();
}

void WedgeProblem::validate() const {
  if (!(beta > 0.0 && beta < 2 * kPi)) throw DomainError("wedge: beta must lie in (0, 2 pi)");
  if (!std::isfinite(alpha)) throw DomainError("wedge: alpha must be finite");
  if (!boundary_g.evaluate) throw DomainError("wedge: boundary data missing");
  if (boundary_g.domain != DomainKind::RealLine) throw DomainError("wedge: boundary data must live on the real line");
}

WedgeProblem default_wedge_problem() {
  auto g = SampledFunction::callable([](double t) { return t * t * std::exp(-t * t); }, DomainKind::RealLine);
  return WedgeProblem(0.25, kPi / 2, g);
}

double sinh_ratio(double theta, double beta, double tau) {
  double t = std::abs(tau);
  if (t * beta < 1e-8) return theta / beta;
  return std::exp((theta - beta) * t) * std::expm1(-2.0 * theta * t) / std::expm1(-2.0 * beta * t);
}

WedgeSolver::WedgeSolver(const WedgeProblem& prob, const QuadratureConfig& cfg) : prob_(prob) {
  cfg.validate();
  prob_.validate();
  const auto& g = prob_.boundary_g;
  odd_dropped_ = g.parity() != 1;
  auto folded = [&](double t) { return g(t) + g(-t); };

  // the edge theta = beta is the slowest case: g(tau) cosh(pi tau) must become negligible
  double peak = 0.0;
  std::vector<double> mags;
  const double step = 0.4;
  for (int k = 0; k * step <= 60.0; ++k) {
    double t = k * step;
    double m = std::abs(folded(t)) * std::cosh(kPi * t);
    if (!std::isfinite(m)) m = HUGE_VAL;
    mags.push_back(m);
    peak = std::max(peak, m);
  }
  if (peak == 0.0) return;
  std::size_t kc = 0;
  for (std::size_t k = 1; k < mags.size(); ++k) {
    bool rest = true;
    for (std::size_t j = k; j < mags.size(); ++j) rest = rest && mags[j] < 1e-16 * peak;
    if (rest) {
      kc = k;
      break;
    }
  }
  if (kc == 0) throw TailError("wedge: g(tau) cosh(pi tau) not negligible before tau = 60");
  cutoff_ = std::max<std::size_t>(kc, 3) * step;

  using G = boost::math::quadrature::gauss<double, 20>;
  const auto& ab = G::abscissa();
  const auto& wt = G::weights();
  const int panels = static_cast<int>(std::lround(cutoff_ / step));
  for (int p = 0; p < panels; ++p) {
    double mid = (p + 0.5) * step;
    double half = 0.5 * step;
    for (std::size_t i = 0; i < ab.size(); ++i) {
      for (double sg : {-1.0, 1.0}) {
        double t = mid + sg * half * ab[i];
        tau_.push_back(t);
        weight_.push_back(half * wt[i] * folded(t));
      }
    }
  }
  series_.reserve(tau_.size());
  for (double t : tau_) series_.emplace_back(prob_.alpha, t);
}

std::vector<double> WedgeSolver::kernel_column(double r) const {
  if (!(r > 0.0)) throw DomainError("wedge: r must be positive");
  std::vector<double> col(tau_.size());
  for (std::size_t j = 0; j < tau_.size(); ++j) {
    col[j] = r <= kSeriesMaxX ? series_[j].eval(r).w : kernel_w_any(prob_.alpha, tau_[j], r);
  }
  return col;
}

double WedgeSolver::combine(const std::vector<double>& column, double theta) const {
  if (!(theta >= 0.0 && theta <= prob_.beta)) {
    throw DomainError("wedge: theta = " + std::to_string(theta) + " outside [0, beta]");
  }
  if (theta == 0.0) return 0.0;
  double sum = 0.0;
  for (std::size_t j = 0; j < tau_.size(); ++j) {
    sum += weight_[j] * column[j] * sinh_ratio(theta, prob_.beta, tau_[j]);
  }
  return sum;
}

double WedgeSolver::operator()(double r, double theta) const {
  if (!(theta >= 0.0 && theta <= prob_.beta)) {
    throw DomainError("wedge: theta = " + std::to_string(theta) + " outside [0, beta]");
  }
  return combine(kernel_column(r), theta);
}

double wedge_solution(const WedgeProblem& prob, double r, double theta, const QuadratureConfig& cfg) {
  return WedgeSolver(prob, cfg)(r, theta);
}

WedgeField wedge_field(const WedgeProblem& prob, const std::vector<double>& r_grid,
                       const std::vector<double>& theta_grid, const QuadratureConfig& cfg) {
  for (std::size_t i = 1; i < r_grid.size(); ++i) {
    if (!(r_grid[i] > r_grid[i - 1])) throw DomainError("wedge_field: r grid must be strictly increasing");
  }
  for (std::size_t j = 0; j < theta_grid.size(); ++j) {
    if (j > 0 && !(theta_grid[j] > theta_grid[j - 1])) {
      throw DomainError("wedge_field: theta grid must be strictly increasing");
    }
    if (!(theta_grid[j] >= 0.0 && theta_grid[j] <= prob.beta)) throw DomainError("wedge_field: theta outside [0, beta]");
  }
  WedgeSolver solver(prob, cfg);
  WedgeField f;
  f.r_grid = r_grid;
  f.theta_grid = theta_grid;
  f.values.assign(r_grid.size() * theta_grid.size(), 0.0);
  if (solver.odd_part_dropped()) f.warnings.push_back("boundary data is not even; its odd part integrates to zero");
  parallel_for(r_grid.size(), [&](std::size_t i) {
    auto col = solver.kernel_column(r_grid[i]);
    for (std::size_t j = 0; j < theta_grid.size(); ++j) {
      f.values[i * theta_grid.size() + j] = solver.combine(col, theta_grid[j]);
    }
  });
  return f;
}

namespace {

double uniform_step(const std::vector<double>& g, const char* what) {
  if (g.size() < 5) throw StencilError(std::string(what) + ": need at least 5 grid points");
  double h = (g.back() - g.front()) / (g.size() - 1);
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (std::abs(g[i] - g[i - 1] - h) > 1e-9 * h) throw StencilError(std::string(what) + ": grid is not uniform");
  }
  return h;
}

}  // namespace

PdeResidual pde_residual_ex(const WedgeProblem& prob, const WedgeField& field, std::size_t i, std::size_t j) {
  const std::size_t nr = field.r_grid.size();
  const std::size_t nt = field.theta_grid.size();
  const double hr = uniform_step(field.r_grid, "pde_residual (r)");
  const double ht = uniform_step(field.theta_grid, "pde_residual (theta)");
  if (i < 2 || j < 2 || i + 2 >= nr || j + 2 >= nt) throw StencilError("pde_residual: node too close to the edge");
  auto u = [&](long di, long dj) { return field.at(i + di, j + dj); };

  // theta second difference at r offset di
  auto utt = [&](long di) { return (u(di, 1) - 2.0 * u(di, 0) + u(di, -1)) / (ht * ht); };

  const double r = field.r_grid[i];
  const double a2 = prob.alpha * prob.alpha;
  const double u0 = u(0, 0);
  const double ur = (u(1, 0) - u(-1, 0)) / (2 * hr);
  const double urr = (u(1, 0) - 2 * u0 + u(-1, 0)) / (hr * hr);
  const double urrr = (u(2, 0) - 2 * u(1, 0) + 2 * u(-1, 0) - u(-2, 0)) / (2 * hr * hr * hr);
  const double urrrr = (u(2, 0) - 4 * u(1, 0) + 6 * u0 - 4 * u(-1, 0) + u(-2, 0)) / (hr * hr * hr * hr);
  const double uthth = utt(0);
  const double urrtt = (utt(1) - 2 * utt(0) + utt(-1)) / (hr * hr);
  const double urtt = (utt(1) - utt(-1)) / (2 * hr);

  const double terms[] = {
      r * r * urrrr, urrtt, 6 * r * urrr, urtt / r, (7 - a2 + r) * urr, -a2 / (r * r) * uthth,
      ((1 - a2) / r + 2.5) * ur, u0 / (2 * r)};
  PdeResidual out;
  for (double t : terms) {
    out.residual += t;
    out.scale = std::max(out.scale, std::abs(t));
  }
  return out;
}

double pde_residual(const WedgeProblem& prob, const WedgeField& field, std::size_t i, std::size_t j) {
  return pde_residual_ex(prob, field, i, j).residual;
}

IdentityReport boundary_audit(const WedgeProblem& prob, const WedgeField& field, const QuadratureConfig& cfg) {
  IdentityReport rep;
  rep.family = "wedge-boundary";
  rep.name = "wedge-boundary";
  rep.abs_tol = 1e-12;
  rep.rel_tol = 1e-6;
  const auto& th = field.theta_grid;
  std::ptrdiff_t j0 = -1;
  std::ptrdiff_t jb = -1;
  for (std::size_t j = 0; j < th.size(); ++j) {
    if (th[j] == 0.0) j0 = static_cast<std::ptrdiff_t>(j);
    if (std::abs(th[j] - prob.beta) <= 1e-12 * prob.beta) jb = static_cast<std::ptrdiff_t>(j);
  }
  double zero_max = 0.0;
  double edge_max = 0.0;
  if (j0 >= 0) {
    for (std::size_t i = 0; i < field.r_grid.size(); ++i) zero_max = std::max(zero_max, std::abs(field.at(i, j0)));
  }
  if (jb >= 0 && !field.r_grid.empty()) {
    GTransform G(KernelOrder(prob.alpha), prob.boundary_g, cfg);
    for (std::size_t i = 0; i < field.r_grid.size(); ++i) {
      double gv = G(field.r_grid[i]);
      double d = std::abs(field.at(i, jb) - gv);
      edge_max = std::max(edge_max, gv != 0.0 ? d / std::abs(gv) : d);
    }
  }
  rep.lhs = zero_max;
  rep.rhs = edge_max;
  rep.abs_err = zero_max;
  rep.rel_err = edge_max;
  rep.passed = zero_max <= rep.abs_tol && edge_max <= rep.rel_tol;
  std::string note;
  if (j0 < 0) note += "theta = 0 not on the grid; ";
  if (jb < 0) note += "theta = beta not on the grid; ";
  if (!note.empty()) note.resize(note.size() - 2);
  rep.note = note;
  return rep;
}

}  // namespace weberdex
