#include "inforank/clearing.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "inforank/errors.hpp"
#include "inforank/parallel.hpp"
#include "inforank/random.hpp"
#include "inforank/sampling.hpp"

namespace inforank {

std::vector<double> ClearingProblem::total_obligations() const {
  std::vector<double> pbar(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pbar[i] += liabilities[i * n + j];
    pbar[i] += external_liabilities[i];
  }
  return pbar;
}

void ClearingProblem::validate() const {
  if (liabilities.size() != n * n || external_assets.size() != n || external_liabilities.size() != n) {
    throw InputError("clearing problem arrays do not match n=" + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (liabilities[i * n + i] != 0.0) throw InputError("bank " + std::to_string(i) + " owes itself");
    if (!(external_assets[i] >= 0.0) || !(external_liabilities[i] >= 0.0)) {
      throw InputError("external assets and liabilities must be non-negative");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!(liabilities[i * n + j] >= 0.0)) throw InputError("negative interbank liability");
    }
  }
  if (!(alpha > 0.0 && alpha <= 1.0) || !(beta > 0.0 && beta <= 1.0)) {
    throw InputError("recovery rates alpha and beta must lie in (0, 1]");
  }
}

PaymentVector clear(const ClearingProblem& problem, const ClearingOptions& opts) {
  problem.validate();
  const std::size_t n = problem.n;
  const auto pbar = problem.total_obligations();

  // relative[j * n + i] = share of j's payment that goes to i.
  std::vector<double> relative(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (pbar[j] <= 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) relative[j * n + i] = problem.liability(j, i) / pbar[j];
  }

  PaymentVector out;
  std::vector<double> p = pbar;
  std::vector<double> inflow(n);
  if (opts.record_trace) out.trace.push_back(p);

  double change = std::numeric_limits<double>::infinity();
  std::size_t it = 0;
  while (it < opts.max_iterations) {
    std::fill(inflow.begin(), inflow.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (p[j] == 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) inflow[i] += relative[j * n + i] * p[j];
    }
    change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double next = problem.external_assets[i] + inflow[i] >= pbar[i]
                        ? pbar[i]
                        : problem.alpha * problem.external_assets[i] + problem.beta * inflow[i];
      // The map is monotone, so iterates from p-bar can only fall.
      next = std::min(next, p[i]);
      change = std::max(change, p[i] - next);
      p[i] = next;
    }
    ++it;
    if (opts.record_trace) out.trace.push_back(p);
    if (change < opts.tolerance) break;
  }
  if (!(change < opts.tolerance)) {
    throw SolverError("clearing did not reach tolerance in " + std::to_string(opts.max_iterations) +
                          " iterations",
                      change);
  }

  out.insolvent.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.insolvent[i] = p[i] < pbar[i];
  out.payments = std::move(p);
  out.iterations = it;
  return out;
}

std::vector<double> build_liabilities(const Graph& g, const EdgeWeights* weights,
                                      const std::optional<UniformVolume>& uniform) {
  if (!g.directed()) throw InputError("liabilities need a directed graph");
  const std::size_t n = g.size();
  std::vector<double> L(n * n, 0.0);
  if (uniform) {
    if (!(uniform->expected_links > 0.0) || !(uniform->total_volume >= 0.0)) {
      throw InputError("uniform weighting needs positive expected link count and non-negative volume");
    }
    const double w = uniform->total_volume / uniform->expected_links;
    for (const auto& [u, v] : g.edges()) L[u * n + v] = w;
    return L;
  }
  for (const auto& e : g.edges()) {
    double w = 1.0;
    if (weights) {
      auto it = weights->find(e);
      if (it != weights->end()) w = it->second;
    }
    if (w < 0.0) {
      throw InputError("negative weight on edge " + g.label(e.first) + " -> " + g.label(e.second));
    }
    L[e.first * n + e.second] = w;
  }
  return L;
}

RiskReport risk_error_experiment(const Graph& g, const EdgeWeights* weights, const RiskConfig& cfg) {
  if (!g.directed()) throw InputError("the risk experiment needs a directed liability network");
  if (cfg.samples == 0) throw InputError("at least one sample per node is required");
  const std::size_t n = g.size();

  RiskReport report;
  {
    Rng rng(cfg.seed);
    std::normal_distribution<double> assets(cfg.externals.mu_a, cfg.externals.sigma_a);
    std::normal_distribution<double> debts(cfg.externals.mu_l, cfg.externals.sigma_l);
    report.external_assets.resize(n);
    report.external_liabilities.resize(n);
    for (std::size_t i = 0; i < n; ++i) report.external_assets[i] = std::max(0.0, assets(rng));
    for (std::size_t i = 0; i < n; ++i) report.external_liabilities[i] = std::max(0.0, debts(rng));
  }

  ClearingProblem real;
  real.n = n;
  real.liabilities = build_liabilities(g, weights);
  real.external_assets = report.external_assets;
  real.external_liabilities = report.external_liabilities;
  real.alpha = cfg.alpha;
  real.beta = cfg.beta;
  report.real_payments = clear(real, cfg.clearing).payments;
  for (double v : real.liabilities) report.total_volume += v;

  double real_norm = 0.0;
  for (double v : report.real_payments) real_norm += v * v;
  if (!(real_norm > 0.0)) throw InputError("real payment vector is zero; normalised error undefined");

  report.mse.assign(n, std::numeric_limits<double>::quiet_NaN());
  report.failure.assign(n, std::nullopt);
  parallel_for(n, cfg.threads, [&](std::size_t node) {
    try {
      const ProbMatrix P = solve_conditioned(g, node, cfg.solver);
      const UniformVolume volume{report.total_volume, P.expected_links()};
      const std::uint64_t node_seed = mix_seed(cfg.seed, node);
      ClearingProblem sampled = real;
      double total = 0.0;
      for (std::size_t t = 0; t < cfg.samples; ++t) {
        const Graph s = sample_graph(P, sample_seed(node_seed, t), g.labels());
        sampled.liabilities = build_liabilities(s, nullptr, volume);
        const auto pay = clear(sampled, cfg.clearing).payments;
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const double d = pay[i] - report.real_payments[i];
          err += d * d;
        }
        total += err / real_norm;
      }
      report.mse[node] = total / static_cast<double>(cfg.samples);
    } catch (const Error& e) {
      report.failure[node] = e.what();
    }
  });
  return report;
}

TrendFit fit_trend(const std::vector<double>& x, const std::vector<double>& y, int degree) {
  if (degree != 1 && degree != 2) throw InputError("trend degree must be 1 or 2");
  if (x.size() != y.size()) throw InputError("fit_trend: x and y differ in length");
  const auto m = static_cast<Eigen::Index>(x.size());
  if (m < degree + 1) throw InputError("fit_trend: not enough points for the requested degree");

  Eigen::MatrixXd design(m, degree + 1);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    double power = 1.0;
    for (int d = 0; d <= degree; ++d) {
      design(i, d) = power;
      power *= x[static_cast<std::size_t>(i)];
    }
    rhs[i] = y[static_cast<std::size_t>(i)];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-12);
  if (qr.rank() < degree + 1) throw InputError("fit_trend: design matrix is rank deficient");
  Eigen::VectorXd coef = qr.solve(rhs);

  TrendFit fit;
  fit.coefficients.assign(coef.data(), coef.data() + coef.size());
  fit.rss = (design * coef - rhs).squaredNorm();
  return fit;
}

}  // namespace inforank
