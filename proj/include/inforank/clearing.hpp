#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inforank/graph.hpp"
#include "inforank/maxent.hpp"

namespace inforank {

/// Interbank liabilities plus external balance-sheet items. `liabilities` is
/// row-major n x n; entry (i, j) is what bank i owes bank j.
struct ClearingProblem {
  std::size_t n = 0;
  std::vector<double> liabilities;
  std::vector<double> external_assets;
  std::vector<double> external_liabilities;
  double alpha = 0.9;  // recovery on external assets when insolvent
  double beta = 0.9;   // recovery on interbank receipts when insolvent

  double liability(std::size_t i, std::size_t j) const { return liabilities[i * n + j]; }
  // p-bar: interbank plus external obligations per bank.
  std::vector<double> total_obligations() const;
  // Throws InputError on negative entries, non-zero diagonal, bad sizes or
  // recovery rates outside (0, 1].
  void validate() const;
};

struct ClearingOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 10000;
  bool record_trace = false;
};

struct PaymentVector {
  std::vector<double> payments;
  std::vector<bool> insolvent;
  std::size_t iterations = 0;
  std::vector<std::vector<double>> trace;  // every iterate, starting at p-bar, when requested
};

/// Greatest clearing vector of the Rogers–Veraart map, by Picard iteration
/// from p-bar. External creditors take their pro-rata share of each payment
/// and never pay back into the system.
PaymentVector clear(const ClearingProblem& problem, const ClearingOptions& opts = {});

struct UniformVolume {
  double total_volume = 0.0;    // V, observed interbank volume
  double expected_links = 0.0;  // <L> of the ensemble the graph was drawn from
};

/// Liability matrix of a directed graph. With `uniform`, every link carries
/// V / <L>; otherwise links take their weight from `weights` (1 when absent).
std::vector<double> build_liabilities(const Graph& g, const EdgeWeights* weights,
                                      const std::optional<UniformVolume>& uniform = std::nullopt);

struct ExternalsConfig {
  double mu_a = 10.0;
  double sigma_a = 0.1;
  double mu_l = 1.0;
  double sigma_l = 0.1;
};

struct RiskConfig {
  std::size_t samples = 100;  // per node
  double alpha = 0.9;
  double beta = 0.9;
  ExternalsConfig externals;
  std::uint64_t seed = 0;
  SolverOptions solver;
  ClearingOptions clearing;
  std::size_t threads = 1;
};

struct RiskReport {
  std::vector<double> external_assets;
  std::vector<double> external_liabilities;
  std::vector<double> real_payments;
  double total_volume = 0.0;
  std::vector<double> mse;  // NaN when flagged
  std::vector<std::optional<std::string>> failure;
};

/// Per-node mean of ||p_s - p_r||^2 / ||p_r||^2 over draws from each node's
/// conditioned ensemble. Externals are drawn once (Gaussian, clipped at 0)
/// and shared by the real network and all samples.
RiskReport risk_error_experiment(const Graph& g, const EdgeWeights* weights, const RiskConfig& cfg);

struct TrendFit {
  std::vector<double> coefficients;  // ascending powers: c0 + c1 x + c2 x^2
  double rss = 0.0;
};

/// Least-squares polynomial of degree 1 or 2. Throws InputError when the
/// design matrix is rank deficient.
TrendFit fit_trend(const std::vector<double>& x, const std::vector<double>& y, int degree);

}  // namespace inforank
