#include "inforank/recon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "inforank/errors.hpp"
#include "inforank/parallel.hpp"

namespace inforank {

double expected_accuracy(const ProbMatrix& p, const Graph& g) {
  if (p.size() != g.size() || p.directed() != g.directed()) {
    throw InputError("probability matrix and graph disagree in size or directedness");
  }
  const std::size_t n = g.size();
  if (n < 2) throw InputError("accuracy needs at least two nodes");
  double hits = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (i == j) continue;
      hits += g.has_edge(i, j) ? p(i, j) : 1.0 - p(i, j);
    }
  }
  return hits / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double node_accuracy(const Graph& g, NodeId node, const SolverOptions& opts) {
  return expected_accuracy(solve_conditioned(g, node, opts), g);
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InputError("pearson: vectors differ in length");
  if (x.size() < 2) throw UndefinedCorrelationError("pearson needs at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  double ax = 0.0, ay = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
    ax = std::max(ax, std::abs(x[i]));
    ay = std::max(ay, std::abs(y[i]));
  }
  // Spread below ~1e-12 of the magnitude is rounding noise, not signal.
  const bool flat_x = !(std::sqrt(sxx / n) > 1e-12 * std::max(ax, 1e-300));
  const bool flat_y = !(std::sqrt(syy / n) > 1e-12 * std::max(ay, 1e-300));
  if (flat_x || flat_y) throw UndefinedCorrelationError("zero variance: correlation undefined");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

AccuracyReport accuracy_report(const Graph& g, std::span<const RankVector> ranks,
                               const InfoRankOptions& opts) {
  const std::size_t n = g.size();
  AccuracyReport report;
  report.benchmark_accuracy = expected_accuracy(solve_benchmark(g, opts.solver).probs, g);
  report.accuracy.assign(n, std::numeric_limits<double>::quiet_NaN());
  report.failure.assign(n, std::nullopt);

  parallel_for(n, opts.threads, [&](std::size_t i) {
    try {
      report.accuracy[i] = node_accuracy(g, i, opts.solver);
    } catch (const Error& e) {
      report.failure[i] = e.what();
    }
  });

  for (const auto& rank : ranks) {
    IndexCorrelation corr{rank.name, std::nullopt, std::nullopt};
    if (rank.rescaled.size() != n) {
      corr.error = "rank vector has " + std::to_string(rank.rescaled.size()) + " entries, expected " +
                   std::to_string(n);
      report.correlations.push_back(std::move(corr));
      continue;
    }
    std::vector<double> a, r;
    for (std::size_t i = 0; i < n; ++i) {
      if (report.failure[i] || std::isnan(rank.rescaled[i])) continue;
      a.push_back(report.accuracy[i]);
      r.push_back(rank.rescaled[i]);
    }
    try {
      corr.r = pearson(a, r);
    } catch (const Error& e) {
      corr.error = e.what();
    }
    report.correlations.push_back(std::move(corr));
  }
  return report;
}

}  // namespace inforank
