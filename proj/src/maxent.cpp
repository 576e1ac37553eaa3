#include "inforank/maxent.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "inforank/errors.hpp"

namespace inforank {

double ProbMatrix::row_sum(std::size_t i) const {
  double s = 0.0;
  for (std::size_t j = 0; j < n_; ++j) s += p_[i * n_ + j];
  return s;
}

double ProbMatrix::col_sum(std::size_t j) const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) s += p_[i * n_ + j];
  return s;
}

std::size_t ProbMatrix::nonzeros() const {
  return static_cast<std::size_t>(std::count_if(p_.begin(), p_.end(), [](double v) { return v != 0.0; }));
}

double ProbMatrix::expected_links() const {
  double s = 0.0;
  for (double v : p_) s += v;
  return directed_ ? s : 0.5 * s;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double softplus(double z) {
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

// Degree classes: nodes with identical reduced degrees share their parameter
// at the (unique) optimum, so the unknowns are one per class.
struct DegreeClass {
  double count = 0.0;
  double k_out = 0.0;  // undirected problems use k_out only
  double k_in = 0.0;
};

struct ClassSolve {
  std::vector<double> u;  // log out-fitness (or log fitness)
  std::vector<double> w;  // log in-fitness, directed only
  double residual = kInf;
  std::size_t iterations = 0;
};

// Solves (H + shift I) d = -g with the smallest shift that gives a
// positive-definite factorisation.
Eigen::VectorXd newton_direction(const Eigen::MatrixXd& hessian, const Eigen::VectorXd& grad) {
  const double scale = std::max(1.0, hessian.diagonal().cwiseAbs().maxCoeff());
  double shift = 0.0;
  for (int attempt = 0; attempt < 12; ++attempt) {
    Eigen::MatrixXd h = hessian;
    if (shift > 0.0) h.diagonal().array() += shift;
    Eigen::LLT<Eigen::MatrixXd> llt(h);
    if (llt.info() == Eigen::Success) {
      Eigen::VectorXd d = llt.solve(-grad);
      if (d.allFinite() && grad.dot(d) < 0.0) return d;
    }
    shift = shift == 0.0 ? 1e-12 * scale : shift * 100.0;
  }
  return -grad / scale;
}

// Generic damped Newton on a smooth convex objective. `eval` fills the
// objective, gradient, Hessian and the max degree residual for a point.
template <typename Eval>
void newton_minimise(Eigen::VectorXd& v, Eval&& eval, double target, std::size_t max_iter,
                     ClassSolve& out) {
  const std::size_t dim = static_cast<std::size_t>(v.size());
  Eigen::MatrixXd hess(dim, dim);
  Eigen::VectorXd grad(dim);
  Eigen::MatrixXd hess_trial(dim, dim);
  Eigen::VectorXd grad_trial(dim);
  double f = 0.0;
  double resid = eval(v, f, grad, hess);

  std::size_t it = 0;
  for (; it < max_iter && resid > target; ++it) {
    Eigen::VectorXd d = newton_direction(hess, grad);
    // Cap the step in log-parameter space; boundary solutions walk off to
    // infinity and would otherwise overflow.
    const double longest = d.cwiseAbs().maxCoeff();
    if (longest > 16.0) d *= 16.0 / longest;

    const double slope = grad.dot(d);
    const double slack = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(f));
    double t = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      Eigen::VectorXd trial = v + t * d;
      double f_trial = 0.0;
      double r_trial = eval(trial, f_trial, grad_trial, hess_trial);
      if (std::isfinite(f_trial) && (f_trial <= f + 1e-4 * t * slope + slack || r_trial < resid)) {
        v = std::move(trial);
        f = f_trial;
        resid = r_trial;
        grad.swap(grad_trial);
        hess.swap(hess_trial);
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;
  }
  out.residual = resid;
  out.iterations += it;
}

ClassSolve solve_undirected_classes(const std::vector<DegreeClass>& cls, const SolverOptions& opts,
                                    double target) {
  const std::size_t c = cls.size();
  double total = 0.0;
  for (const auto& a : cls) total += a.count * a.k_out;

  ClassSolve out;
  Eigen::VectorXd u(c);
  for (std::size_t a = 0; a < c; ++a) u[a] = std::log(cls[a].k_out / std::sqrt(total));

  const bool newton = opts.method == SolverMethod::kNewton ||
                      (opts.method == SolverMethod::kAuto && c <= opts.newton_limit);
  if (newton) {
    auto eval = [&](const Eigen::VectorXd& v, double& f, Eigen::VectorXd& g, Eigen::MatrixXd& h) {
      f = 0.0;
      g.setZero();
      h.setZero();
      double resid = 0.0;
      for (std::size_t a = 0; a < c; ++a) {
        double deg = 0.0;
        for (std::size_t b = 0; b < c; ++b) {
          const double partners = cls[b].count - (a == b ? 1.0 : 0.0);
          if (partners <= 0.0) continue;
          const double z = v[a] + v[b];
          const double p = sigmoid(z);
          const double q = p * sigmoid(-z);
          deg += partners * p;
          f += 0.5 * cls[a].count * partners * softplus(z);
          if (a == b) {
            h(a, a) += 2.0 * cls[a].count * partners * q;
          } else {
            h(a, a) += cls[a].count * partners * q;
            h(a, b) += cls[a].count * partners * q;
          }
        }
        const double r = deg - cls[a].k_out;
        g[a] = cls[a].count * r;
        f -= cls[a].count * cls[a].k_out * v[a];
        resid = std::max(resid, std::abs(r));
      }
      return resid;
    };
    newton_minimise(u, eval, target, std::min<std::size_t>(opts.max_iterations, 1000), out);
  } else {
    std::vector<double> x(c);
    for (std::size_t a = 0; a < c; ++a) x[a] = std::exp(u[a]);
    std::size_t it = 0;
    double resid = kInf;
    for (; it < opts.max_iterations; ++it) {
      resid = 0.0;
      std::vector<double> next(c);
      for (std::size_t a = 0; a < c; ++a) {
        double deg = 0.0;
        double denom = 0.0;
        for (std::size_t b = 0; b < c; ++b) {
          const double partners = cls[b].count - (a == b ? 1.0 : 0.0);
          if (partners <= 0.0) continue;
          const double xy = x[a] * x[b];
          deg += partners * xy / (1.0 + xy);
          denom += partners * x[b] / (1.0 + xy);
        }
        resid = std::max(resid, std::abs(deg - cls[a].k_out));
        next[a] = cls[a].k_out / denom;
      }
      if (resid <= target) break;
      x.swap(next);
    }
    for (std::size_t a = 0; a < c; ++a) u[a] = std::log(x[a]);
    out.residual = resid;
    out.iterations = it;
  }
  out.u.assign(u.data(), u.data() + c);
  return out;
}

ClassSolve solve_directed_classes(const std::vector<DegreeClass>& cls, const SolverOptions& opts,
                                  double target) {
  const std::size_t c = cls.size();
  std::vector<int> ui(c, -1), wi(c, -1);
  int dim = 0;
  double total = 0.0;
  for (std::size_t a = 0; a < c; ++a) {
    if (cls[a].k_out > 0) ui[a] = dim++;
    total += cls[a].count * cls[a].k_out;
  }
  for (std::size_t a = 0; a < c; ++a) {
    if (cls[a].k_in > 0) wi[a] = dim++;
  }
  Eigen::VectorXd v(dim);
  for (std::size_t a = 0; a < c; ++a) {
    if (ui[a] >= 0) v[ui[a]] = std::log(cls[a].k_out / std::sqrt(total));
    if (wi[a] >= 0) v[wi[a]] = std::log(cls[a].k_in / std::sqrt(total));
  }

  Eigen::VectorXd gauge_dir = Eigen::VectorXd::Zero(dim);
  for (std::size_t a = 0; a < c; ++a) {
    if (ui[a] >= 0) gauge_dir[ui[a]] = 1.0;
    if (wi[a] >= 0) gauge_dir[wi[a]] = -1.0;
  }

  ClassSolve out;
  const bool newton = opts.method == SolverMethod::kNewton ||
                      (opts.method == SolverMethod::kAuto && static_cast<std::size_t>(dim) <= opts.newton_limit);
  if (newton) {
    // x -> s x, y -> y / s leaves every p_ij unchanged; a quadratic penalty on
    // sum(u) - sum(w) pins that direction without moving the optimum.
    auto eval = [&](const Eigen::VectorXd& vv, double& f, Eigen::VectorXd& g, Eigen::MatrixXd& h) {
      f = 0.0;
      g.setZero();
      h.setZero();
      std::vector<double> out_deg(c, 0.0), in_deg(c, 0.0);
      for (std::size_t a = 0; a < c; ++a) {
        if (ui[a] < 0) continue;
        for (std::size_t b = 0; b < c; ++b) {
          if (wi[b] < 0) continue;
          const double partners = cls[b].count - (a == b ? 1.0 : 0.0);
          if (partners <= 0.0) continue;
          const double pairs = cls[a].count * partners;
          const double z = vv[ui[a]] + vv[wi[b]];
          const double p = sigmoid(z);
          const double q = p * sigmoid(-z);
          out_deg[a] += partners * p;
          in_deg[b] += (cls[a].count - (a == b ? 1.0 : 0.0)) * p;
          f += pairs * softplus(z);
          h(ui[a], ui[a]) += pairs * q;
          h(wi[b], wi[b]) += pairs * q;
          h(ui[a], wi[b]) += pairs * q;
          h(wi[b], ui[a]) += pairs * q;
        }
      }
      double resid = 0.0;
      double gauge = 0.0;
      for (std::size_t a = 0; a < c; ++a) {
        if (ui[a] >= 0) {
          const double r = out_deg[a] - cls[a].k_out;
          g[ui[a]] = cls[a].count * r;
          f -= cls[a].count * cls[a].k_out * vv[ui[a]];
          resid = std::max(resid, std::abs(r));
          gauge += vv[ui[a]];
        }
        if (wi[a] >= 0) {
          const double r = in_deg[a] - cls[a].k_in;
          g[wi[a]] = cls[a].count * r;
          f -= cls[a].count * cls[a].k_in * vv[wi[a]];
          resid = std::max(resid, std::abs(r));
          gauge -= vv[wi[a]];
        }
      }
      f += 0.5 * gauge * gauge;
      for (std::size_t a = 0; a < c; ++a) {
        if (ui[a] >= 0) g[ui[a]] += gauge;
        if (wi[a] >= 0) g[wi[a]] -= gauge;
      }
      h.noalias() += gauge_dir * gauge_dir.transpose();
      return resid;
    };
    newton_minimise(v, eval, target, std::min<std::size_t>(opts.max_iterations, 1000), out);
  } else {
    std::vector<double> x(c, 0.0), y(c, 0.0);
    for (std::size_t a = 0; a < c; ++a) {
      if (ui[a] >= 0) x[a] = std::exp(v[ui[a]]);
      if (wi[a] >= 0) y[a] = std::exp(v[wi[a]]);
    }
    std::size_t it = 0;
    double resid = kInf;
    auto residual = [&] {
      double r = 0.0;
      std::vector<double> in_deg(c, 0.0);
      for (std::size_t a = 0; a < c; ++a) {
        double od = 0.0;
        for (std::size_t b = 0; b < c; ++b) {
          const double xy = x[a] * y[b];
          const double p = xy / (1.0 + xy);
          od += (cls[b].count - (a == b ? 1.0 : 0.0)) * p;
          in_deg[b] += (cls[a].count - (a == b ? 1.0 : 0.0)) * p;
        }
        r = std::max(r, std::abs(od - cls[a].k_out));
      }
      for (std::size_t b = 0; b < c; ++b) r = std::max(r, std::abs(in_deg[b] - cls[b].k_in));
      return r;
    };
    for (; it < opts.max_iterations; ++it) {
      resid = residual();
      if (resid <= target) break;
      for (std::size_t a = 0; a < c; ++a) {
        if (ui[a] < 0) continue;
        double denom = 0.0;
        for (std::size_t b = 0; b < c; ++b) {
          denom += (cls[b].count - (a == b ? 1.0 : 0.0)) * y[b] / (1.0 + x[a] * y[b]);
        }
        x[a] = cls[a].k_out / denom;
      }
      for (std::size_t b = 0; b < c; ++b) {
        if (wi[b] < 0) continue;
        double denom = 0.0;
        for (std::size_t a = 0; a < c; ++a) {
          denom += (cls[a].count - (a == b ? 1.0 : 0.0)) * x[a] / (1.0 + x[a] * y[b]);
        }
        y[b] = cls[b].k_in / denom;
      }
    }
    for (std::size_t a = 0; a < c; ++a) {
      if (ui[a] >= 0) v[ui[a]] = std::log(x[a]);
      if (wi[a] >= 0) v[wi[a]] = std::log(y[a]);
    }
    out.residual = resid;
    out.iterations = it;
  }
  out.u.assign(c, -kInf);
  out.w.assign(c, -kInf);
  for (std::size_t a = 0; a < c; ++a) {
    if (ui[a] >= 0) out.u[a] = v[ui[a]];
    if (wi[a] >= 0) out.w[a] = v[wi[a]];
  }
  return out;
}

struct BlockResult {
  std::vector<double> log_x;  // per block node; -inf for zero degree, +inf when saturated
  std::vector<double> log_y;
  std::size_t iterations = 0;
  double residual = 0.0;
};

double internal_target(const SolverOptions& opts) { return 0.25 * opts.tolerance; }

// Undirected maxent problem restricted to `nodes` (matrix indices) with
// target degrees `k`. Fills every pair inside the block.
BlockResult solve_undirected_block(ProbMatrix& P, const std::vector<NodeId>& nodes,
                                   std::vector<long long> k, const SolverOptions& opts) {
  const std::size_t n = nodes.size();
  BlockResult res;
  res.log_x.assign(n, -kInf);

  enum class State { kZero, kFull, kActive };
  std::vector<State> state(n, State::kActive);
  for (std::size_t i = 0; i < n; ++i) {
    if (k[i] < 0 || static_cast<std::size_t>(k[i]) + 1 > std::max<std::size_t>(n, 1)) {
      throw InputError("degree " + std::to_string(k[i]) + " is infeasible for " + std::to_string(n) + " nodes");
    }
    if (k[i] == 0) state[i] = State::kZero;
  }

  // Peel nodes whose degree equals the number of remaining active partners:
  // all their links are certain.
  for (bool changed = true; changed;) {
    changed = false;
    long long active = 0;
    for (std::size_t i = 0; i < n; ++i) active += state[i] == State::kActive;
    for (std::size_t i = 0; i < n && !changed; ++i) {
      if (state[i] != State::kActive) continue;
      if (k[i] > active - 1) {
        throw InputError("degree sequence is not realisable: node needs " + std::to_string(k[i]) +
                         " links but only " + std::to_string(active - 1) + " partners remain");
      }
      if (k[i] == active - 1) {
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i || state[j] != State::kActive) continue;
          P.set(nodes[i], nodes[j], 1.0);
          if (--k[j] == 0) state[j] = State::kZero;
        }
        k[i] = 0;
        state[i] = State::kFull;
        res.log_x[i] = kInf;
        changed = true;
      }
    }
  }

  std::map<long long, std::size_t> class_of_degree;
  std::vector<DegreeClass> classes;
  std::vector<std::size_t> node_class(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (state[i] != State::kActive) continue;
    auto [it, inserted] = class_of_degree.try_emplace(k[i], classes.size());
    if (inserted) classes.push_back({0.0, static_cast<double>(k[i]), 0.0});
    classes[it->second].count += 1.0;
    node_class[i] = it->second;
  }
  if (classes.empty()) return res;

  ClassSolve sol = solve_undirected_classes(classes, opts, internal_target(opts));
  res.iterations = sol.iterations;
  res.residual = sol.residual;
  for (std::size_t i = 0; i < n; ++i) {
    if (state[i] != State::kActive) continue;
    res.log_x[i] = sol.u[node_class[i]];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (state[j] != State::kActive) continue;
      P.set(nodes[i], nodes[j], sigmoid(sol.u[node_class[i]] + sol.u[node_class[j]]));
    }
  }
  return res;
}

BlockResult solve_directed_block(ProbMatrix& P, const std::vector<NodeId>& nodes,
                                 std::vector<long long> kout, std::vector<long long> kin,
                                 const SolverOptions& opts) {
  const std::size_t n = nodes.size();
  BlockResult res;
  res.log_x.assign(n, -kInf);
  res.log_y.assign(n, -kInf);

  for (std::size_t i = 0; i < n; ++i) {
    const long long cap = static_cast<long long>(n) - 1;
    if (kout[i] < 0 || kin[i] < 0 || kout[i] > cap || kin[i] > cap) {
      throw InputError("degree pair (" + std::to_string(kout[i]) + ", " + std::to_string(kin[i]) +
                       ") is infeasible for " + std::to_string(n) + " nodes");
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    long long out_active = 0, in_active = 0;
    for (std::size_t i = 0; i < n; ++i) {
      out_active += kout[i] > 0;
      in_active += kin[i] > 0;
    }
    for (std::size_t i = 0; i < n && !changed; ++i) {
      if (kout[i] > 0) {
        const long long avail = in_active - (kin[i] > 0 ? 1 : 0);
        if (kout[i] > avail) throw InputError("out-degree sequence is not realisable");
        if (kout[i] == avail) {
          for (std::size_t j = 0; j < n; ++j) {
            if (j == i || kin[j] == 0) continue;
            P.set(nodes[i], nodes[j], 1.0);
            --kin[j];
          }
          kout[i] = 0;
          res.log_x[i] = kInf;
          changed = true;
          continue;
        }
      }
      if (kin[i] > 0) {
        const long long avail = out_active - (kout[i] > 0 ? 1 : 0);
        if (kin[i] > avail) throw InputError("in-degree sequence is not realisable");
        if (kin[i] == avail) {
          for (std::size_t j = 0; j < n; ++j) {
            if (j == i || kout[j] == 0) continue;
            P.set(nodes[j], nodes[i], 1.0);
            --kout[j];
          }
          kin[i] = 0;
          res.log_y[i] = kInf;
          changed = true;
        }
      }
    }
  }

  std::map<std::pair<long long, long long>, std::size_t> class_of_degree;
  std::vector<DegreeClass> classes;
  std::vector<std::size_t> node_class(n, 0);
  std::vector<bool> active(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (kout[i] == 0 && kin[i] == 0) continue;
    active[i] = true;
    auto [it, inserted] = class_of_degree.try_emplace({kout[i], kin[i]}, classes.size());
    if (inserted) classes.push_back({0.0, static_cast<double>(kout[i]), static_cast<double>(kin[i])});
    classes[it->second].count += 1.0;
    node_class[i] = it->second;
  }
  if (classes.empty()) return res;

  ClassSolve sol = solve_directed_classes(classes, opts, internal_target(opts));
  res.iterations = sol.iterations;
  res.residual = sol.residual;
  for (std::size_t i = 0; i < n; ++i) {
    if (!active[i]) continue;
    if (kout[i] > 0) res.log_x[i] = sol.u[node_class[i]];
    if (kin[i] > 0) res.log_y[i] = sol.w[node_class[i]];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!active[i] || kout[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !active[j] || kin[j] == 0) continue;
      P.set(nodes[i], nodes[j], sigmoid(sol.u[node_class[i]] + sol.w[node_class[j]]));
    }
  }
  return res;
}

double exp_param(double log_value) {
  if (log_value == kInf) return kInf;
  if (log_value == -kInf) return 0.0;
  return std::exp(log_value);
}

void require_converged(double residual, const SolverOptions& opts, std::size_t iterations) {
  if (!(residual <= opts.tolerance)) {
    throw SolverError("maximum-entropy solve did not converge after " + std::to_string(iterations) +
                          " iterations (residual " + std::to_string(residual) + ")",
                      residual);
  }
}

}  // namespace

MaxEntSolution solve_ubcm(const DegreeSeq& k, const SolverOptions& opts) {
  if (k.directed) throw InputError("solve_ubcm needs an undirected degree sequence");
  const std::size_t n = k.size();
  std::size_t total = 0;
  for (auto ki : k.k) total += ki;
  if (total % 2 != 0) throw InputError("degree sum is odd");

  MaxEntSolution sol{{}, ProbMatrix(n, false)};
  std::vector<NodeId> nodes(n);
  for (std::size_t i = 0; i < n; ++i) nodes[i] = i;
  std::vector<long long> kk(k.k.begin(), k.k.end());
  BlockResult block = solve_undirected_block(sol.probs, nodes, std::move(kk), opts);

  sol.params.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) sol.params.x[i] = exp_param(block.log_x[i]);
  sol.params.iterations = block.iterations;
  sol.params.residual = max_degree_residual(sol.probs, k);
  sol.params.converged = sol.params.residual <= opts.tolerance;
  require_converged(sol.params.residual, opts, block.iterations);
  return sol;
}

MaxEntSolution solve_dbcm(const DegreeSeq& k, const SolverOptions& opts) {
  if (!k.directed) throw InputError("solve_dbcm needs a directed degree sequence");
  const std::size_t n = k.size();
  std::size_t sum_out = 0, sum_in = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sum_out += k.k_out[i];
    sum_in += k.k_in[i];
  }
  if (sum_out != sum_in) throw InputError("out-degree and in-degree sums differ");

  MaxEntSolution sol{{}, ProbMatrix(n, true)};
  std::vector<NodeId> nodes(n);
  for (std::size_t i = 0; i < n; ++i) nodes[i] = i;
  BlockResult block = solve_directed_block(sol.probs, nodes,
                                           std::vector<long long>(k.k_out.begin(), k.k_out.end()),
                                           std::vector<long long>(k.k_in.begin(), k.k_in.end()), opts);
  sol.params.x.resize(n);
  sol.params.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    sol.params.x[i] = exp_param(block.log_x[i]);
    sol.params.y[i] = exp_param(block.log_y[i]);
  }
  sol.params.iterations = block.iterations;
  sol.params.residual = max_degree_residual(sol.probs, k);
  sol.params.converged = sol.params.residual <= opts.tolerance;
  require_converged(sol.params.residual, opts, block.iterations);
  return sol;
}

MaxEntSolution solve_benchmark(const Graph& g, const SolverOptions& opts) {
  auto k = degree_sequence(g);
  return g.directed() ? solve_dbcm(k, opts) : solve_ubcm(k, opts);
}

ProbMatrix solve_conditioned(const Graph& g, std::span<const NodeId> nodes, const SolverOptions& opts) {
  const std::size_t n = g.size();
  std::vector<bool> fixed(n, false);
  for (auto v : nodes) {
    if (v >= n) throw InputError("conditioning node " + std::to_string(v) + " out of range");
    fixed[v] = true;
  }

  ProbMatrix P(n, g.directed());
  for (std::size_t s = 0; s < n; ++s) {
    if (!fixed[s]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == s) continue;
      P.set(s, j, g.has_edge(s, j) ? 1.0 : 0.0);
      P.set_forced(s, j);
      if (g.directed()) {
        P.set(j, s, g.has_edge(j, s) ? 1.0 : 0.0);
        P.set_forced(j, s);
      }
    }
  }

  std::vector<NodeId> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (!fixed[i]) rest.push_back(i);
  }
  auto describe = [&] {
    std::string names;
    for (auto v : nodes) names += (names.empty() ? "" : ",") + g.label(v);
    return names;
  };

  const auto deg = degree_sequence(g);
  try {
    if (!g.directed()) {
      std::vector<long long> k(rest.size());
      for (std::size_t r = 0; r < rest.size(); ++r) {
        long long known = 0;
        for (auto nb : g.out_neighbors(rest[r])) known += fixed[nb];
        k[r] = static_cast<long long>(deg.k[rest[r]]) - known;
      }
      solve_undirected_block(P, rest, std::move(k), opts);
    } else {
      std::vector<long long> kout(rest.size()), kin(rest.size());
      for (std::size_t r = 0; r < rest.size(); ++r) {
        long long known_out = 0, known_in = 0;
        for (auto nb : g.out_neighbors(rest[r])) known_out += fixed[nb];
        for (auto nb : g.in_neighbors(rest[r])) known_in += fixed[nb];
        kout[r] = static_cast<long long>(deg.k_out[rest[r]]) - known_out;
        kin[r] = static_cast<long long>(deg.k_in[rest[r]]) - known_in;
      }
      solve_directed_block(P, rest, std::move(kout), std::move(kin), opts);
    }
  } catch (const InputError& e) {
    throw InputError("conditioning on " + describe() + ": " + e.what());
  }

  const double residual = max_degree_residual(P, deg);
  if (!(residual <= opts.tolerance)) {
    throw SolverError("reduced system conditioned on " + describe() + " did not converge (residual " +
                          std::to_string(residual) + ")",
                      residual, nodes.size() == 1 ? std::optional<std::size_t>(nodes[0]) : std::nullopt);
  }
  return P;
}

ProbMatrix solve_conditioned(const Graph& g, NodeId node, const SolverOptions& opts) {
  const NodeId one[] = {node};
  return solve_conditioned(g, std::span<const NodeId>(one), opts);
}

double max_degree_residual(const ProbMatrix& p, const DegreeSeq& k) {
  if (p.size() != k.size() || p.directed() != k.directed) {
    throw InputError("probability matrix and degree sequence disagree in size or directedness");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!k.directed) {
      worst = std::max(worst, std::abs(p.row_sum(i) - static_cast<double>(k.k[i])));
    } else {
      worst = std::max(worst, std::abs(p.row_sum(i) - static_cast<double>(k.k_out[i])));
      worst = std::max(worst, std::abs(p.col_sum(i) - static_cast<double>(k.k_in[i])));
    }
  }
  return worst;
}

namespace {
void put_double(std::ostream& out, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  out.write(buf, res.ptr - buf);
}
}  // namespace

void write_dense_csv(std::ostream& out, const ProbMatrix& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j > 0) out << ',';
      put_double(out, p(i, j));
    }
    out << '\n';
  }
}

void write_triplets(std::ostream& out, const ProbMatrix& p) {
  out << "# n=" << p.size() << " directed=" << (p.directed() ? 1 : 0) << '\n';
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = p.directed() ? 0 : i + 1; j < p.size(); ++j) {
      if (p(i, j) == 0.0) continue;
      out << i << ',' << j << ',';
      put_double(out, p(i, j));
      out << '\n';
    }
  }
}

void write_prob_matrix(std::ostream& out, const ProbMatrix& p) {
  if (p.size() > 2000) {
    write_triplets(out, p);
  } else {
    write_dense_csv(out, p);
  }
}

}  // namespace inforank
