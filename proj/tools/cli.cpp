#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "inforank/centrality.hpp"
#include "inforank/clearing.hpp"
#include "inforank/entropy.hpp"
#include "inforank/errors.hpp"
#include "inforank/generators.hpp"
#include "inforank/graph.hpp"
#include "inforank/maxent.hpp"
#include "inforank/parallel.hpp"
#include "inforank/recon.hpp"
#include "inforank/sampling.hpp"

namespace inforank::cli {
namespace {

using Json = nlohmann::ordered_json;

class ConfigError : public Error {
 public:
  using Error::Error;
};

const std::vector<std::string> kMeasures = {"degree", "closeness", "pagerank", "inforank"};

struct RunConfig {
  std::string command;
  std::string input;
  std::string generate;
  bool directed = false;
  double tolerance = 1e-10;
  std::size_t max_iterations = 100000;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
  std::size_t threads = 1;

  // rank
  std::vector<std::string> subsets;
  bool base2 = false;
  bool approx = false;
  std::string dump_probs;

  // compare / accuracy
  std::vector<std::string> measures;
  double pagerank_alpha = 0.85;

  // sample
  std::size_t count = 1;
  std::string conditioned_on;
  std::string dump_dir;

  // risk
  std::size_t samples = 100;
  double alpha = 0.9;
  double beta = 0.9;
  ExternalsConfig externals;
  std::string fit_output;

  InfoRankOptions inforank_options() const {
    InfoRankOptions o;
    o.solver.tolerance = tolerance;
    o.solver.max_iterations = max_iterations;
    o.threads = threads;
    return o;
  }
};

// 12 significant digits, applied before anything reaches a report.
double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

Json jnum(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round12(v);
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json jarray(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(jnum(x));
  return a;
}

LoadedGraph load_graph(const RunConfig& cfg) {
  if (cfg.input.empty() == cfg.generate.empty()) {
    throw ConfigError("exactly one of --input or --generate is required");
  }
  if (!cfg.generate.empty()) {
    try {
      return {generate(cfg.generate, cfg.directed, cfg.seed), std::nullopt};
    } catch (const InputError& e) {
      throw ConfigError(e.what());
    }
  }
  return load_edge_list_file(cfg.input, cfg.directed);
}

NodeId lookup(const Graph& g, const std::string& label) {
  auto id = g.find(label);
  if (!id) throw ConfigError("unknown node label '" + label + "'");
  return *id;
}

Json header(const RunConfig& cfg, const Graph& g) {
  Json j;
  j["command"] = cfg.command;
  j["seed"] = cfg.seed;
  j["input"] = cfg.input.empty() ? cfg.generate : cfg.input;
  j["directed"] = g.directed();
  j["n"] = g.size();
  j["links"] = g.num_edges();
  j["solver"] = {{"tolerance", cfg.tolerance}, {"max_iterations", cfg.max_iterations}};
  return j;
}

void csv_header(std::ostream& os, const RunConfig& cfg, const Graph& g) {
  os << "# command=" << cfg.command << "\n# seed=" << cfg.seed << "\n# input="
     << (cfg.input.empty() ? cfg.generate : cfg.input) << "\n# directed=" << (g.directed() ? 1 : 0)
     << "\n# n=" << g.size() << "\n# links=" << g.num_edges() << "\n";
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& os() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::vector<RankVector> compute_measures(const Graph& g, const RunConfig& cfg,
                                         const std::vector<std::string>& names,
                                         std::optional<EntropyReport>& entropy) {
  std::vector<RankVector> out;
  for (const auto& name : names) {
    if (name == "degree") {
      out.push_back(degree_centrality(g));
    } else if (name == "closeness") {
      out.push_back(closeness_centrality(g, cfg.threads));
    } else if (name == "pagerank") {
      PageRankOptions po;
      po.alpha = cfg.pagerank_alpha;
      try {
        out.push_back(pagerank(g, po));
      } catch (const InputError& e) {
        throw ConfigError(e.what());
      }
    } else {
      if (!entropy) entropy = inforank(g, cfg.inforank_options());
      out.push_back(RankVector::make("inforank", entropy->I));
    }
  }
  return out;
}

const std::vector<std::string>& selected(const RunConfig& cfg) {
  return cfg.measures.empty() ? kMeasures : cfg.measures;
}

// --- rank ------------------------------------------------------------------

int cmd_rank(const RunConfig& cfg, std::ostream& out) {
  const auto loaded = load_graph(cfg);
  const Graph& g = loaded.graph;
  const auto opts = cfg.inforank_options();

  std::vector<std::vector<NodeId>> subsets;
  for (const auto& spec : cfg.subsets) {
    std::vector<NodeId> ids;
    std::stringstream ss(spec);
    std::string label;
    while (std::getline(ss, label, ',')) ids.push_back(lookup(g, label));
    subsets.push_back(std::move(ids));
  }

  const EntropyReport rep = inforank(g, opts);
  const double unit = cfg.base2 ? 1.0 / std::numbers::ln2 : 1.0;
  const DegreeSeq k = degree_sequence(g);
  std::vector<double> sparse, meanfield;
  if (cfg.approx) {
    sparse = approx_sparse(k);
    meanfield = approx_meanfield(k, g.size());
  }
  std::vector<double> subset_values;
  for (const auto& s : subsets) {
    try {
      subset_values.push_back(inforank_subset(g, s, opts.solver));
    } catch (const InputError& e) {
      throw ConfigError(e.what());
    }
  }

  if (!cfg.dump_probs.empty()) {
    std::ofstream f(cfg.dump_probs);
    if (!f) throw Error("cannot write '" + cfg.dump_probs + "'");
    write_prob_matrix(f, solve_benchmark(g, opts.solver).probs);
  }

  std::optional<NodeId> best;
  for (NodeId i = 0; i < g.size(); ++i) {
    if (std::isnan(rep.I[i])) continue;
    if (!best || round12(rep.I[i]) > round12(rep.I[*best])) best = i;
  }

  Sink sink(cfg.output, out);
  auto& os = sink.os();
  if (cfg.format == "json") {
    Json j = header(cfg, g);
    j["units"] = cfg.base2 ? "bits" : "nats";
    j["S0"] = jnum(rep.S0 * unit);
    Json nodes = Json::array();
    for (NodeId i = 0; i < g.size(); ++i) {
      Json row;
      row["node"] = i;
      row["label"] = g.label(i);
      row["k"] = k.k[i];
      if (g.directed()) {
        row["k_out"] = k.k_out[i];
        row["k_in"] = k.k_in[i];
      }
      row["S0_contrib"] = jnum(rep.S0_contrib[i] * unit);
      row["S_cond"] = jnum(rep.S_cond[i] * unit);
      row["inforank"] = jnum(rep.I[i]);
      if (cfg.approx) {
        row["approx_sparse"] = jnum(sparse[i] * unit);
        row["approx_meanfield"] = jnum(meanfield[i] * unit);
      }
      row["flagged"] = rep.failure[i].has_value();
      if (rep.failure[i]) row["error"] = *rep.failure[i];
      nodes.push_back(std::move(row));
    }
    j["nodes"] = std::move(nodes);
    if (best) j["top"] = {{"node", *best}, {"label", g.label(*best)}};
    if (!subsets.empty()) {
      Json arr = Json::array();
      for (std::size_t s = 0; s < subsets.size(); ++s) {
        Json labels = Json::array();
        for (NodeId v : subsets[s]) labels.push_back(g.label(v));
        arr.push_back({{"nodes", labels}, {"inforank", jnum(subset_values[s])}});
      }
      j["subsets"] = std::move(arr);
    }
    os << j.dump(2) << "\n";
  } else {
    csv_header(os, cfg, g);
    os << "# units=" << (cfg.base2 ? "bits" : "nats") << "\n# S0=" << fmt(rep.S0 * unit) << "\n";
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      os << "# subset=";
      for (std::size_t t = 0; t < subsets[s].size(); ++t) os << (t ? ";" : "") << g.label(subsets[s][t]);
      os << " inforank=" << fmt(subset_values[s]) << "\n";
    }
    os << "node,label,k";
    if (g.directed()) os << ",k_out,k_in";
    os << ",S0_contrib,S_cond,inforank";
    if (cfg.approx) os << ",approx_sparse,approx_meanfield";
    os << ",flagged\n";
    for (NodeId i = 0; i < g.size(); ++i) {
      os << i << "," << g.label(i) << "," << k.k[i];
      if (g.directed()) os << "," << k.k_out[i] << "," << k.k_in[i];
      os << "," << fmt(rep.S0_contrib[i] * unit) << "," << fmt(rep.S_cond[i] * unit) << "," << fmt(rep.I[i]);
      if (cfg.approx) os << "," << fmt(sparse[i] * unit) << "," << fmt(meanfield[i] * unit);
      os << "," << (rep.failure[i] ? 1 : 0) << "\n";
    }
  }
  return rep.all_ok() ? kOk : kSolverError;
}

// --- compare ---------------------------------------------------------------

struct PairCorrelation {
  std::string a, b;
  std::optional<double> r;
  std::string error;
};

std::vector<PairCorrelation> pairwise(const std::vector<RankVector>& ranks) {
  std::vector<PairCorrelation> out;
  for (std::size_t a = 0; a < ranks.size(); ++a) {
    for (std::size_t b = a + 1; b < ranks.size(); ++b) {
      std::vector<double> x, y;
      for (std::size_t i = 0; i < ranks[a].rescaled.size(); ++i) {
        const double u = ranks[a].rescaled[i], v = ranks[b].rescaled[i];
        if (std::isnan(u) || std::isnan(v)) continue;
        x.push_back(u);
        y.push_back(v);
      }
      PairCorrelation pc{ranks[a].name, ranks[b].name, std::nullopt, {}};
      try {
        pc.r = pearson(x, y);
      } catch (const Error& e) {
        pc.error = e.what();
      }
      out.push_back(std::move(pc));
    }
  }
  return out;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  const auto loaded = load_graph(cfg);
  const Graph& g = loaded.graph;
  std::optional<EntropyReport> entropy;
  const auto ranks = compute_measures(g, cfg, selected(cfg), entropy);
  const auto corr = pairwise(ranks);
  const DegreeSeq k = degree_sequence(g);

  Sink sink(cfg.output, out);
  auto& os = sink.os();
  if (cfg.format == "json") {
    Json j = header(cfg, g);
    j["pagerank_alpha"] = cfg.pagerank_alpha;
    Json names = Json::array();
    for (const auto& r : ranks) names.push_back(r.name);
    j["measures"] = std::move(names);
    Json nodes = Json::array();
    for (NodeId i = 0; i < g.size(); ++i) {
      Json row;
      row["node"] = i;
      row["label"] = g.label(i);
      row["k_tot"] = k.k[i];
      for (const auto& r : ranks) {
        row[r.name] = jnum(r.scores[i]);
        row[r.name + "_rescaled"] = jnum(r.rescaled[i]);
      }
      nodes.push_back(std::move(row));
    }
    j["nodes"] = std::move(nodes);
    Json cj = Json::array();
    for (const auto& c : corr) {
      Json e = {{"a", c.a}, {"b", c.b}, {"r", c.r ? jnum(*c.r) : Json(nullptr)}};
      if (!c.r) e["error"] = c.error;
      cj.push_back(std::move(e));
    }
    j["correlations"] = std::move(cj);
    Json scatter;
    Json kt = Json::array();
    for (NodeId i = 0; i < g.size(); ++i) kt.push_back(k.k[i]);
    scatter["k_tot"] = std::move(kt);
    for (const auto& r : ranks) scatter[r.name] = jarray(r.rescaled);
    j["scatter"] = std::move(scatter);
    os << j.dump(2) << "\n";
  } else {
    csv_header(os, cfg, g);
    os << "# pagerank_alpha=" << fmt(cfg.pagerank_alpha) << "\n";
    for (const auto& c : corr) {
      os << "# r(" << c.a << "," << c.b << ")=" << (c.r ? fmt(*c.r) : "undefined") << "\n";
    }
    os << "node,label,k_tot";
    for (const auto& r : ranks) os << "," << r.name << "," << r.name << "_rescaled";
    os << "\n";
    for (NodeId i = 0; i < g.size(); ++i) {
      os << i << "," << g.label(i) << "," << k.k[i];
      for (const auto& r : ranks) os << "," << fmt(r.scores[i]) << "," << fmt(r.rescaled[i]);
      os << "\n";
    }
  }
  return entropy && !entropy->all_ok() ? kSolverError : kOk;
}

// --- accuracy --------------------------------------------------------------

int cmd_accuracy(const RunConfig& cfg, std::ostream& out) {
  const auto loaded = load_graph(cfg);
  const Graph& g = loaded.graph;
  std::optional<EntropyReport> entropy;
  const auto ranks = compute_measures(g, cfg, selected(cfg), entropy);
  const AccuracyReport rep = accuracy_report(g, ranks, cfg.inforank_options());
  bool ok = true;
  for (const auto& f : rep.failure) ok = ok && !f;

  Sink sink(cfg.output, out);
  auto& os = sink.os();
  if (cfg.format == "json") {
    Json j = header(cfg, g);
    j["benchmark_accuracy"] = jnum(rep.benchmark_accuracy);
    Json nodes = Json::array();
    for (NodeId i = 0; i < g.size(); ++i) {
      Json row = {{"node", i}, {"label", g.label(i)}, {"accuracy", jnum(rep.accuracy[i])}};
      for (const auto& r : ranks) row[r.name + "_rescaled"] = jnum(r.rescaled[i]);
      row["flagged"] = rep.failure[i].has_value();
      if (rep.failure[i]) row["error"] = *rep.failure[i];
      nodes.push_back(std::move(row));
    }
    j["per_node"] = std::move(nodes);
    Json corr, errors;
    for (const auto& c : rep.correlations) {
      corr[c.index_name] = c.r ? jnum(*c.r) : Json(nullptr);
      if (c.error) errors[c.index_name] = *c.error;
    }
    j["correlations"] = std::move(corr);
    if (!errors.is_null()) j["correlation_errors"] = std::move(errors);
    os << j.dump(2) << "\n";
  } else {
    csv_header(os, cfg, g);
    os << "# benchmark_accuracy=" << fmt(rep.benchmark_accuracy) << "\n";
    for (const auto& c : rep.correlations) {
      os << "# r(accuracy," << c.index_name << ")=" << (c.r ? fmt(*c.r) : "undefined") << "\n";
    }
    os << "node,label,accuracy";
    for (const auto& r : ranks) os << "," << r.name << "_rescaled";
    os << ",flagged\n";
    for (NodeId i = 0; i < g.size(); ++i) {
      os << i << "," << g.label(i) << "," << fmt(rep.accuracy[i]);
      for (const auto& r : ranks) os << "," << fmt(r.rescaled[i]);
      os << "," << (rep.failure[i] ? 1 : 0) << "\n";
    }
  }
  return ok && (!entropy || entropy->all_ok()) ? kOk : kSolverError;
}

// --- sample ----------------------------------------------------------------

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  const auto loaded = load_graph(cfg);
  const Graph& g = loaded.graph;
  SampleSpec spec;
  spec.count = cfg.count;
  spec.seed = cfg.seed;
  if (!cfg.conditioned_on.empty()) spec.conditioned_on = lookup(g, cfg.conditioned_on);
  const auto opts = cfg.inforank_options();

  const ProbMatrix P = spec.conditioned_on ? solve_conditioned(g, *spec.conditioned_on, opts.solver)
                                           : solve_benchmark(g, opts.solver).probs;
  const auto samples = sample_ensemble(g, spec, opts.solver, cfg.threads);

  if (!cfg.dump_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.dump_dir, ec);
    if (ec) throw Error("cannot create '" + cfg.dump_dir + "': " + ec.message());
    for (std::size_t t = 0; t < samples.size(); ++t) {
      char name[32];
      std::snprintf(name, sizeof name, "sample_%05zu.edges", t);
      const auto path = std::filesystem::path(cfg.dump_dir) / name;
      std::ofstream f(path);
      if (!f) throw Error("cannot write '" + path.string() + "'");
      f << "# seed=" << sample_seed(cfg.seed, t) << "\n";
      write_edge_list(f, samples[t]);
    }
  }

  double mean_links = 0.0;
  for (const auto& s : samples) mean_links += static_cast<double>(s.num_edges());
  if (!samples.empty()) mean_links /= static_cast<double>(samples.size());

  Sink sink(cfg.output, out);
  auto& os = sink.os();
  if (cfg.format == "json") {
    Json j = header(cfg, g);
    j["count"] = cfg.count;
    j["conditioned_on"] = cfg.conditioned_on.empty() ? Json(nullptr) : Json(cfg.conditioned_on);
    j["expected_links"] = jnum(P.expected_links());
    j["mean_links"] = jnum(mean_links);
    Json arr = Json::array();
    for (std::size_t t = 0; t < samples.size(); ++t) {
      arr.push_back({{"index", t}, {"seed", sample_seed(cfg.seed, t)}, {"links", samples[t].num_edges()}});
    }
    j["samples"] = std::move(arr);
    os << j.dump(2) << "\n";
  } else {
    csv_header(os, cfg, g);
    os << "# conditioned_on=" << cfg.conditioned_on << "\n# expected_links=" << fmt(P.expected_links())
       << "\n# mean_links=" << fmt(mean_links) << "\nindex,seed,links\n";
    for (std::size_t t = 0; t < samples.size(); ++t) {
      os << t << "," << sample_seed(cfg.seed, t) << "," << samples[t].num_edges() << "\n";
    }
  }
  return kOk;
}

// --- risk ------------------------------------------------------------------

Json fit_json(const std::vector<double>& x, const std::vector<double>& y, int degree) {
  try {
    const TrendFit f = fit_trend(x, y, degree);
    return {{"degree", degree}, {"coefficients", jarray(f.coefficients)}, {"rss", jnum(f.rss)}};
  } catch (const InputError& e) {
    return {{"degree", degree}, {"coefficients", nullptr}, {"rss", nullptr}, {"error", e.what()}};
  }
}

int cmd_risk(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.directed) throw ConfigError("risk needs a directed liability network (--directed)");
  const auto loaded = load_graph(cfg);
  const Graph& g = loaded.graph;
  const auto opts = cfg.inforank_options();

  RiskConfig rc;
  rc.samples = cfg.samples;
  rc.alpha = cfg.alpha;
  rc.beta = cfg.beta;
  rc.externals = cfg.externals;
  rc.seed = cfg.seed;
  rc.solver = opts.solver;
  rc.threads = cfg.threads;
  RiskReport risk;
  try {
    risk = risk_error_experiment(g, loaded.weights ? &*loaded.weights : nullptr, rc);
  } catch (const InputError& e) {
    throw ConfigError(e.what());
  }
  const EntropyReport rep = inforank(g, opts);

  std::vector<double> xs, ys;
  bool ok = rep.all_ok();
  for (NodeId i = 0; i < g.size(); ++i) {
    ok = ok && !risk.failure[i];
    if (std::isfinite(rep.I[i]) && std::isfinite(risk.mse[i])) {
      xs.push_back(rep.I[i]);
      ys.push_back(risk.mse[i]);
    }
  }
  Json fits;
  fits["linear"] = fit_json(xs, ys, 1);
  fits["quadratic"] = fit_json(xs, ys, 2);

  Sink sink(cfg.output, out);
  auto& os = sink.os();
  if (cfg.format == "json") {
    Json j = header(cfg, g);
    j["samples"] = cfg.samples;
    j["alpha"] = cfg.alpha;
    j["beta"] = cfg.beta;
    j["externals"] = {{"mu_a", cfg.externals.mu_a},
                      {"sigma_a", cfg.externals.sigma_a},
                      {"mu_l", cfg.externals.mu_l},
                      {"sigma_l", cfg.externals.sigma_l}};
    j["total_volume"] = jnum(risk.total_volume);
    Json nodes = Json::array();
    for (NodeId i = 0; i < g.size(); ++i) {
      Json row = {{"node", i},
                  {"label", g.label(i)},
                  {"inforank", jnum(rep.I[i])},
                  {"mse", jnum(risk.mse[i])},
                  {"external_assets", jnum(risk.external_assets[i])},
                  {"external_liabilities", jnum(risk.external_liabilities[i])},
                  {"real_payment", jnum(risk.real_payments[i])}};
      const auto& failure = risk.failure[i] ? risk.failure[i] : rep.failure[i];
      row["flagged"] = failure.has_value();
      if (failure) row["error"] = *failure;
      nodes.push_back(std::move(row));
    }
    j["nodes"] = std::move(nodes);
    j["fits"] = fits;
    os << j.dump(2) << "\n";
  } else {
    csv_header(os, cfg, g);
    os << "node,inforank,mse\n";
    for (NodeId i = 0; i < g.size(); ++i) {
      os << g.label(i) << "," << fmt(rep.I[i]) << "," << fmt(risk.mse[i]) << "\n";
    }
    Json fj = {{"seed", cfg.seed}, {"fits", fits}};
    std::string fit_path = cfg.fit_output;
    if (fit_path.empty() && !cfg.output.empty()) fit_path = cfg.output + ".fit.json";
    if (fit_path.empty()) {
      os << "# fit=" << fj.dump() << "\n";
    } else {
      std::ofstream f(fit_path);
      if (!f) throw Error("cannot write '" + fit_path + "'");
      f << fj.dump(2) << "\n";
    }
  }
  return ok ? kOk : kSolverError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.threads = default_thread_count();

  CLI::App app{"InfoRank: entropy-based node ranking for binary networks", "inforank"};
  app.set_config("--config", "", "key=value defaults; command-line flags take precedence");
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("-i,--input", cfg.input, "edge list file (label label [weight])");
  // Config files split unquoted "a,b" values; joining restores the generator string.
  app.add_option("-g,--generate", cfg.generate, "synthetic graph: er:n,p | ba:n,m | star:n | ring:n,k")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_flag("-d,--directed", cfg.directed, "treat links as directed");
  app.add_option("--tol", cfg.tolerance, "maximum degree residual")->check(CLI::PositiveNumber);
  app.add_option("--max-iter", cfg.max_iterations, "solver iteration cap")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("-o,--output", cfg.output, "report path (stdout when omitted)");
  app.add_option("--threads", cfg.threads, "worker threads (default from INFORANK_THREADS)")
      ->check(CLI::PositiveNumber);

  auto* rank = app.add_subcommand("rank", "InfoRank of every node");
  rank->add_option("--subset", cfg.subsets, "comma-separated labels conditioned jointly (repeatable)");
  rank->add_flag("--base2", cfg.base2, "report entropies in bits");
  rank->add_flag("--approx", cfg.approx, "add sparse and mean-field estimates of each node's entropy share");
  rank->add_option("--dump-probs", cfg.dump_probs, "write the benchmark probability matrix here");

  auto* compare = app.add_subcommand("compare", "degree, closeness, PageRank and InfoRank side by side");
  auto* accuracy = app.add_subcommand("accuracy", "reconstruction accuracy and its correlation with each index");
  for (auto* sub : {compare, accuracy}) {
    sub->add_option("--measure", cfg.measures, "indices to compute (repeatable)")
        ->check(CLI::IsMember(kMeasures));
    sub->add_option("--alpha", cfg.pagerank_alpha, "PageRank damping factor");
  }

  auto* sample = app.add_subcommand("sample", "draw graphs from the benchmark or a conditioned ensemble");
  sample->add_option("--count", cfg.count, "number of samples")->check(CLI::NonNegativeNumber);
  sample->add_option("--conditioned-on", cfg.conditioned_on, "label of the node whose links are fixed");
  sample->add_option("--dump-dir", cfg.dump_dir, "write each sample as an edge list into this directory");

  auto* risk = app.add_subcommand("risk", "payment-vector error of reconstructed liability networks");
  risk->add_option("--samples", cfg.samples, "samples per node")->check(CLI::PositiveNumber);
  risk->add_option("--alpha", cfg.alpha, "recovery rate on external assets");
  risk->add_option("--beta", cfg.beta, "recovery rate on interbank assets");
  risk->add_option("--mu-a", cfg.externals.mu_a, "mean external assets");
  risk->add_option("--sigma-a", cfg.externals.sigma_a, "std. dev. of external assets")->check(CLI::NonNegativeNumber);
  risk->add_option("--mu-l", cfg.externals.mu_l, "mean external liabilities");
  risk->add_option("--sigma-l", cfg.externals.sigma_l, "std. dev. of external liabilities")
      ->check(CLI::NonNegativeNumber);
  risk->add_option("--fit-output", cfg.fit_output, "CSV mode: where to write the fitted trends");

  std::vector<const char*> args(argv, argv + argc);
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  const std::map<CLI::App*, int (*)(const RunConfig&, std::ostream&)> commands = {
      {rank, cmd_rank}, {compare, cmd_compare}, {accuracy, cmd_accuracy}, {sample, cmd_sample}, {risk, cmd_risk}};
  auto* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();

  try {
    return commands.at(chosen)(cfg, out);
  } catch (const ConfigError& e) {
    err << "inforank: configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ParseError& e) {
    err << "inforank: parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InputError& e) {
    err << "inforank: input error: " << e.what() << "\n";
    return kParseError;
  } catch (const SolverError& e) {
    err << "inforank: solver error: " << e.what() << " (residual " << fmt(e.residual()) << ")\n";
    return kSolverError;
  } catch (const UndefinedIndexError& e) {
    err << "inforank: undefined index: " << e.what() << "\n";
    return kUndefinedIndex;
  } catch (const std::exception& e) {
    err << "inforank: error: " << e.what() << "\n";
    return kIoError;
  }
}

}  // namespace inforank::cli
