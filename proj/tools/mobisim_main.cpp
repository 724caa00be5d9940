// mobisim: analytic and discrete-event evaluation of anchored vs anchorless
// network mobility over configurable access topologies.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mobisim/report.hpp"
#include "mobisim/sim_engine.hpp"
#include "mobisim/stats.hpp"

namespace {

using namespace mobisim;

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> reps;
  std::optional<double> duration;
  std::optional<std::string> scheme;
  int threads = 0;
};

void apply(const Overrides& o, ScenarioConfig& c) {
  if (o.seed) c.seed = *o.seed;
  if (o.reps) {
    require(*o.reps >= 1, Errc::ConfigInvalid, "replications must be >= 1");
    c.replications = *o.reps;
  }
  if (o.duration) {
    require(*o.duration > 0, Errc::ConfigInvalid, "duration must be > 0");
    c.duration_s = *o.duration;
  }
  if (o.scheme) {
    if (*o.scheme == "pmip") c.scheme = RunScheme::PMIP;
    else if (*o.scheme == "icn") c.scheme = RunScheme::ICN;
    else if (*o.scheme == "both") c.scheme = RunScheme::BOTH;
    else fail(Errc::ConfigInvalid, "unknown scheme '" + *o.scheme + "'");
  }
}

RunManifest make_manifest(const std::string& command, const ScenarioConfig& c,
                          std::vector<std::string> outputs, double runtime_s) {
  RunManifest m;
  m.command = command;
  m.config = scenario_to_json(c);
  m.base_seed = c.seed;
  for (int r = 0; r < c.replications; ++r)
    m.replication_seeds.push_back(replication_seed(c, r));
  m.outputs = std::move(outputs);
  m.runtime_seconds = runtime_s;
  return m;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

// a failed command must not leave partial artifacts behind
void remove_outputs(const std::string& dir, const std::vector<std::string>& files) {
  std::error_code ec;
  for (const auto& name : files)
    std::filesystem::remove(std::filesystem::path(dir) / name, ec);
}

int cmd_analytic(const std::string& config_path, const std::string& out_dir,
                 const Overrides& o) {
  ScenarioConfig c = load_scenario(config_path);
  apply(o, c);
  Timer timer;
  const ScenarioContext ctx = ScenarioContext::build(c);
  std::vector<std::string> files;
  try {
    files = write_analytic_outputs(out_dir, c, ctx);
  } catch (...) {
    remove_outputs(out_dir, {"costs.csv", "latency_pmip.csv", "latency_icn.csv"});
    throw;
  }
  write_manifest(out_dir, make_manifest("analytic", c, files, timer.seconds()));
  const CostReport pmip = analytic_report(Scheme::PMIP, c, ctx);
  const CostReport icn = analytic_report(Scheme::ICN, c, ctx);
  require(std::isfinite(pmip.total()) && std::isfinite(icn.total()) &&
              pmip.total() >= 0 && icn.total() >= 0,
          Errc::ConfigInvalid, "inconsistent cost report");
  std::printf("anchored    signaling %.6g  delivery %.6g  total %.6g hops*bytes/s\n",
              pmip.signaling, pmip.delivery, pmip.total());
  std::printf("anchorless  signaling %.6g  delivery %.6g  total %.6g hops*bytes/s\n",
              icn.signaling, icn.delivery, icn.total());
  if (pmip.signaling > 0 && icn.delivery > 0 && icn.total() > 0)
    std::printf("ratios      signaling %.3f  delivery %.3f  total %.3f\n",
                icn.signaling / pmip.signaling, pmip.delivery / icn.delivery,
                pmip.total() / icn.total());
  std::printf("wrote %zu files to %s\n", files.size() + 1, out_dir.c_str());
  return 0;
}

void print_scheme_summary(const char* name, const ScenarioResult& result, bool icn) {
  std::vector<double> totals;
  for (const auto& rep : result.replications) {
    const auto& t = icn ? rep.icn : rep.pmip;
    if (t) totals.push_back(static_cast<double>(t->total_hb()));
  }
  if (totals.empty()) return;
  const SummaryStat s = summarize(totals);
  std::printf("%-10s total %.6g hops*bytes  (95%% CI %.6g .. %.6g, n=%d)\n", name,
              s.mean, s.ci95_low, s.ci95_high, s.n);
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir,
                 const Overrides& o) {
  ScenarioConfig c = load_scenario(config_path);
  apply(o, c);
  Timer timer;
  std::vector<std::string> files;

  if (!c.speed_sweep_mps.empty()) {
    std::vector<SweepRow> rows;
    for (double speed : c.speed_sweep_mps) {
      ScenarioConfig per = c;
      per.speed_lo_mps = per.speed_hi_mps = speed;
      per.speed_sweep_mps.clear();
      const double mph = speed * 3600.0 / kMetersPerMile;
      char sub[32];
      std::snprintf(sub, sizeof sub, "speed_%05.1f", mph);
      const auto subdir = (std::filesystem::path(out_dir) / sub).string();
      const ScenarioResult result = run_scenario(per, o.threads);
      for (const auto& name : write_simulation_outputs(subdir, per, result))
        files.push_back(std::string(sub) + "/" + name);
      rows.push_back(summarize_sweep_point(mph, result));
      std::printf("speed %.1f mph done (%d replications)\n", mph, per.replications);
    }
    for (const auto& name : write_sweep_outputs(out_dir, rows)) files.push_back(name);
    write_manifest(out_dir, make_manifest("simulate", c, files, timer.seconds()));
    std::printf("wrote %zu files to %s\n", files.size() + 1, out_dir.c_str());
    return 0;
  }

  const ScenarioResult result = run_scenario(c, o.threads);
  try {
    files = write_simulation_outputs(out_dir, c, result);
  } catch (...) {
    remove_outputs(out_dir, {"replications.csv", "summary.csv"});
    throw;
  }
  write_manifest(out_dir, make_manifest("simulate", c, files, timer.seconds()));
  if (c.scheme != RunScheme::ICN) print_scheme_summary("anchored", result, false);
  if (c.scheme != RunScheme::PMIP) print_scheme_summary("anchorless", result, true);
  std::printf("wrote %zu files to %s\n", files.size() + 1, out_dir.c_str());
  return 0;
}

int cmd_compare(const std::string& config_path, const std::string& out_dir,
                const Overrides& o) {
  ScenarioConfig c = load_scenario(config_path);
  apply(o, c);
  require(c.scheme == RunScheme::BOTH, Errc::ConfigInvalid,
          "compare requires scheme=both");
  Timer timer;
  const auto rows = compare_schemes(c, o.threads);
  const auto files = write_comparison_outputs(out_dir, c, rows);
  write_manifest(out_dir, make_manifest("compare", c, files, timer.seconds()));
  for (const auto& row : rows)
    std::printf("size %-6d total anchored %.6g  anchorless %.6g  ratio %.3f\n",
                row.size, row.pmip_total_hb, row.icn_total_hb, row.total_ratio);
  return 0;
}

int cmd_fixtures() {
  for (const auto& name : fixture_names()) {
    const auto g = fixture_by_name(name);
    std::printf("%-12s %d nodes, %zu edges, anchor %d\n", name.c_str(), g.node_count,
                g.edge_list().size(), g.anchor);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mobility cost modeling and simulation"};
  app.set_version_flag("--version", std::string("mobisim ") + mobisim::kToolVersion);
  app.require_subcommand(1);

  std::string config_path, out_dir = "out";
  Overrides o;

  auto add_common = [&](CLI::App* cmd, bool with_scheme) {
    cmd->add_option("config", config_path, "scenario config or run manifest (JSON)")
        ->required();
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--seed", o.seed, "override the base seed");
    cmd->add_option("--reps", o.reps, "override the replication count");
    cmd->add_option("--duration", o.duration, "override the measured duration [s]");
    cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    if (with_scheme)
      cmd->add_option("--scheme", o.scheme, "override the scheme (pmip|icn|both)");
  };

  auto* analytic = app.add_subcommand("analytic", "closed-form cost evaluation");
  add_common(analytic, false);
  auto* simulate = app.add_subcommand("simulate", "discrete-event simulation");
  add_common(simulate, true);
  auto* compare = app.add_subcommand("compare", "paired scheme comparison");
  add_common(compare, false);
  auto* fixtures = app.add_subcommand("fixtures", "bundled topologies");
  fixtures->require_subcommand(1);
  fixtures->add_subcommand("list", "list bundled fixture topologies");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analytic)) return cmd_analytic(config_path, out_dir, o);
    if (app.got_subcommand(simulate)) return cmd_simulate(config_path, out_dir, o);
    if (app.got_subcommand(compare)) return cmd_compare(config_path, out_dir, o);
    if (app.got_subcommand(fixtures)) return cmd_fixtures();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
