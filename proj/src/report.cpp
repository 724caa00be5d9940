#include "mobisim/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mobisim/errors.hpp"
#include "mobisim/stats.hpp"

namespace mobisim {

namespace {

std::ofstream open_out(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), Errc::IoError, "cannot write '" + path.string() + "'");
  return out;
}

const char* scheme_name(Scheme s) { return s == Scheme::PMIP ? "pmip" : "icn"; }

void write_latency_histogram(const std::string& dir, const std::string& name,
                             const std::vector<std::pair<double, double>>& pairs) {
  auto out = open_out(dir, name);
  out << "value,probability\n";
  for (auto [value, prob] : pairs)
    out << format_double(value) << ',' << format_double(prob) << '\n';
}

std::vector<double> collect_latency(const ScenarioResult& result, bool icn) {
  std::vector<double> samples;
  for (const auto& rep : result.replications) {
    const auto& totals = icn ? rep.icn : rep.pmip;
    if (totals)
      samples.insert(samples.end(), totals->latency_samples.begin(),
                     totals->latency_samples.end());
  }
  return samples;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

CostReport analytic_report(Scheme scheme, const ScenarioConfig& c,
                           const ScenarioContext& ctx) {
  require(c.fixed_speed(), Errc::ConfigInvalid,
          "analytic evaluation needs a single speed");
  const double mu = mobility_rate(c.speed_lo_mps, c.cell_radius_m).mu;
  const Eigen::VectorXd pi = stationary(ctx.direction);
  const std::optional<NodeId> cn = resolve_cn(c.cn, ctx.graph);
  const NodeId anchor = ctx.graph.anchor;
  CostReport report;
  if (scheme == Scheme::PMIP) {
    report.signaling = pmip_signaling(ctx.direction, pi, ctx.hops, anchor, mu, c.catalog);
    report.delivery = pmip_delivery(ctx.direction, pi, ctx.hops, anchor, cn, c.traffic,
                                    c.catalog, c.uplink);
  } else {
    report.signaling =
        icn_signaling(ctx.direction, pi, ctx.hops, cn, anchor, mu, c.catalog);
    report.delivery =
        icn_delivery(ctx.direction, pi, ctx.hops, cn, c.traffic, c.catalog, c.uplink);
  }
  report.latency = latency_distribution(ctx.direction, pi, ctx.hops, scheme, anchor, cn,
                                        c.latency_p, c.latency_m);
  return report;
}

std::vector<std::string> write_analytic_outputs(const std::string& dir,
                                                const ScenarioConfig& c,
                                                const ScenarioContext& ctx) {
  const CostReport pmip = analytic_report(Scheme::PMIP, c, ctx);
  const CostReport icn = analytic_report(Scheme::ICN, c, ctx);
  const double sig_ratio = pmip.signaling > 0 ? icn.signaling / pmip.signaling : 0.0;
  const double del_ratio = icn.delivery > 0 ? pmip.delivery / icn.delivery : 0.0;
  const double tot_ratio = icn.total() > 0 ? pmip.total() / icn.total() : 0.0;
  {
    auto out = open_out(dir, "costs.csv");
    out << "scheme,signaling_hbps,delivery_hbps,total_hbps,"
           "signaling_ratio_icn_over_pmip,delivery_ratio_pmip_over_icn,"
           "total_ratio_pmip_over_icn\n";
    for (const auto* entry : {&pmip, &icn}) {
      out << (entry == &pmip ? "pmip" : "icn") << ',' << format_double(entry->signaling)
          << ',' << format_double(entry->delivery) << ','
          << format_double(entry->total()) << ',' << format_double(sig_ratio) << ','
          << format_double(del_ratio) << ',' << format_double(tot_ratio) << '\n';
    }
  }
  write_latency_histogram(dir, "latency_pmip.csv", pmip.latency);
  write_latency_histogram(dir, "latency_icn.csv", icn.latency);
  return {"costs.csv", "latency_pmip.csv", "latency_icn.csv"};
}

std::vector<std::string> write_simulation_outputs(const std::string& dir,
                                                  const ScenarioConfig& c,
                                                  const ScenarioResult& result) {
  std::vector<std::string> files;
  {
    auto out = open_out(dir, "replications.csv");
    out << "replication,scheme,signaling_hb,delivery_hb,total_hb,handovers,"
           "mean_latency\n";
    for (const auto& rep : result.replications) {
      auto row = [&](const char* scheme, const SchemeTotals& t) {
        out << rep.replication << ',' << scheme << ',' << t.signaling_hb << ','
            << t.delivery_hb << ',' << t.total_hb() << ',' << t.handovers << ','
            << format_double(t.mean_latency()) << '\n';
      };
      if (rep.pmip) row("pmip", *rep.pmip);
      if (rep.icn) row("icn", *rep.icn);
    }
    files.push_back("replications.csv");
  }
  {
    auto out = open_out(dir, "summary.csv");
    out << "scheme,metric,n,mean,sample_std,ci95_low,ci95_high\n";
    auto block = [&](const char* scheme, bool icn) {
      auto metric = [&](const char* name, auto extract) {
        std::vector<double> values;
        for (const auto& rep : result.replications) {
          const auto& totals = icn ? rep.icn : rep.pmip;
          if (totals) values.push_back(extract(*totals));
        }
        if (values.empty()) return;
        const SummaryStat s = summarize(values);
        out << scheme << ',' << name << ',' << s.n << ',' << format_double(s.mean)
            << ',' << format_double(s.sample_std) << ',' << format_double(s.ci95_low)
            << ',' << format_double(s.ci95_high) << '\n';
      };
      metric("signaling_hb", [](const SchemeTotals& t) { return double(t.signaling_hb); });
      metric("delivery_hb", [](const SchemeTotals& t) { return double(t.delivery_hb); });
      metric("total_hb", [](const SchemeTotals& t) { return double(t.total_hb()); });
      metric("handovers", [](const SchemeTotals& t) { return double(t.handovers); });
      metric("mean_latency", [](const SchemeTotals& t) { return t.mean_latency(); });
    };
    if (c.scheme != RunScheme::ICN) block("pmip", false);
    if (c.scheme != RunScheme::PMIP) block("icn", true);
    files.push_back("summary.csv");
  }
  auto latency_files = [&](const char* scheme, bool icn) {
    const std::vector<double> samples = collect_latency(result, icn);
    if (samples.empty()) return;
    {
      auto out = open_out(dir, std::string("latency_samples_") + scheme + ".csv");
      out << "latency\n";
      for (double v : samples) out << format_double(v) << '\n';
      files.push_back(std::string("latency_samples_") + scheme + ".csv");
    }
    const Ecdf e = make_ecdf(samples);
    auto out = open_out(dir, std::string("ecdf_") + scheme + ".csv");
    out << "value,fraction\n";
    for (std::size_t i = 0; i < e.values.size(); ++i)
      out << format_double(e.values[i]) << ',' << format_double(e.fractions[i]) << '\n';
    files.push_back(std::string("ecdf_") + scheme + ".csv");
  };
  if (c.scheme != RunScheme::ICN) latency_files("pmip", false);
  if (c.scheme != RunScheme::PMIP) latency_files("icn", true);
  return files;
}

std::vector<std::string> write_comparison_outputs(const std::string& dir,
                                                  const ScenarioConfig&,
                                                  const std::vector<ComparisonRow>& rows) {
  auto out = open_out(dir, "comparison.csv");
  out << "size,pmip_signaling_hb,pmip_delivery_hb,pmip_total_hb,icn_signaling_hb,"
         "icn_delivery_hb,icn_total_hb,total_ratio_pmip_over_icn,"
         "signaling_ratio_icn_over_pmip,delivery_ratio_pmip_over_icn\n";
  for (const auto& row : rows) {
    out << row.size << ',' << format_double(row.pmip_signaling_hb) << ','
        << format_double(row.pmip_delivery_hb) << ','
        << format_double(row.pmip_total_hb) << ','
        << format_double(row.icn_signaling_hb) << ','
        << format_double(row.icn_delivery_hb) << ','
        << format_double(row.icn_total_hb) << ','
        << format_double(row.total_ratio) << ','
        << format_double(row.signaling_ratio) << ','
        << format_double(row.delivery_ratio) << '\n';
  }
  return {"comparison.csv"};
}

SweepRow summarize_sweep_point(double speed_mph, const ScenarioResult& result) {
  SweepRow row;
  row.speed_mph = speed_mph;
  const double n = static_cast<double>(result.replications.size());
  for (const auto& rep : result.replications) {
    if (rep.pmip) {
      row.pmip_signaling_hb += static_cast<double>(rep.pmip->signaling_hb) / n;
      row.pmip_delivery_hb += static_cast<double>(rep.pmip->delivery_hb) / n;
      row.handovers += static_cast<double>(rep.pmip->handovers) / n;
    }
    if (rep.icn) {
      row.icn_signaling_hb += static_cast<double>(rep.icn->signaling_hb) / n;
      row.icn_delivery_hb += static_cast<double>(rep.icn->delivery_hb) / n;
      if (!rep.pmip) row.handovers += static_cast<double>(rep.icn->handovers) / n;
    }
  }
  return row;
}

std::vector<std::string> write_sweep_outputs(const std::string& dir,
                                             const std::vector<SweepRow>& rows) {
  auto out = open_out(dir, "sweep.csv");
  out << "speed_mph,pmip_signaling_hb,pmip_delivery_hb,icn_signaling_hb,"
         "icn_delivery_hb,handovers\n";
  for (const auto& row : rows) {
    out << format_double(row.speed_mph) << ',' << format_double(row.pmip_signaling_hb)
        << ',' << format_double(row.pmip_delivery_hb) << ','
        << format_double(row.icn_signaling_hb) << ','
        << format_double(row.icn_delivery_hb) << ',' << format_double(row.handovers)
        << '\n';
  }
  return {"sweep.csv"};
}

void write_manifest(const std::string& dir, const RunManifest& manifest) {
  auto out = open_out(dir, "manifest.json");
  out << manifest_to_json(manifest).dump(2) << '\n';
}

}  // namespace mobisim
