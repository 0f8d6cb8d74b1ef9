#include "crossbessel_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>

#include "crossbessel/cache.hpp"
#include "crossbessel/coeff_table.hpp"
#include "crossbessel/elimination.hpp"
#include "crossbessel/error.hpp"
#include "crossbessel/identity_suite.hpp"
#include "crossbessel/serialization.hpp"
#include "crossbessel/spectrum.hpp"

namespace crossbessel::cli {

namespace {

using nlohmann::json;

struct Globals {
  int precision_bits = 256;
  std::string format = "json";
  std::string cache_dir;

  PrecisionConfig config() const { return PrecisionConfig::with_bits(precision_bits); }
  bool csv() const { return format == "csv"; }
};

// Loads the cache if a directory is configured; saves on destruction of the session.
class CacheSession {
 public:
  CacheSession(const std::string& flag, std::ostream& err) : err_(err) {
    if (auto dir = resolve_cache_dir(flag)) {
      path_ = *dir / kCacheFileName;
      CacheLoad load = load_cache(*path_);
      if (load.loaded) {
        cache_ = std::move(load.cache);
      } else if (std::filesystem::exists(*path_)) {
        err_ << "cache ignored (" << load.reason << "); recomputing\n";
      }
    }
  }

  CacheFile& cache() { return cache_; }

  void save() {
    if (!path_) return;
    try {
      save_cache(*path_, cache_);
    } catch (const std::exception& e) {
      err_ << "cache not saved: " << e.what() << '\n';
    }
  }

 private:
  std::ostream& err_;
  std::optional<std::filesystem::path> path_;
  CacheFile cache_;
};

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json zeros_json(const std::vector<ZeroRecord>& zeros) {
  json arr = json::array();
  for (const auto& z : zeros) arr.push_back(to_json(z));
  return arr;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified computations for cross-products of Bessel functions", "crossbessel"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--precision-bits", g.precision_bits, "Working precision in bits")
      ->check(CLI::Range(64, 1 << 16));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache-dir", g.cache_dir, "Directory for the coefficient/certificate cache");

  int count = 0;
  auto* eig = app.add_subcommand("eig", "Smallest clamped-disk eigenvalues");
  eig->add_option("--count", count, "Number of eigenvalues")->required()->check(CLI::Range(1, 500));

  int order = 0;
  double x_max = 0.0;
  auto* zeros = app.add_subcommand("zeros", "Positive zeros of W_m up to x_max");
  zeros->add_option("-m", order, "Order m")->required()->check(CLI::Range(0, 1000));
  zeros->add_option("--x-max", x_max, "Upper end of the search interval")->required();

  auto* verify = app.add_subcommand("verify", "Run the identity suite on the standard grid");

  int depth = 0;
  auto* coeffs = app.add_subcommand("coeffs", "Print the coefficient quadruple (A, B, B~, C)");
  coeffs->add_option("-m", order, "Index m")->required();
  coeffs->add_option("-n", depth, "Depth n")->required()->check(CLI::NonNegativeNumber);

  int m1 = 0, m2 = 0, m3 = 0;
  auto* certify = app.add_subcommand("certify", "Eliminate F and print the refutation certificate");
  certify->add_option("--m1", m1)->required();
  certify->add_option("--m2", m2)->required();
  certify->add_option("--m3", m3)->required();

  int m_max = 0;
  auto* scan = app.add_subcommand("scan", "Cross-order gap scan");
  scan->add_option("--m-max", m_max)->required();
  scan->add_option("--x-max", x_max)->required();

  auto* refute = app.add_subcommand("refute", "Refute every candidate triple on the zeros of W_{m2}");
  refute->add_option("--m-max", m_max)->required();
  refute->add_option("--x-max", x_max)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const PrecisionConfig cfg = g.config();
    if (*eig) {
      const auto records = eigenvalues(count, cfg);
      if (g.csv()) out << zeros_to_csv(records);
      else emit_json(out, zeros_json(records));
      return kExitOk;
    }
    if (*zeros) {
      const auto records = find_zeros(order, x_max, cfg);
      if (g.csv()) out << zeros_to_csv(records);
      else emit_json(out, zeros_json(records));
      return kExitOk;
    }
    if (*verify) {
      const auto reports = run_identity_suite(IdentityGrid::standard(), cfg);
      const auto mismatches = registry_mismatches(reports);
      const bool ok = mismatches.empty() &&
                      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
      if (g.csv()) {
        out << identity_reports_to_csv(reports);
      } else {
        json reps = json::array();
        for (const auto& r : reports) reps.push_back(to_json(r));
        emit_json(out, {{"passed", ok}, {"precision_bits", cfg.working_bits}, {"registry_mismatches", mismatches},
                        {"reports", reps}});
      }
      return ok ? kExitOk : kExitFailure;
    }
    if (*coeffs) {
      CacheSession session(g.cache_dir, err);
      const CoeffQuad q = coeff_quad(order, depth, session.cache().coeffs);
      session.save();
      if (g.csv()) out << coeff_quad_to_csv(q);
      else emit_json(out, to_json(q));
      return kExitOk;
    }
    if (*certify) {
      const TripleIndex t = TripleIndex::make(m1, m2, m3);
      CacheSession session(g.cache_dir, err);
      const EliminationCertificate cert = cached_certificate(session.cache(), t);
      session.save();
      if (g.csv()) out << certificate_to_csv(cert);
      else emit_json(out, to_json(cert));
      return kExitOk;
    }
    if (*scan) {
      const GapReport report = gap_scan(m_max, x_max, cfg);
      if (g.csv()) out << gap_report_to_csv(report);
      else emit_json(out, to_json(report));
      return kExitOk;
    }
    if (*refute) {
      CacheSession session(g.cache_dir, err);
      for (const auto& t : candidate_triples(m_max)) cached_certificate(session.cache(), t);
      const RefutationSummary summary = refute_all_triples(m_max, x_max, cfg, session.cache().coeffs);
      session.save();
      if (g.csv()) out << refutation_to_csv(summary);
      else emit_json(out, to_json(summary));
      return summary.inconclusive > 0 ? kExitInconclusive : kExitOk;
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return e.kind() == ErrorKind::kDomain ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace crossbessel::cli
