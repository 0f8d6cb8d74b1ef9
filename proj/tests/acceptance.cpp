// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "crossbessel/coeff_table.hpp"
#include "crossbessel/elimination.hpp"
#include "crossbessel/identity_suite.hpp"
#include "crossbessel/spectrum.hpp"
#include "support/oracle.hpp"

using namespace crossbessel;

namespace {

const PrecisionConfig k256 = PrecisionConfig::with_bits(256);
const PrecisionConfig k512 = PrecisionConfig::with_bits(512);

// min_gap of gap_scan(8, 40) at 256 bits, between (7, 1) and (4, 2).
constexpr const char* kGoldenMinGap = "2.1882444316262930520607889162813375e-03";

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail = what;
    pass = pass && cond;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ExactRational a0(int m, int n) {
  ExactRational v = 2 * (m + n);
  for (int k = 0; k < n; ++k) v *= -4 * (m + k) * (m + k);
  return v;
}

std::vector<IdentityReport> c1_reports_256, c1_reports_512;
std::vector<ZeroRecord> c4_eig_256;

Outcome identity_suite(const PrecisionConfig& cfg, std::vector<IdentityReport>& keep, double& secs) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  keep = run_identity_suite(IdentityGrid::standard(), cfg);
  secs = seconds_since(t0);
  o.require(registry_mismatches(keep).empty(), "registry mismatch");
  std::size_t points = 0;
  for (const auto& r : keep) {
    o.require(r.passed(), r.identity_name + " has " + std::to_string(r.failures.size()) + " failures");
    points += r.points_checked;
  }
  o.require(secs < 300.0, "runtime over 5 minutes");
  if (o.pass) o.detail = std::to_string(points) + " residuals";
  return o;
}

Outcome criterion1() {
  double secs = 0;
  Outcome o = identity_suite(k256, c1_reports_256, secs);
  char buf[64];
  std::snprintf(buf, sizeof buf, " in %.1f s", secs);
  o.detail += buf;
  return o;
}

Outcome criterion2() {
  Outcome o;
  CoeffTable table;
  int checked = 0;
  for (int m = -10; m <= 10; ++m) {
    const CoeffQuad& base = coeff_quad(m, 0, table);
    o.require(base.A == ExactPoly{2L * m} && base.B.is_zero() && base.B_tilde == ExactPoly{-1} && base.C.is_zero(),
              "base case m=" + std::to_string(m));
    for (int n = 1; n <= 8; ++n) {
      const ExactPoly low = poly_mod_xk(coeff_quad(m, n, table).A, 4);
      o.require(low == ExactPoly::constant(a0(m, n)),
                "A mod x^4 at (" + std::to_string(m) + ", " + std::to_string(n) + ")");
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " closed-form residues and 21 base cases exact";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  CoeffTable table;
  int certs = 0;
  for (int l = 0; l <= 4; ++l) {
    for (int n = 0; n <= 4; ++n) {
      for (int m = l + 2; m <= 10; ++m) {
        const std::string tag = "(l,m,n)=(" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
        const EliminationCertificate cert = eliminate(TripleIndex::make(m - l - 2, m, m + n + 2), table);
        o.require(!cert.R.is_zero(), tag + " R = 0");
        const ExactRational mm(m), A = a0(m + 1, n), Ad = a0(-m + 1, l);
        const ExactPoly full = poly_shift(cert.R, static_cast<std::size_t>(cert.x_power));
        o.require(poly_mod_xk(full, 4) == ExactPoly::constant(16 * mm * mm * mm * mm * A * A * A * Ad * Ad),
                  tag + " R mod x^4");
        const Quadratic up = quadratic_up(m, n, table), down = quadratic_down(m, l, table);
        o.require(full == up.a * quadratic_resultant(up, down), tag + " resultant identity");
        ++certs;
      }
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 120.0, "runtime over 2 minutes");
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d certificates in %.1f s", certs, secs);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome criterion4() {
  Outcome o;
  c4_eig_256 = eigenvalues(20, k256);
  const auto& eig = c4_eig_256;
  o.require(eig.size() == 20, "expected 20 eigenvalues");
  for (std::size_t i = 1; i < eig.size(); ++i) {
    o.require(!overlaps(eig[i - 1].lambda, eig[i].lambda), "overlapping lambda enclosures");
    o.require(eig[i - 1].lambda.mid_double() < eig[i].lambda.mid_double(), "unsorted eigenvalues");
  }
  const ZeroRecord& f = eig.front();
  o.require(f.m == 0 && f.k == 1 && f.degeneracy == 1, "first eigenvalue is not the (0, 1) mode");
  o.require(f.enclosure.lower_double() >= 3.19 && f.enclosure.upper_double() <= 3.20, "w outside [3.19, 3.20]");
  o.require(f.lambda.lower_double() >= 104.2 && f.lambda.upper_double() <= 104.5, "lambda outside [104.2, 104.5]");

  const double w_ref = oracle::bisect([](double x) { return oracle::W(0, x); }, 3.0, 3.5);
  const double lam_ref = std::pow(w_ref, 4);
  o.require(std::abs(f.enclosure.mid_double() - w_ref) <= 1e-6 * w_ref, "w disagrees with the double oracle");
  o.require(std::abs(f.lambda.mid_double() - lam_ref) <= 1e-6 * lam_ref, "lambda disagrees with the double oracle");
  for (const auto& z : eig) {
    const auto ref = oracle::fine_zeros(z.m, z.enclosure.mid_double() + 0.5);
    o.require(static_cast<int>(ref.size()) >= z.k &&
                  std::abs(ref[z.k - 1] - z.enclosure.mid_double()) <= 1e-6 * ref[z.k - 1],
              "eigenvalue (" + std::to_string(z.m) + ", " + std::to_string(z.k) + ") disagrees with the oracle");
  }

  int total = 0;
  for (int m = 0; m <= 10; ++m) {
    const std::size_t got = find_zeros(m, 40.0, k256).size();
    const std::size_t want = oracle::fine_zeros(m, 40.0).size();
    o.require(got == want, "zero count mismatch at m=" + std::to_string(m) + ": " + std::to_string(got) + " vs " +
                               std::to_string(want));
    total += static_cast<int>(got);
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "lambda_1 = %.10f, %d zeros for m <= 10, x <= 40 match the oracle", f.lambda.mid_double(),
                total);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  CoeffTable table;
  const RefutationSummary s = refute_all_triples(6, 20.0, k256, table);
  const double secs = seconds_since(t0);
  int max_bits = 0;
  for (const auto& e : s.evaluations) max_bits = std::max(max_bits, e.bits);
  o.require(!s.evaluations.empty(), "no evaluations");
  o.require(s.refuted == s.evaluations.size() && s.inconclusive == 0,
            std::to_string(s.inconclusive) + " inconclusive evaluations");
  o.require(max_bits <= 1024, "escalated beyond 1024 bits");
  o.require(secs < 600.0, "runtime over 10 minutes");
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu/%zu evaluations REFUTED over %zu triples, max %d bits, %.1f s", s.refuted,
                s.evaluations.size(), s.triples, max_bits, secs);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome criterion6() {
  Outcome o;
  const GapReport r = gap_scan(8, 40.0, k256);
  o.require(r.min_gap.has_value(), "no gaps reported");
  if (!o.pass) return o;
  o.require(r.min_gap->sign() == 1, "min_gap enclosure not strictly positive");
  const CertifiedReal golden = CertifiedReal::from_decimal(kGoldenMinGap, 256);
  o.require(overlaps(*r.min_gap, golden), "min_gap differs from the frozen value");
  char buf[96];
  std::snprintf(buf, sizeof buf, "min_gap = %.16e (rad %s)", r.min_gap->mid_double(), r.min_gap->rad_string().c_str());
  if (o.pass) o.detail = buf;
  return o;
}

Outcome criterion7() {
  Outcome o;
  double secs = 0;
  const Outcome rerun = identity_suite(k512, c1_reports_512, secs);
  o.require(rerun.pass, "512-bit identity suite: " + rerun.detail);
  int compared = 0;
  for (std::size_t i = 0; i < c1_reports_256.size() && i < c1_reports_512.size(); ++i) {
    o.require(mpfr_cmp(c1_reports_512[i].max_residual_radius.mid(), c1_reports_256[i].max_residual_radius.mid()) < 0,
              c1_reports_256[i].identity_name + " radius did not shrink");
    ++compared;
  }
  const auto eig = eigenvalues(20, k512);
  o.require(eig.size() == c4_eig_256.size(), "eigenvalue count changed");
  for (std::size_t i = 0; i < eig.size() && i < c4_eig_256.size(); ++i) {
    const ZeroRecord &a = c4_eig_256[i], &b = eig[i];
    o.require(a.m == b.m && a.k == b.k, "eigenvalue order changed");
    o.require(mpfr_cmp(b.enclosure.rad(), a.enclosure.rad()) < 0, "zero radius did not shrink");
    o.require(mpfr_cmp(b.lambda.rad(), a.lambda.rad()) < 0, "lambda radius did not shrink");
    o.require(overlaps(a.lambda, b.lambda), "512-bit lambda inconsistent with 256-bit lambda");
    compared += 2;
  }
  if (o.pass) o.detail = std::to_string(compared) + " radii strictly smaller at 512 bits";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"C1 identity suite", criterion1},     {"C2 coefficient oracle", criterion2},
      {"C3 elimination certificates", criterion3}, {"C4 spectrum", criterion4},
      {"C5 triple refutation", criterion5},  {"C6 gap scan regression", criterion6},
      {"C7 precision monotonicity", criterion7},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
