#include <doctest.h>

#include <algorithm>

#include "crossbessel/bessel.hpp"
#include "crossbessel/error.hpp"
#include "crossbessel/identity_suite.hpp"

using namespace crossbessel;

namespace {

const PrecisionConfig kCfg{};

IdentityGrid small_grid() {
  IdentityGrid g;
  g.m_min = -3;
  g.m_max = 5;
  g.n_max = 3;
  g.x_values = {0.25, 1.0, 4.5, 13.0};
  return g;
}

const IdentityReport& report(const std::vector<IdentityReport>& reports, const std::string& name) {
  auto it = std::find_if(reports.begin(), reports.end(), [&](const auto& r) { return r.identity_name == name; });
  REQUIRE(it != reports.end());
  return *it;
}

}  // namespace

TEST_CASE("Riccati identity at (1, 1)") {
  const CertifiedReal f1 = eval_F(1, 1.0, kCfg), f2 = eval_F(2, 1.0, kCfg);
  const CertifiedReal r = f2 * f1 - CertifiedReal::from_long(1, 256) + f1.mul_si(2);
  CHECK(r.contains_zero());
  CHECK(r.rad_double() < 1e-60);
}

TEST_CASE("second-order recursion at m = 0 is the reflection") {
  const CertifiedReal w1 = eval_W(1, 2.5, kCfg), wm1 = eval_W(-1, 2.5, kCfg);
  CHECK((w1 + wm1).contains_zero());
}

TEST_CASE("suite passes on a small grid and covers the registry") {
  const auto reports = run_identity_suite(small_grid(), kCfg);
  CHECK(reports.size() == identity_registry().size());
  CHECK(registry_mismatches(reports).empty());
  for (const auto& r : reports) {
    CAPTURE(r.identity_name);
    CHECK(r.passed());
    CHECK(r.failures.empty());
  }
  const std::size_t per_identity = 9 * 4;
  CHECK(report(reports, "riccati_key_identity").points_checked == per_identity);
  CHECK(report(reports, "rolled_recursion").points_checked == per_identity * 4);
}

TEST_CASE("registry check flags missing and duplicate labels") {
  auto reports = run_identity_suite(small_grid(), kCfg);
  auto missing = reports;
  missing.pop_back();
  CHECK(registry_mismatches(missing) == std::vector<std::string>{"rolled_recursion"});
  auto dup = reports;
  dup.push_back(reports.front());
  CHECK(registry_mismatches(dup) == std::vector<std::string>{reports.front().identity_name});
  auto extra = reports;
  extra.push_back(reports.front());
  extra.back().identity_name = "unknown_identity";
  CHECK(registry_mismatches(extra) == std::vector<std::string>{"unknown_identity"});
}

TEST_CASE("residual radii shrink at doubled precision") {
  const auto lo = run_identity_suite(small_grid(), kCfg);
  const auto hi = run_identity_suite(small_grid(), PrecisionConfig::with_bits(512));
  for (std::size_t i = 0; i < lo.size(); ++i) {
    CAPTURE(lo[i].identity_name);
    CHECK(hi[i].passed());
    CHECK(hi[i].max_residual_radius.mid_double() < lo[i].max_residual_radius.mid_double());
  }
}

TEST_CASE("grid validation") {
  IdentityGrid g = small_grid();
  g.m_max = 17;
  CHECK_THROWS_AS(run_identity_suite(g, kCfg), Error);
  g = small_grid();
  g.n_max = 9;
  CHECK_THROWS_AS(run_identity_suite(g, kCfg), Error);
  g = small_grid();
  g.x_values.push_back(0.0);
  CHECK_THROWS_AS(run_identity_suite(g, kCfg), Error);
  g.x_values = {41.0};
  CHECK_THROWS_AS(run_identity_suite(g, kCfg), Error);
  const IdentityGrid standard = IdentityGrid::standard();
  CHECK(standard.x_values.size() == 80);
  CHECK(standard.x_values.back() == 20.0);
}
