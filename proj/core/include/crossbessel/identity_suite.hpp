#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crossbessel/certified_real.hpp"
#include "crossbessel/precision.hpp"

namespace crossbessel {

struct IdentityGrid {
  int m_min = -6;
  int m_max = 12;
  int n_max = 6;  // depth range for the rolled-recursion identity
  std::vector<double> x_values;

  /// m in [-6, 12], n in [0, 6], x in {0.25, 0.5, ..., 20}.
  static IdentityGrid standard();
  /// Throws Error(kDomain) outside |m| <= 16, n <= 8, x in (0, 40].
  void validate() const;
  std::string describe() const;
};

struct GridPoint {
  int m = 0;
  int n = 0;
  double x = 0.0;
};

struct IdentityReport {
  std::string identity_name;
  std::string grid;
  CertifiedReal max_residual_radius;  // exact value: the largest residual radius seen
  std::size_t points_checked = 0;
  std::vector<GridPoint> failures;

  bool passed() const { return failures.empty() && points_checked > 0; }
};

/// Labels of every identity the suite checks, in report order.
std::span<const std::string_view> identity_registry();

/// Labels missing from `reports` or present more than once.
std::vector<std::string> registry_mismatches(const std::vector<IdentityReport>& reports);

/// Evaluates every registered identity on the grid. A point passes when the
/// residual enclosure contains zero and its radius is below
/// 2^(-working_bits/2) times the summed magnitudes of the residual's terms.
std::vector<IdentityReport> run_identity_suite(const IdentityGrid& grid, const PrecisionConfig& cfg);

}  // namespace crossbessel
