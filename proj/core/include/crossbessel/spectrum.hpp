#pragma once

#include <optional>
#include <vector>

#include "crossbessel/certified_real.hpp"
#include "crossbessel/coeff_table.hpp"
#include "crossbessel/elimination.hpp"
#include "crossbessel/precision.hpp"

namespace crossbessel {

/// k-th positive zero w of W_m with the clamped-disk eigenvalue lambda = w^4.
struct ZeroRecord {
  int m = 0;
  int k = 0;
  CertifiedReal enclosure;
  CertifiedReal lambda;
  int degeneracy = 1;  // 1 for m = 0, 2 for the e^{+-i m phi} pair
  int bits = 0;        // working precision the enclosure was certified at
};

struct ScanOptions {
  int grid_per_unit = 10;   // coarse grid step 0.1
  int fine_per_unit = 100;  // rescan step 0.01 around suspected double crossings
  double scan_ceiling = 100.0;
  int max_escalations = 2;  // working_bits may grow to 4x the request
};

/// Zeros of W_m on (0, x_max], located as sign changes of G_m and refined by
/// a bracketing secant (Illinois) iteration with certified signs until the
/// enclosure width is at most 2^-target_radius_bits relative.
/// Throws Error(kUnresolvedBracket) if a sign cannot be certified.
std::vector<ZeroRecord> find_zeros(int m, double x_max, const PrecisionConfig& cfg,
                                   const ScanOptions& opts = {});

/// Re-certifies an existing zero at another precision, using its enclosure
/// endpoints as the initial bracket.
ZeroRecord refine_zero(const ZeroRecord& z, const PrecisionConfig& cfg, const ScanOptions& opts = {});

/// The `count` smallest eigenvalues (one record per (m, k)), sorted, with
/// pairwise disjoint lambda enclosures. Throws Error(kUnresolvedOrder) if
/// enclosures still overlap after escalation.
std::vector<ZeroRecord> eigenvalues(int count, const PrecisionConfig& cfg, const ScanOptions& opts = {});

struct GapPair {
  ZeroRecord first;
  ZeroRecord second;
  CertifiedReal gap;  // second.enclosure - first.enclosure
};

struct GapReport {
  std::vector<GapPair> pairs;  // sorted by gap midpoint, ascending
  std::optional<CertifiedReal> min_gap;
};

/// Cross-order gaps among all zeros of W_0..W_{m_max} on (0, x_max].
/// Only neighbours in sorted order are listed; the minimal cross-order gap
/// is always attained by such a pair.
GapReport gap_scan(int m_max, double x_max, const PrecisionConfig& cfg, const ScanOptions& opts = {});

struct TripleEvaluation {
  TripleIndex triple;
  int k = 0;  // which zero of W_{m2}
  RefutationStatus status = RefutationStatus::kInconclusive;
  int bits = 0;
  CertifiedReal zero;
  CertifiedReal r_value;
};

struct RefutationSummary {
  std::vector<TripleEvaluation> evaluations;
  std::size_t triples = 0;
  std::size_t refuted = 0;
  std::size_t inconclusive = 0;
};

/// Every gap-respecting triple m1 < m2 < m3 <= m_max, evaluated on every
/// zero of W_{m2} up to x_max. Inconclusive points are re-refined at
/// doubled precision before being reported.
RefutationSummary refute_all_triples(int m_max, double x_max, const PrecisionConfig& cfg,
                                     CoeffTable& table, const ScanOptions& opts = {});

std::vector<TripleIndex> candidate_triples(int m_max);

}  // namespace crossbessel
