#pragma once

#include "crossbessel/certified_real.hpp"
#include "crossbessel/coeff_table.hpp"
#include "crossbessel/exact_poly.hpp"
#include "crossbessel/precision.hpp"

namespace crossbessel {

/// Candidate orders m1 < m2 < m3 of a triple zero, with both gaps >= 2
/// (adjacent cross products never share a positive zero).
/// Writing m1 = m - l - 2, m2 = m, m3 = m + n + 2 gives l, n >= 0, m >= 2.
struct TripleIndex {
  int m1 = 0;
  int m2 = 2;
  int m3 = 4;

  /// Throws Error(kDomain) if the orders violate the invariants.
  static TripleIndex make(int m1, int m2, int m3);

  int l() const { return m2 - m1 - 2; }
  int m() const { return m2; }
  int n() const { return m3 - m2 - 2; }

  friend bool operator==(const TripleIndex&, const TripleIndex&) = default;
};

/// Joint zero of W_m and W_{m+n+2}:
///   A_{m+1,n} y^2 + x^2 B_{m+1,n} y + C_{m+1,n} = 0,   y = F_{m+1}(x).
Quadratic quadratic_up(int m, int n, CoeffTable& table);

/// Joint zero of W_m and W_{m-l-2}, expanded as a quadratic in y = F_{m+1}(x):
///   A' (x^2 y + 2m)^2 + x^4 B' (x^2 y + 2m) + x^4 C' = 0
/// with A', B', C' taken at index (-m+1, l). Requires m >= 1.
Quadratic quadratic_down(int m, int l, CoeffTable& table);

struct CertificateChecks {
  bool r_nonzero = false;
  /// R mod x^4 = 16 m^4 (A_{m+1,n} mod x^4)^3 (A_{-m+1,l} mod x^4)^2
  bool r_mod_x4 = false;
  /// R x^{x_power} = A_{m+1,n} * quadratic_resultant(q_up, q_down)
  bool resultant_identity = false;
  /// L = 4m A A' mod x^4
  bool l_mod_x4 = false;
  /// M = 4m^2 A A' mod x^4
  bool m_mod_x4 = false;

  bool all() const { return r_nonzero && r_mod_x4 && resultant_identity && l_mod_x4 && m_mod_x4; }
  friend bool operator==(const CertificateChecks&, const CertificateChecks&) = default;
};

/// Result of eliminating y = F_{m+1} from the two quadratics.
///
/// Step 1 removes y^2 and leaves L x^2 y + M = 0. Step 2 substitutes back
/// into q_up, giving R' = a1 M^2 - b1 M (L x^2) + c1 (L x^2)^2, stored as
/// R = R' / x^x_power with the largest possible power stripped.
struct EliminationCertificate {
  TripleIndex triple;
  Quadratic q_up;
  Quadratic q_down;
  ExactPoly L;
  ExactPoly M;
  ExactPoly R;
  int x_power = 0;
  ExactRational R_low_order;  // constant term of R
  CertificateChecks checks;
};

/// Raw elimination of y between two quadratics a_i y^2 + b_i y + c_i.
struct Eliminant {
  ExactPoly L_x2;    // a1 b2 - a2 b1
  ExactPoly M;       // a1 c2 - a2 c1
  ExactPoly R_full;  // a1 M^2 - b1 M L_x2 + c1 L_x2^2
};
Eliminant eliminate_pair(const Quadratic& up, const Quadratic& down);

/// Throws Error(kDegenerateTriple) if L and M vanish identically and
/// Error(kInvariantViolation) if any structural check fails.
EliminationCertificate eliminate(const TripleIndex& t, CoeffTable& table);

/// Recomputes every structural check for an existing certificate.
CertificateChecks check_certificate(const EliminationCertificate& cert, CoeffTable& table);

enum class RefutationStatus { kRefuted, kInconclusive };

const char* to_string(RefutationStatus s) noexcept;

struct RefutationResult {
  RefutationStatus status = RefutationStatus::kInconclusive;
  CertifiedReal r_value;
  CertifiedReal l_value;
  /// L excludes zero on the enclosure, i.e. the linear eliminant determines y.
  bool linear_path_nonvanishing = false;
};

/// A triple zero at x0 forces R(x0) = 0 (whether or not L(x0) vanishes,
/// since L = M = 0 also zeroes R). REFUTED iff R's enclosure on `x`
/// excludes zero.
RefutationResult refute_triple(const EliminationCertificate& cert, const CertifiedReal& x,
                               const PrecisionConfig& cfg);
RefutationResult refute_triple(const TripleIndex& t, const CertifiedReal& x, const PrecisionConfig& cfg,
                               CoeffTable& table);

}  // namespace crossbessel
