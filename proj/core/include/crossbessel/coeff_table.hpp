#pragma once

#include <map>
#include <utility>

#include "crossbessel/exact_poly.hpp"

namespace crossbessel {

/// Coefficients expressing x^{2n} W_{m+n+1} through W_m and W_{m-1}:
///
///   x^{2n} W_{m+n+1} = (A F_m + x^2 B + C / F_m) W_m + (A F_m + B~ - C / F_m) W_{m-1}
struct CoeffQuad {
  int m = 0;
  int n = 0;
  ExactPoly A;
  ExactPoly B;
  ExactPoly B_tilde;
  ExactPoly C;

  friend bool operator==(const CoeffQuad&, const CoeffQuad&) = default;
};

/// n = 0: A = 2m, B = 0, B~ = -1, C = 0.
CoeffQuad base_quad(int m);

/// Builds (m, n) from its dependency (m + 1, n - 1):
///   A  = -4m^2 A' + 2m x^4 B' - x^4 C'
///   B  = B~'
///   B~ = 4m A' - x^4 B'
///   C  = A'
CoeffQuad step_quad(int m, const CoeffQuad& next);

/// True when q is the base quadruple (n = 0) or follows from `next` by one step.
bool satisfies_recursion(const CoeffQuad& q, const CoeffQuad* next);

/// The constant 2 (-4)^n (m+n) prod_{k<n} (m+k)^2 that A_{m,n} reduces to
/// modulo x^4. Requires n >= 1.
ExactRational coeff_closed_form_mod_x4(int m, int n);

/// Memoized quadruples keyed by (m, n). Filling is single-writer; once
/// filled, const lookups are safe from any number of threads.
class CoeffTable {
 public:
  using Key = std::pair<int, int>;

  /// Computes (and stores) every quadruple on the chain (m, n) -> (m+n, 0).
  const CoeffQuad& get(int m, int n);
  const CoeffQuad* find(int m, int n) const;

  /// Fills all (m, n) with m in [m_lo, m_hi], n in [0, n_max].
  void prefill(int m_lo, int m_hi, int n_max);

  /// Inserts an externally supplied quadruple after checking it against
  /// the recursion. Its dependency must already be present.
  void insert_verified(CoeffQuad q);

  std::size_t size() const { return entries_.size(); }
  const std::map<Key, CoeffQuad>& entries() const { return entries_; }

 private:
  std::map<Key, CoeffQuad> entries_;
};

const CoeffQuad& coeff_quad(int m, int n, CoeffTable& table);

}  // namespace crossbessel
