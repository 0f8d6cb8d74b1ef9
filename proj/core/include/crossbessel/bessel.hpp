#pragma once

#include <map>

#include "crossbessel/certified_real.hpp"
#include "crossbessel/precision.hpp"

namespace crossbessel {

// Integer-order Bessel functions by power series with rigorous tail bounds.
//
// Every function accepts an enclosure of the argument and returns an
// enclosure valid for every point in it. Negative orders are folded onto
// nonnegative ones via J_{-m} = (-1)^m J_m and I_{-m} = I_m.

CertifiedReal eval_I(int m, const CertifiedReal& x, const PrecisionConfig& cfg);
CertifiedReal eval_J(int m, const CertifiedReal& x, const PrecisionConfig& cfg);

/// Cross product W_m = I_{m+1} J_m + I_m J_{m+1} = I_{m-1} J_m - I_m J_{m-1}.
/// Both forms are evaluated and intersected; disjoint enclosures throw
/// Error(kInconsistentForms).
CertifiedReal eval_W(int m, const CertifiedReal& x, const PrecisionConfig& cfg);

/// F_m = I_m / (x I_{m-1}). Requires x > 0.
CertifiedReal eval_F(int m, const CertifiedReal& x, const PrecisionConfig& cfg);

/// G_m = x F_{m+1} J_m + J_{m+1} = W_m / I_m. Same positive zeros as W_m but
/// bounded in x. Requires x > 0.
CertifiedReal eval_G(int m, const CertifiedReal& x, const PrecisionConfig& cfg);

CertifiedReal eval_I(int m, double x, const PrecisionConfig& cfg);
CertifiedReal eval_J(int m, double x, const PrecisionConfig& cfg);
CertifiedReal eval_W(int m, double x, const PrecisionConfig& cfg);
CertifiedReal eval_F(int m, double x, const PrecisionConfig& cfg);
CertifiedReal eval_G(int m, double x, const PrecisionConfig& cfg);

/// Evaluates many orders at one argument, memoizing J_k and I_k.
/// Not thread-safe; use one instance per thread.
class BesselEvaluator {
 public:
  BesselEvaluator(CertifiedReal x, PrecisionConfig cfg);

  const CertifiedReal& x() const { return x_; }
  const PrecisionConfig& config() const { return cfg_; }

  CertifiedReal J(int m);
  CertifiedReal I(int m);
  /// I_{m+1} J_m + I_m J_{m+1}
  CertifiedReal W_first_form(int m);
  /// I_{m-1} J_m - I_m J_{m-1}
  CertifiedReal W_second_form(int m);
  CertifiedReal W(int m);
  CertifiedReal F(int m);
  CertifiedReal G(int m);

 private:
  const CertifiedReal& series(std::map<int, CertifiedReal>& memo, int order, bool alternating);
  void require_positive_argument() const;

  CertifiedReal x_;
  PrecisionConfig cfg_;
  std::map<int, CertifiedReal> j_;
  std::map<int, CertifiedReal> i_;
};

}  // namespace crossbessel
