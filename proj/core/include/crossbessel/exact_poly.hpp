#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "crossbessel/certified_real.hpp"
#include "crossbessel/precision.hpp"

namespace crossbessel {

/// Arbitrary-precision rational; gmpxx keeps it gcd-reduced with a
/// positive denominator after every operation.
using ExactRational = mpq_class;

/// Dense univariate polynomial over Q, ascending powers of x.
/// The highest stored coefficient is nonzero; the zero polynomial is empty.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<ExactRational> coeffs);
  ExactPoly(std::initializer_list<long> coeffs);

  static ExactPoly constant(const ExactRational& c);
  /// c * x^k
  static ExactPoly monomial(const ExactRational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<ExactRational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k (zero past the degree).
  ExactRational coefficient(std::size_t k) const;
  ExactRational constant_term() const { return coefficient(0); }
  /// Exponent of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t low_order() const;

  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator-(const ExactPoly& a);

 private:
  void normalize();

  std::vector<ExactRational> coeffs_;
};

ExactPoly poly_add(const ExactPoly& p, const ExactPoly& q);
ExactPoly poly_mul(const ExactPoly& p, const ExactPoly& q);
ExactPoly poly_scale(const ExactPoly& p, const ExactRational& c);
/// p * x^k
ExactPoly poly_shift(const ExactPoly& p, std::size_t k);
/// p / x^k; throws Error(kInvariantViolation) unless x^k divides p.
ExactPoly poly_unshift(const ExactPoly& p, std::size_t k);
/// Truncation to degree < k. Requires k >= 1.
ExactPoly poly_mod_xk(const ExactPoly& p, std::size_t k);

/// Horner evaluation on enclosures; the result contains p(t) for every t in x.
CertifiedReal poly_eval(const ExactPoly& p, const CertifiedReal& x, const PrecisionConfig& cfg);
ExactRational poly_eval_exact(const ExactPoly& p, const ExactRational& x);

/// Canonical text: ascending coefficients as gmp rationals ("num" or
/// "num/den") separated by single spaces; the zero polynomial is "0".
std::string to_canonical_string(const ExactPoly& p);
ExactPoly poly_from_canonical_string(std::string_view text);

/// a y^2 + b y + c in a formal unknown y, with coefficients in Q[x].
struct Quadratic {
  ExactPoly a;
  ExactPoly b;
  ExactPoly c;

  friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

/// Sylvester resultant in y of two quadratics:
/// (a1 c2 - a2 c1)^2 - (a1 b2 - a2 b1)(b1 c2 - b2 c1).
ExactPoly quadratic_resultant(const Quadratic& q1, const Quadratic& q2);

}  // namespace crossbessel
