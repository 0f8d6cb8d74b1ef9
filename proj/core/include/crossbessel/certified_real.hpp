#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <string_view>

#include "crossbessel/detail/mpfr_value.hpp"

namespace crossbessel {

/// Midpoint-radius enclosure of a real number.
///
/// The midpoint carries the working precision; the radius is kept at
/// kRadiusBits and every operation rounds it upward, so the exact value
/// always lies in [mid - rad, mid + rad]. Results of exact operations keep
/// a zero radius.
class CertifiedReal {
 public:
  static constexpr mpfr_prec_t kRadiusBits = 64;

  /// Exact zero at the given precision.
  explicit CertifiedReal(mpfr_prec_t prec = 256);

  static CertifiedReal from_long(long v, mpfr_prec_t prec);
  /// Exact when prec >= 53.
  static CertifiedReal from_double(double v, mpfr_prec_t prec);
  static CertifiedReal from_integer(const mpz_class& v, mpfr_prec_t prec);
  static CertifiedReal from_rational(const mpq_class& v, mpfr_prec_t prec);
  /// Parses a decimal literal ("2.404826", "-1.5e3") and treats it as known
  /// to half a unit of its last digit.
  static CertifiedReal from_decimal(std::string_view text, mpfr_prec_t prec);
  /// Smallest representable ball containing [lo, hi]. Requires lo <= hi.
  static CertifiedReal from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec);
  /// Exact point value taken from an mpfr number (copied at its own precision).
  static CertifiedReal from_mpfr(mpfr_srcptr v);

  mpfr_prec_t precision() const { return mid_.prec(); }
  mpfr_srcptr mid() const { return mid_.get(); }
  mpfr_srcptr rad() const { return rad_.get(); }

  double mid_double() const;
  /// Radius rounded upward to double.
  double rad_double() const;
  /// Lower/upper endpoints rounded outward to double.
  double lower_double() const;
  double upper_double() const;

  /// Lower/upper endpoints at precision(); rounded outward.
  detail::MpfrValue lower() const;
  detail::MpfrValue upper() const;
  /// Upper bound for |x|, rounded upward at kRadiusBits.
  detail::MpfrValue mag_upper() const;

  bool is_exact() const { return mpfr_zero_p(rad_.get()) != 0; }
  bool contains_zero() const;
  /// +1 or -1 when the sign is certified, 0 when the enclosure meets zero.
  int sign() const;
  bool contains(const mpq_class& q) const;
  bool contains(const CertifiedReal& other) const;

  /// Re-rounds the midpoint to `prec` bits, widening the radius accordingly.
  CertifiedReal rounded(mpfr_prec_t prec) const;
  /// Adds e to the radius (e >= 0, rounded upward).
  void add_error(mpfr_srcptr e);

  /// Midpoint in scientific notation with enough digits to round-trip.
  std::string mid_string() const;
  /// Radius in scientific notation, rounded upward.
  std::string rad_string() const;

  CertifiedReal& operator+=(const CertifiedReal& o);
  CertifiedReal& operator-=(const CertifiedReal& o);
  CertifiedReal& operator*=(const CertifiedReal& o);
  CertifiedReal& operator/=(const CertifiedReal& o);

  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
  /// Throws Error(kDomain) when b contains zero.
  friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a);

  CertifiedReal mul_si(long k) const;
  CertifiedReal div_ui(unsigned long d) const;
  /// Multiplies by 2^e; exact.
  CertifiedReal mul_2si(long e) const;

 private:
  // Widens the radius by one ulp of the midpoint if `ternary` reports an
  // inexact midpoint operation.
  void account_rounding(int ternary);

  detail::MpfrValue mid_;
  detail::MpfrValue rad_;
};

CertifiedReal abs(const CertifiedReal& x);
CertifiedReal pow(const CertifiedReal& x, unsigned n);

/// Intersection of two enclosures; nullopt when they are disjoint.
std::optional<CertifiedReal> intersect(const CertifiedReal& a, const CertifiedReal& b);
bool overlaps(const CertifiedReal& a, const CertifiedReal& b);

}  // namespace crossbessel
