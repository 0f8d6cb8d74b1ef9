#include "crossbessel/certified_real.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

#include "crossbessel/error.hpp"

namespace crossbessel {

using detail::MpfrValue;

namespace {

constexpr mpfr_prec_t kRad = CertifiedReal::kRadiusBits;

// |a| * r rounded upward, r >= 0.
void abs_mul_up(mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr r) {
  mpfr_mul(out, a, r, MPFR_RNDA);
  mpfr_abs(out, out, MPFR_RNDN);
}

std::string format_mpfr(const char* fmt, int digits, mpfr_srcptr v) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, fmt, digits, v);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

CertifiedReal::CertifiedReal(mpfr_prec_t prec) : mid_(prec), rad_(kRad) {}

void CertifiedReal::account_rounding(int ternary) {
  if (ternary == 0) return;
  MpfrValue ulp(kRad);
  if (mpfr_zero_p(mid_.get())) {
    mpfr_nextabove(ulp.get());
  } else {
    mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(mid_.get()) - precision(), MPFR_RNDU);
  }
  mpfr_add(rad_.get(), rad_.get(), ulp.get(), MPFR_RNDU);
}

void CertifiedReal::add_error(mpfr_srcptr e) {
  mpfr_add(rad_.get(), rad_.get(), e, MPFR_RNDU);
}

CertifiedReal CertifiedReal::from_long(long v, mpfr_prec_t prec) {
  CertifiedReal r(prec);
  r.account_rounding(mpfr_set_si(r.mid_.get(), v, MPFR_RNDN));
  return r;
}

CertifiedReal CertifiedReal::from_double(double v, mpfr_prec_t prec) {
  CertifiedReal r(prec);
  r.account_rounding(mpfr_set_d(r.mid_.get(), v, MPFR_RNDN));
  return r;
}

CertifiedReal CertifiedReal::from_integer(const mpz_class& v, mpfr_prec_t prec) {
  CertifiedReal r(prec);
  r.account_rounding(mpfr_set_z(r.mid_.get(), v.get_mpz_t(), MPFR_RNDN));
  return r;
}

CertifiedReal CertifiedReal::from_rational(const mpq_class& v, mpfr_prec_t prec) {
  CertifiedReal r(prec);
  r.account_rounding(mpfr_set_q(r.mid_.get(), v.get_mpq_t(), MPFR_RNDN));
  return r;
}

CertifiedReal CertifiedReal::from_decimal(std::string_view text, mpfr_prec_t prec) {
  std::size_t i = 0;
  auto fail = [&] { throw Error(ErrorKind::kFormat, "bad decimal literal '" + std::string(text) + "'"); };
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) fail();
  long exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') fail();
    std::string exp_text(text.substr(i + 1));
    char* end = nullptr;
    exponent = std::strtol(exp_text.c_str(), &end, 10);
    if (exp_text.empty() || *end != '\0') fail();
  }
  const long scale = exponent - frac_digits;
  mpz_class mantissa(digits, 10);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  mpq_class value = scale >= 0 ? mpq_class(mantissa * pow10) : mpq_class(mantissa, pow10);
  value.canonicalize();
  if (negative) value = -value;
  // half a unit in the last place: 10^scale / 2
  mpq_class half_unit = scale >= 0 ? mpq_class(pow10, 2) : mpq_class(1, 2 * pow10);
  half_unit.canonicalize();

  CertifiedReal r = from_rational(value, prec);
  MpfrValue h(kRad);
  mpfr_set_q(h.get(), half_unit.get_mpq_t(), MPFR_RNDU);
  r.add_error(h.get());
  return r;
}

CertifiedReal CertifiedReal::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
  CertifiedReal r(prec);
  mpfr_add(r.mid_.get(), lo, hi, MPFR_RNDN);
  mpfr_div_2ui(r.mid_.get(), r.mid_.get(), 1, MPFR_RNDN);
  MpfrValue up(kRad), down(kRad);
  mpfr_sub(up.get(), hi, r.mid_.get(), MPFR_RNDU);
  mpfr_sub(down.get(), r.mid_.get(), lo, MPFR_RNDU);
  mpfr_max(r.rad_.get(), up.get(), down.get(), MPFR_RNDU);
  if (mpfr_sgn(r.rad_.get()) < 0) mpfr_set_zero(r.rad_.get(), 1);
  return r;
}

CertifiedReal CertifiedReal::from_mpfr(mpfr_srcptr v) {
  CertifiedReal r(mpfr_get_prec(v));
  mpfr_set(r.mid_.get(), v, MPFR_RNDN);
  return r;
}

double CertifiedReal::mid_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }
double CertifiedReal::rad_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

double CertifiedReal::lower_double() const {
  MpfrValue lo = lower();
  return mpfr_get_d(lo.get(), MPFR_RNDD);
}

double CertifiedReal::upper_double() const {
  MpfrValue hi = upper();
  return mpfr_get_d(hi.get(), MPFR_RNDU);
}

MpfrValue CertifiedReal::lower() const {
  MpfrValue lo(precision());
  mpfr_sub(lo.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return lo;
}

MpfrValue CertifiedReal::upper() const {
  MpfrValue hi(precision());
  mpfr_add(hi.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return hi;
}

MpfrValue CertifiedReal::mag_upper() const {
  MpfrValue m(kRad);
  mpfr_abs(m.get(), mid_.get(), MPFR_RNDU);
  mpfr_add(m.get(), m.get(), rad_.get(), MPFR_RNDU);
  return m;
}

bool CertifiedReal::contains_zero() const { return sign() == 0; }

int CertifiedReal::sign() const {
  if (mpfr_sgn(lower().get()) > 0) return 1;
  if (mpfr_sgn(upper().get()) < 0) return -1;
  return 0;
}

bool CertifiedReal::contains(const mpq_class& q) const {
  return mpfr_cmp_q(lower().get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(upper().get(), q.get_mpq_t()) >= 0;
}

bool CertifiedReal::contains(const CertifiedReal& other) const {
  // conservative: shrink *this, widen other
  MpfrValue self_lo(precision()), self_hi(precision());
  mpfr_sub(self_lo.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  mpfr_add(self_hi.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return mpfr_cmp(self_lo.get(), other.lower().get()) <= 0 &&
         mpfr_cmp(other.upper().get(), self_hi.get()) <= 0;
}

CertifiedReal CertifiedReal::rounded(mpfr_prec_t prec) const {
  CertifiedReal r(prec);
  mpfr_set(r.rad_.get(), rad_.get(), MPFR_RNDU);
  r.account_rounding(mpfr_set(r.mid_.get(), mid_.get(), MPFR_RNDN));
  return r;
}

std::string CertifiedReal::mid_string() const {
  const int digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 1;
  return format_mpfr("%.*RNe", digits, mid_.get());
}

std::string CertifiedReal::rad_string() const { return format_mpfr("%.*RUe", 6, rad_.get()); }

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.precision(), b.precision()));
  int t = mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  r.account_rounding(t);
  return r;
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.precision(), b.precision()));
  int t = mpfr_sub(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  r.account_rounding(t);
  return r;
}

CertifiedReal operator-(const CertifiedReal& a) {
  CertifiedReal r(a);
  mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
  return r;
}

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.precision(), b.precision()));
  int t = mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  if (!a.is_exact() || !b.is_exact()) {
    MpfrValue x(kRad), y(kRad);
    abs_mul_up(x.get(), a.mid_.get(), b.rad_.get());
    abs_mul_up(y.get(), b.mid_.get(), a.rad_.get());
    mpfr_add(r.rad_.get(), x.get(), y.get(), MPFR_RNDU);
    mpfr_mul(x.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), x.get(), MPFR_RNDU);
  }
  r.account_rounding(t);
  return r;
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
  if (b.contains_zero()) throw Error(ErrorKind::kDomain, "division by an enclosure containing zero");
  CertifiedReal r(std::max(a.precision(), b.precision()));
  int t = mpfr_div(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  if (!a.is_exact() || !b.is_exact()) {
    // |a/b - ma/mb| <= (|ma| rb + |mb| ra) / (|mb| (|mb| - rb))
    MpfrValue num(kRad), tmp(kRad), den(kRad), abs_b(b.precision());
    abs_mul_up(num.get(), a.mid_.get(), b.rad_.get());
    abs_mul_up(tmp.get(), b.mid_.get(), a.rad_.get());
    mpfr_add(num.get(), num.get(), tmp.get(), MPFR_RNDU);
    mpfr_abs(abs_b.get(), b.mid_.get(), MPFR_RNDN);
    mpfr_sub(den.get(), abs_b.get(), b.rad_.get(), MPFR_RNDD);
    mpfr_mul(den.get(), den.get(), abs_b.get(), MPFR_RNDD);
    mpfr_div(r.rad_.get(), num.get(), den.get(), MPFR_RNDU);
  }
  r.account_rounding(t);
  return r;
}

CertifiedReal& CertifiedReal::operator+=(const CertifiedReal& o) { return *this = *this + o; }
CertifiedReal& CertifiedReal::operator-=(const CertifiedReal& o) { return *this = *this - o; }
CertifiedReal& CertifiedReal::operator*=(const CertifiedReal& o) { return *this = *this * o; }
CertifiedReal& CertifiedReal::operator/=(const CertifiedReal& o) { return *this = *this / o; }

CertifiedReal CertifiedReal::mul_si(long k) const {
  CertifiedReal r(precision());
  int t = mpfr_mul_si(r.mid_.get(), mid_.get(), k, MPFR_RNDN);
  mpfr_mul_ui(r.rad_.get(), rad_.get(), static_cast<unsigned long>(std::labs(k)), MPFR_RNDU);
  r.account_rounding(t);
  return r;
}

CertifiedReal CertifiedReal::div_ui(unsigned long d) const {
  if (d == 0) throw Error(ErrorKind::kDomain, "division by zero");
  CertifiedReal r(precision());
  int t = mpfr_div_ui(r.mid_.get(), mid_.get(), d, MPFR_RNDN);
  mpfr_div_ui(r.rad_.get(), rad_.get(), d, MPFR_RNDU);
  r.account_rounding(t);
  return r;
}

CertifiedReal CertifiedReal::mul_2si(long e) const {
  CertifiedReal r(*this);
  mpfr_mul_2si(r.mid_.get(), r.mid_.get(), e, MPFR_RNDN);
  mpfr_mul_2si(r.rad_.get(), r.rad_.get(), e, MPFR_RNDU);
  return r;
}

CertifiedReal abs(const CertifiedReal& x) {
  const int s = x.sign();
  if (s > 0) return x;
  if (s < 0) return -x;
  MpfrValue zero(x.precision());
  MpfrValue hi = x.mag_upper();
  return CertifiedReal::from_endpoints(zero.get(), hi.get(), x.precision());
}

CertifiedReal pow(const CertifiedReal& x, unsigned n) {
  CertifiedReal result = CertifiedReal::from_long(1, x.precision());
  CertifiedReal base = x;
  while (n != 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  return result;
}

std::optional<CertifiedReal> intersect(const CertifiedReal& a, const CertifiedReal& b) {
  MpfrValue a_lo = a.lower(), a_hi = a.upper(), b_lo = b.lower(), b_hi = b.upper();
  mpfr_srcptr lo = mpfr_cmp(a_lo.get(), b_lo.get()) >= 0 ? a_lo.get() : b_lo.get();
  mpfr_srcptr hi = mpfr_cmp(a_hi.get(), b_hi.get()) <= 0 ? a_hi.get() : b_hi.get();
  if (mpfr_cmp(lo, hi) > 0) return std::nullopt;
  return CertifiedReal::from_endpoints(lo, hi, std::max(a.precision(), b.precision()));
}

bool overlaps(const CertifiedReal& a, const CertifiedReal& b) { return intersect(a, b).has_value(); }

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kDomain: return "domain-error";
    case ErrorKind::kPrecisionExhausted: return "precision-exhausted";
    case ErrorKind::kInconsistentForms: return "inconsistent-forms";
    case ErrorKind::kInvariantViolation: return "invariant-violation";
    case ErrorKind::kDegenerateTriple: return "degenerate-triple";
    case ErrorKind::kUnresolvedBracket: return "unresolved-bracket";
    case ErrorKind::kUnresolvedOrder: return "unresolved-order";
    case ErrorKind::kFormat: return "format-error";
  }
  return "error";
}

}  // namespace crossbessel
