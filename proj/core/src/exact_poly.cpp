#include "crossbessel/exact_poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "crossbessel/error.hpp"

namespace crossbessel {

ExactPoly::ExactPoly(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
  // caller-supplied values may be unreduced
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

ExactPoly::ExactPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

void ExactPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

ExactPoly ExactPoly::constant(const ExactRational& c) { return ExactPoly(std::vector<ExactRational>{c}); }

ExactPoly ExactPoly::monomial(const ExactRational& c, std::size_t k) {
  std::vector<ExactRational> v(k + 1);
  v[k] = c;
  return ExactPoly(std::move(v));
}

ExactRational ExactPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : ExactRational(0);
}

std::size_t ExactPoly::low_order() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return k;
  }
  return 0;
}

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
  const ExactPoly& longer = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const ExactPoly& shorter = &longer == &a ? b : a;
  std::vector<ExactRational> out = longer.coeffs_;
  for (std::size_t k = 0; k < shorter.coeffs_.size(); ++k) out[k] += shorter.coeffs_[k];
  return ExactPoly(std::move(out));
}

ExactPoly operator-(const ExactPoly& a) {
  std::vector<ExactRational> out = a.coeffs_;
  for (auto& c : out) c = -c;
  return ExactPoly(std::move(out));
}

ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) { return a + (-b); }

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ExactPoly(std::move(out));
}

ExactPoly poly_add(const ExactPoly& p, const ExactPoly& q) { return p + q; }
ExactPoly poly_mul(const ExactPoly& p, const ExactPoly& q) { return p * q; }

ExactPoly poly_scale(const ExactPoly& p, const ExactRational& c) {
  std::vector<ExactRational> out = p.coefficients();
  for (auto& v : out) v *= c;
  return ExactPoly(std::move(out));
}

ExactPoly poly_shift(const ExactPoly& p, std::size_t k) {
  if (p.is_zero()) return {};
  std::vector<ExactRational> out(k);
  out.insert(out.end(), p.coefficients().begin(), p.coefficients().end());
  return ExactPoly(std::move(out));
}

ExactPoly poly_unshift(const ExactPoly& p, std::size_t k) {
  if (p.is_zero()) return {};
  if (p.low_order() < k) throw Error(ErrorKind::kInvariantViolation, "polynomial not divisible by x^k");
  return ExactPoly(std::vector<ExactRational>(p.coefficients().begin() + static_cast<std::ptrdiff_t>(k),
                                              p.coefficients().end()));
}

ExactPoly poly_mod_xk(const ExactPoly& p, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::kDomain, "poly_mod_xk requires k >= 1");
  const auto& c = p.coefficients();
  return ExactPoly(std::vector<ExactRational>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(k, c.size()))));
}

CertifiedReal poly_eval(const ExactPoly& p, const CertifiedReal& x, const PrecisionConfig& cfg) {
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(cfg.working_bits, x.precision());
  CertifiedReal acc(prec);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + CertifiedReal::from_rational(*it, prec);
  }
  return acc;
}

ExactRational poly_eval_exact(const ExactPoly& p, const ExactRational& x) {
  ExactRational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string to_canonical_string(const ExactPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (k != 0) out.push_back(' ');
    out += p.coefficients()[k].get_str();
  }
  return out;
}

ExactPoly poly_from_canonical_string(std::string_view text) {
  std::vector<ExactRational> coeffs;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    ExactRational q;
    if (q.set_str(token, 10) != 0 || sgn(q.get_den()) == 0) {
      throw Error(ErrorKind::kFormat, "bad rational '" + token + "'");
    }
    q.canonicalize();
    if (q.get_str() != token) throw Error(ErrorKind::kFormat, "non-canonical rational '" + token + "'");
    coeffs.push_back(std::move(q));
  }
  if (coeffs.empty()) throw Error(ErrorKind::kFormat, "empty polynomial text");
  ExactPoly p(std::move(coeffs));
  if (to_canonical_string(p) != text) throw Error(ErrorKind::kFormat, "non-canonical polynomial text");
  return p;
}

ExactPoly quadratic_resultant(const Quadratic& q1, const Quadratic& q2) {
  const ExactPoly ac = q1.a * q2.c - q2.a * q1.c;
  const ExactPoly ab = q1.a * q2.b - q2.a * q1.b;
  const ExactPoly bc = q1.b * q2.c - q2.b * q1.c;
  return ac * ac - ab * bc;
}

}  // namespace crossbessel
