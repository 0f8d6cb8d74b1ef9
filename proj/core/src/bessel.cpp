#include "crossbessel/bessel.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "crossbessel/error.hpp"

namespace crossbessel {

using detail::MpfrValue;

void PrecisionConfig::validate() const {
  if (working_bits < 64) throw Error(ErrorKind::kDomain, "working_bits must be >= 64");
  if (target_radius_bits < 1 || target_radius_bits >= working_bits) {
    throw Error(ErrorKind::kDomain, "target_radius_bits must lie in [1, working_bits)");
  }
}

namespace {

constexpr mpfr_prec_t kRad = CertifiedReal::kRadiusBits;
constexpr int kGuardBits = 16;
constexpr int kRefinementRounds = 3;
constexpr unsigned long kMaxTerms = 1'000'000;

struct SeriesSum {
  CertifiedReal value;
  MpfrValue scale;  // upper bound for the sum of |terms|
};

// (x/2)^m sum_k (+-1)^k (x/2)^{2k} / (k! (m+k)!), m >= 0.
//
// Tail: once the term ratio q/((k+1)(m+k+1)) drops below 1/2 the positive
// series is bounded by twice the next term; the alternating series by the
// next term once terms decrease.
SeriesSum power_series(unsigned m, const CertifiedReal& x, mpfr_prec_t prec, bool alternating) {
  const CertifiedReal half = x.rounded(std::max(prec, x.precision())).mul_2si(-1);
  const CertifiedReal q = half * half;
  const MpfrValue q_up = q.mag_upper();

  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), m);
  CertifiedReal term = pow(half, m) / CertifiedReal::from_integer(factorial, prec);
  CertifiedReal sum = term;
  MpfrValue scale = term.mag_upper();
  MpfrValue ratio(kRad), bound(kRad), threshold(kRad);

  for (unsigned long k = 0; k < kMaxTerms; ++k) {
    term = (term * q).div_ui((k + 1) * (m + k + 1));  // now t_{k+1}
    mpfr_div_ui(ratio.get(), q_up.get(), (k + 2) * (m + k + 2), MPFR_RNDU);
    const bool tail_applies =
        alternating ? mpfr_cmp_ui(ratio.get(), 1) < 0 : mpfr_cmp_d(ratio.get(), 0.5) <= 0;
    if (tail_applies) {
      bound = term.mag_upper();
      if (!alternating) mpfr_mul_2ui(bound.get(), bound.get(), 1, MPFR_RNDU);
      mpfr_mul_2si(threshold.get(), scale.get(), -static_cast<long>(prec), MPFR_RNDD);
      if (mpfr_cmp(bound.get(), threshold.get()) <= 0) {
        sum.add_error(bound.get());
        return {std::move(sum), std::move(scale)};
      }
    }
    if (alternating && (k % 2 == 0)) {
      sum -= term;
    } else {
      sum += term;
    }
    MpfrValue mag = term.mag_upper();
    mpfr_add(scale.get(), scale.get(), mag.get(), MPFR_RNDU);
  }
  throw Error(ErrorKind::kPrecisionExhausted, "series did not converge");
}

CertifiedReal series_to_target(unsigned m, const CertifiedReal& x, const PrecisionConfig& cfg,
                               bool alternating) {
  cfg.validate();
  if (x.sign() < 0) throw Error(ErrorKind::kDomain, "Bessel argument must be nonnegative");
  // J sums terms of size up to about e^x before cancelling down to O(1)
  mpfr_prec_t prec = cfg.working_bits + kGuardBits;
  if (alternating) prec += static_cast<mpfr_prec_t>(std::ceil(x.upper_double() * 1.4426950408889634));

  for (int round = 0; round <= kRefinementRounds; ++round, prec *= 2) {
    SeriesSum s = power_series(m, x, prec, alternating);
    CertifiedReal result = s.value.rounded(cfg.working_bits);
    // a wide argument limits the attainable radius; nothing to refine
    if (!x.is_exact()) return result;
    MpfrValue threshold(kRad);
    mpfr_mul_2si(threshold.get(), s.scale.get(), -cfg.target_radius_bits, MPFR_RNDD);
    if (mpfr_cmp(result.rad(), threshold.get()) <= 0) return result;
  }
  throw Error(ErrorKind::kPrecisionExhausted,
              "order " + std::to_string(m) + " enclosure above target after refinement");
}

CertifiedReal point(double x, const PrecisionConfig& cfg) {
  return CertifiedReal::from_double(x, std::max(53, cfg.working_bits));
}

}  // namespace

BesselEvaluator::BesselEvaluator(CertifiedReal x, PrecisionConfig cfg) : x_(std::move(x)), cfg_(cfg) {
  cfg_.validate();
  if (x_.sign() < 0) throw Error(ErrorKind::kDomain, "Bessel argument must be nonnegative");
}

const CertifiedReal& BesselEvaluator::series(std::map<int, CertifiedReal>& memo, int order,
                                             bool alternating) {
  auto it = memo.find(order);
  if (it == memo.end()) {
    it = memo.emplace(order, series_to_target(static_cast<unsigned>(order), x_, cfg_, alternating))
             .first;
  }
  return it->second;
}

CertifiedReal BesselEvaluator::J(int m) {
  const CertifiedReal& v = series(j_, std::abs(m), true);
  return (m < 0 && (-m) % 2 == 1) ? -v : v;
}

CertifiedReal BesselEvaluator::I(int m) { return series(i_, std::abs(m), false); }

CertifiedReal BesselEvaluator::W_first_form(int m) { return I(m + 1) * J(m) + I(m) * J(m + 1); }

CertifiedReal BesselEvaluator::W_second_form(int m) { return I(m - 1) * J(m) - I(m) * J(m - 1); }

CertifiedReal BesselEvaluator::W(int m) {
  auto both = intersect(W_first_form(m), W_second_form(m));
  if (!both) {
    throw Error(ErrorKind::kInconsistentForms,
                "cross-product forms disagree at order " + std::to_string(m) + ", x = " + x_.mid_string());
  }
  return *both;
}

void BesselEvaluator::require_positive_argument() const {
  if (x_.sign() <= 0) throw Error(ErrorKind::kDomain, "argument must be strictly positive");
}

CertifiedReal BesselEvaluator::F(int m) {
  require_positive_argument();
  return I(m) / (x_ * I(m - 1));
}

CertifiedReal BesselEvaluator::G(int m) {
  require_positive_argument();
  return (I(m + 1) / I(m)) * J(m) + J(m + 1);
}

namespace {

// For a non-point argument, f(X) lies in f(mid) + f'(X) [-r, r]. Term-wise
// ball propagation instead bounds |f'| by the summed term derivatives, which
// grows like I_m even for J_m and W_m.
template <class At, class Slope>
CertifiedReal mean_value(const CertifiedReal& x, At&& at, Slope&& slope) {
  CertifiedReal direct = at(x);
  if (x.is_exact()) return direct;
  CertifiedReal out = at(CertifiedReal::from_mpfr(x.mid()));
  MpfrValue bound = slope().mag_upper();
  mpfr_mul(bound.get(), bound.get(), x.rad(), MPFR_RNDU);
  out.add_error(bound.get());
  if (auto both = intersect(out, direct)) return *both;
  return out;
}

}  // namespace

CertifiedReal eval_I(int m, const CertifiedReal& x, const PrecisionConfig& cfg) {
  return mean_value(
      x, [&](const CertifiedReal& t) { return BesselEvaluator(t, cfg).I(m); },
      [&] {
        BesselEvaluator ev(x, cfg);
        return (ev.I(m - 1) + ev.I(m + 1)).mul_2si(-1);
      });
}

CertifiedReal eval_J(int m, const CertifiedReal& x, const PrecisionConfig& cfg) {
  return mean_value(
      x, [&](const CertifiedReal& t) { return BesselEvaluator(t, cfg).J(m); },
      [&] {
        BesselEvaluator ev(x, cfg);
        return (ev.J(m - 1) - ev.J(m + 1)).mul_2si(-1);
      });
}

// W_m' = 2 I_m J_m - W_m / x
CertifiedReal eval_W(int m, const CertifiedReal& x, const PrecisionConfig& cfg) {
  if (x.sign() <= 0) return BesselEvaluator(x, cfg).W(m);
  return mean_value(
      x, [&](const CertifiedReal& t) { return BesselEvaluator(t, cfg).W(m); },
      [&] {
        BesselEvaluator ev(x, cfg);
        return (ev.I(m) * ev.J(m)).mul_2si(1) - ev.W(m) / x;
      });
}

CertifiedReal eval_F(int m, const CertifiedReal& x, const PrecisionConfig& cfg) {
  return BesselEvaluator(x, cfg).F(m);
}
CertifiedReal eval_G(int m, const CertifiedReal& x, const PrecisionConfig& cfg) {
  return BesselEvaluator(x, cfg).G(m);
}

CertifiedReal eval_I(int m, double x, const PrecisionConfig& cfg) { return eval_I(m, point(x, cfg), cfg); }
CertifiedReal eval_J(int m, double x, const PrecisionConfig& cfg) { return eval_J(m, point(x, cfg), cfg); }
CertifiedReal eval_W(int m, double x, const PrecisionConfig& cfg) { return eval_W(m, point(x, cfg), cfg); }
CertifiedReal eval_F(int m, double x, const PrecisionConfig& cfg) { return eval_F(m, point(x, cfg), cfg); }
CertifiedReal eval_G(int m, double x, const PrecisionConfig& cfg) { return eval_G(m, point(x, cfg), cfg); }

}  // namespace crossbessel
