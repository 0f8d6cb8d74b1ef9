#include "crossbessel/identity_suite.hpp"

#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "crossbessel/bessel.hpp"
#include "crossbessel/coeff_table.hpp"
#include "crossbessel/detail/parallel.hpp"
#include "crossbessel/error.hpp"
#include "crossbessel/exact_poly.hpp"

namespace crossbessel {

using detail::MpfrValue;

namespace {

constexpr mpfr_prec_t kRad = CertifiedReal::kRadiusBits;

constexpr std::array<std::string_view, 9> kRegistry = {
    "cross_product_two_forms",   // I_{m+1}J_m + I_mJ_{m+1} = I_{m-1}J_m - I_mJ_{m-1}
    "cross_product_reflection",  // W_{-m} = (-1)^m W_m
    "bessel_recursion_J",        // J_{m+1} = (2m/x) J_m - J_{m-1}
    "bessel_recursion_I",        // I_{m+1} = -(2m/x) I_m + I_{m-1}
    "riccati_key_identity",      // x^2 F_{m+1} F_m = 1 - 2m F_m
    "quotient_reflection",       // x^2 F_{-m+1} = x^2 F_{m+1} + 2m
    "second_order_w_recursion",  // W_{m+1} = 2m F_m W_m + (2m F_m - 1) W_{m-1}
    "w_neighbour_sum",           // W_{m-1} + W_{m+1} = (4m/x) I_m J_m
    "rolled_recursion",          // x^{2n} W_{m+n+1} through W_m, W_{m-1}
};

// Sum of signed terms plus the sum of their magnitudes.
class Residual {
 public:
  explicit Residual(mpfr_prec_t prec) : sum_(prec), scale_(kRad) {}

  Residual& operator+=(const CertifiedReal& term) {
    sum_ += term;
    MpfrValue mag = term.mag_upper();
    mpfr_add(scale_.get(), scale_.get(), mag.get(), MPFR_RNDU);
    return *this;
  }
  Residual& operator-=(const CertifiedReal& term) { return *this += -term; }

  const CertifiedReal& value() const { return sum_; }

  bool passes(int working_bits) const {
    if (!sum_.contains_zero()) return false;
    MpfrValue threshold(kRad);
    mpfr_mul_2si(threshold.get(), scale_.get(), -(working_bits / 2), MPFR_RNDD);
    return mpfr_cmp(sum_.rad(), threshold.get()) < 0;
  }

 private:
  CertifiedReal sum_;
  MpfrValue scale_;
};

struct Context {
  BesselEvaluator& ev;
  const CertifiedReal& x;
  const CoeffTable& table;
  const PrecisionConfig& cfg;

  CertifiedReal constant(long v) const { return CertifiedReal::from_long(v, cfg.working_bits); }
  CertifiedReal poly(const ExactPoly& p) const { return poly_eval(p, x, cfg); }
};

using Check = std::function<Residual(Context&, int m, int n)>;

Residual two_forms(Context& c, int m, int) {
  Residual r(c.cfg.working_bits);
  r += c.ev.I(m + 1) * c.ev.J(m);
  r += c.ev.I(m) * c.ev.J(m + 1);
  r -= c.ev.I(m - 1) * c.ev.J(m);
  r += c.ev.I(m) * c.ev.J(m - 1);
  return r;
}

Residual reflection(Context& c, int m, int) {
  Residual r(c.cfg.working_bits);
  r += c.ev.W(-m);
  r -= (std::abs(m) % 2 == 0) ? c.ev.W(m) : -c.ev.W(m);
  return r;
}

Residual recursion_J(Context& c, int m, int) {
  Residual r(c.cfg.working_bits);
  r += c.ev.J(m + 1);
  r -= c.constant(2 * m) / c.x * c.ev.J(m);
  r += c.ev.J(m - 1);
  return r;
}

Residual recursion_I(Context& c, int m, int) {
  Residual r(c.cfg.working_bits);
  r += c.ev.I(m + 1);
  r += c.constant(2 * m) / c.x * c.ev.I(m);
  r -= c.ev.I(m - 1);
  return r;
}

Residual riccati(Context& c, int m, int) {
  const CertifiedReal Fm = c.ev.F(m);
  Residual r(c.cfg.working_bits);
  r += c.x * c.x * c.ev.F(m + 1) * Fm;
  r -= c.constant(1);
  r += Fm.mul_si(2 * m);
  return r;
}

Residual quotient_reflection(Context& c, int m, int) {
  const CertifiedReal x2 = c.x * c.x;
  Residual r(c.cfg.working_bits);
  r += x2 * c.ev.F(-m + 1);
  r -= x2 * c.ev.F(m + 1);
  r -= c.constant(2 * m);
  return r;
}

Residual second_order(Context& c, int m, int) {
  const CertifiedReal two_m_F = c.ev.F(m).mul_si(2 * m);
  const CertifiedReal W_prev = c.ev.W(m - 1);
  Residual r(c.cfg.working_bits);
  r += c.ev.W(m + 1);
  r -= two_m_F * c.ev.W(m);
  r -= two_m_F * W_prev;
  r += W_prev;
  return r;
}

Residual neighbour_sum(Context& c, int m, int) {
  Residual r(c.cfg.working_bits);
  r += c.ev.W(m - 1);
  r += c.ev.W(m + 1);
  r -= c.constant(4 * m) / c.x * c.ev.I(m) * c.ev.J(m);
  return r;
}

// Multiplied through by F_m for m != 0; at m = 0 the C F_0^{-1} terms are
// kept as written.
Residual rolled(Context& c, int m, int n) {
  const CoeffQuad* q = c.table.find(m, n);
  if (q == nullptr) throw Error(ErrorKind::kInvariantViolation, "coefficient table not prefilled");
  const CertifiedReal A = c.poly(q->A), B = c.poly(q->B), Bt = c.poly(q->B_tilde), C = c.poly(q->C);
  const CertifiedReal F = c.ev.F(m);
  const CertifiedReal x2 = c.x * c.x;
  const CertifiedReal W0 = c.ev.W(m), W1 = c.ev.W(m - 1);
  const CertifiedReal lhs = pow(c.x, static_cast<unsigned>(2 * n)) * c.ev.W(m + n + 1);
  Residual r(c.cfg.working_bits);
  if (m != 0) {
    const CertifiedReal F2 = F * F;
    r += lhs * F;
    r -= A * F2 * W0;
    r -= x2 * B * F * W0;
    r -= C * W0;
    r -= A * F2 * W1;
    r -= Bt * F * W1;
    r += C * W1;
  } else {
    const CertifiedReal C_over_F = C / F;
    r += lhs;
    r -= A * F * W0;
    r -= x2 * B * W0;
    r -= C_over_F * W0;
    r -= A * F * W1;
    r -= Bt * W1;
    r += C_over_F * W1;
  }
  return r;
}

struct Outcome {
  std::size_t identity;
  GridPoint point;
  bool ok;
  MpfrValue radius;
};

}  // namespace

IdentityGrid IdentityGrid::standard() {
  IdentityGrid g;
  for (int i = 1; i <= 80; ++i) g.x_values.push_back(0.25 * i);
  return g;
}

void IdentityGrid::validate() const {
  if (m_min > m_max || m_min < -16 || m_max > 16) throw Error(ErrorKind::kDomain, "order range must lie in [-16, 16]");
  if (n_max < 0 || n_max > 8) throw Error(ErrorKind::kDomain, "n_max must lie in [0, 8]");
  if (x_values.empty()) throw Error(ErrorKind::kDomain, "grid has no x values");
  for (double x : x_values) {
    if (!(x > 0.0) || x > 40.0) throw Error(ErrorKind::kDomain, "grid x values must lie in (0, 40]");
  }
}

std::string IdentityGrid::describe() const {
  std::ostringstream out;
  out << "m in [" << m_min << ", " << m_max << "], n in [0, " << n_max << "], " << x_values.size()
      << " x values in [" << x_values.front() << ", " << x_values.back() << "]";
  return out.str();
}

std::span<const std::string_view> identity_registry() { return kRegistry; }

std::vector<std::string> registry_mismatches(const std::vector<IdentityReport>& reports) {
  std::map<std::string, int> seen;
  for (const auto& r : reports) ++seen[r.identity_name];
  std::vector<std::string> bad;
  for (auto name : kRegistry) {
    auto it = seen.find(std::string(name));
    if (it == seen.end() || it->second != 1) bad.emplace_back(name);
    if (it != seen.end()) seen.erase(it);
  }
  for (const auto& [name, count] : seen) bad.push_back(name);
  return bad;
}

std::vector<IdentityReport> run_identity_suite(const IdentityGrid& grid, const PrecisionConfig& cfg) {
  grid.validate();
  cfg.validate();
  const std::array<Check, kRegistry.size()> checks = {two_forms,    reflection,    recursion_J,
                                                      recursion_I,  riccati,       quotient_reflection,
                                                      second_order, neighbour_sum, rolled};
  const std::size_t rolled_index = kRegistry.size() - 1;

  CoeffTable table;
  table.prefill(grid.m_min, grid.m_max, grid.n_max);

  std::vector<std::vector<Outcome>> per_x(grid.x_values.size());
  detail::parallel_for(grid.x_values.size(), [&](std::size_t xi) {
    const double xv = grid.x_values[xi];
    const CertifiedReal x = CertifiedReal::from_double(xv, cfg.working_bits);
    BesselEvaluator ev(x, cfg);
    Context ctx{ev, x, table, cfg};
    for (std::size_t id = 0; id < checks.size(); ++id) {
      const int n_hi = id == rolled_index ? grid.n_max : 0;
      for (int m = grid.m_min; m <= grid.m_max; ++m) {
        for (int n = 0; n <= n_hi; ++n) {
          const Residual r = checks[id](ctx, m, n);
          MpfrValue rad(kRad);
          mpfr_set(rad.get(), r.value().rad(), MPFR_RNDU);
          per_x[xi].push_back({id, {m, n, xv}, r.passes(cfg.working_bits), std::move(rad)});
        }
      }
    }
  });

  std::vector<IdentityReport> reports(kRegistry.size());
  std::vector<MpfrValue> max_rad(kRegistry.size(), MpfrValue(kRad));
  for (std::size_t id = 0; id < reports.size(); ++id) {
    reports[id].identity_name = std::string(kRegistry[id]);
    reports[id].grid = grid.describe();
  }
  for (const auto& outcomes : per_x) {
    for (const auto& o : outcomes) {
      IdentityReport& rep = reports[o.identity];
      ++rep.points_checked;
      if (!o.ok) rep.failures.push_back(o.point);
      mpfr_max(max_rad[o.identity].get(), max_rad[o.identity].get(), o.radius.get(), MPFR_RNDU);
    }
  }
  for (std::size_t id = 0; id < reports.size(); ++id) {
    reports[id].max_residual_radius = CertifiedReal::from_mpfr(max_rad[id].get());
  }
  return reports;
}

}  // namespace crossbessel
