#include "crossbessel/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "crossbessel/bessel.hpp"
#include "crossbessel/detail/parallel.hpp"
#include "crossbessel/error.hpp"

namespace crossbessel {

using detail::MpfrValue;

namespace {

constexpr mpfr_prec_t kRad = CertifiedReal::kRadiusBits;
constexpr int kMaxRefineSteps = 5000;

MpfrValue copy_of(mpfr_srcptr v) {
  MpfrValue out(mpfr_get_prec(v));
  mpfr_set(out.get(), v, MPFR_RNDN);
  return out;
}

struct Sample {
  int sign = 0;
  MpfrValue value;  // midpoint of G_m at the sample point
};

// Certified sign of G_m at an exact point, retrying at higher precision
// while the enclosure still meets zero.
Sample sample_G(int m, mpfr_srcptr x, PrecisionConfig cfg, int escalations) {
  for (int e = 0;; ++e) {
    const CertifiedReal g = BesselEvaluator(CertifiedReal::from_mpfr(x), cfg).G(m);
    const int s = g.sign();
    if (s != 0 || e >= escalations) return {s, copy_of(g.mid())};
    cfg = cfg.escalated();
  }
}

struct Bracket {
  MpfrValue lo, hi;
  Sample at_lo, at_hi;
};

ZeroRecord make_record(int m, int k, CertifiedReal enclosure, int bits) {
  ZeroRecord z;
  z.m = m;
  z.k = k;
  z.lambda = pow(enclosure, 4);
  z.enclosure = std::move(enclosure);
  z.degeneracy = m == 0 ? 1 : 2;
  z.bits = bits;
  return z;
}

// Illinois-modified regula falsi on a certified sign change; falls back to
// bisection whenever two consecutive steps fail to halve the bracket.
CertifiedReal refine_bracket(int m, Bracket b, const PrecisionConfig& cfg, const ScanOptions& opts) {
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(
      {static_cast<mpfr_prec_t>(cfg.working_bits), b.lo.prec(), b.hi.prec()});
  MpfrValue lo(prec), hi(prec), f_lo(prec), f_hi(prec);
  mpfr_set(lo.get(), b.lo.get(), MPFR_RNDN);
  mpfr_set(hi.get(), b.hi.get(), MPFR_RNDN);
  mpfr_set(f_lo.get(), b.at_lo.value.get(), MPFR_RNDN);
  mpfr_set(f_hi.get(), b.at_hi.value.get(), MPFR_RNDN);
  const int s_lo = b.at_lo.sign;
  const int s_hi = b.at_hi.sign;

  MpfrValue tol(kRad), width(prec), prev_width(prec), c(prec), tmp(prec);
  mpfr_mul_2si(tol.get(), hi.get(), -cfg.target_radius_bits, MPFR_RNDD);
  mpfr_sub(prev_width.get(), hi.get(), lo.get(), MPFR_RNDU);
  int side = 0;
  int stalls = 0;

  for (int step = 0; step < kMaxRefineSteps; ++step) {
    mpfr_sub(width.get(), hi.get(), lo.get(), MPFR_RNDU);
    if (mpfr_cmp(width.get(), tol.get()) <= 0) {
      return CertifiedReal::from_endpoints(lo.get(), hi.get(), prec);
    }
    bool bisect = stalls >= 2 || mpfr_equal_p(f_lo.get(), f_hi.get());
    if (!bisect) {
      // c = lo - f_lo (hi - lo) / (f_hi - f_lo)
      mpfr_sub(tmp.get(), f_hi.get(), f_lo.get(), MPFR_RNDN);
      mpfr_div(c.get(), width.get(), tmp.get(), MPFR_RNDN);
      mpfr_mul(c.get(), c.get(), f_lo.get(), MPFR_RNDN);
      mpfr_sub(c.get(), lo.get(), c.get(), MPFR_RNDN);
      bisect = mpfr_cmp(c.get(), lo.get()) <= 0 || mpfr_cmp(c.get(), hi.get()) >= 0;
    }
    if (bisect) {
      mpfr_add(c.get(), lo.get(), hi.get(), MPFR_RNDN);
      mpfr_div_2ui(c.get(), c.get(), 1, MPFR_RNDN);
    }
    Sample at_c = sample_G(m, c.get(), cfg, opts.max_escalations);
    if (at_c.sign == 0) {
      // c sits inside the evaluation noise around the root: certify a
      // bracket of half the tolerance centred on it
      MpfrValue delta(kRad), a(prec), z(prec);
      mpfr_div_2ui(delta.get(), tol.get(), 2, MPFR_RNDD);
      mpfr_sub(a.get(), c.get(), delta.get(), MPFR_RNDD);
      mpfr_add(z.get(), c.get(), delta.get(), MPFR_RNDU);
      const Sample at_a = sample_G(m, a.get(), cfg, opts.max_escalations);
      const Sample at_z = sample_G(m, z.get(), cfg, opts.max_escalations);
      if (at_a.sign == s_lo && at_z.sign == s_hi) {
        return CertifiedReal::from_endpoints(a.get(), z.get(), prec);
      }
      throw Error(ErrorKind::kUnresolvedBracket,
                  "cannot certify the sign of G_" + std::to_string(m) + " near " + CertifiedReal::from_mpfr(c.get()).mid_string());
    }
    if (at_c.sign == s_lo) {
      mpfr_set(lo.get(), c.get(), MPFR_RNDN);
      mpfr_set(f_lo.get(), at_c.value.get(), MPFR_RNDN);
      if (side == -1) mpfr_div_2ui(f_hi.get(), f_hi.get(), 1, MPFR_RNDN);
      side = -1;
    } else {
      mpfr_set(hi.get(), c.get(), MPFR_RNDN);
      mpfr_set(f_hi.get(), at_c.value.get(), MPFR_RNDN);
      if (side == 1) mpfr_div_2ui(f_lo.get(), f_lo.get(), 1, MPFR_RNDN);
      side = 1;
    }
    mpfr_sub(width.get(), hi.get(), lo.get(), MPFR_RNDU);
    mpfr_mul_2si(tmp.get(), prev_width.get(), -1, MPFR_RNDN);
    stalls = mpfr_cmp(width.get(), tmp.get()) > 0 ? stalls + 1 : 0;
    if (stalls == 0) mpfr_set(prev_width.get(), width.get(), MPFR_RNDN);
  }
  throw Error(ErrorKind::kUnresolvedBracket, "zero refinement of G_" + std::to_string(m) + " did not converge");
}

MpfrValue grid_point(long i, long per_unit, mpfr_prec_t prec) {
  MpfrValue p(prec);
  mpfr_set_si(p.get(), i, MPFR_RNDN);
  mpfr_div_si(p.get(), p.get(), per_unit, MPFR_RNDN);
  return p;
}

int compare_mid(const CertifiedReal& a, const CertifiedReal& b) { return mpfr_cmp(a.mid(), b.mid()); }

void sort_by_enclosure(std::vector<ZeroRecord>& zs) {
  std::sort(zs.begin(), zs.end(),
            [](const ZeroRecord& a, const ZeroRecord& b) { return compare_mid(a.enclosure, b.enclosure) < 0; });
}

void require_precision(const PrecisionConfig& cfg) { cfg.validate(); }

std::vector<ZeroRecord> zeros_up_to(int m_max, double x_max, const PrecisionConfig& cfg,
                                    const ScanOptions& opts) {
  std::vector<std::vector<ZeroRecord>> per_order(static_cast<std::size_t>(m_max + 1));
  detail::parallel_for(per_order.size(), [&](std::size_t i) {
    per_order[i] = find_zeros(static_cast<int>(i), x_max, cfg, opts);
  });
  std::vector<ZeroRecord> all;
  for (auto& v : per_order) {
    for (auto& z : v) all.push_back(std::move(z));
  }
  sort_by_enclosure(all);
  return all;
}

}  // namespace

std::vector<ZeroRecord> find_zeros(int m, double x_max, const PrecisionConfig& cfg, const ScanOptions& opts) {
  require_precision(cfg);
  if (m < 0) throw Error(ErrorKind::kDomain, "find_zeros requires a nonnegative order");
  if (!(x_max > 0) || x_max > opts.scan_ceiling) {
    throw Error(ErrorKind::kDomain, "x_max must lie in (0, " + std::to_string(opts.scan_ceiling) + "]");
  }
  const mpfr_prec_t prec = cfg.working_bits;
  const long per_unit = opts.grid_per_unit;
  const long last = static_cast<long>(std::floor(x_max * static_cast<double>(per_unit) + 1e-9));
  // J_m and J_{m+1} are positive on (0, m], hence so is G_m
  const long first = std::max(1L, static_cast<long>(m) * per_unit);
  if (first > last) return {};

  std::vector<MpfrValue> xs;
  for (long i = first; i <= last; ++i) xs.push_back(grid_point(i, per_unit, prec));
  if (static_cast<double>(last) / static_cast<double>(per_unit) < x_max) {
    MpfrValue end(prec);
    mpfr_set_d(end.get(), x_max, MPFR_RNDN);
    xs.push_back(std::move(end));
  }

  std::vector<Sample> samples;
  samples.reserve(xs.size());
  for (auto& x : xs) {
    Sample s = sample_G(m, x.get(), cfg, opts.max_escalations);
    if (s.sign == 0) {
      // grid point landed on a zero to working precision; nudge it
      MpfrValue eps(kRad);
      mpfr_set_ui_2exp(eps.get(), 1, -40, MPFR_RNDN);
      mpfr_add(x.get(), x.get(), eps.get(), MPFR_RNDN);
      s = sample_G(m, x.get(), cfg, opts.max_escalations);
      if (s.sign == 0) {
        throw Error(ErrorKind::kUnresolvedBracket,
                    "sign of G_" + std::to_string(m) + " undetermined at grid point");
      }
    }
    samples.push_back(std::move(s));
  }

  std::vector<Bracket> brackets;
  for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
    if (samples[j].sign != samples[j + 1].sign) {
      brackets.push_back({xs[j], xs[j + 1], samples[j], samples[j + 1]});
    }
  }

  // A local minimum of |G| without a sign change may hide a close pair of
  // crossings; rescan the two neighbouring cells on the fine grid.
  const long ratio = std::max(1, opts.fine_per_unit / opts.grid_per_unit);
  for (std::size_t j = 1; j + 1 < xs.size(); ++j) {
    if (samples[j - 1].sign != samples[j].sign || samples[j].sign != samples[j + 1].sign) continue;
    if (mpfr_cmpabs(samples[j].value.get(), samples[j - 1].value.get()) > 0 ||
        mpfr_cmpabs(samples[j].value.get(), samples[j + 1].value.get()) > 0) {
      continue;
    }
    MpfrValue prev_x = xs[j - 1];
    Sample prev = samples[j - 1];
    MpfrValue span(prec), t(prec);
    mpfr_sub(span.get(), xs[j + 1].get(), xs[j - 1].get(), MPFR_RNDN);
    for (long q = 1; q <= 2 * ratio; ++q) {
      if (q == 2 * ratio) {
        t = xs[j + 1];
      } else {
        mpfr_mul_si(t.get(), span.get(), q, MPFR_RNDN);
        mpfr_div_si(t.get(), t.get(), 2 * ratio, MPFR_RNDN);
        mpfr_add(t.get(), t.get(), xs[j - 1].get(), MPFR_RNDN);
      }
      Sample cur = q == 2 * ratio ? samples[j + 1] : sample_G(m, t.get(), cfg, opts.max_escalations);
      if (cur.sign == 0) continue;
      if (cur.sign != prev.sign) brackets.push_back({prev_x, t, prev, cur});
      prev_x = t;
      prev = std::move(cur);
    }
  }

  std::sort(brackets.begin(), brackets.end(),
            [](const Bracket& a, const Bracket& b) { return mpfr_cmp(a.lo.get(), b.lo.get()) < 0; });
  std::vector<ZeroRecord> zeros;
  zeros.reserve(brackets.size());
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    zeros.push_back(make_record(m, static_cast<int>(i) + 1, refine_bracket(m, brackets[i], cfg, opts),
                                cfg.working_bits));
  }
  return zeros;
}

ZeroRecord refine_zero(const ZeroRecord& z, const PrecisionConfig& cfg, const ScanOptions& opts) {
  require_precision(cfg);
  Bracket b{z.enclosure.lower(), z.enclosure.upper(), Sample{0, MpfrValue()}, Sample{0, MpfrValue()}};
  b.at_lo = sample_G(z.m, b.lo.get(), cfg, opts.max_escalations);
  b.at_hi = sample_G(z.m, b.hi.get(), cfg, opts.max_escalations);
  if (b.at_lo.sign == 0 || b.at_hi.sign == 0 || b.at_lo.sign == b.at_hi.sign) {
    throw Error(ErrorKind::kUnresolvedBracket, "enclosure endpoints do not certify a sign change");
  }
  return make_record(z.m, z.k, refine_bracket(z.m, std::move(b), cfg, opts), cfg.working_bits);
}

std::vector<ZeroRecord> eigenvalues(int count, const PrecisionConfig& cfg, const ScanOptions& opts) {
  require_precision(cfg);
  if (count < 1 || count > 500) throw Error(ErrorKind::kDomain, "count must lie in [1, 500]");
  PrecisionConfig current = cfg;
  int escalations = 0;
  double x_max = std::min(10.0, opts.scan_ceiling);
  for (;;) {
    // no zero of W_m lies below m, so orders above x_max contribute nothing
    std::vector<ZeroRecord> all = zeros_up_to(static_cast<int>(std::floor(x_max)), x_max, current, opts);
    if (all.size() < static_cast<std::size_t>(count)) {
      if (x_max >= opts.scan_ceiling) throw Error(ErrorKind::kDomain, "count exceeds the scan ceiling");
      x_max = std::min(opts.scan_ceiling, x_max * 1.5);
      continue;
    }
    const std::size_t checked = std::min(all.size(), static_cast<std::size_t>(count) + 1);
    bool ordered = true;
    for (std::size_t i = 0; i + 1 < checked; ++i) {
      if (overlaps(all[i].lambda, all[i + 1].lambda)) ordered = false;
    }
    if (ordered) {
      all.resize(static_cast<std::size_t>(count));
      return all;
    }
    if (escalations++ >= opts.max_escalations) {
      throw Error(ErrorKind::kUnresolvedOrder, "eigenvalue enclosures overlap at maximal precision");
    }
    current = current.escalated();
  }
}

GapReport gap_scan(int m_max, double x_max, const PrecisionConfig& cfg, const ScanOptions& opts) {
  require_precision(cfg);
  if (m_max < 0 || m_max > 32) throw Error(ErrorKind::kDomain, "m_max must lie in [0, 32]");
  PrecisionConfig current = cfg;
  for (int escalations = 0;; ++escalations) {
    const std::vector<ZeroRecord> all = zeros_up_to(m_max, x_max, current, opts);
    GapReport report;
    bool resolved = true;
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      if (all[i].m == all[i + 1].m) continue;
      CertifiedReal gap = all[i + 1].enclosure - all[i].enclosure;
      if (gap.sign() <= 0) resolved = false;
      report.pairs.push_back({all[i], all[i + 1], std::move(gap)});
    }
    if (resolved) {
      std::sort(report.pairs.begin(), report.pairs.end(),
                [](const GapPair& a, const GapPair& b) { return compare_mid(a.gap, b.gap) < 0; });
      if (!report.pairs.empty()) report.min_gap = report.pairs.front().gap;
      return report;
    }
    if (escalations >= opts.max_escalations) {
      throw Error(ErrorKind::kUnresolvedOrder, "cross-order gap not certified positive");
    }
    current = current.escalated();
  }
}

std::vector<TripleIndex> candidate_triples(int m_max) {
  std::vector<TripleIndex> out;
  for (int m1 = 0; m1 <= m_max; ++m1) {
    for (int m2 = m1 + 2; m2 <= m_max; ++m2) {
      for (int m3 = m2 + 2; m3 <= m_max; ++m3) out.push_back({m1, m2, m3});
    }
  }
  return out;
}

RefutationSummary refute_all_triples(int m_max, double x_max, const PrecisionConfig& cfg, CoeffTable& table,
                                     const ScanOptions& opts) {
  require_precision(cfg);
  if (m_max < 0 || m_max > 16) throw Error(ErrorKind::kDomain, "m_max must lie in [0, 16]");
  RefutationSummary summary;
  const std::vector<TripleIndex> triples = candidate_triples(m_max);
  summary.triples = triples.size();
  if (triples.empty()) return summary;

  // certificates first: the table is written only in this phase
  std::vector<EliminationCertificate> certs;
  certs.reserve(triples.size());
  for (const auto& t : triples) certs.push_back(eliminate(t, table));

  std::set<int> middle_orders;
  for (const auto& t : triples) middle_orders.insert(t.m2);
  std::map<int, std::vector<ZeroRecord>> zeros;
  for (int m2 : middle_orders) zeros[m2] = find_zeros(m2, x_max, cfg, opts);

  struct Task {
    std::size_t cert;
    std::size_t zero;
  };
  std::vector<Task> tasks;
  for (std::size_t c = 0; c < certs.size(); ++c) {
    for (std::size_t z = 0; z < zeros[triples[c].m2].size(); ++z) tasks.push_back({c, z});
  }
  summary.evaluations.resize(tasks.size());
  detail::parallel_for(tasks.size(), [&](std::size_t i) {
    const EliminationCertificate& cert = certs[tasks[i].cert];
    const ZeroRecord& original = zeros.at(cert.triple.m2)[tasks[i].zero];
    PrecisionConfig current = cfg;
    ZeroRecord zero = original;
    for (int escalations = 0;; ++escalations) {
      const RefutationResult r = refute_triple(cert, zero.enclosure, current);
      if (r.status == RefutationStatus::kRefuted || escalations >= opts.max_escalations) {
        summary.evaluations[i] = {cert.triple, zero.k, r.status, current.working_bits, zero.enclosure, r.r_value};
        return;
      }
      current = current.escalated();
      zero = refine_zero(original, current, opts);
    }
  });
  for (const auto& e : summary.evaluations) {
    (e.status == RefutationStatus::kRefuted ? summary.refuted : summary.inconclusive)++;
  }
  return summary;
}

}  // namespace crossbessel
