#include "crossbessel/elimination.hpp"

#include <string>

#include "crossbessel/error.hpp"

namespace crossbessel {

namespace {

std::string describe(const TripleIndex& t) {
  return "(" + std::to_string(t.m1) + ", " + std::to_string(t.m2) + ", " + std::to_string(t.m3) + ")";
}

}  // namespace

Eliminant eliminate_pair(const Quadratic& up, const Quadratic& down) {
  Eliminant e;
  e.L_x2 = up.a * down.b - down.a * up.b;
  e.M = up.a * down.c - down.a * up.c;
  e.R_full = up.a * e.M * e.M - up.b * e.M * e.L_x2 + up.c * e.L_x2 * e.L_x2;
  return e;
}

TripleIndex TripleIndex::make(int m1, int m2, int m3) {
  TripleIndex t{m1, m2, m3};
  if (m1 < 0 || m2 < m1 + 2 || m3 < m2 + 2) {
    throw Error(ErrorKind::kDomain,
                "triple " + describe(t) + " must satisfy 0 <= m1, m1 + 2 <= m2, m2 + 2 <= m3");
  }
  return t;
}

Quadratic quadratic_up(int m, int n, CoeffTable& table) {
  const CoeffQuad& q = table.get(m + 1, n);
  return {q.A, poly_shift(q.B, 2), q.C};
}

Quadratic quadratic_down(int m, int l, CoeffTable& table) {
  if (m < 1) throw Error(ErrorKind::kDomain, "quadratic_down requires m >= 1");
  const CoeffQuad& q = table.get(-m + 1, l);
  const ExactRational mm(m);
  Quadratic out;
  out.a = poly_shift(q.A, 4);
  out.b = poly_shift(poly_scale(q.A, 4 * mm), 2) + poly_shift(q.B, 6);
  out.c = poly_scale(q.A, 4 * mm * mm) + poly_shift(poly_scale(q.B, 2 * mm) + q.C, 4);
  return out;
}

CertificateChecks check_certificate(const EliminationCertificate& cert, CoeffTable& table) {
  const TripleIndex& t = cert.triple;
  const int m = t.m();
  const ExactPoly& A = table.get(m + 1, t.n()).A;
  const ExactPoly& A_down = table.get(-m + 1, t.l()).A;
  const ExactPoly A4 = poly_mod_xk(A, 4);
  const ExactPoly A4_down = poly_mod_xk(A_down, 4);
  const ExactRational mm(m);

  CertificateChecks c;
  const ExactPoly R_full = poly_shift(cert.R, static_cast<std::size_t>(cert.x_power));
  c.r_nonzero = !cert.R.is_zero();
  c.r_mod_x4 = poly_mod_xk(R_full, 4) ==
               poly_mod_xk(poly_scale(A4 * A4 * A4 * A4_down * A4_down, 16 * mm * mm * mm * mm), 4);
  c.resultant_identity =
      cert.q_up == quadratic_up(m, t.n(), table) && cert.q_down == quadratic_down(m, t.l(), table) &&
      R_full == cert.q_up.a * quadratic_resultant(cert.q_up, cert.q_down);
  const ExactPoly AA = poly_mod_xk(A4 * A4_down, 4);
  c.l_mod_x4 = poly_mod_xk(cert.L, 4) == poly_scale(AA, 4 * mm);
  c.m_mod_x4 = poly_mod_xk(cert.M, 4) == poly_scale(AA, 4 * mm * mm);

  // L, M and R must also be what the two quadratics actually produce
  const Eliminant e = eliminate_pair(cert.q_up, cert.q_down);
  const bool consistent = e.L_x2 == poly_shift(cert.L, 2) && e.M == cert.M && e.R_full == R_full &&
                          cert.R_low_order == cert.R.constant_term();
  if (!consistent) {
    c.resultant_identity = false;
    c.l_mod_x4 = false;
  }
  return c;
}

EliminationCertificate eliminate(const TripleIndex& t, CoeffTable& table) {
  const TripleIndex checked = TripleIndex::make(t.m1, t.m2, t.m3);
  EliminationCertificate cert;
  cert.triple = checked;
  cert.q_up = quadratic_up(checked.m(), checked.n(), table);
  cert.q_down = quadratic_down(checked.m(), checked.l(), table);

  const Eliminant e = eliminate_pair(cert.q_up, cert.q_down);
  if (e.L_x2.is_zero() && e.M.is_zero()) {
    throw Error(ErrorKind::kDegenerateTriple, "linear eliminant vanishes for " + describe(checked));
  }
  cert.L = poly_unshift(e.L_x2, 2);
  cert.M = e.M;
  cert.x_power = static_cast<int>(e.R_full.low_order());
  cert.R = poly_unshift(e.R_full, static_cast<std::size_t>(cert.x_power));
  cert.R_low_order = cert.R.constant_term();
  cert.checks = check_certificate(cert, table);
  if (!cert.checks.all()) {
    throw Error(ErrorKind::kInvariantViolation, "certificate checks failed for " + describe(checked));
  }
  return cert;
}

const char* to_string(RefutationStatus s) noexcept {
  return s == RefutationStatus::kRefuted ? "REFUTED" : "INCONCLUSIVE";
}

RefutationResult refute_triple(const EliminationCertificate& cert, const CertifiedReal& x,
                               const PrecisionConfig& cfg) {
  if (x.sign() <= 0) throw Error(ErrorKind::kDomain, "refutation requires a positive enclosure");
  RefutationResult r;
  r.r_value = poly_eval(cert.R, x, cfg);
  r.l_value = poly_eval(cert.L, x, cfg);
  r.linear_path_nonvanishing = !r.l_value.contains_zero();
  r.status = r.r_value.contains_zero() ? RefutationStatus::kInconclusive : RefutationStatus::kRefuted;
  return r;
}

RefutationResult refute_triple(const TripleIndex& t, const CertifiedReal& x, const PrecisionConfig& cfg,
                               CoeffTable& table) {
  return refute_triple(eliminate(t, table), x, cfg);
}

}  // namespace crossbessel
