#include "crossbessel/serialization.hpp"

#include <sstream>

#include "crossbessel/error.hpp"

namespace crossbessel {

using nlohmann::json;

namespace {

std::string poly_str(const ExactPoly& p) { return to_canonical_string(p); }

ExactPoly poly_at(const json& j, const char* key) {
  return poly_from_canonical_string(j.at(key).get<std::string>());
}

ExactRational rational_from(const std::string& s) {
  try {
    ExactRational q(s, 10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::kFormat, "bad rational '" + s + "'");
  }
}

json grid_point(const GridPoint& p) { return {{"m", p.m}, {"n", p.n}, {"x", p.x}}; }

json triple_json(const TripleIndex& t) {
  return {{"m1", t.m1}, {"m2", t.m2}, {"m3", t.m3}, {"l", t.l()}, {"m", t.m()}, {"n", t.n()}};
}

std::string triple_label(const TripleIndex& t) {
  std::ostringstream out;
  out << t.m1 << ' ' << t.m2 << ' ' << t.m3;
  return out.str();
}

}  // namespace

json to_json(const CertifiedReal& x) {
  return {{"mid", x.mid_string()}, {"rad", x.rad_string()}, {"bits", static_cast<long>(x.precision())}};
}

CertifiedReal certified_real_from_json(const json& j) {
  const long bits = j.at("bits").get<long>();
  if (bits < MPFR_PREC_MIN || bits > (1L << 24)) throw Error(ErrorKind::kFormat, "bad enclosure precision");
  detail::MpfrValue mid(bits), rad(CertifiedReal::kRadiusBits);
  const std::string m = j.at("mid").get<std::string>();
  const std::string r = j.at("rad").get<std::string>();
  if (mpfr_set_str(mid.get(), m.c_str(), 10, MPFR_RNDN) != 0 || mpfr_set_str(rad.get(), r.c_str(), 10, MPFR_RNDU) != 0 ||
      mpfr_sgn(rad.get()) < 0) {
    throw Error(ErrorKind::kFormat, "bad enclosure strings");
  }
  CertifiedReal out = CertifiedReal::from_mpfr(mid.get());
  if (!mpfr_zero_p(rad.get())) out.add_error(rad.get());
  return out.precision() == bits ? out : out.rounded(bits);
}

json to_json(const CoeffQuad& q) {
  return {{"m", q.m}, {"n", q.n}, {"A", poly_str(q.A)}, {"B", poly_str(q.B)}, {"B_tilde", poly_str(q.B_tilde)},
          {"C", poly_str(q.C)}};
}

CoeffQuad coeff_quad_from_json(const json& j) {
  CoeffQuad q;
  q.m = j.at("m").get<int>();
  q.n = j.at("n").get<int>();
  q.A = poly_at(j, "A");
  q.B = poly_at(j, "B");
  q.B_tilde = poly_at(j, "B_tilde");
  q.C = poly_at(j, "C");
  return q;
}

json to_json(const Quadratic& q) { return {{"a", poly_str(q.a)}, {"b", poly_str(q.b)}, {"c", poly_str(q.c)}}; }

Quadratic quadratic_from_json(const json& j) { return {poly_at(j, "a"), poly_at(j, "b"), poly_at(j, "c")}; }

json to_json(const EliminationCertificate& cert) {
  const CertificateChecks& c = cert.checks;
  return {{"triple", triple_json(cert.triple)},
          {"q_up", to_json(cert.q_up)},
          {"q_down", to_json(cert.q_down)},
          {"L", poly_str(cert.L)},
          {"M", poly_str(cert.M)},
          {"R", poly_str(cert.R)},
          {"x_power", cert.x_power},
          {"R_low_order", cert.R_low_order.get_str()},
          {"checks",
           {{"r_nonzero", c.r_nonzero},
            {"r_mod_x4", c.r_mod_x4},
            {"resultant_identity", c.resultant_identity},
            {"l_mod_x4", c.l_mod_x4},
            {"m_mod_x4", c.m_mod_x4}}}};
}

EliminationCertificate certificate_from_json(const json& j) {
  EliminationCertificate cert;
  const json& t = j.at("triple");
  cert.triple = TripleIndex::make(t.at("m1").get<int>(), t.at("m2").get<int>(), t.at("m3").get<int>());
  cert.q_up = quadratic_from_json(j.at("q_up"));
  cert.q_down = quadratic_from_json(j.at("q_down"));
  cert.L = poly_at(j, "L");
  cert.M = poly_at(j, "M");
  cert.R = poly_at(j, "R");
  cert.x_power = j.at("x_power").get<int>();
  if (cert.x_power < 0) throw Error(ErrorKind::kFormat, "negative x_power");
  cert.R_low_order = rational_from(j.at("R_low_order").get<std::string>());
  const json& c = j.at("checks");
  cert.checks.r_nonzero = c.at("r_nonzero").get<bool>();
  cert.checks.r_mod_x4 = c.at("r_mod_x4").get<bool>();
  cert.checks.resultant_identity = c.at("resultant_identity").get<bool>();
  cert.checks.l_mod_x4 = c.at("l_mod_x4").get<bool>();
  cert.checks.m_mod_x4 = c.at("m_mod_x4").get<bool>();
  return cert;
}

json to_json(const ZeroRecord& z) {
  return {{"m", z.m},
          {"k", z.k},
          {"enclosure", to_json(z.enclosure)},
          {"lambda", to_json(z.lambda)},
          {"degeneracy", z.degeneracy}};
}

json to_json(const GapReport& report) {
  json pairs = json::array();
  for (const auto& p : report.pairs) {
    pairs.push_back({{"first", to_json(p.first)}, {"second", to_json(p.second)}, {"gap", to_json(p.gap)}});
  }
  return {{"pairs", pairs}, {"min_gap", report.min_gap ? to_json(*report.min_gap) : json(nullptr)}};
}

json to_json(const IdentityReport& report) {
  json failures = json::array();
  for (const auto& p : report.failures) failures.push_back(grid_point(p));
  return {{"identity_name", report.identity_name},
          {"grid", report.grid},
          {"max_residual_radius", to_json(report.max_residual_radius)},
          {"points_checked", report.points_checked},
          {"failures", failures},
          {"passed", report.passed()}};
}

json to_json(const RefutationSummary& summary) {
  json evals = json::array();
  for (const auto& e : summary.evaluations) {
    evals.push_back({{"triple", triple_json(e.triple)},
                     {"k", e.k},
                     {"status", to_string(e.status)},
                     {"bits", e.bits},
                     {"zero", to_json(e.zero)},
                     {"r_value", to_json(e.r_value)}});
  }
  return {{"evaluations", evals},
          {"triples", summary.triples},
          {"refuted", summary.refuted},
          {"inconclusive", summary.inconclusive}};
}

std::string zeros_to_csv(const std::vector<ZeroRecord>& zeros) {
  std::ostringstream out;
  out << "m,k,w_mid,w_rad,lambda_mid,lambda_rad,degeneracy,bits\n";
  for (const auto& z : zeros) {
    out << z.m << ',' << z.k << ',' << z.enclosure.mid_string() << ',' << z.enclosure.rad_string() << ','
        << z.lambda.mid_string() << ',' << z.lambda.rad_string() << ',' << z.degeneracy << ','
        << z.enclosure.precision() << '\n';
  }
  return out.str();
}

std::string gap_report_to_csv(const GapReport& report) {
  std::ostringstream out;
  out << "m_first,k_first,m_second,k_second,gap_mid,gap_rad\n";
  for (const auto& p : report.pairs) {
    out << p.first.m << ',' << p.first.k << ',' << p.second.m << ',' << p.second.k << ',' << p.gap.mid_string()
        << ',' << p.gap.rad_string() << '\n';
  }
  return out.str();
}

std::string identity_reports_to_csv(const std::vector<IdentityReport>& reports) {
  std::ostringstream out;
  out << "identity,points_checked,failures,max_residual_radius,passed\n";
  for (const auto& r : reports) {
    out << r.identity_name << ',' << r.points_checked << ',' << r.failures.size() << ','
        << r.max_residual_radius.mid_string() << ',' << (r.passed() ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string refutation_to_csv(const RefutationSummary& summary) {
  std::ostringstream out;
  out << "m1,m2,m3,k,status,bits,zero_mid,zero_rad,r_mid,r_rad\n";
  for (const auto& e : summary.evaluations) {
    out << e.triple.m1 << ',' << e.triple.m2 << ',' << e.triple.m3 << ',' << e.k << ',' << to_string(e.status)
        << ',' << e.bits << ',' << e.zero.mid_string() << ',' << e.zero.rad_string() << ','
        << e.r_value.mid_string() << ',' << e.r_value.rad_string() << '\n';
  }
  return out.str();
}

std::string coeff_quad_to_csv(const CoeffQuad& q) {
  std::ostringstream out;
  out << "m,n,A,B,B_tilde,C\n"
      << q.m << ',' << q.n << ',' << poly_str(q.A) << ',' << poly_str(q.B) << ',' << poly_str(q.B_tilde) << ','
      << poly_str(q.C) << '\n';
  return out.str();
}

std::string certificate_to_csv(const EliminationCertificate& cert) {
  std::ostringstream out;
  out << "triple,x_power,R_low_order,R_degree,checks\n"
      << triple_label(cert.triple) << ',' << cert.x_power << ',' << cert.R_low_order.get_str() << ','
      << cert.R.degree() << ',' << (cert.checks.all() ? "pass" : "fail") << '\n';
  return out.str();
}

}  // namespace crossbessel
