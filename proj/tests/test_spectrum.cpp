#include <doctest.h>

#include "crossbessel/bessel.hpp"
#include "crossbessel/error.hpp"
#include "crossbessel/spectrum.hpp"
#include "support/oracle.hpp"

using namespace crossbessel;

namespace {

const PrecisionConfig kCfg{};

}  // namespace

TEST_CASE("fundamental zero of W_0") {
  const auto zeros = find_zeros(0, 4.0, kCfg);
  REQUIRE(zeros.size() == 1);
  const ZeroRecord& z = zeros[0];
  CHECK(z.m == 0);
  CHECK(z.k == 1);
  CHECK(z.degeneracy == 1);
  CHECK(z.enclosure.lower_double() >= 3.19);
  CHECK(z.enclosure.upper_double() <= 3.20);
  const double w = oracle::bisect([](double x) { return oracle::W(0, x); }, 3.0, 3.5);
  CHECK(std::abs(z.enclosure.mid_double() - w) < 1e-12);
  CHECK(std::abs(z.lambda.mid_double() - 104.36310555884) < 1e-9);
  CHECK(overlaps(z.lambda, pow(z.enclosure, 4)));
}

TEST_CASE("no zeros below the first sign change") {
  CHECK(find_zeros(0, 3.0, kCfg).empty());
  CHECK(find_zeros(5, 5.0, kCfg).empty());
  CHECK(find_zeros(3, 0.5, kCfg).empty());
}

TEST_CASE("zero counts match a fine double-precision scan") {
  CHECK(find_zeros(1, 20.0, kCfg).size() == oracle::fine_zeros(1, 20.0).size());
  for (int m : {0, 4, 9}) {
    const auto zeros = find_zeros(m, 30.0, kCfg);
    const auto ref = oracle::fine_zeros(m, 30.0);
    REQUIRE(zeros.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(zeros[i].k == static_cast<int>(i + 1));
      CHECK(std::abs(zeros[i].enclosure.mid_double() - ref[i]) < 1e-9 * ref[i]);
    }
  }
}

TEST_CASE("zero records are valid sign changes") {
  // endpoints sit within 2^-192 of the zero, so their signs need more bits
  const PrecisionConfig fine = PrecisionConfig::with_bits(1024);
  for (int m : {0, 2, 7}) {
    for (const ZeroRecord& z : find_zeros(m, 25.0, kCfg)) {
      const int lo = eval_G(m, CertifiedReal::from_mpfr(z.enclosure.lower().get()), fine).sign();
      const int hi = eval_G(m, CertifiedReal::from_mpfr(z.enclosure.upper().get()), fine).sign();
      CHECK(lo != 0);
      CHECK(hi != 0);
      CHECK(lo == -hi);
      CHECK(eval_W(m, z.enclosure, kCfg).contains_zero());
      CHECK(z.degeneracy == (m == 0 ? 1 : 2));
      CHECK(z.bits == kCfg.working_bits);
    }
  }
}

TEST_CASE("refinement at higher precision tightens the enclosure") {
  const ZeroRecord z = find_zeros(3, 10.0, kCfg).front();
  const ZeroRecord r = refine_zero(z, PrecisionConfig::with_bits(512));
  CHECK(r.bits == 512);
  CHECK(r.enclosure.rad_double() < z.enclosure.rad_double());
  CHECK(overlaps(r.enclosure, z.enclosure));
}

TEST_CASE("eigenvalue enumeration") {
  const auto first = eigenvalues(1, kCfg);
  REQUIRE(first.size() == 1);
  CHECK(first[0].m == 0);
  CHECK(first[0].degeneracy == 1);
  CHECK(std::abs(first[0].lambda.mid_double() - 104.36) < 0.01);

  const auto eig = eigenvalues(12, kCfg);
  REQUIRE(eig.size() == 12);
  for (std::size_t i = 1; i < eig.size(); ++i) {
    CHECK(eig[i - 1].lambda.mid_double() < eig[i].lambda.mid_double());
    CHECK_FALSE(overlaps(eig[i - 1].lambda, eig[i].lambda));
  }
  CHECK_THROWS_AS(eigenvalues(0, kCfg), Error);
  CHECK_THROWS_AS(eigenvalues(501, kCfg), Error);
}

TEST_CASE("first zeros increase with the order") {
  double prev = 0.0;
  for (int m = 0; m <= 11; ++m) {
    const auto zeros = find_zeros(m, 20.0, kCfg);
    REQUIRE_FALSE(zeros.empty());
    CHECK(zeros.front().enclosure.mid_double() > prev);
    prev = zeros.front().enclosure.mid_double();
  }
}

TEST_CASE("gap scans") {
  CHECK(gap_scan(0, 20.0, kCfg).pairs.empty());
  CHECK_FALSE(gap_scan(0, 20.0, kCfg).min_gap.has_value());
  const GapReport adjacent = gap_scan(1, 20.0, kCfg);
  REQUIRE_FALSE(adjacent.pairs.empty());
  for (const auto& p : adjacent.pairs) {
    CHECK(p.gap.sign() == 1);
    CHECK(p.first.m != p.second.m);
  }
  REQUIRE(adjacent.min_gap.has_value());
  CHECK(adjacent.min_gap->sign() == 1);
  for (std::size_t i = 1; i < adjacent.pairs.size(); ++i) {
    CHECK(adjacent.pairs[i - 1].gap.mid_double() <= adjacent.pairs[i].gap.mid_double());
  }
  CHECK_THROWS_AS(gap_scan(33, 10.0, kCfg), Error);
}

TEST_CASE("candidate triples") {
  CHECK(candidate_triples(2).empty());
  CHECK(candidate_triples(3).empty());
  const auto four = candidate_triples(4);
  REQUIRE(four.size() == 1);
  CHECK(four[0] == TripleIndex::make(0, 2, 4));
  const auto six = candidate_triples(6);
  CHECK(six.size() == 10);
  for (const auto& t : six) {
    CHECK(t.m2 - t.m1 >= 2);
    CHECK(t.m3 - t.m2 >= 2);
    CHECK(t.m3 <= 6);
  }
}

TEST_CASE("all triples up to order 4 are refuted") {
  CoeffTable table;
  const RefutationSummary s = refute_all_triples(4, 20.0, kCfg, table);
  CHECK(s.triples == 1);
  CHECK(s.evaluations.size() == oracle::fine_zeros(2, 20.0).size());
  CHECK(s.refuted == s.evaluations.size());
  CHECK(s.inconclusive == 0);
  for (const auto& e : s.evaluations) {
    CHECK(e.status == RefutationStatus::kRefuted);
    CHECK_FALSE(e.r_value.contains_zero());
  }
  CHECK(refute_all_triples(2, 5.0, kCfg, table).evaluations.empty());
  CHECK_THROWS_AS(refute_all_triples(17, 5.0, kCfg, table), Error);
}
