#include <doctest.h>

#include <random>

#include "crossbessel/certified_real.hpp"
#include "crossbessel/error.hpp"

using namespace crossbessel;

namespace {

mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 997);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("rational enclosures contain their value") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const mpq_class q = random_rational(rng);
    for (int prec : {64, 128, 256}) {
      const CertifiedReal x = CertifiedReal::from_rational(q, prec);
      CHECK(x.contains(q));
    }
  }
}

TEST_CASE("arithmetic keeps exact results inside the enclosure") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const mpq_class a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    const CertifiedReal A = CertifiedReal::from_rational(a, 96);
    const CertifiedReal B = CertifiedReal::from_rational(b, 96);
    const CertifiedReal C = CertifiedReal::from_rational(c, 96);
    CHECK((A + B).contains(mpq_class(a + b)));
    CHECK((A - B).contains(mpq_class(a - b)));
    CHECK((A * B).contains(mpq_class(a * b)));
    CHECK((A * B - C * A + B).contains(mpq_class(a * b - c * a + b)));
    if (b != 0) CHECK((A / B).contains(mpq_class(a / b)));
    CHECK(A.mul_si(-7).contains(mpq_class(a * -7)));
    CHECK(A.div_ui(9).contains(mpq_class(a / 9)));
    CHECK(A.mul_2si(-5).contains(mpq_class(a / 32)));
    CHECK(pow(A, 5).contains(mpq_class(a * a * a * a * a)));
    CHECK(abs(A).contains(mpq_class(abs(a))));
  }
}

TEST_CASE("exact operations stay exact") {
  const CertifiedReal a = CertifiedReal::from_long(3, 128);
  const CertifiedReal b = CertifiedReal::from_long(-5, 128);
  CHECK((a * b).is_exact());
  CHECK((a + b).is_exact());
  CHECK((a * b).mid_double() == -15.0);
  CHECK_FALSE(CertifiedReal::from_rational(mpq_class(1, 3), 128).is_exact());
}

TEST_CASE("sign and zero containment") {
  CHECK(CertifiedReal::from_long(2, 64).sign() == 1);
  CHECK(CertifiedReal::from_long(-2, 64).sign() == -1);
  CHECK(CertifiedReal(64).sign() == 0);
  const CertifiedReal wide = CertifiedReal::from_decimal("0.1", 64) - CertifiedReal::from_decimal("0.1", 64);
  CHECK(wide.contains_zero());
  CHECK(wide.sign() == 0);
}

TEST_CASE("division by an enclosure of zero is a domain error") {
  const CertifiedReal one = CertifiedReal::from_long(1, 64);
  try {
    (void)(one / CertifiedReal(64));
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDomain);
  }
}

TEST_CASE("decimal literals are read as half-unit intervals") {
  const CertifiedReal x = CertifiedReal::from_decimal("2.404826", 128);
  CHECK(x.contains(mpq_class(2404826, 1000000)));
  CHECK(x.contains(mpq_class(24048255, 10000000)));
  CHECK(x.contains(mpq_class(24048265, 10000000)));
  CHECK_FALSE(x.contains(mpq_class(24048266, 10000000)));
  CHECK(CertifiedReal::from_decimal("-1.5e3", 64).contains(mpq_class(-1500)));
  CHECK_THROWS_AS(CertifiedReal::from_decimal("abc", 64), Error);
}

TEST_CASE("endpoints, intersection and overlap") {
  detail::MpfrValue lo(64), hi(64);
  mpfr_set_d(lo.get(), 1.25, MPFR_RNDN);
  mpfr_set_d(hi.get(), 1.75, MPFR_RNDN);
  const CertifiedReal x = CertifiedReal::from_endpoints(lo.get(), hi.get(), 64);
  CHECK(x.lower_double() <= 1.25);
  CHECK(x.upper_double() >= 1.75);
  const CertifiedReal y = CertifiedReal::from_long(2, 64);
  CHECK_FALSE(overlaps(x, y));
  CHECK_FALSE(intersect(x, y).has_value());
  const auto z = intersect(x, CertifiedReal::from_rational(mpq_class(3, 2), 64));
  REQUIRE(z.has_value());
  CHECK(z->contains(mpq_class(3, 2)));
  CHECK(x.contains(CertifiedReal::from_rational(mpq_class(3, 2), 64)));
}

TEST_CASE("rounding to lower precision widens to keep the value") {
  const mpq_class third(1, 3);
  const CertifiedReal x = CertifiedReal::from_rational(third, 256);
  const CertifiedReal r = x.rounded(64);
  CHECK(r.precision() == 64);
  CHECK(r.contains(third));
  CHECK(r.rad_double() >= x.rad_double());
}
