#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liedual/lie.hpp"

using namespace liedual;

namespace {

LaurentElement lau(Domain d, std::initializer_list<std::pair<std::int64_t, int>> terms) {
  LaurentElement out(d);
  for (const auto& [e, c] : terms) out.add_term(e, Scalar(c));
  return out;
}

LieElement random_element(std::mt19937& rng, AlgebraKind kind, std::int64_t lo,
                          std::int64_t hi, int max_terms) {
  std::uniform_int_distribution<std::int64_t> exp_dist(lo, hi);
  std::uniform_int_distribution<int> coeff_dist(-6, 6);
  std::uniform_int_distribution<int> den_dist(1, 4);
  std::uniform_int_distribution<int> count_dist(0, max_terms);
  LieElement out(domain_of(kind));
  const int count = count_dist(rng);
  for (int t = 0; t < count; ++t) {
    out.body.add_term(exp_dist(rng), Scalar(coeff_dist(rng)) / Scalar(den_dist(rng)));
  }
  if (kind == AlgebraKind::Virasoro) out.central = Scalar(coeff_dist(rng));
  return out;
}

}  // namespace

TEST_CASE("scalars stay in lowest terms with positive denominators") {
  const Scalar a = scalar_from_fraction(BigInt(6), BigInt(-4));
  CHECK(scalar_str(a) == "-3/2");
  CHECK(numerator(a) == -3);
  CHECK(denominator(a) == 2);
  CHECK(scalar_str(parse_scalar("0/7")) == "0");
  CHECK(parse_scalar("-1/2") + parse_scalar("3") == parse_scalar("5/2"));
  CHECK(parse_scalar("1/3") * Scalar(3) == 1);
  CHECK_THROWS_AS(parse_scalar("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/"), std::invalid_argument);
  CHECK_THROWS_AS(scalar_from_fraction(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("laurent multiplication is the Cauchy product") {
  CHECK(multiply(lau(Domain::Laurent, {{2, 1}}), lau(Domain::Laurent, {{3, 1}})) ==
        lau(Domain::Laurent, {{5, 1}}));
  // (x + x^-1)(x - x^-1) = x^2 - x^-2
  CHECK(multiply(lau(Domain::Laurent, {{1, 1}, {-1, 1}}),
                 lau(Domain::Laurent, {{1, 1}, {-1, -1}})) ==
        lau(Domain::Laurent, {{2, 1}, {-2, -1}}));
  // (1 + 2x)(3 + x) = 3 + 7x + 2x^2
  CHECK(multiply(lau(Domain::Poly, {{0, 1}, {1, 2}}), lau(Domain::Poly, {{0, 3}, {1, 1}})) ==
        lau(Domain::Poly, {{0, 3}, {1, 7}, {2, 2}}));
  CHECK_THROWS_AS(multiply(lau(Domain::Poly, {{1, 1}}), lau(Domain::Laurent, {{1, 1}})),
                  std::invalid_argument);
}

TEST_CASE("poly domain rejects negative exponents") {
  LaurentElement p(Domain::Poly);
  CHECK_THROWS_AS(p.add_term(-1, Scalar(1)), std::invalid_argument);
  CHECK_NOTHROW(p.add_term(-1, Scalar(0)));  // zero terms are never stored
  CHECK(p.is_zero());
}

TEST_CASE("derivation follows the power rule") {
  CHECK(derive(lau(Domain::Laurent, {{3, 1}})) == lau(Domain::Laurent, {{2, 3}}));
  CHECK(derive(lau(Domain::Poly, {{0, 5}})).is_zero());
  CHECK(derive(lau(Domain::Laurent, {{-2, 1}})) == lau(Domain::Laurent, {{-3, -2}}));
}

TEST_CASE("bracket examples") {
  const auto witt = AlgebraKind::Witt;
  CHECK(bracket(witt, LieElement::monomial(witt, 1), LieElement::monomial(witt, 2)) ==
        LieElement::monomial(witt, 2));
  CHECK(bracket(witt, LieElement::monomial(witt, 3), LieElement::monomial(witt, 3))
            .is_zero());
  // Virasoro: [x^3, x^-1] = -4x + (1/2)c
  const auto vir = AlgebraKind::Virasoro;
  const LieElement got =
      bracket(vir, LieElement::monomial(vir, 3), LieElement::monomial(vir, -1));
  CHECK(got.body == lau(Domain::Laurent, {{1, -4}}));
  CHECK(got.central == parse_scalar("1/2"));
}

TEST_CASE("bracket rejects kind mismatches") {
  const LieElement poly_elem = LieElement::monomial(AlgebraKind::OneSidedWitt, 1);
  const LieElement lau_elem = LieElement::monomial(AlgebraKind::Witt, 1);
  CHECK_THROWS_AS(bracket(AlgebraKind::Witt, poly_elem, lau_elem),
                  std::invalid_argument);
  LieElement with_central = lau_elem;
  with_central.central = Scalar(1);
  CHECK_THROWS_AS(bracket(AlgebraKind::Witt, with_central, lau_elem),
                  std::invalid_argument);
  CHECK_NOTHROW(bracket(AlgebraKind::Virasoro, with_central, lau_elem));
}

TEST_CASE("central inputs bracket to zero") {
  const auto vir = AlgebraKind::Virasoro;
  const LieElement c = LieElement::central_element(Scalar(3));
  CHECK(bracket(vir, c, LieElement::monomial(vir, 5)).is_zero());
  CHECK(bracket(vir, LieElement::monomial(vir, 5), c).is_zero());
}

TEST_CASE("bracket agrees with a d(b) - d(a) b on random elements") {
  std::mt19937 rng(20240811);
  for (const auto kind : {AlgebraKind::OneSidedWitt, AlgebraKind::Witt}) {
    const std::int64_t lo = kind == AlgebraKind::OneSidedWitt ? 0 : -10;
    for (int trial = 0; trial < 60; ++trial) {
      const LieElement a = random_element(rng, kind, lo, 10, 4);
      const LieElement b = random_element(rng, kind, lo, 10, 4);
      CHECK(bracket(kind, a, b).body ==
            multiply(a.body, derive(b.body)) - multiply(derive(a.body), b.body));
    }
  }
}

TEST_CASE("bracket is bilinear and antisymmetric on sampled elements") {
  std::mt19937 rng(7);
  for (const auto kind :
       {AlgebraKind::OneSidedWitt, AlgebraKind::Witt, AlgebraKind::Virasoro}) {
    const std::int64_t lo = kind == AlgebraKind::OneSidedWitt ? 0 : -10;
    for (int trial = 0; trial < 40; ++trial) {
      const LieElement a = random_element(rng, kind, lo, 10, 4);
      const LieElement b = random_element(rng, kind, lo, 10, 4);
      const LieElement c = random_element(rng, kind, lo, 10, 4);
      CHECK(bracket(kind, a, b) == -bracket(kind, b, a));
      const Scalar s = parse_scalar("3/2");
      CHECK(bracket(kind, a + b * s, c) ==
            bracket(kind, a, c) + bracket(kind, b, c) * s);
    }
  }
}

TEST_CASE("jacobi identity on basis triples") {
  for (const auto kind :
       {AlgebraKind::OneSidedWitt, AlgebraKind::Witt, AlgebraKind::Virasoro}) {
    const std::int64_t lo = kind == AlgebraKind::OneSidedWitt ? 0 : -6;
    for (std::int64_t i = lo; i <= 6; ++i) {
      for (std::int64_t j = lo; j <= 6; ++j) {
        for (std::int64_t l = lo; l <= 6; ++l) {
          const LieElement a = LieElement::monomial(kind, i);
          const LieElement b = LieElement::monomial(kind, j);
          const LieElement c = LieElement::monomial(kind, l);
          const LieElement cyc = bracket(kind, bracket(kind, a, b), c) +
                                 bracket(kind, bracket(kind, b, c), a) +
                                 bracket(kind, bracket(kind, c, a), b);
          REQUIRE(cyc.is_zero());
        }
      }
    }
  }
}

TEST_CASE("virasoro central term appears only at m + n = 0, m outside {-1,0,1}") {
  const auto vir = AlgebraKind::Virasoro;
  for (std::int64_t m = -10; m <= 10; ++m) {
    for (std::int64_t n = -10; n <= 10; ++n) {
      const LieElement got = bracket(vir, LieElement::monomial(vir, m + 1),
                                     LieElement::monomial(vir, n + 1));
      const bool expect_central = m + n == 0 && m != -1 && m != 0 && m != 1;
      CHECK((got.central != 0) == expect_central);
      if (expect_central) {
        CHECK(got.central == (Scalar(m) * Scalar(m) * Scalar(m) - Scalar(m)) / 12);
      }
    }
  }
}

TEST_CASE("witt bracket on monomials is (j - i) x^(i+j-1)") {
  const auto witt = AlgebraKind::Witt;
  for (std::int64_t i = -10; i <= 10; ++i) {
    for (std::int64_t j = -10; j <= 10; ++j) {
      const LieElement got =
          bracket(witt, LieElement::monomial(witt, i), LieElement::monomial(witt, j));
      LieElement want(Domain::Laurent);
      want.body.add_term(i + j - 1, Scalar(j - i));
      CHECK(got == want);
    }
  }
}
