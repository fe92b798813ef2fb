#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liedual/io.hpp"

using namespace liedual;

TEST_CASE("scalar strings") {
  CHECK(scalar_str(parse_scalar("-1/2")) == "-1/2");
  CHECK(scalar_str(parse_scalar("4/2")) == "2");
  CHECK(scalar_str(Scalar(0)) == "0");
}

TEST_CASE("element round trip") {
  LieElement a(Domain::Laurent);
  a.body.add_term(-3, parse_scalar("5/3"));
  a.body.add_term(2, Scalar(-7));
  a.central = parse_scalar("1/2");
  const auto j = io::element_to_json(a);
  CHECK(j.at("domain") == "laurent");
  CHECK(j.at("coeffs").at("-3") == "5/3");
  CHECK(io::element_from_json(j) == a);
  // central defaults to zero on parse
  CHECK(io::element_from_json(nlohmann::json{{"domain", "poly"},
                                             {"coeffs", {{"2", "1"}}}}) ==
        LieElement::monomial(AlgebraKind::OneSidedWitt, 2));
  CHECK_THROWS_AS(io::element_from_json(nlohmann::json{{"domain", "poly"},
                                                       {"coeffs", {{"x", "1"}}}}),
                  std::invalid_argument);
}

TEST_CASE("tensor round trips") {
  Tensor2 t(AlgebraKind::Virasoro);
  t.add_term(BasisLabel::exponent(3), BasisLabel::central(), parse_scalar("1/2"));
  t.add_term(BasisLabel::exponent(-1), BasisLabel::exponent(2), Scalar(-4));
  CHECK(io::tensor2_from_json(io::tensor_to_json(t)) == t);
  Tensor3 t3(AlgebraKind::Witt);
  t3.add_term(BasisLabel::exponent(1), BasisLabel::exponent(0), BasisLabel::exponent(-2),
              Scalar(9));
  CHECK(io::tensor3_from_json(io::tensor_to_json(t3)) == t3);
}

TEST_CASE("dual element round trips") {
  const DualElement fin =
      DualElement::finite(Domain::Poly, {{0, Scalar(2)}, {5, parse_scalar("-3/4")}});
  CHECK(io::dual_from_json(io::dual_to_json(fin)) == fin);
  const DualElement rec = DualElement::recursive(
      Domain::Laurent, {2, {Scalar(1), Scalar(1)}, -1, {Scalar(2), parse_scalar("1/3")}});
  CHECK(io::dual_from_json(io::dual_to_json(rec)) == rec);
  // invalid reps are rejected on parse
  nlohmann::json bad = io::dual_to_json(rec);
  bad["rep"]["h"] = {"1", "0"};
  CHECK_THROWS_AS(io::dual_from_json(bad), std::invalid_argument);
}

TEST_CASE("params round trip") {
  const BialgebraParams p(-3, parse_scalar("1/2"), Scalar(3));
  CHECK(io::params_from_json(io::params_to_json(p)) == p);
}

TEST_CASE("random element round trips") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<std::int64_t> exp_dist(-9, 9);
  std::uniform_int_distribution<int> num_dist(-20, 20);
  std::uniform_int_distribution<int> den_dist(1, 9);
  for (int trial = 0; trial < 40; ++trial) {
    LieElement a(Domain::Laurent);
    for (int t = 0; t < 4; ++t) {
      a.body.add_term(exp_dist(rng), Scalar(num_dist(rng)) / Scalar(den_dist(rng)));
    }
    REQUIRE(io::element_from_json(io::element_to_json(a)) == a);
  }
}

TEST_CASE("bracket table serialization") {
  const BracketFamily fam = BracketFamily::witt(AlgebraKind::Witt, 2);
  const BracketTable t = build_table(fam, Window(-2, 2), Provenance::ClosedForm);
  const auto j = io::table_to_json(t);
  const BracketTable back = io::table_from_json(j);
  CHECK(back.entries == t.entries);
  CHECK(back.window == t.window);
  CHECK(back.provenance == t.provenance);
  CHECK(back.family == fam);

  const BracketFamily xy = BracketFamily::xy(
      AlgebraKind::Virasoro, BialgebraParams(3, Scalar(1), parse_scalar("-1/2")));
  const BracketTable t2 = build_table(xy, Window(-1, 1), Provenance::Oracle);
  const BracketTable back2 = io::table_from_json(io::table_to_json(t2));
  CHECK(back2.entries == t2.entries);
  CHECK(back2.family == xy);
  CHECK(back2.provenance == Provenance::Oracle);
}

TEST_CASE("csv and latex emitters") {
  const BracketFamily fam = BracketFamily::witt(AlgebraKind::Witt, 2);
  const BracketTable t = build_table(fam, Window(-3, 3), Provenance::ClosedForm);
  const std::string csv = io::table_to_csv(t);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 50);  // header + 49 rows
  CHECK(csv.rfind("i,j,value\n", 0) == 0);
  const std::string latex = io::table_to_latex(t);
  CHECK(latex.find("\\begin{tabular}") != std::string::npos);
  CHECK(latex.find("\\varepsilon") != std::string::npos);
  // rows are emitted sorted by (i, j); the first data row is (-3, -3)
  CHECK(csv.find("\n-3,-3,") != std::string::npos);
}

TEST_CASE("decomposition report serialization") {
  const DualElement f = DualElement::recursive(
      Domain::Laurent, {2, {Scalar(7), Scalar(-10)}, 0, {Scalar(4), Scalar(17)}});
  const auto j = io::decompose_result_to_json(decompose_components(f));
  CHECK(j.at("type") == "decomposition");
  CHECK(j.at("components").size() == 2);
  const DualElement fib = DualElement::recursive(
      Domain::Poly, {2, {Scalar(1), Scalar(1)}, 0, {Scalar(0), Scalar(1), Scalar(1)}});
  const auto j2 = io::decompose_result_to_json(decompose_components(fib));
  CHECK(j2.at("type") == "irreducible-factors");
  CHECK(j2.at("factors")[0].at("text") == "x^2 - x - 1");
}
