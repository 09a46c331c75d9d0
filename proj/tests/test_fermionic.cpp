#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "qp/basis_enum.hpp"
#include "qp/fermionic.hpp"

using namespace qp;

namespace {

WeightSpec weight(Family f, int rank, int k0, int kj, int j) {
  return make_weight(make_algebra(f, rank), k0, kj, j);
}

}  // namespace

TEST_CASE("quadratic form of the level-one B2 vacuum") {
  const WeightSpec w = weight(Family::B, 2, 1, 0, 0);
  const QuadraticForm q = build_quadratic_form(w);
  REQUIRE(q.dim == 3);
  CHECK(q.vars == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}});
  CHECK(q.color_offset == std::vector<int>{0, 1});
  const std::vector<std::vector<long long>> expected = {
      {2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}};
  CHECK(q.a2 == expected);
  CHECK(q.linear == std::vector<int>{0, 0, 0});
}

TEST_CASE("linear part marks the shifted slots") {
  const WeightSpec w = weight(Family::B, 2, 0, 1, 2);  // tau = 1, cap(2) = 2
  const QuadraticForm q = build_quadratic_form(w);
  CHECK(q.linear == std::vector<int>{0, 0, 1});

  const WeightSpec g = weight(Family::G2, 2, 0, 1, 2);  // tau = 2, cap(2) = 3
  const QuadraticForm p = build_quadratic_form(g);
  CHECK(p.linear == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("form value equals the combinatorial minimal energy") {
  const std::vector<WeightSpec> cases = {
      weight(Family::B, 2, 1, 0, 0),  weight(Family::B, 3, 1, 1, 3),
      weight(Family::C, 3, 2, 0, 0),  weight(Family::G2, 2, 0, 1, 2),
      weight(Family::F4, 4, 1, 0, 0),
  };
  for (const WeightSpec& w : cases) {
    const QuadraticForm q = build_quadratic_form(w);
    for (const ChargeType& c : admissible_charge_types(w, 5)) {
      const DualChargeType d = conjugate(w, c);
      CHECK(quadratic_form_value(q, stack_dual(w, d)) == minimal_energy(w, d));
    }
  }
}

TEST_CASE("stacking round trip") {
  const WeightSpec w = weight(Family::C, 2, 2, 0, 0);  // caps (2, 4)
  DualChargeType d;
  d.rows = {{2, 1}, {4, 3, 2, 2}};
  const std::vector<int> x = stack_dual(w, d);
  CHECK(x == std::vector<int>{2, 1, 4, 3, 2, 2});
  CHECK(unstack_dual(w, x) == d);
  CHECK_THROWS_AS(stack_dual(w, DualChargeType{{{2, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(unstack_dual(w, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(quadratic_form_value(build_quadratic_form(w), {1, 2}),
                  std::invalid_argument);
}

TEST_CASE("eigenvalue certificate of the level-one B2 vacuum") {
  const WeightSpec w = weight(Family::B, 2, 1, 0, 0);
  const PdBound lambda = check_positive_definite(build_quadratic_form(w));
  // The smallest eigenvalue is 1 - 1/sqrt(2) = 0.29289...; the certificate
  // must lie in (0, that].
  CHECK(lambda.num > 0);
  CHECK(lambda.den > 0);
  CHECK(static_cast<double>(lambda.num) / static_cast<double>(lambda.den) <= 0.2928933);
  CHECK(static_cast<double>(lambda.num) / static_cast<double>(lambda.den) > 0.2);
}

TEST_CASE("identity form certifies exactly one") {
  QuadraticForm q;
  q.dim = 2;
  q.num_colors = 1;
  q.vars = {{1, 1}, {1, 2}};
  q.color_offset = {0};
  q.a2 = {{2, 0}, {0, 2}};
  q.linear = {0, 0};
  const PdBound lambda = check_positive_definite(q);
  CHECK(lambda.num == 1);
  CHECK(lambda.den == 1);
}

TEST_CASE("indefinite forms are rejected") {
  QuadraticForm q;
  q.dim = 2;
  q.num_colors = 1;
  q.vars = {{1, 1}, {1, 2}};
  q.color_offset = {0};
  q.a2 = {{2, -4}, {-4, 2}};
  q.linear = {0, 0};
  CHECK_THROWS_AS(check_positive_definite(q), std::domain_error);
}

TEST_CASE("closed sum reproduces the degree-one census of B2") {
  const WeightSpec w = weight(Family::B, 2, 1, 0, 0);
  const TruncatedSeries f = fermionic_character(w, 1);
  const BasisCensus census = enumerate_basis(w, 1);
  CHECK(f == census.counts);
}

TEST_CASE("closed sum equals the census across families") {
  const std::vector<WeightSpec> cases = {
      weight(Family::B, 2, 0, 1, 2), weight(Family::C, 2, 1, 1, 2),
      weight(Family::G2, 2, 0, 1, 2), weight(Family::B, 3, 1, 0, 0),
  };
  for (const WeightSpec& w : cases) {
    const VerifyReport report = verify_character(w, 6);
    CHECK(report.equal);
    CHECK(report.cases > 0);
    CHECK(!report.first_mismatch.has_value());
  }
}

TEST_CASE("parallel evaluation is independent of the thread count") {
  const WeightSpec w = weight(Family::C, 3, 2, 0, 0);
  const TruncatedSeries one = fermionic_character(w, 6, CrossTerm::Min, 1);
  const TruncatedSeries four = fermionic_character(w, 6, CrossTerm::Min, 4);
  const TruncatedSeries serial = fermionic_character_serial(w, 6);
  CHECK(one == four);
  CHECK(one == serial);
  CHECK(series_to_json(one) == series_to_json(four));
}

TEST_CASE("widening the certified ball changes nothing") {
  const std::vector<WeightSpec> cases = {
      weight(Family::B, 2, 1, 0, 0),
      weight(Family::G2, 2, 1, 1, 2),
      weight(Family::C, 2, 2, 0, 0),
  };
  for (const WeightSpec& w : cases) {
    const TruncatedSeries tight = fermionic_character(w, 6);
    const TruncatedSeries wide = fermionic_character(w, 6, CrossTerm::Min, 0, 2);
    CHECK(tight == wide);
  }
  CHECK_THROWS_AS(fermionic_character(cases[0], 6, CrossTerm::Min, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("verify reports serialize deterministically") {
  VerifyReport equal;
  equal.equal = true;
  equal.max_degree = 10;
  equal.cases = 42;
  CHECK(verify_report_to_text(equal) ==
        "equal: all 42 coefficients match up to degree 10");
  const std::string equal_json =
      "{\n"
      "  \"status\": \"equal\",\n"
      "  \"first_mismatch\": null,\n"
      "  \"max_degree\": 10,\n"
      "  \"cases\": 42\n"
      "}";
  CHECK(verify_report_to_json(equal) == equal_json);

  VerifyReport bad;
  bad.equal = false;
  bad.first_mismatch = VerifyMismatch{3, {1, 0}, 2, 5};
  bad.max_degree = 8;
  bad.cases = 17;
  CHECK(verify_report_to_text(bad) ==
        "mismatch at q=3 colors=[1,0]: enumeration=2 fermionic=5 "
        "(degree limit 8, 17 coefficients compared)");
  const std::string bad_json =
      "{\n"
      "  \"status\": \"mismatch\",\n"
      "  \"first_mismatch\": {\n"
      "    \"q\": 3,\n"
      "    \"colors\": [\n"
      "      1,\n"
      "      0\n"
      "    ],\n"
      "    \"enumeration\": 2,\n"
      "    \"fermionic\": 5\n"
      "  },\n"
      "  \"max_degree\": 8,\n"
      "  \"cases\": 17\n"
      "}";
  CHECK(verify_report_to_json(bad) == bad_json);
}

TEST_CASE("input validation") {
  const WeightSpec w = weight(Family::B, 2, 1, 0, 0);
  CHECK_THROWS_AS(fermionic_character(w, -1), std::invalid_argument);
  CHECK_THROWS_AS(fermionic_character(w, 3, CrossTerm::Min, -2), std::invalid_argument);
  CHECK_THROWS_AS(fermionic_character_serial(w, -3), std::invalid_argument);
}
