#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>
#include <stdexcept>
#include <vector>

#include "qp/series.hpp"

using namespace qp;

TEST_CASE("checked arithmetic") {
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(6, 7) == 42);
  const Coeff big = std::numeric_limits<Coeff>::max();
  CHECK(checked_add(big, 0) == big);
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big / 2, 3), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(1ULL << 33, 1ULL << 33), std::overflow_error);
}

TEST_CASE("truncated univariate product") {
  UniSeries a = uniseries_one(2);
  a.c = {1, 1, 1};
  UniSeries b = a;
  uniseries_mul(a, b);
  CHECK(a.c == std::vector<Coeff>{1, 2, 3});

  UniSeries c = uniseries_one(1);
  c.c = {1, 1};
  uniseries_mul(c, c);
  CHECK(c.c == std::vector<Coeff>{1, 2});
}

TEST_CASE("bounded-part partition series") {
  const UniSeries two = pochhammer_inverse(2, 5);
  CHECK(two.c == std::vector<Coeff>{1, 1, 2, 2, 3, 3});
  const UniSeries none = pochhammer_inverse(0, 3);
  CHECK(none.c == std::vector<Coeff>{1, 0, 0, 0});
  const UniSeries ones = pochhammer_inverse(1, 4);
  CHECK(ones.c == std::vector<Coeff>{1, 1, 1, 1, 1});
  CHECK(pochhammer_inverse(3, 10).c[10] == 14);
  CHECK_THROWS_AS(pochhammer_inverse(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(pochhammer_inverse(2, -1), std::invalid_argument);
}

TEST_CASE("partition oracle agrees with the recurrence") {
  CHECK(partition_count_oracle(3, 10) == 14);
  CHECK(partition_count_oracle(0, 0) == 1);
  CHECK(partition_count_oracle(0, 4) == 0);
  CHECK(partition_count_oracle(5, 0) == 1);
  for (int r = 0; r <= 5; ++r) {
    const UniSeries s = pochhammer_inverse(r, 25);
    for (long long n = 0; n <= 25; ++n)
      CHECK(s.c[static_cast<size_t>(n)] == partition_count_oracle(r, n));
  }
}

TEST_CASE("sparse series accumulation") {
  TruncatedSeries s = series_make(3, 2);
  CHECK(s.max_degree == 3);
  CHECK(s.num_colors == 2);
  s.add_term(1, {1, 0}, 2);
  s.add_term(1, {1, 0}, 3);
  CHECK(s.coefficient(1, {1, 0}) == 5);
  CHECK(s.coefficient(1, {0, 1}) == 0);
  CHECK(s.coefficient(2, {1, 0}) == 0);
  s.add_term(2, {0, 0}, 0);  // dropped
  CHECK(s.terms.size() == 1);

  CHECK_THROWS_AS(s.add_term(4, {1, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(s.add_term(-1, {1, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(s.add_term(1, {1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(s.add_term(1, {1, -1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(series_make(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(series_make(3, 0), std::invalid_argument);
}

TEST_CASE("termwise sum") {
  TruncatedSeries a = series_make(2, 2);
  a.add_term(0, {0, 0}, 1);
  a.add_term(1, {1, 0}, 2);
  TruncatedSeries b = series_make(2, 2);
  b.add_term(1, {1, 0}, 1);
  b.add_term(2, {0, 2}, 4);
  const TruncatedSeries sum = series_add(a, b);
  CHECK(sum.coefficient(0, {0, 0}) == 1);
  CHECK(sum.coefficient(1, {1, 0}) == 3);
  CHECK(sum.coefficient(2, {0, 2}) == 4);
  CHECK(sum.terms.size() == 3);
  CHECK_THROWS_AS(series_add(a, series_make(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(series_add(a, series_make(2, 3)), std::invalid_argument);
}

TEST_CASE("monomial shift") {
  TruncatedSeries s = series_make(2, 2);
  s.add_term(1, {1, 0}, 2);
  s.add_term(2, {0, 1}, 3);
  const TruncatedSeries shifted = series_scale_shift(s, 1, {0, 1});
  CHECK(shifted.coefficient(2, {1, 1}) == 2);
  CHECK(shifted.terms.size() == 1);  // the degree-2 term fell off the end
  const TruncatedSeries same = series_scale_shift(s, 0, {0, 0});
  CHECK(same == s);
  CHECK_THROWS_AS(series_scale_shift(s, -1, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(series_scale_shift(s, 0, {0}), std::invalid_argument);
  CHECK_THROWS_AS(series_scale_shift(s, 0, {0, -1}), std::invalid_argument);
}

namespace {

TruncatedSeries level_one_sample() {
  TruncatedSeries s = series_make(1, 2);
  s.add_term(0, {0, 0}, 1);
  s.add_term(1, {1, 0}, 1);
  s.add_term(1, {0, 1}, 1);
  s.add_term(1, {1, 1}, 1);
  return s;
}

}  // namespace

TEST_CASE("text rendering") {
  CHECK(series_to_text(series_make(4, 2)) == "0");
  CHECK(series_to_text(level_one_sample()) == "1 + q*(y1 + y2 + y1*y2)");

  TruncatedSeries s = series_make(3, 2);
  s.add_term(2, {2, 0}, 1);
  CHECK(series_to_text(s) == "q^2*(y1^2)");
  s.add_term(2, {1, 2}, 3);
  CHECK(series_to_text(s) == "q^2*(y1^2 + 3*y1*y2^2)");
  s.add_term(0, {0, 0}, 2);
  CHECK(series_to_text(s) == "2 + q^2*(y1^2 + 3*y1*y2^2)");

  // Within one degree: total exponent first, then lower colors last, so
  // y1 < y2 < y1*y2 < y2^2.
  TruncatedSeries t = series_make(1, 2);
  t.add_term(1, {0, 2}, 1);
  t.add_term(1, {1, 1}, 1);
  t.add_term(1, {0, 1}, 1);
  t.add_term(1, {1, 0}, 1);
  CHECK(series_to_text(t) == "q*(y1 + y2 + y1*y2 + y2^2)");
}

TEST_CASE("csv rendering") {
  CHECK(series_to_csv(series_make(1, 3)) == "q,n_1,n_2,n_3,coeff\n");
  CHECK(series_to_csv(level_one_sample()) ==
        "q,n_1,n_2,coeff\n"
        "0,0,0,1\n"
        "1,0,1,1\n"
        "1,1,0,1\n"
        "1,1,1,1\n");
}

TEST_CASE("json rendering") {
  TruncatedSeries s = series_make(1, 2);
  s.add_term(1, {2, 0}, 3);
  const std::string expected =
      "{\n"
      "  \"max_degree\": 1,\n"
      "  \"num_colors\": 2,\n"
      "  \"terms\": [\n"
      "    {\n"
      "      \"q\": 1,\n"
      "      \"colors\": [\n"
      "        2,\n"
      "        0\n"
      "      ],\n"
      "      \"coeff\": 3\n"
      "    }\n"
      "  ]\n"
      "}";
  CHECK(series_to_json(s) == expected);

  const std::string empty_expected =
      "{\n"
      "  \"max_degree\": 2,\n"
      "  \"num_colors\": 1,\n"
      "  \"terms\": []\n"
      "}";
  CHECK(series_to_json(series_make(2, 1)) == empty_expected);
}
