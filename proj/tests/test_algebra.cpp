#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "qp/algebra.hpp"

using namespace qp;

TEST_CASE("family names parse and print") {
  CHECK(family_name(Family::B) == "B");
  CHECK(family_name(Family::C) == "C");
  CHECK(family_name(Family::F4) == "F4");
  CHECK(family_name(Family::G2) == "G2");
  CHECK(parse_family("B") == Family::B);
  CHECK(parse_family("C") == Family::C);
  CHECK(parse_family("F4") == Family::F4);
  CHECK(parse_family("G2") == Family::G2);
  CHECK_THROWS_AS(parse_family("A"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family(""), std::invalid_argument);
}

TEST_CASE("charge scaling factors per family") {
  CHECK(make_algebra(Family::B, 2).nu == std::vector<int>{1, 2});
  CHECK(make_algebra(Family::B, 4).nu == std::vector<int>{1, 1, 1, 2});
  CHECK(make_algebra(Family::C, 2).nu == std::vector<int>{1, 2});
  CHECK(make_algebra(Family::C, 4).nu == std::vector<int>{1, 2, 2, 2});
  CHECK(make_algebra(Family::F4, 4).nu == std::vector<int>{1, 1, 2, 2});
  CHECK(make_algebra(Family::G2, 2).nu == std::vector<int>{1, 3});
}

TEST_CASE("rank restrictions") {
  CHECK_THROWS_AS(make_algebra(Family::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_algebra(Family::C, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_algebra(Family::F4, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_algebra(Family::F4, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_algebra(Family::G2, 3), std::invalid_argument);
  CHECK_NOTHROW(make_algebra(Family::B, 7));
  CHECK_NOTHROW(make_algebra(Family::C, 2));
}

TEST_CASE("charge factor ratios") {
  const AlgebraData b3 = make_algebra(Family::B, 3);
  CHECK(b3.rho_of(2) == 1);
  CHECK(b3.rho_of(3) == 2);
  const AlgebraData c3 = make_algebra(Family::C, 3);
  CHECK(c3.rho_of(2) == 2);
  CHECK(c3.rho_of(3) == 1);
  const AlgebraData f4 = make_algebra(Family::F4, 4);
  CHECK(f4.rho_of(2) == 1);
  CHECK(f4.rho_of(3) == 2);
  CHECK(f4.rho_of(4) == 1);
  const AlgebraData g2 = make_algebra(Family::G2, 2);
  CHECK(g2.rho_of(2) == 3);
  CHECK_THROWS_AS(g2.rho_of(1), std::invalid_argument);
  CHECK_THROWS_AS(g2.rho_of(3), std::invalid_argument);
  CHECK_THROWS_AS(g2.nu_of(0), std::invalid_argument);
  CHECK(g2.nu_of(2) == 3);
}

TEST_CASE("supported distinguished colors") {
  CHECK(allowed_j(Family::B, 3) == std::vector<int>{1, 3});
  CHECK(allowed_j(Family::B, 5) == std::vector<int>{1, 5});
  CHECK(allowed_j(Family::C, 3) == std::vector<int>{1, 2, 3});
  CHECK(allowed_j(Family::F4, 4) == std::vector<int>{4});
  CHECK(allowed_j(Family::G2, 2) == std::vector<int>{2});
}

TEST_CASE("weight construction") {
  const AlgebraData b2 = make_algebra(Family::B, 2);
  const WeightSpec vac = make_weight(b2, 1, 0, 0);
  CHECK(vac.level == 1);
  CHECK(vac.k_alpha == std::vector<int>{1, 2});
  CHECK(vac.j == 0);
  CHECK(vac.tau == 0);
  CHECK(vac.cap(1) == 1);
  CHECK(vac.cap(2) == 2);
  CHECK_THROWS_AS(vac.cap(0), std::invalid_argument);
  CHECK_THROWS_AS(vac.cap(3), std::invalid_argument);

  const WeightSpec two = make_weight(b2, 2, 0, 0);
  CHECK(two.level == 2);
  CHECK(two.k_alpha == std::vector<int>{2, 4});
}

TEST_CASE("charge shift threshold") {
  const AlgebraData g2 = make_algebra(Family::G2, 2);
  const WeightSpec w = make_weight(g2, 0, 1, 2);
  CHECK(w.level == 1);
  CHECK(w.tau == 2);  // nu_2 * k0 + (nu_2 - 1) * kj = 0 + 2
  CHECK(delta_shift(w, 2, 1) == 0);
  CHECK(delta_shift(w, 2, 2) == 0);
  CHECK(delta_shift(w, 2, 3) == 1);
  CHECK(delta_shift(w, 1, 1) == 0);

  const AlgebraData b2 = make_algebra(Family::B, 2);
  const WeightSpec l1 = make_weight(b2, 0, 1, 1);
  CHECK(l1.tau == 0);
  CHECK(delta_shift(l1, 1, 1) == 1);
  CHECK(delta_shift(l1, 2, 1) == 0);

  const WeightSpec l2 = make_weight(b2, 0, 1, 2);
  CHECK(l2.tau == 1);  // nu_2 * 0 + (nu_2 - 1) * 1
  CHECK(delta_shift(l2, 2, 1) == 0);
  CHECK(delta_shift(l2, 2, 2) == 1);

  const AlgebraData c3 = make_algebra(Family::C, 3);
  const WeightSpec mixed = make_weight(c3, 1, 1, 2);
  CHECK(mixed.level == 2);
  CHECK(mixed.tau == 3);
  CHECK(delta_shift(mixed, 2, 4) == 1);
  CHECK(delta_shift(mixed, 2, 3) == 0);

  const AlgebraData f4 = make_algebra(Family::F4, 4);
  const WeightSpec f = make_weight(f4, 1, 1, 4);
  CHECK(f.tau == 3);
  CHECK(delta_shift(f, 4, 4) == 1);

  CHECK_THROWS_AS(delta_shift(w, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(delta_shift(w, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(delta_shift(w, 3, 1), std::invalid_argument);
}

TEST_CASE("weight validation") {
  const AlgebraData b3 = make_algebra(Family::B, 3);
  CHECK_THROWS_AS(make_weight(b3, -1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_weight(b3, 0, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_weight(b3, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_weight(b3, 1, 0, 1), std::invalid_argument);  // j without kj
  CHECK_THROWS_AS(make_weight(b3, 0, 1, 2), std::invalid_argument);  // unsupported color
  CHECK_THROWS_AS(make_weight(b3, 0, 1, 0), std::invalid_argument);
  CHECK_NOTHROW(make_weight(b3, 0, 1, 1));
  CHECK_NOTHROW(make_weight(b3, 2, 3, 3));
  try {
    make_weight(b3, 0, 1, 2);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("allowed") != std::string::npos);
  }

  const AlgebraData c3 = make_algebra(Family::C, 3);
  CHECK_NOTHROW(make_weight(c3, 0, 1, 2));
}
