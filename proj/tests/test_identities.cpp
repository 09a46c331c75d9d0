#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qp/identities.hpp"

using namespace qp;

namespace {

WeightSpec weight(Family f, int rank, int k0, int kj, int j) {
  return make_weight(make_algebra(f, rank), k0, kj, j);
}

}  // namespace

TEST_CASE("samplers are deterministic and produce valid data") {
  const WeightSpec w = weight(Family::C, 3, 1, 1, 2);
  std::mt19937_64 a(7), b(7);
  for (int s = 0; s < 50; ++s) {
    const ChargeType ca = sample_charge_type(w, a);
    const ChargeType cb = sample_charge_type(w, b);
    CHECK(ca == cb);
    CHECK_NOTHROW(validate_charge_type(w, ca));
    const DualChargeType da = sample_dual_charge_type(w, a);
    const DualChargeType db = sample_dual_charge_type(w, b);
    CHECK(da == db);
    CHECK_NOTHROW(conjugate_inverse(w, da));
  }
}

TEST_CASE("suite passes on representative weights") {
  const std::vector<WeightSpec> cases = {
      weight(Family::B, 3, 1, 0, 0),   weight(Family::B, 2, 0, 2, 2),
      weight(Family::C, 3, 1, 1, 2),   weight(Family::G2, 2, 0, 2, 2),
      weight(Family::F4, 4, 1, 1, 4),
  };
  for (const WeightSpec& w : cases) {
    const IdentityReport report = run_identity_suite(w, 200, 1);
    CHECK(report.ok);
    CHECK(report.counterexample.empty());
    CHECK(report.samples == 200);
    REQUIRE(report.passes.size() == 7);
    for (const auto& entry : report.passes) CHECK(entry.second == 200);
  }
}

TEST_CASE("individual checks accept hand-built data") {
  const WeightSpec w = weight(Family::B, 2, 2, 0, 0);
  ChargeType c;
  c.colors = {{2, 1}, {3, 1}};
  CHECK(check_uvjet1(w, c) == "");
  CHECK(check_uvjet2(w, c) == "");
  CHECK(check_uvjet3(w, c) == "");
  CHECK(check_involution(w, c) == "");

  DualChargeType d;
  d.rows = {{2, 1}, {2, 1, 1, 0}};
  CHECK(check_dual_involution(w, d) == "");
  CHECK(check_quadratic(w, build_quadratic_form(w), d) == "");
  CHECK(check_extremal(w, d) == "");
}

TEST_CASE("extremality holds for an equal-charge chain") {
  // Two charge-1 particles of one color: the saturated pair is admissible,
  // raising either particle breaks it, lowering the chain tail keeps it.
  const WeightSpec w = weight(Family::B, 2, 2, 0, 0);
  DualChargeType d;
  d.rows = {{2, 0}, {0, 0, 0, 0}};
  CHECK(check_extremal(w, d) == "");
}

TEST_CASE("tampered quadratic form is caught") {
  const WeightSpec w = weight(Family::B, 2, 1, 0, 0);
  QuadraticForm q = build_quadratic_form(w);
  q.a2[0][1] -= 2;
  q.a2[1][0] -= 2;
  DualChargeType d;
  d.rows = {{1}, {1, 0}};
  const std::string msg = check_quadratic(w, q, d);
  CHECK(msg != "");
  CHECK(msg.find("quadratic") != std::string::npos);
}

TEST_CASE("malformed duals are rejected rather than compared") {
  const WeightSpec w = weight(Family::B, 2, 1, 0, 0);
  DualChargeType increasing;
  increasing.rows = {{1}, {0, 1}};
  CHECK_THROWS_AS(check_dual_involution(w, increasing), std::invalid_argument);
  CHECK_THROWS_AS(check_extremal(w, increasing), std::invalid_argument);
}

TEST_CASE("suite validates its sample count") {
  const WeightSpec w = weight(Family::B, 2, 1, 0, 0);
  CHECK_THROWS_AS(run_identity_suite(w, -1, 0), std::invalid_argument);
  const IdentityReport empty = run_identity_suite(w, 0, 0);
  CHECK(empty.ok);
  CHECK(empty.samples == 0);
}

TEST_CASE("report serialization") {
  const WeightSpec w = weight(Family::G2, 2, 1, 0, 0);
  const IdentityReport report = run_identity_suite(w, 25, 3);
  REQUIRE(report.ok);
  const std::string text = identity_report_to_text(report);
  CHECK(text.find("status: ok") != std::string::npos);
  CHECK(text.find("samples: 25") != std::string::npos);
  CHECK(text.find("uvjet1: 25") != std::string::npos);
  CHECK(text.find("extremal: 25") != std::string::npos);
  const std::string json = identity_report_to_json(report);
  CHECK(json.find("\"status\": \"ok\"") != std::string::npos);
  CHECK(json.find("\"counterexample\": null") != std::string::npos);

  IdentityReport bad;
  bad.samples = 1;
  bad.ok = false;
  bad.counterexample = "boom";
  bad.passes["uvjet1"] = 0;
  CHECK(identity_report_to_text(bad).find("counterexample: boom") != std::string::npos);
  CHECK(identity_report_to_json(bad).find("\"counterexample\": \"boom\"") != std::string::npos);
}
