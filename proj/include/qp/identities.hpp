#pragma once

#include <map>
#include <random>
#include <string>

#include "qp/algebra.hpp"
#include "qp/fermionic.hpp"
#include "qp/quasiparticle.hpp"

namespace qp {

// Randomized self-checks of the structural identities tying the two
// character routes together: conjugation is an involution, the three
// equivalent forms of the energy statistic agree, the quadratic form
// evaluates the minimal energy, and saturated monomials are extremal.
struct IdentityReport {
  long long samples = 0;
  bool ok = true;
  std::string counterexample;                 // empty when ok
  std::map<std::string, long long> passes;    // per-check pass counts
};

IdentityReport run_identity_suite(const WeightSpec& w, long long samples,
                                  unsigned long long seed);

std::string identity_report_to_json(const IdentityReport& r);
std::string identity_report_to_text(const IdentityReport& r);

// Individual checks; each returns "" on success or a description of the
// failure. Exposed so tests can feed hand-built counterexample candidates.
std::string check_uvjet1(const WeightSpec& w, const ChargeType& c);
std::string check_uvjet2(const WeightSpec& w, const ChargeType& c);
std::string check_uvjet3(const WeightSpec& w, const ChargeType& c);
std::string check_involution(const WeightSpec& w, const ChargeType& c);
std::string check_dual_involution(const WeightSpec& w, const DualChargeType& d);
std::string check_quadratic(const WeightSpec& w, const QuadraticForm& q,
                            const DualChargeType& d);
std::string check_extremal(const WeightSpec& w, const DualChargeType& d);

// Deterministic samplers used by the suite (also handy in tests). Only the
// raw engine output is consumed, so results are identical across platforms.
ChargeType sample_charge_type(const WeightSpec& w, std::mt19937_64& rng);
DualChargeType sample_dual_charge_type(const WeightSpec& w, std::mt19937_64& rng);

}  // namespace qp
