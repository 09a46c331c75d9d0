#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qp/quasiparticle.hpp"
#include "qp/series.hpp"

namespace qp {

// The minimal-energy functional on stacked dual charge types, stored with
// doubled quadratic part so that all entries are integers:
//   E(x) = (x^T a2 x) / 2 + linear . x
struct QuadraticForm {
  int dim = 0;
  int num_colors = 0;
  std::vector<std::pair<int, int>> vars;   // (color, slot), both 1-based
  std::vector<int> color_offset;           // first variable index per color
  std::vector<std::vector<long long>> a2;  // symmetric, diagonal 2
  std::vector<int> linear;                 // 0/1 entries
};

QuadraticForm build_quadratic_form(const WeightSpec& w,
                                   CrossTerm convention = CrossTerm::Min);

// Stacks dual rows color-major into a plain vector and back.
std::vector<int> stack_dual(const WeightSpec& w, const DualChargeType& d);
DualChargeType unstack_dual(const WeightSpec& w, const std::vector<int>& x);

long long quadratic_form_value(const QuadraticForm& q, const std::vector<int>& x);

// A certified positive lower bound on the smallest eigenvalue of the
// quadratic part, produced by exact rational elimination.  Throws
// std::domain_error when the form is not positive definite.
struct PdBound {
  long long num = 0;
  long long den = 1;
};

PdBound check_positive_definite(const QuadraticForm& q);

// Evaluates the closed character sum over all dual charge types with
// minimal energy <= max_degree.  Completeness of the enumeration is
// certified: E(x) >= lambda * |x|^2 with lambda from
// check_positive_definite bounds the search to a ball, and exact
// prefix minimization tightens it.  radius_factor widens the certified
// ball (used by the soundness self-check); it must not change the result.
TruncatedSeries fermionic_character(const WeightSpec& w, long long max_degree,
                                    CrossTerm convention = CrossTerm::Min, int threads = 0,
                                    int radius_factor = 1);

// Reference implementation with the same certified enumeration, evaluated
// in one serial pass.
TruncatedSeries fermionic_character_serial(const WeightSpec& w, long long max_degree,
                                           CrossTerm convention = CrossTerm::Min,
                                           int radius_factor = 1);

struct VerifyMismatch {
  long long q = 0;
  std::vector<int> colors;
  Coeff enumeration = 0;
  Coeff fermionic = 0;
};

struct VerifyReport {
  bool equal = true;
  std::optional<VerifyMismatch> first_mismatch;
  long long max_degree = 0;
  long long cases = 0;  // number of coefficients compared
};

// Compares the basis census against the fermionic sum coefficientwise.
VerifyReport verify_character(const WeightSpec& w, long long max_degree,
                              CrossTerm convention = CrossTerm::Min, int threads = 0);

std::string verify_report_to_json(const VerifyReport& r);
std::string verify_report_to_text(const VerifyReport& r);

}  // namespace qp
