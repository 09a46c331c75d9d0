#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qp/algebra.hpp"

namespace qp {

// One color's charges, largest first: index 0 holds position p = 1.
using ColorCharges = std::vector<int>;

// Charges of every quasi-particle, grouped by color.
struct ChargeType {
  std::vector<ColorCharges> colors;

  int particle_count(int color) const;        // 1-based color
  long long color_total(int color) const;     // sum of color-i charges
  std::vector<int> color_type() const;        // all color totals

  bool operator==(const ChargeType& o) const = default;
};

// Transpose view of a charge type: rows[i-1][t-1] counts the color-i
// particles of charge >= t, padded with zeros up to the charge cap.
struct DualChargeType {
  std::vector<std::vector<int>> rows;

  std::vector<int> color_type() const;

  bool operator==(const DualChargeType& o) const = default;
};

struct Particle {
  int charge = 0;
  long long m = 0;  // energy index; the particle contributes energy -m

  bool operator==(const Particle& o) const = default;
};

// A quasi-particle monomial: per color, particles at positions p = 1, 2, ...
// (index p-1), charges weakly decreasing along each color.
struct Monomial {
  std::vector<std::vector<Particle>> colors;

  long long total_energy() const;  // sum of -m over all particles
  std::vector<int> color_type() const;
  ChargeType charge_type() const;

  bool operator==(const Monomial& o) const = default;
};

enum class Ordering { Less, Equal, Greater, Incomparable };

// Throws std::invalid_argument unless every charge lies in 1..cap(color)
// and charges weakly decrease along each color.
void validate_charge_type(const WeightSpec& w, const ChargeType& c);

DualChargeType conjugate(const WeightSpec& w, const ChargeType& c);
ChargeType conjugate_inverse(const WeightSpec& w, const DualChargeType& d);

// Linear order on monomials sharing a color type: charge sequences are
// compared first, then energy sequences, both read from position (1,1)
// upward with a shorter run preceding any proper extension.  Monomials of
// different color types are incomparable.
Ordering compare(const Monomial& a, const Monomial& b);

// Largest admissible energy index for the position-p color-i particle of a
// charge type: the difference-condition bound combining the quadratic
// self-interaction, the interaction with color i-1, and the charge shift.
long long energy_bound(const WeightSpec& w, const ChargeType& c, int color, int p);

// Checks the two difference conditions: every particle at or below its
// energy bound, and equal-charge neighbors spaced by at least twice the
// charge.  Malformed structure (bad charges) throws std::invalid_argument.
bool satisfies_difference_conditions(const WeightSpec& w, const Monomial& m);

// Both sides of the per-color counting identity
//   sum_p (2(p-1)+1) n_{p,i}  ==  sum_t (r_i^{(t)})^2.
std::pair<long long, long long> identity_uvjet1(const WeightSpec& w, const ChargeType& c,
                                                int color);

enum class CrossTerm { Min, Literal };

// Interaction of color i with color i-1 in min form:
//   sum_{p,q} min(rho_i * n_{q,i-1}, n_{p,i}).
long long cross_term_min(const WeightSpec& w, const ChargeType& c, int color);

// The same interaction computed from the dual side.  Min pairs every color-i
// slot s with the color-(i-1) slot ceil(s / rho_i); Literal is the
// diagnostic convention pairing slot nu_i*t - p (0 <= p < nu_i) with t for
// t = 1..level only.
long long cross_term_dual(const WeightSpec& w, const DualChargeType& d, int color,
                          CrossTerm convention = CrossTerm::Min);

// Contribution of the charge shifts: the sum of the last kj dual entries of
// the distinguished color (zero when kj == 0).
long long linear_term(const WeightSpec& w, const DualChargeType& d);

// Smallest total energy over monomials of the given dual charge type:
//   sum of squares - cross terms + linear term.
// Throws std::domain_error if the result is negative (cannot happen for
// valid input; kept as a hard guard).
long long minimal_energy(const WeightSpec& w, const DualChargeType& d,
                         CrossTerm convention = CrossTerm::Min);

// The unique monomial of the given dual charge type attaining minimal
// energy: every particle sits exactly at its energy bound.
Monomial saturated_monomial(const WeightSpec& w, const DualChargeType& d);

// "x_{2a2}(-3) x_{1a2}(-1) x_{1a1}(-1)": colors right-to-left from color 1,
// within a color the position-1 (largest-charge) particle first.  The empty
// monomial renders as "1".
std::string render_monomial(const Monomial& m);

// Column diagram of one color's charges listed smallest first, e.g.
// (1,2,4,4); row lengths read bottom-up give the dual (4,3,2,2).
std::string render_diagram(const std::vector<int>& charges_ascending);

}  // namespace qp
