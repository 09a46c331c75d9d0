#pragma once

#include <string>
#include <vector>

namespace qp {

enum class Family { B, C, F4, G2 };

std::string family_name(Family f);
Family parse_family(const std::string& s);  // throws std::invalid_argument

// Structural data for one simple-Lie-algebra family at a fixed rank.
// Colors are numbered 1..rank.  nu_of(i) is the charge scaling factor of
// color i: a color-i quasi-particle at level k may carry charge 1..nu_i*k.
struct AlgebraData {
  Family family = Family::B;
  int rank = 0;
  std::vector<int> nu;  // nu[i-1] is the factor for color i

  int nu_of(int color) const;   // 1-based, validated
  int rho_of(int color) const;  // nu_of(color) / nu_of(color-1), color >= 2
};

AlgebraData make_algebra(Family family, int rank);

// Colors j for which the highest weight k0*L0 + kj*Lj is supported.
std::vector<int> allowed_j(Family family, int rank);

// A rectangular highest weight k0*L0 + kj*Lj at level k0 + kj.
struct WeightSpec {
  AlgebraData alg;
  int k0 = 0;
  int kj = 0;
  int j = 0;      // 0 when kj == 0
  int level = 0;  // k0 + kj
  std::vector<int> k_alpha;  // per color: maximum charge nu_i * level
  int tau = 0;    // color-j charges above tau receive an energy shift

  int rank() const { return alg.rank; }
  int cap(int color) const;  // 1-based k_alpha access, validated
};

// Validates ranks, multiplicities and the distinguished color.
// Throws std::invalid_argument on violation.
WeightSpec make_weight(const AlgebraData& alg, int k0, int kj, int j);

// Additional energy penalty carried by a color-i quasi-particle of charge n:
// zero unless i is the distinguished color, in which case max(0, n - tau).
// Requires 1 <= n <= w.cap(color).
long long delta_shift(const WeightSpec& w, int color, int charge);

}  // namespace qp
