#pragma once

#include <vector>

#include "qp/quasiparticle.hpp"
#include "qp/series.hpp"

namespace qp {

enum class EmitMode { Counts, List };

// Graded census of the quasi-particle basis: counts[(m, colorType)] is the
// number of admissible monomials of total energy m with that color type.
struct BasisCensus {
  WeightSpec weight;
  long long max_degree = 0;
  TruncatedSeries counts;
  bool has_monomials = false;
  std::vector<Monomial> monomials;  // canonical order when has_monomials
};

// Enumerates every admissible monomial of total energy <= max_degree by
// explicit construction.  Work is partitioned over charge types and merged
// deterministically, so output is independent of the thread count
// (threads == 0 uses the OpenMP default).
BasisCensus enumerate_basis(const WeightSpec& w, long long max_degree,
                            EmitMode mode = EmitMode::Counts, int threads = 0);

// Plain single-pass reference implementation producing identical output.
BasisCensus enumerate_basis_serial(const WeightSpec& w, long long max_degree,
                                   EmitMode mode = EmitMode::Counts);

// Coefficient lookup; m outside 0..max_degree is rejected.
Coeff census_coefficient(const BasisCensus& census, long long m,
                         const std::vector<int>& color_type);

// Charge types whose minimal total energy is <= max_degree, in the
// deterministic order used by the enumerators.
std::vector<ChargeType> admissible_charge_types(const WeightSpec& w, long long max_degree);

// Minimal total energy of monomials with the given charge type: the sum of
// -energy_bound over all particles.
long long charge_type_min_energy(const WeightSpec& w, const ChargeType& c);

}  // namespace qp
