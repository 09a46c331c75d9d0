#include "qp/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qp {

std::string family_name(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  throw std::invalid_argument("family_name: unknown family");
}

Family parse_family(const std::string& s) {
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "F4") return Family::F4;
  if (s == "G2") return Family::G2;
  throw std::invalid_argument("unknown family '" + s + "' (expected B, C, F4 or G2)");
}

int AlgebraData::nu_of(int color) const {
  if (color < 1 || color > rank)
    throw std::invalid_argument("nu_of: color " + std::to_string(color) +
                                " out of range 1.." + std::to_string(rank));
  return nu[static_cast<size_t>(color) - 1];
}

int AlgebraData::rho_of(int color) const {
  if (color < 2 || color > rank)
    throw std::invalid_argument("rho_of: color " + std::to_string(color) +
                                " out of range 2.." + std::to_string(rank));
  int a = nu_of(color - 1);
  int b = nu_of(color);
  if (b % a != 0)
    throw std::logic_error("rho_of: non-integer charge factor ratio");
  return b / a;
}

AlgebraData make_algebra(Family family, int rank) {
  AlgebraData alg;
  alg.family = family;
  alg.rank = rank;
  switch (family) {
    case Family::B:
      if (rank < 2)
        throw std::invalid_argument("family B requires rank >= 2");
      alg.nu.assign(static_cast<size_t>(rank), 1);
      alg.nu.back() = 2;
      break;
    case Family::C:
      if (rank < 2)
        throw std::invalid_argument("family C requires rank >= 2");
      alg.nu.assign(static_cast<size_t>(rank), 2);
      alg.nu.front() = 1;
      break;
    case Family::F4:
      if (rank != 4)
        throw std::invalid_argument("family F4 requires rank 4");
      alg.nu = {1, 1, 2, 2};
      break;
    case Family::G2:
      if (rank != 2)
        throw std::invalid_argument("family G2 requires rank 2");
      alg.nu = {1, 3};
      break;
  }
  return alg;
}

std::vector<int> allowed_j(Family family, int rank) {
  switch (family) {
    case Family::B: return {1, rank};
    case Family::C: {
      std::vector<int> all(static_cast<size_t>(rank));
      std::iota(all.begin(), all.end(), 1);
      return all;
    }
    case Family::F4: return {4};
    case Family::G2: return {2};
  }
  throw std::invalid_argument("allowed_j: unknown family");
}

int WeightSpec::cap(int color) const {
  if (color < 1 || color > alg.rank)
    throw std::invalid_argument("cap: color " + std::to_string(color) +
                                " out of range 1.." + std::to_string(alg.rank));
  return k_alpha[static_cast<size_t>(color) - 1];
}

WeightSpec make_weight(const AlgebraData& alg, int k0, int kj, int j) {
  if (k0 < 0 || kj < 0)
    throw std::invalid_argument("make_weight: multiplicities must be nonnegative");
  if (k0 + kj < 1)
    throw std::invalid_argument("make_weight: level k0 + kj must be at least 1");
  if (kj == 0) {
    if (j != 0)
      throw std::invalid_argument("make_weight: j given but kj is 0");
  } else {
    auto ok = allowed_j(alg.family, alg.rank);
    if (std::find(ok.begin(), ok.end(), j) == ok.end()) {
      std::string list;
      for (int v : ok) list += (list.empty() ? "" : ", ") + std::to_string(v);
      throw std::invalid_argument("make_weight: j = " + std::to_string(j) +
                                  " not supported for " + family_name(alg.family) +
                                  std::to_string(alg.rank) + " (allowed: {" + list + "})");
    }
  }
  WeightSpec w;
  w.alg = alg;
  w.k0 = k0;
  w.kj = kj;
  w.j = (kj > 0) ? j : 0;
  w.level = k0 + kj;
  w.k_alpha.resize(alg.nu.size());
  for (size_t i = 0; i < alg.nu.size(); ++i) w.k_alpha[i] = alg.nu[i] * w.level;
  if (kj > 0) {
    int nj = alg.nu_of(j);
    w.tau = nj * k0 + (nj - 1) * kj;
  }
  return w;
}

long long delta_shift(const WeightSpec& w, int color, int charge) {
  if (color < 1 || color > w.alg.rank)
    throw std::invalid_argument("delta_shift: color out of range");
  if (charge < 1 || charge > w.cap(color))
    throw std::invalid_argument("delta_shift: charge " + std::to_string(charge) +
                                " outside 1.." + std::to_string(w.cap(color)) +
                                " for color " + std::to_string(color));
  if (w.kj == 0 || color != w.j) return 0;
  return std::max(0, charge - w.tau);
}

}  // namespace qp
