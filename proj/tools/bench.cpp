// Benchmark comparing the serial reference implementations against the
// OpenMP kernels on mid-size weights.  Output equality is checked so the
// table doubles as a smoke test.

#include <omp.h>

#include <cstdio>
#include <string>
#include <vector>

#include "qp/basis_enum.hpp"
#include "qp/fermionic.hpp"

using namespace qp;

namespace {

struct BenchCase {
  WeightSpec w;
  long long max_degree;
  std::string label;
};

WeightSpec weight(Family f, int rank, int k0, int kj, int j) {
  return make_weight(make_algebra(f, rank), k0, kj, j);
}

template <typename F>
double timed(F&& f) {
  const double start = omp_get_wtime();
  f();
  return omp_get_wtime() - start;
}

void bench_enumeration(const BenchCase& bc) {
  TruncatedSeries reference;
  const double serial =
      timed([&] { reference = enumerate_basis_serial(bc.w, bc.max_degree).counts; });
  std::printf("%-22s %-10s %8.3fs", bc.label.c_str(), "census", serial);
  bool identical = true;
  for (int threads : {1, 2, 4}) {
    TruncatedSeries parallel;
    const double t = timed(
        [&] { parallel = enumerate_basis(bc.w, bc.max_degree, EmitMode::Counts, threads).counts; });
    identical = identical && (parallel == reference);
    std::printf("  t%-2d %8.3fs", threads, t);
  }
  std::printf("  identical: %s\n", identical ? "yes" : "NO");
}

void bench_fermionic(const BenchCase& bc) {
  TruncatedSeries reference;
  const double serial =
      timed([&] { reference = fermionic_character_serial(bc.w, bc.max_degree); });
  std::printf("%-22s %-10s %8.3fs", bc.label.c_str(), "closed sum", serial);
  bool identical = true;
  for (int threads : {1, 2, 4}) {
    TruncatedSeries parallel;
    const double t = timed(
        [&] { parallel = fermionic_character(bc.w, bc.max_degree, CrossTerm::Min, threads); });
    identical = identical && (parallel == reference);
    std::printf("  t%-2d %8.3fs", threads, t);
  }
  std::printf("  identical: %s\n", identical ? "yes" : "NO");
}

}  // namespace

int main() {
  const std::vector<BenchCase> cases = {
      {weight(Family::B, 3, 2, 0, 0), 24, "B3 k0=2"},
      {weight(Family::C, 3, 1, 1, 2), 22, "C3 k0=1 k2=1"},
      {weight(Family::G2, 2, 2, 0, 0), 30, "G2 k0=2"},
      {weight(Family::F4, 4, 1, 0, 0), 20, "F4 k0=1"},
  };
  std::printf("serial reference vs OpenMP kernels (max threads: %d)\n\n",
              omp_get_max_threads());
  for (const BenchCase& bc : cases) bench_enumeration(bc);
  std::printf("\n");
  for (const BenchCase& bc : cases) bench_fermionic(bc);
  return 0;
}
