#include "qp/basis_enum.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qp {

namespace {

// Small exact fraction with nonnegative value and positive denominator.
struct Frac {
  long long num = 0;
  long long den = 1;
};

Frac frac_make(long long num, long long den) {
  if (den <= 0 || num < 0) throw std::logic_error("frac_make: invalid fraction");
  long long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Frac frac_one_minus(const Frac& f) {
  if (f.num > f.den) throw std::logic_error("frac_one_minus: fraction above one");
  return frac_make(f.den - f.num, f.den);
}

// The total energy of any monomial exceeds, for each color c,
//   (sum over placed colors of -energy_bound)  -  beta_c * A_c,
// where A_c is the weighted charge sum of color c and beta_c accounts for
// the largest possible reduction contributed by the not-yet-placed colors
// c+1..l.  The recursion below is the exact minimum of the relaxed chain
//   sum_{c' > c} (a_{c'}^2 - sqrt(rho_{c'}) a_{c'-1} a_{c'})
// over real nonnegative a, which bounds the true cross terms from below.
std::vector<Frac> chain_beta(const WeightSpec& w) {
  const int l = w.rank();
  std::vector<Frac> beta(static_cast<size_t>(l) + 1);
  beta[static_cast<size_t>(l)] = frac_make(0, 1);
  for (int c = l - 1; c >= 1; --c) {
    Frac rest = frac_one_minus(beta[static_cast<size_t>(c) + 1]);
    if (rest.num <= 0) throw std::domain_error("chain_beta: termination bound unavailable");
    beta[static_cast<size_t>(c)] =
        frac_make(static_cast<long long>(w.alg.rho_of(c + 1)) * rest.den, 4 * rest.num);
  }
  return beta;
}

// Mirror image of chain_beta covering colors 1..c-1.
std::vector<Frac> chain_gamma(const WeightSpec& w) {
  const int l = w.rank();
  std::vector<Frac> gamma(static_cast<size_t>(l) + 1);
  gamma[1] = frac_make(0, 1);
  for (int c = 2; c <= l; ++c) {
    Frac rest = frac_one_minus(gamma[static_cast<size_t>(c) - 1]);
    if (rest.num <= 0) throw std::domain_error("chain_gamma: termination bound unavailable");
    gamma[static_cast<size_t>(c)] =
        frac_make(static_cast<long long>(w.alg.rho_of(c)) * rest.den, 4 * rest.num);
  }
  return gamma;
}

long long weighted_charge_sum(const std::vector<int>& charges) {
  long long a = 0;
  for (size_t idx = 0; idx < charges.size(); ++idx)
    a += (2 * static_cast<long long>(idx) + 1) * charges[idx];
  return a;
}

struct PartitionInfo {
  std::vector<int> charges;  // weakly decreasing
  long long weighted_sum = 0;
};

void generate_descending(long long remaining, int max_part, std::vector<int>& current,
                         std::vector<PartitionInfo>& out) {
  if (remaining == 0) {
    out.push_back({current, weighted_charge_sum(current)});
    return;
  }
  for (int first = static_cast<int>(std::min<long long>(max_part, remaining)); first >= 1;
       --first) {
    current.push_back(first);
    generate_descending(remaining - first, first, current, out);
    current.pop_back();
  }
}

// All weakly decreasing charge lists for one color with parts <= cap and
// total <= max_total, ordered by total then by leading part descending.
std::vector<PartitionInfo> color_partitions(int cap, long long max_total) {
  std::vector<PartitionInfo> out;
  std::vector<int> current;
  for (long long total = 0; total <= max_total; ++total)
    generate_descending(total, cap, current, out);
  return out;
}

struct ChargeTypeSearch {
  const WeightSpec& w;
  long long max_degree;
  std::vector<std::vector<PartitionInfo>> per_color;  // index color-1
  std::vector<Frac> beta;
  ChargeType work;
  std::vector<ChargeType> out;

  void run(int color, long long placed_cost) {
    if (color > w.rank()) {
      out.push_back(work);
      return;
    }
    const Frac& b = beta[static_cast<size_t>(color)];
    for (const PartitionInfo& part : per_color[static_cast<size_t>(color) - 1]) {
      work.colors[static_cast<size_t>(color) - 1] = part.charges;
      long long cost = 0;
      for (int p = 1; p <= static_cast<int>(part.charges.size()); ++p)
        cost -= energy_bound(w, work, color, p);
      const long long total = placed_cost + cost;
      // total - beta * weighted_sum > max_degree, tested exactly.
      if (total * b.den - b.num * part.weighted_sum > b.den * max_degree) continue;
      run(color + 1, total);
    }
    work.colors[static_cast<size_t>(color) - 1].clear();
  }
};

// Flattened particle table for one charge type, colors ascending, positions
// ascending, with run structure for equal-charge chains.
struct ParticleTable {
  std::vector<int> charge;
  std::vector<long long> bound;
  std::vector<int> color_index0;
  std::vector<char> is_head;            // first particle of an equal-charge run
  std::vector<int> run_remaining;       // particles from here to the run end
  std::vector<long long> after_run_min;  // sum of -bound past the run end
  int count = 0;

  ParticleTable(const WeightSpec& w, const ChargeType& ct) {
    for (int i = 1; i <= w.rank(); ++i) {
      const auto& charges = ct.colors[static_cast<size_t>(i) - 1];
      for (int p = 1; p <= static_cast<int>(charges.size()); ++p) {
        charge.push_back(charges[static_cast<size_t>(p) - 1]);
        bound.push_back(energy_bound(w, ct, i, p));
        color_index0.push_back(i - 1);
        const bool head = (p == 1) || (charges[static_cast<size_t>(p) - 1] !=
                                       charges[static_cast<size_t>(p) - 2]);
        is_head.push_back(head ? 1 : 0);
      }
    }
    count = static_cast<int>(charge.size());
    run_remaining.assign(static_cast<size_t>(count), 1);
    for (int v = count - 2; v >= 0; --v)
      if (!is_head[static_cast<size_t>(v) + 1])
        run_remaining[static_cast<size_t>(v)] = run_remaining[static_cast<size_t>(v) + 1] + 1;
    std::vector<long long> suffix(static_cast<size_t>(count) + 1, 0);
    for (int v = count - 1; v >= 0; --v)
      suffix[static_cast<size_t>(v)] = suffix[static_cast<size_t>(v) + 1] - bound[static_cast<size_t>(v)];
    after_run_min.assign(static_cast<size_t>(count), 0);
    for (int v = 0; v < count; ++v)
      after_run_min[static_cast<size_t>(v)] =
          suffix[static_cast<size_t>(v) + static_cast<size_t>(run_remaining[static_cast<size_t>(v)])];
  }
};

struct LocalCensus {
  std::vector<Coeff> counts;  // by total energy
  std::vector<Monomial> monomials;
};

// Explicitly walks every admissible energy assignment of one charge type
// with total energy <= max_degree.  Each loop iteration extends to at least
// one admissible monomial, so the work is proportional to the output.
struct EnergyWalk {
  const ParticleTable& table;
  const ChargeType& ct;
  long long max_degree;
  bool want_list;
  LocalCensus& out;
  std::vector<long long> stack;

  void emit(long long energy) {
    if (energy < 0) throw std::logic_error("energy enumeration reached a negative total");
    out.counts[static_cast<size_t>(energy)] =
        checked_add(out.counts[static_cast<size_t>(energy)], 1);
    if (!want_list) return;
    Monomial m;
    m.colors.resize(ct.colors.size());
    for (int v = 0; v < table.count; ++v)
      m.colors[static_cast<size_t>(table.color_index0[static_cast<size_t>(v)])].push_back(
          {table.charge[static_cast<size_t>(v)], stack[static_cast<size_t>(v)]});
    out.monomials.push_back(std::move(m));
  }

  void walk(int v, long long committed, long long m_prev) {
    if (v == table.count) {
      emit(committed);
      return;
    }
    const long long n = table.charge[static_cast<size_t>(v)];
    const long long run = table.run_remaining[static_cast<size_t>(v)];
    const long long max_m = table.is_head[static_cast<size_t>(v)]
                                ? table.bound[static_cast<size_t>(v)]
                                : m_prev - 2 * n;
    // Remaining minimum: this run contributes run*(-m) + n*run*(run-1) when
    // anchored at m, runs after it contribute their bound sums.
    const long long numer = max_degree - committed - n * run * (run - 1) -
                            table.after_run_min[static_cast<size_t>(v)];
    // The suffix stays within budget iff run * m >= -numer; negative numer
    // just forces a positive head index, which assisted particles can reach.
    const long long m_low = numer >= 0 ? -(numer / run) : (-numer + run - 1) / run;
    if (max_m < m_low) return;
    for (long long m = max_m; m >= m_low; --m) {
      stack[static_cast<size_t>(v)] = m;
      walk(v + 1, committed - m, m);
    }
  }
};

LocalCensus census_for_charge_type(const WeightSpec& w, const ChargeType& ct,
                                   long long max_degree, bool want_list) {
  LocalCensus local;
  local.counts.assign(static_cast<size_t>(max_degree) + 1, 0);
  ParticleTable table(w, ct);
  EnergyWalk walk{table, ct, max_degree, want_list, local, {}};
  walk.stack.assign(static_cast<size_t>(table.count), 0);
  walk.walk(0, 0, 0);
  return local;
}

struct SortKey {
  long long energy;
  std::vector<int> color_type;
  std::vector<int> charges;
  std::vector<long long> ms;
  size_t index;
};

void sort_canonically(std::vector<Monomial>& monomials) {
  std::vector<SortKey> keys;
  keys.reserve(monomials.size());
  for (size_t idx = 0; idx < monomials.size(); ++idx) {
    SortKey k;
    k.energy = monomials[idx].total_energy();
    k.color_type = monomials[idx].color_type();
    for (const auto& color : monomials[idx].colors)
      for (const Particle& part : color) {
        k.charges.push_back(part.charge);
        k.ms.push_back(part.m);
      }
    k.index = idx;
    keys.push_back(std::move(k));
  }
  std::sort(keys.begin(), keys.end(), [](const SortKey& a, const SortKey& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    if (a.color_type != b.color_type) return a.color_type < b.color_type;
    if (a.charges != b.charges) return a.charges < b.charges;
    return a.ms < b.ms;
  });
  std::vector<Monomial> sorted;
  sorted.reserve(monomials.size());
  for (const SortKey& k : keys) sorted.push_back(std::move(monomials[k.index]));
  monomials = std::move(sorted);
}

BasisCensus fold_results(const WeightSpec& w, long long max_degree, bool want_list,
                         const std::vector<ChargeType>& cts, std::vector<LocalCensus>& locals) {
  BasisCensus census;
  census.weight = w;
  census.max_degree = max_degree;
  census.counts = series_make(max_degree, w.rank());
  census.has_monomials = want_list;
  for (size_t idx = 0; idx < cts.size(); ++idx) {
    const std::vector<int> ctype = cts[idx].color_type();
    for (long long e = 0; e <= max_degree; ++e) {
      Coeff c = locals[idx].counts[static_cast<size_t>(e)];
      if (c != 0) census.counts.add_term(e, ctype, c);
    }
    if (want_list)
      for (Monomial& m : locals[idx].monomials) census.monomials.push_back(std::move(m));
  }
  if (want_list) sort_canonically(census.monomials);
  return census;
}

}  // namespace

long long charge_type_min_energy(const WeightSpec& w, const ChargeType& c) {
  validate_charge_type(w, c);
  long long total = 0;
  for (int i = 1; i <= w.rank(); ++i)
    for (int p = 1; p <= c.particle_count(i); ++p) total -= energy_bound(w, c, i, p);
  return total;
}

std::vector<ChargeType> admissible_charge_types(const WeightSpec& w, long long max_degree) {
  if (max_degree < 0)
    throw std::invalid_argument("admissible_charge_types: max_degree must be >= 0");
  const int l = w.rank();
  const std::vector<Frac> beta = chain_beta(w);
  const std::vector<Frac> gamma = chain_gamma(w);
  ChargeTypeSearch search{w, max_degree, {}, beta, {}, {}};
  search.per_color.resize(static_cast<size_t>(l));
  for (int c = 1; c <= l; ++c) {
    // Any admissible color total obeys n^2 * (1 - beta - gamma) <= N * cap.
    const Frac& b = beta[static_cast<size_t>(c)];
    const Frac& g = gamma[static_cast<size_t>(c)];
    long long num = b.den * g.den - b.num * g.den - g.num * b.den;
    long long den = b.den * g.den;
    if (num <= 0) throw std::domain_error("admissible_charge_types: interaction too strong");
    long long cap_total = 0;
    while ((cap_total + 1) * (cap_total + 1) * num <= max_degree * w.cap(c) * den) ++cap_total;
    search.per_color[static_cast<size_t>(c) - 1] = color_partitions(w.cap(c), cap_total);
  }
  search.work.colors.resize(static_cast<size_t>(l));
  search.run(1, 0);
  return search.out;
}

BasisCensus enumerate_basis(const WeightSpec& w, long long max_degree, EmitMode mode,
                            int threads) {
  if (max_degree < 0) throw std::invalid_argument("enumerate_basis: max_degree must be >= 0");
  if (threads < 0) throw std::invalid_argument("enumerate_basis: threads must be >= 0");
  const bool want_list = (mode == EmitMode::List);
  const std::vector<ChargeType> cts = admissible_charge_types(w, max_degree);
  std::vector<LocalCensus> locals(cts.size());
  const int nt = threads > 0 ? threads : omp_get_max_threads();
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (long long idx = 0; idx < static_cast<long long>(cts.size()); ++idx) {
    try {
      locals[static_cast<size_t>(idx)] =
          census_for_charge_type(w, cts[static_cast<size_t>(idx)], max_degree, want_list);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return fold_results(w, max_degree, want_list, cts, locals);
}

namespace {

// Reference implementation: one naive recursion per charge type, with the
// remaining minimum recomputed from scratch at every step.
struct ReferenceWalk {
  const WeightSpec& w;
  const ChargeType& ct;
  long long max_degree;
  bool want_list;
  LocalCensus& out;
  std::vector<int> charge;
  std::vector<long long> bound;
  std::vector<char> chained;  // equal charge as the previous same-color particle
  std::vector<int> color_index0;
  std::vector<long long> stack;

  long long remaining_minimum(int v, long long m_prev) const {
    long long total = 0;
    long long prev = m_prev;
    for (int u = v; u < static_cast<int>(charge.size()); ++u) {
      long long best = chained[static_cast<size_t>(u)] ? prev - 2 * charge[static_cast<size_t>(u)]
                                                       : bound[static_cast<size_t>(u)];
      total -= best;
      prev = best;
    }
    return total;
  }

  void walk(int v, long long committed, long long m_prev) {
    if (v == static_cast<int>(charge.size())) {
      if (committed < 0) throw std::logic_error("energy enumeration reached a negative total");
      out.counts[static_cast<size_t>(committed)] =
          checked_add(out.counts[static_cast<size_t>(committed)], 1);
      if (want_list) {
        Monomial m;
        m.colors.resize(ct.colors.size());
        for (size_t u = 0; u < charge.size(); ++u)
          m.colors[static_cast<size_t>(color_index0[u])].push_back({charge[u], stack[u]});
        out.monomials.push_back(std::move(m));
      }
      return;
    }
    const long long max_m = chained[static_cast<size_t>(v)]
                                ? m_prev - 2 * charge[static_cast<size_t>(v)]
                                : bound[static_cast<size_t>(v)];
    for (long long m = max_m;; --m) {
      const long long extended = committed - m;
      if (extended + remaining_minimum(v + 1, m) > max_degree) break;
      stack[static_cast<size_t>(v)] = m;
      walk(v + 1, extended, m);
    }
  }
};

}  // namespace

BasisCensus enumerate_basis_serial(const WeightSpec& w, long long max_degree, EmitMode mode) {
  if (max_degree < 0)
    throw std::invalid_argument("enumerate_basis_serial: max_degree must be >= 0");
  const bool want_list = (mode == EmitMode::List);
  const std::vector<ChargeType> cts = admissible_charge_types(w, max_degree);
  std::vector<LocalCensus> locals(cts.size());
  for (size_t idx = 0; idx < cts.size(); ++idx) {
    LocalCensus& local = locals[idx];
    local.counts.assign(static_cast<size_t>(max_degree) + 1, 0);
    const ChargeType& ct = cts[idx];
    ReferenceWalk walk{w, ct, max_degree, want_list, local, {}, {}, {}, {}, {}};
    for (int i = 1; i <= w.rank(); ++i) {
      const auto& charges = ct.colors[static_cast<size_t>(i) - 1];
      for (int p = 1; p <= static_cast<int>(charges.size()); ++p) {
        walk.charge.push_back(charges[static_cast<size_t>(p) - 1]);
        walk.bound.push_back(energy_bound(w, ct, i, p));
        walk.chained.push_back(p > 1 && charges[static_cast<size_t>(p) - 1] ==
                                            charges[static_cast<size_t>(p) - 2]);
        walk.color_index0.push_back(i - 1);
      }
    }
    walk.stack.assign(walk.charge.size(), 0);
    walk.walk(0, 0, 0);
  }
  return fold_results(w, max_degree, want_list, cts, locals);
}

Coeff census_coefficient(const BasisCensus& census, long long m,
                         const std::vector<int>& color_type) {
  if (m < 0 || m > census.max_degree)
    throw std::invalid_argument("census_coefficient: degree outside the computed range");
  return census.counts.coefficient(m, color_type);
}

}  // namespace qp
