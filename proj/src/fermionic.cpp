#include "qp/fermionic.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "qp/basis_enum.hpp"

namespace qp {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace

QuadraticForm build_quadratic_form(const WeightSpec& w, CrossTerm convention) {
  QuadraticForm q;
  q.num_colors = w.rank();
  q.color_offset.resize(static_cast<size_t>(w.rank()));
  for (int i = 1; i <= w.rank(); ++i) {
    q.color_offset[static_cast<size_t>(i) - 1] = q.dim;
    for (int t = 1; t <= w.cap(i); ++t) q.vars.emplace_back(i, t);
    q.dim += w.cap(i);
  }
  q.a2.assign(static_cast<size_t>(q.dim), std::vector<long long>(static_cast<size_t>(q.dim), 0));
  for (int v = 0; v < q.dim; ++v) q.a2[static_cast<size_t>(v)][static_cast<size_t>(v)] = 2;
  q.linear.assign(static_cast<size_t>(q.dim), 0);
  for (int i = 2; i <= w.rank(); ++i) {
    const int off_prev = q.color_offset[static_cast<size_t>(i) - 2];
    const int off_cur = q.color_offset[static_cast<size_t>(i) - 1];
    if (convention == CrossTerm::Min) {
      const int rho = w.alg.rho_of(i);
      for (int s = 1; s <= w.cap(i); ++s) {
        const int t = (s + rho - 1) / rho;
        const int a = off_prev + t - 1;
        const int b = off_cur + s - 1;
        q.a2[static_cast<size_t>(a)][static_cast<size_t>(b)] -= 1;
        q.a2[static_cast<size_t>(b)][static_cast<size_t>(a)] -= 1;
      }
    } else {
      const int nu = w.alg.nu_of(i);
      for (int t = 1; t <= w.level; ++t) {
        for (int p = 0; p < nu; ++p) {
          const int a = off_prev + t - 1;
          const int b = off_cur + nu * t - p - 1;
          q.a2[static_cast<size_t>(a)][static_cast<size_t>(b)] -= 1;
          q.a2[static_cast<size_t>(b)][static_cast<size_t>(a)] -= 1;
        }
      }
    }
  }
  if (w.kj > 0) {
    const int off = q.color_offset[static_cast<size_t>(w.j) - 1];
    for (int t = w.tau + 1; t <= w.cap(w.j); ++t)
      q.linear[static_cast<size_t>(off + t - 1)] = 1;
  }
  return q;
}

std::vector<int> stack_dual(const WeightSpec& w, const DualChargeType& d) {
  if (static_cast<int>(d.rows.size()) != w.rank())
    throw std::invalid_argument("stack_dual: dual charge type must list every color");
  std::vector<int> x;
  for (int i = 1; i <= w.rank(); ++i) {
    const auto& row = d.rows[static_cast<size_t>(i) - 1];
    if (static_cast<int>(row.size()) != w.cap(i))
      throw std::invalid_argument("stack_dual: color " + std::to_string(i) +
                                  " row must have length " + std::to_string(w.cap(i)));
    x.insert(x.end(), row.begin(), row.end());
  }
  return x;
}

DualChargeType unstack_dual(const WeightSpec& w, const std::vector<int>& x) {
  DualChargeType d;
  d.rows.resize(static_cast<size_t>(w.rank()));
  size_t pos = 0;
  for (int i = 1; i <= w.rank(); ++i) {
    const size_t cap = static_cast<size_t>(w.cap(i));
    if (pos + cap > x.size()) throw std::invalid_argument("unstack_dual: vector too short");
    d.rows[static_cast<size_t>(i) - 1].assign(x.begin() + static_cast<long>(pos),
                                              x.begin() + static_cast<long>(pos + cap));
    pos += cap;
  }
  if (pos != x.size()) throw std::invalid_argument("unstack_dual: vector too long");
  return d;
}

long long quadratic_form_value(const QuadraticForm& q, const std::vector<int>& x) {
  if (static_cast<int>(x.size()) != q.dim)
    throw std::invalid_argument("quadratic_form_value: dimension mismatch");
  __int128 acc = 0;
  for (int a = 0; a < q.dim; ++a) {
    if (x[static_cast<size_t>(a)] == 0) continue;
    __int128 row = 0;
    for (int b = 0; b < q.dim; ++b)
      row += static_cast<__int128>(q.a2[static_cast<size_t>(a)][static_cast<size_t>(b)]) *
             x[static_cast<size_t>(b)];
    acc += row * x[static_cast<size_t>(a)];
  }
  acc /= 2;  // a2 holds the doubled form; x^T a2 x is always even
  for (int a = 0; a < q.dim; ++a)
    acc += static_cast<__int128>(q.linear[static_cast<size_t>(a)]) * x[static_cast<size_t>(a)];
  return static_cast<long long>(acc);
}

namespace {

std::vector<std::vector<BigRat>> rational_matrix(const QuadraticForm& q) {
  std::vector<std::vector<BigRat>> m(static_cast<size_t>(q.dim),
                                     std::vector<BigRat>(static_cast<size_t>(q.dim)));
  for (int a = 0; a < q.dim; ++a)
    for (int b = 0; b < q.dim; ++b)
      m[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          BigRat(q.a2[static_cast<size_t>(a)][static_cast<size_t>(b)], 2);
  return m;
}

// Exact symmetric-elimination test: strict > 0 pivots for positive definite,
// >= 0 with a vanishing row for positive semidefinite.
bool eliminate_symmetric(std::vector<std::vector<BigRat>> m, bool strict) {
  const size_t n = m.size();
  for (size_t i = 0; i < n; ++i) {
    const BigRat pivot = m[i][i];
    if (pivot < 0) return false;
    if (pivot == 0) {
      if (strict) return false;
      for (size_t j = i + 1; j < n; ++j)
        if (m[i][j] != 0) return false;
      continue;
    }
    for (size_t r = i + 1; r < n; ++r) {
      if (m[r][i] == 0) continue;
      const BigRat factor = m[r][i] / pivot;
      for (size_t c = i; c < n; ++c) m[r][c] -= factor * m[i][c];
    }
    for (size_t r = i + 1; r < n; ++r) m[i][r] = 0;
  }
  return true;
}

double jacobi_smallest_eigenvalue(const QuadraticForm& q) {
  const int n = q.dim;
  std::vector<std::vector<double>> m(static_cast<size_t>(n),
                                     std::vector<double>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          static_cast<double>(q.a2[static_cast<size_t>(a)][static_cast<size_t>(b)]) / 2.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int r = p + 1; r < n; ++r) off += std::abs(m[static_cast<size_t>(p)][static_cast<size_t>(r)]);
    if (off < 1e-14) break;
    for (int p = 0; p < n; ++p) {
      for (int r = p + 1; r < n; ++r) {
        const double apq = m[static_cast<size_t>(p)][static_cast<size_t>(r)];
        if (std::abs(apq) < 1e-18) continue;
        const double app = m[static_cast<size_t>(p)][static_cast<size_t>(p)];
        const double aqq = m[static_cast<size_t>(r)][static_cast<size_t>(r)];
        const double theta = 0.5 * std::atan2(2 * apq, aqq - app);
        const double c = std::cos(theta), s = std::sin(theta);
        for (int k = 0; k < n; ++k) {
          const double mkp = m[static_cast<size_t>(k)][static_cast<size_t>(p)];
          const double mkq = m[static_cast<size_t>(k)][static_cast<size_t>(r)];
          m[static_cast<size_t>(k)][static_cast<size_t>(p)] = c * mkp - s * mkq;
          m[static_cast<size_t>(k)][static_cast<size_t>(r)] = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const double mpk = m[static_cast<size_t>(p)][static_cast<size_t>(k)];
          const double mqk = m[static_cast<size_t>(r)][static_cast<size_t>(k)];
          m[static_cast<size_t>(p)][static_cast<size_t>(k)] = c * mpk - s * mqk;
          m[static_cast<size_t>(r)][static_cast<size_t>(k)] = s * mpk + c * mqk;
        }
      }
    }
  }
  double mini = m[0][0];
  for (int a = 1; a < n; ++a)
    mini = std::min(mini, m[static_cast<size_t>(a)][static_cast<size_t>(a)]);
  return mini;
}

bool is_psd_shifted(const QuadraticForm& q, long long num, long long den) {
  auto m = rational_matrix(q);
  const BigRat mu(num, den);
  for (int a = 0; a < q.dim; ++a) m[static_cast<size_t>(a)][static_cast<size_t>(a)] -= mu;
  return eliminate_symmetric(std::move(m), /*strict=*/false);
}

}  // namespace

PdBound check_positive_definite(const QuadraticForm& q) {
  if (q.dim == 0) throw std::invalid_argument("check_positive_definite: empty form");
  if (!eliminate_symmetric(rational_matrix(q), /*strict=*/true))
    throw std::domain_error("quadratic form is not positive definite");
  const long long den = 1LL << 20;
  double estimate = jacobi_smallest_eigenvalue(q);
  if (!(estimate > 0)) estimate = 1.0 / static_cast<double>(den);
  long long num = std::llround(estimate * static_cast<double>(den));
  if (num < 1) num = 1;
  while (num >= 1) {
    if (is_psd_shifted(q, num, den)) {
      const long long g = std::gcd(num, den);
      return {num / g, den / g};
    }
    num -= std::max<long long>(1, num / 8);
  }
  throw std::domain_error("could not certify a positive eigenvalue bound");
}

namespace {

// Exact prefix lower bounds: level t holds the integer-scaled Schur
// complement of the trailing variables, so that for any nonnegative
// completion of a prefix u,
//   E(u, anything) >= (u^T mat u) / scale + linear_prefix . u.
struct PrefixBounds {
  struct Level {
    bool usable = false;
    long long scale = 1;
    std::vector<std::vector<long long>> mat;
  };
  std::vector<Level> levels;  // index = prefix length t, 1..dim-1
};

PrefixBounds build_prefix_bounds(const QuadraticForm& q) {
  PrefixBounds out;
  out.levels.resize(static_cast<size_t>(q.dim));
  auto work = rational_matrix(q);
  const BigInt limit = BigInt(1) << 44;
  for (int t = q.dim - 1; t >= 1; --t) {
    // Eliminate variable t from the (t+1) x (t+1) matrix in `work`.
    const BigRat pivot = work[static_cast<size_t>(t)][static_cast<size_t>(t)];
    if (pivot <= 0) break;  // not reachable for a definite form
    std::vector<std::vector<BigRat>> next(static_cast<size_t>(t),
                                          std::vector<BigRat>(static_cast<size_t>(t)));
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b)
        next[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            work[static_cast<size_t>(a)][static_cast<size_t>(b)] -
            work[static_cast<size_t>(a)][static_cast<size_t>(t)] *
                work[static_cast<size_t>(t)][static_cast<size_t>(b)] / pivot;
    work = std::move(next);
    BigInt scale = 1;
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b)
        scale = boost::multiprecision::lcm(
            scale, BigInt(boost::multiprecision::denominator(
                       work[static_cast<size_t>(a)][static_cast<size_t>(b)])));
    if (scale > limit) continue;  // level unusable, pruning simply skipped
    PrefixBounds::Level level;
    level.scale = static_cast<long long>(scale);
    level.mat.assign(static_cast<size_t>(t), std::vector<long long>(static_cast<size_t>(t), 0));
    bool fits = true;
    for (int a = 0; a < t && fits; ++a) {
      for (int b = 0; b < t && fits; ++b) {
        BigRat scaled = work[static_cast<size_t>(a)][static_cast<size_t>(b)] * scale;
        BigInt entry = boost::multiprecision::numerator(scaled);
        if (boost::multiprecision::denominator(scaled) != 1)
          throw std::logic_error("prefix bound scaling failed");
        if (entry > limit || entry < -limit) {
          fits = false;
          break;
        }
        level.mat[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            static_cast<long long>(entry);
      }
    }
    if (!fits) continue;
    level.usable = true;
    out.levels[static_cast<size_t>(t)] = std::move(level);
  }
  return out;
}

long long isqrt_ll(long long v) {
  if (v < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

struct DualEnumeration {
  std::vector<std::vector<int>> points;  // stacked dual vectors, E <= max_degree
  std::vector<long long> energies;
};

// Walks every stacked dual vector inside the certified ball, pruning with
// the exact prefix bounds; keeps those with minimal energy <= max_degree.
struct DualWalk {
  const QuadraticForm& q;
  const PrefixBounds& prefix;
  long long max_degree;
  long long ball_radius_sq;  // certified |x|^2 cap, exact integer
  std::vector<int> x;
  std::vector<char> first_slot;  // variable starts a new color
  DualEnumeration& out;

  bool prefix_bound_exceeds(int t) const {
    const auto& level = prefix.levels[static_cast<size_t>(t)];
    if (!level.usable) return false;
    __int128 quad = 0;
    for (int a = 0; a < t; ++a) {
      if (x[static_cast<size_t>(a)] == 0) continue;
      __int128 row = 0;
      for (int b = 0; b < t; ++b)
        row += static_cast<__int128>(level.mat[static_cast<size_t>(a)][static_cast<size_t>(b)]) *
               x[static_cast<size_t>(b)];
      quad += row * x[static_cast<size_t>(a)];
    }
    __int128 lin = 0;
    for (int a = 0; a < t; ++a)
      lin += static_cast<__int128>(q.linear[static_cast<size_t>(a)]) * x[static_cast<size_t>(a)];
    return quad + static_cast<__int128>(level.scale) * lin >
           static_cast<__int128>(level.scale) * max_degree;
  }

  void walk(int v, long long sumsq) {
    if (v == q.dim) {
      const long long energy = quadratic_form_value(q, x);
      if (energy <= max_degree) {
        out.points.push_back(x);
        out.energies.push_back(energy);
      }
      return;
    }
    long long vmax = isqrt_ll(ball_radius_sq - sumsq);
    if (!first_slot[static_cast<size_t>(v)])
      vmax = std::min<long long>(vmax, x[static_cast<size_t>(v) - 1]);
    for (long long value = vmax; value >= 0; --value) {
      x[static_cast<size_t>(v)] = static_cast<int>(value);
      if (v + 1 < q.dim && prefix_bound_exceeds(v + 1)) continue;
      walk(v + 1, sumsq + value * value);
    }
    x[static_cast<size_t>(v)] = 0;
  }
};

DualEnumeration enumerate_duals(const WeightSpec& w, const QuadraticForm& q,
                                long long max_degree, int radius_factor) {
  if (radius_factor < 1)
    throw std::invalid_argument("radius_factor must be >= 1");
  const PdBound lambda = check_positive_definite(q);
  // E(x) >= lambda |x|^2, so every contributing x satisfies
  // |x|^2 <= max_degree / lambda; the factor widens the ball for the
  // soundness self-check.
  const long long radius_sq = static_cast<long long>(
      (static_cast<__int128>(radius_factor) * max_degree * lambda.den) / lambda.num);
  const PrefixBounds prefix = build_prefix_bounds(q);
  DualEnumeration out;
  std::vector<char> first_slot(static_cast<size_t>(q.dim), 0);
  for (int i = 1; i <= w.rank(); ++i)
    first_slot[static_cast<size_t>(q.color_offset[static_cast<size_t>(i) - 1])] = 1;
  DualWalk walk{q, prefix, max_degree, radius_sq,
                std::vector<int>(static_cast<size_t>(q.dim), 0), first_slot, out};
  walk.walk(0, 0);
  return out;
}

std::vector<int> dual_color_type(const WeightSpec& w, const QuadraticForm& q,
                                 const std::vector<int>& x) {
  std::vector<int> ctype(static_cast<size_t>(w.rank()), 0);
  for (int v = 0; v < q.dim; ++v)
    ctype[static_cast<size_t>(q.vars[static_cast<size_t>(v)].first) - 1] +=
        x[static_cast<size_t>(v)];
  return ctype;
}

// Product over all slots of 1/(q)_{r^(t) - r^(t+1)}, truncated.
UniSeries term_series(const WeightSpec& w, const QuadraticForm& q,
                      const std::vector<UniSeries>& poch, const std::vector<int>& x,
                      long long budget) {
  UniSeries acc = uniseries_one(budget);
  for (int i = 1; i <= w.rank(); ++i) {
    const int off = q.color_offset[static_cast<size_t>(i) - 1];
    const int cap = w.cap(i);
    for (int t = 1; t <= cap; ++t) {
      const int next = (t < cap) ? x[static_cast<size_t>(off + t)] : 0;
      const int diff = x[static_cast<size_t>(off + t - 1)] - next;
      if (diff > 0) uniseries_mul(acc, poch[static_cast<size_t>(diff)]);
    }
  }
  return acc;
}

std::vector<UniSeries> poch_table(const DualEnumeration& duals, long long max_degree) {
  int max_diff = 1;
  for (const auto& x : duals.points)
    for (int v : x) max_diff = std::max(max_diff, v);
  std::vector<UniSeries> poch(static_cast<size_t>(max_diff) + 1);
  for (int d = 0; d <= max_diff; ++d) poch[static_cast<size_t>(d)] = pochhammer_inverse(d, max_degree);
  return poch;
}

}  // namespace

TruncatedSeries fermionic_character(const WeightSpec& w, long long max_degree,
                                    CrossTerm convention, int threads, int radius_factor) {
  if (max_degree < 0) throw std::invalid_argument("fermionic_character: max_degree must be >= 0");
  if (threads < 0) throw std::invalid_argument("fermionic_character: threads must be >= 0");
  const QuadraticForm q = build_quadratic_form(w, convention);
  const DualEnumeration duals = enumerate_duals(w, q, max_degree, radius_factor);
  const std::vector<UniSeries> poch = poch_table(duals, max_degree);
  std::vector<UniSeries> results(duals.points.size());
  const int nt = threads > 0 ? threads : omp_get_max_threads();
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8) num_threads(nt)
  for (long long idx = 0; idx < static_cast<long long>(duals.points.size()); ++idx) {
    try {
      results[static_cast<size_t>(idx)] =
          term_series(w, q, poch, duals.points[static_cast<size_t>(idx)],
                      max_degree - duals.energies[static_cast<size_t>(idx)]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  TruncatedSeries out = series_make(max_degree, w.rank());
  for (size_t idx = 0; idx < duals.points.size(); ++idx) {
    const long long base = duals.energies[idx];
    const std::vector<int> ctype = dual_color_type(w, q, duals.points[idx]);
    const UniSeries& term = results[idx];
    for (long long n = 0; n <= term.degree(); ++n) {
      const Coeff c = term.c[static_cast<size_t>(n)];
      if (c != 0) out.add_term(base + n, ctype, c);
    }
  }
  return out;
}

TruncatedSeries fermionic_character_serial(const WeightSpec& w, long long max_degree,
                                           CrossTerm convention, int radius_factor) {
  if (max_degree < 0)
    throw std::invalid_argument("fermionic_character_serial: max_degree must be >= 0");
  const QuadraticForm q = build_quadratic_form(w, convention);
  const DualEnumeration duals = enumerate_duals(w, q, max_degree, radius_factor);
  const std::vector<UniSeries> poch = poch_table(duals, max_degree);
  TruncatedSeries out = series_make(max_degree, w.rank());
  for (size_t idx = 0; idx < duals.points.size(); ++idx) {
    const long long base = duals.energies[idx];
    const UniSeries term =
        term_series(w, q, poch, duals.points[idx], max_degree - base);
    const std::vector<int> ctype = dual_color_type(w, q, duals.points[idx]);
    for (long long n = 0; n <= term.degree(); ++n) {
      const Coeff c = term.c[static_cast<size_t>(n)];
      if (c != 0) out.add_term(base + n, ctype, c);
    }
  }
  return out;
}

VerifyReport verify_character(const WeightSpec& w, long long max_degree, CrossTerm convention,
                              int threads) {
  // The census route is deliberately independent of the fermionic route:
  // explicit monomial construction on one side, the closed sum on the other.
  VerifyReport report;
  report.max_degree = max_degree;
  const TruncatedSeries census =
      enumerate_basis(w, max_degree, EmitMode::Counts, threads).counts;
  const TruncatedSeries fermi = fermionic_character(w, max_degree, convention, threads);
  auto a = census.terms.begin();
  auto b = fermi.terms.begin();
  while (a != census.terms.end() || b != fermi.terms.end()) {
    ++report.cases;
    bool take_a = (b == fermi.terms.end()) ||
                  (a != census.terms.end() && a->first <= b->first);
    bool take_b = (a == census.terms.end()) ||
                  (b != fermi.terms.end() && b->first <= a->first);
    const auto& key = take_a ? a->first : b->first;
    const Coeff ca = take_a ? a->second : 0;
    const Coeff cb = take_b ? b->second : 0;
    if (ca != cb) {
      report.equal = false;
      report.first_mismatch = VerifyMismatch{key.first, key.second, ca, cb};
      return report;
    }
    if (take_a) ++a;
    if (take_b) ++b;
  }
  return report;
}

std::string verify_report_to_json(const VerifyReport& r) {
  nlohmann::ordered_json root;
  root["status"] = r.equal ? "equal" : "mismatch";
  if (r.first_mismatch) {
    nlohmann::ordered_json m;
    m["q"] = r.first_mismatch->q;
    m["colors"] = r.first_mismatch->colors;
    m["enumeration"] = r.first_mismatch->enumeration;
    m["fermionic"] = r.first_mismatch->fermionic;
    root["first_mismatch"] = std::move(m);
  } else {
    root["first_mismatch"] = nullptr;
  }
  root["max_degree"] = r.max_degree;
  root["cases"] = r.cases;
  return root.dump(2);
}

std::string verify_report_to_text(const VerifyReport& r) {
  std::ostringstream out;
  if (r.equal) {
    out << "equal: all " << r.cases << " coefficients match up to degree " << r.max_degree;
  } else {
    out << "mismatch at q=" << r.first_mismatch->q << " colors=[";
    for (size_t i = 0; i < r.first_mismatch->colors.size(); ++i)
      out << (i ? "," : "") << r.first_mismatch->colors[i];
    out << "]: enumeration=" << r.first_mismatch->enumeration
        << " fermionic=" << r.first_mismatch->fermionic << " (degree limit " << r.max_degree
        << ", " << r.cases << " coefficients compared)";
  }
  return out.str();
}

}  // namespace qp
