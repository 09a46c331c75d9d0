#include "qp/quasiparticle.hpp"

#include <algorithm>
#include <stdexcept>

namespace qp {

namespace {

void check_color_range(int color, int rank, const char* who) {
  if (color < 1 || color > rank)
    throw std::invalid_argument(std::string(who) + ": color " + std::to_string(color) +
                                " out of range 1.." + std::to_string(rank));
}

}  // namespace

int ChargeType::particle_count(int color) const {
  check_color_range(color, static_cast<int>(colors.size()), "particle_count");
  return static_cast<int>(colors[static_cast<size_t>(color) - 1].size());
}

long long ChargeType::color_total(int color) const {
  check_color_range(color, static_cast<int>(colors.size()), "color_total");
  long long n = 0;
  for (int v : colors[static_cast<size_t>(color) - 1]) n += v;
  return n;
}

std::vector<int> ChargeType::color_type() const {
  std::vector<int> out(colors.size(), 0);
  for (size_t i = 0; i < colors.size(); ++i) {
    long long n = 0;
    for (int v : colors[i]) n += v;
    out[i] = static_cast<int>(n);
  }
  return out;
}

std::vector<int> DualChargeType::color_type() const {
  std::vector<int> out(rows.size(), 0);
  for (size_t i = 0; i < rows.size(); ++i) {
    long long n = 0;
    for (int v : rows[i]) n += v;
    out[i] = static_cast<int>(n);
  }
  return out;
}

long long Monomial::total_energy() const {
  long long e = 0;
  for (const auto& color : colors)
    for (const Particle& part : color) e -= part.m;
  return e;
}

std::vector<int> Monomial::color_type() const { return charge_type().color_type(); }

ChargeType Monomial::charge_type() const {
  ChargeType c;
  c.colors.resize(colors.size());
  for (size_t i = 0; i < colors.size(); ++i) {
    c.colors[i].reserve(colors[i].size());
    for (const Particle& part : colors[i]) c.colors[i].push_back(part.charge);
  }
  return c;
}

void validate_charge_type(const WeightSpec& w, const ChargeType& c) {
  if (static_cast<int>(c.colors.size()) != w.rank())
    throw std::invalid_argument("charge type must list every color");
  for (int i = 1; i <= w.rank(); ++i) {
    const auto& charges = c.colors[static_cast<size_t>(i) - 1];
    for (size_t p = 0; p < charges.size(); ++p) {
      if (charges[p] < 1 || charges[p] > w.cap(i))
        throw std::invalid_argument("color " + std::to_string(i) + " charge " +
                                    std::to_string(charges[p]) + " outside 1.." +
                                    std::to_string(w.cap(i)));
      if (p > 0 && charges[p] > charges[p - 1])
        throw std::invalid_argument("color " + std::to_string(i) +
                                    " charges must weakly decrease from position 1");
    }
  }
}

DualChargeType conjugate(const WeightSpec& w, const ChargeType& c) {
  validate_charge_type(w, c);
  DualChargeType d;
  d.rows.resize(c.colors.size());
  for (int i = 1; i <= w.rank(); ++i) {
    const auto& charges = c.colors[static_cast<size_t>(i) - 1];
    auto& row = d.rows[static_cast<size_t>(i) - 1];
    row.assign(static_cast<size_t>(w.cap(i)), 0);
    for (int t = 1; t <= w.cap(i); ++t) {
      int count = 0;
      for (int n : charges)
        if (n >= t) ++count;
      row[static_cast<size_t>(t) - 1] = count;
    }
  }
  return d;
}

ChargeType conjugate_inverse(const WeightSpec& w, const DualChargeType& d) {
  if (static_cast<int>(d.rows.size()) != w.rank())
    throw std::invalid_argument("dual charge type must list every color");
  ChargeType c;
  c.colors.resize(d.rows.size());
  for (int i = 1; i <= w.rank(); ++i) {
    const auto& row = d.rows[static_cast<size_t>(i) - 1];
    if (static_cast<int>(row.size()) != w.cap(i))
      throw std::invalid_argument("color " + std::to_string(i) + " dual row must have length " +
                                  std::to_string(w.cap(i)));
    for (size_t t = 0; t < row.size(); ++t) {
      if (row[t] < 0)
        throw std::invalid_argument("dual entries must be nonnegative");
      if (t > 0 && row[t] > row[t - 1])
        throw std::invalid_argument("dual rows must weakly decrease");
    }
    auto& charges = c.colors[static_cast<size_t>(i) - 1];
    const int particles = row.empty() ? 0 : row[0];
    charges.reserve(static_cast<size_t>(particles));
    for (int p = 1; p <= particles; ++p) {
      int n = 0;
      for (int v : row)
        if (v >= p) ++n;
      charges.push_back(n);
    }
  }
  return c;
}

namespace {

// Reads per-color sequences as one flat run starting at color 1 position 1.
template <typename Field, typename T>
std::vector<T> flatten(const Monomial& m, Field field) {
  std::vector<T> out;
  for (const auto& color : m.colors)
    for (const Particle& part : color) out.push_back(field(part));
  return out;
}

template <typename T>
Ordering sequence_order(const std::vector<T>& a, const std::vector<T>& b) {
  const size_t n = std::min(a.size(), b.size());
  for (size_t s = 0; s < n; ++s) {
    if (a[s] < b[s]) return Ordering::Less;
    if (a[s] > b[s]) return Ordering::Greater;
  }
  if (a.size() < b.size()) return Ordering::Less;
  if (a.size() > b.size()) return Ordering::Greater;
  return Ordering::Equal;
}

}  // namespace

Ordering compare(const Monomial& a, const Monomial& b) {
  if (a.colors.size() != b.colors.size())
    throw std::invalid_argument("compare: monomials must share a weight");
  if (a.color_type() != b.color_type()) return Ordering::Incomparable;
  auto charges_a = flatten<int (*)(const Particle&), int>(
      a, [](const Particle& p) { return p.charge; });
  auto charges_b = flatten<int (*)(const Particle&), int>(
      b, [](const Particle& p) { return p.charge; });
  Ordering by_charge = sequence_order(charges_a, charges_b);
  if (by_charge != Ordering::Equal) return by_charge;
  auto m_a = flatten<long long (*)(const Particle&), long long>(
      a, [](const Particle& p) { return p.m; });
  auto m_b = flatten<long long (*)(const Particle&), long long>(
      b, [](const Particle& p) { return p.m; });
  return sequence_order(m_a, m_b);
}

long long energy_bound(const WeightSpec& w, const ChargeType& c, int color, int p) {
  validate_charge_type(w, c);
  check_color_range(color, w.rank(), "energy_bound");
  const auto& charges = c.colors[static_cast<size_t>(color) - 1];
  if (p < 1 || p > static_cast<int>(charges.size()))
    throw std::invalid_argument("energy_bound: position out of range");
  const long long n = charges[static_cast<size_t>(p) - 1];
  long long bound = -n - 2 * (p - 1) * n - delta_shift(w, color, static_cast<int>(n));
  if (color >= 2) {
    const long long rho = w.alg.rho_of(color);
    for (int q : c.colors[static_cast<size_t>(color) - 2])
      bound += std::min(rho * q, n);
  }
  return bound;
}

bool satisfies_difference_conditions(const WeightSpec& w, const Monomial& m) {
  const ChargeType c = m.charge_type();
  validate_charge_type(w, c);
  for (int i = 1; i <= w.rank(); ++i) {
    const auto& parts = m.colors[static_cast<size_t>(i) - 1];
    for (size_t idx = 0; idx < parts.size(); ++idx) {
      if (parts[idx].m > energy_bound(w, c, i, static_cast<int>(idx) + 1)) return false;
      if (idx > 0 && parts[idx].charge == parts[idx - 1].charge &&
          parts[idx].m > parts[idx - 1].m - 2 * parts[idx].charge)
        return false;
    }
  }
  return true;
}

std::pair<long long, long long> identity_uvjet1(const WeightSpec& w, const ChargeType& c,
                                                int color) {
  validate_charge_type(w, c);
  check_color_range(color, w.rank(), "identity_uvjet1");
  const auto& charges = c.colors[static_cast<size_t>(color) - 1];
  long long lhs = 0;
  for (size_t idx = 0; idx < charges.size(); ++idx)
    lhs += (2 * static_cast<long long>(idx) + 1) * charges[idx];
  const DualChargeType d = conjugate(w, c);
  long long rhs = 0;
  for (int r : d.rows[static_cast<size_t>(color) - 1])
    rhs += static_cast<long long>(r) * r;
  return {lhs, rhs};
}

long long cross_term_min(const WeightSpec& w, const ChargeType& c, int color) {
  validate_charge_type(w, c);
  check_color_range(color, w.rank(), "cross_term_min");
  if (color == 1) return 0;
  const long long rho = w.alg.rho_of(color);
  long long total = 0;
  for (int n : c.colors[static_cast<size_t>(color) - 1])
    for (int q : c.colors[static_cast<size_t>(color) - 2])
      total += std::min(rho * q, static_cast<long long>(n));
  return total;
}

namespace {

void validate_dual(const WeightSpec& w, const DualChargeType& d) {
  if (static_cast<int>(d.rows.size()) != w.rank())
    throw std::invalid_argument("dual charge type must list every color");
  for (int i = 1; i <= w.rank(); ++i) {
    const auto& row = d.rows[static_cast<size_t>(i) - 1];
    if (static_cast<int>(row.size()) != w.cap(i))
      throw std::invalid_argument("color " + std::to_string(i) + " dual row must have length " +
                                  std::to_string(w.cap(i)));
    for (size_t t = 0; t < row.size(); ++t) {
      if (row[t] < 0) throw std::invalid_argument("dual entries must be nonnegative");
      if (t > 0 && row[t] > row[t - 1])
        throw std::invalid_argument("dual rows must weakly decrease");
    }
  }
}

}  // namespace

long long cross_term_dual(const WeightSpec& w, const DualChargeType& d, int color,
                          CrossTerm convention) {
  validate_dual(w, d);
  check_color_range(color, w.rank(), "cross_term_dual");
  if (color == 1) return 0;
  const auto& prev = d.rows[static_cast<size_t>(color) - 2];
  const auto& cur = d.rows[static_cast<size_t>(color) - 1];
  long long total = 0;
  if (convention == CrossTerm::Min) {
    const int rho = w.alg.rho_of(color);
    for (int s = 1; s <= w.cap(color); ++s) {
      const int t = (s + rho - 1) / rho;
      total += static_cast<long long>(prev[static_cast<size_t>(t) - 1]) *
               cur[static_cast<size_t>(s) - 1];
    }
  } else {
    const int nu = w.alg.nu_of(color);
    for (int t = 1; t <= w.level; ++t)
      for (int p = 0; p < nu; ++p)
        total += static_cast<long long>(prev[static_cast<size_t>(t) - 1]) *
                 cur[static_cast<size_t>(nu * t - p) - 1];
  }
  return total;
}

long long linear_term(const WeightSpec& w, const DualChargeType& d) {
  validate_dual(w, d);
  if (w.kj == 0) return 0;
  const auto& row = d.rows[static_cast<size_t>(w.j) - 1];
  long long total = 0;
  for (int t = w.tau + 1; t <= w.cap(w.j); ++t) total += row[static_cast<size_t>(t) - 1];
  return total;
}

long long minimal_energy(const WeightSpec& w, const DualChargeType& d, CrossTerm convention) {
  validate_dual(w, d);
  long long energy = linear_term(w, d);
  for (int i = 1; i <= w.rank(); ++i) {
    for (int r : d.rows[static_cast<size_t>(i) - 1]) energy += static_cast<long long>(r) * r;
    energy -= cross_term_dual(w, d, i, convention);
  }
  if (energy < 0)
    throw std::domain_error("minimal_energy: negative minimum for a dual charge type");
  return energy;
}

Monomial saturated_monomial(const WeightSpec& w, const DualChargeType& d) {
  const ChargeType c = conjugate_inverse(w, d);
  Monomial m;
  m.colors.resize(c.colors.size());
  for (int i = 1; i <= w.rank(); ++i) {
    const auto& charges = c.colors[static_cast<size_t>(i) - 1];
    auto& parts = m.colors[static_cast<size_t>(i) - 1];
    parts.reserve(charges.size());
    for (size_t idx = 0; idx < charges.size(); ++idx)
      parts.push_back({charges[idx], energy_bound(w, c, i, static_cast<int>(idx) + 1)});
  }
  return m;
}

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (size_t i = m.colors.size(); i-- > 0;) {
    for (const Particle& part : m.colors[i]) {
      if (!out.empty()) out += " ";
      out += "x_{" + std::to_string(part.charge) + "a" + std::to_string(i + 1) + "}(" +
             std::to_string(part.m) + ")";
    }
  }
  return out.empty() ? "1" : out;
}

std::string render_diagram(const std::vector<int>& charges_ascending) {
  for (size_t i = 0; i < charges_ascending.size(); ++i) {
    if (charges_ascending[i] < 1)
      throw std::invalid_argument("render_diagram: charges must be positive");
    if (i > 0 && charges_ascending[i] < charges_ascending[i - 1])
      throw std::invalid_argument("render_diagram: charges must weakly increase");
  }
  if (charges_ascending.empty()) return "";
  std::string out;
  const int height = charges_ascending.back();
  for (int row = height; row >= 1; --row) {
    std::string line;
    for (int h : charges_ascending) line += (h >= row) ? "[]" : "  ";
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    if (row > 1) out += "\n";
  }
  return out;
}

}  // namespace qp
