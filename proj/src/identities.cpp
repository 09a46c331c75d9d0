#include "qp/identities.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qp {

namespace {

std::string describe_charge_type(const ChargeType& c) {
  std::ostringstream out;
  for (size_t i = 0; i < c.colors.size(); ++i) {
    out << (i ? " " : "") << "color" << (i + 1) << "=(";
    for (size_t p = 0; p < c.colors[i].size(); ++p)
      out << (p ? "," : "") << c.colors[i][p];
    out << ")";
  }
  return out.str();
}

std::string describe_dual(const DualChargeType& d) {
  std::ostringstream out;
  for (size_t i = 0; i < d.rows.size(); ++i) {
    out << (i ? " " : "") << "row" << (i + 1) << "=(";
    for (size_t t = 0; t < d.rows[i].size(); ++t)
      out << (t ? "," : "") << d.rows[i][t];
    out << ")";
  }
  return out.str();
}

}  // namespace

std::string check_uvjet1(const WeightSpec& w, const ChargeType& c) {
  for (int i = 1; i <= w.rank(); ++i) {
    const auto [lhs, rhs] = identity_uvjet1(w, c, i);
    if (lhs != rhs) {
      std::ostringstream out;
      out << "uvjet1 color " << i << ": " << lhs << " != " << rhs << " for "
          << describe_charge_type(c);
      return out.str();
    }
  }
  return "";
}

std::string check_uvjet2(const WeightSpec& w, const ChargeType& c) {
  const DualChargeType d = conjugate(w, c);
  for (int i = 2; i <= w.rank(); ++i) {
    const long long lhs = cross_term_min(w, c, i);
    const long long rhs = cross_term_dual(w, d, i, CrossTerm::Min);
    if (lhs != rhs) {
      std::ostringstream out;
      out << "uvjet2 color " << i << ": direct " << lhs << " != dual " << rhs << " for "
          << describe_charge_type(c);
      return out.str();
    }
  }
  return "";
}

std::string check_uvjet3(const WeightSpec& w, const ChargeType& c) {
  const DualChargeType d = conjugate(w, c);
  const long long lhs = linear_term(w, d);
  long long rhs = 0;
  if (w.kj > 0)
    for (int n : c.colors[static_cast<size_t>(w.j) - 1]) rhs += delta_shift(w, w.j, n);
  if (lhs != rhs) {
    std::ostringstream out;
    out << "uvjet3: dual linear term " << lhs << " != total charge shift " << rhs << " for "
        << describe_charge_type(c);
    return out.str();
  }
  return "";
}

std::string check_involution(const WeightSpec& w, const ChargeType& c) {
  const ChargeType back = conjugate_inverse(w, conjugate(w, c));
  if (!(back == c))
    return "involution: conjugate round trip changed " + describe_charge_type(c) + " into " +
           describe_charge_type(back);
  return "";
}

std::string check_dual_involution(const WeightSpec& w, const DualChargeType& d) {
  const DualChargeType back = conjugate(w, conjugate_inverse(w, d));
  if (!(back == d))
    return "involution: dual round trip changed " + describe_dual(d) + " into " +
           describe_dual(back);
  return "";
}

std::string check_quadratic(const WeightSpec& w, const QuadraticForm& q,
                            const DualChargeType& d) {
  const long long direct = quadratic_form_value(q, stack_dual(w, d));
  const long long combinatorial = minimal_energy(w, d);
  if (direct != combinatorial) {
    std::ostringstream out;
    out << "quadratic: form value " << direct << " != minimal energy " << combinatorial
        << " for " << describe_dual(d);
    return out.str();
  }
  return "";
}

std::string check_extremal(const WeightSpec& w, const DualChargeType& d) {
  const Monomial sat = saturated_monomial(w, d);
  if (!satisfies_difference_conditions(w, sat))
    return "extremal: saturated monomial of " + describe_dual(d) + " is not admissible";
  if (sat.total_energy() != minimal_energy(w, d)) {
    std::ostringstream out;
    out << "extremal: saturated energy " << sat.total_energy() << " != minimal energy "
        << minimal_energy(w, d) << " for " << describe_dual(d);
    return out.str();
  }
  for (size_t ci = 0; ci < sat.colors.size(); ++ci) {
    const auto& particles = sat.colors[ci];
    for (size_t p = 0; p < particles.size(); ++p) {
      Monomial raised = sat;
      raised.colors[ci][p].m += 1;
      if (satisfies_difference_conditions(w, raised)) {
        std::ostringstream out;
        out << "extremal: raising color " << (ci + 1) << " position " << (p + 1)
            << " keeps the saturated monomial of " << describe_dual(d) << " admissible";
        return out.str();
      }
      const bool run_tail =
          p + 1 == particles.size() || particles[p + 1].charge != particles[p].charge;
      if (!run_tail) continue;
      Monomial lowered = sat;
      lowered.colors[ci][p].m -= 1;
      if (!satisfies_difference_conditions(w, lowered)) {
        std::ostringstream out;
        out << "extremal: lowering color " << (ci + 1) << " position " << (p + 1)
            << " breaks the saturated monomial of " << describe_dual(d);
        return out.str();
      }
    }
  }
  return "";
}

ChargeType sample_charge_type(const WeightSpec& w, std::mt19937_64& rng) {
  ChargeType c;
  c.colors.resize(static_cast<size_t>(w.rank()));
  for (int i = 1; i <= w.rank(); ++i) {
    int count = 0;
    while (count < 6 && (rng() & 1ULL)) ++count;
    auto& charges = c.colors[static_cast<size_t>(i) - 1];
    charges.resize(static_cast<size_t>(count));
    const unsigned long long cap = static_cast<unsigned long long>(w.cap(i));
    for (int p = 0; p < count; ++p)
      charges[static_cast<size_t>(p)] = static_cast<int>(1 + rng() % cap);
    std::sort(charges.begin(), charges.end(), std::greater<int>());
  }
  return c;
}

DualChargeType sample_dual_charge_type(const WeightSpec& w, std::mt19937_64& rng) {
  DualChargeType d;
  d.rows.resize(static_cast<size_t>(w.rank()));
  for (int i = 1; i <= w.rank(); ++i) {
    auto& row = d.rows[static_cast<size_t>(i) - 1];
    row.resize(static_cast<size_t>(w.cap(i)));
    for (auto& v : row) v = static_cast<int>(rng() % 4ULL);
    std::sort(row.begin(), row.end(), std::greater<int>());
  }
  return d;
}

IdentityReport run_identity_suite(const WeightSpec& w, long long samples,
                                  unsigned long long seed) {
  if (samples < 0) throw std::invalid_argument("run_identity_suite: samples must be >= 0");
  IdentityReport report;
  report.samples = samples;
  const char* names[] = {"uvjet1",          "uvjet2",    "uvjet3",  "involution",
                         "dual_involution", "quadratic", "extremal"};
  for (const char* n : names) report.passes[n] = 0;
  std::mt19937_64 rng(seed);
  const QuadraticForm q = build_quadratic_form(w);
  auto record = [&](const char* name, const std::string& msg) {
    if (msg.empty()) {
      ++report.passes[name];
    } else if (report.ok) {
      report.ok = false;
      report.counterexample = msg;
    }
  };
  for (long long s = 0; s < samples; ++s) {
    const ChargeType c = sample_charge_type(w, rng);
    const DualChargeType d = sample_dual_charge_type(w, rng);
    record("uvjet1", check_uvjet1(w, c));
    record("uvjet2", check_uvjet2(w, c));
    record("uvjet3", check_uvjet3(w, c));
    record("involution", check_involution(w, c));
    record("dual_involution", check_dual_involution(w, d));
    record("quadratic", check_quadratic(w, q, d));
    record("extremal", check_extremal(w, d));
  }
  return report;
}

std::string identity_report_to_json(const IdentityReport& r) {
  nlohmann::ordered_json root;
  root["status"] = r.ok ? "ok" : "counterexample";
  root["samples"] = r.samples;
  nlohmann::ordered_json passes;
  for (const auto& [name, count] : r.passes) passes[name] = count;
  root["passes"] = std::move(passes);
  if (r.ok)
    root["counterexample"] = nullptr;
  else
    root["counterexample"] = r.counterexample;
  return root.dump(2);
}

std::string identity_report_to_text(const IdentityReport& r) {
  std::ostringstream out;
  out << "status: " << (r.ok ? "ok" : "counterexample") << "\n";
  out << "samples: " << r.samples << "\n";
  for (const auto& [name, count] : r.passes) out << name << ": " << count << "\n";
  if (!r.ok) out << "counterexample: " << r.counterexample << "\n";
  return out.str();
}

}  // namespace qp
