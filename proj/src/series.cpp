#include "qp/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qp {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in 64-bit addition");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in 64-bit multiplication");
  return r;
}

UniSeries uniseries_one(long long degree) {
  UniSeries s(degree);
  s.c[0] = 1;
  return s;
}

void uniseries_mul(UniSeries& a, const UniSeries& b) {
  const long long deg = a.degree();
  std::vector<Coeff> out(static_cast<size_t>(deg) + 1, 0);
  for (long long i = 0; i <= deg; ++i) {
    if (a.c[static_cast<size_t>(i)] == 0) continue;
    const long long jmax = std::min(deg - i, b.degree());
    for (long long j = 0; j <= jmax; ++j) {
      if (b.c[static_cast<size_t>(j)] == 0) continue;
      Coeff prod = checked_mul(a.c[static_cast<size_t>(i)], b.c[static_cast<size_t>(j)]);
      out[static_cast<size_t>(i + j)] = checked_add(out[static_cast<size_t>(i + j)], prod);
    }
  }
  a.c = std::move(out);
}

UniSeries pochhammer_inverse(int r, long long degree) {
  if (r < 0) throw std::invalid_argument("pochhammer_inverse: r must be >= 0");
  if (degree < 0) throw std::invalid_argument("pochhammer_inverse: degree must be >= 0");
  // p_r(n) = p_{r-1}(n) + p_r(n - r): partitions with parts <= r either
  // avoid the part r entirely or contain it at least once.
  UniSeries s = uniseries_one(degree);
  for (int part = 1; part <= r; ++part) {
    for (long long n = part; n <= degree; ++n) {
      s.c[static_cast<size_t>(n)] =
          checked_add(s.c[static_cast<size_t>(n)], s.c[static_cast<size_t>(n - part)]);
    }
  }
  return s;
}

namespace {

void count_partitions(long long remaining, int max_part, Coeff& count) {
  if (remaining == 0) {
    count = checked_add(count, 1);
    return;
  }
  for (int first = std::min<long long>(max_part, remaining); first >= 1; --first)
    count_partitions(remaining - first, first, count);
}

}  // namespace

Coeff partition_count_oracle(int r, long long n) {
  if (r < 0) throw std::invalid_argument("partition_count_oracle: r must be >= 0");
  if (n < 0) throw std::invalid_argument("partition_count_oracle: n must be >= 0");
  if (n == 0) return 1;
  if (r == 0) return 0;
  Coeff count = 0;
  count_partitions(n, r, count);
  return count;
}

void TruncatedSeries::add_term(long long m, const std::vector<int>& colors, Coeff c) {
  if (m < 0 || m > max_degree)
    throw std::invalid_argument("add_term: degree " + std::to_string(m) +
                                " outside 0.." + std::to_string(max_degree));
  if (static_cast<int>(colors.size()) != num_colors)
    throw std::invalid_argument("add_term: exponent vector has wrong length");
  for (int e : colors)
    if (e < 0) throw std::invalid_argument("add_term: negative exponent");
  if (c == 0) return;
  Coeff& slot = terms[{m, colors}];
  slot = checked_add(slot, c);
}

Coeff TruncatedSeries::coefficient(long long m, const std::vector<int>& colors) const {
  auto it = terms.find({m, colors});
  return it == terms.end() ? 0 : it->second;
}

TruncatedSeries series_make(long long max_degree, int num_colors) {
  if (max_degree < 0) throw std::invalid_argument("series_make: max_degree must be >= 0");
  if (num_colors < 1) throw std::invalid_argument("series_make: num_colors must be >= 1");
  TruncatedSeries s;
  s.max_degree = max_degree;
  s.num_colors = num_colors;
  return s;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.max_degree != b.max_degree || a.num_colors != b.num_colors)
    throw std::invalid_argument("series_add: grading mismatch");
  TruncatedSeries out = a;
  for (const auto& [key, c] : b.terms) {
    Coeff& slot = out.terms[key];
    slot = checked_add(slot, c);
  }
  return out;
}

TruncatedSeries series_scale_shift(const TruncatedSeries& s, long long dm,
                                   const std::vector<int>& dn) {
  if (dm < 0) throw std::invalid_argument("series_scale_shift: dm must be >= 0");
  if (static_cast<int>(dn.size()) != s.num_colors)
    throw std::invalid_argument("series_scale_shift: shift vector has wrong length");
  for (int e : dn)
    if (e < 0) throw std::invalid_argument("series_scale_shift: negative shift");
  TruncatedSeries out = series_make(s.max_degree, s.num_colors);
  for (const auto& [key, c] : s.terms) {
    long long m = key.first + dm;
    if (m > s.max_degree) continue;
    std::vector<int> colors = key.second;
    for (size_t i = 0; i < colors.size(); ++i) colors[i] += dn[i];
    out.terms[{m, std::move(colors)}] = c;
  }
  return out;
}

std::string series_to_json(const TruncatedSeries& s) {
  nlohmann::ordered_json root;
  root["max_degree"] = s.max_degree;
  root["num_colors"] = s.num_colors;
  root["terms"] = nlohmann::ordered_json::array();
  for (const auto& [key, c] : s.terms) {
    nlohmann::ordered_json term;
    term["q"] = key.first;
    term["colors"] = key.second;
    term["coeff"] = c;
    root["terms"].push_back(std::move(term));
  }
  return root.dump(2);
}

std::string series_to_csv(const TruncatedSeries& s) {
  std::ostringstream out;
  out << "q";
  for (int i = 1; i <= s.num_colors; ++i) out << ",n_" << i;
  out << ",coeff\n";
  for (const auto& [key, c] : s.terms) {
    out << key.first;
    for (int e : key.second) out << ',' << e;
    out << ',' << c << '\n';
  }
  return out.str();
}

namespace {

// Within one q-degree, monomials print in graded order (total exponent
// first), ties broken so that lower color indices carry weight last; this
// lists y1 before y2 and both before y1*y2.
bool monomial_print_less(const std::vector<int>& a, const std::vector<int>& b) {
  long long ta = 0, tb = 0;
  for (int e : a) ta += e;
  for (int e : b) tb += e;
  if (ta != tb) return ta < tb;
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::string format_term(const std::vector<int>& colors, Coeff c) {
  std::string mono;
  for (size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += "y" + std::to_string(i + 1);
    if (colors[i] > 1) mono += "^" + std::to_string(colors[i]);
  }
  if (mono.empty()) return std::to_string(c);
  if (c == 1) return mono;
  return std::to_string(c) + "*" + mono;
}

}  // namespace

std::string series_to_text(const TruncatedSeries& s) {
  if (s.terms.empty()) return "0";
  std::string out;
  auto it = s.terms.begin();
  while (it != s.terms.end()) {
    const long long m = it->first.first;
    std::vector<std::pair<std::vector<int>, Coeff>> group;
    for (; it != s.terms.end() && it->first.first == m; ++it)
      group.emplace_back(it->first.second, it->second);
    std::sort(group.begin(), group.end(),
              [](const auto& a, const auto& b) { return monomial_print_less(a.first, b.first); });
    std::string poly;
    for (const auto& [colors, c] : group) {
      if (!poly.empty()) poly += " + ";
      poly += format_term(colors, c);
    }
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += poly;
    } else {
      out += (m == 1 ? "q" : "q^" + std::to_string(m)) + "*(" + poly + ")";
    }
  }
  return out;
}

}  // namespace qp
