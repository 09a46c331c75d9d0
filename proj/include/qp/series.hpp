#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qp {

using Coeff = unsigned long long;

// Checked nonnegative 64-bit arithmetic; throws std::overflow_error instead
// of wrapping.
Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

// Dense series in q alone, truncated at a fixed degree (inclusive).
struct UniSeries {
  std::vector<Coeff> c;  // c[n] = coefficient of q^n

  explicit UniSeries(long long degree = 0)
      : c(static_cast<size_t>(degree < 0 ? 0 : degree) + 1, 0) {}
  long long degree() const { return static_cast<long long>(c.size()) - 1; }
};

UniSeries uniseries_one(long long degree);
// a := a * b, truncated at a's degree, checked coefficient arithmetic.
void uniseries_mul(UniSeries& a, const UniSeries& b);

// 1 / ((1-q)(1-q^2)...(1-q^r)) truncated at the given degree.  Coefficient
// of q^n counts partitions of n into parts of size at most r.
UniSeries pochhammer_inverse(int r, long long degree);

// The same count obtained by explicitly generating every partition of n
// into parts of size at most r; used as an independent cross-check.
Coeff partition_count_oracle(int r, long long n);

// Sparse series in q and one formal variable per color, truncated at a
// fixed q-degree.  Keys iterate in (degree, lexicographic exponent) order,
// which fixes every serialization below.
struct TruncatedSeries {
  long long max_degree = 0;
  int num_colors = 0;
  std::map<std::pair<long long, std::vector<int>>, Coeff> terms;

  // Accumulates (checked).  Requires 0 <= m <= max_degree and a well-formed
  // exponent vector; zero coefficients are dropped.
  void add_term(long long m, const std::vector<int>& colors, Coeff c);
  Coeff coefficient(long long m, const std::vector<int>& colors) const;

  bool operator==(const TruncatedSeries& o) const = default;
};

TruncatedSeries series_make(long long max_degree, int num_colors);

// Termwise sum; both operands must share max_degree and num_colors.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplies by q^dm * y^dn (dm >= 0, dn componentwise >= 0); terms pushed
// past max_degree are truncated away.
TruncatedSeries series_scale_shift(const TruncatedSeries& s, long long dm,
                                   const std::vector<int>& dn);

std::string series_to_json(const TruncatedSeries& s);
std::string series_to_csv(const TruncatedSeries& s);
std::string series_to_text(const TruncatedSeries& s);

}  // namespace qp
