#pragma once

// Conversions between the three descriptions of a dynamical zeta function:
//
//   a_n  fixed-point counts        exp(sum_n a_n x^n / n)
//   b_n  product exponents         prod_n (1 - x^n)^(-b_n)
//   A_n  zeta coefficients         sum_n A_n x^n
//
// with n b_n = sum_{d|n} mu(n/d) a_d and (n+1) A_{n+1} = sum_k A_{n-k} a_{k+1}.
// Every operation takes an explicit truncation length N and only reads
// a_1..a_N (resp. b_1..b_N); series results hold x^0..x^N.

#include <optional>
#include <vector>

#include "zetaseq/types.hpp"

namespace zetaseq {

struct DivisorTransformEntry {
  std::size_t n;
  Integer numerator;  // sum_{d|n} mu(n/d) a_d
  Rational value;     // numerator / n
  bool integral;
};

class DivisorTransformResult {
 public:
  explicit DivisorTransformResult(std::vector<DivisorTransformEntry> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const DivisorTransformEntry& at(std::size_t n) const;
  const std::vector<DivisorTransformEntry>& entries() const noexcept { return entries_; }

  bool all_integral() const noexcept { return !first_failure_; }
  std::optional<std::size_t> first_failure() const noexcept { return first_failure_; }

  RationalSequence values() const;
  /// b_1..b_N as integers; throws InvalidArgument at the first non-integral index.
  IntegerSequence integers() const;

 private:
  std::vector<DivisorTransformEntry> entries_;
  std::optional<std::size_t> first_failure_;
};

/// b_n = (sum_{d|n} mu(n/d) a_d) / n for n = 1..N, with integrality verdicts.
DivisorTransformResult seq_to_b(const IntegerSequence& a, std::size_t n_terms);

/// a_n = sum_{d|n} d b_d for n = 1..N.
IntegerSequence b_to_seq(const IntegerSequence& b, std::size_t n_terms);

/// A_0..A_N from the recurrence A_0 = 1, (n+1) A_{n+1} = sum_k A_{n-k} a_{k+1}.
RationalSeries exp_transform(const IntegerSequence& a, std::size_t n_terms);
RationalSeries exp_transform(const RationalSequence& a, std::size_t n_terms);

/// Inverse of exp_transform: a_1..a_N for a series A_0..A_N with A_0 = 1.
RationalSequence log_transform(const RationalSeries& series);

/// prod_{n=1}^{N} (1 - x^n)^(-b_n) truncated after x^N.
RationalSeries product_expand(const IntegerSequence& b, std::size_t n_terms);

/// Exponents c_1..c_N with prod (1 - x^n)^(-c_n) = A mod x^(N+1), found by
/// peeling one factor (1 - x^n)^(c_n) at a time with c_n the current x^n
/// coefficient. Requires A_0 = 1 and integer coefficients.
IntegerSequence product_extract(const RationalSeries& series);

/// Truncated product, order of the shorter factor.
RationalSeries series_multiply(const RationalSeries& f, const RationalSeries& g);

/// Formal exp; requires f_0 = 0.
RationalSeries series_exp(const RationalSeries& f);
/// Formal log; requires g_0 = 1.
RationalSeries series_log(const RationalSeries& g);

/// Coefficients of (1 - y)^e for y^0..y^max_power (generalized binomial).
std::vector<Integer> binomial_power_coefficients(const Integer& e, std::size_t max_power);

}  // namespace zetaseq
