#pragma once

// Riemann-Siegel coefficient sequences:
//
//   lambda_0 = 1,   (n+1) lambda_{n+1} =  sum_{k=0}^{n} 2^(4k+1) |E_{2k+2}| lambda_{n-k}
//   rho_0    = -1,  (n+1) rho_{n+1}    = -sum_{k=0}^{n} 2^(4k+1) |E_{2k+2}| rho_{n-k}
//   mu_n = (lambda_n + rho_n) / 2
//
// The weights 2^(4k+1)|E_{2k+2}| are a_{k+1} for a_n = 2^(4n-3)|E_{2n}|, so
// lambda = exp_transform(a) and -rho = exp_transform(-a). Each division by
// n+1 is checked exact; a remainder raises InternalError.

#include <optional>
#include <vector>

#include "zetaseq/types.hpp"

namespace zetaseq {

/// a_n = 2^(4n-3) |E_{2n}| for n = 1..N.
IntegerSequence gabcke_a(std::size_t n_terms);
/// Same, from a precomputed Euler prefix covering E_0..E_{2N}.
IntegerSequence gabcke_a(const IntegerSequence& euler, std::size_t n_terms);

/// lambda_0..lambda_N.
IntegerSequence lambda_seq(std::size_t n_terms);
IntegerSequence lambda_seq(const IntegerSequence& weights, std::size_t n_terms);

/// rho_0..rho_N.
IntegerSequence rho_seq(std::size_t n_terms);
IntegerSequence rho_seq(const IntegerSequence& weights, std::size_t n_terms);

/// mu_0..mu_N.
IntegerSequence mu_seq(std::size_t n_terms);
IntegerSequence mu_seq(const IntegerSequence& lambda, const IntegerSequence& rho);

struct GabckeTriple {
  IntegerSequence lambda;
  IntegerSequence rho;
  IntegerSequence mu;
};

/// All three sequences to index N from one shared Euler prefix.
GabckeTriple gabcke_triple(std::size_t n_terms);
GabckeTriple gabcke_triple(const IntegerSequence& euler, std::size_t n_terms);

struct ValuationRow {
  std::size_t n;
  std::optional<unsigned> nu2_lambda;  // empty when the value is 0
  std::optional<unsigned> nu2_rho;
  unsigned expected;  // binary digit sum of n

  bool matches() const noexcept { return nu2_lambda == expected && nu2_rho == expected; }
};

struct ValuationProfile {
  std::vector<ValuationRow> rows;  // n = 0..N

  bool passed() const noexcept;
  std::optional<std::size_t> first_mismatch() const noexcept;
};

/// 2-adic valuations of lambda_n and rho_n against s(n) for n = 0..N.
ValuationProfile valuation_check(std::size_t n_terms);
ValuationProfile valuation_check(const GabckeTriple& triple);

}  // namespace zetaseq
