#include "zetaseq/gabcke.hpp"

#include <string>

#include "zetaseq/congruences.hpp"
#include "zetaseq/sequences.hpp"

namespace zetaseq {
namespace {

// x_0 = start, (n+1) x_{n+1} = sign * sum_{k=0}^{n} w_{k+1} x_{n-k}
IntegerSequence convolution_recurrence(const IntegerSequence& weights, std::size_t n_terms, long start,
                                       int sign, const char* name) {
  if (n_terms > 0 && !weights.covers(1, n_terms)) {
    throw InvalidArgument(std::string(name) + ": weights must cover 1.." + std::to_string(n_terms));
  }
  std::vector<Integer> x;
  x.reserve(n_terms + 1);
  x.emplace_back(start);
  for (std::size_t n = 0; n < n_terms; ++n) {
    Integer sum = 0;
    for (std::size_t k = 0; k <= n; ++k) sum += weights.at(k + 1) * x[n - k];
    if (sign < 0) sum = -sum;
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(n + 1))) {
      throw InternalError(std::string(name) + "_" + std::to_string(n + 1) + " is not an integer");
    }
    mpz_divexact_ui(sum.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(n + 1));
    x.push_back(std::move(sum));
  }
  return IntegerSequence(0, std::move(x));
}

}  // namespace

IntegerSequence gabcke_a(const IntegerSequence& euler, std::size_t n_terms) {
  if (n_terms == 0) {
    throw InvalidArgument("gabcke_a: need at least one term");
  }
  if (!euler.covers(1, n_terms)) {
    throw InvalidArgument("gabcke_a: Euler prefix must reach E_" + std::to_string(2 * n_terms));
  }
  std::vector<Integer> abs_euler;
  abs_euler.reserve(n_terms);
  for (std::size_t k = 1; k <= n_terms; ++k) abs_euler.push_back(abs(euler.at(k)));
  return product_sequence(IntegerSequence(1, std::move(abs_euler)), geometric_quotient(16, 8, n_terms));
}

IntegerSequence gabcke_a(std::size_t n_terms) { return gabcke_a(euler_numbers(n_terms), n_terms); }

IntegerSequence lambda_seq(const IntegerSequence& weights, std::size_t n_terms) {
  return convolution_recurrence(weights, n_terms, 1, 1, "lambda");
}

IntegerSequence rho_seq(const IntegerSequence& weights, std::size_t n_terms) {
  return convolution_recurrence(weights, n_terms, -1, -1, "rho");
}

IntegerSequence lambda_seq(std::size_t n_terms) {
  if (n_terms == 0) return IntegerSequence(0, {Integer(1)});
  return lambda_seq(gabcke_a(n_terms), n_terms);
}

IntegerSequence rho_seq(std::size_t n_terms) {
  if (n_terms == 0) return IntegerSequence(0, {Integer(-1)});
  return rho_seq(gabcke_a(n_terms), n_terms);
}

IntegerSequence mu_seq(const IntegerSequence& lambda, const IntegerSequence& rho) {
  if (lambda.first() != rho.first() || lambda.last() != rho.last()) {
    throw InvalidArgument("mu_seq: lambda and rho cover different ranges");
  }
  std::vector<Integer> mu;
  mu.reserve(lambda.size());
  for (std::size_t n = lambda.first(); n <= lambda.last(); ++n) {
    Integer sum = lambda.at(n) + rho.at(n);
    if (!mpz_even_p(sum.get_mpz_t())) {
      throw InternalError("mu_" + std::to_string(n) + ": lambda + rho is odd");
    }
    mpz_divexact_ui(sum.get_mpz_t(), sum.get_mpz_t(), 2);
    mu.push_back(std::move(sum));
  }
  return IntegerSequence(lambda.offset(), std::move(mu));
}

IntegerSequence mu_seq(std::size_t n_terms) {
  const auto triple = gabcke_triple(n_terms);
  return triple.mu;
}

GabckeTriple gabcke_triple(const IntegerSequence& euler, std::size_t n_terms) {
  if (n_terms == 0) {
    IntegerSequence lambda(0, {Integer(1)});
    IntegerSequence rho(0, {Integer(-1)});
    auto mu = mu_seq(lambda, rho);
    return {std::move(lambda), std::move(rho), std::move(mu)};
  }
  const auto weights = gabcke_a(euler, n_terms);
  auto lambda = lambda_seq(weights, n_terms);
  auto rho = rho_seq(weights, n_terms);
  auto mu = mu_seq(lambda, rho);
  return {std::move(lambda), std::move(rho), std::move(mu)};
}

GabckeTriple gabcke_triple(std::size_t n_terms) {
  return gabcke_triple(euler_numbers(n_terms), n_terms);
}

bool ValuationProfile::passed() const noexcept { return !first_mismatch(); }

std::optional<std::size_t> ValuationProfile::first_mismatch() const noexcept {
  for (const auto& row : rows) {
    if (!row.matches()) return row.n;
  }
  return std::nullopt;
}

ValuationProfile valuation_check(const GabckeTriple& triple) {
  auto nu2 = [](const Integer& v) -> std::optional<unsigned> {
    if (v == 0) return std::nullopt;
    return nu_p(v, 2);
  };
  ValuationProfile profile;
  profile.rows.reserve(triple.lambda.size());
  for (std::size_t n = 0; n <= triple.lambda.last(); ++n) {
    profile.rows.push_back({n, nu2(triple.lambda.at(n)), nu2(triple.rho.at(n)), binary_digit_sum(n)});
  }
  return profile;
}

ValuationProfile valuation_check(std::size_t n_terms) { return valuation_check(gabcke_triple(n_terms)); }

}  // namespace zetaseq
