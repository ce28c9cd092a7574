#include "zetaseq/sequences.hpp"

#include <bit>
#include <string>

namespace zetaseq {

IntegerSequence euler_numbers(std::size_t count) {
  std::vector<Integer> e;
  e.reserve(count + 1);
  e.emplace_back(1);
  Integer binom;
  for (std::size_t n = 1; n <= count; ++n) {
    // E_{2n} = -sum_{k<n} C(2n, 2k) E_{2k}
    Integer acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), 2 * n, 2 * k);
      acc += binom * e[k];
    }
    e.push_back(-acc);
  }
  return IntegerSequence(0, std::move(e));
}

IntegerSequence euler_abs(std::size_t n_terms) {
  if (n_terms == 0) {
    throw InvalidArgument("euler_abs needs at least one term");
  }
  const auto e = euler_numbers(n_terms);
  std::vector<Integer> out;
  out.reserve(n_terms);
  for (std::size_t k = 1; k <= n_terms; ++k) out.push_back(abs(e.at(k)));
  return IntegerSequence(1, std::move(out));
}

RationalSequence bernoulli_numbers(std::size_t count) {
  // Akiyama-Tanigawa; it produces B_1 = +1/2, flipped below.
  std::vector<Rational> row(count + 1);
  std::vector<Rational> out;
  out.reserve(count + 1);
  for (std::size_t m = 0; m <= count; ++m) {
    row[m] = Rational(1, static_cast<unsigned long>(m + 1));
    for (std::size_t j = m; j >= 1; --j) {
      row[j - 1] = static_cast<unsigned long>(j) * (row[j - 1] - row[j]);
    }
    out.push_back(row[0]);
  }
  if (count >= 1) out[1] = -out[1];
  return RationalSequence(0, std::move(out));
}

IntegerSequence tangent_numbers(std::size_t count) {
  const auto b = bernoulli_numbers(2 * count + 2);
  std::vector<Integer> out;
  out.reserve(count + 1);
  for (std::size_t n = 0; n <= count; ++n) {
    Integer four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, n + 1);
    Rational t = Rational(four_pow * (four_pow - 1)) * b.at(2 * n + 2) /
                 Rational(static_cast<unsigned long>(2 * n + 2));
    if (n % 2 == 1) t = -t;
    if (!is_integer(t)) {
      throw InternalError("tangent number T_" + std::to_string(2 * n + 1) +
                          " is not an integer: " + to_string(t));
    }
    out.push_back(t.get_num());
  }
  return IntegerSequence(0, std::move(out));
}

int mobius(std::int64_t n) {
  if (n <= 0) {
    throw InvalidArgument("mobius requires n >= 1, got " + std::to_string(n));
  }
  int result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) {
    throw InvalidArgument("divisors requires n >= 1, got " + std::to_string(n));
  }
  std::vector<std::int64_t> low;
  std::vector<std::int64_t> high;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::int64_t sigma(std::int64_t n) {
  if (n <= 0) {
    throw InvalidArgument("sigma requires n >= 1, got " + std::to_string(n));
  }
  std::int64_t total = 0;
  for (auto d : divisors(n)) total += d;
  return total;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (std::int64_t q = p * p; q <= limit; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return primes;
}

unsigned nu_p(const Integer& m, std::int64_t p) {
  if (m == 0) {
    throw InvalidArgument("valuation of zero is infinite");
  }
  if (!is_prime(p)) {
    throw InvalidArgument("nu_p requires a prime, got " + std::to_string(p));
  }
  Integer rest;
  const Integer prime(static_cast<long>(p));
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t()));
}

unsigned binary_digit_sum(std::uint64_t n) { return static_cast<unsigned>(std::popcount(n)); }

}  // namespace zetaseq
