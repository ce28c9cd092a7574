#pragma once

// Classical sequences: Euler, Bernoulli and tangent numbers, plus the small
// arithmetic functions the transforms need (Möbius, divisor sum, p-adic
// valuation, binary digit sum).

#include <cstdint>
#include <vector>

#include "zetaseq/types.hpp"

namespace zetaseq {

/// E_0, E_2, ..., E_{2*count}, stored at offset 0 so that index k holds E_{2k}.
/// Uses the integer convolution sum_k C(2n, 2k) E_{2k} = 0 (n >= 1), E_0 = 1.
IntegerSequence euler_numbers(std::size_t count);

/// |E_2|, ..., |E_{2N}| at offset 1.
IntegerSequence euler_abs(std::size_t n_terms);

/// B_0 .. B_count with B_1 = -1/2.
RationalSequence bernoulli_numbers(std::size_t count);

/// T_1, T_3, ..., T_{2*count+1} at offset 0 (index n holds T_{2n+1}).
/// Throws InternalError if the Bernoulli-number formula leaves a fraction.
IntegerSequence tangent_numbers(std::size_t count);

int mobius(std::int64_t n);
std::int64_t sigma(std::int64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

/// Largest alpha with p^alpha | m. m = 0 and composite p are rejected.
unsigned nu_p(const Integer& m, std::int64_t p);

/// Number of ones in the binary expansion of n.
unsigned binary_digit_sum(std::uint64_t n);

}  // namespace zetaseq
