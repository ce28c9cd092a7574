#pragma once

// Kummer congruences, the three equivalent pre-realizability criteria, the
// Puri-Ward realizability criterion and the closure constructions built on it.
//
// A sequence (a_n) of integers is pre-realizable when every
// b_n = (sum_{d|n} mu(n/d) a_d) / n is an integer, and realizable when in
// addition every b_n >= 0. Equivalent forms of pre-realizability:
//   (a) the b_n are integers,
//   (b) the zeta coefficients A_n of exp(sum a_n x^n / n) are integers,
//   (c) a_{n p^k} = a_{n p^(k-1)} (mod p^k) for every prime p, p not dividing n.
// All checks here work on the prefix 1..N and report every violation found.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "zetaseq/types.hpp"

namespace zetaseq {

enum class CheckKind {
  kKummer,
  kPrerealizableB,
  kPrerealizableA,
  kPrerealizableC,
  kRealizable,
  kShifted,
};

std::string_view check_name(CheckKind kind);

/// One failed congruence: `value` at `indices` is not 0 modulo `modulus`;
/// `residue` is value mod modulus in [1, modulus). A negative b_n in the
/// realizability check is reported with modulus 0 and residue b_n.
struct Violation {
  std::vector<std::size_t> indices;
  Integer modulus;
  Integer residue;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CongruenceReport {
  CheckKind kind = CheckKind::kKummer;
  std::size_t range_first = 1;
  std::size_t range_last = 0;
  std::size_t shift = 0;
  std::size_t conditions_checked = 0;
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// Parameters of sum_{s=0}^{n} (-1)^s C(n, s) a_{m + s w} = 0 mod (p^m, p^(n e)).
struct KummerParams {
  std::int64_t p;
  unsigned e;
  std::size_t w;
  unsigned n;  // difference order
  std::size_t m;  // base index

  /// Throws InvalidArgument unless p is prime, e >= 1, w >= 1 and p^(e-1)(p-1) | w.
  void validate() const;
};

/// The modulus is p^min(m, n e). m = 0 is a vacuous pass; n = 0 reduces
/// modulo 1 and always passes.
CongruenceReport kummer_check(const IntegerSequence& a, const KummerParams& params);

CongruenceReport prerealizable_check_b(const IntegerSequence& a, std::size_t n_terms);
CongruenceReport prerealizable_check_A(const IntegerSequence& a, std::size_t n_terms);
CongruenceReport prerealizable_check_c(const IntegerSequence& a, std::size_t n_terms);
CongruenceReport realizable_check(const IntegerSequence& a, std::size_t n_terms);

/// Condition (c) for n -> a_{shift + n}, n = 1..N. Violation indices refer to
/// the shifted sequence.
CongruenceReport shifted_prerealizable_check(const IntegerSequence& a, std::size_t shift, std::size_t n_terms);

/// Pointwise product over identical index ranges.
IntegerSequence product_sequence(const IntegerSequence& a, const IntegerSequence& b);

/// Thrown by geometric_quotient when a prime divides base but not base/div.
class HypothesisError : public InvalidArgument {
 public:
  HypothesisError(std::int64_t prime, const std::string& message) : InvalidArgument(message), prime_(prime) {}
  std::int64_t prime() const noexcept { return prime_; }

 private:
  std::int64_t prime_;
};

/// base^n / div for n = 1..N. Requires div | base and every prime factor of
/// base to divide base / div.
IntegerSequence geometric_quotient(std::int64_t base, std::int64_t div, std::size_t n_terms);

struct SweepMismatch {
  std::size_t trial;
  std::vector<Integer> prefix;
  bool verdict_b;
  bool verdict_A;
  bool verdict_c;
  bool extract_matches;
};

struct EquivalenceSweepResult {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t max_length = 0;
  std::size_t prerealizable_count = 0;
  std::vector<SweepMismatch> mismatches;

  bool passed() const noexcept { return mismatches.empty(); }
};

/// Random prefix for the sweep: length uniform in [1, max_length], entries in
/// [lo, hi]. Draws from std::mt19937_64 and maps by remainder, so the stream is
/// identical on every platform for a given seed.
class PrefixGenerator {
 public:
  explicit PrefixGenerator(std::uint64_t seed);
  std::vector<Integer> next(std::size_t max_length, std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Runs `trials` random prefixes (entries in [-9, 9]) through criteria (a),
/// (b), (c) and records every trial where the verdicts disagree or, for a
/// pre-realizable prefix, product_extract(exp_transform(a)) differs from b.
EquivalenceSweepResult equivalence_sweep(std::size_t trials, std::size_t max_length, std::uint64_t seed);

}  // namespace zetaseq
