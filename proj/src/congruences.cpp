#include "zetaseq/congruences.hpp"

#include <algorithm>
#include <tuple>

#include "zetaseq/sequences.hpp"
#include "zetaseq/series.hpp"

namespace zetaseq {
namespace {

Integer power(std::int64_t p, unsigned long k) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), k);
  return out;
}

Integer mod_nonnegative(const Integer& value, const Integer& modulus) {
  Integer r;
  mpz_mod(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

void require_terms(std::size_t n_terms, const char* name) {
  if (n_terms == 0) {
    throw InvalidArgument(std::string(name) + ": truncation length must be at least 1");
  }
}

Violation divisibility_violation(const DivisorTransformEntry& entry) {
  const Integer modulus(static_cast<unsigned long>(entry.n));
  return Violation{{entry.n},
                   modulus,
                   mod_nonnegative(entry.numerator, modulus),
                   "b_" + std::to_string(entry.n) + " = " + to_string(entry.value)};
}

CongruenceReport make_report(CheckKind kind, std::size_t first, std::size_t last) {
  CongruenceReport report;
  report.kind = kind;
  report.range_first = first;
  report.range_last = last;
  return report;
}

}  // namespace

std::string_view check_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::kKummer:
      return "kummer";
    case CheckKind::kPrerealizableB:
      return "prerealizable-b";
    case CheckKind::kPrerealizableA:
      return "prerealizable-A";
    case CheckKind::kPrerealizableC:
      return "prerealizable-c";
    case CheckKind::kRealizable:
      return "realizable";
    case CheckKind::kShifted:
      return "shifted";
  }
  return "unknown";
}

void KummerParams::validate() const {
  if (!is_prime(p)) {
    throw InvalidArgument("kummer: p = " + std::to_string(p) + " is not prime");
  }
  if (e == 0) {
    throw InvalidArgument("kummer: e must be at least 1");
  }
  if (w == 0) {
    throw InvalidArgument("kummer: w must be at least 1");
  }
  const Integer period = power(p, e - 1) * static_cast<unsigned long>(p - 1);
  if (!mpz_divisible_p(Integer(static_cast<unsigned long>(w)).get_mpz_t(), period.get_mpz_t())) {
    throw InvalidArgument("kummer: p^(e-1)(p-1) = " + to_string(period) + " does not divide w = " +
                          std::to_string(w));
  }
}

CongruenceReport kummer_check(const IntegerSequence& a, const KummerParams& params) {
  params.validate();
  auto report = make_report(CheckKind::kKummer, params.m, params.m + params.n * params.w);
  if (params.m == 0) {
    return report;
  }
  if (!a.covers(report.range_first, report.range_last)) {
    throw InvalidArgument("kummer: insufficient sequence length, need indices " +
                          std::to_string(report.range_first) + ".." + std::to_string(report.range_last) +
                          ", have " + std::to_string(a.first()) + ".." + std::to_string(a.last()));
  }
  Integer sum = 0;
  Integer binom;
  std::vector<std::size_t> indices;
  for (unsigned s = 0; s <= params.n; ++s) {
    const std::size_t index = params.m + s * params.w;
    mpz_bin_uiui(binom.get_mpz_t(), params.n, s);
    if (s % 2 == 0) {
      sum += binom * a.at(index);
    } else {
      sum -= binom * a.at(index);
    }
    indices.push_back(index);
  }
  const unsigned long exponent =
      std::min<unsigned long>(params.m, static_cast<unsigned long>(params.n) * params.e);
  const Integer modulus = power(params.p, exponent);
  report.conditions_checked = 1;
  const Integer residue = mod_nonnegative(sum, modulus);
  if (residue != 0) {
    report.violations.push_back({std::move(indices), modulus, residue,
                                 "alternating sum = " + to_string(sum)});
  }
  return report;
}

CongruenceReport prerealizable_check_b(const IntegerSequence& a, std::size_t n_terms) {
  require_terms(n_terms, "prerealizable_check_b");
  const auto b = seq_to_b(a, n_terms);
  auto report = make_report(CheckKind::kPrerealizableB, 1, n_terms);
  report.conditions_checked = n_terms;
  for (const auto& entry : b.entries()) {
    if (!entry.integral) report.violations.push_back(divisibility_violation(entry));
  }
  return report;
}

CongruenceReport prerealizable_check_A(const IntegerSequence& a, std::size_t n_terms) {
  require_terms(n_terms, "prerealizable_check_A");
  const auto series = exp_transform(a, n_terms);
  auto report = make_report(CheckKind::kPrerealizableA, 0, n_terms);
  report.conditions_checked = n_terms + 1;
  for (std::size_t n = 0; n <= n_terms; ++n) {
    const Rational& value = series[n];
    if (is_integer(value)) continue;
    const Integer den = value.get_den();
    report.violations.push_back({{n}, den, mod_nonnegative(value.get_num(), den),
                                 "A_" + std::to_string(n) + " = " + to_string(value)});
  }
  return report;
}

CongruenceReport prerealizable_check_c(const IntegerSequence& a, std::size_t n_terms) {
  require_terms(n_terms, "prerealizable_check_c");
  if (!a.covers(1, n_terms)) {
    throw InvalidArgument("prerealizable_check_c: input must cover indices 1.." + std::to_string(n_terms));
  }
  auto report = make_report(CheckKind::kPrerealizableC, 1, n_terms);
  const auto limit = static_cast<std::int64_t>(n_terms);
  for (auto p : primes_up_to(limit)) {
    std::int64_t prev_power = 1;
    for (unsigned alpha = 1; prev_power * p <= limit; ++alpha) {
      const std::int64_t prime_power = prev_power * p;
      const Integer modulus(static_cast<long>(prime_power));
      for (std::int64_t n = 1; n * prime_power <= limit; ++n) {
        if (n % p == 0) continue;
        const auto hi = static_cast<std::size_t>(n * prime_power);
        const auto lo = static_cast<std::size_t>(n * prev_power);
        ++report.conditions_checked;
        const Integer residue = mod_nonnegative(a.at(hi) - a.at(lo), modulus);
        if (residue != 0) {
          report.violations.push_back({{hi, lo}, modulus, residue,
                                       "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                           " alpha=" + std::to_string(alpha)});
        }
      }
      prev_power = prime_power;
    }
  }
  std::sort(report.violations.begin(), report.violations.end(), [](const Violation& x, const Violation& y) {
    return std::tie(x.indices, x.modulus) < std::tie(y.indices, y.modulus);
  });
  return report;
}

CongruenceReport realizable_check(const IntegerSequence& a, std::size_t n_terms) {
  require_terms(n_terms, "realizable_check");
  const auto b = seq_to_b(a, n_terms);
  auto report = make_report(CheckKind::kRealizable, 1, n_terms);
  report.conditions_checked = n_terms;
  for (const auto& entry : b.entries()) {
    if (!entry.integral) {
      report.violations.push_back(divisibility_violation(entry));
    } else if (entry.value < 0) {
      report.violations.push_back({{entry.n}, Integer(0), entry.value.get_num(),
                                   "b_" + std::to_string(entry.n) + " = " + to_string(entry.value) +
                                       " is negative"});
    }
  }
  return report;
}

CongruenceReport shifted_prerealizable_check(const IntegerSequence& a, std::size_t shift, std::size_t n_terms) {
  require_terms(n_terms, "shifted_prerealizable_check");
  if (!a.covers(shift + 1, shift + n_terms)) {
    throw InvalidArgument("shifted_prerealizable_check: insufficient sequence length, need indices " +
                          std::to_string(shift + 1) + ".." + std::to_string(shift + n_terms) + ", have " +
                          std::to_string(a.first()) + ".." + std::to_string(a.last()));
  }
  auto report = prerealizable_check_c(a.slice_from_one(shift + 1, shift + n_terms), n_terms);
  report.kind = CheckKind::kShifted;
  report.shift = shift;
  return report;
}

IntegerSequence product_sequence(const IntegerSequence& a, const IntegerSequence& b) {
  if (a.first() != b.first() || a.last() != b.last()) {
    throw InvalidArgument("product_sequence: index ranges differ ([" + std::to_string(a.first()) + ", " +
                          std::to_string(a.last()) + "] vs [" + std::to_string(b.first()) + ", " +
                          std::to_string(b.last()) + "])");
  }
  std::vector<Integer> out;
  out.reserve(a.size());
  for (std::size_t i = a.first(); i <= a.last(); ++i) out.push_back(a.at(i) * b.at(i));
  return IntegerSequence(a.offset(), std::move(out));
}

IntegerSequence geometric_quotient(std::int64_t base, std::int64_t div, std::size_t n_terms) {
  require_terms(n_terms, "geometric_quotient");
  if (base < 1 || div < 1) {
    throw InvalidArgument("geometric_quotient: base and div must be positive");
  }
  if (base % div != 0) {
    throw InvalidArgument("geometric_quotient: " + std::to_string(div) + " does not divide " +
                          std::to_string(base));
  }
  const std::int64_t quotient = base / div;
  for (auto p : primes_up_to(base)) {
    if (base % p == 0 && quotient % p != 0) {
      throw HypothesisError(p, "geometric_quotient: prime " + std::to_string(p) + " divides " +
                                   std::to_string(base) + " but not " + std::to_string(base) + "/" +
                                   std::to_string(div) + " = " + std::to_string(quotient));
    }
  }
  std::vector<Integer> out;
  out.reserve(n_terms);
  Integer value = 1;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    value *= static_cast<long>(base);
    Integer term;
    mpz_divexact_ui(term.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(div));
    out.push_back(std::move(term));
  }
  return IntegerSequence(1, std::move(out));
}

PrefixGenerator::PrefixGenerator(std::uint64_t seed) : engine_(seed) {}

std::vector<Integer> PrefixGenerator::next(std::size_t max_length, std::int64_t lo, std::int64_t hi) {
  if (max_length == 0 || hi < lo) {
    throw InvalidArgument("PrefixGenerator: empty length or value range");
  }
  const std::size_t length = 1 + static_cast<std::size_t>(engine_() % max_length);
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::vector<Integer> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.emplace_back(static_cast<long>(lo + static_cast<std::int64_t>(engine_() % span)));
  }
  return out;
}

EquivalenceSweepResult equivalence_sweep(std::size_t trials, std::size_t max_length, std::uint64_t seed) {
  EquivalenceSweepResult result;
  result.seed = seed;
  result.trials = trials;
  result.max_length = max_length;
  PrefixGenerator generator(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto prefix = generator.next(max_length, -9, 9);
    const IntegerSequence a(1, prefix);
    const std::size_t n_terms = a.size();
    const bool vb = prerealizable_check_b(a, n_terms).passed();
    const bool vA = prerealizable_check_A(a, n_terms).passed();
    const bool vc = prerealizable_check_c(a, n_terms).passed();
    bool extract_matches = true;
    if (vb && vA) {
      ++result.prerealizable_count;
      extract_matches = product_extract(exp_transform(a, n_terms)) == seq_to_b(a, n_terms).integers();
    }
    if (vb != vA || vb != vc || !extract_matches) {
      result.mismatches.push_back({trial, std::move(prefix), vb, vA, vc, extract_matches});
    }
  }
  return result;
}

}  // namespace zetaseq
