#include "zetaseq/series.hpp"

#include <string>

#include "zetaseq/sequences.hpp"

namespace zetaseq {
namespace {

void require_prefix(const IndexedSequence<Integer>& s, std::size_t n_terms, const char* name) {
  if (n_terms == 0) {
    throw InvalidArgument(std::string(name) + ": truncation length must be at least 1");
  }
  if (!s.covers(1, n_terms)) {
    throw InvalidArgument(std::string(name) + ": input must cover indices 1.." + std::to_string(n_terms) +
                          ", has " + std::to_string(s.first()) + ".." + std::to_string(s.last()));
  }
}

std::vector<int> mobius_table(std::size_t n_terms) {
  std::vector<int> mu(n_terms + 1, 0);
  for (std::size_t n = 1; n <= n_terms; ++n) mu[n] = mobius(static_cast<std::int64_t>(n));
  return mu;
}

}  // namespace

DivisorTransformResult::DivisorTransformResult(std::vector<DivisorTransformEntry> entries)
    : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (!e.integral) {
      first_failure_ = e.n;
      break;
    }
  }
}

const DivisorTransformEntry& DivisorTransformResult::at(std::size_t n) const {
  if (n == 0 || n > entries_.size()) {
    throw IndexError("divisor transform index " + std::to_string(n) + " outside [1, " +
                     std::to_string(entries_.size()) + "]");
  }
  return entries_[n - 1];
}

RationalSequence DivisorTransformResult::values() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.value);
  return RationalSequence(1, std::move(out));
}

IntegerSequence DivisorTransformResult::integers() const {
  if (first_failure_) {
    throw InvalidArgument("b_" + std::to_string(*first_failure_) + " is not an integer: " +
                          to_string(at(*first_failure_).value));
  }
  std::vector<Integer> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.value.get_num());
  return IntegerSequence(1, std::move(out));
}

DivisorTransformResult seq_to_b(const IntegerSequence& a, std::size_t n_terms) {
  require_prefix(a, n_terms, "seq_to_b");
  const auto mu = mobius_table(n_terms);
  std::vector<DivisorTransformEntry> entries;
  entries.reserve(n_terms);
  for (std::size_t n = 1; n <= n_terms; ++n) {
    Integer sum = 0;
    for (auto d : divisors(static_cast<std::int64_t>(n))) {
      const int m = mu[n / static_cast<std::size_t>(d)];
      if (m == 1) {
        sum += a.at(static_cast<std::size_t>(d));
      } else if (m == -1) {
        sum -= a.at(static_cast<std::size_t>(d));
      }
    }
    const Integer den(static_cast<unsigned long>(n));
    Rational value = make_rational(sum, den);
    const bool integral = is_integer(value);
    entries.push_back({n, std::move(sum), std::move(value), integral});
  }
  return DivisorTransformResult(std::move(entries));
}

IntegerSequence b_to_seq(const IntegerSequence& b, std::size_t n_terms) {
  require_prefix(b, n_terms, "b_to_seq");
  std::vector<Integer> a;
  a.reserve(n_terms);
  for (std::size_t n = 1; n <= n_terms; ++n) {
    Integer sum = 0;
    for (auto d : divisors(static_cast<std::int64_t>(n))) {
      sum += static_cast<long>(d) * b.at(static_cast<std::size_t>(d));
    }
    a.push_back(std::move(sum));
  }
  return IntegerSequence(1, std::move(a));
}

RationalSeries exp_transform(const RationalSequence& a, std::size_t n_terms) {
  if (n_terms == 0 || !a.covers(1, n_terms)) {
    throw InvalidArgument("exp_transform: input must cover indices 1.." + std::to_string(n_terms));
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(n_terms + 1);
  coeffs.emplace_back(1);
  for (std::size_t n = 0; n < n_terms; ++n) {
    Rational sum = 0;
    for (std::size_t k = 0; k <= n; ++k) sum += coeffs[n - k] * a.at(k + 1);
    sum /= static_cast<unsigned long>(n + 1);
    coeffs.push_back(std::move(sum));
  }
  return RationalSeries(std::move(coeffs));
}

RationalSeries exp_transform(const IntegerSequence& a, std::size_t n_terms) {
  require_prefix(a, n_terms, "exp_transform");
  std::vector<Rational> as_rational;
  as_rational.reserve(n_terms);
  for (std::size_t k = 1; k <= n_terms; ++k) as_rational.emplace_back(a.at(k));
  return exp_transform(RationalSequence(1, std::move(as_rational)), n_terms);
}

RationalSequence log_transform(const RationalSeries& series) {
  if (series.constant_term() != 1) {
    throw InvalidArgument("log_transform: A_0 must be 1, got " + to_string(series.constant_term()));
  }
  if (series.order() < 2) {
    throw InvalidArgument("log_transform: need at least A_0 and A_1");
  }
  const std::size_t n_terms = series.order() - 1;
  std::vector<Rational> a;
  a.reserve(n_terms);
  for (std::size_t n = 0; n < n_terms; ++n) {
    // a_{n+1} = (n+1) A_{n+1} - sum_{k<n} A_{n-k} a_{k+1}
    Rational value = series[n + 1] * static_cast<unsigned long>(n + 1);
    for (std::size_t k = 0; k < n; ++k) value -= series[n - k] * a[k];
    a.push_back(std::move(value));
  }
  return RationalSequence(1, std::move(a));
}

std::vector<Integer> binomial_power_coefficients(const Integer& e, std::size_t max_power) {
  std::vector<Integer> d;
  d.reserve(max_power + 1);
  d.emplace_back(1);
  for (std::size_t k = 1; k <= max_power; ++k) {
    // d_k = d_{k-1} (k - 1 - e) / k, exact since d_k = (-1)^k C(e, k)
    Integer next = d.back() * (Integer(static_cast<unsigned long>(k - 1)) - e);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k));
    d.push_back(std::move(next));
  }
  return d;
}

namespace {

// coeffs *= (1 - x^n)^e, truncated to coeffs.size().
void multiply_by_binomial_factor(std::vector<Integer>& coeffs, std::size_t n, const Integer& e) {
  if (e == 0) return;
  const std::size_t top = coeffs.size() - 1;
  const auto factor = binomial_power_coefficients(e, top / n);
  for (std::size_t i = top; i >= n; --i) {
    for (std::size_t k = 1; k * n <= i; ++k) coeffs[i] += factor[k] * coeffs[i - k * n];
  }
}

}  // namespace

RationalSeries product_expand(const IntegerSequence& b, std::size_t n_terms) {
  require_prefix(b, n_terms, "product_expand");
  std::vector<Integer> coeffs(n_terms + 1, Integer(0));
  coeffs[0] = 1;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    multiply_by_binomial_factor(coeffs, n, -b.at(n));
  }
  return RationalSeries::from_integers(coeffs);
}

IntegerSequence product_extract(const RationalSeries& series) {
  if (series.constant_term() != 1) {
    throw InvalidArgument("product_extract: A_0 must be 1, got " + to_string(series.constant_term()));
  }
  if (series.order() < 2) {
    throw InvalidArgument("product_extract: need at least A_0 and A_1");
  }
  auto current = series.integer_coefficients();
  const std::size_t n_terms = current.size() - 1;
  std::vector<Integer> c;
  c.reserve(n_terms);
  for (std::size_t n = 1; n <= n_terms; ++n) {
    // current = 1 + c_n x^n + O(x^(n+1)); peel (1 - x^n)^(-c_n)
    c.push_back(current[n]);
    multiply_by_binomial_factor(current, n, c.back());
    if (current[n] != 0) {
      throw InternalError("product_extract: x^" + std::to_string(n) + " coefficient survived peeling");
    }
  }
  return IntegerSequence(1, std::move(c));
}

RationalSeries series_multiply(const RationalSeries& f, const RationalSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<Rational> h(order, Rational(0));
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; i + j < order; ++j) h[i + j] += f[i] * g[j];
  }
  return RationalSeries(std::move(h));
}

RationalSeries series_exp(const RationalSeries& f) {
  if (f.constant_term() != 0) {
    throw InvalidArgument("series_exp: constant term must be 0, got " + to_string(f.constant_term()));
  }
  std::vector<Rational> g;
  g.reserve(f.order());
  g.emplace_back(1);
  for (std::size_t n = 1; n < f.order(); ++n) {
    // n g_n = sum_{k=1}^{n} k f_k g_{n-k}
    Rational sum = 0;
    for (std::size_t k = 1; k <= n; ++k) sum += static_cast<unsigned long>(k) * f[k] * g[n - k];
    sum /= static_cast<unsigned long>(n);
    g.push_back(std::move(sum));
  }
  return RationalSeries(std::move(g));
}

RationalSeries series_log(const RationalSeries& g) {
  if (g.constant_term() != 1) {
    throw InvalidArgument("series_log: constant term must be 1, got " + to_string(g.constant_term()));
  }
  std::vector<Rational> f;
  f.reserve(g.order());
  f.emplace_back(0);
  for (std::size_t n = 1; n < g.order(); ++n) {
    // n f_n = n g_n - sum_{k=1}^{n-1} k f_k g_{n-k}
    Rational sum = static_cast<unsigned long>(n) * g[n];
    for (std::size_t k = 1; k < n; ++k) sum -= static_cast<unsigned long>(k) * f[k] * g[n - k];
    sum /= static_cast<unsigned long>(n);
    f.push_back(std::move(sum));
  }
  return RationalSeries(std::move(f));
}

}  // namespace zetaseq
