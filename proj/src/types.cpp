#include "zetaseq/types.hpp"

namespace zetaseq {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw InvalidArgument("zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q, const char* what) {
  if (!is_integer(q)) {
    throw InternalError(std::string(what) + ": expected an integer, got " + to_string(q));
  }
  return q.get_num();
}

RationalSequence::RationalSequence(std::size_t offset, std::vector<Rational> values)
    : IndexedSequence<Rational>(offset, [&] {
        for (auto& q : values) q.canonicalize();
        return std::move(values);
      }()) {}

bool RationalSequence::all_integral() const {
  for (const auto& q : values()) {
    if (!is_integer(q)) return false;
  }
  return true;
}

IntegerSequence RationalSequence::to_integers() const {
  std::vector<Integer> out;
  out.reserve(size());
  for (std::size_t i = first(); i <= last(); ++i) {
    if (!is_integer(at(i))) {
      throw InvalidArgument("value at index " + std::to_string(i) + " is not an integer: " +
                            to_string(at(i)));
    }
    out.push_back(at(i).get_num());
  }
  return IntegerSequence(offset(), std::move(out));
}

RationalSeries::RationalSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw InvalidArgument("series must have at least the constant term");
  }
  for (auto& q : coefficients_) q.canonicalize();
}

RationalSeries RationalSeries::from_integers(std::span<const Integer> coefficients) {
  return RationalSeries(std::vector<Rational>(coefficients.begin(), coefficients.end()));
}

const Rational& RationalSeries::at(std::size_t k) const {
  if (k >= coefficients_.size()) {
    throw IndexError("coefficient x^" + std::to_string(k) + " beyond truncation order " +
                     std::to_string(coefficients_.size()));
  }
  return coefficients_[k];
}

bool RationalSeries::all_integral() const {
  for (const auto& q : coefficients_) {
    if (!is_integer(q)) return false;
  }
  return true;
}

std::vector<Integer> RationalSeries::integer_coefficients() const {
  std::vector<Integer> out;
  out.reserve(coefficients_.size());
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (!is_integer(coefficients_[k])) {
      throw InvalidArgument("coefficient of x^" + std::to_string(k) + " is not an integer: " +
                            to_string(coefficients_[k]));
    }
    out.push_back(coefficients_[k].get_num());
  }
  return out;
}

std::string to_string(const Integer& z) { return z.get_str(10); }
std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace zetaseq
