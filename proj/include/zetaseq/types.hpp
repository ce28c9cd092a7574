#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zetaseq/error.hpp"

namespace zetaseq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Lowest-terms rational n/d. Throws InvalidArgument on d == 0.
Rational make_rational(const Integer& num, const Integer& den);

bool is_integer(const Rational& q);

/// Numerator of q, which must be an integer; throws InternalError otherwise.
Integer to_integer(const Rational& q, const char* what);

/// Finite prefix of an integer-indexed sequence. Valid indices are
/// [offset, offset + size - 1]; the offset is 0 or 1 and the prefix is never
/// empty. Reads outside the stored range throw IndexError rather than extending.
template <class T>
class IndexedSequence {
 public:
  IndexedSequence(std::size_t offset, std::vector<T> values)
      : offset_(offset), values_(std::move(values)) {
    if (offset_ > 1) {
      throw InvalidArgument("sequence offset must be 0 or 1, got " + std::to_string(offset_));
    }
    if (values_.empty()) {
      throw InvalidArgument("sequence prefix must hold at least one value");
    }
  }

  std::size_t offset() const noexcept { return offset_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t first() const noexcept { return offset_; }
  std::size_t last() const noexcept { return offset_ + values_.size() - 1; }

  bool covers(std::size_t lo, std::size_t hi) const noexcept {
    return lo >= first() && hi <= last();
  }

  const T& at(std::size_t index) const {
    if (index < first() || index > last()) {
      throw IndexError("index " + std::to_string(index) + " outside [" + std::to_string(first()) +
                       ", " + std::to_string(last()) + "]");
    }
    return values_[index - offset_];
  }
  const T& operator[](std::size_t index) const { return at(index); }

  std::span<const T> values() const noexcept { return values_; }

  /// Same offset, indices beyond `last_index` dropped.
  IndexedSequence truncated(std::size_t last_index) const {
    if (last_index < first() || last_index > last()) {
      throw IndexError("cannot truncate [" + std::to_string(first()) + ", " + std::to_string(last()) +
                       "] at " + std::to_string(last_index));
    }
    return IndexedSequence(offset_, std::vector<T>(values_.begin(),
                                                   values_.begin() + static_cast<std::ptrdiff_t>(last_index - offset_ + 1)));
  }

  /// Indices lo..hi as a new sequence starting at 1.
  IndexedSequence slice_from_one(std::size_t lo, std::size_t hi) const {
    if (hi < lo || !covers(lo, hi)) {
      throw IndexError("slice [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "] not covered by [" + std::to_string(first()) + ", " +
                       std::to_string(last()) + "]");
    }
    return IndexedSequence(1, std::vector<T>(values_.begin() + static_cast<std::ptrdiff_t>(lo - offset_),
                                             values_.begin() + static_cast<std::ptrdiff_t>(hi - offset_ + 1)));
  }

  friend bool operator==(const IndexedSequence& x, const IndexedSequence& y) {
    return x.offset_ == y.offset_ && x.values_ == y.values_;
  }

 private:
  std::size_t offset_;
  std::vector<T> values_;
};

using IntegerSequence = IndexedSequence<Integer>;

/// Rationals are kept in lowest terms with positive denominators.
class RationalSequence : public IndexedSequence<Rational> {
 public:
  RationalSequence(std::size_t offset, std::vector<Rational> values);

  bool all_integral() const;
  IntegerSequence to_integers() const;
};

/// Truncated formal power series: coefficients of x^0 .. x^(order-1).
class RationalSeries {
 public:
  explicit RationalSeries(std::vector<Rational> coefficients);
  static RationalSeries from_integers(std::span<const Integer> coefficients);

  std::size_t order() const noexcept { return coefficients_.size(); }
  const Rational& constant_term() const { return coefficients_.front(); }
  const Rational& at(std::size_t k) const;
  const Rational& operator[](std::size_t k) const { return at(k); }
  std::span<const Rational> coefficients() const noexcept { return coefficients_; }

  bool all_integral() const;
  /// Throws InvalidArgument naming the first non-integral coefficient.
  std::vector<Integer> integer_coefficients() const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  std::vector<Rational> coefficients_;
};

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

}  // namespace zetaseq
