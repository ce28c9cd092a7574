#pragma once

// Plain-text cache of an Euler-number prefix:
//
//   # euler E0..E2N
//   1
//   -1
//   5
//   ...
//
// where N is the last stored k (the header names E_{2N} with the number
// written out, e.g. "# euler E0..E20" for N = 10), followed by exactly N + 1
// signed decimal integers, one per line.

#include <filesystem>
#include <iosfwd>

#include "zetaseq/types.hpp"

namespace zetaseq {

/// Writes euler_numbers(n) to `out`.
void write_euler_cache(std::ostream& out, std::size_t n);
void write_euler_cache(const std::filesystem::path& path, std::size_t n);

/// Strict reader. Throws FormatError (with the 1-based line number) on a bad
/// header, malformed digits, or a line count that disagrees with the header.
IntegerSequence read_euler_cache(std::istream& in);
IntegerSequence read_euler_cache(const std::filesystem::path& path);

/// Euler prefix E_0..E_{2n}: taken from the cache at `path` when it holds at
/// least n + 1 values, otherwise computed.
IntegerSequence euler_numbers_cached(const std::filesystem::path& path, std::size_t n);

}  // namespace zetaseq
