#include "zetaseq/euler_cache.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "zetaseq/sequences.hpp"

namespace zetaseq {
namespace {

const std::string kHeaderPrefix = "# euler E0..E";

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

void write_euler_cache(std::ostream& out, std::size_t n) {
  const auto e = euler_numbers(n);
  out << kHeaderPrefix << 2 * n << '\n';
  for (const auto& v : e.values()) out << to_string(v) << '\n';
}

void write_euler_cache(const std::filesystem::path& path, std::size_t n) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidArgument("cannot open " + path.string() + " for writing");
  }
  write_euler_cache(out, n);
  if (!out) {
    throw InvalidArgument("write to " + path.string() + " failed");
  }
}

IntegerSequence read_euler_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw FormatError(1, "missing header");
  }
  if (line.rfind(kHeaderPrefix, 0) != 0) {
    throw FormatError(1, "expected header '" + kHeaderPrefix + "<2N>'");
  }
  const std::string last = line.substr(kHeaderPrefix.size());
  if (last.empty() || !is_decimal(last) || last[0] == '-') {
    throw FormatError(1, "malformed last index '" + last + "'");
  }
  const unsigned long last_index = std::stoul(last);
  if (last_index % 2 != 0) {
    throw FormatError(1, "last index must be even, got " + last);
  }
  const std::size_t expected = last_index / 2 + 1;

  std::vector<Integer> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!is_decimal(line)) {
      throw FormatError(line_no, "malformed integer '" + line + "'");
    }
    if (values.size() == expected) {
      throw FormatError(line_no, "more than the " + std::to_string(expected) +
                                     " values announced by the header");
    }
    values.emplace_back(line, 10);
  }
  if (values.size() != expected) {
    throw FormatError(line_no, "file holds " + std::to_string(values.size()) + " values, header announces " +
                                   std::to_string(expected));
  }
  return IntegerSequence(0, std::move(values));
}

IntegerSequence read_euler_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidArgument("cannot open " + path.string());
  }
  return read_euler_cache(in);
}

IntegerSequence euler_numbers_cached(const std::filesystem::path& path, std::size_t n) {
  if (!path.empty() && std::filesystem::exists(path)) {
    auto cached = read_euler_cache(path);
    if (cached.last() >= n) {
      return cached.truncated(n);
    }
  }
  return euler_numbers(n);
}

}  // namespace zetaseq
