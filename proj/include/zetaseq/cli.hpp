#pragma once

// Command-line front end:
//
//   zetaseq table <euler|pow16|gabcke|sigma|tau|tangent> --terms N [--format F] [--cache PATH]
//   zetaseq check <kind> [sequence and parameter options] [--terms N] [--format F]
//   zetaseq cache <write|verify> --path PATH [--terms N]
//
// Exit codes: 0 pass, 1 a check failed or an internal consistency test broke,
// 2 malformed request.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zetaseq/types.hpp"

namespace zetaseq::cli {

enum ExitCode : int { kPass = 0, kFailed = 1, kUsage = 2 };

enum class Format { kCsv, kJson, kPretty };

enum class Command { kTable, kCheck, kCacheWrite, kCacheVerify };

struct CommandRequest {
  Command command = Command::kTable;
  std::string name;
  std::optional<std::size_t> terms;
  Format format = Format::kPretty;
  std::filesystem::path cache;

  std::string seq;
  std::string values;
  std::optional<std::int64_t> p;
  std::optional<unsigned> e;
  std::optional<std::size_t> w;
  std::optional<unsigned> n;
  std::optional<std::size_t> m;
  std::optional<std::size_t> shift;
  std::optional<std::int64_t> base;
  std::optional<std::int64_t> div;
  std::size_t trials = 1000;
  std::size_t len = 24;
  std::uint64_t seed = 1;
};

/// Thrown by parse_request for malformed command lines.
class UsageError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Thrown by parse_request when help was requested; what() is the help text.
class HelpRequested : public Error {
 public:
  using Error::Error;
};

/// args excludes the program name.
CommandRequest parse_request(const std::vector<std::string>& args);

/// One row of a table: label plus values starting at index `offset`.
struct TableRow {
  std::string label;
  std::size_t offset;
  std::vector<std::string> values;
};

struct Table {
  std::string name;
  std::vector<TableRow> rows;
};

/// Rows a, b and A (lambda for the gabcke table) computed from scratch. Throws
/// InternalError when b = seq_to_b(a) and A = exp_transform(a) disagree with
/// the route the table was built along.
Table build_table(const std::string& name, std::size_t n_terms, const std::filesystem::path& cache = {});

void render_table(const Table& table, Format format, std::ostream& out);

/// Dispatches a parsed request; returns the exit code.
int execute(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// parse_request + execute with every error mapped to its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetaseq::cli
