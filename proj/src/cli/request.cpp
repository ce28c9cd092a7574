#include <CLI11.hpp>

#include "zetaseq/cli.hpp"

namespace zetaseq::cli {
namespace {

const std::vector<std::string> kTables{"euler", "pow16", "gabcke", "sigma", "tau", "tangent"};
const std::vector<std::string> kChecks{"prerealizable",      "realizable",       "kummer",           "shifted",
                                       "gabcke-integrality", "gabcke-valuation", "equivalence-sweep"};
const std::vector<std::string> kSequences{"euler", "euler-abs", "pow16", "gabcke", "sigma", "tau", "tangent"};
const std::vector<std::string> kFormats{"csv", "json", "json-lines", "pretty"};

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::kCsv;
  if (text == "json" || text == "json-lines") return Format::kJson;
  return Format::kPretty;
}

void add_format(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "Output format: csv, json (one JSON object per line) or pretty")
      ->check(CLI::IsMember(kFormats));
}

void add_cache(CLI::App* app, std::filesystem::path& cache) {
  app->add_option("--cache", cache, "Euler-number cache file to read the prefix from")->envname("ZETASEQ_CACHE");
}

void validate_check(const CommandRequest& r) {
  const bool needs_terms = r.name != "kummer" && r.name != "equivalence-sweep";
  if (needs_terms && !r.terms) {
    throw UsageError("check " + r.name + " requires --terms");
  }
  if (r.name == "kummer" && !(r.p && r.e && r.w && r.n && r.m)) {
    throw UsageError("check kummer requires --p, --e, --w, --n and --m");
  }
  if (r.name == "shifted" && !r.shift) {
    throw UsageError("check shifted requires --shift");
  }
  if (r.base.has_value() != r.div.has_value()) {
    throw UsageError("--base and --div go together");
  }
  if (r.name == "equivalence-sweep" && (r.trials == 0 || r.len == 0)) {
    throw UsageError("--trials and --len must be positive");
  }
  const int sources = (r.seq.empty() ? 0 : 1) + (r.values.empty() ? 0 : 1) + (r.base ? 1 : 0);
  if (sources > 1) {
    throw UsageError("choose one of --seq, --values, --base/--div");
  }
}

}  // namespace

CommandRequest parse_request(const std::vector<std::string>& args) {
  CommandRequest r;
  std::string format = "pretty";
  std::string cache_action;

  CLI::App app{"Sequence transforms of dynamical zeta functions, exactly", "zetaseq"};
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "Print the a, b and A rows of a named example");
  table->add_option("name", r.name, "Table name")->required()->check(CLI::IsMember(kTables));
  table->add_option("--terms", r.terms, "Number of terms N")->required()->check(CLI::PositiveNumber);
  add_format(table, format);
  add_cache(table, r.cache);

  auto* check = app.add_subcommand("check", "Run a verification and exit non-zero on failure");
  check->add_option("kind", r.name, "Check kind")->required()->check(CLI::IsMember(kChecks));
  check->add_option("--terms", r.terms, "Number of terms N")->check(CLI::PositiveNumber);
  check->add_option("--seq", r.seq, "Named input sequence")->check(CLI::IsMember(kSequences));
  check->add_option("--values", r.values, "Comma-separated input sequence a_1,a_2,...");
  check->add_option("--p", r.p, "Kummer prime");
  check->add_option("--e", r.e, "Kummer exponent e");
  check->add_option("--w", r.w, "Kummer step w");
  check->add_option("--n", r.n, "Kummer difference order n");
  check->add_option("--m", r.m, "Kummer base index m");
  check->add_option("--shift", r.shift, "Index shift for the shifted check");
  check->add_option("--base", r.base, "Geometric input base^n/div: base")->check(CLI::PositiveNumber);
  check->add_option("--div", r.div, "Geometric input base^n/div: div")->check(CLI::PositiveNumber);
  check->add_option("--trials", r.trials, "Equivalence sweep: number of random prefixes");
  check->add_option("--len", r.len, "Equivalence sweep: maximum prefix length");
  check->add_option("--seed", r.seed, "Equivalence sweep: generator seed");
  add_format(check, format);
  add_cache(check, r.cache);

  auto* cache = app.add_subcommand("cache", "Write or verify an Euler-number cache file");
  cache->add_option("action", cache_action, "write or verify")->required()->check(CLI::IsMember({"write", "verify"}));
  cache->add_option("--path", r.cache, "Cache file")->envname("ZETASEQ_CACHE");
  cache->add_option("--terms", r.terms, "Last index k of E_2k to write (or at least expect)")
      ->check(CLI::PositiveNumber);
  add_format(cache, format);

  std::vector<std::string> argv_storage{"zetaseq"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  r.format = parse_format(format);
  if (table->parsed()) {
    r.command = Command::kTable;
  } else if (check->parsed()) {
    r.command = Command::kCheck;
    validate_check(r);
  } else {
    r.command = cache_action == "write" ? Command::kCacheWrite : Command::kCacheVerify;
    r.name = cache_action;
    if (r.cache.empty()) {
      throw UsageError("cache " + cache_action + " requires --path (or ZETASEQ_CACHE)");
    }
    if (r.command == Command::kCacheWrite && !r.terms) {
      throw UsageError("cache write requires --terms");
    }
  }
  return r;
}

}  // namespace zetaseq::cli
