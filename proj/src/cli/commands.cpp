#include <ostream>
#include <sstream>

#include "records.hpp"
#include "zetaseq/cli.hpp"
#include "zetaseq/congruences.hpp"
#include "zetaseq/euler_cache.hpp"
#include "zetaseq/gabcke.hpp"
#include "zetaseq/sequences.hpp"
#include "zetaseq/series.hpp"

namespace zetaseq::cli {
namespace {

std::vector<std::string> strings(std::span<const Integer> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<std::string> strings(std::span<const Rational> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

IntegerSequence constant(long value, std::size_t n) {
  return IntegerSequence(1, std::vector<Integer>(n, Integer(value)));
}

IntegerSequence euler_slice(const IntegerSequence& euler, std::size_t n, bool absolute) {
  std::vector<Integer> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(absolute ? Integer(abs(euler.at(k))) : euler.at(k));
  return IntegerSequence(1, std::move(out));
}

IntegerSequence named_sequence(const std::string& name, std::size_t n, const std::filesystem::path& cache) {
  if (name == "euler" || name == "euler-abs") {
    return euler_slice(euler_numbers_cached(cache, n), n, name == "euler-abs");
  }
  if (name == "pow16") return geometric_quotient(16, 8, n);
  if (name == "gabcke") return gabcke_a(euler_numbers_cached(cache, n), n);
  if (name == "sigma") return b_to_seq(constant(1, n), n);
  if (name == "tau") return b_to_seq(constant(-24, n), n);
  if (name == "tangent") return tangent_numbers(n).slice_from_one(1, n);
  throw UsageError("unknown sequence '" + name + "'");
}

IntegerSequence parse_values(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) {
      throw UsageError("--values: '" + item + "' is not an integer");
    }
    out.push_back(std::move(v));
  }
  if (out.empty()) {
    throw UsageError("--values is empty");
  }
  return IntegerSequence(1, std::move(out));
}

// The input sequence of a check, covering at least 1..length.
IntegerSequence input_sequence(const CommandRequest& r, std::size_t length, const std::string& fallback) {
  if (!r.values.empty()) {
    auto a = parse_values(r.values);
    if (a.last() < length) {
      throw UsageError("--values holds " + std::to_string(a.size()) + " terms, the check needs " +
                       std::to_string(length));
    }
    return a;
  }
  if (r.base) return geometric_quotient(*r.base, *r.div, length);
  return named_sequence(r.seq.empty() ? fallback : r.seq, length, r.cache);
}

std::string verdict(bool pass) { return pass ? "pass" : "fail"; }

std::string join_indices(const std::vector<std::size_t>& indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i != 0) out += ';';
    out += std::to_string(indices[i]);
  }
  return out;
}

void append_report(std::vector<Record>& records, const CongruenceReport& report) {
  const std::string name(check_name(report.kind));
  records.push_back(Record("report")
                        .add("check", name)
                        .add("first", std::to_string(report.range_first))
                        .add("last", std::to_string(report.range_last))
                        .add("shift", std::to_string(report.shift))
                        .add("conditions", std::to_string(report.conditions_checked))
                        .add("violations", std::to_string(report.violations.size()))
                        .add("status", verdict(report.passed())));
  for (const auto& v : report.violations) {
    records.push_back(Record("violation")
                          .add("check", name)
                          .add("indices", join_indices(v.indices))
                          .add("modulus", to_string(v.modulus))
                          .add("residue", to_string(v.residue))
                          .add("detail", v.detail));
  }
}

int finish(std::vector<Record>& records, const CommandRequest& r, bool pass, std::ostream& out) {
  records.push_back(Record("result").add("check", r.name).add("status", verdict(pass)));
  render_records(records, r.format, out);
  return pass ? kPass : kFailed;
}

int run_check(const CommandRequest& r, std::ostream& out) {
  std::vector<Record> records;
  const std::size_t terms = r.terms.value_or(1);

  if (r.name == "prerealizable") {
    const auto a = input_sequence(r, terms, "euler-abs");
    const auto rb = prerealizable_check_b(a, terms);
    const auto rA = prerealizable_check_A(a, terms);
    const auto rc = prerealizable_check_c(a, terms);
    for (const auto* report : {&rb, &rA, &rc}) append_report(records, *report);
    return finish(records, r, rb.passed() && rA.passed() && rc.passed(), out);
  }
  if (r.name == "realizable") {
    const auto report = realizable_check(input_sequence(r, terms, "euler-abs"), terms);
    append_report(records, report);
    return finish(records, r, report.passed(), out);
  }
  if (r.name == "kummer") {
    const KummerParams params{*r.p, *r.e, *r.w, *r.n, *r.m};
    params.validate();
    const std::size_t needed = std::max<std::size_t>({terms, params.m + params.n * params.w, 1});
    const auto report = kummer_check(input_sequence(r, needed, "euler"), params);
    append_report(records, report);
    return finish(records, r, report.passed(), out);
  }
  if (r.name == "shifted") {
    const auto a = input_sequence(r, *r.shift + terms, "euler");
    const auto report = shifted_prerealizable_check(a, *r.shift, terms);
    append_report(records, report);
    return finish(records, r, report.passed(), out);
  }
  if (r.name == "gabcke-integrality") {
    const auto euler = euler_numbers_cached(r.cache, terms);
    const auto triple = gabcke_triple(euler, terms);  // throws InternalError on any inexact division
    const auto a = gabcke_a(euler, terms);
    std::vector<Integer> minus_a;
    std::vector<Integer> minus_rho;
    for (const auto& v : a.values()) minus_a.push_back(-v);
    for (const auto& v : triple.rho.values()) minus_rho.push_back(-v);
    const bool lambda_route = RationalSeries::from_integers(triple.lambda.values()) == exp_transform(a, terms);
    const bool rho_route =
        RationalSeries::from_integers(minus_rho) == exp_transform(IntegerSequence(1, minus_a), terms);
    records.push_back(Record("integrality")
                          .add("terms", std::to_string(terms))
                          .add("lambda", "integer")
                          .add("rho", "integer")
                          .add("mu", "integer")
                          .add("lambda_digits", std::to_string(to_string(triple.lambda.at(terms)).size()))
                          .add("lambda_equals_exp_transform", verdict(lambda_route))
                          .add("rho_equals_exp_transform", verdict(rho_route)));
    return finish(records, r, lambda_route && rho_route, out);
  }
  if (r.name == "gabcke-valuation") {
    const auto profile = valuation_check(gabcke_triple(euler_numbers_cached(r.cache, terms), terms));
    auto show = [](const std::optional<unsigned>& v) { return v ? std::to_string(*v) : std::string("inf"); };
    for (const auto& row : profile.rows) {
      records.push_back(Record("valuation")
                            .add("n", std::to_string(row.n))
                            .add("nu2_lambda", show(row.nu2_lambda))
                            .add("nu2_rho", show(row.nu2_rho))
                            .add("s", std::to_string(row.expected))
                            .add("status", row.matches() ? "ok" : "mismatch"));
    }
    return finish(records, r, profile.passed(), out);
  }
  // equivalence-sweep
  const auto result = equivalence_sweep(r.trials, r.len, r.seed);
  records.push_back(Record("sweep")
                        .add("seed", std::to_string(result.seed))
                        .add("trials", std::to_string(result.trials))
                        .add("max_length", std::to_string(result.max_length))
                        .add("prerealizable", std::to_string(result.prerealizable_count))
                        .add("mismatches", std::to_string(result.mismatches.size())));
  for (const auto& m : result.mismatches) {
    std::string prefix;
    for (std::size_t i = 0; i < m.prefix.size(); ++i) prefix += (i ? ";" : "") + to_string(m.prefix[i]);
    records.push_back(Record("mismatch")
                          .add("trial", std::to_string(m.trial))
                          .add("prefix", prefix)
                          .add("a", verdict(m.verdict_b))
                          .add("b", verdict(m.verdict_A))
                          .add("c", verdict(m.verdict_c))
                          .add("extract", verdict(m.extract_matches)));
  }
  return finish(records, r, result.passed(), out);
}

int run_cache(const CommandRequest& r, std::ostream& out, std::ostream& err) {
  std::vector<Record> records;
  if (r.command == Command::kCacheWrite) {
    write_euler_cache(r.cache, *r.terms);
    records.push_back(Record("cache")
                          .add("path", r.cache.string())
                          .add("values", std::to_string(*r.terms + 1))
                          .add("status", "written"));
    render_records(records, r.format, out);
    return kPass;
  }
  IntegerSequence cached(0, {Integer(1)});
  try {
    cached = read_euler_cache(r.cache);
  } catch (const FormatError& e) {
    err << "zetaseq: " << r.cache.string() << ": " << e.what() << '\n';
    return kFailed;
  }
  const auto fresh = euler_numbers(cached.last());
  std::size_t first_bad = 0;
  for (std::size_t k = 0; k <= cached.last(); ++k) {
    if (cached.at(k) != fresh.at(k)) {
      first_bad = k + 1;
      break;
    }
  }
  const bool long_enough = !r.terms || cached.last() >= *r.terms;
  const bool pass = first_bad == 0 && long_enough;
  records.push_back(Record("cache")
                        .add("path", r.cache.string())
                        .add("values", std::to_string(cached.size()))
                        .add("first_mismatch", first_bad == 0 ? "none" : "E" + std::to_string(2 * (first_bad - 1)))
                        .add("long_enough", long_enough ? "yes" : "no"));
  return finish(records, r, pass, out);
}

}  // namespace

Table build_table(const std::string& name, std::size_t n_terms, const std::filesystem::path& cache) {
  if (n_terms == 0) {
    throw InvalidArgument("table needs at least one term");
  }
  std::optional<IntegerSequence> b_given;
  if (name == "sigma") b_given = constant(1, n_terms);
  if (name == "tau") b_given = constant(-24, n_terms);
  // the table of Euler numbers lists |E_2n|
  const IntegerSequence a = b_given ? b_to_seq(*b_given, n_terms)
                                    : named_sequence(name == "euler" ? "euler-abs" : name, n_terms, cache);

  const auto b = seq_to_b(a, n_terms);
  if (!b.all_integral()) {
    throw InternalError(name + ": b_" + std::to_string(*b.first_failure()) + " is not an integer");
  }
  const auto zeta = exp_transform(a, n_terms);
  if (product_expand(b.integers(), n_terms) != zeta) {
    throw InternalError(name + ": product expansion of b disagrees with exp_transform(a)");
  }
  if (b_given && b.integers() != *b_given) {
    throw InternalError(name + ": Möbius inversion did not recover b");
  }

  Table table{name, {}};
  table.rows.push_back({"a", 1, strings(a.values())});
  table.rows.push_back({"b", 1, strings(b.values().values())});
  if (name == "gabcke") {
    const auto lambda = lambda_seq(a, n_terms);
    if (RationalSeries::from_integers(lambda.values()) != zeta) {
      throw InternalError("gabcke: lambda recurrence disagrees with exp_transform(a)");
    }
    table.rows.push_back({"lambda", 0, strings(lambda.values())});
  } else {
    table.rows.push_back({"A", 0, strings(zeta.coefficients())});
  }
  return table;
}

int execute(const CommandRequest& request, std::ostream& out, std::ostream& err) {
  switch (request.command) {
    case Command::kTable:
      render_table(build_table(request.name, *request.terms, request.cache), request.format, out);
      return kPass;
    case Command::kCheck:
      return run_check(request, out);
    case Command::kCacheWrite:
    case Command::kCacheVerify:
      return run_cache(request, out, err);
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return execute(parse_request(args), out, err);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kPass;
  } catch (const InternalError& e) {
    err << "zetaseq: internal inconsistency: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    err << "zetaseq: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace zetaseq::cli
