#pragma once

// Flat key/value records emitted by the check commands. Every format writes
// one record per line: csv as "type,v1,v2,...", json as an object with a
// "record" key followed by the fields in order, pretty as aligned key=value.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "zetaseq/cli.hpp"

namespace zetaseq::cli {

struct Record {
  explicit Record(std::string record_type) : type(std::move(record_type)) {}

  std::string type;
  std::vector<std::pair<std::string, std::string>> fields;

  Record& add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

void render_records(const std::vector<Record>& records, Format format, std::ostream& out);

}  // namespace zetaseq::cli
