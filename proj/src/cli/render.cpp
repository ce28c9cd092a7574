#include <json.hpp>

#include <algorithm>
#include <ostream>

#include "records.hpp"
#include "zetaseq/cli.hpp"

namespace zetaseq::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += sep;
    out += parts[i];
  }
  return out;
}

void render_table_pretty(const Table& table, std::ostream& out) {
  std::size_t first = 0;
  std::size_t last = 0;
  bool any = false;
  for (const auto& row : table.rows) {
    if (!any || row.offset < first) first = row.offset;
    last = std::max(last, row.offset + row.values.size() - 1);
    any = true;
  }
  const std::size_t columns = last - first + 1;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"n"};
  for (std::size_t i = first; i <= last; ++i) header.push_back(std::to_string(i));
  cells.push_back(header);
  for (const auto& row : table.rows) {
    std::vector<std::string> line(columns + 1);
    line[0] = row.label;
    for (std::size_t i = 0; i < row.values.size(); ++i) line[row.offset - first + i + 1] = row.values[i];
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(columns + 1, 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  out << table.name << '\n';
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c == 0) {
        text += line[c] + std::string(width[c] - line[c].size(), ' ');
      } else {
        text += "  " + std::string(width[c] - line[c].size(), ' ') + line[c];
      }
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  }
}

}  // namespace

void render_table(const Table& table, Format format, std::ostream& out) {
  switch (format) {
    case Format::kCsv:
      for (const auto& row : table.rows) out << row.label << ',' << join(row.values, ',') << '\n';
      break;
    case Format::kJson:
      for (const auto& row : table.rows) {
        Json line;
        line["table"] = table.name;
        line["row"] = row.label;
        line["offset"] = row.offset;
        line["values"] = row.values;
        out << line.dump() << '\n';
      }
      break;
    case Format::kPretty:
      render_table_pretty(table, out);
      break;
  }
}

void render_records(const std::vector<Record>& records, Format format, std::ostream& out) {
  switch (format) {
    case Format::kCsv:
      for (const auto& r : records) {
        out << r.type;
        for (const auto& [key, value] : r.fields) out << ',' << value;
        out << '\n';
      }
      break;
    case Format::kJson:
      for (const auto& r : records) {
        Json line;
        line["record"] = r.type;
        for (const auto& [key, value] : r.fields) line[key] = value;
        out << line.dump() << '\n';
      }
      break;
    case Format::kPretty: {
      std::size_t width = 0;
      for (const auto& r : records) width = std::max(width, r.type.size());
      for (const auto& r : records) {
        out << r.type << std::string(width - r.type.size(), ' ');
        for (const auto& [key, value] : r.fields) out << "  " << key << '=' << value;
        out << '\n';
      }
      break;
    }
  }
}

}  // namespace zetaseq::cli
