#include "cpeak/table_io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "json.hpp"

#include "golden_peak_counts.inc"

namespace cpeak {

TableFormat parse_table_format(std::string_view name) {
  if (name == "text") return TableFormat::text;
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (text, csv, json)");
}

std::string format_count_table(const CountTable& table, TableFormat format) {
  const auto entries = table.sorted_entries();
  std::ostringstream out;
  switch (format) {
    case TableFormat::text: {
      std::size_t width = 1;
      for (const auto& [key, count] : entries) width = std::max(width, format_set_braced(from_mask(key)).size());
      out << "n = " << table.n() << '\n';
      for (const auto& [key, count] : entries) {
        const std::string label = format_set_braced(from_mask(key));
        out << "  S = " << label << std::string(width - label.size() + 2, ' ') << count << '\n';
      }
      out << "  total " << table.total() << '\n';
      break;
    }
    case TableFormat::csv:
      out << "n,S,count\n";
      for (const auto& [key, count] : entries) {
        out << table.n() << ",\"" << format_set(from_mask(key)) << "\"," << count << '\n';
      }
      break;
    case TableFormat::json: {
      nlohmann::ordered_json doc;
      doc["n"] = table.n();
      doc["entries"] = nlohmann::ordered_json::array();
      for (const auto& [key, count] : entries) {
        nlohmann::ordered_json row;
        row["set"] = from_mask(key);
        row["count"] = count.str();
        doc["entries"].push_back(std::move(row));
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

CountTable parse_count_table_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    CountTable table(doc.at("n").get<int>());
    for (const auto& row : doc.at("entries")) {
      const auto set = row.at("set").get<std::vector<int>>();
      table.add(to_mask(set), BigInt(row.at("count").get<std::string>()));
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed count table JSON: ") + e.what());
  }
}

namespace {

// Splits one CSV record, honouring double-quoted fields.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    else if (c == ',' && !quoted) fields.emplace_back();
    else if (c != '\r') fields.back() += c;
  }
  if (quoted) throw std::invalid_argument("unterminated quote");
  return fields;
}

}  // namespace

std::vector<TableRow> parse_table_csv(std::istream& in) {
  std::vector<TableRow> rows;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    try {
      auto fields = split_csv(line);
      if (fields.size() != 3) throw std::invalid_argument("expected 3 fields");
      if (!header_seen) {
        if (fields[0] != "n" || fields[1] != "S" || fields[2] != "count") {
          throw std::invalid_argument("expected header n,S,count");
        }
        header_seen = true;
        continue;
      }
      TableRow row;
      row.n = std::stoi(fields[0]);
      row.set = parse_set(fields[1]);
      if (fields[2].empty() || !std::all_of(fields[2].begin(), fields[2].end(), ::isdigit)) {
        throw std::invalid_argument("count must be a non-negative decimal integer");
      }
      row.count = BigInt(fields[2]);
      rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      throw std::invalid_argument("CSV line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!header_seen) throw std::invalid_argument("CSV input has no header");
  return rows;
}

std::vector<TableRow> parse_table_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_table_csv(in);
}

const std::vector<TableRow>& golden_table() {
  static const std::vector<TableRow> rows = parse_table_csv(std::string_view(kGoldenPeakCountsCsv));
  return rows;
}

}  // namespace cpeak
