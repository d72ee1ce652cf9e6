#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cpeak/count_table.hpp"

namespace cpeak {

enum class TableFormat { text, csv, json };

TableFormat parse_table_format(std::string_view name);

/// Text groups rows as the appendix table does; CSV uses columns n,S,count with
/// S quoted ("4,5"); JSON is {"n": .., "entries": [{"set": [..], "count": ".."}]}.
std::string format_count_table(const CountTable& table, TableFormat format);

CountTable parse_count_table_json(std::string_view text);

/// One (n, S, count) row of a CSV table or golden fixture.
struct TableRow {
  int n = 0;
  std::vector<int> set;
  BigInt count;
};

/// Reads "n,S,count" CSV (header required). Throws std::invalid_argument with
/// the line number on malformed input.
std::vector<TableRow> parse_table_csv(std::istream& in);
std::vector<TableRow> parse_table_csv(std::string_view text);

/// The published cp_n(S) values for 3 <= n <= 8, compiled in from data/peak_counts.csv.
const std::vector<TableRow>& golden_table();

}  // namespace cpeak
