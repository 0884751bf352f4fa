// io.hpp — Text formats: two-column tables and CSV with a configuration header.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace decosolv::io {

// Two-column numeric text.  Lines starting with '#' and blank lines are
// skipped; columns may be separated by whitespace or commas.
std::vector<std::pair<double, double>> read_two_column(std::istream& in);
std::vector<std::pair<double, double>> read_two_column(const std::filesystem::path& path);

// CSV with one '#' comment line recording the producing configuration,
// then a column-name row, then data rows.  Values are written with enough
// digits to round-trip exactly.
struct CsvTable {
    std::string header_comment;             // without the leading '#'
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  // row-major, rows[i].size() == columns.size()
};

void write_csv(std::ostream& out, const CsvTable& table);
void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

// Full-precision decimal formatting (round-trips through strtod).
std::string format_double(double value);

} // namespace decosolv::io
