#include "decosolv/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace decosolv::io {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    return in;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (const char c : line) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
            if (!current.empty()) fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) fields.push_back(std::move(current));
    return fields;
}

double parse_double(const std::string& token, std::size_t line_number) {
    try {
        std::size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw std::runtime_error("line " + std::to_string(line_number) +
                                 ": expected a number, got '" + token + "'");
    }
}

} // namespace

std::vector<std::pair<double, double>> read_two_column(std::istream& in) {
    std::vector<std::pair<double, double>> rows;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto fields = split_fields(line);
        if (fields.empty() || fields.front().front() == '#') continue;
        if (fields.size() != 2) {
            throw std::runtime_error("line " + std::to_string(line_number) +
                                     ": expected two columns, got " + std::to_string(fields.size()));
        }
        rows.emplace_back(parse_double(fields[0], line_number), parse_double(fields[1], line_number));
    }
    return rows;
}

std::vector<std::pair<double, double>> read_two_column(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_two_column(in);
}

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_csv(std::ostream& out, const CsvTable& table) {
    out << "# " << table.header_comment << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) out << ',';
        out << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << format_double(row[i]);
        }
        out << '\n';
    }
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    write_csv(out, table);
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    std::size_t line_number = 0;
    bool have_columns = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::size_t start = 1;
            while (start < line.size() && line[start] == ' ') ++start;
            table.header_comment = line.substr(start);
            continue;
        }
        auto fields = split_fields(line);
        if (!have_columns) {
            table.columns = std::move(fields);
            have_columns = true;
            continue;
        }
        if (fields.size() != table.columns.size()) {
            throw std::runtime_error("line " + std::to_string(line_number) +
                                     ": row width does not match the header");
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& token : fields) row.push_back(parse_double(token, line_number));
        table.rows.push_back(std::move(row));
    }
    if (!have_columns) throw std::runtime_error("CSV input has no column header");
    return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_csv(in);
}

} // namespace decosolv::io
