#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace secscore {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// RFC 4180 style: quoted fields, doubled quotes, embedded commas/newlines, CRLF.
CsvTable read_csv(std::istream& in);

// Throws IoError when the file cannot be opened.
CsvTable read_csv_file(const std::filesystem::path& path);

// Index of a header column by name. Throws SchemaError when absent.
std::size_t column_index(const CsvTable& table, std::string_view name);

// Returns the cell or "" when the row is shorter than the header.
std::string_view cell(const std::vector<std::string>& row, std::size_t index);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace secscore
