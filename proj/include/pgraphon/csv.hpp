#ifndef PGRAPHON_CSV_HPP
#define PGRAPHON_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pgraphon {

/// Minimal RFC-4180 table: UTF-8, header row, fields quoted when they
/// contain commas, quotes or newlines. parse(emit(t)) == t.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    bool operator==(const CsvTable&) const = default;
};

void csv_emit(const CsvTable& table, std::ostream& out);
std::string csv_emit(const CsvTable& table);
CsvTable csv_parse(std::istream& in);
CsvTable csv_parse(const std::string& text);

}  // namespace pgraphon

#endif
