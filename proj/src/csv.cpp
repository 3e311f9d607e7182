#include "pgraphon/csv.hpp"

#include <sstream>

#include "pgraphon/errors.hpp"

namespace pgraphon {

namespace {

bool needs_quotes(const std::string& s) {
    return s.find_first_of(",\"\r\n") != std::string::npos;
}

void emit_field(const std::string& s, std::ostream& out) {
    if (!needs_quotes(s)) {
        out << s;
        return;
    }
    out << '"';
    for (char c : s) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

void emit_row(const std::vector<std::string>& row, std::ostream& out) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        emit_field(row[i], out);
    }
    out << "\r\n";
}

std::vector<std::vector<std::string>> parse_records(std::istream& in) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool row_started = false;
    int c;
    while ((c = in.get()) != EOF) {
        const char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(ch);
            }
            continue;
        }
        switch (ch) {
            case '"':
                if (!field.empty()) throw InputError("csv: quote inside unquoted field");
                quoted = true;
                row_started = true;
                break;
            case ',':
                row.push_back(std::move(field));
                field.clear();
                row_started = true;
                break;
            case '\r':
                break;
            case '\n':
                if (row_started || !field.empty() || !row.empty()) {
                    row.push_back(std::move(field));
                    field.clear();
                    records.push_back(std::move(row));
                    row.clear();
                    row_started = false;
                }
                break;
            default:
                field.push_back(ch);
                row_started = true;
        }
    }
    if (quoted) throw InputError("csv: unterminated quoted field");
    if (row_started || !field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        records.push_back(std::move(row));
    }
    return records;
}

}  // namespace

void csv_emit(const CsvTable& table, std::ostream& out) {
    emit_row(table.header, out);
    for (const auto& row : table.rows) emit_row(row, out);
}

std::string csv_emit(const CsvTable& table) {
    std::ostringstream out;
    csv_emit(table, out);
    return out.str();
}

CsvTable csv_parse(std::istream& in) {
    auto records = parse_records(in);
    if (records.empty()) throw InputError("csv: missing header row");
    CsvTable table;
    table.header = std::move(records.front());
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != table.header.size())
            throw InputError("csv: row width differs from the header");
        table.rows.push_back(std::move(records[r]));
    }
    return table;
}

CsvTable csv_parse(const std::string& text) {
    std::istringstream in(text);
    return csv_parse(in);
}

}  // namespace pgraphon
