#include "irt/csv.hpp"

#include <charconv>
#include <fstream>
#include <limits>

#include "irt/errors.hpp"
#include "irt/fmt.hpp"

namespace irt {

std::string csv_number(double v) { return to_digits(v, 12); }

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw ModelError("csv table has no column '" + name + "'");
}

std::vector<double> CsvTable::numeric_column(const std::string& name) const {
    const std::size_t col = column(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (col >= rows[r].size()) {
            throw ModelError("csv row " + std::to_string(r) + " is missing column '" + name +
                             "'");
        }
        const std::string& cell = rows[r][col];
        if (cell.empty()) {
            out.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        double value = 0.0;
        const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
        if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
            throw ModelError("csv row " + std::to_string(r) + ", column '" + name +
                             "': not a number: '" + cell + "'");
        }
        out.push_back(value);
    }
    return out;
}

void write_csv(const std::string& path, const CsvTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ModelError("cannot write '" + path + "'");
    }
    std::string line;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) line += ',';
        line += table.header[i];
    }
    line += '\n';
    out << line;
    for (const auto& row : table.rows) {
        line.clear();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += ',';
            line += row[i];
        }
        line += '\n';
        out << line;
    }
    if (!out) {
        throw ModelError("write failed for '" + path + "'");
    }
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ModelError("cannot open '" + path + "'");
    }
    CsvTable table;
    std::string line;
    auto split = [](const std::string& text) {
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const std::size_t pos = text.find(',', start);
            if (pos == std::string::npos) {
                cells.push_back(text.substr(start));
                break;
            }
            cells.push_back(text.substr(start, pos - start));
            start = pos + 1;
        }
        return cells;
    };
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first) {
            table.header = split(line);
            first = false;
        } else if (!line.empty()) {
            table.rows.push_back(split(line));
        }
    }
    if (first) {
        throw ModelError("'" + path + "' is empty");
    }
    return table;
}

}  // namespace irt
