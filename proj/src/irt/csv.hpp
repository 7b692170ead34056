#pragma once

#include <string>
#include <vector>

namespace irt {

// 12-significant-digit rendering; the CSV bit-exactness contract.
std::string csv_number(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Column index by header name; throws if the column does not exist.
    std::size_t column(const std::string& name) const;
    // Parsed values of one column; empty cells come back as NaN.
    std::vector<double> numeric_column(const std::string& name) const;
};

// Writes the table in binary mode with '\n' line endings.
void write_csv(const std::string& path, const CsvTable& table);

CsvTable read_csv(const std::string& path);

}  // namespace irt
