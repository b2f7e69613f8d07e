// Minimal CSV table with the 6-significant-digit number format shared by all
// emitted artifacts.

#pragma once

#include <string>
#include <vector>

namespace dsradar {

// %.6g rendering; output comparisons belong in tests, not in formatting.
std::string format_sig6(double value);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
    std::string to_string() const;
    // Writes the whole table in one shot; throws std::ios_base::failure on error.
    void write(const std::string& path) const;
};

}  // namespace dsradar
