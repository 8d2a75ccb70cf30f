#pragma once

#include <rsd/common.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rsd {

// Plain numeric CSV with a header row. Empty fields and the literal "NA"
// are missing values. No quoting; survey extracts in this format are flat.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::optional<double>>> rows;

    int column(const std::string& name) const;  // -1 when absent
    int require_column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);
CsvTable parse_csv(const std::string& text, const std::string& origin);

}  // namespace rsd
