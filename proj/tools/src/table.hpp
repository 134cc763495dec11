#pragma once

#include "cmk/arquiver.hpp"

#include <string>
#include <vector>

namespace cmk::cli {

using Row = std::vector<std::string>;

// Columns padded to their widest cell. Right-aligned columns are listed by index.
std::string render_table(const std::vector<Row> &rows, const std::vector<bool> &right_align = {},
                         const std::string &indent = "  ");

// Matrix with its column labels on top and row labels on the left.
std::string render_matrix(const ARMatrix &m, const std::string &indent = "  ");

} // namespace cmk::cli
