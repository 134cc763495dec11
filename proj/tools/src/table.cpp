#include "table.hpp"

#include <algorithm>

namespace cmk::cli {

std::string render_table(const std::vector<Row> &rows, const std::vector<bool> &right_align,
                         const std::string &indent) {
  std::vector<std::size_t> width;
  for (const auto &row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto &row : rows) {
    std::string line = indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string pad(width[c] - row[c].size(), ' ');
      const bool right = c < right_align.size() && right_align[c];
      if (c)
        line += "  ";
      line += right ? pad + row[c] : row[c] + (c + 1 < row.size() ? pad : "");
    }
    out += line + "\n";
  }
  return out;
}

std::string render_matrix(const ARMatrix &m, const std::string &indent) {
  std::vector<Row> rows;
  Row header{""};
  header.insert(header.end(), m.col_labels.begin(), m.col_labels.end());
  rows.push_back(std::move(header));
  for (std::size_t r = 0; r < m.matrix.rows(); ++r) {
    Row row{m.row_labels[r]};
    for (std::size_t c = 0; c < m.matrix.cols(); ++c)
      row.push_back(m.matrix(r, c).get_str());
    rows.push_back(std::move(row));
  }
  std::vector<bool> right(m.col_labels.size() + 1, true);
  right[0] = false;
  return render_table(rows, right, indent);
}

} // namespace cmk::cli
