#include "nilid/exponent_matrix.hpp"

#include <string>  // for to_string

#include "nilid/errors.hpp"

namespace nilid {

  ExponentMatrix::ExponentMatrix(std::size_t rows, std::vector<std::size_t> columns)
      : rows_(rows),
        columns_(std::move(columns)),
        entries_(rows_ * columns_.size()) {}

  ExponentMatrix ExponentMatrix::from_rows(std::vector<std::vector<Integer>> rows,
                                           std::vector<std::size_t> columns) {
    ExponentMatrix m(rows.size(), std::move(columns));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols()) {
        throw DimensionError("row " + std::to_string(r) + " has "
                             + std::to_string(rows[r].size())
                             + " entries, expected " + std::to_string(m.cols()));
      }
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m.at(r, c) = std::move(rows[r][c]);
      }
    }
    return m;
  }

  ExponentMatrix ExponentMatrix::from_rows(std::vector<std::vector<Integer>> rows,
                                           std::size_t cols) {
    std::vector<std::size_t> columns(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      columns[c] = c;
    }
    return from_rows(std::move(rows), std::move(columns));
  }

}  // namespace nilid
