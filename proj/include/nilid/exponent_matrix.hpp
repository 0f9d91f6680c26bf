#ifndef NILID_EXPONENT_MATRIX_HPP_
#define NILID_EXPONENT_MATRIX_HPP_

#include <cstddef>  // for size_t
#include <span>     // for span
#include <vector>   // for vector

#include "nilid/integer.hpp"

namespace nilid {

  //! Integer matrix of signed generator occurrences: one row per relation,
  //! one column per generator index in `columns` (ascending).
  class ExponentMatrix {
   public:
    ExponentMatrix() = default;
    ExponentMatrix(std::size_t rows, std::vector<std::size_t> columns);

    //! Builds from explicit rows; every row must have columns.size()
    //! entries (DimensionError otherwise).
    static ExponentMatrix from_rows(std::vector<std::vector<Integer>> rows,
                                    std::vector<std::size_t> columns);

    //! Convenience for tests: columns are 0..k-1.
    static ExponentMatrix from_rows(std::vector<std::vector<Integer>> rows,
                                    std::size_t cols);

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return columns_.size();
    }
    std::vector<std::size_t> const& columns() const noexcept {
      return columns_;
    }

    Integer& at(std::size_t r, std::size_t c) {
      return entries_[r * cols() + c];
    }
    Integer const& at(std::size_t r, std::size_t c) const {
      return entries_[r * cols() + c];
    }

    std::span<Integer const> row(std::size_t r) const {
      return {entries_.data() + r * cols(), cols()};
    }

    friend bool operator==(ExponentMatrix const&, ExponentMatrix const&)
        = default;

   private:
    std::size_t              rows_ = 0;
    std::vector<std::size_t> columns_;
    std::vector<Integer>     entries_;
  };

}  // namespace nilid

#endif  // NILID_EXPONENT_MATRIX_HPP_
