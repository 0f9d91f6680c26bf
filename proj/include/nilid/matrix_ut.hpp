#ifndef NILID_MATRIX_UT_HPP_
#define NILID_MATRIX_UT_HPP_

#include <cstddef>  // for size_t
#include <iosfwd>   // for ostream
#include <optional>  // for optional
#include <utility>  // for pair
#include <vector>   // for vector

#include "nilid/integer.hpp"

namespace nilid {

  struct MalcevVector;

  //! An element of UT(n, Z): an n x n upper unitriangular integer matrix.
  //!
  //! Only the strictly upper triangle is stored. Values are immutable once
  //! built; the free functions below are the only way to make new ones.
  //! Row and column indices of entry() are 0-based.
  class MatrixUT {
   public:
    //! The identity of UT(n, Z). Requires n >= 1.
    explicit MatrixUT(std::size_t n);

    //! Builds from full rows. Throws NotUnitriangular unless the diagonal is
    //! all ones and everything below it is zero, DimensionError if the rows
    //! are not square.
    static MatrixUT from_rows(std::vector<std::vector<Integer>> const& rows);

    //! Builds from the n(n-1)/2 strictly upper entries in row-major order.
    static MatrixUT from_upper(std::size_t n, std::vector<Integer> upper);

    std::size_t dim() const noexcept {
      return n_;
    }

    //! Entry (i, j), 0-based. Diagonal entries are 1, lower ones 0.
    Integer const& entry(std::size_t i, std::size_t j) const;

    bool is_identity() const noexcept;

    std::vector<std::vector<Integer>> rows() const;

    std::vector<Integer> const& upper() const noexcept {
      return upper_;
    }

    std::size_t hash() const noexcept;

    friend bool operator==(MatrixUT const& a, MatrixUT const& b) {
      return a.n_ == b.n_ && a.upper_ == b.upper_;
    }

   private:
    friend MatrixUT mul(MatrixUT const&, MatrixUT const&);
    friend MatrixUT inverse(MatrixUT const&);
    friend MatrixUT elementary(std::size_t, std::size_t, std::size_t,
                               Integer const&);
    friend MatrixUT     from_malcev(MalcevVector const&);
    friend MalcevVector malcev_coordinates(MatrixUT const&);

    std::size_t offset(std::size_t i, std::size_t j) const noexcept {
      // row i holds n - 1 - i strictly upper entries
      return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
    }
    Integer& at(std::size_t i, std::size_t j) noexcept {
      return upper_[offset(i, j)];
    }
    Integer const& at(std::size_t i, std::size_t j) const noexcept {
      return upper_[offset(i, j)];
    }

    std::size_t          n_;
    std::vector<Integer> upper_;
  };

  struct MatrixUTHash {
    std::size_t operator()(MatrixUT const& m) const noexcept {
      return m.hash();
    }
  };

  std::ostream& operator<<(std::ostream& os, MatrixUT const& m);

  //! Exact product a * b. Throws DimensionError when a.dim() != b.dim().
  MatrixUT mul(MatrixUT const& a, MatrixUT const& b);

  //! Exact inverse; unitriangular inverses are integral.
  MatrixUT inverse(MatrixUT const& a);

  //! a^k for any integer k (negative powers go through inverse()).
  MatrixUT power(MatrixUT const& a, Integer const& k);

  //! [a, b] = a^-1 b^-1 a b.
  MatrixUT commutator(MatrixUT const& a, MatrixUT const& b);

  //! e_ij(k): the identity with entry (i, j) set to k. The indices are
  //! 1-based, as in the usual e_ij notation, and need 1 <= i < j <= n;
  //! anything else throws IndexError.
  MatrixUT elementary(std::size_t n, std::size_t i, std::size_t j,
                      Integer const& k);

  // Mal'cev coordinates ------------------------------------------------------

  //! Number of Mal'cev coordinates of UT(n, Z), n(n-1)/2.
  constexpr std::size_t malcev_length(std::size_t n) noexcept {
    return n * (n - (n > 0 ? 1 : 0)) / 2;
  }

  //! Position (i, j), 0-based, of coordinate k in superdiagonal-major order:
  //! (0,1), (1,2), ..., (n-2,n-1), (0,2), (1,3), ...
  std::pair<std::size_t, std::size_t> malcev_position(std::size_t n,
                                                      std::size_t k);

  //! Inverse of malcev_position.
  std::size_t malcev_index(std::size_t n, std::size_t i, std::size_t j);

  //! Exponent vector of an element with respect to the elementary matrices
  //! taken in superdiagonal-major order.
  struct MalcevVector {
    std::size_t          n;
    std::vector<Integer> coords;

    friend bool operator==(MalcevVector const&, MalcevVector const&)
        = default;
  };

  //! The unique x with a = prod_k e_k^{x_k}, product taken in coordinate
  //! order. Computed by peeling one superdiagonal at a time.
  MalcevVector malcev_coordinates(MatrixUT const& a);

  //! Inverse of malcev_coordinates. Throws DimensionError if
  //! x.coords.size() != malcev_length(x.n).
  MatrixUT from_malcev(MalcevVector const& x);

  //! The first nonzero Mal'cev coordinate of a, as (index, value), or
  //! nothing for the identity. On the first nonzero superdiagonal the
  //! coordinates coincide with the entries, so no peeling is needed.
  std::optional<std::pair<std::size_t, Integer>>
  leading_coordinate(MatrixUT const& a);

}  // namespace nilid

#endif  // NILID_MATRIX_UT_HPP_
