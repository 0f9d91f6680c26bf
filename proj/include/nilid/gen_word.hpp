#ifndef NILID_GEN_WORD_HPP_
#define NILID_GEN_WORD_HPP_

#include <cstddef>  // for size_t
#include <span>     // for span
#include <vector>   // for vector

#include "nilid/integer.hpp"
#include "nilid/matrix_ut.hpp"

namespace nilid {

  //! One factor g^e of a word; e is never zero in a reduced word.
  struct Letter {
    std::size_t generator;
    Integer     exponent;

    friend bool operator==(Letter const&, Letter const&) = default;
  };

  //! A word over indexed generators in compressed (index, exponent) form.
  //! Letters are applied left to right: [(0,1),(1,2)] means g0 * g1^2.
  struct GenWord {
    std::vector<Letter> letters;

    bool empty() const noexcept {
      return letters.empty();
    }
    friend bool operator==(GenWord const&, GenWord const&) = default;
  };

  GenWord concat(GenWord const& a, GenWord const& b);

  GenWord word_inverse(GenWord const& w);

  //! Merges adjacent letters on the same generator and drops zero
  //! exponents, repeatedly, so the result is freely reduced.
  GenWord free_reduce(GenWord const& w);

  //! Total length counted with multiplicity, sum of |exponent|.
  Integer word_length(GenWord const& w);

  //! Evaluates w over gens; the empty word gives the identity of dimension
  //! `n`. Throws IndexError on an index outside gens and DimensionError if
  //! the gens disagree on dimension.
  MatrixUT evaluate_word(GenWord const& w, std::span<MatrixUT const> gens,
                         std::size_t n);

  //! As above, with n taken from gens (which must then be nonempty).
  MatrixUT evaluate_word(GenWord const& w, std::span<MatrixUT const> gens);

}  // namespace nilid

#endif  // NILID_GEN_WORD_HPP_
