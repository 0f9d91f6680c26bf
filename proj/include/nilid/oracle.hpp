#ifndef NILID_ORACLE_HPP_
#define NILID_ORACLE_HPP_

#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t
#include <optional>       // for optional
#include <span>           // for span
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "nilid/exponent_matrix.hpp"
#include "nilid/gen_word.hpp"
#include "nilid/integer.hpp"
#include "nilid/matrix_ut.hpp"

// Brute-force machinery for checking the solver at desk scale. Nothing in
// here is used by the production path.

namespace nilid::oracle {

  //! Budget for breadth-first searches, in stored elements.
  inline constexpr std::size_t kDefaultMaxElements = 4'000'000;

  //! Everything reachable as a nonempty product of at most `depth`
  //! generators, each element with one shortest witness.
  class ReachSet {
   public:
    struct Entry {
      MatrixUT      elem;
      std::uint32_t parent;     // index of the prefix, or kNone at depth 1
      std::uint32_t generator;  // last letter
      std::uint32_t depth;
    };
    static constexpr std::uint32_t kNone = 0xffffffffu;

    std::size_t depth() const noexcept {
      return depth_;
    }
    std::size_t size() const noexcept {
      return entries_.size();
    }
    std::vector<Entry> const& entries() const noexcept {
      return entries_;
    }

    //! Cumulative sizes: sizes()[d-1] elements are reachable within d.
    std::vector<std::size_t> const& sizes() const noexcept {
      return sizes_;
    }

    bool contains(MatrixUT const& m) const {
      return index_.count(m) != 0;
    }

    //! Shortest witness for m (as letters with exponent 1 merged), or
    //! nothing when m is not reachable.
    std::optional<GenWord> witness(MatrixUT const& m) const;

    //! Generator indices of entry k, in product order.
    std::vector<std::size_t> letters(std::size_t k) const;

   private:
    friend ReachSet bfs_products_serial(std::span<MatrixUT const>, std::size_t,
                                        std::size_t);
    friend ReachSet bfs_products(std::span<MatrixUT const>, std::size_t,
                                 std::size_t);
    friend class ReachBuilder;

    std::size_t                                              depth_ = 0;
    std::vector<Entry>                                       entries_;
    std::vector<std::size_t>                                 sizes_;
    std::unordered_map<MatrixUT, std::uint32_t, MatrixUTHash> index_;
  };

  //! Breadth-first closure of the products of length 1..depth, keyed on the
  //! full matrix. Layers are expanded with OpenMP; the merge is serial and
  //! in frontier order, so the result is identical to bfs_products_serial.
  //! Throws ResourceError past max_elements, std::invalid_argument for
  //! depth 0 or empty gens.
  ReachSet bfs_products(std::span<MatrixUT const> gens, std::size_t depth,
                        std::size_t max_elements = kDefaultMaxElements);

  //! Single-threaded reference for bfs_products.
  ReachSet bfs_products_serial(std::span<MatrixUT const> gens,
                               std::size_t               depth,
                               std::size_t max_elements = kDefaultMaxElements);

  //! A word over gens of length <= depth evaluating to gens[i]^-1. An empty
  //! answer only means "not within this depth".
  std::optional<GenWord> witness_inverse(std::span<MatrixUT const> gens,
                                         std::size_t i, std::size_t depth,
                                         std::size_t max_elements
                                         = kDefaultMaxElements);

  struct FourierMotzkinOptions {
    //! Eliminate the equalities by exact substitution before running FM on
    //! what is left. When false every equality becomes two inequalities
    //! (much larger systems; only for small inputs).
    bool        substitute_equalities = true;
    std::size_t max_variables         = 8;
    std::size_t max_inequalities      = 200'000;
  };

  //! Decides {v : M v = 0, sum v = 1, v >= 0} by Fourier-Motzkin
  //! elimination. Throws ResourceError when M has more than max_variables
  //! columns or an intermediate system outgrows max_inequalities.
  bool fourier_motzkin_feasible(ExponentMatrix const&  m,
                                FourierMotzkinOptions const& opts = {});

  //! The integer row lattice of a matrix, kept in Hermite normal form.
  class RowLattice {
   public:
    explicit RowLattice(ExponentMatrix const& m);
    RowLattice(std::vector<std::vector<Integer>> rows, std::size_t cols);

    std::size_t rank() const noexcept {
      return basis_.size();
    }
    std::vector<std::vector<Integer>> const& basis() const noexcept {
      return basis_;
    }

    //! Is x an integer combination of the rows?
    bool contains(std::span<Integer const> x) const;

   private:
    void reduce(std::vector<std::vector<Integer>> rows);

    std::size_t                       cols_;
    std::vector<std::vector<Integer>> basis_;
    std::vector<std::size_t>          pivots_;
  };

  //! Exponent vectors of identity words over gens found by enumerating every
  //! positive word of length 1..depth: the words equal to the identity, and
  //! u v^-1 for each pair of words u, v with the same value (u the first one
  //! found). Each vector has gens.size() entries; duplicates are removed.
  //! Throws ResourceError past max_words.
  std::vector<std::vector<Integer>>
  identity_word_exponents(std::span<MatrixUT const> gens, std::size_t depth,
                          std::size_t max_words = 2'000'000);

}  // namespace nilid::oracle

#endif  // NILID_ORACLE_HPP_
