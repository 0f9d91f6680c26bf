#ifndef NILID_SUBGROUP_HPP_
#define NILID_SUBGROUP_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <optional>  // for optional
#include <span>     // for span
#include <vector>   // for vector

#include "nilid/exponent_matrix.hpp"
#include "nilid/expression.hpp"
#include "nilid/gen_word.hpp"
#include "nilid/integer.hpp"
#include "nilid/matrix_ut.hpp"

namespace nilid {

  //! A group element together with a word (a pool node) over the input
  //! generators that evaluates to it.
  struct TrackedElement {
    MatrixUT elem;
    NodeId   expr;
  };

  //! An induced polycyclic sequence of a subgroup of UT(n, Z): at most one
  //! element per Mal'cev coordinate (its pivot). The element in slot p is
  //! zero on every coordinate before p and strictly positive at p. Once
  //! closed (see induced_sequence) the slots generate the same subgroup as
  //! the inputs and every element of it sifts to the identity.
  class InducedSequence {
   public:
    struct Slot {
      TrackedElement tracked;
      Integer        pivot_value;
    };

    explicit InducedSequence(std::size_t n);

    std::size_t dim() const noexcept {
      return n_;
    }

    std::optional<Slot> const& slot(std::size_t pivot) const {
      return slots_.at(pivot);
    }

    //! Occupied pivots, ascending.
    std::vector<std::size_t> pivots() const;

    std::size_t size() const;

    //! Stores t at `pivot`, replacing what was there. Throws
    //! std::invalid_argument unless t's leading coordinate is (pivot, v)
    //! with v > 0.
    void set_slot(std::size_t pivot, TrackedElement t);

   private:
    std::size_t                      n_;
    std::vector<std::optional<Slot>> slots_;
  };

  struct SiftResult {
    //! t times slot powers; equals the identity iff t sifted completely.
    TrackedElement residual;
    //! Power of each slot divided out, by pivot.
    std::map<std::size_t, Integer> exponents;
  };

  //! Divides t by slot powers in ascending pivot order. At pivot p with slot
  //! value a and current coordinate x, the slot is divided out floor(x / a)
  //! times (on the left), leaving the remainder x mod a. Stops at the first
  //! nonzero coordinate that cannot be cleared. Afterwards
  //! t = s_{p1}^{c1} ... s_{pk}^{ck} * residual, and residual.expr records
  //! exactly that.
  SiftResult sift(InducedSequence const& seq, TrackedElement const& t,
                  ExprPool& pool);

  //! Builds the closed induced sequence of <gens>.
  //!
  //! Worklist: each candidate is sifted; a nonidentity residual either
  //! fills an empty slot (sign-normalized) or collides with slot value a at
  //! the same pivot with value b, in which case the slot becomes
  //! s^x r^y with x a + y b = gcd(a, b) and both originals are re-queued.
  //! When the queue drains, the inputs and all conjugates s_p^{-e} s_q s_p^e
  //! (p < q, e = +-1) are sifted again and any nonidentity residual is
  //! queued. Stops when a full pass changes nothing. Every pivot value only
  //! decreases, so this terminates.
  InducedSequence induced_sequence(std::span<TrackedElement const> gens,
                                   std::size_t n, ExprPool& pool);

  //! A finite set of relation words over generator indices; each evaluates
  //! to the identity.
  struct RelationSet {
    ExprPool            pool;
    std::vector<NodeId> relations;

    //! Wraps flat words, e.g. a hand-written presentation.
    static RelationSet from_words(std::vector<GenWord> const& words);
  };

  //! Relations of a presentation of <A_I> on the generators A_I, where A_I
  //! is gens[i] for i in `indices` (relation words use the indices as
  //! generator ids). The relations are
  //!   * a^-1 * prod_p s_p^{c_p} for every a in A_I, with c its sift
  //!     exponents over the closed induced sequence, and
  //!   * (sift word)^-1 * s_p^{-e} s_q s_p^e for every pair of slots p < q
  //!     and e = +-1,
  //! with slot elements replaced by their expressions. Relations that
  //! reduce to the empty word are dropped. Throws DimensionError on mixed
  //! dimensions, IndexError on a bad index, std::invalid_argument if
  //! `indices` is empty.
  RelationSet subgroup_relations(std::span<MatrixUT const>    gens,
                                 std::span<std::size_t const> indices);

  //! As above with indices 0..gens.size()-1.
  RelationSet subgroup_relations(std::span<MatrixUT const> gens);

  //! Row r, column c: the signed exponent sum of generator columns[c] in
  //! relation r, with columns the sorted `indices`. Throws IndexError if a
  //! relation mentions a generator outside `indices`.
  ExponentMatrix exponent_matrix(RelationSet const&           rels,
                                 std::span<std::size_t const> indices);

}  // namespace nilid

#endif  // NILID_SUBGROUP_HPP_
