#ifndef NILID_EXPRESSION_HPP_
#define NILID_EXPRESSION_HPP_

#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t
#include <deque>             // for deque
#include <initializer_list>  // for initializer_list
#include <optional>          // for optional
#include <span>              // for span
#include <utility>           // for pair
#include <vector>            // for vector

#include "nilid/gen_word.hpp"
#include "nilid/integer.hpp"
#include "nilid/matrix_ut.hpp"

namespace nilid {

  //! Identifies a node of an ExprPool.
  using NodeId = std::uint32_t;

  //! What a factor is a power of: an input generator or an earlier node.
  struct ExprBase {
    enum class Kind : std::uint8_t { generator, node };
    Kind        kind;
    std::size_t id;

    friend bool operator==(ExprBase const&, ExprBase const&) = default;
  };

  struct ExprFactor {
    ExprBase base;
    Integer  exponent;

    friend bool operator==(ExprFactor const&, ExprFactor const&) = default;
  };

  //! A straight-line program over indexed generators.
  //!
  //! Node k is a product of powers of generators and of nodes with smaller
  //! ids, so the pool is acyclic by construction and can be evaluated in
  //! id order. It describes the same words as GenWord, but powers of long
  //! subwords stay compressed: the Bezout and commutator steps of the sieve
  //! would otherwise make words grow exponentially. A node whose factors all
  //! have generator bases is just a GenWord.
  //!
  //! Node 0 is always the empty product.
  class ExprPool {
   public:
    ExprPool();

    //! Rebuilds a pool from raw node lists, e.g. when reading a
    //! certificate. Throws std::invalid_argument if a node references
    //! itself or a later node, if a factor has exponent 0, or if node 0 is
    //! not empty.
    static ExprPool from_nodes(std::vector<std::vector<ExprFactor>> nodes);

    static constexpr NodeId empty_node() noexcept {
      return 0;
    }

    NodeId generator(std::size_t g);
    NodeId word(GenWord const& w);
    NodeId power(NodeId x, Integer const& k);
    NodeId inverse(NodeId x) {
      return power(x, Integer(-1));
    }

    //! Product of the given nodes raised to the given powers. Single-factor
    //! children are inlined and adjacent factors with equal bases merged, so
    //! e.g. (g^-1)(g) collapses to the empty node.
    NodeId product(std::initializer_list<std::pair<NodeId, Integer>> parts);
    NodeId product(std::span<ExprFactor const> factors);

    bool is_empty(NodeId x) const {
      return nodes_.at(x).empty();
    }

    std::vector<ExprFactor> const& factors(NodeId x) const {
      return nodes_.at(x);
    }

    std::size_t size() const noexcept {
      return nodes_.size();
    }

    std::vector<std::vector<ExprFactor>> const& nodes() const noexcept {
      return nodes_;
    }

    //! Copies the nodes reachable from roots into a fresh pool, keeping
    //! their relative order; `roots` is rewritten to the new ids.
    ExprPool extract(std::vector<NodeId>& roots) const;

    //! Generator indices used by anything reachable from x.
    std::vector<std::size_t> generators_used(NodeId x) const;

    //! Flattens x into a freely reduced GenWord. Throws ResourceError if the
    //! flattened length would exceed max_letters.
    GenWord expand(NodeId x, std::size_t max_letters = 1u << 20) const;

   private:
    NodeId push(std::vector<ExprFactor> node);
    void   append_reduced(std::vector<ExprFactor>& out, ExprFactor f) const;

    std::vector<std::vector<ExprFactor>> nodes_;
  };

  //! Memoized evaluation of pool nodes over a fixed generator list.
  class ExprEvaluator {
   public:
    //! `gens` must outlive the evaluator. `n` is the common dimension.
    ExprEvaluator(ExprPool const& pool, std::span<MatrixUT const> gens,
                  std::size_t n);

    //! Throws IndexError if x or a referenced generator is out of range.
    MatrixUT const& value(NodeId x);

   private:
    ExprPool const*                      pool_;
    std::span<MatrixUT const>            gens_;
    std::size_t                          n_;
    std::deque<std::optional<MatrixUT>>   memo_;
  };

  //! Signed exponent sums of every generator, dense over
  //! [0, generator_count). Throws IndexError for larger generator ids.
  class ExponentSums {
   public:
    ExponentSums(ExprPool const& pool, std::size_t generator_count);

    std::vector<Integer> const& of(NodeId x);

   private:
    ExprPool const*                                  pool_;
    std::size_t                                      count_;
    std::deque<std::optional<std::vector<Integer>>> memo_;
  };

}  // namespace nilid

#endif  // NILID_EXPRESSION_HPP_
