#ifndef NILID_IDENTITY_SOLVER_HPP_
#define NILID_IDENTITY_SOLVER_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <variant>  // for variant
#include <vector>   // for vector

#include "nilid/exponent_matrix.hpp"
#include "nilid/integer.hpp"
#include "nilid/matrix_ut.hpp"
#include "nilid/subgroup.hpp"

namespace nilid {

  //! A finite list of elements of UT(n, Z); duplicates allowed, may be
  //! empty.
  struct ProblemInstance {
    std::size_t           n;
    std::vector<MatrixUT> generators;

    //! Throws DimensionError if some generator is not n x n.
    void validate() const;
  };

  //! Nonnegative v with M v = 0 and sum v = 1. Indices with v_i > 0 are
  //! dropped: v defines a homomorphism <A_I> -> R that is >= 0 on every
  //! generator and 0 on every identity word, so those generators occur in
  //! no identity word.
  struct Removal {
    std::vector<Rational> v;
  };

  //! Integer u with M^t u >= 1: multiplying the relations to the powers u
  //! puts prod a_i^{w_i}, w = M^t u > 0, in the derived subgroup, which
  //! forces <A_I> to equal the monoid generated by A_I.
  struct Terminal {
    std::vector<Integer> u;
  };

  struct RoundCertificate {
    std::vector<std::size_t>         indices;
    RelationSet                      relations;
    ExponentMatrix                   matrix;
    std::variant<Removal, Terminal>  outcome;
  };

  struct CertificateBundle {
    std::size_t                   generator_count = 0;
    std::vector<RoundCertificate> rounds;
    std::vector<std::size_t>      result;
  };

  struct SolveOutcome {
    //! Indices (into the input list, ascending) of {g in A : g^-1 in A*}.
    std::vector<std::size_t> invertible;
    CertificateBundle        bundle;
  };

  //! Computes {g in A : g^-1 in A*} together with a certificate per round.
  //! Each round builds relations for <A_I>, forms the exponent matrix and
  //! asks for a maximal-support point of {M v = 0, sum v = 1, v >= 0}. No
  //! point: A_I is the answer (Terminal). Otherwise the support of v is
  //! removed from I (Removal) and the loop continues; an empty I means the
  //! answer is empty.
  SolveOutcome find_invertible_subset(ProblemInstance const& inst);

  //! True iff some nonempty product over A equals the identity.
  bool decide_identity(ProblemInstance const& inst);

  enum class VerifyCode {
    ok,
    generator_count_mismatch,
    bad_first_round,
    bad_indices,
    relation_uses_foreign_generator,
    relation_not_identity,
    matrix_mismatch,
    removal_not_feasible,
    removal_bookkeeping,
    terminal_not_farkas,
    terminal_not_last,
    result_mismatch,
    claimed_mismatch,
    malformed,
  };

  char const* verify_code_name(VerifyCode c) noexcept;

  struct VerifyReport {
    VerifyCode  code = VerifyCode::ok;
    std::size_t round = 0;  // meaningful unless code is ok
    std::string detail;

    bool ok() const noexcept {
      return code == VerifyCode::ok;
    }
  };

  //! Re-checks a bundle against the instance without running any solver:
  //! every relation evaluates to the identity, M is the signed-occurrence
  //! matrix of the relations, removal vectors are feasible and the next
  //! index set is exactly their zero set, a terminal u satisfies
  //! M^t u >= 1 and ends the bundle, and the final index set equals both
  //! the bundle's result and `claimed`.
  VerifyReport verify_bundle(ProblemInstance const&          inst,
                             CertificateBundle const&        bundle,
                             std::vector<std::size_t> const& claimed);

}  // namespace nilid

#endif  // NILID_IDENTITY_SOLVER_HPP_
