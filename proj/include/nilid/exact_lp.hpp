#ifndef NILID_EXACT_LP_HPP_
#define NILID_EXACT_LP_HPP_

#include <optional>  // for optional
#include <variant>   // for variant
#include <vector>    // for vector

#include "nilid/exponent_matrix.hpp"
#include "nilid/integer.hpp"

namespace nilid {

  //! A point of {v : M v = 0, sum v = 1, v >= 0}.
  struct Feasible {
    std::vector<Rational> v;
  };

  //! An integer u with every coordinate of M^t u at least 1, which rules
  //! out any such v (pair it with v: 0 = u^t M v = (M^t u)^t v > 0).
  struct Infeasible {
    std::vector<Integer> u;
  };

  using FeasibilityResult = std::variant<Feasible, Infeasible>;

  //! Decides {v : M v = 0, sum v = 1, v >= 0} by phase-I simplex in exact
  //! rational arithmetic with Bland's rule. Feasible systems return the
  //! phase-I vertex; infeasible ones return the phase-I dual, rescaled to
  //! the smallest integer vector on its ray. Zero-row M is fine.
  FeasibilityResult solve_feasibility(ExponentMatrix const& m);

  //! Like solve_feasibility, but a feasible answer has inclusion-maximal
  //! support: each v_i is maximized over the feasible set and the
  //! maximizers are averaged with equal weights. v_i = 0 exactly when every
  //! feasible point has v_i = 0.
  FeasibilityResult solve_maximal_support(ExponentMatrix const& m);

  //! The maximal-support point, or nothing when the system is infeasible.
  std::optional<std::vector<Rational>>
  relative_interior_solution(ExponentMatrix const& m);

  //! Exact check of M v = 0, sum v = 1, v >= 0. Throws DimensionError if
  //! v.size() != m.cols().
  bool verify_feasible(ExponentMatrix const& m, std::vector<Rational> const& v);

  //! Exact check that every coordinate of M^t u is >= 1. Throws
  //! DimensionError if u.size() != m.rows().
  bool verify_farkas(ExponentMatrix const& m, std::vector<Integer> const& u);

  //! M^t u.
  std::vector<Integer> transpose_times(ExponentMatrix const&       m,
                                       std::vector<Integer> const& u);

}  // namespace nilid

#endif  // NILID_EXACT_LP_HPP_
