#include <variant>  // for holds_alternative, get
#include <vector>   // for vector

#include <catch2/catch_amalgamated.hpp>

#include "nilid/errors.hpp"
#include "nilid/exact_lp.hpp"
#include "nilid/oracle.hpp"

#include "test-support.hpp"

namespace nilid {

  using test::int_rows;
  using test::ints;

  namespace {
    ExponentMatrix mat(std::vector<std::vector<long>> const& rows,
                       std::size_t                           cols) {
      return ExponentMatrix::from_rows(int_rows(rows), cols);
    }

    std::vector<Rational> rats(std::vector<char const*> const& xs) {
      std::vector<Rational> out;
      for (auto x : xs) {
        out.push_back(parse_rational(x));
      }
      return out;
    }

    ExponentMatrix random_matrix(test::Random& rng, long bound) {
      std::size_t                       m = rng.index(7);
      std::size_t                       n = 1 + rng.index(6);
      std::vector<std::vector<Integer>> rows(m, std::vector<Integer>(n));
      for (auto& r : rows) {
        for (auto& x : r) {
          x = rng.integer(-bound, bound);
        }
      }
      return ExponentMatrix::from_rows(std::move(rows), n);
    }

    // {Mv = 0, v >= 0, v_i >= 1/D} encoded with a slack column s:
    // D v_i - sum(v) - (D + 1) s = 0 under the normalisation sum(v) + s = 1.
    ExponentMatrix with_lower_bound(ExponentMatrix const& m, std::size_t i,
                                    Integer const& d) {
      std::vector<std::vector<Integer>> rows;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.emplace_back(m.row(r).begin(), m.row(r).end());
        rows.back().push_back(0);
      }
      std::vector<Integer> extra(m.cols() + 1, Integer(-1));
      extra[i] += d;
      extra.back() = -(d + 1);
      rows.push_back(std::move(extra));
      return ExponentMatrix::from_rows(std::move(rows), m.cols() + 1);
    }

    std::vector<bool> support(std::vector<Rational> const& v) {
      std::vector<bool> s;
      for (auto const& x : v) {
        s.push_back(sgn(x) > 0);
      }
      return s;
    }
  }  // namespace

  TEST_CASE("ExactLP 000: solve_feasibility examples", "[quick][lp]") {
    auto m1 = mat({{1, 1}}, 2);
    auto r1 = solve_feasibility(m1);
    REQUIRE(std::holds_alternative<Infeasible>(r1));
    REQUIRE(std::get<Infeasible>(r1).u == ints({1}));
    REQUIRE(transpose_times(m1, ints({1})) == ints({1, 1}));

    auto m2 = mat({}, 3);
    auto r2 = solve_feasibility(m2);
    REQUIRE(std::holds_alternative<Feasible>(r2));
    REQUIRE(verify_feasible(m2, std::get<Feasible>(r2).v));

    auto golden = mat({{0, 3, 2}, {9, -5, 0}}, 3);
    auto r3     = solve_feasibility(golden);
    REQUIRE(std::holds_alternative<Infeasible>(r3));
    REQUIRE(verify_farkas(golden, std::get<Infeasible>(r3).u));
    REQUIRE(transpose_times(golden, ints({2, 1})) == ints({9, 1, 4}));

    auto m4 = mat({{1, -1}}, 2);
    auto r4 = solve_feasibility(m4);
    REQUIRE(std::holds_alternative<Feasible>(r4));
    REQUIRE(std::get<Feasible>(r4).v == rats({"1/2", "1/2"}));
  }

  TEST_CASE("ExactLP 001: relative interior examples", "[quick][lp]") {
    REQUIRE(relative_interior_solution(mat({}, 2)) == rats({"1/2", "1/2"}));
    REQUIRE(relative_interior_solution(mat({{0, 1}}, 2)) == rats({"1", "0"}));
    auto v = relative_interior_solution(mat({{1, -1, 0}}, 3));
    REQUIRE(v.has_value());
    REQUIRE(verify_feasible(mat({{1, -1, 0}}, 3), *v));
    REQUIRE(support(*v) == std::vector<bool>({true, true, true}));
    REQUIRE(!relative_interior_solution(mat({{1, 1}}, 2)).has_value());
    REQUIRE(!relative_interior_solution(mat({}, 0)).has_value());
  }

  TEST_CASE("ExactLP 002: verifiers", "[quick][lp]") {
    auto golden = mat({{0, 3, 2}, {9, -5, 0}}, 3);
    REQUIRE(verify_farkas(golden, ints({2, 1})));
    REQUIRE(!verify_farkas(golden, ints({0, 0})));
    REQUIRE(!verify_farkas(golden, ints({1, 0})));
    REQUIRE(verify_feasible(mat({}, 2), rats({"1/2", "1/2"})));
    REQUIRE(!verify_feasible(mat({{1, 1}}, 2), rats({"1/2", "1/2"})));
    REQUIRE(!verify_feasible(mat({}, 2), rats({"3/2", "-1/2"})));
    REQUIRE(!verify_feasible(mat({}, 2), rats({"1/2", "1/3"})));
    REQUIRE_THROWS_AS(verify_farkas(golden, ints({1})), DimensionError);
    REQUIRE_THROWS_AS(verify_feasible(golden, rats({"1"})), DimensionError);
  }

  TEST_CASE("ExactLP 003: soundness and oracle agreement",
            "[quick][property]") {
    test::Random rng(37);
    for (std::size_t t = 0; t < 1500; ++t) {
      auto m = random_matrix(rng, 10);
      auto r = solve_feasibility(m);
      bool feasible = std::holds_alternative<Feasible>(r);
      if (feasible) {
        REQUIRE(verify_feasible(m, std::get<Feasible>(r).v));
      } else {
        REQUIRE(verify_farkas(m, std::get<Infeasible>(r).u));
      }
      REQUIRE(feasible == oracle::fourier_motzkin_feasible(m));
      auto s = solve_maximal_support(m);
      REQUIRE(std::holds_alternative<Feasible>(s) == feasible);
    }
  }

  TEST_CASE("ExactLP 004: scale invariance", "[quick][property]") {
    test::Random rng(41);
    for (std::size_t t = 0; t < 300; ++t) {
      auto m = random_matrix(rng, 4);
      if (m.rows() == 0) {
        continue;
      }
      std::vector<std::vector<Integer>> rows;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.emplace_back(m.row(r).begin(), m.row(r).end());
      }
      long k = 0;
      while (k == 0) {
        k = rng.integer(-7, 7);
      }
      for (auto& x : rows[rng.index(rows.size())]) {
        x *= k;
      }
      auto scaled = ExponentMatrix::from_rows(std::move(rows), m.cols());
      auto a      = relative_interior_solution(m);
      auto b      = relative_interior_solution(scaled);
      REQUIRE(a.has_value() == b.has_value());
      if (a) {
        REQUIRE(support(*a) == support(*b));
      }
    }
  }

  TEST_CASE("ExactLP 005: support maximality", "[quick][property]") {
    test::Random rng(43);
    std::size_t  checked = 0;
    for (std::size_t t = 0; t < 400; ++t) {
      auto m = random_matrix(rng, 3);
      if (m.cols() > 7) {
        continue;
      }
      auto v = relative_interior_solution(m);
      if (!v) {
        continue;
      }
      REQUIRE(verify_feasible(m, *v));
      for (std::size_t i = 0; i < v->size(); ++i) {
        if (sgn((*v)[i]) == 0) {
          ++checked;
          // No feasible point has a positive i-th coordinate, however small.
          REQUIRE(!oracle::fourier_motzkin_feasible(
              with_lower_bound(m, i, Integer("1000000000000000000000"))));
        } else {
          REQUIRE(oracle::fourier_motzkin_feasible(
              with_lower_bound(m, i, Integer((*v)[i].get_den() / (*v)[i].get_num() + 1))));
        }
      }
    }
    REQUIRE(checked > 0);
  }

}  // namespace nilid
