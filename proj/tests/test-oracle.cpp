#include <vector>  // for vector

#include <catch2/catch_amalgamated.hpp>

#include "nilid/errors.hpp"
#include "nilid/exact_lp.hpp"
#include "nilid/oracle.hpp"

#include "test-support.hpp"

namespace nilid {

  using test::e;
  using test::int_rows;
  using test::ints;
  using test::word;

  TEST_CASE("Oracle 000: bfs_products examples", "[quick][oracle]") {
    std::vector<MatrixUT> one = {e(2, 1, 2, 1)};
    auto                  r1  = oracle::bfs_products(one, 3);
    REQUIRE(r1.size() == 3);
    REQUIRE(r1.sizes() == std::vector<std::size_t>({1, 2, 3}));
    for (long k = 1; k <= 3; ++k) {
      REQUIRE(r1.contains(e(2, 1, 2, k)));
    }
    REQUIRE(!r1.contains(MatrixUT(2)));

    std::vector<MatrixUT> inv = {e(2, 1, 2, 1), e(2, 1, 2, -1)};
    REQUIRE(oracle::bfs_products(inv, 2).contains(MatrixUT(2)));
    REQUIRE(!oracle::bfs_products(inv, 1).contains(MatrixUT(2)));

    std::vector<MatrixUT> xy = {e(3, 1, 2, 1), e(3, 2, 3, 1)};
    auto                  r3 = oracle::bfs_products(xy, 2);
    REQUIRE(r3.size() == 6);
    REQUIRE(r3.sizes() == std::vector<std::size_t>({2, 6}));

    REQUIRE_THROWS(oracle::bfs_products(std::vector<MatrixUT>{}, 2));
    REQUIRE_THROWS(oracle::bfs_products(one, 0));
    REQUIRE_THROWS_AS(oracle::bfs_products(xy, 20, 100), ResourceError);
  }

  TEST_CASE("Oracle 001: witness_inverse examples", "[quick][oracle]") {
    std::vector<MatrixUT> inv = {e(2, 1, 2, 1), e(2, 1, 2, -1)};
    REQUIRE(oracle::witness_inverse(inv, 0, 2) == word({{1, 1}}));

    std::vector<MatrixUT> one = {e(2, 1, 2, 1)};
    REQUIRE(!oracle::witness_inverse(one, 0, 10).has_value());

    auto                  x    = e(3, 1, 2, 1);
    auto                  y    = e(3, 2, 3, 1);
    std::vector<MatrixUT> gens = {x, y, inverse(mul(x, y))};
    auto                  w    = oracle::witness_inverse(gens, 0, 3);
    REQUIRE(w.has_value());
    REQUIRE(word_length(*w) <= 3);
    REQUIRE(evaluate_word(*w, gens) == inverse(x));
  }

  TEST_CASE("Oracle 002: reach set invariants", "[quick][property]") {
    test::Random rng(53);
    for (std::size_t t = 0; t < 30; ++t) {
      std::size_t n    = 2 + rng.index(3);
      auto        gens = rng.instance(n, 1 + rng.index(4), 3);
      auto        par  = oracle::bfs_products(gens, 5);
      auto        ser  = oracle::bfs_products_serial(gens, 5);
      REQUIRE(par.sizes() == ser.sizes());
      REQUIRE(par.size() == ser.size());
      for (std::size_t k = 0; k < par.size(); ++k) {
        REQUIRE(par.entries()[k].elem == ser.entries()[k].elem);
        REQUIRE(par.entries()[k].parent == ser.entries()[k].parent);
        REQUIRE(par.entries()[k].generator == ser.entries()[k].generator);
      }
      for (std::size_t d = 1; d < par.sizes().size(); ++d) {
        REQUIRE(par.sizes()[d - 1] <= par.sizes()[d]);
      }
      auto shallow = oracle::bfs_products(gens, 3);
      for (auto const& entry : shallow.entries()) {
        REQUIRE(par.contains(entry.elem));
      }
      for (std::size_t k = 0; k < par.size(); ++k) {
        auto const& entry = par.entries()[k];
        auto        w     = par.witness(entry.elem);
        REQUIRE(w.has_value());
        REQUIRE(evaluate_word(*w, gens, n) == entry.elem);
        // Shortest witness: its letter count equals the BFS depth.
        REQUIRE(par.letters(k).size() == entry.depth);
      }
    }
  }

  TEST_CASE("Oracle 003: fourier_motzkin examples", "[quick][oracle]") {
    auto m = [](std::vector<std::vector<long>> const& r, std::size_t c) {
      return ExponentMatrix::from_rows(int_rows(r), c);
    };
    REQUIRE(!oracle::fourier_motzkin_feasible(m({{1, 1}}, 2)));
    REQUIRE(oracle::fourier_motzkin_feasible(m({}, 2)));
    REQUIRE(!oracle::fourier_motzkin_feasible(m({{0, 3, 2}, {9, -5, 0}}, 3)));
    REQUIRE(oracle::fourier_motzkin_feasible(m({{1, -1}}, 2)));
    REQUIRE(!oracle::fourier_motzkin_feasible(m({}, 0)));
    REQUIRE_THROWS_AS(oracle::fourier_motzkin_feasible(m({}, 9)), ResourceError);

    oracle::FourierMotzkinOptions doubling;
    doubling.substitute_equalities = false;
    REQUIRE(!oracle::fourier_motzkin_feasible(m({{0, 3, 2}, {9, -5, 0}}, 3),
                                              doubling));
    REQUIRE(oracle::fourier_motzkin_feasible(m({{1, -1}}, 2), doubling));
  }

  TEST_CASE("Oracle 004: both elimination modes agree", "[quick][property]") {
    test::Random                  rng(59);
    oracle::FourierMotzkinOptions doubling;
    doubling.substitute_equalities = false;
    for (std::size_t t = 0; t < 300; ++t) {
      std::size_t                       rows = rng.index(4);
      std::size_t                       cols = 1 + rng.index(4);
      std::vector<std::vector<Integer>> r(rows, std::vector<Integer>(cols));
      for (auto& row : r) {
        for (auto& x : row) {
          x = rng.integer(-5, 5);
        }
      }
      auto m = ExponentMatrix::from_rows(std::move(r), cols);
      bool a = oracle::fourier_motzkin_feasible(m);
      REQUIRE(a == oracle::fourier_motzkin_feasible(m, doubling));
      REQUIRE(a == std::holds_alternative<Feasible>(solve_feasibility(m)));
    }
  }

  TEST_CASE("Oracle 005: row lattice membership", "[quick][oracle]") {
    oracle::RowLattice lat(int_rows({{2, 0}, {0, 3}, {4, 6}}), 2);
    REQUIRE(lat.rank() == 2);
    REQUIRE(lat.contains(ints({4, 3})));
    REQUIRE(lat.contains(ints({0, 0})));
    REQUIRE(!lat.contains(ints({1, 0})));
    REQUIRE(!lat.contains(ints({2, 1})));

    oracle::RowLattice diag(int_rows({{3, 5}, {1, 2}}), 2);
    REQUIRE(diag.contains(ints({1, 0})));
    REQUIRE(diag.contains(ints({0, 1})));

    oracle::RowLattice empty(int_rows({}), 3);
    REQUIRE(empty.rank() == 0);
    REQUIRE(empty.contains(ints({0, 0, 0})));
    REQUIRE(!empty.contains(ints({0, 1, 0})));
  }

  TEST_CASE("Oracle 006: identity word exponents", "[quick][oracle]") {
    std::vector<MatrixUT> inv  = {e(2, 1, 2, 1), e(2, 1, 2, -1)};
    auto                  exps = oracle::identity_word_exponents(inv, 2);
    REQUIRE(std::find(exps.begin(), exps.end(), ints({1, 1})) != exps.end());

    std::vector<MatrixUT> xy = {e(3, 1, 2, 1), e(3, 2, 3, 1)};
    for (auto const& x : oracle::identity_word_exponents(xy, 6)) {
      REQUIRE(x == ints({0, 0}));
    }
  }

}  // namespace nilid
