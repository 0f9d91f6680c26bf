#include <algorithm>  // for sort, unique
#include <set>        // for set
#include <sstream>    // for ostringstream
#include <variant>    // for get, holds_alternative
#include <vector>     // for vector

#include <catch2/catch_amalgamated.hpp>

#include "nilid/errors.hpp"
#include "nilid/exact_lp.hpp"
#include "nilid/identity_solver.hpp"
#include "nilid/oracle.hpp"

#include "test-support.hpp"

namespace nilid {

  using test::e;

  namespace {
    using Indices = std::vector<std::size_t>;

    SolveOutcome solve(std::size_t n, std::vector<MatrixUT> gens) {
      return find_invertible_subset({n, std::move(gens)});
    }

    std::vector<std::string> keys(std::vector<MatrixUT> const& gens,
                                  Indices const&               idx) {
      std::vector<std::string> out;
      for (auto i : idx) {
        std::ostringstream os;
        os << gens[i];
        out.push_back(os.str());
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }  // namespace

  TEST_CASE("Solver 000: find_invertible_subset examples", "[quick][solver]") {
    auto x = e(2, 1, 2, 1);
    auto s1 = solve(2, {x});
    REQUIRE(s1.invertible.empty());
    REQUIRE(s1.bundle.rounds.size() == 1);
    auto const& v1 = std::get<Removal>(s1.bundle.rounds[0].outcome).v;
    REQUIRE(v1 == std::vector<Rational>{Rational(1)});

    auto s2 = solve(2, {x, inverse(x)});
    REQUIRE(s2.invertible == Indices({0, 1}));
    auto const& last = s2.bundle.rounds.back();
    REQUIRE(std::holds_alternative<Terminal>(last.outcome));
    REQUIRE(verify_farkas(last.matrix, std::get<Terminal>(last.outcome).u));
    std::vector<Integer> ones = {Integer(1), Integer(1)};
    REQUIRE(oracle::RowLattice(last.matrix).contains(ones));

    auto x3 = e(3, 1, 2, 1);
    auto y3 = e(3, 2, 3, 1);
    auto s3 = solve(3, {x3, y3, inverse(mul(x3, y3))});
    REQUIRE(s3.invertible == Indices({0, 1, 2}));

    auto s4 = solve(3, {x3, y3});
    REQUIRE(s4.invertible.empty());
    REQUIRE(s4.bundle.rounds.size() == 1);
    for (std::size_t r = 0; r < s4.bundle.rounds[0].matrix.rows(); ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        REQUIRE(s4.bundle.rounds[0].matrix.at(r, c) == 0);
      }
    }
    REQUIRE(std::get<Removal>(s4.bundle.rounds[0].outcome).v
            == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  }

  TEST_CASE("Solver 001: decide_identity examples", "[quick][solver]") {
    REQUIRE(!decide_identity({3, {}}));
    REQUIRE(decide_identity({3, {MatrixUT(3)}}));
    REQUIRE(decide_identity({2, {e(2, 1, 2, 1), e(2, 1, 2, -3)}}));
    auto w = oracle::witness_inverse(
        std::vector<MatrixUT>{e(2, 1, 2, 1), e(2, 1, 2, -3)}, 1, 4);
    REQUIRE(w.has_value());

    auto empty = find_invertible_subset({3, {}});
    REQUIRE(empty.invertible.empty());
    REQUIRE(empty.bundle.rounds.empty());
  }

  TEST_CASE("Solver 002: instance validation", "[quick][solver]") {
    REQUIRE_THROWS_AS(find_invertible_subset({3, {MatrixUT(2)}}), DimensionError);
    REQUIRE_THROWS_AS(find_invertible_subset({3, {MatrixUT(3), MatrixUT(4)}}),
                      DimensionError);
  }

  TEST_CASE("Solver 003: verify_bundle", "[quick][solver]") {
    auto          x = e(3, 1, 2, 1);
    auto          y = e(3, 2, 3, 1);
    ProblemInstance inst{3, {x, y, mul(x, x), inverse(y)}};
    auto          out = find_invertible_subset(inst);
    REQUIRE(out.invertible == Indices({1, 3}));
    REQUIRE(verify_bundle(inst, out.bundle, out.invertible).ok());
    REQUIRE(verify_bundle(inst, out.bundle, Indices({1})).code
            == VerifyCode::claimed_mismatch);

    auto bad = out.bundle;
    auto& v  = std::get<Removal>(bad.rounds[0].outcome).v;
    v[0] += Rational(1, 7);
    REQUIRE(verify_bundle(inst, bad, out.invertible).code
            == VerifyCode::removal_not_feasible);

    auto bad2 = out.bundle;
    auto& u   = std::get<Terminal>(bad2.rounds.back().outcome).u;
    std::fill(u.begin(), u.end(), Integer(0));
    REQUIRE(verify_bundle(inst, bad2, out.invertible).code
            == VerifyCode::terminal_not_farkas);

    REQUIRE(std::string(verify_code_name(VerifyCode::ok)) == "ok");
  }

  TEST_CASE("Solver 004: properties", "[quick][property]") {
    test::Random rng(47);
    for (std::size_t t = 0; t < 40; ++t) {
      std::size_t n    = 2 + rng.index(3);
      auto        gens = rng.instance(n, 1 + rng.index(5), 3);
      auto        out  = solve(n, gens);
      ProblemInstance inst{n, gens};

      // Termination bound and strictly shrinking supports.
      std::size_t removals = 0;
      for (std::size_t r = 0; r < out.bundle.rounds.size(); ++r) {
        auto const& round = out.bundle.rounds[r];
        removals += std::holds_alternative<Removal>(round.outcome);
        if (r > 0) {
          REQUIRE(round.indices.size() < out.bundle.rounds[r - 1].indices.size());
        }
      }
      REQUIRE(removals <= gens.size());
      REQUIRE(verify_bundle(inst, out.bundle, out.invertible).ok());

      // Determinism.
      auto again = solve(n, gens);
      REQUIRE(again.invertible == out.invertible);
      REQUIRE(again.bundle.rounds.size() == out.bundle.rounds.size());
      for (std::size_t r = 0; r < out.bundle.rounds.size(); ++r) {
        REQUIRE(again.bundle.rounds[r].matrix == out.bundle.rounds[r].matrix);
        REQUIRE(again.bundle.rounds[r].relations.pool.nodes()
                == out.bundle.rounds[r].relations.pool.nodes());
      }

      // Fixpoint.
      if (!out.invertible.empty()) {
        std::vector<MatrixUT> sub;
        for (auto i : out.invertible) {
          sub.push_back(gens[i]);
        }
        auto fix = solve(n, sub);
        REQUIRE(fix.invertible.size() == sub.size());
      }

      // Identity element: appending I puts it in the answer.
      auto with_id = gens;
      with_id.push_back(MatrixUT(n));
      auto wi = solve(n, with_id);
      REQUIRE(std::find(wi.invertible.begin(), wi.invertible.end(),
                        gens.size())
              != wi.invertible.end());

      // Duplicate invariance.
      auto dup = gens;
      dup.push_back(gens[rng.index(gens.size())]);
      auto od = solve(n, dup);
      REQUIRE(keys(dup, od.invertible) == keys(gens, out.invertible));
    }
  }

}  // namespace nilid
