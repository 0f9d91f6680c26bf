#ifndef NILID_TESTS_TEST_SUPPORT_HPP_
#define NILID_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>  // for shuffle
#include <cstddef>    // for size_t
#include <cstdint>  // for uint64_t
#include <random>   // for mt19937_64, uniform_int_distribution
#include <vector>   // for vector

#include "nilid/gen_word.hpp"
#include "nilid/integer.hpp"
#include "nilid/matrix_ut.hpp"

namespace nilid::test {

  //! e_{ij}(k) in UT(n), 1-based.
  inline MatrixUT e(std::size_t n, std::size_t i, std::size_t j, long k) {
    return elementary(n, i, j, Integer(k));
  }

  inline MatrixUT mat(std::vector<std::vector<long>> const& rows) {
    std::vector<std::vector<Integer>> r;
    for (auto const& row : rows) {
      r.emplace_back(row.begin(), row.end());
    }
    return MatrixUT::from_rows(r);
  }

  inline std::vector<Integer> ints(std::vector<long> const& xs) {
    return {xs.begin(), xs.end()};
  }

  inline std::vector<std::vector<Integer>>
  int_rows(std::vector<std::vector<long>> const& rows) {
    std::vector<std::vector<Integer>> out;
    for (auto const& r : rows) {
      out.push_back(ints(r));
    }
    return out;
  }

  inline GenWord word(std::vector<std::pair<std::size_t, long>> const& ls) {
    GenWord w;
    for (auto const& [g, k] : ls) {
      w.letters.push_back({g, Integer(k)});
    }
    return w;
  }

  class Random {
   public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) {
      return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    std::size_t index(std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_);
    }

    bool coin(double p = 0.5) {
      return std::bernoulli_distribution(p)(gen_);
    }

    MatrixUT matrix(std::size_t n, long bound) {
      std::vector<Integer> upper(malcev_length(n));
      for (auto& x : upper) {
        x = integer(-bound, bound);
      }
      return MatrixUT::from_upper(n, std::move(upper));
    }

    //! Sparse matrix: each upper entry is nonzero with probability p.
    MatrixUT sparse_matrix(std::size_t n, long bound, double p) {
      std::vector<Integer> upper(malcev_length(n));
      for (auto& x : upper) {
        x = coin(p) ? integer(-bound, bound) : 0;
      }
      return MatrixUT::from_upper(n, std::move(upper));
    }

    GenWord word(std::size_t gens, std::size_t length, long max_exp) {
      GenWord w;
      for (std::size_t i = 0; i < length; ++i) {
        long k = 0;
        while (k == 0) {
          k = integer(-max_exp, max_exp);
        }
        w.letters.push_back({index(gens), Integer(k)});
      }
      return w;
    }

    //! A random generating set in UT(n) with entries in [-bound, bound].
    //! Sometimes appends the inverse of a short product of earlier
    //! generators (when its entries stay in range) so that identity
    //! products occur at a useful rate.
    std::vector<MatrixUT> instance(std::size_t n, std::size_t count,
                                   long bound) {
      std::vector<MatrixUT> gens;
      double                density = coin() ? 0.5 : 0.9;
      while (gens.size() < count) {
        if (!gens.empty() && coin(0.35)) {
          std::size_t len = 1 + index(3);
          MatrixUT    p(n);
          for (std::size_t i = 0; i < len; ++i) {
            p = mul(p, gens[index(gens.size())]);
          }
          MatrixUT q   = inverse(p);
          bool     fit = true;
          for (auto const& x : q.upper()) {
            fit = fit && abs(x) <= bound;
          }
          if (fit) {
            gens.push_back(std::move(q));
            continue;
          }
        }
        gens.push_back(sparse_matrix(n, bound, density));
      }
      // Shuffle so the rigged elements are not always last.
      std::shuffle(gens.begin(), gens.end(), gen_);
      return gens;
    }

    std::mt19937_64& engine() noexcept {
      return gen_;
    }

   private:
    std::mt19937_64 gen_;
  };

}  // namespace nilid::test

#endif  // NILID_TESTS_TEST_SUPPORT_HPP_
