#include "nilid/oracle.hpp"

#include <algorithm>  // for min_element, reverse
#include <set>        // for set
#include <stdexcept>  // for invalid_argument
#include <string>     // for to_string

#include <omp.h>

#include "nilid/errors.hpp"

namespace nilid::oracle {

  class ReachBuilder {
   public:
    ReachBuilder(std::span<MatrixUT const> gens, std::size_t max_elements)
        : gens_(gens), max_(max_elements) {
      if (gens.empty()) {
        throw std::invalid_argument("bfs_products needs at least one generator");
      }
      for (auto const& g : gens) {
        if (g.dim() != gens.front().dim()) {
          throw DimensionError("bfs_products: generators do not share dimension");
        }
      }
    }

    template <bool Parallel>
    ReachSet run(std::size_t depth) {
      if (depth == 0) {
        throw std::invalid_argument("bfs_products needs depth >= 1");
      }
      std::vector<std::uint32_t> frontier;
      for (std::size_t g = 0; g < gens_.size(); ++g) {
        add(gens_[g], ReachSet::kNone, g, 1, frontier);
      }
      out_.sizes_.push_back(out_.entries_.size());
      std::size_t const k = gens_.size();
      for (std::size_t d = 2; d <= depth; ++d) {
        std::vector<MatrixUT> products(frontier.size() * k, MatrixUT(1));
        auto const&           entries = out_.entries_;
        long const            count   = static_cast<long>(frontier.size());
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
          for (long f = 0; f < count; ++f) {
            for (std::size_t g = 0; g < k; ++g) {
              products[f * k + g] = mul(entries[frontier[f]].elem, gens_[g]);
            }
          }
        } else {
          for (long f = 0; f < count; ++f) {
            for (std::size_t g = 0; g < k; ++g) {
              products[f * k + g] = mul(entries[frontier[f]].elem, gens_[g]);
            }
          }
        }
        std::vector<std::uint32_t> next;
        for (std::size_t f = 0; f < frontier.size(); ++f) {
          for (std::size_t g = 0; g < k; ++g) {
            add(std::move(products[f * k + g]), frontier[f], g, d, next);
          }
        }
        frontier = std::move(next);
        out_.sizes_.push_back(out_.entries_.size());
      }
      out_.depth_ = depth;
      return std::move(out_);
    }

   private:
    void add(MatrixUT m, std::uint32_t parent, std::size_t g, std::size_t d,
             std::vector<std::uint32_t>& frontier) {
      if (out_.index_.count(m) != 0) {
        return;
      }
      if (out_.entries_.size() >= max_) {
        throw ResourceError("breadth-first search exceeded "
                            + std::to_string(max_) + " elements at depth "
                            + std::to_string(d));
      }
      auto id = static_cast<std::uint32_t>(out_.entries_.size());
      out_.index_.emplace(m, id);
      out_.entries_.push_back({std::move(m), parent,
                               static_cast<std::uint32_t>(g),
                               static_cast<std::uint32_t>(d)});
      frontier.push_back(id);
    }

    std::span<MatrixUT const> gens_;
    std::size_t               max_;
    ReachSet                  out_;
  };

  std::vector<std::size_t> ReachSet::letters(std::size_t k) const {
    std::vector<std::size_t> out;
    for (auto id = static_cast<std::uint32_t>(k); id != kNone;
         id      = entries_.at(id).parent) {
      out.push_back(entries_[id].generator);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::optional<GenWord> ReachSet::witness(MatrixUT const& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) {
      return std::nullopt;
    }
    GenWord w;
    for (auto g : letters(it->second)) {
      w.letters.push_back({g, Integer(1)});
    }
    return free_reduce(w);
  }

  ReachSet bfs_products(std::span<MatrixUT const> gens, std::size_t depth,
                        std::size_t max_elements) {
    return ReachBuilder(gens, max_elements).run<true>(depth);
  }

  ReachSet bfs_products_serial(std::span<MatrixUT const> gens,
                               std::size_t depth, std::size_t max_elements) {
    return ReachBuilder(gens, max_elements).run<false>(depth);
  }

  std::optional<GenWord> witness_inverse(std::span<MatrixUT const> gens,
                                         std::size_t i, std::size_t depth,
                                         std::size_t max_elements) {
    if (i >= gens.size()) {
      throw IndexError("witness_inverse: generator " + std::to_string(i)
                       + " out of range");
    }
    return bfs_products(gens, depth, max_elements).witness(inverse(gens[i]));
  }

  // Fourier-Motzkin ------------------------------------------------------------

  namespace {

    struct Inequality {
      std::vector<Integer> a;  // a . x <= b
      Integer              b;

      friend bool operator<(Inequality const& x, Inequality const& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
      }
    };

    // Divide by the content so duplicates compare equal.
    void normalize(Inequality& q) {
      Integer g = abs(q.b);
      for (auto const& x : q.a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      }
      if (g > 1) {
        for (auto& x : q.a) {
          mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
        mpz_divexact(q.b.get_mpz_t(), q.b.get_mpz_t(), g.get_mpz_t());
      }
    }

    bool is_constant(Inequality const& q) {
      for (auto const& x : q.a) {
        if (x != 0) {
          return false;
        }
      }
      return true;
    }

    Inequality from_rational(std::vector<Rational> const& a, Rational const& b) {
      Integer scale = b.get_den();
      for (auto const& x : a) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
      }
      Inequality q{std::vector<Integer>(a.size()), Integer()};
      for (std::size_t i = 0; i < a.size(); ++i) {
        q.a[i] = Rational(a[i] * scale).get_num();
      }
      q.b = Rational(b * scale).get_num();
      return q;
    }

    // Eliminates every variable; true iff the system has a real solution.
    bool eliminate(std::vector<Inequality> system, std::size_t vars,
                   FourierMotzkinOptions const& opts) {
      std::set<Inequality> current;
      for (auto& q : system) {
        normalize(q);
        if (is_constant(q)) {
          if (q.b < 0) {
            return false;
          }
          continue;
        }
        current.insert(std::move(q));
      }
      for (std::size_t k = 0; k < vars; ++k) {
        std::vector<Inequality const*> pos, neg;
        std::set<Inequality>           next;
        for (auto const& q : current) {
          if (q.a[k] > 0) {
            pos.push_back(&q);
          } else if (q.a[k] < 0) {
            neg.push_back(&q);
          } else {
            next.insert(q);
          }
        }
        if (next.size() + pos.size() * neg.size() > opts.max_inequalities) {
          throw ResourceError("Fourier-Motzkin: "
                              + std::to_string(pos.size() * neg.size())
                              + " combinations exceed the budget");
        }
        for (auto const* p : pos) {
          for (auto const* q : neg) {
            Integer    fp = -q->a[k];
            Integer    fq = p->a[k];
            Inequality r{std::vector<Integer>(vars), fp * p->b + fq * q->b};
            for (std::size_t i = 0; i < vars; ++i) {
              r.a[i] = fp * p->a[i] + fq * q->a[i];
            }
            normalize(r);
            if (is_constant(r)) {
              if (r.b < 0) {
                return false;
              }
              continue;
            }
            next.insert(std::move(r));
          }
        }
        current = std::move(next);
      }
      return true;
    }

    bool feasible_by_substitution(ExponentMatrix const&        m,
                                  FourierMotzkinOptions const& opts) {
      std::size_t n = m.cols();
      // Equalities [M; 1^t] v = [0; 1] to reduced row echelon form.
      std::vector<std::vector<Rational>> e;
      std::vector<Rational>              rhs;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        e.emplace_back(m.row(r).begin(), m.row(r).end());
        rhs.emplace_back(0);
      }
      e.emplace_back(n, Rational(1));
      rhs.emplace_back(1);
      std::vector<std::size_t> pivot_of_row;
      std::vector<bool>        is_pivot(n, false);
      std::size_t              lead = 0;
      for (std::size_t c = 0; c < n && lead < e.size(); ++c) {
        std::size_t r = lead;
        while (r < e.size() && e[r][c] == 0) {
          ++r;
        }
        if (r == e.size()) {
          continue;
        }
        std::swap(e[r], e[lead]);
        std::swap(rhs[r], rhs[lead]);
        Rational p = e[lead][c];
        for (auto& x : e[lead]) {
          x /= p;
        }
        rhs[lead] /= p;
        for (std::size_t s = 0; s < e.size(); ++s) {
          if (s == lead || e[s][c] == 0) {
            continue;
          }
          Rational f = e[s][c];
          for (std::size_t j = 0; j < n; ++j) {
            e[s][j] -= f * e[lead][j];
          }
          rhs[s] -= f * rhs[lead];
        }
        pivot_of_row.push_back(c);
        is_pivot[c] = true;
        ++lead;
      }
      for (std::size_t r = lead; r < e.size(); ++r) {
        if (rhs[r] != 0) {
          return false;
        }
      }
      std::vector<std::size_t> free_vars;
      for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) {
          free_vars.push_back(c);
        }
      }
      std::size_t             f = free_vars.size();
      std::vector<Inequality> system;
      // v_pivot = rhs - sum e[r][free] v_free >= 0
      for (std::size_t r = 0; r < lead; ++r) {
        std::vector<Rational> a(f);
        for (std::size_t i = 0; i < f; ++i) {
          a[i] = e[r][free_vars[i]];
        }
        system.push_back(from_rational(a, rhs[r]));
      }
      for (std::size_t i = 0; i < f; ++i) {
        Inequality q{std::vector<Integer>(f), Integer(0)};
        q.a[i] = -1;
        system.push_back(std::move(q));
      }
      return eliminate(std::move(system), f, opts);
    }

    bool feasible_by_doubling(ExponentMatrix const&        m,
                              FourierMotzkinOptions const& opts) {
      std::size_t             n = m.cols();
      std::vector<Inequality> system;
      auto add_equality = [&](std::vector<Integer> a, Integer b) {
        Inequality neg{a, -b};
        for (auto& x : neg.a) {
          x = -x;
        }
        system.push_back({std::move(a), std::move(b)});
        system.push_back(std::move(neg));
      };
      for (std::size_t r = 0; r < m.rows(); ++r) {
        add_equality({m.row(r).begin(), m.row(r).end()}, Integer(0));
      }
      add_equality(std::vector<Integer>(n, Integer(1)), Integer(1));
      for (std::size_t i = 0; i < n; ++i) {
        Inequality q{std::vector<Integer>(n), Integer(0)};
        q.a[i] = -1;
        system.push_back(std::move(q));
      }
      return eliminate(std::move(system), n, opts);
    }

  }  // namespace

  bool fourier_motzkin_feasible(ExponentMatrix const&        m,
                                FourierMotzkinOptions const& opts) {
    if (m.cols() > opts.max_variables) {
      throw ResourceError("Fourier-Motzkin oracle limited to "
                          + std::to_string(opts.max_variables)
                          + " variables, got " + std::to_string(m.cols()));
    }
    return opts.substitute_equalities ? feasible_by_substitution(m, opts)
                                      : feasible_by_doubling(m, opts);
  }

  // Row lattice ----------------------------------------------------------------

  RowLattice::RowLattice(ExponentMatrix const& m) : cols_(m.cols()) {
    std::vector<std::vector<Integer>> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      rows.emplace_back(m.row(r).begin(), m.row(r).end());
    }
    reduce(std::move(rows));
  }

  RowLattice::RowLattice(std::vector<std::vector<Integer>> rows, std::size_t cols)
      : cols_(cols) {
    for (auto const& r : rows) {
      if (r.size() != cols) {
        throw DimensionError("RowLattice: ragged rows");
      }
    }
    reduce(std::move(rows));
  }

  void RowLattice::reduce(std::vector<std::vector<Integer>> rows) {
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols_ && top < rows.size(); ++c) {
      while (true) {
        // Smallest nonzero |entry| in column c among rows top.. becomes the
        // pivot; division by it shrinks every other entry.
        std::size_t best = rows.size();
        for (std::size_t r = top; r < rows.size(); ++r) {
          if (rows[r][c] != 0
              && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) {
            best = r;
          }
        }
        if (best == rows.size()) {
          break;
        }
        std::swap(rows[top], rows[best]);
        bool done = true;
        for (std::size_t r = top + 1; r < rows.size(); ++r) {
          if (rows[r][c] == 0) {
            continue;
          }
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(),
                     rows[top][c].get_mpz_t());
          for (std::size_t j = c; j < cols_; ++j) {
            mpz_submul(rows[r][j].get_mpz_t(), q.get_mpz_t(),
                       rows[top][j].get_mpz_t());
          }
          done = done && rows[r][c] == 0;
        }
        if (done) {
          if (rows[top][c] < 0) {
            for (auto& x : rows[top]) {
              x = -x;
            }
          }
          pivots_.push_back(c);
          ++top;
          break;
        }
      }
    }
    rows.resize(top);
    basis_ = std::move(rows);
  }

  bool RowLattice::contains(std::span<Integer const> x) const {
    if (x.size() != cols_) {
      throw DimensionError("RowLattice::contains: wrong length");
    }
    std::vector<Integer> y(x.begin(), x.end());
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      std::size_t c = pivots_[k];
      if (y[c] == 0) {
        continue;
      }
      if (!mpz_divisible_p(y[c].get_mpz_t(), basis_[k][c].get_mpz_t())) {
        return false;
      }
      Integer q;
      mpz_divexact(q.get_mpz_t(), y[c].get_mpz_t(), basis_[k][c].get_mpz_t());
      for (std::size_t j = c; j < cols_; ++j) {
        mpz_submul(y[j].get_mpz_t(), q.get_mpz_t(), basis_[k][j].get_mpz_t());
      }
    }
    for (auto const& v : y) {
      if (v != 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::vector<Integer>>
  identity_word_exponents(std::span<MatrixUT const> gens, std::size_t depth,
                          std::size_t max_words) {
    if (gens.empty()) {
      return {};
    }
    std::size_t n = gens.front().dim();
    std::size_t k = gens.size();
    struct Word {
      MatrixUT             value;
      std::vector<Integer> exps;
    };
    std::unordered_map<MatrixUT, std::vector<Integer>, MatrixUTHash> first;
    first.emplace(MatrixUT(n), std::vector<Integer>(k));
    std::set<std::vector<Integer>> found;
    std::vector<Word>              level{{MatrixUT(n), std::vector<Integer>(k)}};
    std::size_t                    total = 0;
    for (std::size_t d = 1; d <= depth; ++d) {
      std::vector<Word> next;
      for (auto const& w : level) {
        for (std::size_t g = 0; g < k; ++g) {
          if (++total > max_words) {
            throw ResourceError("identity_word_exponents exceeded "
                                + std::to_string(max_words) + " words");
          }
          Word x{mul(w.value, gens[g]), w.exps};
          x.exps[g] += 1;
          auto it = first.find(x.value);
          if (it == first.end()) {
            first.emplace(x.value, x.exps);
          } else {
            std::vector<Integer> diff(k);
            for (std::size_t i = 0; i < k; ++i) {
              diff[i] = x.exps[i] - it->second[i];
            }
            found.insert(std::move(diff));
          }
          next.push_back(std::move(x));
        }
      }
      level = std::move(next);
    }
    return {found.begin(), found.end()};
  }

}  // namespace nilid::oracle
