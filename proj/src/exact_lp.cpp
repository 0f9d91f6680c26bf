#include "nilid/exact_lp.hpp"

#include <cstddef>    // for size_t
#include <stdexcept>  // for logic_error
#include <string>     // for to_string
#include <utility>    // for swap

#include "nilid/errors.hpp"

namespace nilid {

  namespace {

    using RationalRow = std::vector<Rational>;

    using IntegerRow = std::vector<Integer>;

    void make_primitive(IntegerRow& v) {
      Integer g = 0;
      for (auto const& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      }
      if (g > 1) {
        for (auto& x : v) {
          mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
      }
    }

    // Greedy maximal set of linearly independent rows, in row order. The
    // kept rows span the row space, so {M v = 0} is unchanged. Elimination
    // is fraction free, with contents divided out as it goes.
    std::vector<std::size_t> independent_rows(ExponentMatrix const& m) {
      std::vector<std::size_t> kept;
      std::vector<IntegerRow>  basis;
      std::vector<std::size_t> pivot_col;
      for (std::size_t r = 0; r < m.rows() && basis.size() < m.cols(); ++r) {
        IntegerRow vec(m.row(r).begin(), m.row(r).end());
        make_primitive(vec);
        for (std::size_t b = 0; b < basis.size(); ++b) {
          std::size_t p = pivot_col[b];
          if (vec[p] == 0) {
            continue;
          }
          Integer f = vec[p], g = basis[b][p];
          for (std::size_t c = 0; c < m.cols(); ++c) {
            vec[c] = g * vec[c] - f * basis[b][c];
          }
          make_primitive(vec);
        }
        std::size_t p = 0;
        while (p < vec.size() && vec[p] == 0) {
          ++p;
        }
        if (p == vec.size()) {
          continue;
        }
        kept.push_back(r);
        basis.push_back(std::move(vec));
        pivot_col.push_back(p);
      }
      return kept;
    }

    // Dense simplex tableau for  A x = b, x >= 0  with b >= 0, started from
    // the all-artificial basis. Columns [0, n) are structural, [n, n + m)
    // artificial. Entering and leaving choices follow Bland's rule.
    class Tableau {
     public:
      Tableau(std::vector<RationalRow> a, RationalRow b)
          : m_(a.size()),
            n_(a.empty() ? 0 : a.front().size()),
            t_(std::move(a)),
            rhs_(std::move(b)),
            d_(n_ + m_),
            basis_(m_),
            allowed_(n_ + m_, true),
            active_(m_, true) {
        for (std::size_t r = 0; r < m_; ++r) {
          t_[r].resize(n_ + m_);
          t_[r][n_ + r] = 1;
          basis_[r]     = n_ + r;
        }
      }

      // Minimizes the sum of artificials; true iff the optimum is 0.
      bool phase_one() {
        for (std::size_t j = 0; j < n_ + m_; ++j) {
          d_[j] = j < n_ ? Rational(0) : Rational(1);
        }
        price();
        run();
        return neg_obj_ == 0;
      }

      // Phase-I dual y = c_B B^-1, read off the artificial reduced costs
      // (d_{n+k} = 1 - y_k).
      RationalRow dual() const {
        RationalRow y(m_);
        for (std::size_t k = 0; k < m_; ++k) {
          y[k] = 1 - d_[n_ + k];
        }
        return y;
      }

      // After a successful phase I: pivot basic artificials (all at level
      // 0) out where possible, retire redundant rows, and forbid
      // artificials from re-entering.
      void drop_artificials() {
        for (std::size_t r = 0; r < m_; ++r) {
          if (basis_[r] < n_) {
            continue;
          }
          std::size_t j = 0;
          while (j < n_ && t_[r][j] == 0) {
            ++j;
          }
          if (j < n_) {
            pivot(r, j);
          } else {
            active_[r] = false;
          }
        }
        for (std::size_t j = n_; j < n_ + m_; ++j) {
          allowed_[j] = false;
        }
      }

      // Maximizes x_i (minimizes -x_i) from the current feasible basis.
      void maximize(std::size_t i) {
        for (std::size_t j = 0; j < n_ + m_; ++j) {
          d_[j] = (j == i) ? Rational(-1) : Rational(0);
        }
        price();
        run();
      }

      RationalRow solution() const {
        RationalRow x(n_);
        for (std::size_t r = 0; r < m_; ++r) {
          if (active_[r] && basis_[r] < n_) {
            x[basis_[r]] = rhs_[r];
          }
        }
        return x;
      }

     private:
      // d_ holds the costs c on entry; turn them into reduced costs for the
      // current basis and set the objective value.
      void price() {
        RationalRow c = d_;
        neg_obj_      = 0;
        for (std::size_t r = 0; r < m_; ++r) {
          if (!active_[r]) {
            continue;
          }
          Rational const& cb = c[basis_[r]];
          if (cb == 0) {
            continue;
          }
          for (std::size_t j = 0; j < n_ + m_; ++j) {
            if (t_[r][j] != 0) {
              d_[j] -= cb * t_[r][j];
            }
          }
          neg_obj_ -= cb * rhs_[r];
        }
      }

      void pivot(std::size_t r, std::size_t j) {
        Rational p = t_[r][j];
        for (auto& x : t_[r]) {
          if (x != 0) {
            x /= p;
          }
        }
        rhs_[r] /= p;
        for (std::size_t s = 0; s < m_; ++s) {
          if (s == r || !active_[s] || t_[s][j] == 0) {
            continue;
          }
          Rational f = t_[s][j];
          for (std::size_t k = 0; k < n_ + m_; ++k) {
            if (t_[r][k] != 0) {
              t_[s][k] -= f * t_[r][k];
            }
          }
          rhs_[s] -= f * rhs_[r];
        }
        if (d_[j] != 0) {
          Rational f = d_[j];
          for (std::size_t k = 0; k < n_ + m_; ++k) {
            if (t_[r][k] != 0) {
              d_[k] -= f * t_[r][k];
            }
          }
          neg_obj_ -= f * rhs_[r];
        }
        basis_[r] = j;
      }

      void run() {
        while (true) {
          std::size_t j = 0;
          while (j < n_ + m_ && (!allowed_[j] || d_[j] >= 0)) {
            ++j;
          }
          if (j == n_ + m_) {
            return;
          }
          std::size_t best = m_;
          Rational    best_ratio;
          for (std::size_t r = 0; r < m_; ++r) {
            if (!active_[r] || t_[r][j] <= 0) {
              continue;
            }
            Rational ratio = rhs_[r] / t_[r][j];
            if (best == m_ || ratio < best_ratio
                || (ratio == best_ratio && basis_[r] < basis_[best])) {
              best       = r;
              best_ratio = ratio;
            }
          }
          if (best == m_) {
            throw std::logic_error("simplex: unbounded direction in a "
                                   "bounded problem");
          }
          pivot(best, j);
        }
      }

      std::size_t              m_, n_;
      std::vector<RationalRow> t_;
      RationalRow              rhs_;
      RationalRow              d_;
      Rational                 neg_obj_;
      std::vector<std::size_t> basis_;
      std::vector<bool>        allowed_;
      std::vector<bool>        active_;
    };

    // A basis of the row space of M in reduced echelon form, each row scaled
    // to a primitive integer vector, with the transform back to M:
    //   basis[i] = sum_j transform[i][j] * M[rows[j]].
    // The echelon form depends only on the row space, so it stays small even
    // when the rows of M carry very large entries.
    struct RowBasis {
      std::vector<std::size_t> rows;
      std::vector<RationalRow> basis;
      std::vector<RationalRow> transform;
    };

    RowBasis row_basis(ExponentMatrix const& m) {
      RowBasis    out{independent_rows(m), {}, {}};
      std::size_t k = out.rows.size(), n = m.cols();
      std::vector<RationalRow> aug(k, RationalRow(n + k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < n; ++c) {
          aug[i][c] = m.at(out.rows[i], c);
        }
        aug[i][n + i] = 1;
      }
      // Gauss-Jordan on [M_rows | I]; the rows are independent, so every
      // row receives a pivot among the first n columns.
      std::size_t r = 0;
      for (std::size_t c = 0; c < n && r < k; ++c) {
        std::size_t p = r;
        while (p < k && aug[p][c] == 0) {
          ++p;
        }
        if (p == k) {
          continue;
        }
        std::swap(aug[p], aug[r]);
        Rational inv = 1 / aug[r][c];
        for (auto& x : aug[r]) {
          x *= inv;
        }
        for (std::size_t i = 0; i < k; ++i) {
          if (i == r || aug[i][c] == 0) {
            continue;
          }
          Rational f = aug[i][c];
          for (std::size_t j = 0; j < n + k; ++j) {
            if (aug[r][j] != 0) {
              aug[i][j] -= f * aug[r][j];
            }
          }
        }
        ++r;
      }
      for (auto& row : aug) {
        Integer den = 1, num = 0;
        for (std::size_t c = 0; c < n; ++c) {
          mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), row[c].get_den_mpz_t());
          mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), row[c].get_num_mpz_t());
        }
        Rational lambda(den, num);
        lambda.canonicalize();
        for (auto& x : row) {
          x *= lambda;
        }
        out.basis.emplace_back(row.begin(), row.begin() + n);
        out.transform.emplace_back(row.begin() + n, row.end());
      }
      return out;
    }

    struct Setup {
      RowBasis basis;  // sum row implicit last
      Tableau  tableau;
    };

    Setup make_tableau(ExponentMatrix const& m) {
      auto                     rb = row_basis(m);
      std::vector<RationalRow> a  = rb.basis;
      RationalRow              b(a.size());
      a.emplace_back(m.cols(), Rational(1));
      b.emplace_back(1);
      return {std::move(rb), Tableau(std::move(a), std::move(b))};
    }

    Infeasible farkas_from_dual(ExponentMatrix const& m, RowBasis const& rb,
                                RationalRow const& y) {
      // A^t y <= 0 with A = [B; 1^t] and b^t y = y_sum > 0, so
      // w = -y_B / y_sum has B^t w >= 1, and u = T^t w does the same for M.
      Rational const& y_sum = y.back();
      if (y_sum <= 0) {
        throw std::logic_error("simplex: phase-I dual has nonpositive "
                               "weight on the normalization row");
      }
      RationalRow u_rat(m.rows());
      for (std::size_t i = 0; i < rb.basis.size(); ++i) {
        Rational w = -y[i] / y_sum;
        if (w == 0) {
          continue;
        }
        for (std::size_t j = 0; j < rb.rows.size(); ++j) {
          u_rat[rb.rows[j]] += w * rb.transform[i][j];
        }
      }
      Integer scale = 1;
      for (auto const& q : u_rat) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
      }
      Infeasible out{std::vector<Integer>(m.rows())};
      Integer    content = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational scaled = u_rat[r] * scale;
        out.u[r]        = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.u[r].get_mpz_t());
      }
      if (content > 1) {
        for (auto& x : out.u) {
          mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
        }
      }
      if (!verify_farkas(m, out.u)) {
        throw std::logic_error("simplex: extracted Farkas vector fails "
                               "verification");
      }
      return out;
    }

  }  // namespace

  FeasibilityResult solve_feasibility(ExponentMatrix const& m) {
    auto [basis, tableau] = make_tableau(m);
    if (!tableau.phase_one()) {
      return farkas_from_dual(m, basis, tableau.dual());
    }
    return Feasible{tableau.solution()};
  }

  FeasibilityResult solve_maximal_support(ExponentMatrix const& m) {
    auto [basis, tableau] = make_tableau(m);
    if (!tableau.phase_one()) {
      return farkas_from_dual(m, basis, tableau.dual());
    }
    tableau.drop_artificials();
    std::size_t n = m.cols();
    RationalRow v(n);
    for (std::size_t i = 0; i < n; ++i) {
      Tableau t = tableau;
      t.maximize(i);
      auto x = t.solution();
      for (std::size_t c = 0; c < n; ++c) {
        v[c] += x[c];
      }
    }
    for (auto& x : v) {
      x /= static_cast<unsigned long>(n);
    }
    return Feasible{std::move(v)};
  }

  std::optional<std::vector<Rational>>
  relative_interior_solution(ExponentMatrix const& m) {
    auto r = solve_maximal_support(m);
    if (auto* f = std::get_if<Feasible>(&r)) {
      return std::move(f->v);
    }
    return std::nullopt;
  }

  bool verify_feasible(ExponentMatrix const& m, std::vector<Rational> const& v) {
    if (v.size() != m.cols()) {
      throw DimensionError("verify_feasible: v has " + std::to_string(v.size())
                           + " entries, M has " + std::to_string(m.cols())
                           + " columns");
    }
    Rational total = 0;
    for (auto const& x : v) {
      if (x < 0) {
        return false;
      }
      total += x;
    }
    if (total != 1) {
      return false;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Rational s = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m.at(r, c) != 0) {
          s += m.at(r, c) * v[c];
        }
      }
      if (s != 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<Integer> transpose_times(ExponentMatrix const&       m,
                                       std::vector<Integer> const& u) {
    if (u.size() != m.rows()) {
      throw DimensionError("M^t u: u has " + std::to_string(u.size())
                           + " entries, M has " + std::to_string(m.rows())
                           + " rows");
    }
    std::vector<Integer> w(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (u[r] == 0) {
        continue;
      }
      for (std::size_t c = 0; c < m.cols(); ++c) {
        mpz_addmul(w[c].get_mpz_t(), m.at(r, c).get_mpz_t(), u[r].get_mpz_t());
      }
    }
    return w;
  }

  bool verify_farkas(ExponentMatrix const& m, std::vector<Integer> const& u) {
    for (auto const& x : transpose_times(m, u)) {
      if (x < 1) {
        return false;
      }
    }
    return true;
  }

}  // namespace nilid
