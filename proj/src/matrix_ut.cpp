#include "nilid/matrix_ut.hpp"

#include <ostream>  // for ostream
#include <string>   // for to_string

#include "nilid/errors.hpp"

namespace nilid {

  namespace {
    Integer const kZero(0);
    Integer const kOne(1);

    void check_same_dim(MatrixUT const& a, MatrixUT const& b, char const* op) {
      if (a.dim() != b.dim()) {
        throw DimensionError(std::string(op) + ": dimension mismatch ("
                             + std::to_string(a.dim()) + " vs "
                             + std::to_string(b.dim()) + ")");
      }
    }
  }  // namespace

  MatrixUT::MatrixUT(std::size_t n) : n_(n), upper_(malcev_length(n)) {
    if (n == 0) {
      throw DimensionError("UT(n, Z) needs n >= 1");
    }
  }

  MatrixUT MatrixUT::from_rows(std::vector<std::vector<Integer>> const& rows) {
    std::size_t n = rows.size();
    MatrixUT    m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw DimensionError("row " + std::to_string(i) + " has "
                             + std::to_string(rows[i].size())
                             + " entries, expected " + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (j < i && rows[i][j] != 0) {
          throw NotUnitriangular("nonzero entry below the diagonal at ("
                                 + std::to_string(i) + ", "
                                 + std::to_string(j) + ")");
        }
        if (j == i && rows[i][j] != 1) {
          throw NotUnitriangular("diagonal entry (" + std::to_string(i)
                                 + ", " + std::to_string(i) + ") is not 1");
        }
        if (j > i) {
          m.at(i, j) = rows[i][j];
        }
      }
    }
    return m;
  }

  MatrixUT MatrixUT::from_upper(std::size_t n, std::vector<Integer> upper) {
    MatrixUT m(n);
    if (upper.size() != m.upper_.size()) {
      throw DimensionError("expected " + std::to_string(m.upper_.size())
                           + " strictly upper entries, got "
                           + std::to_string(upper.size()));
    }
    m.upper_ = std::move(upper);
    return m;
  }

  Integer const& MatrixUT::entry(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) {
      throw IndexError("entry (" + std::to_string(i) + ", " + std::to_string(j)
                       + ") outside a " + std::to_string(n_) + "x"
                       + std::to_string(n_) + " matrix");
    }
    if (i == j) {
      return kOne;
    }
    if (i > j) {
      return kZero;
    }
    return at(i, j);
  }

  bool MatrixUT::is_identity() const noexcept {
    for (auto const& x : upper_) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::vector<Integer>> MatrixUT::rows() const {
    std::vector<std::vector<Integer>> out(n_, std::vector<Integer>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        out[i][j] = entry(i, j);
      }
    }
    return out;
  }

  std::size_t MatrixUT::hash() const noexcept {
    std::size_t h = n_;
    for (auto const& x : upper_) {
      h ^= hash_value(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::ostream& operator<<(std::ostream& os, MatrixUT const& m) {
    os << '[';
    for (std::size_t i = 0; i < m.dim(); ++i) {
      os << (i == 0 ? "[" : ", [");
      for (std::size_t j = 0; j < m.dim(); ++j) {
        os << (j == 0 ? "" : ", ") << m.entry(i, j);
      }
      os << ']';
    }
    return os << ']';
  }

  MatrixUT mul(MatrixUT const& a, MatrixUT const& b) {
    check_same_dim(a, b, "mul");
    std::size_t n = a.dim();
    MatrixUT    c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Integer& x = c.at(i, j);
        x          = a.at(i, j) + b.at(i, j);
        for (std::size_t k = i + 1; k < j; ++k) {
          mpz_addmul(x.get_mpz_t(), a.at(i, k).get_mpz_t(),
                     b.at(k, j).get_mpz_t());
        }
      }
    }
    return c;
  }

  MatrixUT inverse(MatrixUT const& a) {
    // Back substitution: (A X)_ij = X_ij + A_ij + sum_{i<k<j} A_ik X_kj = 0,
    // with rows below i already known.
    std::size_t n = a.dim();
    MatrixUT    x(n);
    for (std::size_t ii = n; ii-- > 0;) {
      for (std::size_t j = ii + 1; j < n; ++j) {
        Integer s = a.at(ii, j);
        for (std::size_t k = ii + 1; k < j; ++k) {
          mpz_addmul(s.get_mpz_t(), a.at(ii, k).get_mpz_t(),
                     x.at(k, j).get_mpz_t());
        }
        x.at(ii, j) = -s;
      }
    }
    return x;
  }

  MatrixUT power(MatrixUT const& a, Integer const& k) {
    if (k == 0 || a.is_identity()) {
      return MatrixUT(a.dim());
    }
    MatrixUT base = k < 0 ? inverse(a) : a;
    Integer  e    = abs(k);
    if (e == 1) {
      return base;
    }
    MatrixUT    result(a.dim());
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t b = bits; b-- > 0;) {
      result = mul(result, result);
      if (mpz_tstbit(e.get_mpz_t(), b)) {
        result = mul(result, base);
      }
    }
    return result;
  }

  MatrixUT commutator(MatrixUT const& a, MatrixUT const& b) {
    check_same_dim(a, b, "commutator");
    return mul(mul(inverse(a), inverse(b)), mul(a, b));
  }

  MatrixUT elementary(std::size_t n, std::size_t i, std::size_t j,
                      Integer const& k) {
    if (i < 1 || j > n || i >= j) {
      throw IndexError("elementary matrix e_" + std::to_string(i) + ","
                       + std::to_string(j) + " needs 1 <= i < j <= "
                       + std::to_string(n));
    }
    MatrixUT m(n);
    m.at(i - 1, j - 1) = k;
    return m;
  }

  std::pair<std::size_t, std::size_t> malcev_position(std::size_t n,
                                                      std::size_t k) {
    std::size_t remaining = k;
    for (std::size_t d = 1; d < n; ++d) {
      if (remaining < n - d) {
        return {remaining, remaining + d};
      }
      remaining -= n - d;
    }
    throw IndexError("Mal'cev coordinate " + std::to_string(k)
                     + " out of range for n = " + std::to_string(n));
  }

  std::size_t malcev_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= j || j >= n) {
      throw IndexError("no Mal'cev coordinate at (" + std::to_string(i) + ", "
                       + std::to_string(j) + ")");
    }
    std::size_t d      = j - i;
    std::size_t offset = 0;
    for (std::size_t e = 1; e < d; ++e) {
      offset += n - e;
    }
    return offset + i;
  }

  MalcevVector malcev_coordinates(MatrixUT const& a) {
    std::size_t  n = a.dim();
    MalcevVector x{n, std::vector<Integer>(malcev_length(n))};
    MatrixUT     cur = a;
    std::size_t  k   = 0;
    for (std::size_t d = 1; d < n; ++d) {
      // cur is zero on bands < d, so its band-d entries are the band-d
      // coordinates. Strip them with left multiplication by
      // e_{n-d-1}^{-x} ... e_0^{-x}, i.e. rows in ascending order.
      std::size_t band = k;
      for (std::size_t i = 0; i + d < n; ++i, ++k) {
        x.coords[k] = cur.at(i, i + d);
      }
      for (std::size_t i = 0; i + d < n; ++i) {
        Integer const& c = x.coords[band + i];
        if (c == 0) {
          continue;
        }
        // row_i -= c * row_{i+d}
        cur.at(i, i + d) -= c;
        for (std::size_t j = i + d + 1; j < n; ++j) {
          mpz_submul(cur.at(i, j).get_mpz_t(), c.get_mpz_t(),
                     cur.at(i + d, j).get_mpz_t());
        }
      }
    }
    return x;
  }

  MatrixUT from_malcev(MalcevVector const& x) {
    std::size_t n = x.n;
    if (x.coords.size() != malcev_length(n)) {
      throw DimensionError("Mal'cev vector of length "
                           + std::to_string(x.coords.size())
                           + " does not match n = " + std::to_string(n));
    }
    MatrixUT    m(n);
    std::size_t k = 0;
    for (std::size_t d = 1; d < n; ++d) {
      for (std::size_t i = 0; i + d < n; ++i, ++k) {
        Integer const& c = x.coords[k];
        if (c == 0) {
          continue;
        }
        // right multiplication by e_{i,i+d}(c): col_{i+d} += c * col_i
        std::size_t j = i + d;
        m.at(i, j) += c;
        for (std::size_t r = 0; r < i; ++r) {
          mpz_addmul(m.at(r, j).get_mpz_t(), c.get_mpz_t(),
                     m.at(r, i).get_mpz_t());
        }
      }
    }
    return m;
  }

  std::optional<std::pair<std::size_t, Integer>>
  leading_coordinate(MatrixUT const& a) {
    std::size_t n = a.dim();
    std::size_t k = 0;
    for (std::size_t d = 1; d < n; ++d) {
      for (std::size_t i = 0; i + d < n; ++i, ++k) {
        Integer const& v = a.entry(i, i + d);
        if (v != 0) {
          return std::pair<std::size_t, Integer>{k, v};
        }
      }
    }
    return std::nullopt;
  }

}  // namespace nilid
