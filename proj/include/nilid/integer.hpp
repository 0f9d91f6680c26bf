#ifndef NILID_INTEGER_HPP_
#define NILID_INTEGER_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view

#include <gmpxx.h>

namespace nilid {

  //! Arbitrary-precision integer used for every matrix entry and exponent.
  using Integer = mpz_class;

  //! Exact rational, always kept in canonical (reduced, positive
  //! denominator) form.
  using Rational = mpq_class;

  //! Parses an optionally signed decimal integer. Throws
  //! std::invalid_argument on anything else (including empty input,
  //! whitespace and a leading '+').
  Integer parse_integer(std::string_view text);

  //! Parses "p" or "p/q" with q > 0; the result is canonicalized.
  Rational parse_rational(std::string_view text);

  std::string to_string(Integer const& x);
  std::string to_string(Rational const& x);

  std::size_t hash_value(Integer const& x) noexcept;

}  // namespace nilid

#endif  // NILID_INTEGER_HPP_
