#include "nilid/integer.hpp"

#include <functional>  // for hash
#include <stdexcept>   // for invalid_argument
#include <string>      // for string

namespace nilid {

  Integer parse_integer(std::string_view text) {
    std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
    if (start == text.size()) {
      throw std::invalid_argument("expected a decimal integer, got \""
                                  + std::string(text) + "\"");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') {
        throw std::invalid_argument("expected a decimal integer, got \""
                                    + std::string(text) + "\"");
      }
    }
    return Integer(std::string(text), 10);
  }

  Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den <= 0) {
      throw std::invalid_argument("rational needs a positive denominator: \""
                                  + std::string(text) + "\"");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string to_string(Integer const& x) {
    return x.get_str(10);
  }

  std::string to_string(Rational const& x) {
    return x.get_str(10);
  }

  std::size_t hash_value(Integer const& x) noexcept {
    mpz_srcptr  z     = x.get_mpz_t();
    std::size_t h     = static_cast<std::size_t>(z->_mp_size) * 0x9e3779b97f4a7c15ULL;
    int         limbs = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
    for (int i = 0; i < limbs; ++i) {
      h ^= std::hash<mp_limb_t>{}(z->_mp_d[i]) + 0x9e3779b97f4a7c15ULL
           + (h << 6) + (h >> 2);
    }
    return h;
  }

}  // namespace nilid
