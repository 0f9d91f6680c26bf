#ifndef NILID_ERRORS_HPP_
#define NILID_ERRORS_HPP_

#include <stdexcept>  // for runtime_error, invalid_argument
#include <string>     // for string

namespace nilid {

  //! Raised when two operands live in different UT(n, Z).
  class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! Raised for an out-of-range generator, row, column or coordinate index.
  class IndexError : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
  };

  //! Raised when a matrix handed in is not upper unitriangular.
  class NotUnitriangular : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! Raised by the oracles when an explicit memory or size budget would be
  //! exceeded. Oracles never truncate silently.
  class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace nilid

#endif  // NILID_ERRORS_HPP_
