#ifndef NILID_SERIALIZATION_HPP_
#define NILID_SERIALIZATION_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <variant>    // for variant
#include <vector>     // for vector

#include <json.hpp>

#include "nilid/exponent_matrix.hpp"
#include "nilid/identity_solver.hpp"
#include "nilid/integer.hpp"

// JSON documents read and written by the command-line tool. All integers
// except small indices and counts are decimal strings.

namespace nilid::io {

  //! Malformed or invalid input. what() is prefixed with "line L, column C"
  //! for syntax errors and with the JSON pointer of the offending value
  //! otherwise.
  class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! e_ij^k with 1-based i < j.
  struct ElementaryFactor {
    std::size_t i, j;
    Integer     k;

    friend bool operator==(ElementaryFactor const&, ElementaryFactor const&)
        = default;
  };

  struct MatrixSpec {
    std::vector<std::vector<Integer>> rows;

    friend bool operator==(MatrixSpec const&, MatrixSpec const&) = default;
  };

  //! Product of the factors, left to right.
  struct WordSpec {
    std::vector<ElementaryFactor> factors;

    friend bool operator==(WordSpec const&, WordSpec const&) = default;
  };

  using GeneratorSpec = std::variant<MatrixSpec, WordSpec>;

  //! {"n": 3, "generators": [{"matrix": [...]} | {"word": [[i, j, "k"], ...]}]}
  struct InstanceFile {
    std::size_t                n = 0;
    std::vector<GeneratorSpec> generators;

    friend bool operator==(InstanceFile const&, InstanceFile const&) = default;
  };

  InstanceFile parse_instance(std::string const& text);
  std::string  emit_instance(InstanceFile const& inst);

  //! Throws InputError (with the generator's pointer) on a bad generator.
  ProblemInstance to_problem(InstanceFile const& inst);

  //! {"a_inv": [...], "identity_reachable": b, "rounds": k}
  nlohmann::json result_document(SolveOutcome const& out);

  //! a_inv of a result document.
  std::vector<std::size_t> parse_claimed(std::string const& text);

  nlohmann::json    bundle_to_json(CertificateBundle const& bundle);
  CertificateBundle bundle_from_json(nlohmann::json const& doc);

  nlohmann::json matrix_to_json(ExponentMatrix const& m);
  ExponentMatrix matrix_from_json(nlohmann::json const& doc,
                                  std::string const&    where = "");

  //! Parses JSON text; syntax errors become InputError with line:column.
  nlohmann::json parse_json(std::string const& text);

  //! Deterministic rendering shared by every output document.
  std::string dump(nlohmann::json const& doc);

}  // namespace nilid::io

#endif  // NILID_SERIALIZATION_HPP_
