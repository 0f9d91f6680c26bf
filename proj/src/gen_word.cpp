#include "nilid/gen_word.hpp"

#include <string>  // for to_string

#include "nilid/errors.hpp"

namespace nilid {

  GenWord concat(GenWord const& a, GenWord const& b) {
    GenWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
  }

  GenWord word_inverse(GenWord const& w) {
    GenWord out;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      out.letters.push_back({it->generator, -it->exponent});
    }
    return out;
  }

  GenWord free_reduce(GenWord const& w) {
    GenWord out;
    for (auto const& l : w.letters) {
      if (l.exponent == 0) {
        continue;
      }
      if (!out.letters.empty() && out.letters.back().generator == l.generator) {
        out.letters.back().exponent += l.exponent;
        if (out.letters.back().exponent == 0) {
          out.letters.pop_back();
        }
      } else {
        out.letters.push_back(l);
      }
    }
    return out;
  }

  Integer word_length(GenWord const& w) {
    Integer total = 0;
    for (auto const& l : w.letters) {
      total += abs(l.exponent);
    }
    return total;
  }

  MatrixUT evaluate_word(GenWord const& w, std::span<MatrixUT const> gens,
                         std::size_t n) {
    for (auto const& g : gens) {
      if (g.dim() != n) {
        throw DimensionError("generators do not share dimension "
                             + std::to_string(n));
      }
    }
    MatrixUT result(n);
    for (auto const& l : w.letters) {
      if (l.generator >= gens.size()) {
        throw IndexError("word uses generator " + std::to_string(l.generator)
                         + " but only " + std::to_string(gens.size())
                         + " are given");
      }
      result = mul(result, power(gens[l.generator], l.exponent));
    }
    return result;
  }

  MatrixUT evaluate_word(GenWord const& w, std::span<MatrixUT const> gens) {
    if (gens.empty()) {
      throw DimensionError("cannot infer the dimension from no generators");
    }
    return evaluate_word(w, gens, gens.front().dim());
  }

}  // namespace nilid
