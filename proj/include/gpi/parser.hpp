#ifndef GPI_PARSER_HPP
#define GPI_PARSER_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "gpi/free_algebra.hpp"

namespace gpi {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Default variable prefixes: y -> degree block 0, z -> degree block 1.
std::map<char, int> default_prefixes();

/// Parses the polynomial input language: variables y1, z3, ... (degree by
/// prefix), acting-basis elements w0, w1, ..., operators * + -, rational
/// literals, parentheses. Example: "w1*y1 - y1*w1".
GenPolynomial parse_polynomial(const ActingAlgebra& W, const std::string& text,
                               const std::map<char, int>& prefixes = default_prefixes());

}  // namespace gpi

#endif
