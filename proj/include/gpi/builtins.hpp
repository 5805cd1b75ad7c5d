#ifndef GPI_BUILTINS_HPP
#define GPI_BUILTINS_HPP

#include <string>
#include <vector>

#include "gpi/io.hpp"

namespace gpi {

/// A ready-to-use embedded algebra definition with its materialized action.
struct Builtin {
  std::string name;
  AlgebraFile file;
  ActingAlgebra action;
  std::string canonical_json;
};

std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);
Builtin builtin(const std::string& name);

}  // namespace gpi

#endif
