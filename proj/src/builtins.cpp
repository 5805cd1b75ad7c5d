#include "gpi/builtins.hpp"

#include <stdexcept>

namespace gpi {

namespace {

// Upper triangular 2x2 matrices over the rationals with the canonical
// Z2-grading: basis e11, e22 (even), e12 (odd).
const char* kCommon = R"({
  "group": {"labels": ["e", "g1"], "table": [[0, 1], [1, 0]], "identity": 0},
  "algebra": {
    "dim": 3,
    "degrees": [0, 0, 1],
    "unit": ["1", "1", "0"],
    "structure": [
      [0, 0, 0, "1"],
      [0, 2, 2, "1"],
      [1, 1, 1, "1"],
      [2, 1, 2, "1"]
    ]
  },
  "wedderburn": {
    "components": [[["1", "0", "0"]], [["0", "1", "0"]]],
    "radical": [["0", "0", "1"]]
  },
  "action": {"kind": "subalgebra", "basis": BASIS}
})";

std::string definition(const std::string& name) {
  std::string basis;
  if (name == "ut2:full")
    basis = R"([["1","1","0"], ["0","1","0"], ["0","0","1"]])";
  else if (name == "ut2:D")
    basis = R"([["1","1","0"], ["0","1","0"]])";
  else if (name == "ut2:C")
    basis = R"([["1","1","0"], ["0","0","1"]])";
  else if (name == "ut2:F")
    basis = R"([["1","1","0"]])";
  else
    throw std::invalid_argument("unknown builtin: " + name);
  std::string text = kCommon;
  text.replace(text.find("BASIS"), 5, basis);
  return text;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"ut2:full", "ut2:D", "ut2:C", "ut2:F"}; }

bool is_builtin(const std::string& name) {
  for (const auto& n : builtin_names())
    if (n == name) return true;
  return false;
}

Builtin builtin(const std::string& name) {
  Builtin b;
  b.name = name;
  b.file = parse_algebra_json(definition(name));
  b.action = make_action(b.file);
  b.canonical_json = algebra_json(b.file);
  return b;
}

}  // namespace gpi
