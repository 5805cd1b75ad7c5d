#ifndef GPI_GROUP_HPP
#define GPI_GROUP_HPP

#include <string>
#include <vector>

namespace gpi {

/// Finite group given by a Cayley table over element indices.
struct FiniteGroup {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;  // table[i][j] = index of g_i * g_j
  int identity = 0;

  int order() const { return static_cast<int>(labels.size()); }
  int mul(int i, int j) const { return table[i][j]; }
  int inverse(int i) const;

  /// Axiom violations (closure, identity, inverses, associativity); empty iff valid.
  std::vector<std::string> check() const;

  static FiniteGroup cyclic(int n);
  static FiniteGroup trivial() { return cyclic(1); }
};

}  // namespace gpi

#endif
