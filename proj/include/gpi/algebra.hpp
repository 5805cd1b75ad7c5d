#ifndef GPI_ALGEBRA_HPP
#define GPI_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpi/group.hpp"
#include "gpi/linalg.hpp"

namespace gpi {

/// Finite-dimensional G-graded algebra given by structure constants over
/// exact rationals. Elements are dense coordinate vectors over the basis.
struct GradedAlgebra {
  int dim = 0;
  FiniteGroup group;
  std::vector<int> degree;  // basis index -> group element index
  // e_i * e_j = sum_k c * e_k, stored sparsely per (i, j).
  std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> structure;
  std::optional<Vec> unit;

  Vec zero() const { return Vec(dim, Scalar(0)); }
  Vec basis_vec(int i) const;

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec project(const Vec& a, int h) const;

  /// True iff a is homogeneous (or zero); sets *deg to the degree when nonzero.
  bool is_homogeneous(const Vec& a, int* deg = nullptr) const;

  /// Matrix of a -> m*a in the basis.
  Mat left_mult_matrix(const Vec& m) const;
  /// Matrix of a -> a*m in the basis.
  Mat right_mult_matrix(const Vec& m) const;

  /// Dimension of the homogeneous component A^g.
  int component_dim(int g) const;
  /// Basis indices of degree g, in order.
  std::vector<int> component_indices(int g) const;

  /// Violated axioms (grading compatibility, associativity, unit); empty iff valid.
  std::vector<std::string> check_axioms() const;

  /// Basis of the Jacobson radical (trace-form kernel on the unital hull),
  /// re-expressed by homogeneous vectors when possible.
  std::vector<Vec> radical() const;

  /// Echelonized basis of the smallest subspace containing the inputs (and
  /// the unit when requested) closed under multiplication.
  std::vector<Vec> subalgebra_closure(std::vector<Vec> gens, bool with_unit) const;
};

using AlgebraElement = Vec;

}  // namespace gpi

#endif
