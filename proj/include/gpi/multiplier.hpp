#ifndef GPI_MULTIPLIER_HPP
#define GPI_MULTIPLIER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpi/algebra.hpp"

namespace gpi {

/// Multiplier pair (R, L): R is the matrix of a right action a -> a.w,
/// L of a left action a -> w.a, subject to R(ab)=aR(b), L(ab)=L(a)b,
/// R(a)b=aL(b).
struct Multiplier {
  Mat R, L;

  bool operator==(const Multiplier&) const = default;
};

bool is_multiplier(const GradedAlgebra& A, const Multiplier& m);

Multiplier multiplier_zero(const GradedAlgebra& A);
Multiplier multiplier_identity(const GradedAlgebra& A);
Multiplier multiplier_add(const Multiplier& a, const Multiplier& b);
Multiplier multiplier_scale(const Scalar& c, const Multiplier& a);
/// Product in M(A): R components compose in the opposite order.
Multiplier multiplier_product(const Multiplier& a, const Multiplier& b);

/// Inner multiplier (R_m, L_m) of the element m.
Multiplier inner_multiplier(const GradedAlgebra& A, const Vec& m);

/// Canonical (echelonized over flattened entries) basis of M(A), obtained by
/// solving the defining linear conditions on all basis pairs.
std::vector<Multiplier> multiplier_algebra(const GradedAlgebra& A);

/// Degree-g component (R_g, L_g) = (sum_h pi_{hg} R pi_h, sum_h pi_{gh} L pi_h).
/// Rejects inputs that are not multipliers.
Multiplier grade_component(const GradedAlgebra& A, const Multiplier& m, int g);

/// Direct-sum decomposition of M(A) by degree.
std::map<int, std::vector<Multiplier>> grading_of_M(const GradedAlgebra& A);

/// Degree of a multiplier when homogeneous (R(A^h) in A^{hg}, L(A^h) in A^{gh}).
std::optional<int> multiplier_degree(const GradedAlgebra& A, const Multiplier& m);

/// A W-action materialized as multiplier pairs with an induced multiplication
/// table and degree map. Basis element 0 is always the identity pair.
struct ActingAlgebra {
  std::vector<Multiplier> basis;
  std::vector<int> degree;
  // basis[i] * basis[j] = sum_k c * basis[k]
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> table;

  int dim() const { return static_cast<int>(basis.size()); }
  const std::vector<std::pair<int, Scalar>>& product(int i, int j) const { return table[i][j]; }
};

/// Builds the acting algebra of inner multipliers of a unital graded
/// subalgebra. sub_basis[0] must be the unit of A; every basis vector must be
/// homogeneous and the span closed under multiplication.
ActingAlgebra acting_algebra_from_subalgebra(const GradedAlgebra& A,
                                             const std::vector<Vec>& sub_basis);

/// Builds an acting algebra from explicit multiplier pairs with degrees.
/// pairs[0] must be the identity pair.
ActingAlgebra acting_algebra_from_multipliers(const GradedAlgebra& A,
                                              std::vector<Multiplier> pairs,
                                              std::vector<int> degrees);

/// Structural sanity checks on an acting algebra; empty iff consistent.
std::vector<std::string> check_acting_algebra(const GradedAlgebra& A, const ActingAlgebra& W);

Vec multiplier_flatten(const Multiplier& m);

}  // namespace gpi

#endif
