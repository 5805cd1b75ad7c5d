#ifndef GPI_TIDEAL_HPP
#define GPI_TIDEAL_HPP

#include <string>

#include "gpi/generic.hpp"

namespace gpi {

/// Finite set of multilinear generalized polynomials; variable degrees are
/// carried by the variables themselves.
struct GeneratorSet {
  std::vector<GenPolynomial> generators;
};

/// Echelonized span in P_md of all u * f(p_1, ..., p_k) * v over generators f,
/// multilinear monomial substitutions p_i homogeneous of the variable degrees,
/// and border/monomial factors u, v, using exactly the variables of md once.
Echelon<MonKey> consequences_in_multidegree(const GeneratorSet& S, const ActingAlgebra& W,
                                            const FiniteGroup& G, const MultiDegree& md,
                                            const Limits& limits = {});

std::vector<GenPolynomial> echelon_polynomials(const Echelon<MonKey>& e);

struct BasisRow {
  MultiDegree md;
  std::uint64_t consequence_dim = 0;
  std::uint64_t codim = 0;
  Int dim_p = 0;
  bool pass = false;
  bool truncated = false;
  std::string note;
};

struct BasisReport {
  int n = 0;
  std::vector<BasisRow> rows;
  bool pass = false;       // all rows pass
  bool truncated = false;  // some row hit the budget
  // On FAIL: a kernel element of the first failing multidegree that is not a
  // consequence of S.
  std::optional<GenPolynomial> witness;
  std::optional<MultiDegree> witness_md;
};

/// Checks, per multidegree of total degree n, that the consequence span of S
/// fills the evaluation kernel: dim consequences + codim = (dim W)^{n+1} n!.
BasisReport verify_basis(const GeneratorSet& S, const GradedAlgebra& A, const ActingAlgebra& W,
                         int n, const Limits& limits = {});

/// Kernel of the evaluation map on P_md as explicit polynomials.
std::vector<GenPolynomial> evaluation_kernel(const GradedAlgebra& A, const ActingAlgebra& W,
                                             const MultiDegree& md);

struct NoncontainmentReport {
  bool identity_first = false;
  bool identity_second = false;
  bool witness = false;  // identity of exactly one
};

/// Reports whether f separates the identities of the two actions.
NoncontainmentReport noncontainment_witness(const GradedAlgebra& A1, const ActingAlgebra& W1,
                                            const GradedAlgebra& A2, const ActingAlgebra& W2,
                                            const GenPolynomial& f);

}  // namespace gpi

#endif
