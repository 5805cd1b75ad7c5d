#ifndef GPI_FREE_ALGEBRA_HPP
#define GPI_FREE_ALGEBRA_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "gpi/multiplier.hpp"

namespace gpi {

/// Normal-form monomial key: flat sequence i0, (j1, k1), i1, ..., (jn, kn), in
/// where i* index the acting-algebra basis and each letter carries a variable
/// index j and a group-degree index k. Length 3n+1, n >= 1.
using MonKey = std::vector<std::int32_t>;

/// Variable identity: (degree index, variable index).
using VarId = std::pair<int, int>;

int monkey_letters(const MonKey& k);
/// Homogeneous degree |w_{i0}| k1 |w_{i1}| ... of a monomial.
int monkey_degree(const FiniteGroup& G, const ActingAlgebra& W, const MonKey& k);

/// Generalized graded polynomial in normal form; no zero coefficients stored.
struct GenPolynomial {
  std::map<MonKey, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const GenPolynomial&) const = default;
};

GenPolynomial gp_zero();
GenPolynomial gp_add(const GenPolynomial& a, const GenPolynomial& b);
GenPolynomial gp_sub(const GenPolynomial& a, const GenPolynomial& b);
GenPolynomial gp_scale(const Scalar& c, const GenPolynomial& a);
void gp_accumulate(GenPolynomial& acc, const MonKey& k, const Scalar& c);
void gp_accumulate_all(GenPolynomial& acc, const GenPolynomial& more);

/// One factor of a raw (not yet normalized) word.
struct RawFactor {
  bool is_border;  // true: acting-algebra basis element; false: variable letter
  int w = 0;       // border index (may exceed dim W: then the term is zero)
  int var_j = 0;   // variable index
  int var_k = 0;   // variable degree index
  static RawFactor border(int i) { return {true, i, 0, 0}; }
  static RawFactor letter(int j, int k) { return {false, 0, j, k}; }
};

/// Expands a raw word into normal form: adjacent borders are multiplied out
/// through the acting-algebra table, missing borders become the unit index 0.
GenPolynomial normalize(const ActingAlgebra& W, const std::vector<RawFactor>& word,
                        const Scalar& coeff = Scalar(1));

/// Convenience: the bare variable x_j^{g_k} (all-unit borders).
GenPolynomial gp_var(int j, int k);
/// Convenience: single monomial from a key.
GenPolynomial gp_mono(const MonKey& k, const Scalar& c = Scalar(1));

GenPolynomial gp_mul(const ActingAlgebra& W, const GenPolynomial& a, const GenPolynomial& b);
/// W-bimodule action by a basis element.
GenPolynomial left_act(const ActingAlgebra& W, int w, const GenPolynomial& f);
GenPolynomial right_act(const ActingAlgebra& W, const GenPolynomial& f, int w);

/// Group degree when f is homogeneous (nullopt for inhomogeneous or zero-with-
/// ambiguity; zero polynomial reports the group identity).
std::optional<int> homogeneous_degree(const FiniteGroup& G, const ActingAlgebra& W,
                                      const GenPolynomial& f);

/// Distinct variables of f in order.
std::vector<VarId> gp_variables(const GenPolynomial& f);

/// Graded W-endomorphism image: each assigned variable must map to a
/// polynomial homogeneous of the variable's degree. Unassigned variables stay.
GenPolynomial substitute(const ActingAlgebra& W, const FiniteGroup& G, const GenPolynomial& f,
                         const std::map<VarId, GenPolynomial>& assignment);

/// Multidegree (n_1, ..., n_s): letter counts per group degree.
struct MultiDegree {
  std::vector<int> counts;
  int total() const;
};

/// Degree of variable i (1-based) under the canonical block order of md.
int block_degree(const MultiDegree& md, int i);

/// Number of spanning monomials (dim W)^(n+1) * n!.
Int spanning_count(int dimW, int n);

/// Enumerates the spanning monomials of P_md in lexicographic
/// (permutation, border) order, starting at monomial `start`. The callback
/// returns false to stop. Returns the number of monomials visited.
std::uint64_t spanning_multidegree(const ActingAlgebra& W, const MultiDegree& md,
                                   const std::function<bool(const MonKey&)>& fn,
                                   std::uint64_t start = 0, std::uint64_t stride = 1);

}  // namespace gpi

#endif
