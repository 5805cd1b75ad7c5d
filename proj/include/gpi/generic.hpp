#ifndef GPI_GENERIC_HPP
#define GPI_GENERIC_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "gpi/free_algebra.hpp"

namespace gpi {

/// Commuting xi-monomial: sorted list of variable ids, with repetition.
using XiKey = std::vector<std::int32_t>;

/// xi_{i,j} id for generator index i (1-based) over basis column j (0-based).
std::int32_t xi_id(int dim, int i, int j);

/// Polynomial in the commuting xi variables over Scalar.
struct PolyElem {
  std::map<XiKey, Scalar> t;

  bool is_zero() const { return t.empty(); }
  bool operator==(const PolyElem&) const = default;
};

PolyElem pe_const(const Scalar& c);
PolyElem pe_var(std::int32_t id);
PolyElem pe_add(const PolyElem& a, const PolyElem& b);
PolyElem pe_scale(const Scalar& c, const PolyElem& a);
PolyElem pe_mul(const PolyElem& a, const PolyElem& b);
Scalar pe_eval(const PolyElem& p, const std::map<std::int32_t, Scalar>& point);

/// Element of A tensor F[xi]: one xi-polynomial per basis coordinate.
struct GenericElement {
  std::vector<PolyElem> coords;

  bool is_zero() const;
  bool operator==(const GenericElement&) const = default;
};

GenericElement ge_zero(const GradedAlgebra& A);
GenericElement ge_add(const GenericElement& a, const GenericElement& b);
GenericElement ge_scale(const Scalar& c, const GenericElement& a);
GenericElement ge_mul(const GradedAlgebra& A, const GenericElement& a, const GenericElement& b);
GenericElement ge_apply(const Mat& m, const GenericElement& a);
GenericElement ge_from_vec(const Vec& v);

/// Generic element xi_i^{g}: the degree-g basis block weighted by fresh
/// commuting indeterminates.
GenericElement generic_element(const GradedAlgebra& A, int i, int g);

/// All generic elements xi_i^{g} for 1 <= i <= n and every degree.
std::vector<std::vector<GenericElement>> generic_elements(const GradedAlgebra& A, int n);

using GenericAssignment = std::function<GenericElement(const VarId&)>;

/// Image of f under x_j^{g} -> assign((g, j)), borders acting through W.
GenericElement evaluate(const GradedAlgebra& A, const ActingAlgebra& W, const GenPolynomial& f,
                        const GenericAssignment& assign);

/// Default assignment x_j^{g} -> xi_j^{g}.
GenericAssignment generic_assignment(const GradedAlgebra& A);

struct Witness {
  std::map<VarId, Vec> assignment;  // concrete homogeneous elements of A
  Vec value;                        // nonzero evaluation of f
};

/// nullopt iff f is a graded generalized identity of A; otherwise a concrete
/// rational evaluation point found by a deterministic integer search.
std::optional<Witness> identity_witness(const GradedAlgebra& A, const ActingAlgebra& W,
                                        const GenPolynomial& f);
bool is_identity(const GradedAlgebra& A, const ActingAlgebra& W, const GenPolynomial& f);

class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

struct Limits {
  std::uint64_t max_rows = 50'000'000;
  std::uint64_t max_echelon_rows = 200'000;
  int threads = 1;
};

struct CodimResult {
  MultiDegree md;
  std::uint64_t rank = 0;
  std::uint64_t rows = 0;
  std::string algebra_hash;
};

/// Column key of a flattened evaluation row: (basis index, xi monomial).
using EvalCol = std::pair<std::int32_t, XiKey>;
using EvalRow = std::map<EvalCol, Scalar>;

EvalRow ge_flatten(const GenericElement& e);

/// Rank of the generic-element evaluations of the spanning monomials with the
/// given per-variable degree assignment (variable i gets degrees[i-1]).
CodimResult codim_assignment(const GradedAlgebra& A, const ActingAlgebra& W,
                             const std::vector<int>& degrees, const Limits& limits = {});

CodimResult codim_multidegree(const GradedAlgebra& A, const ActingAlgebra& W,
                              const MultiDegree& md, const Limits& limits = {});

/// Optional memo for codimension results, keyed by multidegree counts.
struct CodimCache {
  std::function<std::optional<CodimResult>(const MultiDegree&)> get;
  std::function<void(const MultiDegree&, const CodimResult&)> put;
};

/// Sum over compositions of n of multinomial(n; md) * codim_multidegree(md).
Int codim_total(const GradedAlgebra& A, const ActingAlgebra& W, int n,
                const Limits& limits = {}, const CodimCache* cache = nullptr);

struct SeriesEntry {
  int n = 0;
  std::optional<Int> c;          // absent on truncation
  std::string error;             // truncation message when c is absent
  std::optional<Scalar> ratio;   // c_n / c_{n-1} when both known
  double nth_root = 0.0;         // c_n^(1/n) when known
};

std::vector<SeriesEntry> codim_series(const GradedAlgebra& A, const ActingAlgebra& W, int n_max,
                                      const Limits& limits = {}, const CodimCache* cache = nullptr);

/// All compositions (n_1, ..., n_s) of n.
std::vector<MultiDegree> compositions(int n, int s);
Int multinomial(int n, const std::vector<int>& parts);

}  // namespace gpi

#endif
