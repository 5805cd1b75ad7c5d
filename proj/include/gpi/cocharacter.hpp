#ifndef GPI_COCHARACTER_HPP
#define GPI_COCHARACTER_HPP

#include <string>

#include "gpi/generic.hpp"

namespace gpi {

/// Weakly decreasing positive parts; empty = the partition of 0.
using Partition = std::vector<int>;

int partition_weight(const Partition& p);
int partition_height(const Partition& p);

/// All partitions of r, largest-first order: (r), (r-1,1), ..., (1^r).
std::vector<Partition> partitions_of(int r);

/// Number of standard tableaux of the shape, by the hook length formula.
Int irrep_dimension(const Partition& p);

/// Highest weight vectors for one partition per degree block: every spanning
/// monomial of the induced multidegree is symmetrized against the canonical
/// column-major tableaux (alternate columns, then identify rows). Seeds equal
/// up to column relabeling are collapsed. Empty when some height exceeds the
/// matching component dimension.
std::vector<GenPolynomial> highest_weight_vectors(const std::vector<Partition>& shapes,
                                                  const GradedAlgebra& A, const ActingAlgebra& W);

/// Rank of the generic-element evaluations of the highest weight vectors.
std::uint64_t multiplicity(const std::vector<Partition>& shapes, const GradedAlgebra& A,
                           const ActingAlgebra& W, const Limits& limits = {});

/// Two-block (even/odd) conveniences.
std::vector<GenPolynomial> highest_weight_vectors(const Partition& lambda, const Partition& mu,
                                                  const GradedAlgebra& A, const ActingAlgebra& W);
std::uint64_t multiplicity(const Partition& lambda, const Partition& mu, const GradedAlgebra& A,
                           const ActingAlgebra& W, const Limits& limits = {});

struct MultiplicityEntry {
  std::vector<Partition> shapes;  // one partition per degree block
  std::uint64_t m = 0;
  std::vector<Int> dims;  // d per shape
  Int contribution = 0;   // m * product of dims

  MultiDegree multidegree() const;
};

struct MultiplicityTable {
  int n = 0;
  std::vector<MultiplicityEntry> entries;  // nonzero multiplicities only
};

MultiplicityTable cocharacter_table(const GradedAlgebra& A, const ActingAlgebra& W, int n,
                                    const Limits& limits = {});

/// Violations of sum m * prod d = codim per multidegree; empty iff consistent.
std::vector<std::string> check_table_consistency(const MultiplicityTable& table,
                                                 const GradedAlgebra& A, const ActingAlgebra& W,
                                                 const Limits& limits = {});

std::string partition_str(const Partition& p);

}  // namespace gpi

#endif
