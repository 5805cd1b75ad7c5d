#ifndef GPI_EXPONENT_HPP
#define GPI_EXPONENT_HPP

#include <string>

#include "gpi/generic.hpp"

namespace gpi {

/// Wedderburn decomposition data: graded-simple component sub-bases plus a
/// radical sub-basis. Supplied with the algebra, validated here.
struct WedderburnData {
  std::vector<std::vector<Vec>> components;
  std::vector<Vec> radical;
};

/// Violated decomposition invariants; empty iff valid.
std::vector<std::string> validate(const WedderburnData& wd, const GradedAlgebra& A);

struct AdmissibleSet {
  std::vector<int> indices;  // component indices, ascending
  int dimension = 0;         // sum of component dimensions
};

/// Component subsets admitting an ordering with nonzero alternating product
/// B_{l1} J B_{l2} J ... J B_{lk}.
std::vector<AdmissibleSet> admissible_subalgebras(const WedderburnData& wd,
                                                  const GradedAlgebra& A);

/// Maximal admissible dimension; 0 when there are no components.
int graded_exponent(const WedderburnData& wd, const GradedAlgebra& A);

struct GrowthReport {
  int d = 0;
  int fitted_u = -1;  // smallest exponent that fits; -1 if none
  bool pass = false;
  std::vector<SeriesEntry> series;
  std::vector<std::string> notes;
};

/// Checks the codimension ratios c_{n+1}/c_n against the window
/// [d (n/(n+1))^u, d ((n+1)/n)^u] for a small fitted u.
GrowthReport growth_crosscheck(const GradedAlgebra& A, const ActingAlgebra& W,
                               const WedderburnData& wd, int n_max, const Limits& limits = {});

}  // namespace gpi

#endif
