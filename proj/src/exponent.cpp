#include "gpi/exponent.hpp"

#include <algorithm>
#include <numeric>

namespace gpi {

std::vector<std::string> validate(const WedderburnData& wd, const GradedAlgebra& A) {
  std::vector<std::string> out;
  const std::vector<Vec> rad_span = echelon_basis(wd.radical);
  auto in_rad = [&](const Vec& v) { return in_span(rad_span, v); };

  std::vector<Vec> all = wd.radical;
  for (std::size_t i = 0; i < wd.components.size(); ++i) {
    const auto& B = wd.components[i];
    if (B.empty()) out.push_back("component " + std::to_string(i) + " is empty");
    std::vector<Vec> bspan = echelon_basis(B);
    if (bspan.size() != B.size())
      out.push_back("component " + std::to_string(i) + " basis is dependent");
    for (const auto& v : B) {
      if (!A.is_homogeneous(v))
        out.push_back("component " + std::to_string(i) + " has an inhomogeneous vector");
      all.push_back(v);
    }
    for (const auto& a : B)
      for (const auto& b : B)
        if (!in_span(bspan, A.multiply(a, b)))
          out.push_back("component " + std::to_string(i) + " is not closed under multiplication");
    for (std::size_t j = 0; j < wd.components.size(); ++j) {
      if (i == j) continue;
      for (const auto& a : B)
        for (const auto& b : wd.components[j])
          if (!in_rad(A.multiply(a, b)))
            out.push_back("components " + std::to_string(i) + " and " + std::to_string(j) +
                          " have a product outside the radical");
    }
  }
  if (echelon_basis(all).size() != static_cast<std::size_t>(A.dim))
    out.push_back("components plus radical do not span the algebra");

  const std::vector<Vec> computed = echelon_basis(A.radical());
  if (computed != rad_span) out.push_back("declared radical differs from the computed radical");
  for (const auto& v : wd.radical)
    if (!A.is_homogeneous(v)) out.push_back("radical basis has an inhomogeneous vector");
  return out;
}

namespace {

// Span of {s * j * b : s in S, j in J, b in B}.
std::vector<Vec> step(const GradedAlgebra& A, const std::vector<Vec>& S,
                      const std::vector<Vec>& J, const std::vector<Vec>& B) {
  std::vector<Vec> prods;
  for (const auto& s : S)
    for (const auto& j : J)
      for (const auto& b : B) prods.push_back(A.multiply(A.multiply(s, j), b));
  return echelon_basis(prods);
}

bool admissible_order(const GradedAlgebra& A, const WedderburnData& wd,
                      const std::vector<int>& order) {
  std::vector<Vec> S = echelon_basis(wd.components[order[0]]);
  for (std::size_t t = 1; t < order.size(); ++t) {
    S = step(A, S, wd.radical, wd.components[order[t]]);
    if (S.empty()) return false;
  }
  return !S.empty();
}

}  // namespace

std::vector<AdmissibleSet> admissible_subalgebras(const WedderburnData& wd,
                                                  const GradedAlgebra& A) {
  std::vector<AdmissibleSet> out;
  const int t = static_cast<int>(wd.components.size());
  for (unsigned mask = 1; mask < (1u << t); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < t; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    std::vector<int> order = subset;
    bool found = false;
    do {
      if (admissible_order(A, wd, order)) found = true;
    } while (!found && std::next_permutation(order.begin(), order.end()));
    if (found) {
      AdmissibleSet s;
      s.indices = subset;
      for (int i : subset) s.dimension += static_cast<int>(wd.components[i].size());
      out.push_back(std::move(s));
    }
  }
  return out;
}

int graded_exponent(const WedderburnData& wd, const GradedAlgebra& A) {
  int d = 0;
  for (const auto& s : admissible_subalgebras(wd, A)) d = std::max(d, s.dimension);
  return d;
}

GrowthReport growth_crosscheck(const GradedAlgebra& A, const ActingAlgebra& W,
                               const WedderburnData& wd, int n_max, const Limits& limits) {
  GrowthReport rep;
  rep.d = graded_exponent(wd, A);
  rep.series = codim_series(A, W, n_max, limits);
  if (rep.d == 0) {
    rep.notes.push_back("exponent 0");
    rep.pass = std::all_of(rep.series.begin(), rep.series.end(),
                           [](const SeriesEntry& e) { return e.c && *e.c == 0; });
    return rep;
  }
  for (const auto& e : rep.series)
    if (!e.c) rep.notes.push_back("n=" + std::to_string(e.n) + ": " + e.error);
  for (int u = 0; u <= 6 && rep.fitted_u < 0; ++u) {
    bool ok = true;
    for (const auto& e : rep.series) {
      if (!e.c || !e.ratio) continue;
      const int n = e.n - 1;  // ratio is c_n / c_{n-1} with this n
      Int nu = 1, n1u = 1;
      for (int i = 0; i < u; ++i) {
        nu *= n;
        n1u *= n + 1;
      }
      const Scalar lo = Scalar(rep.d) * Scalar(nu) / Scalar(n1u);
      const Scalar hi = Scalar(rep.d) * Scalar(n1u) / Scalar(nu);
      if (*e.ratio < lo || *e.ratio > hi) ok = false;
    }
    if (ok) rep.fitted_u = u;
  }
  rep.pass = rep.fitted_u >= 0;
  return rep;
}

}  // namespace gpi
