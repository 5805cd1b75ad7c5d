#ifndef GPI_TEST_HELPERS_HPP
#define GPI_TEST_HELPERS_HPP

#include <random>

#include "gpi/builtins.hpp"
#include "gpi/cocharacter.hpp"

namespace gpitest {

using namespace gpi;

inline std::mt19937& rng() {
  static std::mt19937 gen(20240817);
  return gen;
}

inline int rnd_int(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng());
}

inline Scalar rnd_scalar() { return Scalar(rnd_int(-4, 4)); }

// ---- structured 4-dimensional Z2-graded seed algebras ----

inline GradedAlgebra seed_ut2_plus_f() {
  // UT2 + a central split idempotent.
  GradedAlgebra A;
  A.group = FiniteGroup::cyclic(2);
  A.dim = 4;
  A.degree = {0, 0, 1, 0};
  A.structure[{0, 0}] = {{0, Scalar(1)}};
  A.structure[{0, 2}] = {{2, Scalar(1)}};
  A.structure[{1, 1}] = {{1, Scalar(1)}};
  A.structure[{2, 1}] = {{2, Scalar(1)}};
  A.structure[{3, 3}] = {{3, Scalar(1)}};
  A.unit = Vec{Scalar(1), Scalar(1), Scalar(0), Scalar(1)};
  return A;
}

inline GradedAlgebra seed_truncated_poly() {
  // F[t]/t^4, deg t odd.
  GradedAlgebra A;
  A.group = FiniteGroup::cyclic(2);
  A.dim = 4;
  A.degree = {0, 1, 0, 1};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i + j < 4) A.structure[{i, j}] = {{i + j, Scalar(1)}};
  A.unit = Vec{Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
  return A;
}

inline GradedAlgebra seed_m2() {
  // 2x2 matrices, diagonal even / off-diagonal odd: e11, e22, e12, e21.
  GradedAlgebra A;
  A.group = FiniteGroup::cyclic(2);
  A.dim = 4;
  A.degree = {0, 0, 1, 1};
  auto put = [&](int i, int j, int k) { A.structure[{i, j}] = {{k, Scalar(1)}}; };
  put(0, 0, 0);
  put(0, 2, 2);
  put(1, 1, 1);
  put(1, 3, 3);
  put(2, 1, 2);
  put(2, 3, 0);
  put(3, 0, 3);
  put(3, 2, 1);
  A.unit = Vec{Scalar(1), Scalar(1), Scalar(0), Scalar(0)};
  return A;
}

inline GradedAlgebra seed_zero_product() {
  GradedAlgebra A;
  A.group = FiniteGroup::cyclic(2);
  A.dim = 4;
  A.degree = {0, 1, 0, 1};
  return A;
}

// Random invertible block-diagonal (degree-preserving) basis change applied to
// a seed algebra; keeps the grading, scrambles the structure constants.
inline GradedAlgebra random_homogeneous_twist(const GradedAlgebra& A) {
  const int n = A.dim;
  Mat P;
  Mat Pinv;
  for (;;) {
    P = mat_zero(n, n);
    for (int g = 0; g < A.group.order(); ++g) {
      auto idx = A.component_indices(g);
      for (int i : idx)
        for (int j : idx) P[i][j] = rnd_scalar();
    }
    // invert by solving P X = I
    Mat aug(n, Vec(2 * n, Scalar(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug[i][j] = P[i][j];
      aug[i][n + i] = Scalar(1);
    }
    if (rref(aug) != static_cast<std::size_t>(n)) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j)
        if ((i == j && aug[i][j] != 1) || (i != j && aug[i][j] != 0)) {
          ok = false;
          break;
        }
    if (!ok) continue;
    Pinv = mat_zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Pinv[i][j] = aug[i][n + j];
    break;
  }
  // New basis f_i = sum_j P[j][i] e_j; structure via old products.
  GradedAlgebra B;
  B.group = A.group;
  B.dim = n;
  B.degree = A.degree;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec fi(n, Scalar(0)), fj(n, Scalar(0));
      for (int r = 0; r < n; ++r) {
        fi[r] = P[r][i];
        fj[r] = P[r][j];
      }
      Vec prod = A.multiply(fi, fj);
      Vec coords = mat_apply(Pinv, prod);
      std::vector<std::pair<int, Scalar>> terms;
      for (int k = 0; k < n; ++k)
        if (coords[k] != 0) terms.emplace_back(k, coords[k]);
      if (!terms.empty()) B.structure[{i, j}] = std::move(terms);
    }
  if (A.unit) B.unit = mat_apply(Pinv, *A.unit);
  return B;
}

inline GradedAlgebra random_graded_algebra() {
  GradedAlgebra seed;
  switch (rnd_int(0, 3)) {
    case 0: seed = seed_ut2_plus_f(); break;
    case 1: seed = seed_truncated_poly(); break;
    case 2: seed = seed_m2(); break;
    default: seed = seed_zero_product(); break;
  }
  return random_homogeneous_twist(seed);
}

inline Multiplier random_multiplier(const GradedAlgebra& A) {
  auto basis = multiplier_algebra(A);
  Multiplier m = multiplier_zero(A);
  for (const auto& b : basis) m = multiplier_add(m, multiplier_scale(rnd_scalar(), b));
  return m;
}

// Random normalized polynomial in variables of the builtin setup.
inline GenPolynomial random_polynomial(const ActingAlgebra& W, int max_terms = 3,
                                       int max_letters = 3) {
  GenPolynomial f;
  const int terms = rnd_int(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    const int n = rnd_int(1, max_letters);
    std::vector<RawFactor> word;
    for (int i = 0; i < n; ++i) {
      if (rnd_int(0, 2) == 0) word.push_back(RawFactor::border(rnd_int(0, W.dim() - 1)));
      word.push_back(RawFactor::letter(rnd_int(1, 3), rnd_int(0, 1)));
    }
    if (rnd_int(0, 1)) word.push_back(RawFactor::border(rnd_int(0, W.dim() - 1)));
    gp_accumulate_all(f, normalize(W, word, rnd_scalar()));
  }
  return f;
}

// Brute-force count of standard Young tableaux by recursive corner peeling.
inline Int standard_tableau_count(const Partition& p) {
  if (p.empty()) return 1;
  Int total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const bool corner = (i + 1 == p.size()) || (p[i + 1] < p[i]);
    if (!corner) continue;
    Partition q = p;
    if (--q[i] == 0) q.erase(q.begin() + i);
    total += standard_tableau_count(q);
  }
  return total;
}

}  // namespace gpitest

#endif
