#include "gpi/multiplier.hpp"

#include <stdexcept>

namespace gpi {

bool is_multiplier(const GradedAlgebra& A, const Multiplier& m) {
  const int d = A.dim;
  if (static_cast<int>(m.R.size()) != d || static_cast<int>(m.L.size()) != d) return false;
  for (int i = 0; i < d; ++i) {
    Vec ei = A.basis_vec(i);
    Vec Rei = mat_apply(m.R, ei);
    Vec Lei = mat_apply(m.L, ei);
    for (int j = 0; j < d; ++j) {
      Vec ej = A.basis_vec(j);
      Vec prod = A.multiply(ei, ej);
      // R(ab) = a R(b)
      if (mat_apply(m.R, prod) != A.multiply(ei, mat_apply(m.R, ej))) return false;
      // L(ab) = L(a) b
      if (mat_apply(m.L, prod) != A.multiply(Lei, ej)) return false;
      // R(a) b = a L(b)
      if (A.multiply(Rei, ej) != A.multiply(ei, mat_apply(m.L, ej))) return false;
    }
  }
  return true;
}

Multiplier multiplier_zero(const GradedAlgebra& A) {
  return {mat_zero(A.dim, A.dim), mat_zero(A.dim, A.dim)};
}

Multiplier multiplier_identity(const GradedAlgebra& A) {
  return {mat_identity(A.dim), mat_identity(A.dim)};
}

Multiplier multiplier_add(const Multiplier& a, const Multiplier& b) {
  return {mat_add(a.R, b.R), mat_add(a.L, b.L)};
}

Multiplier multiplier_scale(const Scalar& c, const Multiplier& a) {
  return {mat_scale(c, a.R), mat_scale(c, a.L)};
}

Multiplier multiplier_product(const Multiplier& a, const Multiplier& b) {
  // a.(w1 w2) = (a.w1).w2, so the R of the product applies a.R first.
  return {mat_mul(b.R, a.R), mat_mul(a.L, b.L)};
}

Multiplier inner_multiplier(const GradedAlgebra& A, const Vec& m) {
  return {A.right_mult_matrix(m), A.left_mult_matrix(m)};
}

Vec multiplier_flatten(const Multiplier& m) {
  Vec out;
  for (const auto& row : m.R) out.insert(out.end(), row.begin(), row.end());
  for (const auto& row : m.L) out.insert(out.end(), row.begin(), row.end());
  return out;
}

static Multiplier unflatten(const GradedAlgebra& A, const Vec& v) {
  const int d = A.dim;
  Multiplier m = multiplier_zero(A);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      m.R[i][j] = v[i * d + j];
      m.L[i][j] = v[d * d + i * d + j];
    }
  return m;
}

std::vector<Multiplier> multiplier_algebra(const GradedAlgebra& A) {
  const int d = A.dim;
  // Unknowns: R entries (d^2) then L entries (d^2). One linear equation per
  // defining condition, basis pair and output coordinate.
  Mat eqs;
  auto r_idx = [d](int i, int j) { return i * d + j; };
  auto l_idx = [d](int i, int j) { return d * d + i * d + j; };
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Vec ea = A.basis_vec(a), eb = A.basis_vec(b);
      Vec prod = A.multiply(ea, eb);
      // R(e_a e_b) - e_a R(e_b) = 0
      for (int out = 0; out < d; ++out) {
        Vec eq(2 * d * d, Scalar(0));
        for (int k = 0; k < d; ++k) {
          if (prod[k] != 0) eq[r_idx(out, k)] += prod[k];
          // e_a * R(e_b) = sum_k R[k][b] (e_a e_k)
          Vec p = A.multiply(ea, A.basis_vec(k));
          if (p[out] != 0) eq[r_idx(k, b)] -= p[out];
        }
        if (!vec_is_zero(eq)) eqs.push_back(std::move(eq));
      }
      // L(e_a e_b) - L(e_a) e_b = 0
      for (int out = 0; out < d; ++out) {
        Vec eq(2 * d * d, Scalar(0));
        for (int k = 0; k < d; ++k) {
          if (prod[k] != 0) eq[l_idx(out, k)] += prod[k];
          Vec p = A.multiply(A.basis_vec(k), eb);
          if (p[out] != 0) eq[l_idx(k, a)] -= p[out];
        }
        if (!vec_is_zero(eq)) eqs.push_back(std::move(eq));
      }
      // R(e_a) e_b - e_a L(e_b) = 0
      for (int out = 0; out < d; ++out) {
        Vec eq(2 * d * d, Scalar(0));
        for (int k = 0; k < d; ++k) {
          Vec p1 = A.multiply(A.basis_vec(k), eb);
          if (p1[out] != 0) eq[r_idx(k, a)] += p1[out];
          Vec p2 = A.multiply(ea, A.basis_vec(k));
          if (p2[out] != 0) eq[l_idx(k, b)] -= p2[out];
        }
        if (!vec_is_zero(eq)) eqs.push_back(std::move(eq));
      }
    }
  std::vector<Vec> sol;
  if (eqs.empty()) {
    // No constraints: every pair of matrices is a multiplier.
    sol = echelon_basis(std::vector<Vec>{});
    for (int i = 0; i < 2 * d * d; ++i) {
      Vec v(2 * d * d, Scalar(0));
      v[i] = 1;
      sol.push_back(std::move(v));
    }
  } else {
    sol = nullspace(eqs);
  }
  sol = echelon_basis(sol);
  std::vector<Multiplier> out;
  for (const auto& v : sol) out.push_back(unflatten(A, v));
  return out;
}

Multiplier grade_component(const GradedAlgebra& A, const Multiplier& m, int g) {
  if (!is_multiplier(A, m))
    throw std::invalid_argument("grade_component: input is not a multiplier");
  const int d = A.dim;
  Multiplier out = multiplier_zero(A);
  // (R_g)[i][j] is R[i][j] kept iff degree(i) = degree(j)*g, and similarly
  // L keeps entries with degree(i) = g*degree(j).
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (A.degree[i] == A.group.mul(A.degree[j], g)) out.R[i][j] = m.R[i][j];
      if (A.degree[i] == A.group.mul(g, A.degree[j])) out.L[i][j] = m.L[i][j];
    }
  return out;
}

std::optional<int> multiplier_degree(const GradedAlgebra& A, const Multiplier& m) {
  for (int g = 0; g < A.group.order(); ++g)
    if (grade_component(A, m, g) == m) return g;
  return std::nullopt;
}

std::map<int, std::vector<Multiplier>> grading_of_M(const GradedAlgebra& A) {
  auto basis = multiplier_algebra(A);
  std::map<int, std::vector<Vec>> comp_flat;
  for (int g = 0; g < A.group.order(); ++g) comp_flat[g] = {};
  for (const auto& m : basis)
    for (int g = 0; g < A.group.order(); ++g) {
      Multiplier c = grade_component(A, m, g);
      Vec f = multiplier_flatten(c);
      if (!vec_is_zero(f)) comp_flat[g].push_back(std::move(f));
    }
  std::map<int, std::vector<Multiplier>> out;
  for (auto& [g, rows] : comp_flat) {
    out[g] = {};
    for (const auto& v : echelon_basis(std::move(rows))) out[g].push_back(unflatten(A, v));
  }
  return out;
}

static std::vector<std::pair<int, Scalar>> expand_in_basis(const std::vector<Vec>& basis,
                                                           const Vec& v,
                                                           const char* what) {
  // Solve basis^T x = v.
  const std::size_t n = v.size();
  Mat sys(n, Vec(basis.size() + 1, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < basis.size(); ++b) sys[i][b] = basis[b][i];
    sys[i][basis.size()] = v[i];
  }
  std::size_t rank_aug = rref(sys);
  std::vector<std::pair<int, Scalar>> coeffs;
  Vec x(basis.size(), Scalar(0));
  for (std::size_t r = 0; r < rank_aug; ++r) {
    std::size_t lead = sys[r].size();
    for (std::size_t c = 0; c < sys[r].size(); ++c)
      if (sys[r][c] != 0) {
        lead = c;
        break;
      }
    if (lead == basis.size())
      throw std::invalid_argument(std::string(what) + ": vector outside the span");
    if (lead < basis.size()) x[lead] = sys[r][basis.size()];
  }
  for (std::size_t b = 0; b < basis.size(); ++b)
    if (x[b] != 0) coeffs.push_back({static_cast<int>(b), x[b]});
  return coeffs;
}

ActingAlgebra acting_algebra_from_subalgebra(const GradedAlgebra& A,
                                             const std::vector<Vec>& sub_basis) {
  if (!A.unit) throw std::invalid_argument("acting algebra requires a unital algebra");
  if (sub_basis.empty() || sub_basis[0] != *A.unit)
    throw std::invalid_argument("sub_basis[0] must be the unit of A");
  if (span_rank(sub_basis) != sub_basis.size())
    throw std::invalid_argument("sub_basis is linearly dependent");
  ActingAlgebra W;
  for (const auto& v : sub_basis) {
    int deg = A.group.identity;
    if (!A.is_homogeneous(v, &deg))
      throw std::invalid_argument("sub_basis vector is not homogeneous");
    W.degree.push_back(deg);
    W.basis.push_back(inner_multiplier(A, v));
  }
  const int k = static_cast<int>(sub_basis.size());
  W.table.assign(k, std::vector<std::vector<std::pair<int, Scalar>>>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Vec p = A.multiply(sub_basis[i], sub_basis[j]);
      W.table[i][j] = expand_in_basis(sub_basis, p, "acting_algebra: span not closed");
    }
  return W;
}

ActingAlgebra acting_algebra_from_multipliers(const GradedAlgebra& A,
                                              std::vector<Multiplier> pairs,
                                              std::vector<int> degrees) {
  if (pairs.empty() || !(pairs[0] == multiplier_identity(A)))
    throw std::invalid_argument("pairs[0] must be the identity multiplier");
  if (pairs.size() != degrees.size())
    throw std::invalid_argument("degree list length mismatch");
  std::vector<Vec> flat;
  for (const auto& m : pairs) {
    flat.push_back(multiplier_flatten(m));
  }
  if (span_rank(flat) != flat.size())
    throw std::invalid_argument("multiplier pairs are linearly dependent");
  ActingAlgebra W;
  W.basis = std::move(pairs);
  W.degree = std::move(degrees);
  const int k = W.dim();
  W.table.assign(k, std::vector<std::vector<std::pair<int, Scalar>>>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Vec p = multiplier_flatten(multiplier_product(W.basis[i], W.basis[j]));
      W.table[i][j] = expand_in_basis(flat, p, "acting_algebra: span not closed");
    }
  return W;
}

std::vector<std::string> check_acting_algebra(const GradedAlgebra& A, const ActingAlgebra& W) {
  std::vector<std::string> bad;
  for (int i = 0; i < W.dim(); ++i) {
    if (!is_multiplier(A, W.basis[i]))
      bad.push_back("basis " + std::to_string(i) + " is not a multiplier");
    auto deg = multiplier_degree(A, W.basis[i]);
    if (!deg || *deg != W.degree[i]) {
      // Zero multipliers are homogeneous of every degree; tolerate those.
      if (!mat_is_zero(W.basis[i].R) || !mat_is_zero(W.basis[i].L))
        bad.push_back("basis " + std::to_string(i) + " degree mismatch");
    }
  }
  if (W.dim() > 0 && !(W.basis[0] == multiplier_identity(A)))
    bad.push_back("basis 0 is not the identity pair");
  // rho/lambda compatibility: R of one commutes with L of another.
  for (int i = 0; i < W.dim(); ++i)
    for (int j = 0; j < W.dim(); ++j)
      if (mat_mul(W.basis[i].L, W.basis[j].R) != mat_mul(W.basis[j].R, W.basis[i].L))
        bad.push_back("L/R compatibility fails at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
  // Table consistency.
  for (int i = 0; i < W.dim(); ++i)
    for (int j = 0; j < W.dim(); ++j) {
      Multiplier sum = {mat_zero(A.dim, A.dim), mat_zero(A.dim, A.dim)};
      for (const auto& [k, c] : W.product(i, j))
        sum = multiplier_add(sum, multiplier_scale(c, W.basis[k]));
      if (!(sum == multiplier_product(W.basis[i], W.basis[j])))
        bad.push_back("table wrong at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return bad;
}

}  // namespace gpi
