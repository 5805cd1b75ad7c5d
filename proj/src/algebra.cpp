#include "gpi/algebra.hpp"

#include <stdexcept>

namespace gpi {

Vec GradedAlgebra::basis_vec(int i) const {
  Vec v = zero();
  v[i] = 1;
  return v;
}

Vec GradedAlgebra::multiply(const Vec& a, const Vec& b) const {
  if (static_cast<int>(a.size()) != dim || static_cast<int>(b.size()) != dim)
    throw std::invalid_argument("multiply: element dimension mismatch");
  Vec out = zero();
  for (const auto& [ij, terms] : structure) {
    const Scalar& ai = a[ij.first];
    const Scalar& bj = b[ij.second];
    if (ai == 0 || bj == 0) continue;
    Scalar c = ai * bj;
    for (const auto& [k, coef] : terms) out[k] += c * coef;
  }
  return out;
}

Vec GradedAlgebra::project(const Vec& a, int h) const {
  if (h < 0 || h >= group.order()) throw std::out_of_range("project: bad group index");
  Vec out = zero();
  for (int i = 0; i < dim; ++i)
    if (degree[i] == h) out[i] = a[i];
  return out;
}

bool GradedAlgebra::is_homogeneous(const Vec& a, int* deg) const {
  int found = -1;
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    if (found < 0)
      found = degree[i];
    else if (degree[i] != found)
      return false;
  }
  if (found >= 0 && deg) *deg = found;
  return true;
}

Mat GradedAlgebra::left_mult_matrix(const Vec& m) const {
  Mat out = mat_zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec col = multiply(m, basis_vec(j));
    for (int i = 0; i < dim; ++i) out[i][j] = col[i];
  }
  return out;
}

Mat GradedAlgebra::right_mult_matrix(const Vec& m) const {
  Mat out = mat_zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec col = multiply(basis_vec(j), m);
    for (int i = 0; i < dim; ++i) out[i][j] = col[i];
  }
  return out;
}

int GradedAlgebra::component_dim(int g) const {
  int c = 0;
  for (int i = 0; i < dim; ++i)
    if (degree[i] == g) ++c;
  return c;
}

std::vector<int> GradedAlgebra::component_indices(int g) const {
  std::vector<int> out;
  for (int i = 0; i < dim; ++i)
    if (degree[i] == g) out.push_back(i);
  return out;
}

std::vector<std::string> GradedAlgebra::check_axioms() const {
  std::vector<std::string> bad;
  auto gbad = group.check();
  for (auto& s : gbad) bad.push_back("group: " + s);
  if (static_cast<int>(degree.size()) != dim) {
    bad.push_back("degree map size != dim");
    return bad;
  }
  for (int i = 0; i < dim; ++i)
    if (degree[i] < 0 || degree[i] >= group.order()) {
      bad.push_back("degree out of range at basis " + std::to_string(i));
      return bad;
    }
  // Grading compatibility of the structure constants.
  for (const auto& [ij, terms] : structure) {
    int want = group.mul(degree[ij.first], degree[ij.second]);
    for (const auto& [k, coef] : terms)
      if (coef != 0 && degree[k] != want)
        bad.push_back("grading violated: e" + std::to_string(ij.first) + "*e" +
                      std::to_string(ij.second) + " hits degree of e" + std::to_string(k));
  }
  // Associativity over all basis triples.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec eij = multiply(basis_vec(i), basis_vec(j));
      for (int k = 0; k < dim; ++k) {
        Vec lhs = multiply(eij, basis_vec(k));
        Vec rhs = multiply(basis_vec(i), multiply(basis_vec(j), basis_vec(k)));
        if (lhs != rhs)
          bad.push_back("associativity fails at (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  if (unit) {
    if (static_cast<int>(unit->size()) != dim) {
      bad.push_back("unit has wrong dimension");
    } else {
      for (int i = 0; i < dim; ++i) {
        Vec e = basis_vec(i);
        if (multiply(*unit, e) != e || multiply(e, *unit) != e)
          bad.push_back("unit fails on basis " + std::to_string(i));
      }
      int d = -1;
      if (!is_homogeneous(*unit, &d) || (d >= 0 && d != group.identity))
        bad.push_back("unit is not homogeneous of identity degree");
    }
  }
  return bad;
}

std::vector<Vec> GradedAlgebra::radical() const {
  // Trace-form criterion on the unital hull: x is in the radical iff
  // trace(L_x L_y) = 0 for all y. Coordinates 0..dim-1 are A, coordinate dim
  // is the adjoined unit (skipped when A already has one).
  const bool adjoin = !unit.has_value();
  const int n = dim + (adjoin ? 1 : 0);
  auto hull_mul = [&](const Vec& a, const Vec& b) {
    Vec ab(n, Scalar(0));
    Vec a0(a.begin(), a.begin() + dim), b0(b.begin(), b.begin() + dim);
    Vec p = multiply(a0, b0);
    for (int i = 0; i < dim; ++i) ab[i] = p[i];
    if (adjoin) {
      for (int i = 0; i < dim; ++i) ab[i] += a[dim] * b[i] + b[dim] * a[i];
      ab[dim] = a[dim] * b[dim];
    }
    return ab;
  };
  auto left_mat = [&](int j) {
    Vec ej(n, Scalar(0));
    ej[j] = 1;
    Mat m = mat_zero(n, n);
    for (int c = 0; c < n; ++c) {
      Vec ec(n, Scalar(0));
      ec[c] = 1;
      Vec col = hull_mul(ej, ec);
      for (int r = 0; r < n; ++r) m[r][c] = col[r];
    }
    return m;
  };
  std::vector<Mat> L(n);
  for (int j = 0; j < n; ++j) L[j] = left_mat(j);
  // Gram matrix of the trace form.
  Mat gram = mat_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat p = mat_mul(L[i], L[j]);
      Scalar tr(0);
      for (int k = 0; k < n; ++k) tr += p[k][k];
      gram[i][j] = tr;
    }
  std::vector<Vec> ker = nullspace(gram);
  // Restrict to A (the radical never meets the adjoined unit line).
  std::vector<Vec> rad;
  for (auto& v : ker) {
    if (adjoin && v[dim] != 0) continue;
    rad.push_back(Vec(v.begin(), v.begin() + dim));
  }
  // The radical of a graded algebra is graded: split into homogeneous parts.
  std::vector<Vec> homog;
  for (const auto& v : rad)
    for (int g = 0; g < group.order(); ++g) {
      Vec p = project(v, g);
      if (!vec_is_zero(p)) homog.push_back(p);
    }
  std::vector<Vec> split = echelon_basis(homog);
  if (split.size() == span_rank(rad)) return split;
  return echelon_basis(rad);  // non-graded input: keep the raw kernel
}

std::vector<Vec> GradedAlgebra::subalgebra_closure(std::vector<Vec> gens, bool with_unit) const {
  if (with_unit) {
    if (!unit) throw std::invalid_argument("subalgebra_closure: algebra has no unit");
    gens.insert(gens.begin(), *unit);
  }
  std::vector<Vec> basis = echelon_basis(gens);
  for (;;) {
    std::vector<Vec> next = basis;
    for (const auto& a : basis)
      for (const auto& b : basis) next.push_back(multiply(a, b));
    std::vector<Vec> closed = echelon_basis(next);
    if (closed.size() == basis.size()) return closed;
    basis = std::move(closed);
  }
}

}  // namespace gpi
