#include "gpi/linalg.hpp"

#include <stdexcept>

namespace gpi {

Mat mat_identity(std::size_t n) {
  Mat m(n, Vec(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_zero(std::size_t rows, std::size_t cols) { return Mat(rows, Vec(cols, Scalar(0))); }

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw std::invalid_argument("mat_mul: dimension mismatch");
  Mat out(a.size(), Vec(b[0].size(), Scalar(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

Mat mat_scale(const Scalar& c, const Mat& a) {
  Mat out = a;
  for (auto& row : out)
    for (auto& x : row) x *= c;
  return out;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  if (m.empty()) return {};
  if (m[0].size() != v.size()) throw std::invalid_argument("mat_apply: dimension mismatch");
  Vec out(m.size(), Scalar(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
  return out;
}

bool mat_is_zero(const Mat& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec out = a;
  for (auto& x : out) x *= c;
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::size_t rref(Mat& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    Scalar lead = m[rank][col];
    for (auto& x : m[rank]) x /= lead;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Scalar c = m[r][col];
      for (std::size_t j = col; j < cols; ++j) m[r][j] -= c * m[rank][j];
    }
    ++rank;
  }
  m.resize(rank);
  return rank;
}

std::vector<Vec> echelon_basis(std::vector<Vec> rows) {
  rref(rows);
  return rows;
}

std::vector<Vec> nullspace(const Mat& m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  Mat e = m;
  std::size_t rank = rref(e);
  // Identify pivot columns.
  std::vector<long> pivot_of_col(cols, -1);
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t c = 0; c < cols; ++c)
      if (e[r][c] != 0) {
        pivot_of_col[c] = static_cast<long>(r);
        break;
      }
  }
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Vec v(cols, Scalar(0));
    v[c] = 1;
    for (std::size_t cc = 0; cc < cols; ++cc)
      if (pivot_of_col[cc] >= 0) v[cc] = -e[static_cast<std::size_t>(pivot_of_col[cc])][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t span_rank(const std::vector<Vec>& rows) {
  Mat m = rows;
  return rref(m);
}

bool in_span(const std::vector<Vec>& echelon, const Vec& v) {
  Vec r = v;
  for (const auto& row : echelon) {
    std::size_t lead = row.size();
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) {
        lead = j;
        break;
      }
    if (lead == row.size()) continue;
    if (r[lead] == 0) continue;
    Scalar c = r[lead] / row[lead];
    for (std::size_t j = 0; j < row.size(); ++j) r[j] -= c * row[j];
  }
  return vec_is_zero(r);
}

}  // namespace gpi
