#ifndef GPI_LINALG_HPP
#define GPI_LINALG_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "gpi/rational.hpp"

namespace gpi {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major, rows of equal length

Mat mat_identity(std::size_t n);
Mat mat_zero(std::size_t rows, std::size_t cols);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_scale(const Scalar& c, const Mat& a);
Vec mat_apply(const Mat& m, const Vec& v);
bool mat_is_zero(const Mat& m);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& v);

/// In-place reduced row echelon form, first-nonzero pivoting. Returns rank.
std::size_t rref(Mat& m);

/// Canonical reduced-echelon basis of the row span (zero rows dropped).
std::vector<Vec> echelon_basis(std::vector<Vec> rows);

/// Basis of {x : m x = 0} (rows of m are equations over columns).
std::vector<Vec> nullspace(const Mat& m);

/// Rank of the span of the given vectors.
std::size_t span_rank(const std::vector<Vec>& rows);

/// Membership test against an echelonized basis.
bool in_span(const std::vector<Vec>& echelon, const Vec& v);

/// Incremental reduced-echelon structure over sparse rows keyed by an
/// ordered column type. Rank is independent of insertion order.
template <typename Key>
class Echelon {
 public:
  using Row = std::map<Key, Scalar>;

  /// Reduces `row` against the stored basis; returns the remainder.
  Row reduce(Row row) const {
    for (auto it = row.begin(); it != row.end();) {
      auto hit = rows_.find(it->first);
      if (hit == rows_.end()) {
        ++it;
        continue;
      }
      Scalar c = it->second;
      for (const auto& [k, v] : hit->second) {
        auto& slot = row[k];
        slot -= c * v;
        if (slot == 0) row.erase(k);
      }
      it = row.upper_bound(hit->first);
    }
    return row;
  }

  /// Inserts a row; returns true if the rank grew.
  bool insert(Row row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    const Key pivot = row.begin()->first;
    Scalar lead = row.begin()->second;
    for (auto& [k, v] : row) v /= lead;
    // Back-substitute into existing rows so the basis stays fully reduced.
    for (auto& [p, r] : rows_) {
      auto hit = r.find(pivot);
      if (hit == r.end()) continue;
      Scalar c = hit->second;
      for (const auto& [k, v] : row) {
        auto& slot = r[k];
        slot -= c * v;
        if (slot == 0) r.erase(k);
      }
    }
    rows_.emplace(pivot, std::move(row));
    return true;
  }

  bool contains(Row row) const { return reduce(std::move(row)).empty(); }

  std::size_t rank() const { return rows_.size(); }

  const std::map<Key, Row>& rows() const { return rows_; }

  /// Merges another echelon structure into this one.
  void merge(const Echelon& other) {
    for (const auto& [p, r] : other.rows_) insert(r);
  }

 private:
  std::map<Key, Row> rows_;  // pivot -> reduced row, leading coefficient 1
};

}  // namespace gpi

#endif
