#include "gpi/cocharacter.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gpi {

int partition_weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int partition_height(const Partition& p) { return static_cast<int>(p.size()); }

std::vector<Partition> partitions_of(int r) {
  if (r < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(r, r);
  return out;
}

Int irrep_dimension(const Partition& p) {
  const int r = partition_weight(p);
  Int num = 1;
  for (int i = 2; i <= r; ++i) num *= i;
  Int den = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int leg = 0;
      for (std::size_t i2 = i + 1; i2 < p.size(); ++i2)
        if (p[i2] > j) ++leg;
      const int arm = p[i] - j - 1;
      den *= arm + leg + 1;
    }
  return num / den;
}

namespace {

// Cell bookkeeping for one fixed column-major tableau per shape.
struct TableauInfo {
  // per variable index (1-based, global): block, row, column, row representative
  std::vector<int> block, row, col, rep;
  std::vector<std::vector<std::vector<int>>> columns;  // [shape][column] -> variables
};

TableauInfo layout(const std::vector<Partition>& shapes) {
  TableauInfo info;
  info.block.push_back(-1);  // index 0 unused
  info.row.push_back(-1);
  info.col.push_back(-1);
  info.rep.push_back(-1);
  int next = 1;
  for (std::size_t l = 0; l < shapes.size(); ++l) {
    const Partition& p = shapes[l];
    const int width = p.empty() ? 0 : p[0];
    std::vector<std::vector<int>> cols(width);
    std::vector<int> row_rep(p.size(), 0);
    for (int c = 0; c < width; ++c)
      for (std::size_t r = 0; r < p.size(); ++r)
        if (p[r] > c) {
          info.block.push_back(static_cast<int>(l));
          info.row.push_back(static_cast<int>(r));
          info.col.push_back(c);
          info.rep.push_back(0);  // filled below
          cols[c].push_back(next);
          if (c == 0) row_rep[r] = next;
          ++next;
        }
    for (std::size_t v = info.rep.size() - 1; v > 0; --v)
      if (info.block[v] == static_cast<int>(l)) info.rep[v] = row_rep[info.row[v]];
    info.columns.push_back(std::move(cols));
  }
  return info;
}

// Canonical key of a seed monomial up to relabeling variables within their
// tableau columns: borders plus, per letter, (block, column, first-occurrence
// order inside that column).
std::vector<int> seed_key(const MonKey& key, const TableauInfo& info) {
  const int n = monkey_letters(key);
  std::vector<int> out;
  std::map<int, int> occ;   // variable -> order of first occurrence in its column
  std::map<std::pair<int, int>, int> counts;
  for (int t = 0; t <= n; ++t) out.push_back(key[3 * t]);
  for (int t = 0; t < n; ++t) {
    const int v = key[1 + 3 * t];
    auto it = occ.find(v);
    if (it == occ.end()) {
      int& c = counts[{info.block[v], info.col[v]}];
      it = occ.emplace(v, c++).first;
    }
    out.push_back(info.block[v]);
    out.push_back(info.col[v]);
    out.push_back(it->second);
  }
  return out;
}

// Alternate columns, then identify rows, of a single seed monomial.
GenPolynomial symmetrize(const MonKey& seed, const TableauInfo& info) {
  GenPolynomial out;
  const int n = monkey_letters(seed);
  // Flatten all columns of height >= 2; shorter ones permute trivially.
  std::vector<const std::vector<int>*> cols;
  for (const auto& shape_cols : info.columns)
    for (const auto& c : shape_cols)
      if (c.size() >= 2) cols.push_back(&c);
  std::function<void(std::size_t, std::map<int, int>&, int)> rec =
      [&](std::size_t ci, std::map<int, int>& subst, int sign) {
        if (ci == cols.size()) {
          MonKey key = seed;
          for (int t = 0; t < n; ++t) {
            int v = key[1 + 3 * t];
            auto it = subst.find(v);
            if (it != subst.end()) v = it->second;
            key[1 + 3 * t] = info.rep[v];
          }
          gp_accumulate(out, key, Scalar(sign));
          return;
        }
        const auto& col = *cols[ci];
        std::vector<int> perm = col;
        std::sort(perm.begin(), perm.end());
        do {
          int s = 1;
          for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
              if (perm[i] > perm[j]) s = -s;
          for (std::size_t i = 0; i < col.size(); ++i) subst[col[i]] = perm[i];
          rec(ci + 1, subst, sign * s);
        } while (std::next_permutation(perm.begin(), perm.end()));
      };
  std::map<int, int> subst;
  rec(0, subst, 1);
  return out;
}

}  // namespace

std::vector<GenPolynomial> highest_weight_vectors(const std::vector<Partition>& shapes,
                                                  const GradedAlgebra& A, const ActingAlgebra& W) {
  if (static_cast<int>(shapes.size()) != A.group.order())
    throw std::invalid_argument("highest_weight_vectors: one partition per degree block required");
  for (std::size_t l = 0; l < shapes.size(); ++l)
    if (partition_height(shapes[l]) > A.component_dim(static_cast<int>(l))) return {};

  MultiDegree md;
  for (const auto& p : shapes) md.counts.push_back(partition_weight(p));
  const TableauInfo info = layout(shapes);

  std::set<std::vector<int>> seen;
  std::vector<GenPolynomial> out;
  spanning_multidegree(W, md, [&](const MonKey& seed) {
    if (seen.insert(seed_key(seed, info)).second) {
      GenPolynomial g = symmetrize(seed, info);
      if (!g.is_zero()) out.push_back(std::move(g));
    }
    return true;
  });
  return out;
}

std::uint64_t multiplicity(const std::vector<Partition>& shapes, const GradedAlgebra& A,
                           const ActingAlgebra& W, const Limits& limits) {
  int n = 0;
  for (const auto& p : shapes) n += partition_weight(p);
  const Int span = spanning_count(W.dim(), n);
  if (span > Int(limits.max_rows))
    throw TruncationError("multiplicity seed limit exceeded: " + span.str() + " > " +
                          std::to_string(limits.max_rows));
  Echelon<EvalCol> ech;
  const auto assign = generic_assignment(A);
  for (const auto& g : highest_weight_vectors(shapes, A, W)) {
    GenericElement e = evaluate(A, W, g, assign);
    if (!e.is_zero()) ech.insert(ge_flatten(e));
  }
  return ech.rank();
}

std::vector<GenPolynomial> highest_weight_vectors(const Partition& lambda, const Partition& mu,
                                                  const GradedAlgebra& A, const ActingAlgebra& W) {
  return highest_weight_vectors(std::vector<Partition>{lambda, mu}, A, W);
}

std::uint64_t multiplicity(const Partition& lambda, const Partition& mu, const GradedAlgebra& A,
                           const ActingAlgebra& W, const Limits& limits) {
  return multiplicity(std::vector<Partition>{lambda, mu}, A, W, limits);
}

MultiDegree MultiplicityEntry::multidegree() const {
  MultiDegree md;
  for (const auto& p : shapes) md.counts.push_back(partition_weight(p));
  return md;
}

MultiplicityTable cocharacter_table(const GradedAlgebra& A, const ActingAlgebra& W, int n,
                                    const Limits& limits) {
  MultiplicityTable table;
  table.n = n;
  const int s = A.group.order();
  for (const auto& md : compositions(n, s)) {
    std::vector<std::vector<Partition>> choices;
    for (int l = 0; l < s; ++l) choices.push_back(partitions_of(md.counts[l]));
    std::vector<std::size_t> idx(s, 0);
    for (;;) {
      std::vector<Partition> shapes;
      for (int l = 0; l < s; ++l) shapes.push_back(choices[l][idx[l]]);
      std::uint64_t m = multiplicity(shapes, A, W, limits);
      if (m > 0) {
        MultiplicityEntry e;
        e.shapes = shapes;
        e.m = m;
        e.contribution = Int(m);
        for (const auto& p : shapes) {
          e.dims.push_back(irrep_dimension(p));
          e.contribution *= e.dims.back();
        }
        table.entries.push_back(std::move(e));
      }
      int l = s - 1;
      while (l >= 0 && ++idx[l] == choices[l].size()) idx[l--] = 0;
      if (l < 0) break;
    }
  }
  return table;
}

std::vector<std::string> check_table_consistency(const MultiplicityTable& table,
                                                 const GradedAlgebra& A, const ActingAlgebra& W,
                                                 const Limits& limits) {
  std::vector<std::string> out;
  for (const auto& md : compositions(table.n, A.group.order())) {
    Int sum = 0;
    for (const auto& e : table.entries)
      if (e.multidegree().counts == md.counts) sum += e.contribution;
    const Int c = Int(codim_multidegree(A, W, md, limits).rank);
    if (sum != c) {
      std::string s = "multidegree (";
      for (std::size_t i = 0; i < md.counts.size(); ++i)
        s += (i ? "," : "") + std::to_string(md.counts[i]);
      s += "): sum m*d = " + sum.str() + " but codim = " + c.str();
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::string partition_str(const Partition& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "+" : "") + std::to_string(p[i]);
  return s;
}

}  // namespace gpi
