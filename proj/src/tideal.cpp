#include "gpi/tideal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gpi {

namespace {

// Builds one normal-form monomial key from ordered letters and borders.
MonKey make_key(const std::vector<int>& letters, const std::vector<int>& degs,
                const int* borders) {
  const int n = static_cast<int>(letters.size());
  MonKey key(3 * n + 1);
  for (int t = 0; t <= n; ++t) key[3 * t] = borders[t];
  for (int t = 0; t < n; ++t) {
    key[1 + 3 * t] = letters[t];
    key[2 + 3 * t] = degs[t];
  }
  return key;
}

}  // namespace

Echelon<MonKey> consequences_in_multidegree(const GeneratorSet& S, const ActingAlgebra& W,
                                            const FiniteGroup& G, const MultiDegree& md,
                                            const Limits& limits) {
  Echelon<MonKey> span;
  const int n = md.total();
  if (n == 0) return span;
  const int dw = W.dim();
  std::uint64_t rows = 0;
  std::set<std::map<MonKey, Scalar>> seen;

  for (const auto& f : S.generators) {
    const std::vector<VarId> vars = gp_variables(f);
    const int k = static_cast<int>(vars.size());
    if (k == 0 || k > n) continue;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      // Split the letter sequence: u | p_1 | ... | p_k | v with |p_i| >= 1.
      for (int a = 0; a <= n - k; ++a) {
        std::vector<int> c(k, 1);
        for (;;) {
          const int used = a + std::accumulate(c.begin(), c.end(), 0);
          if (used <= n) {
            const int b = n - used;
            // Border slots: pure-border factors for empty u/v still get one.
            const int bu = a >= 1 ? a + 1 : 1;
            const int bv = b >= 1 ? b + 1 : 1;
            int total_borders = bu + bv;
            for (int i = 0; i < k; ++i) total_borders += c[i] + 1;
            std::vector<int> odo(total_borders, 0);
            for (;;) {
              // Assemble the candidate consequence.
              ++rows;
              if (rows > limits.max_rows)
                throw TruncationError("consequence row limit exceeded (" +
                                      std::to_string(limits.max_rows) + ")");
              int pos = 0, slot = bu;
              bool ok = true;
              std::map<VarId, GenPolynomial> assignment;
              for (int i = 0; i < k && ok; ++i) {
                std::vector<int> letters(perm.begin() + a + pos, perm.begin() + a + pos + c[i]);
                std::vector<int> degs(c[i]);
                for (int t = 0; t < c[i]; ++t) degs[t] = block_degree(md, letters[t]);
                MonKey pk = make_key(letters, degs, odo.data() + slot);
                if (monkey_degree(G, W, pk) != vars[i].first)
                  ok = false;
                else
                  assignment.emplace(vars[i], gp_mono(pk));
                pos += c[i];
                slot += c[i] + 1;
              }
              if (ok) {
                GenPolynomial g = substitute(W, G, f, assignment);
                if (a >= 1) {
                  std::vector<int> letters(perm.begin(), perm.begin() + a);
                  std::vector<int> degs(a);
                  for (int t = 0; t < a; ++t) degs[t] = block_degree(md, letters[t]);
                  g = gp_mul(W, gp_mono(make_key(letters, degs, odo.data())), g);
                } else {
                  g = left_act(W, odo[0], g);
                }
                if (b >= 1) {
                  std::vector<int> letters(perm.begin() + a + pos, perm.end());
                  std::vector<int> degs(b);
                  for (int t = 0; t < b; ++t) degs[t] = block_degree(md, letters[t]);
                  g = gp_mul(W, g, gp_mono(make_key(letters, degs, odo.data() + slot)));
                } else {
                  g = right_act(W, g, odo[slot]);
                }
                if (!g.is_zero() && seen.insert(g.terms).second) span.insert(g.terms);
              }
              int p2 = total_borders;
              while (p2 > 0 && ++odo[p2 - 1] == dw) odo[--p2] = 0;
              if (p2 == 0) break;
            }
          }
          // Next composition of substitution sizes (each >= 1, sum <= n - a).
          int i = k - 1;
          while (i >= 0) {
            ++c[i];
            if (a + std::accumulate(c.begin(), c.end(), 0) <= n) break;
            c[i--] = 1;
          }
          if (i < 0) break;
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return span;
}

std::vector<GenPolynomial> echelon_polynomials(const Echelon<MonKey>& e) {
  std::vector<GenPolynomial> out;
  for (const auto& [p, r] : e.rows()) {
    GenPolynomial g;
    g.terms = r;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GenPolynomial> evaluation_kernel(const GradedAlgebra& A, const ActingAlgebra& W,
                                             const MultiDegree& md) {
  // Evaluate the spanning monomials of P_md and take the nullspace of the
  // evaluation matrix (equations indexed by flattened generic coordinates).
  std::vector<MonKey> monos;
  std::vector<EvalRow> evals;
  auto gens = generic_elements(A, md.total());
  spanning_multidegree(W, md, [&](const MonKey& key) {
    monos.push_back(key);
    GenericElement v = evaluate(A, W, gp_mono(key), [&](const VarId& id) {
      return gens[id.second - 1][id.first];
    });
    evals.push_back(ge_flatten(v));
    return true;
  });
  std::set<EvalCol> cols;
  for (const auto& r : evals)
    for (const auto& [c, v] : r) cols.insert(c);
  Mat m(cols.size(), Vec(monos.size(), Scalar(0)));
  std::size_t ci = 0;
  for (const auto& col : cols) {
    for (std::size_t j = 0; j < evals.size(); ++j) {
      auto it = evals[j].find(col);
      if (it != evals[j].end()) m[ci][j] = it->second;
    }
    ++ci;
  }
  std::vector<GenPolynomial> out;
  for (const auto& x : nullspace(m)) {
    GenPolynomial g;
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (x[j] != 0) g.terms.emplace(monos[j], x[j]);
    out.push_back(std::move(g));
  }
  return out;
}

BasisReport verify_basis(const GeneratorSet& S, const GradedAlgebra& A, const ActingAlgebra& W,
                         int n, const Limits& limits) {
  BasisReport rep;
  rep.n = n;
  rep.pass = true;
  const Int dim_p = spanning_count(W.dim(), n);
  for (const auto& md : compositions(n, A.group.order())) {
    BasisRow row;
    row.md = md;
    row.dim_p = dim_p;
    try {
      Echelon<MonKey> cons = consequences_in_multidegree(S, W, A.group, md, limits);
      row.consequence_dim = cons.rank();
      row.codim = codim_multidegree(A, W, md, limits).rank;
      row.pass = Int(row.consequence_dim) + Int(row.codim) == dim_p;
      if (!row.pass && !rep.witness) {
        for (const auto& g : evaluation_kernel(A, W, md)) {
          if (!cons.contains(g.terms)) {
            rep.witness = g;
            rep.witness_md = md;
            break;
          }
        }
      }
    } catch (const TruncationError& err) {
      row.truncated = true;
      row.pass = false;
      row.note = err.what();
      rep.truncated = true;
    }
    if (!row.pass && !row.truncated) rep.pass = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

NoncontainmentReport noncontainment_witness(const GradedAlgebra& A1, const ActingAlgebra& W1,
                                            const GradedAlgebra& A2, const ActingAlgebra& W2,
                                            const GenPolynomial& f) {
  NoncontainmentReport rep;
  rep.identity_first = is_identity(A1, W1, f);
  rep.identity_second = is_identity(A2, W2, f);
  rep.witness = rep.identity_first != rep.identity_second;
  return rep;
}

}  // namespace gpi
