#include "gpi/generic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace gpi {

std::int32_t xi_id(int dim, int i, int j) {
  return static_cast<std::int32_t>((i - 1) * dim + j);
}

PolyElem pe_const(const Scalar& c) {
  PolyElem p;
  if (c != 0) p.t.emplace(XiKey{}, c);
  return p;
}

PolyElem pe_var(std::int32_t id) {
  PolyElem p;
  p.t.emplace(XiKey{id}, Scalar(1));
  return p;
}

static void pe_accumulate(PolyElem& acc, const XiKey& k, const Scalar& c) {
  if (c == 0) return;
  auto it = acc.t.find(k);
  if (it == acc.t.end()) {
    acc.t.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) acc.t.erase(it);
  }
}

PolyElem pe_add(const PolyElem& a, const PolyElem& b) {
  PolyElem out = a;
  for (const auto& [k, c] : b.t) pe_accumulate(out, k, c);
  return out;
}

PolyElem pe_scale(const Scalar& c, const PolyElem& a) {
  PolyElem out;
  if (c == 0) return out;
  for (const auto& [k, v] : a.t) out.t.emplace(k, c * v);
  return out;
}

PolyElem pe_mul(const PolyElem& a, const PolyElem& b) {
  PolyElem out;
  for (const auto& [ka, ca] : a.t)
    for (const auto& [kb, cb] : b.t) {
      XiKey k;
      std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(k));
      pe_accumulate(out, k, ca * cb);
    }
  return out;
}

Scalar pe_eval(const PolyElem& p, const std::map<std::int32_t, Scalar>& point) {
  Scalar out(0);
  for (const auto& [k, c] : p.t) {
    Scalar term = c;
    for (auto id : k) {
      auto it = point.find(id);
      if (it == point.end()) throw std::invalid_argument("pe_eval: unassigned variable");
      term *= it->second;
      if (term == 0) break;
    }
    out += term;
  }
  return out;
}

bool GenericElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const PolyElem& p) { return p.is_zero(); });
}

GenericElement ge_zero(const GradedAlgebra& A) {
  GenericElement e;
  e.coords.resize(A.dim);
  return e;
}

GenericElement ge_add(const GenericElement& a, const GenericElement& b) {
  GenericElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i)
    out.coords[i] = pe_add(out.coords[i], b.coords[i]);
  return out;
}

GenericElement ge_scale(const Scalar& c, const GenericElement& a) {
  GenericElement out;
  out.coords.reserve(a.coords.size());
  for (const auto& p : a.coords) out.coords.push_back(pe_scale(c, p));
  return out;
}

GenericElement ge_mul(const GradedAlgebra& A, const GenericElement& a, const GenericElement& b) {
  GenericElement out = ge_zero(A);
  for (int i = 0; i < A.dim; ++i) {
    if (a.coords[i].is_zero()) continue;
    for (int j = 0; j < A.dim; ++j) {
      if (b.coords[j].is_zero()) continue;
      auto it = A.structure.find({i, j});
      if (it == A.structure.end()) continue;
      PolyElem prod = pe_mul(a.coords[i], b.coords[j]);
      for (const auto& [k, c] : it->second)
        out.coords[k] = pe_add(out.coords[k], pe_scale(c, prod));
    }
  }
  return out;
}

GenericElement ge_apply(const Mat& m, const GenericElement& a) {
  GenericElement out;
  out.coords.resize(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < a.coords.size(); ++j)
      if (m[i][j] != 0 && !a.coords[j].is_zero())
        out.coords[i] = pe_add(out.coords[i], pe_scale(m[i][j], a.coords[j]));
  return out;
}

GenericElement ge_from_vec(const Vec& v) {
  GenericElement out;
  out.coords.reserve(v.size());
  for (const auto& c : v) out.coords.push_back(pe_const(c));
  return out;
}

GenericElement generic_element(const GradedAlgebra& A, int i, int g) {
  GenericElement e = ge_zero(A);
  for (int j : A.component_indices(g)) e.coords[j] = pe_var(xi_id(A.dim, i, j));
  return e;
}

std::vector<std::vector<GenericElement>> generic_elements(const GradedAlgebra& A, int n) {
  std::vector<std::vector<GenericElement>> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) {
    std::vector<GenericElement> row;
    for (int g = 0; g < A.group.order(); ++g) row.push_back(generic_element(A, i, g));
    out.push_back(std::move(row));
  }
  return out;
}

GenericElement evaluate(const GradedAlgebra& A, const ActingAlgebra& W, const GenPolynomial& f,
                        const GenericAssignment& assign) {
  GenericElement out = ge_zero(A);
  for (const auto& [key, coeff] : f.terms) {
    const int n = monkey_letters(key);
    // Kernel convention: borders beyond the materialized basis act as zero.
    bool kernel = false;
    for (int t = 0; t <= n; ++t)
      if (key[3 * t] >= W.dim()) kernel = true;
    if (kernel) continue;
    GenericElement v = assign({key[2], key[1]});
    for (int t = 0; t < n; ++t) {
      if (t > 0) v = ge_mul(A, v, assign({key[2 + 3 * t], key[1 + 3 * t]}));
      v = ge_apply(W.basis[key[3 + 3 * t]].R, v);
      if (v.is_zero()) break;
    }
    v = ge_apply(W.basis[key[0]].L, v);
    out = ge_add(out, ge_scale(coeff, v));
  }
  return out;
}

GenericAssignment generic_assignment(const GradedAlgebra& A) {
  return [&A](const VarId& v) { return generic_element(A, v.second, v.first); };
}

std::optional<Witness> identity_witness(const GradedAlgebra& A, const ActingAlgebra& W,
                                        const GenPolynomial& f) {
  GenericElement e = evaluate(A, W, f, generic_assignment(A));
  if (e.is_zero()) return std::nullopt;

  // xi variable ids appearing in any assignment for f's variables.
  std::vector<VarId> vars = gp_variables(f);
  std::vector<std::int32_t> ids;
  for (const auto& [k, j] : vars)
    for (int col : A.component_indices(k)) ids.push_back(xi_id(A.dim, j, col));
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  // Deterministic search over integer points: value index v maps to the
  // sequence 0, 1, -1, 2, -2, ...
  auto value = [](int v) {
    return Scalar(v % 2 == 1 ? (v + 1) / 2 : -(v / 2));
  };
  const int max_index = 64;
  for (int m = 1; m <= max_index; ++m) {
    std::vector<int> idx(ids.size(), 0);
    for (;;) {
      // Only points that actually use value index m are new at this level.
      if (std::find(idx.begin(), idx.end(), m) != idx.end()) {
        std::map<std::int32_t, Scalar> point;
        for (std::size_t t = 0; t < ids.size(); ++t) point[ids[t]] = value(idx[t]);
        Vec val(A.dim, Scalar(0));
        bool nonzero = false;
        for (int c = 0; c < A.dim; ++c) {
          val[c] = pe_eval(e.coords[c], point);
          if (val[c] != 0) nonzero = true;
        }
        if (nonzero) {
          Witness w;
          w.value = std::move(val);
          for (const auto& [k, j] : vars) {
            Vec a(A.dim, Scalar(0));
            for (int col : A.component_indices(k)) a[col] = point[xi_id(A.dim, j, col)];
            w.assignment.emplace(VarId{k, j}, std::move(a));
          }
          return w;
        }
      }
      std::size_t pos = idx.size();
      while (pos > 0 && ++idx[pos - 1] > m) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }
  throw std::runtime_error("identity_witness: integer search exhausted");
}

bool is_identity(const GradedAlgebra& A, const ActingAlgebra& W, const GenPolynomial& f) {
  return evaluate(A, W, f, generic_assignment(A)).is_zero();
}

EvalRow ge_flatten(const GenericElement& e) {
  EvalRow row;
  for (std::size_t i = 0; i < e.coords.size(); ++i)
    for (const auto& [k, c] : e.coords[i].t)
      row.emplace(EvalCol{static_cast<std::int32_t>(i), k}, c);
  return row;
}

namespace {

// Evaluates a spanning monomial on precomputed generic elements (variable i
// is assigned gens[i-1][deg]).
GenericElement eval_monomial(const GradedAlgebra& A, const ActingAlgebra& W, const MonKey& key,
                             const std::vector<std::vector<GenericElement>>& gens) {
  const int n = monkey_letters(key);
  GenericElement v = gens[key[1] - 1][key[2]];
  for (int t = 0; t < n; ++t) {
    if (t > 0) v = ge_mul(A, v, gens[key[1 + 3 * t] - 1][key[2 + 3 * t]]);
    v = ge_apply(W.basis[key[3 + 3 * t]].R, v);
    if (v.is_zero()) break;
  }
  return ge_apply(W.basis[key[0]].L, v);
}

// Spanning enumeration with an arbitrary per-variable degree assignment,
// lexicographic (permutation, border) order with striping.
void spanning_assignment(const ActingAlgebra& W, const std::vector<int>& degrees,
                         const std::function<bool(const MonKey&)>& fn, std::uint64_t start,
                         std::uint64_t stride) {
  const int n = static_cast<int>(degrees.size());
  if (n == 0) return;
  const int dw = W.dim();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> borders(n + 1, 0);
  std::uint64_t index = 0;
  MonKey key(3 * n + 1);
  do {
    std::fill(borders.begin(), borders.end(), 0);
    for (;;) {
      if (index >= start && (index - start) % stride == 0) {
        for (int t = 0; t <= n; ++t) key[3 * t] = borders[t];
        for (int t = 0; t < n; ++t) {
          key[1 + 3 * t] = perm[t];
          key[2 + 3 * t] = degrees[perm[t] - 1];
        }
        if (!fn(key)) return;
      }
      ++index;
      int pos = n;
      while (pos >= 0 && ++borders[pos] == dw) borders[pos--] = 0;
      if (pos < 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

CodimResult codim_assignment(const GradedAlgebra& A, const ActingAlgebra& W,
                             const std::vector<int>& degrees, const Limits& limits) {
  const int n = static_cast<int>(degrees.size());
  CodimResult out;
  out.md.counts.assign(A.group.order(), 0);
  for (int d : degrees) {
    if (d < 0 || d >= A.group.order())
      throw std::invalid_argument("codim_assignment: degree index out of range");
    ++out.md.counts[d];
  }
  if (n == 0) return out;
  const Int span = spanning_count(W.dim(), n);
  if (span > Int(limits.max_rows))
    throw TruncationError("row limit exceeded: " + span.str() + " spanning monomials > " +
                          std::to_string(limits.max_rows));

  const int threads = std::max(1, limits.threads);
  std::vector<Echelon<EvalCol>> parts(threads);
  std::vector<std::uint64_t> counts(threads, 0);
  auto work = [&](int tid) {
    auto gens = generic_elements(A, n);
    spanning_assignment(
        W, degrees,
        [&](const MonKey& key) {
          ++counts[tid];
          GenericElement e = eval_monomial(A, W, key, gens);
          if (!e.is_zero()) parts[tid].insert(ge_flatten(e));
          return true;
        },
        tid, threads);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (int t = 1; t < threads; ++t) parts[0].merge(parts[t]);
  out.rank = parts[0].rank();
  out.rows = std::accumulate(counts.begin(), counts.end(), std::uint64_t(0));
  return out;
}

CodimResult codim_multidegree(const GradedAlgebra& A, const ActingAlgebra& W,
                              const MultiDegree& md, const Limits& limits) {
  if (static_cast<int>(md.counts.size()) != A.group.order())
    throw std::invalid_argument("codim_multidegree: multidegree length != group order");
  std::vector<int> degrees;
  for (std::size_t l = 0; l < md.counts.size(); ++l)
    degrees.insert(degrees.end(), md.counts[l], static_cast<int>(l));
  CodimResult out = codim_assignment(A, W, degrees, limits);
  out.md = md;
  return out;
}

std::vector<MultiDegree> compositions(int n, int s) {
  std::vector<MultiDegree> out;
  MultiDegree cur;
  cur.counts.assign(s, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == s - 1) {
      cur.counts[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.counts[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (s > 0) rec(0, n);
  return out;
}

Int multinomial(int n, const std::vector<int>& parts) {
  Int out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  for (int p : parts)
    for (int i = 2; i <= p; ++i) out /= i;
  return out;
}

Int codim_total(const GradedAlgebra& A, const ActingAlgebra& W, int n, const Limits& limits,
                const CodimCache* cache) {
  Int total = 0;
  for (const auto& md : compositions(n, A.group.order())) {
    std::optional<CodimResult> r;
    if (cache && cache->get) r = cache->get(md);
    if (!r) {
      r = codim_multidegree(A, W, md, limits);
      if (cache && cache->put) cache->put(md, *r);
    }
    total += multinomial(n, md.counts) * Int(r->rank);
  }
  return total;
}

std::vector<SeriesEntry> codim_series(const GradedAlgebra& A, const ActingAlgebra& W, int n_max,
                                      const Limits& limits, const CodimCache* cache) {
  std::vector<SeriesEntry> out;
  std::optional<Int> prev;
  for (int n = 1; n <= n_max; ++n) {
    SeriesEntry e;
    e.n = n;
    try {
      e.c = codim_total(A, W, n, limits, cache);
    } catch (const TruncationError& err) {
      e.error = err.what();
    }
    if (e.c) {
      if (prev && *prev != 0) e.ratio = Scalar(*e.c) / Scalar(*prev);
      e.nth_root = std::pow(e.c->convert_to<double>(), 1.0 / n);
    }
    prev = e.c;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace gpi
