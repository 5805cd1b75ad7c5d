#include "gpi/free_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gpi {

int monkey_letters(const MonKey& k) { return static_cast<int>((k.size() - 1) / 3); }

int monkey_degree(const FiniteGroup& G, const ActingAlgebra& W, const MonKey& k) {
  int deg = W.degree[k[0]];
  const int n = monkey_letters(k);
  for (int t = 0; t < n; ++t) {
    deg = G.mul(deg, k[2 + 3 * t]);          // letter degree
    deg = G.mul(deg, W.degree[k[3 + 3 * t]]);  // next border
  }
  return deg;
}

GenPolynomial gp_zero() { return {}; }

void gp_accumulate(GenPolynomial& acc, const MonKey& k, const Scalar& c) {
  if (c == 0) return;
  auto it = acc.terms.find(k);
  if (it == acc.terms.end()) {
    acc.terms.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) acc.terms.erase(it);
  }
}

GenPolynomial gp_add(const GenPolynomial& a, const GenPolynomial& b) {
  GenPolynomial out = a;
  for (const auto& [k, c] : b.terms) gp_accumulate(out, k, c);
  return out;
}

GenPolynomial gp_sub(const GenPolynomial& a, const GenPolynomial& b) {
  GenPolynomial out = a;
  for (const auto& [k, c] : b.terms) gp_accumulate(out, k, -c);
  return out;
}

GenPolynomial gp_scale(const Scalar& c, const GenPolynomial& a) {
  GenPolynomial out;
  if (c == 0) return out;
  for (const auto& [k, v] : a.terms) out.terms.emplace(k, c * v);
  return out;
}

GenPolynomial gp_var(int j, int k) {
  GenPolynomial out;
  out.terms.emplace(MonKey{0, static_cast<std::int32_t>(j), static_cast<std::int32_t>(k), 0},
                    Scalar(1));
  return out;
}

GenPolynomial gp_mono(const MonKey& k, const Scalar& c) {
  GenPolynomial out;
  if (c != 0) out.terms.emplace(k, c);
  return out;
}

namespace {

// Expands a border-only product sequence and appends normalized terms.
void expand_word(const ActingAlgebra& W, std::vector<RawFactor> word, Scalar coeff,
                 GenPolynomial& out) {
  if (coeff == 0) return;
  // Kernel convention: borders beyond the materialized basis act as zero.
  for (const auto& f : word) {
    if (f.is_border) {
      if (f.w < 0) throw std::invalid_argument("negative border index");
      if (f.w >= W.dim()) return;
    }
  }
  // Multiply out the first adjacent border pair, if any.
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i].is_border && word[i + 1].is_border) {
      const auto& prods = W.product(word[i].w, word[i + 1].w);
      std::vector<RawFactor> rest;
      rest.insert(rest.end(), word.begin(), word.begin() + i);
      rest.push_back(RawFactor::border(0));  // placeholder
      rest.insert(rest.end(), word.begin() + i + 2, word.end());
      for (const auto& [k, c] : prods) {
        rest[i] = RawFactor::border(k);
        expand_word(W, rest, coeff * c, out);
      }
      return;
    }
  }
  // No adjacent borders left: interleave unit borders and emit the key.
  MonKey key;
  bool last_was_border = false;
  int letters = 0;
  for (const auto& f : word) {
    if (f.is_border) {
      key.push_back(f.w);
      last_was_border = true;
    } else {
      if (!last_was_border) key.push_back(0);
      key.push_back(f.var_j);
      key.push_back(f.var_k);
      last_was_border = false;
      ++letters;
    }
  }
  if (!last_was_border) key.push_back(0);
  if (letters == 0)
    throw std::invalid_argument("normalize: word without letters is not a free-algebra element");
  gp_accumulate(out, key, coeff);
}

}  // namespace

GenPolynomial normalize(const ActingAlgebra& W, const std::vector<RawFactor>& word,
                        const Scalar& coeff) {
  GenPolynomial out;
  expand_word(W, word, coeff, out);
  return out;
}

GenPolynomial gp_mul(const ActingAlgebra& W, const GenPolynomial& a, const GenPolynomial& b) {
  GenPolynomial out;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      // Juxtapose, then multiply the joining borders through the table.
      const auto& prods = W.product(ka.back(), kb.front());
      for (const auto& [w, c] : prods) {
        MonKey key(ka.begin(), ka.end() - 1);
        key.push_back(w);
        key.insert(key.end(), kb.begin() + 1, kb.end());
        gp_accumulate(out, key, ca * cb * c);
      }
    }
  return out;
}

GenPolynomial left_act(const ActingAlgebra& W, int w, const GenPolynomial& f) {
  GenPolynomial out;
  if (w < 0) throw std::invalid_argument("negative border index");
  if (w >= W.dim()) return out;
  for (const auto& [k, c] : f.terms) {
    for (const auto& [b, cb] : W.product(w, k.front())) {
      MonKey key = k;
      key.front() = b;
      gp_accumulate(out, key, c * cb);
    }
  }
  return out;
}

GenPolynomial right_act(const ActingAlgebra& W, const GenPolynomial& f, int w) {
  GenPolynomial out;
  if (w < 0) throw std::invalid_argument("negative border index");
  if (w >= W.dim()) return out;
  for (const auto& [k, c] : f.terms) {
    for (const auto& [b, cb] : W.product(k.back(), w)) {
      MonKey key = k;
      key.back() = b;
      gp_accumulate(out, key, c * cb);
    }
  }
  return out;
}

std::optional<int> homogeneous_degree(const FiniteGroup& G, const ActingAlgebra& W,
                                      const GenPolynomial& f) {
  if (f.is_zero()) return G.identity;
  int deg = -1;
  for (const auto& [k, c] : f.terms) {
    int d = monkey_degree(G, W, k);
    if (deg < 0)
      deg = d;
    else if (d != deg)
      return std::nullopt;
  }
  return deg;
}

std::vector<VarId> gp_variables(const GenPolynomial& f) {
  std::vector<VarId> out;
  for (const auto& [k, c] : f.terms) {
    const int n = monkey_letters(k);
    for (int t = 0; t < n; ++t) {
      VarId v{k[2 + 3 * t], k[1 + 3 * t]};
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void gp_accumulate_all(GenPolynomial& acc, const GenPolynomial& more) {
  for (const auto& [k, c] : more.terms) gp_accumulate(acc, k, c);
}

GenPolynomial substitute(const ActingAlgebra& W, const FiniteGroup& G, const GenPolynomial& f,
                         const std::map<VarId, GenPolynomial>& assignment) {
  for (const auto& [v, p] : assignment) {
    auto d = homogeneous_degree(G, W, p);
    if (!p.is_zero() && (!d || *d != v.first))
      throw std::invalid_argument("substitute: assigned polynomial degree mismatch");
  }
  GenPolynomial out;
  for (const auto& [k, c] : f.terms) {
    const int n = monkey_letters(k);
    GenPolynomial acc;
    for (int t = 0; t < n; ++t) {
      VarId v{k[2 + 3 * t], k[1 + 3 * t]};
      auto it = assignment.find(v);
      GenPolynomial x = it != assignment.end() ? it->second : gp_var(v.second, v.first);
      if (t == 0) {
        acc = left_act(W, k[0], x);
      } else {
        acc = gp_mul(W, acc, x);
      }
      acc = right_act(W, acc, k[3 + 3 * t]);
      if (acc.is_zero()) break;
    }
    gp_accumulate_all(out, gp_scale(c, acc));
  }
  return out;
}

int MultiDegree::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

int block_degree(const MultiDegree& md, int i) {
  int acc = 0;
  for (std::size_t l = 0; l < md.counts.size(); ++l) {
    acc += md.counts[l];
    if (i <= acc) return static_cast<int>(l);
  }
  throw std::out_of_range("block_degree: variable index beyond total degree");
}

Int spanning_count(int dimW, int n) {
  Int out = 1;
  for (int i = 0; i <= n; ++i) out *= dimW;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

std::uint64_t spanning_multidegree(const ActingAlgebra& W, const MultiDegree& md,
                                   const std::function<bool(const MonKey&)>& fn,
                                   std::uint64_t start, std::uint64_t stride) {
  const int n = md.total();
  if (n == 0) return 0;
  const int dw = W.dim();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> borders(n + 1, 0);
  std::uint64_t index = 0, visited = 0;
  MonKey key(3 * n + 1);
  do {
    std::fill(borders.begin(), borders.end(), 0);
    for (;;) {
      if (index >= start && (index - start) % stride == 0) {
        for (int t = 0; t <= n; ++t) key[3 * t] = borders[t];
        for (int t = 0; t < n; ++t) {
          key[1 + 3 * t] = perm[t];
          key[2 + 3 * t] = block_degree(md, perm[t]);
        }
        ++visited;
        if (!fn(key)) return visited;
      }
      ++index;
      // Odometer over borders, most significant first.
      int pos = n;
      while (pos >= 0 && ++borders[pos] == dw) borders[pos--] = 0;
      if (pos < 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return visited;
}

}  // namespace gpi
