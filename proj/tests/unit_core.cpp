#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"

using namespace gpi;
using namespace gpitest;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_scalar("3/4") == Scalar(3) / 4);
  CHECK(parse_scalar("-7") == Scalar(-7));
  CHECK(scalar_str(Scalar(5) / 10) == "1/2");
  CHECK_THROWS(parse_scalar("abc"));
}

TEST_CASE("rref, nullspace, span") {
  Mat m = {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}, {Scalar(0), Scalar(1)}};
  CHECK(rref(m) == 2);
  Mat sing = {{Scalar(1), Scalar(2), Scalar(3)}, {Scalar(2), Scalar(4), Scalar(6)}};
  auto ns = nullspace(sing);
  CHECK(ns.size() == 2);
  for (const auto& v : ns)
    CHECK(vec_is_zero(mat_apply(sing, v)));
  auto eb = echelon_basis({{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}, {Scalar(0), Scalar(3)}});
  CHECK(eb.size() == 2);
  CHECK(in_span(eb, Vec{Scalar(5), Scalar(7)}));
}

TEST_CASE("cyclic group and axiom checker") {
  FiniteGroup g = FiniteGroup::cyclic(4);
  CHECK(g.check().empty());
  CHECK(g.mul(3, 2) == 1);
  CHECK(g.inverse(3) == 1);
  FiniteGroup bad = g;
  bad.table[0][0] = 1;  // break the identity row
  CHECK(!bad.check().empty());
}

TEST_CASE("ut2 builtin algebra structure") {
  Builtin b = builtin("ut2:full");
  const GradedAlgebra& A = b.file.algebra;
  CHECK(A.check_axioms().empty());
  CHECK(A.component_dim(0) == 2);
  CHECK(A.component_dim(1) == 1);
  Vec e11 = A.basis_vec(0), e12 = A.basis_vec(2), e22 = A.basis_vec(1);
  CHECK(A.multiply(e11, e12) == e12);
  CHECK(A.multiply(e12, e22) == e12);
  CHECK(vec_is_zero(A.multiply(e12, e12)));
  auto rad = A.radical();
  REQUIRE(rad.size() == 1);
  CHECK(in_span(echelon_basis(rad), e12));
}

TEST_CASE("radical matches nilpotent-ideal oracle on seed algebras") {
  // t F[t]/t^4 is the radical of the truncated polynomial algebra.
  GradedAlgebra A = seed_truncated_poly();
  auto rad = echelon_basis(A.radical());
  CHECK(rad.size() == 3);
  for (int i = 1; i < 4; ++i) CHECK(in_span(rad, A.basis_vec(i)));
  // M2(F) is semisimple.
  CHECK(seed_m2().radical().empty());
  // the zero-product algebra is its own radical
  CHECK(echelon_basis(seed_zero_product().radical()).size() == 4);
}

TEST_CASE("subalgebra closure") {
  Builtin b = builtin("ut2:full");
  const GradedAlgebra& A = b.file.algebra;
  auto closure = A.subalgebra_closure({A.basis_vec(0), A.basis_vec(1)}, false);
  CHECK(closure.size() == 2);
  // e11 * (e22 + e12) = e12 enters the closure
  closure = A.subalgebra_closure({A.basis_vec(0), vec_add(A.basis_vec(1), A.basis_vec(2))}, false);
  CHECK(closure.size() == 3);
}

TEST_CASE("multiplier algebra of ut2") {
  Builtin b = builtin("ut2:full");
  const GradedAlgebra& A = b.file.algebra;
  auto basis = multiplier_algebra(A);
  CHECK(basis.size() == 3);
  auto graded = grading_of_M(A);
  CHECK(graded[0].size() == 2);
  CHECK(graded[1].size() == 1);
  for (const auto& m : basis) CHECK(is_multiplier(A, m));
}

TEST_CASE("inner multipliers give a graded isomorphism for ut2") {
  Builtin b = builtin("ut2:full");
  const GradedAlgebra& A = b.file.algebra;
  std::vector<Multiplier> inner;
  std::vector<Vec> flat;
  for (int i = 0; i < A.dim; ++i) {
    inner.push_back(inner_multiplier(A, A.basis_vec(i)));
    CHECK(is_multiplier(A, inner.back()));
    CHECK(multiplier_degree(A, inner.back()) == A.degree[i]);
    flat.push_back(multiplier_flatten(inner.back()));
  }
  // bijective onto M(A): 3 independent images, dim M(A) = 3
  CHECK(span_rank(flat) == 3);
  // multiplicative: (R_a, L_a)(R_b, L_b) = (R_ab, L_ab) on all basis pairs
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      Multiplier prod = multiplier_product(inner[i], inner[j]);
      Multiplier expect = inner_multiplier(A, A.multiply(A.basis_vec(i), A.basis_vec(j)));
      CHECK(prod == expect);
    }
}

TEST_CASE("acting algebras of the four builtins") {
  for (const auto& name : builtin_names()) {
    Builtin b = builtin(name);
    CHECK(check_acting_algebra(b.file.algebra, b.action).empty());
  }
  CHECK(builtin("ut2:full").action.dim() == 3);
  CHECK(builtin("ut2:D").action.dim() == 2);
  CHECK(builtin("ut2:C").action.dim() == 2);
  CHECK(builtin("ut2:F").action.dim() == 1);
}

TEST_CASE("property: random graded algebras satisfy the axioms") {
  for (int i = 0; i < 200; ++i) {
    GradedAlgebra A = random_graded_algebra();
    CHECK(A.check_axioms().empty());
  }
}

TEST_CASE("property: projection identities and multiplier reconstruction") {
  for (int i = 0; i < 200; ++i) {
    GradedAlgebra A = random_graded_algebra();
    Multiplier m = random_multiplier(A);
    REQUIRE(is_multiplier(A, m));
    const int s = A.group.order();
    auto proj = [&](int h) {
      Mat p = mat_zero(A.dim, A.dim);
      for (int k : A.component_indices(h)) p[k][k] = Scalar(1);
      return p;
    };
    Multiplier sum = multiplier_zero(A);
    for (int g = 0; g < s; ++g) {
      Multiplier mg = grade_component(A, m, g);
      // R_g = sum_h pi_{hg} R pi_h ; L_g = sum_h pi_{gh} L pi_h
      Mat r = mat_zero(A.dim, A.dim), l = mat_zero(A.dim, A.dim);
      for (int h = 0; h < s; ++h) {
        r = mat_add(r, mat_mul(proj(A.group.mul(h, g)), mat_mul(m.R, proj(h))));
        l = mat_add(l, mat_mul(proj(A.group.mul(g, h)), mat_mul(m.L, proj(h))));
      }
      CHECK(mg.R == r);
      CHECK(mg.L == l);
      sum = multiplier_add(sum, mg);
    }
    CHECK(sum == m);
  }
}

TEST_CASE("property: streaming rank is insertion-order invariant") {
  for (int i = 0; i < 200; ++i) {
    const int cols = rnd_int(3, 8), rows = rnd_int(2, 10);
    std::vector<std::map<int, Scalar>> rs;
    for (int r = 0; r < rows; ++r) {
      std::map<int, Scalar> row;
      for (int c = 0; c < cols; ++c) {
        Scalar v = rnd_scalar();
        if (v != 0) row[c] = v;
      }
      rs.push_back(std::move(row));
    }
    Echelon<int> a, b;
    for (const auto& r : rs) a.insert(r);
    std::shuffle(rs.begin(), rs.end(), rng());
    for (const auto& r : rs) b.insert(r);
    CHECK(a.rank() == b.rank());
    for (const auto& [p, r] : a.rows()) CHECK(b.contains(r));
  }
}
