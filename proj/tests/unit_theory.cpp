#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gpi/exponent.hpp"
#include "gpi/parser.hpp"
#include "gpi/tideal.hpp"
#include "helpers.hpp"

using namespace gpi;
using namespace gpitest;

namespace {
GeneratorSet gens(const ActingAlgebra& W, std::initializer_list<const char*> texts) {
  GeneratorSet S;
  for (const char* t : texts) S.generators.push_back(parse_polynomial(W, t));
  return S;
}
}  // namespace

TEST_CASE("consequence space examples") {
  Builtin b = builtin("ut2:full");
  const auto& A = b.file.algebra;
  const auto& W = b.action;
  // {z w1 - z, w1 z} generates z1 z2 in multidegree (0,2)
  auto S = gens(W, {"z1*w1 - z1", "w1*z1"});
  auto cons = consequences_in_multidegree(S, W, A.group, MultiDegree{{0, 2}});
  CHECK(cons.contains(gp_mul(W, gp_var(1, 1), gp_var(2, 1)).terms));
  // {w1 z} generates w2 z = e12 z in multidegree (0,1)
  auto S2 = gens(W, {"w1*z1"});
  auto cons2 = consequences_in_multidegree(S2, W, A.group, MultiDegree{{0, 1}});
  CHECK(cons2.contains(left_act(W, 2, gp_var(1, 1)).terms));
  // empty set spans nothing
  CHECK(consequences_in_multidegree(GeneratorSet{}, W, A.group, MultiDegree{{2, 0}}).rank() == 0);
}

TEST_CASE("every enumerated consequence is an identity") {
  Builtin b = builtin("ut2:full");
  const auto& A = b.file.algebra;
  const auto& W = b.action;
  auto S = gens(W, {"y1*y2 - y2*y1", "w1*y1 - y1*w1", "z1*w1 - z1", "w1*z1"});
  for (const auto& f : S.generators) CHECK(is_identity(A, W, f));
  for (const auto& md : compositions(2, 2)) {
    auto cons = consequences_in_multidegree(S, W, A.group, md);
    for (const auto& g : echelon_polynomials(cons)) CHECK(is_identity(A, W, g));
  }
}

TEST_CASE("consequence monotonicity under generator growth") {
  Builtin b = builtin("ut2:C");
  const auto& A = b.file.algebra;
  const auto& W = b.action;
  auto small = gens(W, {"y1*y2 - y2*y1", "z1*z2"});
  auto big = gens(W, {"y1*y2 - y2*y1", "z1*z2", "z1*w1", "w1*z1"});
  for (const auto& md : compositions(2, 2)) {
    auto cs = consequences_in_multidegree(small, W, A.group, md);
    auto cb = consequences_in_multidegree(big, W, A.group, md);
    CHECK(cs.rank() <= cb.rank());
    for (const auto& g : echelon_polynomials(cs)) CHECK(cb.contains(g.terms));
  }
}

TEST_CASE("lemma-style endomorphism images stay inside the consequence space") {
  Builtin b = builtin("ut2:full");
  const auto& A = b.file.algebra;
  const auto& W = b.action;
  auto S = gens(W, {"y1*y2 - y2*y1", "w1*y1 - y1*w1", "z1*w1 - z1", "w1*z1"});
  auto cons = consequences_in_multidegree(S, W, A.group, MultiDegree{{1, 1}});
  for (const char* base : {"w2*z1", "z1*w2"}) {
    GenPolynomial f = parse_polynomial(W, base);
    // phi1: z -> y z ; phi2: z -> z y, using the block-order variable names
    // of multidegree (1,1): y is variable 1, z is variable 2.
    std::map<VarId, GenPolynomial> phi1, phi2;
    phi1[{1, 1}] = gp_mul(W, gp_var(1, 0), gp_var(2, 1));
    phi2[{1, 1}] = gp_mul(W, gp_var(2, 1), gp_var(1, 0));
    for (const auto& phi : {phi1, phi2}) {
      GenPolynomial image = substitute(W, A.group, f, phi);
      CHECK(cons.contains(image.terms));
    }
  }
}

TEST_CASE("verify_basis passes for the four builtin generator sets at n <= 3") {
  struct Case {
    const char* name;
    std::vector<const char*> gens;
  };
  const std::vector<Case> cases = {
      {"ut2:full", {"y1*y2 - y2*y1", "w1*y1 - y1*w1", "z1*w1 - z1", "w1*z1"}},
      {"ut2:D", {"y1*y2 - y2*y1", "w1*y1 - y1*w1", "z1*w1 - z1", "w1*z1"}},
      {"ut2:C", {"y1*y2 - y2*y1", "z1*z2", "z1*w1", "w1*z1"}},
      {"ut2:F", {"y1*y2 - y2*y1", "z1*z2"}},
  };
  for (const auto& c : cases) {
    Builtin b = builtin(c.name);
    GeneratorSet S;
    for (const char* t : c.gens) S.generators.push_back(parse_polynomial(b.action, t));
    for (int n = 1; n <= 3; ++n) {
      BasisReport rep = verify_basis(S, b.file.algebra, b.action, n);
      CHECK(rep.pass);
      CHECK(!rep.truncated);
    }
  }
}

TEST_CASE("dropping a generator fails with a kernel witness") {
  Builtin b = builtin("ut2:full");
  auto S = gens(b.action, {"y1*y2 - y2*y1", "w1*y1 - y1*w1", "z1*w1 - z1"});
  BasisReport rep = verify_basis(S, b.file.algebra, b.action, 1);
  CHECK(!rep.pass);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness_md->counts == std::vector<int>{0, 1});
  // the witness is a true identity outside the consequence span
  CHECK(is_identity(b.file.algebra, b.action, *rep.witness));
  auto cons = consequences_in_multidegree(S, b.action, b.file.algebra.group, *rep.witness_md);
  CHECK(!cons.contains(rep.witness->terms));
}

TEST_CASE("noncontainment witnesses") {
  Builtin D = builtin("ut2:D"), F = builtin("ut2:F");
  // the two actions share the y/z language; w1 differs (absent under F)
  auto sepDF = parse_polynomial(D.action, "z1*w1 - z1");
  auto rep = noncontainment_witness(D.file.algebra, D.action, F.file.algebra, F.action, sepDF);
  CHECK(rep.identity_first);
  CHECK(!rep.identity_second);
  CHECK(rep.witness);
  auto sepFD = parse_polynomial(D.action, "z1*w1");
  rep = noncontainment_witness(F.file.algebra, F.action, D.file.algebra, D.action, sepFD);
  CHECK(rep.identity_first);
  CHECK(!rep.identity_second);
  CHECK(rep.witness);
  auto both = parse_polynomial(D.action, "y1*y2 - y2*y1");
  rep = noncontainment_witness(D.file.algebra, D.action, F.file.algebra, F.action, both);
  CHECK(!rep.witness);
}

TEST_CASE("partitions and hook lengths") {
  CHECK(partitions_of(0) == std::vector<Partition>{{}});
  CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(partitions_of(5).size() == 7);
  CHECK(irrep_dimension({}) == 1);
  CHECK(irrep_dimension({4}) == 1);
  CHECK(irrep_dimension({2, 1}) == 2);
  CHECK(irrep_dimension({2, 2}) == 2);
  CHECK(irrep_dimension({3, 2}) == 5);
  for (int r = 0; r <= 6; ++r)
    for (const auto& p : partitions_of(r))
      CHECK(irrep_dimension(p) == standard_tableau_count(p));
}

TEST_CASE("two-row dimension identity") {
  // sum over 2p+q = n of (q+1) d_{(p+q,p)} = 2^n - n - 1
  for (int n = 2; n <= 10; ++n) {
    Int sum = 0;
    for (int p = 1; 2 * p <= n; ++p) {
      const int q = n - 2 * p;
      sum += Int(q + 1) * irrep_dimension({p + q, p});
    }
    Int expect = 1;
    for (int i = 0; i < n; ++i) expect *= 2;
    expect -= n + 1;
    CHECK(sum == expect);
  }
}

TEST_CASE("highest weight vector construction") {
  Builtin b = builtin("ut2:full");
  const auto& A = b.file.algebra;
  const auto& W = b.action;
  // lambda = (2), mu = {}: identification collapses to y^2 seeds
  auto hw = highest_weight_vectors(Partition{2}, Partition{}, A, W);
  CHECK(!hw.empty());
  for (const auto& g : hw)
    for (const auto& [k, c] : g.terms) {
      CHECK(monkey_letters(k) == 2);
      CHECK(k[1] == k[4]);  // both letters are the same repeated variable
    }
  // height guard: three-row lambda exceeds dim A^0 = 2
  CHECK(highest_weight_vectors(Partition{1, 1, 1}, Partition{}, A, W).empty());
  // alternating columns appear for two-row shapes
  auto hw2 = highest_weight_vectors(Partition{1, 1}, Partition{}, A, W);
  CHECK(!hw2.empty());
  bool has_two_terms = false;
  for (const auto& g : hw2) has_two_terms |= g.terms.size() >= 2;
  CHECK(has_two_terms);
  // every vanishing highest weight vector is an identity
  for (const auto& g : hw2)
    if (evaluate(A, W, g, generic_assignment(A)).is_zero()) CHECK(is_identity(A, W, g));
}

TEST_CASE("multiplicity values at small degree") {
  Builtin full = builtin("ut2:full");
  CHECK(multiplicity(Partition{2}, Partition{}, full.file.algebra, full.action) == 5);
  CHECK(multiplicity(Partition{1}, Partition{1}, full.file.algebra, full.action) == 2);
  CHECK(multiplicity(Partition{}, Partition{2}, full.file.algebra, full.action) == 0);
  Builtin D = builtin("ut2:D");
  CHECK(multiplicity(Partition{2}, Partition{}, D.file.algebra, D.action) == 2);
  Builtin C = builtin("ut2:C");
  CHECK(multiplicity(Partition{2}, Partition{}, C.file.algebra, C.action) == 4);
  Builtin F = builtin("ut2:F");
  CHECK(multiplicity(Partition{2}, Partition{}, F.file.algebra, F.action) == 1);
}

TEST_CASE("cocharacter tables are consistent with codimensions") {
  for (const auto& name : builtin_names()) {
    Builtin b = builtin(name);
    for (int n = 1; n <= 3; ++n) {
      auto table = cocharacter_table(b.file.algebra, b.action, n);
      CHECK(check_table_consistency(table, b.file.algebra, b.action).empty());
      for (const auto& e : table.entries) {
        CHECK(partition_height(e.shapes[0]) <= b.file.algebra.component_dim(0));
        CHECK(partition_height(e.shapes[1]) <= b.file.algebra.component_dim(1));
      }
    }
  }
}

TEST_CASE("wedderburn validation and admissible subalgebras") {
  Builtin b = builtin("ut2:full");
  const auto& A = b.file.algebra;
  REQUIRE(b.file.wedderburn.has_value());
  const WedderburnData& wd = *b.file.wedderburn;
  CHECK(validate(wd, A).empty());
  auto adm = admissible_subalgebras(wd, A);
  REQUIRE(adm.size() == 3);  // {1}, {2}, {1,2}
  CHECK(adm.back().indices == std::vector<int>{0, 1});
  CHECK(adm.back().dimension == 2);
  CHECK(graded_exponent(wd, A) == 2);

  WedderburnData broken = wd;
  broken.radical.clear();
  CHECK(!validate(broken, A).empty());
}

TEST_CASE("semisimple and trivial exponents") {
  // diagonal 2x2: two components, zero radical -> only singletons admissible
  GradedAlgebra D;
  D.group = FiniteGroup::trivial();
  D.dim = 2;
  D.degree = {0, 0};
  D.structure[{0, 0}] = {{0, Scalar(1)}};
  D.structure[{1, 1}] = {{1, Scalar(1)}};
  D.unit = Vec{Scalar(1), Scalar(1)};
  WedderburnData wd;
  wd.components = {{D.basis_vec(0)}, {D.basis_vec(1)}};
  CHECK(validate(wd, D).empty());
  auto adm = admissible_subalgebras(wd, D);
  CHECK(adm.size() == 2);
  CHECK(graded_exponent(wd, D) == 1);

  GradedAlgebra F1;
  F1.group = FiniteGroup::trivial();
  F1.dim = 1;
  F1.degree = {0};
  F1.structure[{0, 0}] = {{0, Scalar(1)}};
  F1.unit = Vec{Scalar(1)};
  WedderburnData wf{{{F1.basis_vec(0)}}, {}};
  CHECK(graded_exponent(wf, F1) == 1);
}

TEST_CASE("growth crosscheck on the F action") {
  Builtin b = builtin("ut2:F");
  GrowthReport rep = growth_crosscheck(b.file.algebra, b.action, *b.file.wedderburn, 5);
  CHECK(rep.d == 2);
  CHECK(rep.pass);
  CHECK(rep.fitted_u <= 1);
}
