#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>

#include "doctest.h"
#include "gpi/parser.hpp"
#include "helpers.hpp"

using namespace gpi;
using namespace gpitest;

namespace {
Builtin FULL = builtin("ut2:full");
const GradedAlgebra& A() { return FULL.file.algebra; }
const ActingAlgebra& W() { return FULL.action; }
}  // namespace

TEST_CASE("normalize merges borders and applies the kernel convention") {
  // w1 * w1 = w1 (e22 idempotent) around a letter
  GenPolynomial f = normalize(W(), {RawFactor::border(1), RawFactor::border(1),
                                    RawFactor::letter(1, 1), RawFactor::border(0)});
  REQUIRE(f.terms.size() == 1);
  CHECK(f.terms.begin()->first == MonKey{1, 1, 1, 0});
  // border index beyond the acting basis kills the term
  CHECK(normalize(W(), {RawFactor::border(7), RawFactor::letter(1, 0)}).is_zero());
  // w2 * w1 = e12 e22 = e12 = w2
  GenPolynomial g = normalize(W(), {RawFactor::border(2), RawFactor::border(1),
                                    RawFactor::letter(1, 0)});
  REQUIRE(g.terms.size() == 1);
  CHECK(g.terms.begin()->first == MonKey{2, 1, 0, 0});
  // letter-free words are rejected
  CHECK_THROWS(normalize(W(), {RawFactor::border(1)}));
}

TEST_CASE("property: normal form is idempotent") {
  for (int i = 0; i < 200; ++i) {
    GenPolynomial f = random_polynomial(W());
    for (const auto& [k, c] : f.terms) {
      std::vector<RawFactor> word;
      const int n = monkey_letters(k);
      word.push_back(RawFactor::border(k[0]));
      for (int t = 0; t < n; ++t) {
        word.push_back(RawFactor::letter(k[1 + 3 * t], k[2 + 3 * t]));
        word.push_back(RawFactor::border(k[3 + 3 * t]));
      }
      CHECK(normalize(W(), word) == gp_mono(k));
    }
  }
}

TEST_CASE("product and bimodule action") {
  GenPolynomial y1 = gp_var(1, 0), z1 = gp_var(1, 1);
  GenPolynomial p = gp_mul(W(), y1, z1);
  REQUIRE(p.terms.size() == 1);
  CHECK(p.terms.begin()->first == MonKey{0, 1, 0, 0, 1, 1, 0});
  CHECK(left_act(W(), 1, gp_mul(W(), y1, z1)) ==
        gp_mul(W(), left_act(W(), 1, y1), z1));
  CHECK(homogeneous_degree(A().group, W(), p) == 1);
  CHECK(!homogeneous_degree(A().group, W(), gp_add(y1, z1)).has_value());
}

TEST_CASE("substitution is a graded endomorphism") {
  GenPolynomial f = gp_mul(W(), gp_var(1, 0), gp_var(2, 0));
  std::map<VarId, GenPolynomial> phi;
  phi[{0, 1}] = gp_mul(W(), gp_var(3, 0), gp_var(4, 0));
  GenPolynomial g = substitute(W(), A().group, f, phi);
  CHECK(g == gp_mul(W(), gp_mul(W(), gp_var(3, 0), gp_var(4, 0)), gp_var(2, 0)));
  // degree mismatch rejected
  std::map<VarId, GenPolynomial> bad;
  bad[{0, 1}] = gp_var(3, 1);
  CHECK_THROWS(substitute(W(), A().group, f, bad));
}

TEST_CASE("spanning enumeration counts (dim W)^(n+1) n!") {
  for (int n = 1; n <= 3; ++n) {
    MultiDegree md{{n, 0}};
    std::uint64_t count = 0;
    spanning_multidegree(W(), md, [&](const MonKey&) {
      ++count;
      return true;
    });
    CHECK(Int(count) == spanning_count(W().dim(), n));
    // striping partitions the enumeration
    std::uint64_t striped = 0;
    for (int s = 0; s < 3; ++s)
      spanning_multidegree(W(), md, [&](const MonKey&) {
        ++striped;
        return true;
      }, s, 3);
    CHECK(striped == count);
  }
}

TEST_CASE("generic elements and evaluation examples") {
  GenericElement xi = generic_element(A(), 1, 0);
  CHECK(xi.coords[0].t.size() == 1);
  CHECK(xi.coords[1].t.size() == 1);
  CHECK(xi.coords[2].is_zero());
  // w1*z is an identity of the full action, y1 is not
  CHECK(is_identity(A(), W(), parse_polynomial(W(), "w1*z1")));
  CHECK(is_identity(A(), W(), parse_polynomial(W(), "y1*y2 - y2*y1")));
  auto w = identity_witness(A(), W(), parse_polynomial(W(), "y1"));
  REQUIRE(w.has_value());
  CHECK(!vec_is_zero(w->value));
  CHECK(A().is_homogeneous(w->assignment.at({0, 1})));
}

TEST_CASE("property: evaluation is linear") {
  const auto assign = generic_assignment(A());
  for (int i = 0; i < 200; ++i) {
    GenPolynomial f = random_polynomial(W()), g = random_polynomial(W());
    Scalar c = rnd_scalar();
    CHECK(evaluate(A(), W(), gp_add(f, g), assign) ==
          ge_add(evaluate(A(), W(), f, assign), evaluate(A(), W(), g, assign)));
    CHECK(evaluate(A(), W(), gp_scale(c, f), assign) ==
          ge_scale(c, evaluate(A(), W(), f, assign)));
  }
}

TEST_CASE("codimension examples against closed forms") {
  Limits lim;
  CHECK(codim_multidegree(A(), W(), MultiDegree{{1, 0}}, lim).rank == 4);
  CHECK(codim_multidegree(A(), W(), MultiDegree{{0, 1}}, lim).rank == 1);
  CHECK(codim_multidegree(A(), W(), MultiDegree{{2, 0}}, lim).rank == 6);
  CHECK(codim_multidegree(A(), W(), MultiDegree{{1, 1}}, lim).rank == 2);
  CHECK(codim_multidegree(A(), W(), MultiDegree{{0, 2}}, lim).rank == 0);
  CHECK(codim_total(A(), W(), 2, lim) == 10);
  // permutation invariance: any degree assignment with the same counts
  CHECK(codim_assignment(A(), W(), {1, 0, 0}, lim).rank ==
        codim_assignment(A(), W(), {0, 0, 1}, lim).rank);
  // threading gives the same rank
  Limits threaded;
  threaded.threads = 3;
  CHECK(codim_multidegree(A(), W(), MultiDegree{{3, 0}}, threaded).rank ==
        codim_multidegree(A(), W(), MultiDegree{{3, 0}}, lim).rank);
  // truncation
  Limits tiny;
  tiny.max_rows = 5;
  CHECK_THROWS_AS(codim_multidegree(A(), W(), MultiDegree{{2, 0}}, tiny), TruncationError);
}

TEST_CASE("multinomial weighting") {
  CHECK(multinomial(3, {2, 1}) == 3);
  CHECK(multinomial(5, {5, 0}) == 1);
  CHECK(compositions(3, 2).size() == 4);
}

TEST_CASE("parser round trips and rejects garbage") {
  CHECK(parse_polynomial(W(), "w1*y1 - y1*w1") ==
        gp_sub(left_act(W(), 1, gp_var(1, 0)), right_act(W(), gp_var(1, 0), 1)));
  CHECK(parse_polynomial(W(), "3/2*z1") == gp_scale(Scalar(3) / 2, gp_var(1, 1)));
  CHECK(parse_polynomial(W(), "(y1 + y2)*z1") ==
        gp_mul(W(), gp_add(gp_var(1, 0), gp_var(2, 0)), gp_var(1, 1)));
  // border index past the acting basis is the zero map
  CHECK(parse_polynomial(W(), "w9*z1").is_zero());
  CHECK_THROWS_AS(parse_polynomial(W(), "y1 +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(W(), "q1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(W(), "w1"), ParseError);  // border-only
  try {
    parse_polynomial(W(), "y1 @ y2");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("algebra file round trip and cache") {
  AlgebraFile f = FULL.file;
  const std::string text = algebra_json(f);
  AlgebraFile g = parse_algebra_json(text);
  CHECK(algebra_json(g) == text);
  CHECK(sha256_hex(text) == sha256_hex(text));
  CHECK(sha256_hex(text) != sha256_hex(text + " "));

  const std::string dir = (std::filesystem::temp_directory_path() / "gpi_cache_test").string();
  std::filesystem::remove_all(dir);
  FileCache cache(dir, sha256_hex(text));
  MultiDegree md{{2, 0}};
  CHECK(!cache.get(md).has_value());
  CodimResult r = codim_multidegree(A(), W(), md);
  cache.put(md, r);
  auto back = cache.get(md);
  REQUIRE(back.has_value());
  CHECK(back->rank == r.rank);
  CHECK(back->rows == r.rows);
  std::filesystem::remove_all(dir);
}

TEST_CASE("invalid definitions are rejected") {
  CHECK_THROWS(parse_algebra_json("{\"group\":{}}"));
  // non-associative structure
  std::string text = builtin("ut2:full").canonical_json;
  auto pos = text.find("[0,2,2,\"1\"]");
  REQUIRE(pos != std::string::npos);
  std::string broken = text;
  broken.replace(pos, 11, "[0,2,2,\"2\"]");
  CHECK_THROWS(parse_algebra_json(broken));
}
