#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liewreath/varieties.hpp"

using namespace liewreath;

namespace {
const FieldSpec Q = FieldSpec::rationals();

Vec random_module_elem(std::mt19937_64& rng, const RepPair& p) {
  std::uniform_int_distribution<uint32_t> pick(0, p.module_dim() - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  Vec v;
  for (int t = 0; t < 3; ++t)
    vec_axpy(v, Scalar::of_long(coef(rng), Q), vec_unit(pick(rng), Q));
  return v;
}

Vec random_algebra_elem(std::mt19937_64& rng, const RepPair& p) {
  std::uniform_int_distribution<uint32_t> pick(0, p.algebra.dim() - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  Vec v;
  for (int t = 0; t < 2; ++t)
    vec_axpy(v, Scalar::of_long(coef(rng), Q), vec_unit(pick(rng), Q));
  return v;
}
}  // namespace

TEST_CASE("identity grammar round-trips") {
  auto id = parse_identity("y*v1*v2", Q, 3);
  CHECK(id.arity == 2);
  CHECK(id.text == "y*v1*v2");
  CHECK(render_identity(parse_identity(" y * v1 * v2 - 2*y*v2 ", Q, 3)) ==
        "y*v1*v2 - 2*y*v2");
  CHECK_THROWS_AS(parse_identity("v1*v2", Q, 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_identity("y*v1 - y*v1", Q, 3), std::invalid_argument);
}

TEST_CASE("multihom_decompose examples") {
  auto parts = multihom_decompose(parse_identity("y*v1 + y*v1*v2", Q, 3));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].text == "y*v1");
  CHECK(parts[1].text == "y*v1*v2");

  auto single = multihom_decompose(parse_identity("y*v1*v2 - y*v2*v1", Q, 3));
  REQUIRE(single.size() == 1);
  CHECK(single[0].text == "y*v1*v2 - y*v2*v1");

  auto sq = multihom_decompose(parse_identity("y*v1*v1 + y*v1", Q, 3));
  CHECK(sq.size() == 2);
}

TEST_CASE("validate_multihomogeneous examples") {
  auto spec = validate_multihomogeneous(parse_variety({"y*v1 + y*v1*v2"}, Q, 3));
  CHECK(spec.multihom_validated);
  REQUIRE(spec.identities.size() == 2);

  auto homog = validate_multihomogeneous(parse_variety({"y*v1*v2"}, Q, 3));
  REQUIRE(homog.identities.size() == 1);
  CHECK(homog.identities[0].text == "y*v1*v2");

  auto empty = validate_multihomogeneous(VarietySpec{});
  CHECK(empty.multihom_validated);
  CHECK(empty.identities.empty());
}

TEST_CASE("verbal submodule of the trivial variety is everything positive") {
  auto spec = validate_multihomogeneous(parse_variety({"y*v1"}, Q, 3));
  RepPair p = free_word_pair(1, 3, Q);
  std::vector<Vec> sub;
  for (uint32_t i = 0; i < p.algebra.dim(); ++i) sub.push_back(vec_unit(i, Q));
  auto vs = verbal_submodule(p, spec, sub);
  CHECK(vs.graded_dims() == std::vector<size_t>{0, 1, 1, 1});
}

TEST_CASE("verbal submodule of y*v1*v2 on one generator at cap 2") {
  auto spec = validate_multihomogeneous(parse_variety({"y*v1*v2"}, Q, 2));
  RepPair p = free_word_pair(1, 2, Q, "y");
  std::vector<Vec> sub;
  for (uint32_t i = 0; i < p.algebra.dim(); ++i) sub.push_back(vec_unit(i, Q));
  auto vs = verbal_submodule(p, spec, sub);
  // degree-2 component = span{y1*y1}
  CHECK(vs.graded_dims() == std::vector<size_t>{0, 0, 1});
  RepPair q = quotient_pair(p, vs);
  CHECK(q.graded_dims() == std::vector<size_t>{1, 1, 0});
}

TEST_CASE("empty variety gives the zero submodule") {
  RepPair p = free_word_pair(2, 3, Q);
  VarietySpec empty;
  empty.multihom_validated = true;
  std::vector<Vec> sub;
  for (uint32_t i = 0; i < p.algebra.dim(); ++i) sub.push_back(vec_unit(i, Q));
  auto vs = verbal_submodule(p, empty, sub);
  CHECK(vs.total_dim() == 0);
  CHECK_THROWS_AS(verbal_submodule(p, VarietySpec{}, sub), std::invalid_argument);
}

TEST_CASE("verbal submodules are action-closed and graded") {
  auto spec = validate_multihomogeneous(parse_variety({"y*v1*v2"}, Q, 3));
  RepPair p = free_word_pair(2, 3, Q);
  std::vector<Vec> sub;
  for (uint32_t i = 0; i < p.algebra.dim(); ++i) sub.push_back(vec_unit(i, Q));
  auto vs = verbal_submodule(p, spec, sub);
  for (const Subspace& block : vs.by_degree)
    for (const Vec& row : block.basis())
      for (uint32_t g : p.algebra.generators) {
        Vec img = p.act(row, g);
        if (!img.empty()) CHECK(vs.member(p, img));
      }
}

TEST_CASE("random substitution values land in the computed submodule") {
  // also exercises gradedness: values of inhomogeneous substitutions split
  // across degrees and each component must be inside
  for (const char* idtext : {"y*v1*v2", "y*v1*v1"}) {
    auto spec = validate_multihomogeneous(parse_variety({idtext}, Q, 3));
    RepPair p = free_word_pair(2, 3, Q);
    std::vector<Vec> sub;
    for (uint32_t i = 0; i < p.algebra.dim(); ++i) sub.push_back(vec_unit(i, Q));
    auto vs = verbal_submodule(p, spec, sub);
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Vec> args{random_algebra_elem(rng, p), random_algebra_elem(rng, p)};
      Vec m = random_module_elem(rng, p);
      Vec val = identity_value(p, spec.identities[0].body, args, m);
      CHECK(vs.member(p, val));
    }
  }
}

TEST_CASE("adding identities never grows the quotient") {
  RepPair p = free_word_pair(2, 3, Q);
  std::vector<Vec> sub;
  for (uint32_t i = 0; i < p.algebra.dim(); ++i) sub.push_back(vec_unit(i, Q));
  auto one = validate_multihomogeneous(parse_variety({"y*v1*v2"}, Q, 3));
  auto two = validate_multihomogeneous(parse_variety({"y*v1*v2", "y*v1*v1*v1"}, Q, 3));
  auto d1 = quotient_pair(p, verbal_submodule(p, one, sub)).graded_dims();
  auto d2 = quotient_pair(p, verbal_submodule(p, two, sub)).graded_dims();
  for (size_t d = 0; d < d1.size(); ++d) CHECK(d2[d] <= d1[d]);
}
