#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liewreath/varieties.hpp"

using namespace liewreath;

namespace {
const FieldSpec Q = FieldSpec::rationals();

VarietySpec spec_of(const std::vector<std::string>& ids, uint32_t cap) {
  return validate_multihomogeneous(parse_variety(ids, Q, cap));
}

Vec random_alg(std::mt19937_64& rng, const RepPair& p) {
  std::uniform_int_distribution<uint32_t> pick(0, p.algebra.dim() - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  Vec v;
  for (int t = 0; t < 2; ++t)
    vec_axpy(v, Scalar::of_long(coef(rng), Q), vec_unit(pick(rng), Q));
  return v;
}

Vec random_mod(std::mt19937_64& rng, const RepPair& p) {
  std::uniform_int_distribution<uint32_t> pick(0, p.module_dim() - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  Vec v;
  for (int t = 0; t < 3; ++t)
    vec_axpy(v, Scalar::of_long(coef(rng), Q), vec_unit(pick(rng), Q));
  return v;
}

void check_rep_law_random(const RepPair& p, int trials, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Vec a = random_alg(rng, p), b = random_alg(rng, p), m = random_mod(rng, p);
    Vec lhs = vec_sub(p.act_elem(p.act_elem(m, a), b), p.act_elem(p.act_elem(m, b), a));
    Vec rhs = p.act_elem(m, p.algebra.bracket_elems(a, b));
    CHECK(lhs == rhs);
  }
}
}  // namespace

TEST_CASE("free word pair is a representation with word labels") {
  RepPair p = free_word_pair(2, 3, Q);
  p.validate_representation();
  p.algebra.validate();
  CHECK(p.graded_dims() == std::vector<size_t>{1, 2, 4, 8});
  CHECK(p.module_labels[0] == "1");
  REQUIRE(p.cyclic.has_value());
  // e * x1 = x1
  Vec x1 = p.act(*p.cyclic, 0);
  REQUIRE(x1.size() == 1);
  CHECK(p.module_labels[x1.begin()->first] == "x1");
  check_rep_law_random(p, 50, 101);
}

TEST_CASE("free cyclic pair dims: trivial variety") {
  RepPair p = free_cyclic_pair(spec_of({"y*v1"}, 3), 2, 3, Q);
  CHECK(p.graded_dims() == std::vector<size_t>{1, 0, 0, 0});
  p.validate_representation();
}

TEST_CASE("free cyclic pair dims: no identities on one generator") {
  VarietySpec empty;
  empty.multihom_validated = true;
  RepPair p = free_cyclic_pair(empty, 1, 3, Q);
  CHECK(p.graded_dims() == std::vector<size_t>{1, 1, 1, 1});
}

TEST_CASE("free cyclic pair dims: y*v1*v2 on one generator") {
  RepPair p = free_cyclic_pair(spec_of({"y*v1*v2"}, 3), 1, 3, Q);
  CHECK(p.graded_dims() == std::vector<size_t>{1, 1, 0, 0});
  p.validate_representation();
}

TEST_CASE("free cyclic pair dims: y*v1*v2 on two generators") {
  RepPair p = free_cyclic_pair(spec_of({"y*v1*v2"}, 3), 2, 3, Q);
  CHECK(p.graded_dims() == std::vector<size_t>{1, 2, 0, 0});
  check_rep_law_random(p, 50, 102);
}

TEST_CASE("quotient by the zero submodule preserves dims") {
  RepPair p = free_word_pair(2, 2, Q);
  VerbalSubmodule zero;
  zero.by_degree.assign(p.cap + 1, Subspace(p.module_dim()));
  RepPair q = quotient_pair(p, zero);
  CHECK(q.graded_dims() == p.graded_dims());
  CHECK(q.module_labels == p.module_labels);
}

TEST_CASE("quotient by everything positive is the trivial pair") {
  RepPair p = free_word_pair(2, 2, Q);
  VerbalSubmodule all;
  all.by_degree.assign(p.cap + 1, Subspace(p.module_dim()));
  for (uint32_t i = 0; i < p.module_dim(); ++i)
    if (p.module_degrees[i] > 0) all.by_degree[p.module_degrees[i]].insert(vec_unit(i, Q));
  RepPair q = quotient_pair(p, all);
  CHECK(q.graded_dims() == std::vector<size_t>{1, 0, 0});
  for (const auto& m : q.action) CHECK(m.entries().empty());
}

TEST_CASE("quotient rejects non-closed submodules") {
  RepPair p = free_word_pair(1, 2, Q);
  VerbalSubmodule bad;
  bad.by_degree.assign(p.cap + 1, Subspace(p.module_dim()));
  // span{x1} is not closed under right multiplication by x1
  bad.by_degree[1].insert(vec_unit(1, Q));
  CHECK_THROWS_AS(quotient_pair(p, bad), std::invalid_argument);
}

TEST_CASE("subpair generated by everything is the pair itself") {
  RepPair p = free_cyclic_pair(spec_of({"y*v1*v2"}, 2), 2, 2, Q);
  std::vector<Vec> gens;
  for (uint32_t g : p.algebra.generators) gens.push_back(vec_unit(g, Q));
  RepPair s = subpair_generated(p, gens, {*p.cyclic});
  CHECK(s.graded_dims() == p.graded_dims());
  CHECK(s.algebra.dim() == p.algebra.dim());
  s.validate_representation();
}

TEST_CASE("subpair generated by nothing is the span of e") {
  RepPair p = free_cyclic_pair(spec_of({"y*v1*v2"}, 2), 2, 2, Q);
  RepPair s = subpair_generated(p, {}, {*p.cyclic});
  CHECK(s.graded_dims() == std::vector<size_t>{1, 0, 0});
  CHECK(s.algebra.dim() == 0);
}

TEST_CASE("subpair generated by x1+x2 in the y*v1*v2 pair") {
  RepPair p = free_cyclic_pair(spec_of({"y*v1*v2"}, 2), 2, 2, Q);
  Vec y = vec_add(vec_unit(0, Q), vec_unit(1, Q));
  RepPair s = subpair_generated(p, {y}, {*p.cyclic});
  CHECK(s.graded_dims() == std::vector<size_t>{1, 1, 0});
  s.validate_representation();
}

TEST_CASE("extend_hom identity and zero images") {
  RepPair p = free_cyclic_pair(spec_of({"y*v1*v2"}, 3), 2, 3, Q);
  std::vector<Vec> idimg{vec_unit(0, Q), vec_unit(1, Q)};
  PairHom id = extend_hom(p, p, idimg, *p.cyclic);
  for (uint32_t j = 0; j < p.module_dim(); ++j)
    CHECK(id.module_map.get(j, j, Q) == Scalar::one(Q));

  // all generators to zero: collapses onto the trivial subpair
  std::vector<Vec> zimg{Vec{}, Vec{}};
  PairHom z = extend_hom(p, p, zimg, *p.cyclic);
  for (const auto& [rc, v] : z.module_map.entries()) CHECK(rc.second == 0);
}

TEST_CASE("extend_hom rejects images violating the domain identities") {
  RepPair dom = free_cyclic_pair(spec_of({"y*v1"}, 2), 1, 2, Q);
  RepPair cod = free_word_pair(1, 2, Q);
  CHECK_THROWS_WITH_AS(extend_hom(dom, cod, {vec_unit(0, Q)}, *cod.cyclic),
                       doctest::Contains("not a morphism"), std::runtime_error);
}

TEST_CASE("representation law on random triples for constructed pairs") {
  check_rep_law_random(free_word_pair(2, 3, Q), 60, 7);
  check_rep_law_random(free_cyclic_pair(spec_of({"y*v1*v2"}, 3), 2, 3, Q), 60, 8);
  check_rep_law_random(free_cyclic_pair(spec_of({"y*v1"}, 3), 2, 3, Q), 60, 9);
}
