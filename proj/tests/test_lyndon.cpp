#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liewreath/lyndon.hpp"

using namespace liewreath;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// Independent oracle: the span of ALL degree-d bracketings of the
// generators, expanded in the free associative algebra. Never touches the
// Lyndon machinery.
std::vector<std::vector<AssocElement>> all_bracketings(const AssocContext& ctx,
                                                       uint32_t maxdeg) {
  std::vector<std::vector<AssocElement>> by_deg(maxdeg + 1);
  for (uint32_t g = 0; g < ctx.gens; ++g)
    by_deg[1].push_back(AssocElement::generator(ctx, g));
  for (uint32_t d = 2; d <= maxdeg; ++d)
    for (uint32_t i = 1; i < d; ++i)
      for (const auto& a : by_deg[i])
        for (const auto& b : by_deg[d - i]) by_deg[d].push_back(commutator(a, b));
  return by_deg;
}

uint32_t bracket_span_rank(uint32_t gens, uint32_t d) {
  AssocContext ctx(gens, d, Q);
  auto trees = all_bracketings(ctx, d);
  // word coordinates of degree d
  std::map<Word, uint32_t> col;
  for (const auto& e : trees[d])
    for (const auto& [w, c] : e.terms())
      if (!col.count(w)) col.emplace(w, static_cast<uint32_t>(col.size()));
  Subspace span(static_cast<uint32_t>(col.size()));
  for (const auto& e : trees[d]) {
    Vec v;
    for (const auto& [w, c] : e.terms()) v.emplace(col.at(w), c);
    span.insert(std::move(v));
  }
  return static_cast<uint32_t>(span.dim());
}

// necklace counting: (1/d) sum_{e|d} mu(e) g^(d/e)
long necklace_dim(long g, long d) {
  auto mu = [](long n) {
    long m = 1;
    for (long p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0L;
      m = -m;
    }
    if (n > 1) m = -m;
    return m;
  };
  long total = 0;
  for (long e = 1; e <= d; ++e) {
    if (d % e) continue;
    long pw = 1;
    for (long k = 0; k < d / e; ++k) pw *= g;
    total += mu(e) * pw;
  }
  return total / d;
}

LieElement random_lie(std::mt19937_64& rng, const FreeLie& L) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(L.basis_size()) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  LieElement e = lie_zero(L);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t)
    e += lie_basis_element(L, pick(rng)).scaled(Scalar::of_long(coef(rng), Q));
  return e;
}

}  // namespace

TEST_CASE("lyndon basis sizes at small degree") {
  FreeLie L(2, 3, Q);
  CHECK(L.dim_of_degree(1) == 2);
  CHECK(L.dim_of_degree(2) == 1);  // brute-force span rank is 1, checked below
  CHECK(L.dim_of_degree(3) == 2);
  CHECK(L.basis(L.index_of({0, 1})).letters == Word{0, 1});
  CHECK(bracket_span_rank(2, 2) == 1);
  CHECK(bracket_span_rank(2, 3) == 2);
  CHECK(necklace_dim(2, 3) == 2);
}

TEST_CASE("lyndon basis matches the bracket-span oracle and necklace counts") {
  for (uint32_t gens = 1; gens <= 3; ++gens) {
    FreeLie L(gens, 4, Q);
    for (uint32_t d = 1; d <= 4; ++d) {
      CHECK(L.dim_of_degree(d) == bracket_span_rank(gens, d));
      if (d > 1 || gens > 1)
        CHECK(static_cast<long>(L.dim_of_degree(d)) == necklace_dim(gens, d));
    }
  }
}

TEST_CASE("standard factorization parts are lyndon and ordered") {
  FreeLie L(3, 5, Q);
  for (uint32_t i = 0; i < L.basis_size(); ++i) {
    const auto& lw = L.basis(i);
    CHECK(is_lyndon(lw.letters));
    if (lw.left >= 0) {
      const Word& u = L.basis(lw.left).letters;
      const Word& v = L.basis(lw.right).letters;
      Word joined = u;
      joined.insert(joined.end(), v.begin(), v.end());
      CHECK(joined == lw.letters);
      CHECK(u < v);
      // right part is the longest Lyndon proper suffix
      for (size_t len = lw.letters.size() - 1; len > v.size(); --len) {
        Word suf(lw.letters.end() - len, lw.letters.end());
        CHECK_FALSE(is_lyndon(suf));
      }
    }
  }
}

TEST_CASE("lie_to_assoc examples") {
  FreeLie L(2, 3, Q);
  auto x1 = lie_generator(L, 0);
  auto x2 = lie_generator(L, 1);
  CHECK(lie_to_assoc(x1) == AssocElement::generator(L.assoc_ctx(), 0));
  auto b = bracket(x1, x2);
  CHECK(render_assoc(lie_to_assoc(b), "x") == "x1*x2 - x2*x1");
  auto bb = bracket(b, x2);
  CHECK(render_assoc(lie_to_assoc(bb), "x") == "x1*x2*x2 - 2*x2*x1*x2 + x2*x2*x1");
}

TEST_CASE("bracket examples and laws") {
  FreeLie L(2, 3, Q);
  auto x1 = lie_generator(L, 0);
  auto x2 = lie_generator(L, 1);
  CHECK(bracket(x1, x1).is_zero());
  CHECK(bracket(x1, x2) == lie_basis_element(L, L.index_of({0, 1})));

  FreeLie L3(3, 4, Q);
  auto a = lie_generator(L3, 0), b = lie_generator(L3, 1), c = lie_generator(L3, 2);
  auto jac = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) +
             bracket(bracket(c, a), b);
  CHECK(jac.is_zero());
}

TEST_CASE("bracket laws on random elements") {
  std::mt19937_64 rng(2024);
  FreeLie L(2, 4, Q);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_lie(rng, L), b = random_lie(rng, L), c = random_lie(rng, L);
    CHECK((bracket(a, b) + bracket(b, a)).is_zero());
    CHECK(bracket(a, a).is_zero());
    auto jac = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) +
               bracket(bracket(c, a), b);
    CHECK(jac.is_zero());
    // the inclusion into the associative algebra is a Lie morphism
    CHECK(lie_to_assoc(bracket(a, b)) ==
          commutator(lie_to_assoc(a), lie_to_assoc(b)));
    CHECK(assoc_to_lie(L, lie_to_assoc(a)) == a);
  }
}

TEST_CASE("assoc_to_lie rejects non-Lie input") {
  FreeLie L(2, 3, Q);
  auto sq = AssocElement::monomial(L.assoc_ctx(), {0, 0}, Scalar::one(Q));
  CHECK_THROWS_AS(assoc_to_lie(L, sq), std::invalid_argument);
}

TEST_CASE("weighted alphabets") {
  FreeLie P(2, 3, Q, {1, 2});
  CHECK(P.dim_of_degree(1) == 1);  // q1
  CHECK(P.dim_of_degree(2) == 1);  // q2
  CHECK(P.dim_of_degree(3) == 1);  // [q1,q2]
  auto q1 = lie_generator(P, 0), q2 = lie_generator(P, 1);
  CHECK(bracket(q1, q2) == lie_basis_element(P, P.index_of({0, 1})));
  CHECK(bracket(bracket(q1, q2), q1).is_zero());  // weight 4 > cap
}

TEST_CASE("derivation extends by leibniz") {
  FreeLie L(2, 4, Q);
  auto x1 = lie_generator(L, 0), x2 = lie_generator(L, 1);
  // derivation x1 -> x2, x2 -> 0
  std::vector<LieElement> img{x2, lie_zero(L)};
  CHECK(derivation_apply(img, bracket(x1, x2)).is_zero());  // [x2,x2] + [x1,0]
  auto d = derivation_apply(img, bracket(bracket(x1, x2), x1));
  CHECK(d == bracket(bracket(x1, x2), x2));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_lie(rng, L), b = random_lie(rng, L);
    auto lhs = derivation_apply(img, bracket(a, b));
    auto rhs = bracket(derivation_apply(img, a), b) + bracket(a, derivation_apply(img, b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("render and parse lie elements") {
  FreeLie L(2, 3, Q);
  auto e = parse_lie("[[x1,x2],x2] - 2*x1", L, "x");
  // x1x2x2 is Lyndon with standard bracketing [[x1,x2],x2], so it renders as-is
  CHECK(render_lie(e, "x") == "[[x1,x2],x2] - 2*x1");
  CHECK(parse_lie(render_lie(e, "x"), L, "x") == e);
  // [x2,[x1,x2]] is not a standard bracketing and recoordinatizes
  auto r = parse_lie("[x2,[x1,x2]]", L, "x");
  CHECK(render_lie(r, "x") == "-[[x1,x2],x2]");
  CHECK(parse_lie("x1+x2", L, "x") == lie_generator(L, 0) + lie_generator(L, 1));
  CHECK_THROWS_AS(parse_lie("[x1,x2", L, "x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie("[x1,x1]+x9", L, "x"), std::invalid_argument);
}

TEST_CASE("multilinearize splits and polarizes") {
  AssocContext vars(1, 2, Q);
  auto sq = parse_assoc("v1*v1", vars, "v");
  auto ml = multilinearize(sq);
  REQUIRE(ml.size() == 1);
  CHECK(ml[0].arity == 2);
  CHECK(render_assoc(ml[0].body, "v") == "v1*v2 + v2*v1");

  AssocContext vars2(2, 2, Q);
  auto mixed = parse_assoc("v1 + v1*v2", vars2, "v");
  auto parts = multilinearize(mixed);
  CHECK(parts.size() == 2);
}

TEST_CASE("theta verbal ideal: abelian variety") {
  FreeLie L(2, 3, Q);
  auto theta = parse_lie_variety({"[v1,v2]"}, Q, 3);
  auto fam = theta_verbal_ideal(theta, L);
  CHECK(fam[1].dim() == 0);
  CHECK(fam[2].dim() == 1);  // span{[x1,x2]}
  CHECK(fam[3].dim() == 2);  // closure under bracketing with x1, x2
  // membership of the obvious value
  auto val = bracket(lie_generator(L, 0), lie_generator(L, 1));
  auto elems = subspace_elements(L, fam);
  bool found = false;
  for (const auto& e : elems) found = found || (e == val);
  CHECK(found);
}

TEST_CASE("theta verbal ideal: no identities gives zero") {
  FreeLie L(2, 3, Q);
  auto fam = theta_verbal_ideal(LieVarietySpec{}, L);
  for (const auto& s : fam) CHECK(s.dim() == 0);
}

TEST_CASE("theta verbal ideal is an ideal") {
  FreeLie L(2, 4, Q);
  auto theta = parse_lie_variety({"[[v1,v2],v3]"}, Q, 4);
  auto fam = theta_verbal_ideal(theta, L);
  CHECK(fam[1].dim() == 0);
  CHECK(fam[2].dim() == 0);
  CHECK(fam[3].dim() == static_cast<size_t>(L.dim_of_degree(3)));
  auto elems = subspace_elements(L, fam);
  for (const auto& e : elems) {
    for (uint32_t g = 0; g < 2; ++g) {
      auto br = bracket(e, lie_generator(L, g));
      if (br.is_zero()) continue;
      uint32_t d = br.max_degree();
      // br must lie inside the ideal's degree-d component
      auto idx = L.basis_of_degree(d);
      std::map<uint32_t, uint32_t> pos;
      for (uint32_t k = 0; k < idx.size(); ++k) pos.emplace(idx[k], k);
      Vec local;
      for (const auto& [i, c] : br.coords) local.emplace(pos.at(i), c);
      CHECK(fam[d].member(local));
    }
  }
}

TEST_CASE("theta verbal ideal handles non-multilinear identities") {
  // Engel identity [[v1,v2],v2]: values at arbitrary elements must land in
  // the computed ideal (the polarized substitutions cover cross terms)
  FreeLie L(2, 4, Q);
  auto theta = parse_lie_variety({"[[v1,v2],v2]"}, Q, 4);
  auto fam = theta_verbal_ideal(theta, L);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    auto u = random_lie(rng, L), v = random_lie(rng, L);
    auto val = bracket(bracket(u, v), v);
    for (uint32_t d = 1; d <= 4; ++d) {
      Vec local;
      auto idx = L.basis_of_degree(d);
      std::map<uint32_t, uint32_t> pos;
      for (uint32_t k = 0; k < idx.size(); ++k) pos.emplace(idx[k], k);
      for (const auto& [i, c] : val.coords)
        if (L.degree(i) == d) local.emplace(pos.at(i), c);
      CHECK(fam[d].member(local));
    }
  }
}
