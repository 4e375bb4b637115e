#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liewreath/words.hpp"

using namespace liewreath;

namespace {

const FieldSpec Q = FieldSpec::rationals();

AssocElement random_element(std::mt19937_64& rng, const AssocContext& ctx) {
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<int> len(0, static_cast<int>(ctx.cap));
  std::uniform_int_distribution<int> letter(0, static_cast<int>(ctx.gens) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  AssocElement e(ctx);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Word w;
    int l = len(rng);
    for (int k = 0; k < l; ++k) w.push_back(letter(rng));
    e.add_term(w, Scalar::of_long(coef(rng), Q));
  }
  return e;
}

}  // namespace

TEST_CASE("mul examples") {
  AssocContext ctx(2, 2, Q);
  auto one = AssocElement::unit(ctx);
  auto x1 = AssocElement::generator(ctx, 0);
  auto x2 = AssocElement::generator(ctx, 1);
  CHECK(mul(one, x1) == x1);
  auto x1x2 = mul(x1, x2);
  auto x2x1 = mul(x2, x1);
  CHECK(x1x2 == AssocElement::monomial(ctx, {0, 1}, Scalar::one(Q)));
  CHECK_FALSE(x1x2 == x2x1);
  // truncation at D=2
  CHECK(mul(x1x2, x1).is_zero());
  AssocContext other(3, 2, Q);
  CHECK_THROWS_AS(mul(x1, AssocElement::generator(other, 2)), std::invalid_argument);
}

TEST_CASE("grade_split examples") {
  AssocContext ctx(2, 3, Q);
  auto x1 = AssocElement::generator(ctx, 0);
  auto e = x1 + AssocElement::monomial(ctx, {0, 1}, Scalar::one(Q));
  auto parts = grade_split(e);
  CHECK(parts[1] == x1);
  CHECK(parts[2] == AssocElement::monomial(ctx, {0, 1}, Scalar::one(Q)));
  CHECK(parts[0].is_zero());
  CHECK(parts[3].is_zero());
  for (const auto& p : grade_split(AssocElement::zero(ctx))) CHECK(p.is_zero());
  auto five = AssocElement::unit(ctx).scaled(Scalar::of_long(5, Q));
  CHECK(grade_split(five)[0] == five);
}

TEST_CASE("compare and leading_term") {
  AssocContext ctx(2, 3, Q);
  CHECK(compare_words(ctx, {0}, {0, 1}) < 0);      // degree dominates
  CHECK(compare_words(ctx, {0, 1}, {1, 0}) < 0);   // lex at equal degree
  CHECK(compare_words(ctx, {1, 0}, {1, 0}) == 0);  // equality

  auto x1 = AssocElement::generator(ctx, 0);
  auto x2x1 = AssocElement::monomial(ctx, {1, 0}, Scalar::one(Q));
  auto lt = leading_term(x1 + x2x1);
  CHECK(lt.first == Word{1, 0});
  CHECK(lt.second == Scalar::one(Q));
  lt = leading_term(x1.scaled(Scalar::of_long(3, Q)));
  CHECK(lt.first == Word{0});
  CHECK(lt.second == Scalar::of_long(3, Q));
  auto x1x2 = AssocElement::monomial(ctx, {0, 1}, Scalar::one(Q));
  lt = leading_term(x1x2 + x2x1);
  CHECK(lt.first == Word{1, 0});  // lex tie-break within degree 2
  CHECK_THROWS_AS(leading_term(AssocElement::zero(ctx)), std::invalid_argument);
}

TEST_CASE("associativity, distributivity, grading on random elements") {
  std::mt19937_64 rng(42);
  AssocContext ctx(2, 4, Q);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_element(rng, ctx);
    auto b = random_element(rng, ctx);
    auto c = random_element(rng, ctx);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
    CHECK(mul(a + b, c) == mul(a, c) + mul(b, c));
    auto pa = grade_split(a);
    auto pb = grade_split(b);
    // graded parts multiply into the expected degree
    for (uint32_t i = 0; i <= ctx.cap; ++i)
      for (uint32_t j = 0; j <= ctx.cap; ++j) {
        auto prod = mul(pa[i], pb[j]);
        if (prod.is_zero()) continue;
        REQUIRE(i + j <= ctx.cap);
        CHECK(grade_split(prod)[i + j] == prod);
      }
  }
}

TEST_CASE("weighted contexts grade by letter weight") {
  AssocContext ctx(2, 4, Q, {1, 3});
  auto q = AssocElement::generator(ctx, 0);
  auto p = AssocElement::generator(ctx, 1);
  CHECK(ctx.degree({1}) == 3);
  CHECK(mul(p, q) == AssocElement::monomial(ctx, {1, 0}, Scalar::one(Q)));
  CHECK(mul(p, mul(q, q)).is_zero());  // weight 5 > 4
  CHECK(compare_words(ctx, {0, 0}, {1}) < 0);
}

TEST_CASE("render and parse round-trip") {
  AssocContext ctx(2, 3, Q);
  auto e = parse_assoc("x1*x2*x2 - 2*x2*x1*x2 + x2*x2*x1", ctx, "x");
  CHECK(render_assoc(e, "x") == "x1*x2*x2 - 2*x2*x1*x2 + x2*x2*x1");
  CHECK(render_assoc(parse_assoc("3*x1*x2 + x2", ctx, "x"), "x") == "3*x1*x2 + x2");
  CHECK(parse_assoc("5", ctx, "x") == AssocElement::unit(ctx).scaled(Scalar::of_long(5, Q)));
  CHECK(parse_assoc("1/2*x1 + 1/2*x1", ctx, "x") == AssocElement::generator(ctx, 0));
  CHECK(render_assoc(AssocElement::zero(ctx), "x") == "0");
  CHECK_THROWS_AS(parse_assoc("x3", ctx, "x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_assoc("x1 +", ctx, "x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_assoc("", ctx, "x"), std::invalid_argument);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_element(rng, ctx);
    CHECK(parse_assoc(render_assoc(a, "x"), ctx, "x") == a);
  }
}

TEST_CASE("substitute maps words to ordered products") {
  AssocContext vars(2, 2, Q);   // v1, v2
  AssocContext target(2, 3, Q); // x1, x2
  auto body = parse_assoc("v1*v2", vars, "v");
  auto x1 = AssocElement::generator(target, 0);
  auto x2 = AssocElement::generator(target, 1);
  CHECK(substitute(body, {x1, x2}, target) == mul(x1, x2));
  CHECK(substitute(body, {x1 + x2, x2}, target) == mul(x1 + x2, x2));
}
