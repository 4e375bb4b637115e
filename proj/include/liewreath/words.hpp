#ifndef LIEWREATH_WORDS_HPP
#define LIEWREATH_WORDS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liewreath/field.hpp"

namespace liewreath {

// A word over generator indices; the empty word is the unity 1.
using Word = std::vector<uint32_t>;

// Ambient data for the free associative algebra with unity, truncated at
// total degree `cap`. Generators may carry weights (used when the alphabet
// is itself made of graded objects); by default every letter has degree 1.
struct AssocContext {
  uint32_t gens = 0;
  uint32_t cap = 0;
  FieldSpec field;
  std::vector<uint32_t> weights;  // empty = all ones

  AssocContext() = default;
  AssocContext(uint32_t gens, uint32_t cap, FieldSpec field,
               std::vector<uint32_t> weights = {});

  uint32_t weight(uint32_t letter) const {
    return weights.empty() ? 1 : weights[letter];
  }
  uint32_t degree(const Word& w) const;

  bool operator==(const AssocContext&) const = default;
};

// Total order: first by degree, ties lexicographically by index sequence.
// Unity is minimal. Returns <0, 0, >0.
int compare_words(const AssocContext& ctx, const Word& a, const Word& b);

// Plain shortlex; used as the storage order (coincides with degree-lex for
// unit weights).
struct ShortLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Element of the truncated free associative algebra: finitely many words
// with nonzero coefficients, every word of degree <= cap.
class AssocElement {
 public:
  AssocElement() = default;
  explicit AssocElement(AssocContext ctx) : ctx_(std::move(ctx)) {}

  static AssocElement zero(const AssocContext& ctx) { return AssocElement(ctx); }
  static AssocElement unit(const AssocContext& ctx);
  static AssocElement generator(const AssocContext& ctx, uint32_t i);
  static AssocElement monomial(const AssocContext& ctx, Word w,
                               const Scalar& coeff);

  const AssocContext& ctx() const { return ctx_; }
  const std::map<Word, Scalar, ShortLexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const Scalar& c);
  Scalar coeff(const Word& w) const;

  AssocElement operator-() const;
  AssocElement& operator+=(const AssocElement& o);
  AssocElement& operator-=(const AssocElement& o);
  friend AssocElement operator+(AssocElement a, const AssocElement& b) { return a += b; }
  friend AssocElement operator-(AssocElement a, const AssocElement& b) { return a -= b; }
  AssocElement scaled(const Scalar& c) const;

  bool operator==(const AssocElement& o) const {
    return ctx_ == o.ctx_ && terms_ == o.terms_;
  }

 private:
  AssocContext ctx_;
  std::map<Word, Scalar, ShortLexLess> terms_;
};

// Concatenation product; terms of degree > cap are discarded (the quotient
// by the two-sided ideal of high-degree words).
AssocElement mul(const AssocElement& a, const AssocElement& b);
// ab - ba
AssocElement commutator(const AssocElement& a, const AssocElement& b);
// Components by total degree, indexed 0..cap; the sum of the outputs is a.
std::vector<AssocElement> grade_split(const AssocElement& a);
// Maximal word under degree-lex with its coefficient; errors on zero.
std::pair<Word, Scalar> leading_term(const AssocElement& a);
// Multidegree of a word: occurrences of each letter.
std::vector<uint32_t> multidegree(const AssocContext& ctx, const Word& w);

// Substitute letters by elements of another algebra: the image of a word is
// the ordered product of the images of its letters.
AssocElement substitute(const AssocElement& a,
                        const std::vector<AssocElement>& images,
                        const AssocContext& target);

// Canonical text form, e.g. "3*x1*x2 + x2 - 1/2" with terms in descending
// degree-lex order. `letter` is the generator prefix.
std::string render_assoc(const AssocElement& a, const std::string& letter);
// Parser for the same grammar.
AssocElement parse_assoc(const std::string& text, const AssocContext& ctx,
                         const std::string& letter);

}  // namespace liewreath

#endif
