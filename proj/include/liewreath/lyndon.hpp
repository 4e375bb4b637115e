#ifndef LIEWREATH_LYNDON_HPP
#define LIEWREATH_LYNDON_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "liewreath/sparse.hpp"
#include "liewreath/words.hpp"

namespace liewreath {

// A Lyndon word (strictly smaller than all of its proper rotations) with its
// right standard factorization attached: the right part is the longest proper
// Lyndon suffix. Iterating the factorization gives the basis bracketing.
struct LyndonWord {
  Word letters;
  uint32_t degree = 0;
  int32_t left = -1;   // basis index of the factorization prefix, -1 for letters
  int32_t right = -1;  // basis index of the factorization suffix
};

bool is_lyndon(const Word& w);

// The free Lie algebra on a finite generator set, truncated at total degree
// `cap`, coordinatized by the bracketed Lyndon words of each degree inside
// the free associative algebra on the same alphabet. Generators may carry
// weights > 1 (alphabets whose letters are themselves graded).
class FreeLie {
 public:
  FreeLie(uint32_t gens, uint32_t cap, FieldSpec field,
          std::vector<uint32_t> weights = {});
  FreeLie(const FreeLie&) = delete;
  FreeLie& operator=(const FreeLie&) = delete;

  uint32_t gens() const { return ctx_.gens; }
  uint32_t cap() const { return ctx_.cap; }
  const FieldSpec& field() const { return ctx_.field; }
  const AssocContext& assoc_ctx() const { return ctx_; }

  size_t basis_size() const { return basis_.size(); }
  const LyndonWord& basis(uint32_t i) const { return basis_[i]; }
  uint32_t degree(uint32_t i) const { return basis_[i].degree; }
  // basis indices of exact degree d, in lex order (contiguous)
  std::vector<uint32_t> basis_of_degree(uint32_t d) const;
  size_t dim_of_degree(uint32_t d) const;
  uint32_t index_of(const Word& w) const;
  // bracketed-word expansion inside the free associative algebra
  const AssocElement& expansion(uint32_t i) const { return expansions_[i]; }
  std::string bracket_label(uint32_t i, const std::string& letter) const;
  std::string bracket_label(
      uint32_t i, const std::function<std::string(uint32_t)>& name) const;

 private:
  AssocContext ctx_;
  std::vector<LyndonWord> basis_;
  std::vector<AssocElement> expansions_;
  std::map<Word, uint32_t> index_;
};

// Element of a FreeLie: sparse coordinates over the Lyndon basis.
struct LieElement {
  const FreeLie* alg = nullptr;
  Vec coords;

  bool is_zero() const { return coords.empty(); }
  LieElement operator-() const;
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  LieElement scaled(const Scalar& c) const;
  bool operator==(const LieElement& o) const {
    return alg == o.alg && coords == o.coords;
  }
  // support degrees; 0 when zero
  uint32_t max_degree() const;
  bool homogeneous() const;
};

LieElement lie_zero(const FreeLie& L);
LieElement lie_generator(const FreeLie& L, uint32_t i);
LieElement lie_basis_element(const FreeLie& L, uint32_t idx);

// Lie bracket, recoordinatized in the Lyndon basis; truncated above cap.
LieElement bracket(const LieElement& a, const LieElement& b);
// Expansion [u,v] -> uv - vu, recursively over the standard factorization.
AssocElement lie_to_assoc(const LieElement& a);
// Inverse on the Lie subspace; throws if a is not a Lie element.
LieElement assoc_to_lie(const FreeLie& L, const AssocElement& a);
// The derivation sending generator i to images[i], applied to x.
LieElement derivation_apply(const std::vector<LieElement>& images,
                            const LieElement& x);

std::string render_lie(const LieElement& a, const std::string& letter);
// Bracket-word grammar: expr := ['-'] term (('+'|'-') term)*,
// term := [coeff'*'] primary, primary := <letter><k> | '[' expr ',' expr ']'.
// Returns the associative expansion (substitution-ready form).
AssocElement parse_lie_expr(const std::string& text, const AssocContext& ctx,
                            const std::string& letter);
LieElement parse_lie(const std::string& text, const FreeLie& L,
                     const std::string& letter);

// An identity of a variety of Lie algebras, kept as its associative
// expansion over abstract variables v1..v_arity.
struct LieIdentity {
  std::string text;
  AssocElement body;
  uint32_t arity = 0;
};

struct LieVarietySpec {
  std::vector<LieIdentity> identities;
};

// Parses identities like "[v1,v2]" or "[[v1,v2],v3]"; rejects zero bodies.
LieVarietySpec parse_lie_variety(const std::vector<std::string>& texts,
                                 const FieldSpec& field, uint32_t cap);

// Splits a word polynomial into multihomogeneous components and replaces
// each by a full multilinearization (fresh variable per occurrence slot).
// Over the rationals the substitution value span is unchanged.
struct MultilinearForm {
  AssocElement body;  // multilinear, over `arity` fresh variables
  uint32_t arity = 0;
};
std::vector<MultilinearForm> multilinearize(const AssocElement& body);

// The verbal ideal of the variety inside L: the smallest graded subspace
// containing all substitution values of the identities and closed under
// bracketing with the generators. Returned per degree in local coordinates
// over basis_of_degree(d).
std::vector<Subspace> theta_verbal_ideal(const LieVarietySpec& spec,
                                         const FreeLie& L);
// The ideal generated by explicit homogeneous elements.
std::vector<Subspace> ideal_closure(const std::vector<LieElement>& gens,
                                    const FreeLie& L);
// Basis elements of a per-degree subspace family, as Lie elements.
std::vector<LieElement> subspace_elements(const FreeLie& L,
                                          const std::vector<Subspace>& per_degree);

// Degree-d component of x in local coordinates over basis_of_degree(d),
// and back. Other degrees of x are ignored by lie_local_coords.
Vec lie_local_coords(const FreeLie& L, const LieElement& x, uint32_t d);
LieElement lie_from_local(const FreeLie& L, const Vec& v, uint32_t d);

}  // namespace liewreath

#endif
