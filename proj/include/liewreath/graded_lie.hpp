#ifndef LIEWREATH_GRADED_LIE_HPP
#define LIEWREATH_GRADED_LIE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liewreath/lyndon.hpp"
#include "liewreath/sparse.hpp"

namespace liewreath {

// A finite-dimensional graded Lie algebra given by structure constants on an
// ordered basis, truncated at `cap`: brackets whose degree would exceed the
// cap are zero. Plain copyable data; every constructed instance is immutable
// afterwards.
struct GradedLie {
  std::vector<uint32_t> degrees;
  std::vector<std::string> labels;
  uint32_t cap = 0;
  FieldSpec field;
  // designated generating subset (basis indices)
  std::vector<uint32_t> generators;
  // for algebras coming from a free Lie basis: standard factorization per
  // basis element; leaves are {-1, letter}, nodes {left_idx, right_idx}
  std::vector<std::array<int32_t, 2>> factorization;
  bool strictly_graded = true;
  // stored for i < j only; bracket() derives the rest
  std::map<std::pair<uint32_t, uint32_t>, Vec> table;

  uint32_t dim() const { return static_cast<uint32_t>(degrees.size()); }
  Vec bracket(uint32_t i, uint32_t j) const;
  Vec bracket_elems(const Vec& a, const Vec& b) const;
  std::vector<uint32_t> of_degree(uint32_t d) const;
  std::vector<size_t> graded_dims() const;

  // antisymmetry is structural; checks grading and Jacobi on all triples
  // whose total degree fits under the cap
  void validate() const;

  // Images of every basis element under the morphism into `codom` sending
  // generator letters to `images`; requires factorization data.
  std::vector<Vec> extend_generator_images(const GradedLie& codom,
                                           const std::vector<Vec>& images) const;
};

// The Lyndon-basis free Lie algebra as structure constants. Basis labels use
// `letter` for the generators.
GradedLie graded_from_free(const FreeLie& L, const std::string& letter);

// The quotient L/M for a graded ideal M, with the complement basis chosen by
// echelon completion (lowest degree first, lex within a degree). Keeps the
// projection data and the chosen representatives.
struct QuotientLie {
  GradedLie algebra;               // basis labels "e1", "e2", ...
  std::vector<Subspace> ideal;     // per degree, local coordinates
  std::vector<uint32_t> rep_index; // per basis element: global Lyndon index in L
  std::vector<std::string> rep_desc;

  Vec project(const FreeLie& L, const LieElement& x) const;
  LieElement representative(const FreeLie& L, uint32_t b) const;
};
QuotientLie quotient_lie(const FreeLie& L, const std::vector<Subspace>& ideal,
                         const std::string& letter);

// P \lambda B: `delta[j]` is the derivation of P induced by the j-th basis
// element of B, as per-basis images ([p_i, b_j] = delta[j][i]).
GradedLie semidirect_sum(const GradedLie& p, const GradedLie& b,
                         const std::vector<std::vector<Vec>>& delta,
                         std::vector<uint32_t> generators);

}  // namespace liewreath

#endif
