#ifndef LIEWREATH_PAIRS_HPP
#define LIEWREATH_PAIRS_HPP

#include <optional>
#include <string>
#include <vector>

#include "liewreath/graded_lie.hpp"
#include "liewreath/sparse.hpp"

namespace liewreath {

struct VarietySpec;      // varieties.hpp
struct VerbalSubmodule;  // varieties.hpp

// A representation pair: a graded module with a right action of a graded Lie
// algebra, truncated at `cap`. Action matrices act on module coordinate
// columns and raise degree by the acting element's degree; the law is
// M_[a,b] = M_b M_a - M_a M_b (right actions compose left-to-right).
struct RepPair {
  GradedLie algebra;
  uint32_t cap = 0;
  FieldSpec field;
  std::vector<uint32_t> module_degrees;
  std::vector<std::string> module_labels;
  // for cyclic pairs: the generator word reaching each basis element from
  // the cyclic vector (empty when the pair is not word-labeled)
  std::vector<Word> basis_words;
  std::vector<SparseMatrix> action;  // one per algebra basis element
  std::optional<Vec> cyclic;         // the distinguished module element e

  uint32_t module_dim() const { return static_cast<uint32_t>(module_degrees.size()); }
  std::vector<uint32_t> module_of_degree(uint32_t d) const;
  std::vector<size_t> graded_dims() const;

  Vec act(const Vec& m, uint32_t lie_idx) const;
  Vec act_elem(const Vec& m, const Vec& lie_coords) const;

  // checks the representation law on all algebra basis pairs
  void validate_representation() const;
};

std::vector<size_t> graded_dims(const RepPair& p);

// A homomorphism of pairs: compatible maps on the algebra and the module.
struct PairHom {
  std::vector<Vec> algebra_map;  // per dom algebra basis index, codom coords
  SparseMatrix module_map;       // dom module coords -> codom module coords
};

// (F, L): the free associative algebra on `gens` letters as a module over
// the free Lie algebra acting by right multiplication; cyclic on the unity.
RepPair free_word_pair(uint32_t gens, uint32_t cap, const FieldSpec& field,
                       const std::string& letter = "x");

// Free cyclic pair of the variety: free_word_pair modulo the verbal
// submodule of the (validated) spec.
RepPair free_cyclic_pair(const VarietySpec& spec, uint32_t gens, uint32_t cap,
                         const FieldSpec& field, const std::string& letter = "y");

// Quotient by an action-closed graded submodule; throws on closure failure.
RepPair quotient_pair(const RepPair& p, const VerbalSubmodule& s);

// Smallest subpair containing the given algebra and module elements: Lie
// closure under brackets, then module closure under the subalgebra action.
// Inputs need not be homogeneous; degrees are read off the leading
// (highest-degree) term, so the reported dims are those of the associated
// graded of the filtration.
RepPair subpair_generated(const RepPair& p, const std::vector<Vec>& lie_gens,
                          const std::vector<Vec>& module_gens);

// The unique pair homomorphism from a free cyclic pair determined by images
// of the generators and of the cyclic vector. Verifies the intertwining law
// on every module basis element and throws if the images do not satisfy the
// domain's identities in the codomain.
PairHom extend_hom(const RepPair& dom, const RepPair& cod,
                   const std::vector<Vec>& gen_images, const Vec& cyclic_image);

}  // namespace liewreath

#endif
