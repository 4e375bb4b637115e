#ifndef LIEWREATH_VARIETIES_HPP
#define LIEWREATH_VARIETIES_HPP

#include <string>
#include <vector>

#include "liewreath/pairs.hpp"
#include "liewreath/words.hpp"

namespace liewreath {

// One identity y·v(x1..xn) = 0 of a variety of representations, stored as
// the word polynomial v over abstract variables.
struct RepIdentity {
  std::string text;   // canonical "y*v1*v2" form
  AssocElement body;  // over variable letters v1..v_arity
  uint32_t arity = 0;
};

struct VarietySpec {
  std::vector<RepIdentity> identities;
  bool multihom_validated = false;
};

// Grammar: identity := term (('+'|'-') term)*, term := [coeff'*'] 'y' ('*' v<k>)*.
RepIdentity parse_identity(const std::string& text, const FieldSpec& field,
                           uint32_t cap);
VarietySpec parse_variety(const std::vector<std::string>& texts,
                          const FieldSpec& field, uint32_t cap);
std::string render_identity(const RepIdentity& id);

// Splits the body by multidegree; the parts sum to the original.
std::vector<RepIdentity> multihom_decompose(const RepIdentity& id);
// Replaces every identity by its multihomogeneous components and marks the
// spec validated (the closure condition imposed constructively).
VarietySpec validate_multihomogeneous(const VarietySpec& spec);

// A graded submodule of a pair's module, held per degree in global module
// coordinates (each row supported on one degree block).
struct VerbalSubmodule {
  std::vector<Subspace> by_degree;

  size_t total_dim() const;
  std::vector<size_t> graded_dims() const;
  // splits v by the pair's module grading and tests each component
  bool member(const RepPair& p, const Vec& v) const;
};

// m · v(a1..an) for a word polynomial v, evaluated through the pair's action.
Vec identity_value(const RepPair& p, const AssocElement& body,
                   const std::vector<Vec>& args, const Vec& m);

// The smallest graded subspace of the pair's module containing all values
// m·v(a1..an) — m over the module basis, a_i over the subalgebra basis — and
// closed under the action of the full pair algebra. Identities are
// multilinearized first so basis substitution spans all values.
VerbalSubmodule verbal_submodule(const RepPair& pair, const VarietySpec& spec,
                                 const std::vector<Vec>& subalgebra_basis);

}  // namespace liewreath

#endif
