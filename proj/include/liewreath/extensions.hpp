#ifndef LIEWREATH_EXTENSIONS_HPP
#define LIEWREATH_EXTENSIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "liewreath/sparse.hpp"

namespace liewreath {

// A finite-dimensional Lie algebra over the active field, given by structure
// constants on an ordered basis (no grading assumed).
struct FiniteLieAlgebra {
  FieldSpec field;
  uint32_t dim = 0;
  std::vector<std::string> labels;
  // stored for i < j; antisymmetry derived
  std::map<std::pair<uint32_t, uint32_t>, Vec> table;

  Vec bracket(uint32_t i, uint32_t j) const;
  Vec bracket_elems(const Vec& a, const Vec& b) const;
  void validate() const;  // Jacobi on all basis triples
};

// An abelian Lie algebra A as a right module over G: a·g through one matrix
// per G basis element, satisfying M_[g,h] = M_h M_g - M_g M_h.
struct GModule {
  FieldSpec field;
  uint32_t dim = 0;
  std::vector<SparseMatrix> action;  // per G basis element, dim x dim

  Vec act(const Vec& a, uint32_t g) const;
  Vec act_elem(const Vec& a, const Vec& g) const;
  void validate(const FiniteLieAlgebra& G) const;
};

// Alternating bilinear map G x G -> A on basis pairs.
struct FactorSet {
  uint32_t gdim = 0;
  std::map<std::pair<uint32_t, uint32_t>, Vec> f;  // stored for i < j

  Vec at(uint32_t i, uint32_t j, const FieldSpec& field) const;
  Vec at_elems(const Vec& g1, const Vec& g2, const FieldSpec& field) const;
  void set(uint32_t i, uint32_t j, const Vec& v);
  bool is_zero() const { return f.empty(); }
};

struct ExtElement {
  Vec a;  // A-component
  Vec g;  // G-component
  bool operator==(const ExtElement&) const = default;
  bool is_zero() const { return a.empty() && g.empty(); }
};

// The extension of A by G with factor set f: the space A x G with the
// bracket [(a1,g1),(a2,g2)] = (a1 g2 - a2 g1 + f(g1,g2), [g1,g2]).
struct Extension {
  const FiniteLieAlgebra* G = nullptr;
  const GModule* A = nullptr;
  FactorSet f;

  ExtElement bracket(const ExtElement& x, const ExtElement& y) const;
};

// Jacobi for the extension bracket, checked directly on all basis triples of
// the space A x G.
bool cocycle_check(const FactorSet& f, const GModule& A, const FiniteLieAlgebra& G);
// The expanded 2-cocycle condition: sum_cyc f(g1,g2)·g3 + f([g1,g2],g3) = 0
// on basis triples (the representation law on A is assumed). Must agree with
// cocycle_check; kept as an independent cross-check.
bool cocycle_identity_check(const FactorSet& f, const GModule& A,
                            const FiniteLieAlgebra& G);

// A linear map rho: G -> A, as a matrix on basis coordinates.
struct Retraction {
  SparseMatrix rho;  // A-dim x G-dim
  Vec apply(const Vec& g, const FieldSpec& field) const;
};

// Solves f(g1,g2) = rho(g1)·g2 - rho(g2)·g1 - rho([g1,g2]) exactly; returns
// a solution when the extension splits and nothing otherwise.
std::optional<Retraction> splitting_check(const FactorSet& f, const GModule& A,
                                          const FiniteLieAlgebra& G);

struct MuViolation : std::runtime_error {
  uint32_t i, j;
  MuViolation(uint32_t i_, uint32_t j_)
      : std::runtime_error("retraction violates the splitting equation on basis pair (" +
                           std::to_string(i_) + "," + std::to_string(j_) + ")"),
        i(i_), j(j_) {}
};

// The isomorphism (a,g) -> (a + rho(g), g) from the extension onto the
// split extension. Verifies the splitting equation first (throws
// MuViolation naming the offending pair), then bracket preservation on all
// basis pairs and bijectivity through the explicit inverse.
struct MuMap {
  Retraction rho;
  ExtElement apply(const ExtElement& x, const FieldSpec& field) const;
  ExtElement apply_inverse(const ExtElement& x, const FieldSpec& field) const;
};
MuMap mu_map(const Extension& e, const Retraction& rho);

// The split extension (zero factor set); validates the representation law.
Extension semidirect_build(const GModule& A, const FiniteLieAlgebra& G);

}  // namespace liewreath

#endif
