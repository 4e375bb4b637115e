#ifndef LIEWREATH_PBW_HPP
#define LIEWREATH_PBW_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liewreath/graded_lie.hpp"

namespace liewreath {

// The universal enveloping algebra of a structure-constant Lie algebra,
// truncated at total degree `cap`, on the PBW monomial basis: nondecreasing
// products of Lie basis elements. Products are straightened back onto the
// monomial basis through the commutation relations.
class PbwAlgebra {
 public:
  PbwAlgebra(GradedLie lie, uint32_t cap);

  const GradedLie& lie() const { return lie_; }
  uint32_t cap() const { return cap_; }
  const FieldSpec& field() const { return lie_.field; }

  size_t size() const { return monos_.size(); }
  const std::vector<uint32_t>& monomial(uint32_t m) const { return monos_[m]; }
  uint32_t degree(uint32_t m) const { return mono_degree_[m]; }
  uint32_t unit() const { return 0; }
  uint32_t index_of(const std::vector<uint32_t>& seq) const;
  std::vector<uint32_t> of_degree(uint32_t d) const;
  std::vector<size_t> graded_dims() const;
  std::string label(uint32_t m) const;

  // monomial times a Lie basis element, straightened; memoized
  Vec mul_basis(uint32_t m, uint32_t b) const;
  Vec mul_vec(const Vec& x, uint32_t b) const;
  // x times the monomial m (fold over its letters)
  Vec mul_monomial(const Vec& x, uint32_t m) const;
  Vec mul_elems(const Vec& x, const Vec& y) const;
  // a Lie element as a combination of length-one monomials
  Vec lie_embed(const Vec& lie_coords) const;
  // the derivation of the algebra determined by per-basis images on the Lie
  // algebra (delta[i] is a Lie coordinate vector), extended by Leibniz
  Vec apply_derivation(const std::vector<Vec>& delta, uint32_t m) const;
  Vec apply_derivation_vec(const std::vector<Vec>& delta, const Vec& x) const;

 private:
  GradedLie lie_;
  uint32_t cap_;
  std::vector<std::vector<uint32_t>> monos_;
  std::vector<uint32_t> mono_degree_;
  std::map<std::vector<uint32_t>, uint32_t> index_;
  mutable std::map<std::pair<uint32_t, uint32_t>, Vec> memo_;
};

}  // namespace liewreath

#endif
