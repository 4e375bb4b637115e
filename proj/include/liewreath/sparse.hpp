#ifndef LIEWREATH_SPARSE_HPP
#define LIEWREATH_SPARSE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "liewreath/field.hpp"

namespace liewreath {

// Sparse coordinate vector: index -> nonzero scalar. The zero vector is the
// empty map, so vectors need no field tag of their own.
using Vec = std::map<uint32_t, Scalar>;

// y += c * x
void vec_axpy(Vec& y, const Scalar& c, const Vec& x);
Vec vec_scale(const Scalar& c, const Vec& x);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
inline bool vec_is_zero(const Vec& v) { return v.empty(); }
Scalar vec_get(const Vec& v, uint32_t i, const FieldSpec& f);
// single unit coordinate
Vec vec_unit(uint32_t i, const FieldSpec& f);

// Sparse matrix over the active field; absent entry means zero, stored
// entries are never zero.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(uint32_t rows, uint32_t cols) : rows_(rows), cols_(cols) {}

  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }
  const std::map<std::pair<uint32_t, uint32_t>, Scalar>& entries() const {
    return entries_;
  }

  void set(uint32_t r, uint32_t c, const Scalar& v);
  void add_to(uint32_t r, uint32_t c, const Scalar& v);
  Scalar get(uint32_t r, uint32_t c, const FieldSpec& f) const;

  Vec row(uint32_t r) const;
  void set_row(uint32_t r, const Vec& v);

  // matrix * column vector
  Vec apply(const Vec& x, const FieldSpec& f) const;

  bool operator==(const SparseMatrix&) const = default;

 private:
  uint32_t rows_, cols_;
  std::map<std::pair<uint32_t, uint32_t>, Scalar> entries_;
};

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b, const FieldSpec& f);
SparseMatrix mat_add(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix mat_sub(const SparseMatrix& a, const SparseMatrix& b);

// A subspace of K^ambient held as a reduced-echelon basis: every row starts
// with a 1 at its pivot, pivot columns strictly increase and are cleared in
// all other rows.
class Subspace {
 public:
  explicit Subspace(uint32_t ambient) : ambient_(ambient) {}

  uint32_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  std::vector<uint32_t> pivots() const;
  // ambient coordinates that are not pivots, in increasing order
  std::vector<uint32_t> free_coords() const;

  // Insert a vector, keeping reduced echelon form. Returns true if dim grew.
  bool insert(Vec v);
  // Canonical representative of v modulo the subspace (pivot coords cleared).
  Vec reduce(Vec v) const;
  bool member(const Vec& v) const;
  // Coefficients of v over basis(), if v is a member.
  std::optional<Vec> coordinates(const Vec& v) const;

  bool operator==(const Subspace&) const = default;

 private:
  uint32_t ambient_;
  std::vector<Vec> basis_;
};

// Unique reduced row-echelon form; same shape, zero rows at the bottom.
SparseMatrix rref(const SparseMatrix& m, const FieldSpec& f);
uint32_t rank(const SparseMatrix& m, const FieldSpec& f);
// Null space {x : m x = 0}.
Subspace kernel(const SparseMatrix& m, const FieldSpec& f);
// Row space as a subspace of K^cols.
Subspace row_space(const SparseMatrix& m, const FieldSpec& f);
bool member(const Subspace& s, const Vec& v);

}  // namespace liewreath

#endif
