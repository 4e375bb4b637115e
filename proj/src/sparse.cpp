#include "liewreath/sparse.hpp"

#include <algorithm>

namespace liewreath {

void vec_axpy(Vec& y, const Scalar& c, const Vec& x) {
  if (c.is_zero()) return;
  for (const auto& [i, v] : x) {
    auto it = y.find(i);
    if (it == y.end()) {
      Scalar t = c * v;
      if (!t.is_zero()) y.emplace(i, std::move(t));
    } else {
      it->second += c * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

Vec vec_scale(const Scalar& c, const Vec& x) {
  Vec r;
  if (c.is_zero()) return r;
  for (const auto& [i, v] : x) r.emplace(i, c * v);
  return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (const auto& [i, v] : b) {
    auto it = r.find(i);
    if (it == r.end()) {
      r.emplace(i, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (const auto& [i, v] : b) {
    auto it = r.find(i);
    if (it == r.end()) {
      r.emplace(i, -v);
    } else {
      it->second -= v;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

Scalar vec_get(const Vec& v, uint32_t i, const FieldSpec& f) {
  auto it = v.find(i);
  return it == v.end() ? Scalar::zero(f) : it->second;
}

Vec vec_unit(uint32_t i, const FieldSpec& f) {
  Vec v;
  v.emplace(i, Scalar::one(f));
  return v;
}

void SparseMatrix::set(uint32_t r, uint32_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  if (v.is_zero())
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void SparseMatrix::add_to(uint32_t r, uint32_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  auto it = entries_.find({r, c});
  if (it == entries_.end()) {
    if (!v.is_zero()) entries_.emplace(std::make_pair(r, c), v);
  } else {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Scalar SparseMatrix::get(uint32_t r, uint32_t c, const FieldSpec& f) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar::zero(f) : it->second;
}

Vec SparseMatrix::row(uint32_t r) const {
  Vec v;
  for (auto it = entries_.lower_bound({r, 0});
       it != entries_.end() && it->first.first == r; ++it)
    v.emplace(it->first.second, it->second);
  return v;
}

void SparseMatrix::set_row(uint32_t r, const Vec& v) {
  auto it = entries_.lower_bound({r, 0});
  while (it != entries_.end() && it->first.first == r) it = entries_.erase(it);
  for (const auto& [c, x] : v)
    if (!x.is_zero()) entries_.emplace(std::make_pair(r, c), x);
}

Vec SparseMatrix::apply(const Vec& x, const FieldSpec& f) const {
  Vec y;
  (void)f;
  for (const auto& [rc, v] : entries_) {
    auto it = x.find(rc.second);
    if (it == x.end()) continue;
    Scalar t = v * it->second;
    auto yt = y.find(rc.first);
    if (yt == y.end()) {
      if (!t.is_zero()) y.emplace(rc.first, std::move(t));
    } else {
      yt->second += t;
      if (yt->second.is_zero()) y.erase(yt);
    }
  }
  return y;
}

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b, const FieldSpec& f) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  (void)f;
  SparseMatrix c(a.rows(), b.cols());
  // group b's entries by row once
  std::vector<Vec> brow(b.rows());
  for (const auto& [rc, v] : b.entries()) brow[rc.first].emplace(rc.second, v);
  for (const auto& [rc, v] : a.entries()) {
    for (const auto& [j, w] : brow[rc.second]) c.add_to(rc.first, j, v * w);
  }
  return c;
}

SparseMatrix mat_add(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
  SparseMatrix c = a;
  for (const auto& [rc, v] : b.entries()) c.add_to(rc.first, rc.second, v);
  return c;
}

SparseMatrix mat_sub(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
  SparseMatrix c = a;
  for (const auto& [rc, v] : b.entries()) c.add_to(rc.first, rc.second, -v);
  return c;
}

std::vector<uint32_t> Subspace::pivots() const {
  std::vector<uint32_t> p;
  p.reserve(basis_.size());
  for (const auto& row : basis_) p.push_back(row.begin()->first);
  return p;
}

std::vector<uint32_t> Subspace::free_coords() const {
  auto p = pivots();
  std::vector<uint32_t> out;
  size_t k = 0;
  for (uint32_t i = 0; i < ambient_; ++i) {
    if (k < p.size() && p[k] == i)
      ++k;
    else
      out.push_back(i);
  }
  return out;
}

bool Subspace::insert(Vec v) {
  if (!v.empty() && v.rbegin()->first >= ambient_)
    throw std::invalid_argument("vector exceeds ambient dimension");
  // reduce against current rows
  for (const auto& row : basis_) {
    auto it = v.find(row.begin()->first);
    if (it != v.end()) vec_axpy(v, -it->second, row);
  }
  if (v.empty()) return false;
  Scalar lead = v.begin()->second;
  v = vec_scale(lead.inverse(), v);
  uint32_t piv = v.begin()->first;
  // clear the new pivot in existing rows
  for (auto& row : basis_) {
    auto it = row.find(piv);
    if (it != row.end()) vec_axpy(row, -it->second, v);
  }
  auto pos = std::lower_bound(
      basis_.begin(), basis_.end(), piv,
      [](const Vec& r, uint32_t p) { return r.begin()->first < p; });
  basis_.insert(pos, std::move(v));
  return true;
}

Vec Subspace::reduce(Vec v) const {
  if (!v.empty() && v.rbegin()->first >= ambient_)
    throw std::invalid_argument("vector exceeds ambient dimension");
  for (const auto& row : basis_) {
    auto it = v.find(row.begin()->first);
    if (it != v.end()) vec_axpy(v, -it->second, row);
  }
  return v;
}

bool Subspace::member(const Vec& v) const { return reduce(v).empty(); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Vec rest = v;
  Vec coeffs;
  for (uint32_t k = 0; k < basis_.size(); ++k) {
    auto it = rest.find(basis_[k].begin()->first);
    if (it == rest.end()) continue;
    Scalar c = it->second;
    vec_axpy(rest, -c, basis_[k]);
    coeffs.emplace(k, c);
  }
  if (!rest.empty()) return std::nullopt;
  return coeffs;
}

SparseMatrix rref(const SparseMatrix& m, const FieldSpec& f) {
  Subspace s(m.cols());
  for (uint32_t r = 0; r < m.rows(); ++r) s.insert(m.row(r));
  (void)f;
  SparseMatrix out(m.rows(), m.cols());
  uint32_t r = 0;
  for (const auto& row : s.basis()) out.set_row(r++, row);
  return out;
}

uint32_t rank(const SparseMatrix& m, const FieldSpec& f) {
  Subspace s(m.cols());
  for (uint32_t r = 0; r < m.rows(); ++r) s.insert(m.row(r));
  (void)f;
  return static_cast<uint32_t>(s.dim());
}

Subspace kernel(const SparseMatrix& m, const FieldSpec& f) {
  Subspace rows(m.cols());
  for (uint32_t r = 0; r < m.rows(); ++r) rows.insert(m.row(r));
  Subspace ker(m.cols());
  auto piv = rows.pivots();
  for (uint32_t j : rows.free_coords()) {
    Vec v = vec_unit(j, f);
    for (size_t i = 0; i < piv.size(); ++i) {
      auto it = rows.basis()[i].find(j);
      if (it != rows.basis()[i].end()) v[piv[i]] = -it->second;
    }
    ker.insert(std::move(v));
  }
  return ker;
}

Subspace row_space(const SparseMatrix& m, const FieldSpec& f) {
  (void)f;
  Subspace s(m.cols());
  for (uint32_t r = 0; r < m.rows(); ++r) s.insert(m.row(r));
  return s;
}

bool member(const Subspace& s, const Vec& v) {
  if (!v.empty() && v.rbegin()->first >= s.ambient_dim())
    throw std::invalid_argument("dimension mismatch");
  return s.member(v);
}

}  // namespace liewreath
