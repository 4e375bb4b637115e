#include "liewreath/graded_lie.hpp"

#include <stdexcept>

namespace liewreath {

Vec GradedLie::bracket(uint32_t i, uint32_t j) const {
  if (i == j) return {};
  if (i < j) {
    auto it = table.find({i, j});
    return it == table.end() ? Vec{} : it->second;
  }
  auto it = table.find({j, i});
  if (it == table.end()) return {};
  return vec_scale(-Scalar::one(field), it->second);
}

Vec GradedLie::bracket_elems(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) vec_axpy(out, ca * cb, bracket(i, j));
  return out;
}

std::vector<uint32_t> GradedLie::of_degree(uint32_t d) const {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < dim(); ++i)
    if (degrees[i] == d) out.push_back(i);
  return out;
}

std::vector<size_t> GradedLie::graded_dims() const {
  std::vector<size_t> out(cap + 1, 0);
  for (uint32_t d : degrees) ++out[d];
  return out;
}

void GradedLie::validate() const {
  if (labels.size() != degrees.size())
    throw std::runtime_error("label/degree size mismatch");
  if (strictly_graded) {
    for (const auto& [ij, v] : table) {
      uint32_t d = degrees[ij.first] + degrees[ij.second];
      for (const auto& [k, c] : v)
        if (degrees[k] != d) throw std::runtime_error("bracket not graded");
      if (d > cap && !v.empty())
        throw std::runtime_error("bracket above the cap");
    }
  }
  for (uint32_t i = 0; i < dim(); ++i)
    for (uint32_t j = i + 1; j < dim(); ++j)
      for (uint32_t k = j + 1; k < dim(); ++k) {
        if (strictly_graded && degrees[i] + degrees[j] + degrees[k] > cap) continue;
        Vec jac = bracket_elems(bracket(i, j), vec_unit(k, field));
        vec_axpy(jac, Scalar::one(field),
                 bracket_elems(bracket(j, k), vec_unit(i, field)));
        vec_axpy(jac, Scalar::one(field),
                 bracket_elems(bracket(k, i), vec_unit(j, field)));
        if (!jac.empty()) throw std::runtime_error("Jacobi fails");
      }
}

std::vector<Vec> GradedLie::extend_generator_images(
    const GradedLie& codom, const std::vector<Vec>& images) const {
  if (factorization.size() != degrees.size())
    throw std::runtime_error("no factorization data on this algebra");
  std::vector<Vec> out(dim());
  for (uint32_t i = 0; i < dim(); ++i) {
    if (factorization[i][0] < 0) {
      out[i] = images.at(factorization[i][1]);
    } else {
      out[i] = codom.bracket_elems(out[factorization[i][0]],
                                   out[factorization[i][1]]);
    }
  }
  return out;
}

GradedLie graded_from_free(const FreeLie& L, const std::string& letter) {
  GradedLie g;
  g.cap = L.cap();
  g.field = L.field();
  g.degrees.reserve(L.basis_size());
  for (uint32_t i = 0; i < L.basis_size(); ++i) {
    g.degrees.push_back(L.degree(i));
    g.labels.push_back(L.bracket_label(i, letter));
    const LyndonWord& lw = L.basis(i);
    if (lw.left < 0) {
      g.factorization.push_back({-1, static_cast<int32_t>(lw.letters[0])});
      g.generators.push_back(i);
    } else {
      g.factorization.push_back({lw.left, lw.right});
    }
  }
  for (uint32_t i = 0; i < L.basis_size(); ++i)
    for (uint32_t j = i + 1; j < L.basis_size(); ++j) {
      if (L.degree(i) + L.degree(j) > L.cap()) continue;
      LieElement br = bracket(lie_basis_element(L, i), lie_basis_element(L, j));
      if (!br.is_zero()) g.table.emplace(std::make_pair(i, j), br.coords);
    }
  return g;
}

Vec QuotientLie::project(const FreeLie& L, const LieElement& x) const {
  Vec out;
  // positions of the representatives inside the quotient basis, per degree
  for (uint32_t d = 1; d < ideal.size(); ++d) {
    Vec local = lie_local_coords(L, x, d);
    if (local.empty()) continue;
    local = ideal[d].reduce(local);
    if (local.empty()) continue;
    auto free_idx = ideal[d].free_coords();
    auto deg_basis = L.basis_of_degree(d);
    // map local free coordinate -> quotient basis index
    for (const auto& [lc, c] : local) {
      uint32_t global = deg_basis[lc];
      // find the quotient basis element whose representative is `global`
      bool found = false;
      for (uint32_t b = 0; b < rep_index.size(); ++b)
        if (rep_index[b] == global) {
          out.emplace(b, c);
          found = true;
          break;
        }
      if (!found) throw std::runtime_error("projection misses representative");
    }
  }
  return out;
}

LieElement QuotientLie::representative(const FreeLie& L, uint32_t b) const {
  return lie_basis_element(L, rep_index.at(b));
}

QuotientLie quotient_lie(const FreeLie& L, const std::vector<Subspace>& ideal,
                         const std::string& letter) {
  QuotientLie q;
  q.ideal = ideal;
  q.algebra.cap = L.cap();
  q.algebra.field = L.field();
  q.algebra.strictly_graded = true;
  for (uint32_t d = 1; d <= L.cap(); ++d) {
    auto deg_basis = L.basis_of_degree(d);
    for (uint32_t lc : ideal[d].free_coords()) {
      uint32_t global = deg_basis[lc];
      q.rep_index.push_back(global);
      q.rep_desc.push_back(L.bracket_label(global, letter));
      q.algebra.degrees.push_back(d);
      q.algebra.labels.push_back("e" + std::to_string(q.rep_index.size()));
    }
  }
  uint32_t n = static_cast<uint32_t>(q.rep_index.size());
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = a + 1; b < n; ++b) {
      if (q.algebra.degrees[a] + q.algebra.degrees[b] > L.cap()) continue;
      LieElement br = bracket(q.representative(L, a), q.representative(L, b));
      Vec img = q.project(L, br);
      if (!img.empty()) q.algebra.table.emplace(std::make_pair(a, b), img);
    }
  // quotient of a free algebra is generated by the generator images; keep
  // every degree-1 basis element as a designated generator
  for (uint32_t a = 0; a < n; ++a)
    if (q.algebra.degrees[a] == 1) q.algebra.generators.push_back(a);
  return q;
}

GradedLie semidirect_sum(const GradedLie& p, const GradedLie& b,
                         const std::vector<std::vector<Vec>>& delta,
                         std::vector<uint32_t> generators) {
  if (!(p.field == b.field) || p.cap != b.cap)
    throw std::invalid_argument("semidirect components disagree");
  if (delta.size() != b.dim())
    throw std::invalid_argument("need one derivation per top basis element");
  GradedLie g;
  g.cap = p.cap;
  g.field = p.field;
  g.degrees = p.degrees;
  g.labels = p.labels;
  const uint32_t np = p.dim();
  for (uint32_t j = 0; j < b.dim(); ++j) {
    g.degrees.push_back(b.degrees[j]);
    g.labels.push_back(b.labels[j]);
  }
  g.table = p.table;
  for (uint32_t j = 0; j < b.dim(); ++j) {
    if (delta[j].size() != np)
      throw std::invalid_argument("derivation matrix shape mismatch");
    for (uint32_t i = 0; i < np; ++i)
      if (!delta[j][i].empty())
        g.table.emplace(std::make_pair(i, np + j), delta[j][i]);
  }
  for (const auto& [ij, v] : b.table) {
    Vec shifted;
    for (const auto& [k, c] : v) shifted.emplace(np + k, c);
    if (!shifted.empty())
      g.table.emplace(std::make_pair(np + ij.first, np + ij.second), shifted);
  }
  g.generators = std::move(generators);
  return g;
}

}  // namespace liewreath
