#include "liewreath/extensions.hpp"

#include <stdexcept>

namespace liewreath {

Vec FiniteLieAlgebra::bracket(uint32_t i, uint32_t j) const {
  if (i == j) return {};
  if (i < j) {
    auto it = table.find({i, j});
    return it == table.end() ? Vec{} : it->second;
  }
  auto it = table.find({j, i});
  if (it == table.end()) return {};
  return vec_scale(-Scalar::one(field), it->second);
}

Vec FiniteLieAlgebra::bracket_elems(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) vec_axpy(out, ca * cb, bracket(i, j));
  return out;
}

void FiniteLieAlgebra::validate() const {
  for (uint32_t i = 0; i < dim; ++i)
    for (uint32_t j = i + 1; j < dim; ++j)
      for (uint32_t k = j + 1; k < dim; ++k) {
        Vec jac = bracket_elems(bracket(i, j), vec_unit(k, field));
        vec_axpy(jac, Scalar::one(field), bracket_elems(bracket(j, k), vec_unit(i, field)));
        vec_axpy(jac, Scalar::one(field), bracket_elems(bracket(k, i), vec_unit(j, field)));
        if (!jac.empty()) throw std::runtime_error("Jacobi fails");
      }
}

Vec GModule::act(const Vec& a, uint32_t g) const {
  return action.at(g).apply(a, field);
}

Vec GModule::act_elem(const Vec& a, const Vec& g) const {
  Vec out;
  for (const auto& [i, c] : g) vec_axpy(out, c, act(a, i));
  return out;
}

void GModule::validate(const FiniteLieAlgebra& G) const {
  if (action.size() != G.dim)
    throw std::runtime_error("one action matrix per G basis element required");
  for (uint32_t i = 0; i < G.dim; ++i)
    for (uint32_t j = i + 1; j < G.dim; ++j) {
      SparseMatrix lhs = mat_sub(mat_mul(action[j], action[i], field),
                                 mat_mul(action[i], action[j], field));
      SparseMatrix rhs(dim, dim);
      for (const auto& [k, c] : G.bracket(i, j))
        for (const auto& [rc, v] : action[k].entries())
          rhs.add_to(rc.first, rc.second, c * v);
      if (!(lhs == rhs)) throw std::runtime_error("G-module law fails");
    }
}

Vec FactorSet::at(uint32_t i, uint32_t j, const FieldSpec& field) const {
  if (i == j) return {};
  if (i < j) {
    auto it = f.find({i, j});
    return it == f.end() ? Vec{} : it->second;
  }
  auto it = f.find({j, i});
  if (it == f.end()) return {};
  return vec_scale(-Scalar::one(field), it->second);
}

Vec FactorSet::at_elems(const Vec& g1, const Vec& g2, const FieldSpec& field) const {
  Vec out;
  for (const auto& [i, c1] : g1)
    for (const auto& [j, c2] : g2) vec_axpy(out, c1 * c2, at(i, j, field));
  return out;
}

void FactorSet::set(uint32_t i, uint32_t j, const Vec& v) {
  if (i == j) throw std::invalid_argument("factor set is alternating");
  if (i < j) {
    if (v.empty())
      f.erase({i, j});
    else
      f[{i, j}] = v;
  } else {
    set(j, i, Vec{});  // clear then store the sign-adjusted value
    Vec neg;
    for (const auto& [k, c] : v) neg.emplace(k, -c);
    if (!neg.empty()) f[{j, i}] = neg;
  }
}

ExtElement Extension::bracket(const ExtElement& x, const ExtElement& y) const {
  ExtElement out;
  out.a = A->act_elem(x.a, y.g);
  vec_axpy(out.a, -Scalar::one(A->field), A->act_elem(y.a, x.g));
  vec_axpy(out.a, Scalar::one(A->field), f.at_elems(x.g, y.g, A->field));
  out.g = G->bracket_elems(x.g, y.g);
  return out;
}

namespace {

ExtElement basis_elt(uint32_t adim, uint32_t k, const FieldSpec& field) {
  // 0..adim-1 are A coordinates, the rest G coordinates
  ExtElement e;
  if (k < adim)
    e.a = vec_unit(k, field);
  else
    e.g = vec_unit(k - adim, field);
  return e;
}

}  // namespace

bool cocycle_check(const FactorSet& f, const GModule& A, const FiniteLieAlgebra& G) {
  Extension e{&G, &A, f};
  const uint32_t n = A.dim + G.dim;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j)
      for (uint32_t k = j + 1; k < n; ++k) {
        ExtElement x = basis_elt(A.dim, i, A.field);
        ExtElement y = basis_elt(A.dim, j, A.field);
        ExtElement z = basis_elt(A.dim, k, A.field);
        ExtElement jac = e.bracket(e.bracket(x, y), z);
        ExtElement t = e.bracket(e.bracket(y, z), x);
        vec_axpy(jac.a, Scalar::one(A.field), t.a);
        vec_axpy(jac.g, Scalar::one(A.field), t.g);
        t = e.bracket(e.bracket(z, x), y);
        vec_axpy(jac.a, Scalar::one(A.field), t.a);
        vec_axpy(jac.g, Scalar::one(A.field), t.g);
        if (!jac.is_zero()) return false;
      }
  return true;
}

bool cocycle_identity_check(const FactorSet& f, const GModule& A,
                            const FiniteLieAlgebra& G) {
  for (uint32_t i = 0; i < G.dim; ++i)
    for (uint32_t j = i + 1; j < G.dim; ++j)
      for (uint32_t k = j + 1; k < G.dim; ++k) {
        Vec total = A.act(f.at(i, j, A.field), k);
        vec_axpy(total, Scalar::one(A.field), A.act(f.at(j, k, A.field), i));
        vec_axpy(total, Scalar::one(A.field), A.act(f.at(k, i, A.field), j));
        vec_axpy(total, Scalar::one(A.field), f.at_elems(G.bracket(i, j), vec_unit(k, A.field), A.field));
        vec_axpy(total, Scalar::one(A.field), f.at_elems(G.bracket(j, k), vec_unit(i, A.field), A.field));
        vec_axpy(total, Scalar::one(A.field), f.at_elems(G.bracket(k, i), vec_unit(j, A.field), A.field));
        if (!total.empty()) return false;
      }
  return true;
}

Vec Retraction::apply(const Vec& g, const FieldSpec& field) const {
  return rho.apply(g, field);
}

std::optional<Retraction> splitting_check(const FactorSet& f, const GModule& A,
                                          const FiniteLieAlgebra& G) {
  // unknowns rho(r, c): A-coordinate r of the image of basis element c
  const uint32_t nunk = A.dim * G.dim;
  auto unk = [&](uint32_t r, uint32_t c) { return r * G.dim + c; };
  // rows: one per (basis pair (i<j), A-coordinate); columns: unknowns, then
  // one right-hand-side column
  std::vector<Vec> rows;
  std::vector<Scalar> rhs;
  for (uint32_t i = 0; i < G.dim; ++i)
    for (uint32_t j = i + 1; j < G.dim; ++j) {
      // f(i,j) = rho(e_i)·e_j - rho(e_j)·e_i - rho([e_i,e_j])
      std::map<std::pair<uint32_t, uint32_t>, Scalar> coef;  // (a-coord, unknown)
      auto add = [&](uint32_t arow, uint32_t u, const Scalar& c) {
        auto key = std::make_pair(arow, u);
        auto it = coef.find(key);
        if (it == coef.end()) {
          if (!c.is_zero()) coef.emplace(key, c);
        } else {
          it->second += c;
          if (it->second.is_zero()) coef.erase(it);
        }
      };
      // rho(e_i)·e_j: action[j] applied to the unknown column rho(:,i)
      for (const auto& [rc, v] : A.action[j].entries()) add(rc.first, unk(rc.second, i), v);
      for (const auto& [rc, v] : A.action[i].entries()) add(rc.first, unk(rc.second, j), -v);
      for (const auto& [k, c] : G.bracket(i, j))
        for (uint32_t r = 0; r < A.dim; ++r) add(r, unk(r, k), -c);
      Vec fij = f.at(i, j, A.field);
      for (uint32_t r = 0; r < A.dim; ++r) {
        Vec row;
        for (const auto& [key, c] : coef)
          if (key.first == r) row.emplace(key.second, c);
        Scalar b = vec_get(fij, r, A.field);
        if (row.empty() && b.is_zero()) continue;
        rows.push_back(std::move(row));
        rhs.push_back(b);
      }
    }
  // solve by elimination on the augmented system
  Subspace ech(nunk + 1);
  for (size_t r = 0; r < rows.size(); ++r) {
    Vec aug = rows[r];
    if (!rhs[r].is_zero()) aug.emplace(nunk, rhs[r]);
    ech.insert(std::move(aug));
  }
  // infeasible iff a pivot lands on the rhs column
  for (const Vec& row : ech.basis())
    if (row.begin()->first == nunk) return std::nullopt;
  // back-read a particular solution: free unknowns 0, pivots forced
  Retraction out;
  out.rho = SparseMatrix(A.dim, G.dim);
  for (const Vec& row : ech.basis()) {
    uint32_t piv = row.begin()->first;
    auto it = row.find(nunk);
    if (it == row.end()) continue;
    // pivot + (tail on free unknowns, all set to zero) = rhs  =>  pivot = rhs
    Scalar val = it->second;
    out.rho.set(piv / G.dim, piv % G.dim, val);
  }
  return out;
}

ExtElement MuMap::apply(const ExtElement& x, const FieldSpec& field) const {
  ExtElement out = x;
  vec_axpy(out.a, Scalar::one(field), rho.apply(x.g, field));
  return out;
}

ExtElement MuMap::apply_inverse(const ExtElement& x, const FieldSpec& field) const {
  ExtElement out = x;
  vec_axpy(out.a, -Scalar::one(field), rho.apply(x.g, field));
  return out;
}

MuMap mu_map(const Extension& e, const Retraction& rho) {
  const GModule& A = *e.A;
  const FiniteLieAlgebra& G = *e.G;
  // the splitting equation must hold on every basis pair
  for (uint32_t i = 0; i < G.dim; ++i)
    for (uint32_t j = i + 1; j < G.dim; ++j) {
      Vec want = A.act(rho.apply(vec_unit(i, A.field), A.field), j);
      vec_axpy(want, -Scalar::one(A.field), A.act(rho.apply(vec_unit(j, A.field), A.field), i));
      vec_axpy(want, -Scalar::one(A.field), rho.apply(G.bracket(i, j), A.field));
      if (!(want == e.f.at(i, j, A.field))) throw MuViolation(i, j);
    }
  MuMap mu{rho};
  // bracket preservation onto the split extension, all basis pairs
  Extension split{&G, &A, FactorSet{G.dim, {}}};
  const uint32_t n = A.dim + G.dim;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j) {
      ExtElement x = basis_elt(A.dim, i, A.field);
      ExtElement y = basis_elt(A.dim, j, A.field);
      ExtElement lhs = mu.apply(e.bracket(x, y), A.field);
      ExtElement rhs = split.bracket(mu.apply(x, A.field), mu.apply(y, A.field));
      if (!(lhs == rhs)) throw std::runtime_error("mu is not a homomorphism");
    }
  // bijectivity via the explicit inverse
  for (uint32_t k = 0; k < n; ++k) {
    ExtElement x = basis_elt(A.dim, k, A.field);
    if (!(mu.apply_inverse(mu.apply(x, A.field), A.field) == x) ||
        !(mu.apply(mu.apply_inverse(x, A.field), A.field) == x))
      throw std::runtime_error("mu inverse fails");
  }
  return mu;
}

Extension semidirect_build(const GModule& A, const FiniteLieAlgebra& G) {
  A.validate(G);
  return Extension{&G, &A, FactorSet{G.dim, {}}};
}

}  // namespace liewreath
