#include "liewreath/pairs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "liewreath/lyndon.hpp"
#include "liewreath/varieties.hpp"

namespace liewreath {

std::vector<uint32_t> RepPair::module_of_degree(uint32_t d) const {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < module_dim(); ++i)
    if (module_degrees[i] == d) out.push_back(i);
  return out;
}

std::vector<size_t> RepPair::graded_dims() const {
  std::vector<size_t> out(cap + 1, 0);
  for (uint32_t d : module_degrees) ++out[d];
  return out;
}

std::vector<size_t> graded_dims(const RepPair& p) { return p.graded_dims(); }

Vec RepPair::act(const Vec& m, uint32_t lie_idx) const {
  return action.at(lie_idx).apply(m, field);
}

Vec RepPair::act_elem(const Vec& m, const Vec& lie_coords) const {
  Vec out;
  for (const auto& [i, c] : lie_coords) vec_axpy(out, c, act(m, i));
  return out;
}

void RepPair::validate_representation() const {
  if (action.size() != algebra.dim())
    throw std::runtime_error("one action matrix per algebra basis element required");
  for (uint32_t a = 0; a < algebra.dim(); ++a)
    for (uint32_t b = a + 1; b < algebra.dim(); ++b) {
      SparseMatrix lhs = mat_sub(mat_mul(action[b], action[a], field),
                                 mat_mul(action[a], action[b], field));
      SparseMatrix rhs(module_dim(), module_dim());
      for (const auto& [k, c] : algebra.bracket(a, b)) {
        for (const auto& [rc, v] : action[k].entries())
          rhs.add_to(rc.first, rc.second, c * v);
      }
      if (!(lhs == rhs))
        throw std::runtime_error("representation law fails on basis pair (" +
                                 algebra.labels[a] + ", " + algebra.labels[b] + ")");
    }
}

namespace {

std::vector<Word> all_words(uint32_t gens, uint32_t cap) {
  std::vector<Word> out{Word{}};
  size_t lo = 0;
  for (uint32_t d = 1; d <= cap; ++d) {
    size_t hi = out.size();
    for (size_t k = lo; k < hi; ++k)
      if (out[k].size() == d - 1)
        for (uint32_t g = 0; g < gens; ++g) {
          Word w = out[k];
          w.push_back(g);
          out.push_back(std::move(w));
        }
    lo = hi;
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::string word_label(const Word& w, const std::string& letter) {
  if (w.empty()) return "1";
  std::string out;
  for (uint32_t l : w) {
    if (!out.empty()) out += "*";
    out += letter + std::to_string(l + 1);
  }
  return out;
}

}  // namespace

RepPair free_word_pair(uint32_t gens, uint32_t cap, const FieldSpec& field,
                       const std::string& letter) {
  FreeLie L(gens, cap, field);
  RepPair p;
  p.algebra = graded_from_free(L, letter);
  p.cap = cap;
  p.field = field;
  auto words = all_words(gens, cap);
  std::map<Word, uint32_t> idx;
  for (uint32_t k = 0; k < words.size(); ++k) {
    idx.emplace(words[k], k);
    p.module_degrees.push_back(static_cast<uint32_t>(words[k].size()));
    p.module_labels.push_back(word_label(words[k], letter));
  }
  p.basis_words = words;
  const uint32_t n = p.module_dim();
  for (uint32_t b = 0; b < p.algebra.dim(); ++b) {
    SparseMatrix m(n, n);
    const AssocElement& ex = L.expansion(b);
    for (uint32_t col = 0; col < n; ++col) {
      AssocElement prod =
          mul(AssocElement::monomial(L.assoc_ctx(), words[col], Scalar::one(field)), ex);
      for (const auto& [w, c] : prod.terms()) m.add_to(idx.at(w), col, c);
    }
    p.action.push_back(std::move(m));
  }
  p.cyclic = vec_unit(idx.at(Word{}), field);
  return p;
}

RepPair free_cyclic_pair(const VarietySpec& spec, uint32_t gens, uint32_t cap,
                         const FieldSpec& field, const std::string& letter) {
  if (!spec.multihom_validated)
    throw std::invalid_argument("variety spec not multihomogeneous-validated");
  RepPair free = free_word_pair(gens, cap, field, letter);
  std::vector<Vec> subalg;
  for (uint32_t i = 0; i < free.algebra.dim(); ++i)
    subalg.push_back(vec_unit(i, field));
  VerbalSubmodule xstar = verbal_submodule(free, spec, subalg);
  return quotient_pair(free, xstar);
}

RepPair quotient_pair(const RepPair& p, const VerbalSubmodule& s) {
  // the submodule must be closed under every basis action
  for (const Subspace& block : s.by_degree)
    for (const Vec& row : block.basis())
      for (uint32_t b = 0; b < p.algebra.dim(); ++b) {
        Vec img = p.act(row, b);
        if (!img.empty() && !s.member(p, img))
          throw std::invalid_argument("submodule not action-closed (" +
                                      p.algebra.labels[b] + ")");
      }
  Subspace all(p.module_dim());
  for (const Subspace& block : s.by_degree)
    for (const Vec& row : block.basis()) all.insert(row);
  auto reps = all.free_coords();
  std::map<uint32_t, uint32_t> pos;
  for (uint32_t k = 0; k < reps.size(); ++k) pos.emplace(reps[k], k);

  RepPair q;
  q.algebra = p.algebra;
  q.cap = p.cap;
  q.field = p.field;
  for (uint32_t r : reps) {
    q.module_degrees.push_back(p.module_degrees[r]);
    q.module_labels.push_back(p.module_labels[r]);
    if (p.basis_words.size() == p.module_dim())
      q.basis_words.push_back(p.basis_words[r]);
  }
  auto project = [&](const Vec& v) {
    Vec red = all.reduce(v);
    Vec out;
    for (const auto& [i, c] : red) out.emplace(pos.at(i), c);
    return out;
  };
  const uint32_t n = static_cast<uint32_t>(reps.size());
  for (uint32_t b = 0; b < p.algebra.dim(); ++b) {
    SparseMatrix m(n, n);
    for (uint32_t col = 0; col < n; ++col) {
      Vec img = project(p.act(vec_unit(reps[col], p.field), b));
      for (const auto& [r, c] : img) m.add_to(r, col, c);
    }
    q.action.push_back(std::move(m));
  }
  if (p.cyclic) {
    Vec c = project(*p.cyclic);
    if (!c.empty()) q.cyclic = std::move(c);
  }
  return q;
}

namespace {

// echelon under the coordinate priority "highest degree first": a reduced
// row's pivot is its top-degree coordinate, so pivot counts per degree block
// are the dims of the associated graded of the filtration
struct FilteredEchelon {
  std::vector<uint32_t> fwd, bwd;  // original <-> permuted coordinates
  Subspace space;

  explicit FilteredEchelon(const std::vector<uint32_t>& degrees)
      : space(static_cast<uint32_t>(degrees.size())) {
    bwd.resize(degrees.size());
    std::iota(bwd.begin(), bwd.end(), 0);
    std::sort(bwd.begin(), bwd.end(), [&](uint32_t a, uint32_t b) {
      if (degrees[a] != degrees[b]) return degrees[a] > degrees[b];
      return a < b;
    });
    fwd.resize(degrees.size());
    for (uint32_t k = 0; k < bwd.size(); ++k) fwd[bwd[k]] = k;
  }
  Vec permute(const Vec& v) const {
    Vec out;
    for (const auto& [i, c] : v) out.emplace(fwd[i], c);
    return out;
  }
  Vec unpermute(const Vec& v) const {
    Vec out;
    for (const auto& [i, c] : v) out.emplace(bwd[i], c);
    return out;
  }
  bool insert(const Vec& v) { return space.insert(permute(v)); }
  std::vector<Vec> rows() const {
    std::vector<Vec> out;
    for (const Vec& r : space.basis()) out.push_back(unpermute(r));
    return out;
  }
  // original coordinate of each row's pivot
  std::vector<uint32_t> pivot_coords() const {
    std::vector<uint32_t> out;
    for (uint32_t pv : space.pivots()) out.push_back(bwd[pv]);
    return out;
  }
  Vec coordinates_or_throw(const Vec& v) const {
    auto c = space.coordinates(permute(v));
    if (!c) throw std::runtime_error("vector escapes the closed span");
    return *c;
  }
};

}  // namespace

RepPair subpair_generated(const RepPair& p, const std::vector<Vec>& lie_gens,
                          const std::vector<Vec>& module_gens) {
  FilteredEchelon alg(p.algebra.degrees);
  for (const Vec& g : lie_gens) alg.insert(g);
  // Lie closure under brackets
  while (true) {
    bool grew = false;
    auto rows = alg.rows();
    for (size_t a = 0; a < rows.size(); ++a)
      for (size_t b = a + 1; b < rows.size(); ++b)
        grew |= alg.insert(p.algebra.bracket_elems(rows[a], rows[b]));
    if (!grew) break;
  }
  // module closure under the subalgebra action
  FilteredEchelon mod(p.module_degrees);
  for (const Vec& m : module_gens) mod.insert(m);
  auto algrows = alg.rows();
  while (true) {
    bool grew = false;
    auto rows = mod.rows();
    for (const Vec& m : rows)
      for (const Vec& a : algrows) grew |= mod.insert(p.act_elem(m, a));
    if (!grew) break;
  }

  RepPair sub;
  sub.cap = p.cap;
  sub.field = p.field;
  auto apiv = alg.pivot_coords();
  sub.algebra.cap = p.cap;
  sub.algebra.field = p.field;
  bool graded = true;
  for (size_t k = 0; k < algrows.size(); ++k) {
    uint32_t d = p.algebra.degrees[apiv[k]];
    sub.algebra.degrees.push_back(d);
    sub.algebra.labels.push_back(p.algebra.labels[apiv[k]] + "~");
    for (const auto& [i, c] : algrows[k])
      if (p.algebra.degrees[i] != d) graded = false;
  }
  sub.algebra.strictly_graded = graded;
  for (uint32_t k = 0; k < algrows.size(); ++k) sub.algebra.generators.push_back(k);
  for (uint32_t a = 0; a < algrows.size(); ++a)
    for (uint32_t b = a + 1; b < algrows.size(); ++b) {
      Vec br = p.algebra.bracket_elems(algrows[a], algrows[b]);
      if (br.empty()) continue;
      Vec coords = alg.coordinates_or_throw(br);
      sub.algebra.table.emplace(std::make_pair(a, b), coords);
    }

  auto mrows = mod.rows();
  auto mpiv = mod.pivot_coords();
  for (size_t k = 0; k < mrows.size(); ++k) {
    sub.module_degrees.push_back(p.module_degrees[mpiv[k]]);
    sub.module_labels.push_back(p.module_labels[mpiv[k]] + "~");
  }
  const uint32_t n = static_cast<uint32_t>(mrows.size());
  for (uint32_t a = 0; a < algrows.size(); ++a) {
    SparseMatrix m(n, n);
    for (uint32_t col = 0; col < n; ++col) {
      Vec img = p.act_elem(mrows[col], algrows[a]);
      if (img.empty()) continue;
      for (const auto& [r, c] : mod.coordinates_or_throw(img)) m.add_to(r, col, c);
    }
    sub.action.push_back(std::move(m));
  }
  if (!module_gens.empty()) {
    auto c = mod.space.coordinates(mod.permute(module_gens[0]));
    if (c) sub.cyclic = *c;
  }
  return sub;
}

PairHom extend_hom(const RepPair& dom, const RepPair& cod,
                   const std::vector<Vec>& gen_images, const Vec& cyclic_image) {
  if (!dom.cyclic) throw std::invalid_argument("domain pair is not cyclic");
  if (dom.basis_words.size() != dom.module_dim())
    throw std::invalid_argument("domain pair carries no word labels");
  PairHom h;
  h.algebra_map = dom.algebra.extend_generator_images(cod.algebra, gen_images);
  SparseMatrix mm(cod.module_dim(), dom.module_dim());
  for (uint32_t j = 0; j < dom.module_dim(); ++j) {
    Vec img = cyclic_image;
    for (uint32_t letter : dom.basis_words[j]) {
      if (img.empty()) break;
      img = cod.act_elem(img, gen_images.at(letter));
    }
    for (const auto& [r, c] : img) mm.add_to(r, j, c);
  }
  h.module_map = std::move(mm);
  // columns of the module map, once
  std::vector<Vec> col(dom.module_dim());
  for (const auto& [rc, v] : h.module_map.entries()) col[rc.second].emplace(rc.first, v);
  // intertwining on every basis element, generator by generator
  for (uint32_t j = 0; j < dom.module_dim(); ++j) {
    for (uint32_t g : dom.algebra.generators) {
      Vec lhs;
      for (const auto& [i, c] : dom.act(vec_unit(j, dom.field), g))
        vec_axpy(lhs, c, col[i]);
      Vec rhs = cod.act_elem(col[j], h.algebra_map[g]);
      if (!(lhs == rhs))
        throw std::runtime_error("not a morphism into the variety (fails at " +
                                 dom.module_labels[j] + " * " +
                                 dom.algebra.labels[g] + ")");
    }
  }
  return h;
}

}  // namespace liewreath
