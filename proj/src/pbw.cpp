#include "liewreath/pbw.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace liewreath {

PbwAlgebra::PbwAlgebra(GradedLie lie, uint32_t cap)
    : lie_(std::move(lie)), cap_(cap) {
  // nondecreasing sequences of basis indices with total degree <= cap
  std::vector<uint32_t> cur;
  std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t lo, uint32_t budget) {
    monos_.push_back(cur);
    for (uint32_t b = lo; b < lie_.dim(); ++b) {
      uint32_t d = lie_.degrees[b];
      if (d > budget) continue;
      cur.push_back(b);
      rec(b, budget - d);
      cur.pop_back();
    }
  };
  rec(0, cap_);
  std::sort(monos_.begin(), monos_.end(),
            [&](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
              uint32_t da = 0, db = 0;
              for (uint32_t i : a) da += lie_.degrees[i];
              for (uint32_t i : b) db += lie_.degrees[i];
              if (da != db) return da < db;
              return a < b;
            });
  mono_degree_.reserve(monos_.size());
  for (uint32_t m = 0; m < monos_.size(); ++m) {
    uint32_t d = 0;
    for (uint32_t i : monos_[m]) d += lie_.degrees[i];
    mono_degree_.push_back(d);
    index_.emplace(monos_[m], m);
  }
}

uint32_t PbwAlgebra::index_of(const std::vector<uint32_t>& seq) const {
  auto it = index_.find(seq);
  if (it == index_.end()) throw std::invalid_argument("not a PBW monomial");
  return it->second;
}

std::vector<uint32_t> PbwAlgebra::of_degree(uint32_t d) const {
  std::vector<uint32_t> out;
  for (uint32_t m = 0; m < monos_.size(); ++m)
    if (mono_degree_[m] == d) out.push_back(m);
  return out;
}

std::vector<size_t> PbwAlgebra::graded_dims() const {
  std::vector<size_t> out(cap_ + 1, 0);
  for (uint32_t d : mono_degree_) ++out[d];
  return out;
}

std::string PbwAlgebra::label(uint32_t m) const {
  if (monos_[m].empty()) return "1";
  std::string out;
  for (uint32_t i : monos_[m]) {
    if (!out.empty()) out += "*";
    out += lie_.labels[i];
  }
  return out;
}

Vec PbwAlgebra::mul_basis(uint32_t m, uint32_t b) const {
  auto key = std::make_pair(m, b);
  auto hit = memo_.find(key);
  if (hit != memo_.end()) return hit->second;
  Vec out;
  if (mono_degree_[m] + lie_.degrees[b] > cap_) {
    memo_.emplace(key, out);
    return out;
  }
  const std::vector<uint32_t>& seq = monos_[m];
  if (seq.empty() || seq.back() <= b) {
    std::vector<uint32_t> ext = seq;
    ext.push_back(b);
    out = vec_unit(index_of(ext), lie_.field);
  } else {
    // m = m'·last with last > b:  m·b = (m'·b)·last + m'·[last, b]
    uint32_t last = seq.back();
    std::vector<uint32_t> head(seq.begin(), seq.end() - 1);
    uint32_t hm = index_of(head);
    out = mul_vec(mul_basis(hm, b), last);
    for (const auto& [k, c] : lie_.bracket(last, b))
      vec_axpy(out, c, mul_basis(hm, k));
  }
  memo_.emplace(key, out);
  return out;
}

Vec PbwAlgebra::mul_vec(const Vec& x, uint32_t b) const {
  Vec out;
  for (const auto& [m, c] : x) vec_axpy(out, c, mul_basis(m, b));
  return out;
}

Vec PbwAlgebra::mul_monomial(const Vec& x, uint32_t m) const {
  Vec out = x;
  for (uint32_t b : monos_[m]) out = mul_vec(out, b);
  return out;
}

Vec PbwAlgebra::mul_elems(const Vec& x, const Vec& y) const {
  Vec out;
  for (const auto& [m, c] : y) vec_axpy(out, c, mul_monomial(x, m));
  return out;
}

Vec PbwAlgebra::lie_embed(const Vec& lie_coords) const {
  Vec out;
  for (const auto& [i, c] : lie_coords)
    out.emplace(index_of({i}), c);
  return out;
}

Vec PbwAlgebra::apply_derivation(const std::vector<Vec>& delta, uint32_t m) const {
  if (delta.size() != lie_.dim())
    throw std::invalid_argument("derivation table shape mismatch");
  const std::vector<uint32_t>& seq = monos_[m];
  Vec out;
  for (size_t j = 0; j < seq.size(); ++j) {
    std::vector<uint32_t> head(seq.begin(), seq.begin() + j);
    Vec x = vec_unit(index_of(head), lie_.field);
    // multiply by delta(seq[j]) as a Lie combination, then by the tail
    Vec mid;
    for (const auto& [k, c] : delta[seq[j]]) vec_axpy(mid, c, mul_vec(x, k));
    for (size_t t = j + 1; t < seq.size(); ++t) mid = mul_vec(mid, seq[t]);
    vec_axpy(out, Scalar::one(lie_.field), mid);
  }
  return out;
}

Vec PbwAlgebra::apply_derivation_vec(const std::vector<Vec>& delta, const Vec& x) const {
  Vec out;
  for (const auto& [m, c] : x) vec_axpy(out, c, apply_derivation(delta, m));
  return out;
}

}  // namespace liewreath
