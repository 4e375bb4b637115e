#include "liewreath/varieties.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "liewreath/lyndon.hpp"

namespace liewreath {

RepIdentity parse_identity(const std::string& text, const FieldSpec& field,
                           uint32_t cap) {
  // generous variable budget, re-homed to the tight arity afterwards
  AssocContext ctx(16, cap, field);
  AssocElement body(ctx);
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("identity parse error at offset " +
                                std::to_string(i) + ": " + why);
  };
  skip();
  if (i >= text.size()) fail("empty identity");
  bool negate = false;
  if (text[i] == '-') {
    negate = true;
    ++i;
  }
  while (true) {
    skip();
    Scalar coeff = Scalar::one(field);
    // optional coefficient
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      size_t start = i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '/'))
        ++i;
      coeff = Scalar::parse(text.substr(start, i - start), field);
      skip();
      if (i >= text.size() || text[i] != '*') fail("expected * after coefficient");
      ++i;
      skip();
    }
    if (i >= text.size() || text[i] != 'y') fail("expected y");
    ++i;
    Word w;
    while (true) {
      skip();
      if (i >= text.size() || text[i] != '*') break;
      ++i;
      skip();
      if (i >= text.size() || text[i] != 'v') fail("expected v<k>");
      ++i;
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) fail("expected variable index");
      unsigned long idx = std::stoul(text.substr(start, i - start));
      if (idx == 0 || idx > ctx.gens) fail("variable index out of range");
      w.push_back(static_cast<uint32_t>(idx - 1));
    }
    body.add_term(w, negate ? -coeff : coeff);
    skip();
    if (i >= text.size()) break;
    if (text[i] != '+' && text[i] != '-') fail("expected + or -");
    negate = (text[i] == '-');
    ++i;
  }
  if (body.is_zero()) throw std::invalid_argument("identity is identically zero");
  uint32_t arity = 0;
  for (const auto& [w, c] : body.terms())
    for (uint32_t l : w) arity = std::max(arity, l + 1);
  AssocContext tight(arity, cap, field);
  AssocElement tb(tight);
  for (const auto& [w, c] : body.terms()) tb.add_term(w, c);
  RepIdentity id;
  id.body = std::move(tb);
  id.arity = arity;
  id.text = render_identity(id);
  return id;
}

VarietySpec parse_variety(const std::vector<std::string>& texts,
                          const FieldSpec& field, uint32_t cap) {
  VarietySpec spec;
  for (const auto& t : texts) spec.identities.push_back(parse_identity(t, field, cap));
  return spec;
}

std::string render_identity(const RepIdentity& id) {
  if (id.body.is_zero()) return "0";
  // same term order as render_assoc: descending degree, ascending lex
  std::vector<const std::pair<const Word, Scalar>*> terms;
  for (const auto& t : id.body.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [&](const auto* x, const auto* y) {
    if (x->first.size() != y->first.size()) return x->first.size() > y->first.size();
    return x->first < y->first;
  });
  std::string out;
  bool first = true;
  for (const auto* t : terms) {
    std::string c = t->second.str();
    bool neg = !c.empty() && c[0] == '-';
    std::string mag = neg ? c.substr(1) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string body = (mag == "1") ? "y" : mag + "*y";
    for (uint32_t l : t->first) body += "*v" + std::to_string(l + 1);
    out += body;
  }
  return out;
}

std::vector<RepIdentity> multihom_decompose(const RepIdentity& id) {
  std::map<std::vector<uint32_t>, AssocElement> comps;
  for (const auto& [w, c] : id.body.terms()) {
    auto d = multidegree(id.body.ctx(), w);
    auto it = comps.find(d);
    if (it == comps.end()) it = comps.emplace(d, AssocElement(id.body.ctx())).first;
    it->second.add_term(w, c);
  }
  std::vector<RepIdentity> out;
  for (auto& [d, body] : comps) {
    RepIdentity part;
    part.arity = id.arity;
    part.body = std::move(body);
    part.text = render_identity(part);
    out.push_back(std::move(part));
  }
  return out;
}

VarietySpec validate_multihomogeneous(const VarietySpec& spec) {
  VarietySpec out;
  for (const auto& id : spec.identities)
    for (auto& part : multihom_decompose(id)) out.identities.push_back(std::move(part));
  out.multihom_validated = true;
  return out;
}

size_t VerbalSubmodule::total_dim() const {
  size_t n = 0;
  for (const auto& s : by_degree) n += s.dim();
  return n;
}

std::vector<size_t> VerbalSubmodule::graded_dims() const {
  std::vector<size_t> out;
  for (const auto& s : by_degree) out.push_back(s.dim());
  return out;
}

bool VerbalSubmodule::member(const RepPair& p, const Vec& v) const {
  std::vector<Vec> split(by_degree.size());
  for (const auto& [i, c] : v) {
    uint32_t d = p.module_degrees[i];
    if (d >= split.size()) return false;
    split[d].emplace(i, c);
  }
  for (uint32_t d = 0; d < split.size(); ++d)
    if (!split[d].empty() && !by_degree[d].member(split[d])) return false;
  return true;
}

Vec identity_value(const RepPair& p, const AssocElement& body,
                   const std::vector<Vec>& args, const Vec& m) {
  Vec out;
  for (const auto& [w, c] : body.terms()) {
    Vec cur = vec_scale(c, m);
    for (uint32_t l : w) {
      if (cur.empty()) break;
      cur = p.act_elem(cur, args.at(l));
    }
    vec_axpy(out, Scalar::one(p.field), cur);
  }
  return out;
}

VerbalSubmodule verbal_submodule(const RepPair& pair, const VarietySpec& spec,
                                 const std::vector<Vec>& subalgebra_basis) {
  if (!spec.multihom_validated)
    throw std::invalid_argument("variety spec not multihomogeneous-validated");
  VerbalSubmodule out;
  out.by_degree.assign(pair.cap + 1, Subspace(pair.module_dim()));

  // degrees of the subalgebra basis elements (must be homogeneous)
  std::vector<uint32_t> arg_degree;
  for (const Vec& a : subalgebra_basis) {
    if (a.empty()) throw std::invalid_argument("zero subalgebra element");
    uint32_t d = pair.algebra.degrees[a.begin()->first];
    for (const auto& [i, c] : a)
      if (pair.algebra.degrees[i] != d)
        throw std::invalid_argument("subalgebra basis must be homogeneous");
    arg_degree.push_back(d);
  }

  auto insert_value = [&](const Vec& v) {
    if (v.empty()) return;
    uint32_t d = pair.module_degrees[v.begin()->first];
    out.by_degree[d].insert(v);
  };

  for (const RepIdentity& id : spec.identities) {
    for (const MultilinearForm& ml : multilinearize(id.body)) {
      if (ml.arity > pair.cap) continue;
      std::vector<Vec> args(ml.arity);
      std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t slot, uint32_t budget) {
        if (slot == ml.arity) {
          for (uint32_t m = 0; m < pair.module_dim(); ++m) {
            if (pair.module_degrees[m] + (pair.cap - budget) > pair.cap) continue;
            insert_value(identity_value(pair, ml.body, args, vec_unit(m, pair.field)));
          }
          return;
        }
        for (uint32_t k = 0; k < subalgebra_basis.size(); ++k) {
          if (arg_degree[k] > budget) continue;
          args[slot] = subalgebra_basis[k];
          rec(slot + 1, budget - arg_degree[k]);
        }
      };
      rec(0, pair.cap);
    }
  }

  // close under the action of the full pair algebra; a single ascending
  // sweep since generators raise degree
  for (uint32_t d = 0; d <= pair.cap; ++d) {
    for (size_t r = 0; r < out.by_degree[d].dim(); ++r) {
      Vec row = out.by_degree[d].basis()[r];
      for (uint32_t g : pair.algebra.generators) {
        if (d + pair.algebra.degrees[g] > pair.cap) continue;
        insert_value(pair.act(row, g));
      }
    }
  }
  return out;
}

}  // namespace liewreath
