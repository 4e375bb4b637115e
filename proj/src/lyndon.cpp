#include "liewreath/lyndon.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace liewreath {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  const size_t n = w.size();
  for (size_t r = 1; r < n; ++r) {
    // compare w with its rotation by r
    for (size_t i = 0; i < n; ++i) {
      uint32_t a = w[i], b = w[(i + r) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal to a proper rotation
    }
  }
  return true;
}

namespace {

// All Lyndon words of length <= maxlen over `gens` letters (Duval).
std::vector<Word> lyndon_words_up_to(uint32_t gens, uint32_t maxlen) {
  std::vector<Word> out;
  if (gens == 0 || maxlen == 0) return out;
  Word w{0};
  while (true) {
    out.push_back(w);
    size_t m = w.size();
    while (w.size() < maxlen) w.push_back(w[w.size() % m]);
    while (!w.empty() && w.back() == gens - 1) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  return out;
}

}  // namespace

FreeLie::FreeLie(uint32_t gens, uint32_t cap, FieldSpec field,
                 std::vector<uint32_t> weights)
    : ctx_(gens, cap, std::move(field), std::move(weights)) {
  std::vector<Word> words = lyndon_words_up_to(gens, cap);
  std::erase_if(words, [&](const Word& w) { return ctx_.degree(w) > cap; });
  std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
    uint32_t da = ctx_.degree(a), db = ctx_.degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  basis_.reserve(words.size());
  for (auto& w : words) {
    LyndonWord lw;
    lw.degree = ctx_.degree(w);
    lw.letters = std::move(w);
    index_.emplace(lw.letters, static_cast<uint32_t>(basis_.size()));
    basis_.push_back(std::move(lw));
  }
  // right standard factorization: the longest proper Lyndon suffix
  for (auto& lw : basis_) {
    const Word& w = lw.letters;
    if (w.size() < 2) continue;
    for (size_t len = w.size() - 1; len >= 1; --len) {
      Word suf(w.end() - len, w.end());
      if (!is_lyndon(suf)) continue;
      Word pre(w.begin(), w.end() - len);
      lw.left = static_cast<int32_t>(index_.at(pre));
      lw.right = static_cast<int32_t>(index_.at(suf));
      break;
    }
  }
  expansions_.reserve(basis_.size());
  for (uint32_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].left < 0) {
      expansions_.push_back(AssocElement::generator(ctx_, basis_[i].letters[0]));
    } else {
      expansions_.push_back(commutator(expansions_[basis_[i].left],
                                       expansions_[basis_[i].right]));
    }
  }
}

std::vector<uint32_t> FreeLie::basis_of_degree(uint32_t d) const {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].degree == d) out.push_back(i);
  return out;
}

size_t FreeLie::dim_of_degree(uint32_t d) const {
  return basis_of_degree(d).size();
}

uint32_t FreeLie::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end())
    throw std::invalid_argument("not a Lyndon basis word at this truncation");
  return it->second;
}

std::string FreeLie::bracket_label(uint32_t i, const std::string& letter) const {
  return bracket_label(
      i, [&](uint32_t g) { return letter + std::to_string(g + 1); });
}

std::string FreeLie::bracket_label(
    uint32_t i, const std::function<std::string(uint32_t)>& name) const {
  const LyndonWord& lw = basis_[i];
  if (lw.left < 0) return name(lw.letters[0]);
  return "[" + bracket_label(lw.left, name) + "," + bracket_label(lw.right, name) + "]";
}

LieElement LieElement::operator-() const {
  LieElement r{alg, {}};
  for (const auto& [i, c] : coords) r.coords.emplace(i, -c);
  return r;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  if (alg != o.alg) throw std::invalid_argument("ambient mismatch");
  for (const auto& [i, c] : o.coords) {
    auto it = coords.find(i);
    if (it == coords.end()) {
      coords.emplace(i, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coords.erase(it);
    }
  }
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) { return *this += -o; }

LieElement LieElement::scaled(const Scalar& c) const {
  LieElement r{alg, {}};
  if (c.is_zero()) return r;
  for (const auto& [i, x] : coords) r.coords.emplace(i, c * x);
  return r;
}

uint32_t LieElement::max_degree() const {
  uint32_t d = 0;
  for (const auto& [i, c] : coords) d = std::max(d, alg->degree(i));
  return d;
}

bool LieElement::homogeneous() const {
  if (coords.empty()) return true;
  uint32_t d = alg->degree(coords.begin()->first);
  for (const auto& [i, c] : coords)
    if (alg->degree(i) != d) return false;
  return true;
}

LieElement lie_zero(const FreeLie& L) { return LieElement{&L, {}}; }

LieElement lie_generator(const FreeLie& L, uint32_t i) {
  return lie_basis_element(L, L.index_of(Word{i}));
}

LieElement lie_basis_element(const FreeLie& L, uint32_t idx) {
  if (idx >= L.basis_size()) throw std::invalid_argument("basis index");
  return LieElement{&L, vec_unit(idx, L.field())};
}

AssocElement lie_to_assoc(const LieElement& a) {
  if (!a.alg) throw std::invalid_argument("unbound Lie element");
  AssocElement out(a.alg->assoc_ctx());
  for (const auto& [i, c] : a.coords) out += a.alg->expansion(i).scaled(c);
  return out;
}

LieElement assoc_to_lie(const FreeLie& L, const AssocElement& a) {
  if (!(a.ctx() == L.assoc_ctx())) throw std::invalid_argument("ambient mismatch");
  LieElement out = lie_zero(L);
  for (AssocElement comp : grade_split(a)) {
    size_t guard = 0;
    while (!comp.is_zero()) {
      // lex-smallest word; for a Lie element it is Lyndon and leads its
      // bracketing's expansion with coefficient 1
      auto best = comp.terms().begin();
      for (auto it = std::next(comp.terms().begin()); it != comp.terms().end(); ++it)
        if (it->first < best->first) best = it;
      if (!is_lyndon(best->first))
        throw std::invalid_argument("not a Lie element");
      uint32_t idx = L.index_of(best->first);
      Scalar c = best->second;
      auto it = out.coords.find(idx);
      if (it == out.coords.end())
        out.coords.emplace(idx, c);
      else {
        it->second += c;
        if (it->second.is_zero()) out.coords.erase(it);
      }
      comp -= L.expansion(idx).scaled(c);
      if (++guard > 1000000) throw std::runtime_error("assoc_to_lie diverged");
    }
  }
  return out;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  if (a.alg != b.alg || !a.alg) throw std::invalid_argument("ambient mismatch");
  return assoc_to_lie(*a.alg, commutator(lie_to_assoc(a), lie_to_assoc(b)));
}

LieElement derivation_apply(const std::vector<LieElement>& images,
                            const LieElement& x) {
  if (!x.alg) throw std::invalid_argument("unbound Lie element");
  const FreeLie& L = *x.alg;
  if (images.size() != L.gens())
    throw std::invalid_argument("need one image per generator");
  std::map<uint32_t, LieElement> memo;
  std::function<const LieElement&(uint32_t)> d = [&](uint32_t i) -> const LieElement& {
    auto it = memo.find(i);
    if (it != memo.end()) return it->second;
    const LyndonWord& lw = L.basis(i);
    LieElement val = lie_zero(L);
    if (lw.left < 0) {
      val = images[lw.letters[0]];
    } else {
      val = bracket(d(lw.left), lie_basis_element(L, lw.right)) +
            bracket(lie_basis_element(L, lw.left), d(lw.right));
    }
    return memo.emplace(i, std::move(val)).first->second;
  };
  LieElement out = lie_zero(L);
  for (const auto& [i, c] : x.coords) out += d(i).scaled(c);
  return out;
}

std::string render_lie(const LieElement& a, const std::string& letter) {
  if (a.is_zero()) return "0";
  const FreeLie& L = *a.alg;
  std::vector<uint32_t> idx;
  for (const auto& [i, c] : a.coords) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](uint32_t x, uint32_t y) {
    if (L.degree(x) != L.degree(y)) return L.degree(x) > L.degree(y);
    return x < y;
  });
  std::string out;
  bool first = true;
  for (uint32_t i : idx) {
    std::string c = a.coords.at(i).str();
    bool neg = !c.empty() && c[0] == '-';
    std::string mag = neg ? c.substr(1) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string body = L.bracket_label(i, letter);
    out += (mag == "1") ? body : mag + "*" + body;
  }
  return out;
}

namespace {

struct LieCursor {
  const std::string& s;
  size_t i;
  const AssocContext& ctx;
  const std::string& letter;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(i) +
                                ": " + why);
  }

  std::string number() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected number");
    if (peek() == '/') {
      ++i;
      size_t dstart = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == dstart) fail("expected denominator");
    }
    return s.substr(start, i - start);
  }

  AssocElement primary() {
    skip();
    if (peek() == '[') {
      ++i;
      AssocElement a = expr();
      if (peek() != ',') fail("expected , in bracket");
      ++i;
      AssocElement b = expr();
      if (peek() != ']') fail("expected ]");
      ++i;
      return commutator(a, b);
    }
    if (s.compare(i, letter.size(), letter) == 0 &&
        i + letter.size() < s.size() &&
        std::isdigit(static_cast<unsigned char>(s[i + letter.size()]))) {
      i += letter.size();
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      unsigned long idx = std::stoul(s.substr(start, i - start));
      if (idx == 0 || idx > ctx.gens) fail("generator index out of range");
      return AssocElement::generator(ctx, static_cast<uint32_t>(idx - 1));
    }
    fail("expected generator or [");
  }

  AssocElement term() {
    Scalar coeff = Scalar::one(ctx.field);
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= Scalar::parse(number(), ctx.field);
      if (peek() != '*') fail("expected * after coefficient");
      ++i;
    }
    return primary().scaled(coeff);
  }

  AssocElement expr() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i;
    }
    AssocElement out = term();
    if (neg) out = -out;
    while (true) {
      char op = peek();
      if (op != '+' && op != '-') break;
      ++i;
      AssocElement t = term();
      out += (op == '-') ? -t : t;
    }
    return out;
  }
};

}  // namespace

AssocElement parse_lie_expr(const std::string& text, const AssocContext& ctx,
                            const std::string& letter) {
  LieCursor c{text, 0, ctx, letter};
  AssocElement out = c.expr();
  c.skip();
  if (c.i != text.size()) c.fail("trailing input");
  return out;
}

LieElement parse_lie(const std::string& text, const FreeLie& L,
                     const std::string& letter) {
  return assoc_to_lie(L, parse_lie_expr(text, L.assoc_ctx(), letter));
}

LieVarietySpec parse_lie_variety(const std::vector<std::string>& texts,
                                 const FieldSpec& field, uint32_t cap) {
  LieVarietySpec spec;
  for (const std::string& t : texts) {
    // generous variable budget; identities are short bracket words
    AssocContext ctx(16, cap, field);
    AssocElement body = parse_lie_expr(t, ctx, "v");
    if (body.is_zero())
      throw std::invalid_argument("identity '" + t + "' is identically zero");
    uint32_t arity = 0;
    for (const auto& [w, c] : body.terms())
      for (uint32_t l : w) arity = std::max(arity, l + 1);
    // re-home to the tight arity
    AssocContext tight(arity, cap, field);
    AssocElement tb(tight);
    for (const auto& [w, c] : body.terms()) tb.add_term(w, c);
    spec.identities.push_back(LieIdentity{t, std::move(tb), arity});
  }
  return spec;
}

std::vector<MultilinearForm> multilinearize(const AssocElement& body) {
  // split by multidegree
  std::map<std::vector<uint32_t>, AssocElement> comps;
  for (const auto& [w, c] : body.terms()) {
    auto d = multidegree(body.ctx(), w);
    auto it = comps.find(d);
    if (it == comps.end())
      it = comps.emplace(d, AssocElement(body.ctx())).first;
    it->second.add_term(w, c);
  }
  std::vector<MultilinearForm> out;
  for (const auto& [d, comp] : comps) {
    uint32_t arity = 0;
    for (uint32_t k : d) arity += k;
    if (arity == 0)
      throw std::invalid_argument("constant identity component");
    std::vector<uint32_t> offset(d.size(), 0);
    for (size_t v = 1; v < d.size(); ++v) offset[v] = offset[v - 1] + d[v - 1];
    AssocContext mlctx(arity, arity, body.ctx().field);
    AssocElement ml(mlctx);
    for (const auto& [w, c] : comp.terms()) {
      // occurrence positions per variable
      std::vector<std::vector<size_t>> pos(d.size());
      for (size_t t = 0; t < w.size(); ++t) pos[w[t]].push_back(t);
      // assign fresh letters to each variable's slots in every order
      Word img(w.size(), 0);
      std::function<void(size_t)> emit = [&](size_t v) {
        if (v == d.size()) {
          ml.add_term(img, c);
          return;
        }
        if (d[v] == 0) {
          emit(v + 1);
          return;
        }
        std::vector<uint32_t> perm(d[v]);
        for (uint32_t k = 0; k < d[v]; ++k) perm[k] = k;
        do {
          for (uint32_t k = 0; k < d[v]; ++k) img[pos[v][k]] = offset[v] + perm[k];
          emit(v + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
      };
      emit(0);
    }
    if (!ml.is_zero()) out.push_back(MultilinearForm{std::move(ml), arity});
  }
  return out;
}

namespace {

std::vector<Subspace> fresh_family(const FreeLie& L) {
  std::vector<Subspace> fam;
  fam.reserve(L.cap() + 1);
  for (uint32_t d = 0; d <= L.cap(); ++d)
    fam.emplace_back(static_cast<uint32_t>(L.dim_of_degree(d)));
  return fam;
}

void insert_homogeneous(std::vector<Subspace>& fam, const FreeLie& L,
                        const LieElement& x) {
  if (x.is_zero()) return;
  if (!x.homogeneous()) throw std::invalid_argument("inhomogeneous element");
  uint32_t d = x.max_degree();
  fam[d].insert(lie_local_coords(L, x, d));
}

// close an already-seeded family under bracketing with the generators;
// single ascending sweep since every bracket raises degree
void ad_close(std::vector<Subspace>& fam, const FreeLie& L) {
  for (uint32_t d = 1; d <= L.cap(); ++d) {
    for (size_t r = 0; r < fam[d].dim(); ++r) {
      LieElement x = lie_from_local(L, fam[d].basis()[r], d);
      for (uint32_t g = 0; g < L.gens(); ++g) {
        uint32_t dg = L.assoc_ctx().weight(g);
        if (d + dg > L.cap()) continue;
        insert_homogeneous(fam, L, bracket(x, lie_generator(L, g)));
      }
    }
  }
}

}  // namespace

std::vector<Subspace> theta_verbal_ideal(const LieVarietySpec& spec,
                                         const FreeLie& L) {
  auto fam = fresh_family(L);
  for (const LieIdentity& id : spec.identities) {
    for (const MultilinearForm& ml : multilinearize(id.body)) {
      std::vector<AssocElement> images(ml.arity, AssocElement(L.assoc_ctx()));
      std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t slot,
                                                        uint32_t budget) {
        if (slot == ml.arity) {
          AssocElement val = substitute(ml.body, images, L.assoc_ctx());
          insert_homogeneous(fam, L, assoc_to_lie(L, val));
          return;
        }
        for (uint32_t b = 0; b < L.basis_size(); ++b) {
          uint32_t db = L.degree(b);
          if (db > budget) continue;
          images[slot] = L.expansion(b);
          rec(slot + 1, budget - db);
        }
      };
      if (ml.arity <= L.cap()) rec(0, L.cap());
    }
  }
  ad_close(fam, L);
  return fam;
}

std::vector<Subspace> ideal_closure(const std::vector<LieElement>& gens,
                                    const FreeLie& L) {
  auto fam = fresh_family(L);
  for (const LieElement& g : gens) {
    if (!g.homogeneous())
      throw std::invalid_argument("ideal generators must be homogeneous");
    insert_homogeneous(fam, L, g);
  }
  ad_close(fam, L);
  return fam;
}

std::vector<LieElement> subspace_elements(const FreeLie& L,
                                          const std::vector<Subspace>& per_degree) {
  std::vector<LieElement> out;
  for (uint32_t d = 0; d < per_degree.size(); ++d)
    for (const Vec& row : per_degree[d].basis())
      out.push_back(lie_from_local(L, row, d));
  return out;
}
Vec lie_local_coords(const FreeLie& L, const LieElement& x, uint32_t d) {
  auto idx = L.basis_of_degree(d);
  std::map<uint32_t, uint32_t> pos;
  for (uint32_t k = 0; k < idx.size(); ++k) pos.emplace(idx[k], k);
  Vec v;
  for (const auto& [i, c] : x.coords)
    if (L.degree(i) == d) v.emplace(pos.at(i), c);
  return v;
}

LieElement lie_from_local(const FreeLie& L, const Vec& v, uint32_t d) {
  auto idx = L.basis_of_degree(d);
  LieElement x = lie_zero(L);
  for (const auto& [k, c] : v) x.coords.emplace(idx.at(k), c);
  return x;
}

}  // namespace liewreath
