#include "liewreath/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace liewreath {

AssocContext::AssocContext(uint32_t gens_, uint32_t cap_, FieldSpec field_,
                           std::vector<uint32_t> weights_)
    : gens(gens_), cap(cap_), field(std::move(field_)), weights(std::move(weights_)) {
  if (!weights.empty() && weights.size() != gens)
    throw std::invalid_argument("weights size mismatch");
  for (uint32_t w : weights)
    if (w == 0) throw std::invalid_argument("letter weight must be positive");
}

uint32_t AssocContext::degree(const Word& w) const {
  if (weights.empty()) return static_cast<uint32_t>(w.size());
  uint32_t d = 0;
  for (uint32_t c : w) d += weights[c];
  return d;
}

int compare_words(const AssocContext& ctx, const Word& a, const Word& b) {
  uint32_t da = ctx.degree(a), db = ctx.degree(b);
  if (da != db) return da < db ? -1 : 1;
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

AssocElement AssocElement::unit(const AssocContext& ctx) {
  return monomial(ctx, Word{}, Scalar::one(ctx.field));
}

AssocElement AssocElement::generator(const AssocContext& ctx, uint32_t i) {
  if (i >= ctx.gens) throw std::invalid_argument("generator index out of range");
  return monomial(ctx, Word{i}, Scalar::one(ctx.field));
}

AssocElement AssocElement::monomial(const AssocContext& ctx, Word w,
                                    const Scalar& coeff) {
  AssocElement e(ctx);
  e.add_term(w, coeff);
  return e;
}

void AssocElement::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  for (uint32_t l : w)
    if (l >= ctx_.gens) throw std::invalid_argument("letter out of range");
  if (ctx_.degree(w) > ctx_.cap) return;  // truncation
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar AssocElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(ctx_.field) : it->second;
}

AssocElement AssocElement::operator-() const {
  AssocElement r(ctx_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

AssocElement& AssocElement::operator+=(const AssocElement& o) {
  if (!(ctx_ == o.ctx_)) throw std::invalid_argument("ambient mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AssocElement& AssocElement::operator-=(const AssocElement& o) {
  if (!(ctx_ == o.ctx_)) throw std::invalid_argument("ambient mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AssocElement AssocElement::scaled(const Scalar& c) const {
  AssocElement r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, c * x);
  return r;
}

AssocElement mul(const AssocElement& a, const AssocElement& b) {
  if (!(a.ctx() == b.ctx())) throw std::invalid_argument("ambient mismatch");
  const AssocContext& ctx = a.ctx();
  AssocElement r(ctx);
  for (const auto& [wa, ca] : a.terms()) {
    uint32_t da = ctx.degree(wa);
    for (const auto& [wb, cb] : b.terms()) {
      if (da + ctx.degree(wb) > ctx.cap) continue;
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

AssocElement commutator(const AssocElement& a, const AssocElement& b) {
  return mul(a, b) - mul(b, a);
}

std::vector<AssocElement> grade_split(const AssocElement& a) {
  std::vector<AssocElement> out(a.ctx().cap + 1, AssocElement(a.ctx()));
  for (const auto& [w, c] : a.terms()) out[a.ctx().degree(w)].add_term(w, c);
  return out;
}

std::pair<Word, Scalar> leading_term(const AssocElement& a) {
  if (a.is_zero()) throw std::invalid_argument("leading term of zero");
  auto best = a.terms().begin();
  for (auto it = std::next(a.terms().begin()); it != a.terms().end(); ++it)
    if (compare_words(a.ctx(), best->first, it->first) < 0) best = it;
  return {best->first, best->second};
}

std::vector<uint32_t> multidegree(const AssocContext& ctx, const Word& w) {
  std::vector<uint32_t> d(ctx.gens, 0);
  for (uint32_t l : w) ++d[l];
  return d;
}

AssocElement substitute(const AssocElement& a,
                        const std::vector<AssocElement>& images,
                        const AssocContext& target) {
  if (images.size() < a.ctx().gens)
    throw std::invalid_argument("missing substitution images");
  AssocElement r(target);
  for (const auto& [w, c] : a.terms()) {
    AssocElement prod = AssocElement::unit(target).scaled(c);
    for (uint32_t l : w) {
      prod = mul(prod, images[l]);
      if (prod.is_zero()) break;
    }
    r += prod;
  }
  return r;
}

std::string render_assoc(const AssocElement& a, const std::string& letter) {
  if (a.is_zero()) return "0";
  // descending degree, ascending lex within a degree
  std::vector<const std::pair<const Word, Scalar>*> terms;
  for (const auto& t : a.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [&](const auto* x, const auto* y) {
    uint32_t dx = a.ctx().degree(x->first), dy = a.ctx().degree(y->first);
    if (dx != dy) return dx > dy;
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
    std::string body;
    for (uint32_t l : t->first) {
      if (!body.empty()) body += "*";
      body += letter + std::to_string(l + 1);
    }
    if (body.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += body;
    } else {
      out += mag + "*" + body;
    }
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(i) +
                                ": " + why);
  }
};

std::string read_number(Cursor& c) {
  c.skip();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) c.fail("expected number");
  return c.s.substr(start, c.i - start);
}

}  // namespace

// expr := ['-'] term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := number['/'number] | <letter><index>. A bare "1" is the unity word.
AssocElement parse_assoc(const std::string& text, const AssocContext& ctx,
                         const std::string& letter) {
  Cursor c{text};
  AssocElement out(ctx);
  if (c.eof()) c.fail("empty input");
  bool negate = false;
  if (c.peek() == '-') {
    negate = true;
    ++c.i;
  }
  while (true) {
    Scalar coeff = Scalar::one(ctx.field);
    Word w;
    bool any = false;
    while (true) {
      c.skip();
      if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        std::string num = read_number(c);
        if (c.peek() == '/') {
          ++c.i;
          num += "/" + read_number(c);
        }
        coeff *= Scalar::parse(num, ctx.field);
        any = true;
      } else if (c.s.compare(c.i, letter.size(), letter) == 0 &&
                 c.i + letter.size() < c.s.size() &&
                 std::isdigit(static_cast<unsigned char>(c.s[c.i + letter.size()]))) {
        c.i += letter.size();
        unsigned long idx = std::stoul(read_number(c));
        if (idx == 0 || idx > ctx.gens) c.fail("generator index out of range");
        w.push_back(static_cast<uint32_t>(idx - 1));
        any = true;
      } else {
        c.fail("expected coefficient or generator");
      }
      if (c.peek() == '*') {
        ++c.i;
        continue;
      }
      break;
    }
    if (!any) c.fail("empty term");
    out.add_term(w, negate ? -coeff : coeff);
    if (c.eof()) break;
    char op = c.peek();
    if (op != '+' && op != '-') c.fail("expected + or -");
    negate = (op == '-');
    ++c.i;
    if (c.eof()) c.fail("dangling operator");
  }
  return out;
}

}  // namespace liewreath
