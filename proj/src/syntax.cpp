#include "l1/syntax.hpp"

#include <cassert>
#include <unordered_set>

namespace l1 {

struct Formula::Node {
  Kind kind;
  NameVar a, b;                        // Eps
  std::optional<Formula> left, right;  // Or: lhs/rhs; Not: left is the body
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::eps(NameVar a, NameVar b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Eps;
  n->hash = combine(combine(1, std::hash<std::string>{}(a.text)),
                    std::hash<std::string>{}(b.text));
  n->a = std::move(a);
  n->b = std::move(b);
  n->size = 1;
  return Formula(std::move(n));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->hash = combine(combine(2, lhs.hash()), rhs.hash());
  n->size = 1 + lhs.size() + rhs.size();
  n->left = std::move(lhs);
  n->right = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::neg(Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->hash = combine(3, body.hash());
  n->size = 1 + body.size();
  n->left = std::move(body);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

const NameVar& Formula::eps_left() const {
  assert(is_eps());
  return node_->a;
}

const NameVar& Formula::eps_right() const {
  assert(is_eps());
  return node_->b;
}

const Formula& Formula::lhs() const {
  assert(is_or());
  return *node_->left;
}

const Formula& Formula::rhs() const {
  assert(is_or());
  return *node_->right;
}

const Formula& Formula::body() const {
  assert(is_not());
  return *node_->left;
}

bool Formula::operator==(const Formula& other) const {
  const Node* x = node_.get();
  const Node* y = other.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->kind != y->kind || x->size != y->size)
    return false;
  switch (x->kind) {
    case Kind::Eps:
      return x->a == y->a && x->b == y->b;
    case Kind::Not:
      return *x->left == *y->left;
    case Kind::Or:
      return *x->left == *y->left && *x->right == *y->right;
  }
  return false;
}

namespace {

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Eps:
      out += "eps(";
      out += f.eps_left().text;
      out += ",";
      out += f.eps_right().text;
      out += ")";
      return;
    case Formula::Kind::Not:
      out += "~";
      if (f.body().is_or()) {
        out += "(";
        render_into(f.body(), out);
        out += ")";
      } else {
        render_into(f.body(), out);
      }
      return;
    case Formula::Kind::Or:
      // "|" parses right-associated, so only a left operand that is itself
      // a disjunction needs parentheses.
      if (f.lhs().is_or()) {
        out += "(";
        render_into(f.lhs(), out);
        out += ")";
      } else {
        render_into(f.lhs(), out);
      }
      out += " | ";
      render_into(f.rhs(), out);
      return;
  }
}

}  // namespace

std::string Formula::render() const {
  std::string out;
  render_into(*this, out);
  return out;
}

bool formula_less(const Formula& a, const Formula& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.render() < b.render();
}

struct SurfaceFormula::Node {
  Kind kind;
  NameVar a, b;
  std::optional<SurfaceFormula> left, right;
};

SurfaceFormula::Kind SurfaceFormula::kind() const { return node_->kind; }

SurfaceFormula SurfaceFormula::eps(NameVar a, NameVar b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Eps;
  n->a = std::move(a);
  n->b = std::move(b);
  return SurfaceFormula(std::move(n));
}

SurfaceFormula SurfaceFormula::binary(Kind k, SurfaceFormula lhs,
                                      SurfaceFormula rhs) {
  assert(k == Kind::Or || k == Kind::And || k == Kind::Implies ||
         k == Kind::Iff);
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->left = std::move(lhs);
  n->right = std::move(rhs);
  return SurfaceFormula(std::move(n));
}

SurfaceFormula SurfaceFormula::neg(SurfaceFormula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->left = std::move(body);
  return SurfaceFormula(std::move(n));
}

const NameVar& SurfaceFormula::eps_left() const {
  assert(kind() == Kind::Eps);
  return node_->a;
}

const NameVar& SurfaceFormula::eps_right() const {
  assert(kind() == Kind::Eps);
  return node_->b;
}

const SurfaceFormula& SurfaceFormula::lhs() const {
  return *node_->left;
}

const SurfaceFormula& SurfaceFormula::rhs() const {
  return *node_->right;
}

const SurfaceFormula& SurfaceFormula::body() const {
  assert(kind() == Kind::Not);
  return *node_->left;
}

bool SurfaceFormula::operator==(const SurfaceFormula& other) const {
  if (node_.get() == other.node_.get()) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Eps:
      return node_->a == other.node_->a && node_->b == other.node_->b;
    case Kind::Not:
      return body() == other.body();
    default:
      return lhs() == other.lhs() && rhs() == other.rhs();
  }
}

ParseError::ParseError(std::size_t offset, const std::string& message,
                       std::vector<std::string> expected)
    : std::runtime_error(message), offset(offset), expected(std::move(expected)) {}

namespace {

enum class Tok : std::uint8_t {
  Eps, Ident, Tilde, Or, And, Implies, Iff, LParen, RParen, Comma, End
};

struct Token {
  Tok kind;
  std::string text;     // Ident payload
  std::size_t offset;   // byte offset of the first byte
};

const char* spelling(Tok t) {
  switch (t) {
    case Tok::Eps: return "eps";
    case Tok::Ident: return "identifier";
    case Tok::Tilde: return "~";
    case Tok::Or: return "|";
    case Tok::And: return "&";
    case Tok::Implies: return "->";
    case Tok::Iff: return "<->";
    case Tok::LParen: return "(";
    case Tok::RParen: return ")";
    case Tok::Comma: return ",";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  // digit_idents admits the reserved digit-suffixed variables that appear in
  // machine-produced formulas but are not part of the input language.
  explicit Lexer(std::string_view text, bool digit_idents = false)
      : text_(text), digit_idents_(digit_idents) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      std::size_t at = pos_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", at});
        return out;
      }
      char c = text_[pos_];
      if (c == '~') { pos_++; out.push_back({Tok::Tilde, "", at}); continue; }
      if (c == '|') { pos_++; out.push_back({Tok::Or, "", at}); continue; }
      if (c == '&') { pos_++; out.push_back({Tok::And, "", at}); continue; }
      if (c == '(') { pos_++; out.push_back({Tok::LParen, "", at}); continue; }
      if (c == ')') { pos_++; out.push_back({Tok::RParen, "", at}); continue; }
      if (c == ',') { pos_++; out.push_back({Tok::Comma, "", at}); continue; }
      if (take("\\/")) { out.push_back({Tok::Or, "", at}); continue; }
      if (take("/\\")) { out.push_back({Tok::And, "", at}); continue; }
      if (take("<->")) { out.push_back({Tok::Iff, "", at}); continue; }
      if (take("->")) { out.push_back({Tok::Implies, "", at}); continue; }
      // Unicode aliases, matched as UTF-8 byte sequences.
      if (take("\xce\xb5")) { out.push_back({Tok::Eps, "", at}); continue; }        // ε
      if (take("\xe2\x88\xbc")) { out.push_back({Tok::Tilde, "", at}); continue; }  // ∼
      if (take("\xe2\x88\xa8")) { out.push_back({Tok::Or, "", at}); continue; }     // ∨
      if (take("\xe2\x88\xa7")) { out.push_back({Tok::And, "", at}); continue; }    // ∧
      if (take("\xe2\x8a\x83")) { out.push_back({Tok::Implies, "", at}); continue; } // ⊃
      if (take("\xe2\x89\xa1")) { out.push_back({Tok::Iff, "", at}); continue; }    // ≡
      if (c >= 'a' && c <= 'z') {
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z')
          pos_++;
        if (digit_idents_)
          while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
            pos_++;
        std::string word(text_.substr(start, pos_ - start));
        if (word == "eps")
          out.push_back({Tok::Eps, "", at});
        else
          out.push_back({Tok::Ident, std::move(word), at});
        continue;
      }
      throw ParseError(at, "unexpected character in formula", {});
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      pos_++;
  }

  bool take(std::string_view s) {
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool digit_idents_ = false;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SurfaceFormula run() {
    SurfaceFormula f = iff();
    expect(Tok::End);
    return f;
  }

 private:
  const Token& peek() const { return toks_[at_]; }

  Token advance() { return toks_[at_++]; }

  [[noreturn]] void fail(std::vector<Tok> wanted) {
    std::vector<std::string> expected;
    expected.reserve(wanted.size());
    for (Tok t : wanted) expected.push_back(spelling(t));
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += " or ";
      msg += expected[i];
    }
    throw ParseError(peek().offset, msg, std::move(expected));
  }

  Token expect(Tok t) {
    if (peek().kind != t) fail({t});
    return advance();
  }

  SurfaceFormula iff() {
    SurfaceFormula l = implies();
    if (peek().kind == Tok::Iff) {
      advance();
      return SurfaceFormula::binary(SurfaceFormula::Kind::Iff, l, iff());
    }
    return l;
  }

  SurfaceFormula implies() {
    SurfaceFormula l = disjunct();
    if (peek().kind == Tok::Implies) {
      advance();
      return SurfaceFormula::binary(SurfaceFormula::Kind::Implies, l, implies());
    }
    return l;
  }

  SurfaceFormula disjunct() {
    SurfaceFormula l = conjunct();
    if (peek().kind == Tok::Or) {
      advance();
      return SurfaceFormula::binary(SurfaceFormula::Kind::Or, l, disjunct());
    }
    return l;
  }

  SurfaceFormula conjunct() {
    SurfaceFormula l = unary();
    if (peek().kind == Tok::And) {
      advance();
      return SurfaceFormula::binary(SurfaceFormula::Kind::And, l, conjunct());
    }
    return l;
  }

  SurfaceFormula unary() {
    if (peek().kind == Tok::Tilde) {
      advance();
      return SurfaceFormula::neg(unary());
    }
    return primary();
  }

  NameVar ident() {
    Token t = expect(Tok::Ident);
    return NameVar{std::move(t.text)};
  }

  SurfaceFormula primary() {
    switch (peek().kind) {
      case Tok::Eps: {
        advance();
        if (peek().kind == Tok::Ident && peek().text.size() == 2 &&
            peek().text[1] >= 'a' && peek().text[1] <= 'z') {
          // Juxtaposed two-letter form: εab reads as eps(a,b).
          Token t = advance();
          return SurfaceFormula::eps(NameVar{std::string(1, t.text[0])},
                                     NameVar{std::string(1, t.text[1])});
        }
        expect(Tok::LParen);
        NameVar a = ident();
        expect(Tok::Comma);
        NameVar b = ident();
        expect(Tok::RParen);
        return SurfaceFormula::eps(std::move(a), std::move(b));
      }
      case Tok::LParen: {
        advance();
        SurfaceFormula f = iff();
        expect(Tok::RParen);
        return f;
      }
      case Tok::Tilde:
        return unary();
      default:
        fail({Tok::Eps, Tok::Tilde, Tok::LParen});
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

}  // namespace

SurfaceFormula parse(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

Formula desugar(const SurfaceFormula& f) {
  using SK = SurfaceFormula::Kind;
  switch (f.kind()) {
    case SK::Eps:
      return Formula::eps(f.eps_left(), f.eps_right());
    case SK::Not:
      return Formula::neg(desugar(f.body()));
    case SK::Or:
      return Formula::disj(desugar(f.lhs()), desugar(f.rhs()));
    case SK::And:
      return Formula::neg(Formula::disj(Formula::neg(desugar(f.lhs())),
                                        Formula::neg(desugar(f.rhs()))));
    case SK::Implies:
      return Formula::disj(Formula::neg(desugar(f.lhs())), desugar(f.rhs()));
    case SK::Iff: {
      // (A -> B) & (B -> A)
      SurfaceFormula fwd =
          SurfaceFormula::binary(SK::Implies, f.lhs(), f.rhs());
      SurfaceFormula bwd =
          SurfaceFormula::binary(SK::Implies, f.rhs(), f.lhs());
      return desugar(SurfaceFormula::binary(SK::And, fwd, bwd));
    }
  }
  throw std::logic_error("unreachable surface kind");
}

Formula parse_core(std::string_view text) { return desugar(parse(text)); }

Formula parse_internal(std::string_view text) {
  return desugar(Parser(Lexer(text, /*digit_idents=*/true).run()).run());
}

Formula substitute(const Formula& f, const std::map<NameVar, NameVar>& map) {
  switch (f.kind()) {
    case Formula::Kind::Eps: {
      auto la = map.find(f.eps_left());
      auto lb = map.find(f.eps_right());
      if (la == map.end() && lb == map.end()) return f;
      return Formula::eps(la == map.end() ? f.eps_left() : la->second,
                          lb == map.end() ? f.eps_right() : lb->second);
    }
    case Formula::Kind::Not: {
      Formula b = substitute(f.body(), map);
      if (b == f.body()) return f;
      return Formula::neg(std::move(b));
    }
    case Formula::Kind::Or: {
      Formula l = substitute(f.lhs(), map);
      Formula r = substitute(f.rhs(), map);
      if (l == f.lhs() && r == f.rhs()) return f;
      return Formula::disj(std::move(l), std::move(r));
    }
  }
  throw std::logic_error("unreachable formula kind");
}

namespace {

void collect_vars(const Formula& f, std::vector<NameVar>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eps: {
      auto push = [&out](const NameVar& v) {
        for (const NameVar& seen : out)
          if (seen == v) return;
        out.push_back(v);
      };
      push(f.eps_left());
      push(f.eps_right());
      return;
    }
    case Formula::Kind::Not:
      collect_vars(f.body(), out);
      return;
    case Formula::Kind::Or:
      collect_vars(f.lhs(), out);
      collect_vars(f.rhs(), out);
      return;
  }
}

}  // namespace

std::vector<NameVar> variables(const Formula& f) {
  std::vector<NameVar> out;
  collect_vars(f, out);
  return out;
}

Formula implication(const Formula& a, const Formula& b) {
  return Formula::disj(Formula::neg(a), b);
}

Formula disjunction_of(const std::vector<Formula>& parts) {
  assert(!parts.empty());
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;)
    acc = Formula::disj(parts[i], acc);
  return acc;
}

namespace {

void collect_subformulas(const Formula& f,
                         std::unordered_set<Formula, FormulaHash>& seen) {
  if (!seen.insert(f).second) return;
  switch (f.kind()) {
    case Formula::Kind::Eps:
      return;
    case Formula::Kind::Not:
      collect_subformulas(f.body(), seen);
      return;
    case Formula::Kind::Or:
      collect_subformulas(f.lhs(), seen);
      collect_subformulas(f.rhs(), seen);
      return;
  }
}

}  // namespace

std::size_t distinct_subformula_count(const Formula& f) {
  std::unordered_set<Formula, FormulaHash> seen;
  collect_subformulas(f, seen);
  return seen.size();
}

}  // namespace l1
