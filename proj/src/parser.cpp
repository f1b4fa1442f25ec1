/*
 *  Copyright 2026 the tasl authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#include "tasl/parser.hpp"

#include <cctype>
#include <functional>
#include <vector>

namespace tasl {
namespace {

enum class Tok : uint8_t {
  Id, Dot, Comma, LBracket, RBracket, LParen, RParen, LBrace, RBrace,
  Lt, Gt, Star, Plus, Semi, Question, Tilde, Minus, Amp, Pipe, Arrow, Eof
};

struct Token {
  Tok kind = Tok::Eof;
  std::string text;
  SourceLoc loc;
};

const char* tokenName(Tok t) {
  switch (t) {
    case Tok::Id: return "identifier";
    case Tok::Dot: return "'.'";
    case Tok::Comma: return "','";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::Star: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::Semi: return "';'";
    case Tok::Question: return "'?'";
    case Tok::Tilde: return "'~'";
    case Tok::Minus: return "'-'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Eof: return "end of input";
  }
  return "?";
}

bool idStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool idChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Keywords that never start a parametric identifier.
bool isReservedWord(const std::string& s) {
  static const std::set<std::string> kw = {
      "action", "fluent", "inertial", "test", "law", "caused", "next",
      "initially", "impossible", "constraint", "if", "not", "true", "false",
      "X", "F", "G", "U"};
  return kw.count(s) > 0;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skipSpace();
    tok_.loc = {line_, col_};
    if (pos_ >= text_.size()) {
      tok_ = {Tok::Eof, "", tok_.loc};
      return;
    }
    char c = text_[pos_];
    // classical negation also accepts the UTF-8 sign U+00AC
    if (static_cast<unsigned char>(c) == 0xC2 && pos_ + 1 < text_.size() &&
        static_cast<unsigned char>(text_[pos_ + 1]) == 0xAC) {
      bump();
      bump();
      tok_ = {Tok::Minus, "-", tok_.loc};
      return;
    }
    if (idStart(c)) {
      std::string s;
      while (pos_ < text_.size() && idChar(text_[pos_])) s += take1();
      // parametric sugar: glue id(args) into one opaque identifier, unless the
      // base word is reserved (so `G (..)` stays an operator application)
      if (pos_ < text_.size() && text_[pos_] == '(' && !isReservedWord(s)) {
        size_t save = pos_;
        int saveLine = line_, saveCol = col_;
        std::string glued = s;
        glued += take1();  // '('
        bool ok = false;
        int depth = 1;
        while (pos_ < text_.size()) {
          char g = text_[pos_];
          if (idChar(g) || g == ',' || g == '(' || g == ')') {
            if (g == '(') depth++;
            if (g == ')') depth--;
            glued += take1();
            if (depth == 0) {
              ok = true;
              break;
            }
          } else {
            break;
          }
        }
        if (ok) {
          tok_ = {Tok::Id, glued, tok_.loc};
          return;
        }
        pos_ = save;
        line_ = saveLine;
        col_ = saveCol;
      }
      tok_ = {Tok::Id, s, tok_.loc};
      return;
    }
    switch (c) {
      case '.': bump(); tok_ = {Tok::Dot, ".", tok_.loc}; return;
      case ',': bump(); tok_ = {Tok::Comma, ",", tok_.loc}; return;
      case '[': bump(); tok_ = {Tok::LBracket, "[", tok_.loc}; return;
      case ']': bump(); tok_ = {Tok::RBracket, "]", tok_.loc}; return;
      case '(': bump(); tok_ = {Tok::LParen, "(", tok_.loc}; return;
      case ')': bump(); tok_ = {Tok::RParen, ")", tok_.loc}; return;
      case '{': bump(); tok_ = {Tok::LBrace, "{", tok_.loc}; return;
      case '}': bump(); tok_ = {Tok::RBrace, "}", tok_.loc}; return;
      case '<': bump(); tok_ = {Tok::Lt, "<", tok_.loc}; return;
      case '>': bump(); tok_ = {Tok::Gt, ">", tok_.loc}; return;
      case '*': bump(); tok_ = {Tok::Star, "*", tok_.loc}; return;
      case '+': bump(); tok_ = {Tok::Plus, "+", tok_.loc}; return;
      case ';': bump(); tok_ = {Tok::Semi, ";", tok_.loc}; return;
      case '?': bump(); tok_ = {Tok::Question, "?", tok_.loc}; return;
      case '~': bump(); tok_ = {Tok::Tilde, "~", tok_.loc}; return;
      case '&': bump(); tok_ = {Tok::Amp, "&", tok_.loc}; return;
      case '|': bump(); tok_ = {Tok::Pipe, "|", tok_.loc}; return;
      case '-':
        bump();
        if (pos_ < text_.size() && text_[pos_] == '>') {
          bump();
          tok_ = {Tok::Arrow, "->", tok_.loc};
        } else {
          tok_ = {Tok::Minus, "-", tok_.loc};
        }
        return;
      default:
        throw DomainError({line_, col_}, std::string("unexpected character '") + c + "'");
    }
  }

  void skipSpace() {
    for (;;) {
      while (pos_ < text_.size() &&
             (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
              text_[pos_] == '\n')) {
        bump();
      }
      if (pos_ < text_.size() && text_[pos_] == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
        continue;
      }
      return;
    }
  }

  char take1() {
    char c = text_[pos_];
    bump();
    return c;
  }

  void bump() {
    if (text_[pos_] == '\n') {
      line_++;
      col_ = 1;
    } else {
      col_++;
    }
    pos_++;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

// ---------------------------------------------------------------------------
// Raw (unresolved) AST
// ---------------------------------------------------------------------------

struct RawLiteral {
  bool negated = false;
  std::string name;
  SourceLoc loc;
};

struct RawExtLit {
  bool defaultNegated = false;
  enum class Prefix { None, Next, After } prefix = Prefix::None;
  std::string afterAction;
  RawLiteral lit;
  SourceLoc loc;
};

struct RawProgram;
using RawProgPtr = std::shared_ptr<RawProgram>;
struct RawProgram {
  enum class Kind { Action, Test, Seq, Choice, Star } kind = Kind::Action;
  std::string name;       // Action
  RawLiteral testLit;     // Test
  RawProgPtr left, right;
  SourceLoc loc;
};

struct RawFormula;
using RawFormulaPtr = std::shared_ptr<RawFormula>;
struct RawFormula {
  enum class Kind {
    Top, Bottom, Lit, Neg, Or, And, Impl, Until, UntilProg,
    Diamond, Box, Next, Eventually, Always
  } kind = Kind::Top;
  RawLiteral lit;
  RawProgPtr prog;
  RawFormulaPtr a, b;
  SourceLoc loc;
};

struct RawLaw {
  enum class Kind { Action, Static, Dynamic, Initial, Impossible } kind = Kind::Static;
  std::string action;      // Action/Impossible
  bool headFalsum = false;
  RawLiteral head;
  std::vector<RawExtLit> body;
  SourceLoc loc;
};

struct RawDomain {
  std::vector<std::pair<std::string, SourceLoc>> actions;
  std::vector<std::pair<std::string, SourceLoc>> fluents;
  std::vector<std::pair<std::string, SourceLoc>> inertials;
  std::vector<RawLiteral> tests;
  std::vector<RawLaw> laws;
  std::vector<RawFormulaPtr> constraints;
};

// ---------------------------------------------------------------------------
// Recursive-descent parser
// ---------------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  RawDomain parseDomain() {
    RawDomain d;
    while (lex_.peek().kind != Tok::Eof) parseStatement(d);
    return d;
  }

  RawFormulaPtr parseFormulaOnly() {
    RawFormulaPtr f = parseFormula();
    if (lex_.peek().kind == Tok::Dot) lex_.take();
    expect(Tok::Eof);
    return f;
  }

  RawProgPtr parseProgramOnly() {
    RawProgPtr p = parseProgram();
    if (lex_.peek().kind == Tok::Dot) lex_.take();
    expect(Tok::Eof);
    return p;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& expected) {
    throw DomainError(t.loc, "syntax error: expected " + expected + ", found " +
                                 (t.kind == Tok::Id ? "'" + t.text + "'" : tokenName(t.kind)));
  }

  Token expect(Tok k) {
    if (lex_.peek().kind != k) fail(lex_.peek(), tokenName(k));
    return lex_.take();
  }

  Token expectKeyword(const std::string& kw) {
    const Token& t = lex_.peek();
    if (t.kind != Tok::Id || t.text != kw) fail(t, "'" + kw + "'");
    return lex_.take();
  }

  bool atKeyword(const std::string& kw) const {
    return lex_.peek().kind == Tok::Id && lex_.peek().text == kw;
  }

  void parseStatement(RawDomain& d) {
    const Token& t = lex_.peek();
    if (t.kind != Tok::Id) fail(t, "a declaration or law keyword");
    const std::string& kw = t.text;
    if (kw == "action") {
      lex_.take();
      Token id = expect(Tok::Id);
      d.actions.emplace_back(id.text, id.loc);
      expect(Tok::Dot);
    } else if (kw == "fluent") {
      lex_.take();
      Token id = expect(Tok::Id);
      d.fluents.emplace_back(id.text, id.loc);
      expect(Tok::Dot);
    } else if (kw == "inertial") {
      lex_.take();
      Token id = expect(Tok::Id);
      d.inertials.emplace_back(id.text, id.loc);
      expect(Tok::Dot);
    } else if (kw == "test") {
      lex_.take();
      RawLiteral lit = parseLiteral();
      expect(Tok::Question);
      expect(Tok::Dot);
      d.tests.push_back(lit);
    } else if (kw == "law") {
      Token start = lex_.take();
      RawLaw law;
      law.kind = RawLaw::Kind::Action;
      law.loc = start.loc;
      expect(Tok::LBracket);
      law.action = expect(Tok::Id).text;
      expect(Tok::RBracket);
      if (atKeyword("false")) {
        lex_.take();
        law.headFalsum = true;
      } else {
        law.head = parseLiteral();
      }
      law.body = parseCond();
      expect(Tok::Dot);
      d.laws.push_back(std::move(law));
    } else if (kw == "caused") {
      Token start = lex_.take();
      RawLaw law;
      law.loc = start.loc;
      if (atKeyword("next")) {
        lex_.take();
        law.kind = RawLaw::Kind::Dynamic;
        law.head = parseLiteral();
      } else if (atKeyword("false")) {
        lex_.take();
        law.kind = RawLaw::Kind::Static;
        law.headFalsum = true;
      } else {
        law.kind = RawLaw::Kind::Static;
        law.head = parseLiteral();
      }
      law.body = parseCond();
      expect(Tok::Dot);
      d.laws.push_back(std::move(law));
    } else if (kw == "initially") {
      Token start = lex_.take();
      RawLaw law;
      law.kind = RawLaw::Kind::Initial;
      law.loc = start.loc;
      if (atKeyword("false")) {
        lex_.take();
        law.headFalsum = true;
      } else {
        law.head = parseLiteral();
      }
      law.body = parseCond();
      expect(Tok::Dot);
      d.laws.push_back(std::move(law));
    } else if (kw == "impossible") {
      Token start = lex_.take();
      RawLaw law;
      law.kind = RawLaw::Kind::Impossible;
      law.loc = start.loc;
      law.headFalsum = true;
      expect(Tok::LBracket);
      law.action = expect(Tok::Id).text;
      expect(Tok::RBracket);
      law.body = parseCond();
      expect(Tok::Dot);
      d.laws.push_back(std::move(law));
    } else if (kw == "constraint") {
      lex_.take();
      d.constraints.push_back(parseFormula());
      expect(Tok::Dot);
    } else {
      fail(t, "a declaration or law keyword");
    }
  }

  RawLiteral parseLiteral() {
    RawLiteral lit;
    lit.loc = lex_.peek().loc;
    if (lex_.peek().kind == Tok::Minus || lex_.peek().kind == Tok::Tilde) {
      lex_.take();
      lit.negated = true;
    }
    lit.name = expect(Tok::Id).text;
    return lit;
  }

  std::vector<RawExtLit> parseCond() {
    std::vector<RawExtLit> body;
    if (!atKeyword("if")) return body;
    lex_.take();
    for (;;) {
      body.push_back(parseExtLit());
      if (lex_.peek().kind != Tok::Comma) break;
      lex_.take();
    }
    return body;
  }

  RawExtLit parseExtLit() {
    RawExtLit e;
    e.loc = lex_.peek().loc;
    if (atKeyword("not")) {
      lex_.take();
      e.defaultNegated = true;
    }
    if (atKeyword("next")) {
      lex_.take();
      e.prefix = RawExtLit::Prefix::Next;
    } else if (lex_.peek().kind == Tok::LBracket) {
      lex_.take();
      e.prefix = RawExtLit::Prefix::After;
      e.afterAction = expect(Tok::Id).text;
      expect(Tok::RBracket);
    }
    e.lit = parseLiteral();
    return e;
  }

  // formula := impl; precedence: unary > U > & > | > ->
  RawFormulaPtr parseFormula() { return parseImpl(); }

  RawFormulaPtr parseImpl() {
    RawFormulaPtr lhs = parseOr();
    if (lex_.peek().kind == Tok::Arrow) {
      Token t = lex_.take();
      RawFormulaPtr rhs = parseImpl();  // right associative
      auto f = std::make_shared<RawFormula>();
      f->kind = RawFormula::Kind::Impl;
      f->a = lhs;
      f->b = rhs;
      f->loc = t.loc;
      return f;
    }
    return lhs;
  }

  RawFormulaPtr parseOr() {
    RawFormulaPtr lhs = parseAnd();
    while (lex_.peek().kind == Tok::Pipe) {
      Token t = lex_.take();
      RawFormulaPtr rhs = parseAnd();
      auto f = std::make_shared<RawFormula>();
      f->kind = RawFormula::Kind::Or;
      f->a = lhs;
      f->b = rhs;
      f->loc = t.loc;
      lhs = f;
    }
    return lhs;
  }

  RawFormulaPtr parseAnd() {
    RawFormulaPtr lhs = parseUntil();
    while (lex_.peek().kind == Tok::Amp) {
      Token t = lex_.take();
      RawFormulaPtr rhs = parseUntil();
      auto f = std::make_shared<RawFormula>();
      f->kind = RawFormula::Kind::And;
      f->a = lhs;
      f->b = rhs;
      f->loc = t.loc;
      lhs = f;
    }
    return lhs;
  }

  RawFormulaPtr parseUntil() {
    RawFormulaPtr lhs = parseUnary();
    if (atKeyword("U")) {
      Token t = lex_.take();
      auto f = std::make_shared<RawFormula>();
      f->loc = t.loc;
      f->a = lhs;
      if (lex_.peek().kind == Tok::LBrace) {
        lex_.take();
        f->kind = RawFormula::Kind::UntilProg;
        f->prog = parseProgram();
        expect(Tok::RBrace);
      } else {
        f->kind = RawFormula::Kind::Until;
      }
      f->b = parseUntil();  // right associative
      return f;
    }
    return lhs;
  }

  RawFormulaPtr parseUnary() {
    const Token& t = lex_.peek();
    auto f = std::make_shared<RawFormula>();
    f->loc = t.loc;
    switch (t.kind) {
      case Tok::Tilde:
        lex_.take();
        f->kind = RawFormula::Kind::Neg;
        f->a = parseUnary();
        return f;
      case Tok::Lt:
        lex_.take();
        f->kind = RawFormula::Kind::Diamond;
        f->prog = parseProgram();
        expect(Tok::Gt);
        f->a = parseUnary();
        return f;
      case Tok::LBracket:
        lex_.take();
        f->kind = RawFormula::Kind::Box;
        f->prog = parseProgram();
        expect(Tok::RBracket);
        f->a = parseUnary();
        return f;
      case Tok::LParen: {
        lex_.take();
        RawFormulaPtr inner = parseFormula();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Minus: {
        f->kind = RawFormula::Kind::Lit;
        f->lit = parseLiteral();
        return f;
      }
      case Tok::Id: {
        if (t.text == "true") {
          lex_.take();
          f->kind = RawFormula::Kind::Top;
          return f;
        }
        if (t.text == "false") {
          lex_.take();
          f->kind = RawFormula::Kind::Bottom;
          return f;
        }
        if (t.text == "X" || t.text == "F" || t.text == "G") {
          std::string op = lex_.take().text;
          f->kind = op == "X"   ? RawFormula::Kind::Next
                    : op == "F" ? RawFormula::Kind::Eventually
                                : RawFormula::Kind::Always;
          f->a = parseUnary();
          return f;
        }
        f->kind = RawFormula::Kind::Lit;
        f->lit = parseLiteral();
        return f;
      }
      default:
        fail(t, "a formula");
    }
  }

  // prog := choice; precedence: * > ; > +
  RawProgPtr parseProgram() { return parseChoice(); }

  RawProgPtr parseChoice() {
    RawProgPtr lhs = parseSeq();
    while (lex_.peek().kind == Tok::Plus) {
      Token t = lex_.take();
      RawProgPtr rhs = parseSeq();
      auto p = std::make_shared<RawProgram>();
      p->kind = RawProgram::Kind::Choice;
      p->left = lhs;
      p->right = rhs;
      p->loc = t.loc;
      lhs = p;
    }
    return lhs;
  }

  RawProgPtr parseSeq() {
    RawProgPtr lhs = parseStarred();
    while (lex_.peek().kind == Tok::Semi) {
      Token t = lex_.take();
      RawProgPtr rhs = parseStarred();
      auto p = std::make_shared<RawProgram>();
      p->kind = RawProgram::Kind::Seq;
      p->left = lhs;
      p->right = rhs;
      p->loc = t.loc;
      lhs = p;
    }
    return lhs;
  }

  RawProgPtr parseStarred() {
    RawProgPtr p = parseProgAtom();
    while (lex_.peek().kind == Tok::Star) {
      Token t = lex_.take();
      auto s = std::make_shared<RawProgram>();
      s->kind = RawProgram::Kind::Star;
      s->left = p;
      s->loc = t.loc;
      p = s;
    }
    return p;
  }

  RawProgPtr parseProgAtom() {
    const Token& t = lex_.peek();
    auto p = std::make_shared<RawProgram>();
    p->loc = t.loc;
    if (t.kind == Tok::LParen) {
      lex_.take();
      RawProgPtr inner = parseProgram();
      expect(Tok::RParen);
      return inner;
    }
    if (t.kind == Tok::Minus || t.kind == Tok::Tilde) {
      p->kind = RawProgram::Kind::Test;
      p->testLit = parseLiteral();
      expect(Tok::Question);
      return p;
    }
    if (t.kind == Tok::Id) {
      RawLiteral lit = parseLiteral();
      if (lex_.peek().kind == Tok::Question) {
        lex_.take();
        p->kind = RawProgram::Kind::Test;
        p->testLit = lit;
      } else {
        p->kind = RawProgram::Kind::Action;
        p->name = lit.name;
        p->loc = lit.loc;
      }
      return p;
    }
    fail(t, "a program");
  }

  Lexer lex_;
};

// ---------------------------------------------------------------------------
// Resolution
// ---------------------------------------------------------------------------

class Resolver {
 public:
  explicit Resolver(const DomainDescription& d) : d_(d) {}

  FluentLiteral literal(const RawLiteral& raw) const {
    FluentId f = d_.fluentId(raw.name);
    if (f < 0) throw DomainError(raw.loc, "undeclared fluent '" + raw.name + "'");
    return {f, raw.negated};
  }

  ActionId action(const std::string& name, SourceLoc loc) const {
    ActionId a = d_.actionId(name);
    if (a < 0) throw DomainError(loc, "undeclared action '" + name + "'");
    return a;
  }

  ActionId testAction(const RawLiteral& raw) const {
    FluentLiteral l = literal(raw);
    std::string name = d_.litName(l) + "?";
    ActionId a = d_.actionId(name);
    if (a < 0)
      throw DomainError(raw.loc, "undeclared test '" + name + "' (declare it with 'test " +
                                     d_.litName(l) + "?.')");
    return a;
  }

  ProgPtr program(const RawProgram& p) const {
    switch (p.kind) {
      case RawProgram::Kind::Action:
        return RegularProgram::atomic(action(p.name, p.loc), p.loc);
      case RawProgram::Kind::Test:
        return RegularProgram::atomic(testAction(p.testLit), p.loc);
      case RawProgram::Kind::Seq:
        return RegularProgram::seq(program(*p.left), program(*p.right), p.loc);
      case RawProgram::Kind::Choice:
        return RegularProgram::choice(program(*p.left), program(*p.right), p.loc);
      case RawProgram::Kind::Star:
        return RegularProgram::star(program(*p.left), p.loc);
    }
    throw DomainError(p.loc, "bad program node");
  }

  FormulaPtr formula(const RawFormula& f) const {
    using K = RawFormula::Kind;
    switch (f.kind) {
      case K::Top: return DltlFormula::top();
      case K::Bottom: return DltlFormula::bottom();
      case K::Lit: return DltlFormula::fluent(literal(f.lit), f.loc);
      case K::Neg: return DltlFormula::neg(formula(*f.a), f.loc);
      case K::Or: return DltlFormula::disj(formula(*f.a), formula(*f.b), f.loc);
      case K::And: return DltlFormula::conj(formula(*f.a), formula(*f.b), f.loc);
      case K::Impl: return DltlFormula::impl(formula(*f.a), formula(*f.b), f.loc);
      case K::Until: return DltlFormula::untilLtl(formula(*f.a), formula(*f.b), f.loc);
      case K::UntilProg:
        return DltlFormula::until(program(*f.prog), formula(*f.a), formula(*f.b), f.loc);
      case K::Diamond: return DltlFormula::diamond(program(*f.prog), formula(*f.a), f.loc);
      case K::Box: return DltlFormula::box(program(*f.prog), formula(*f.a), f.loc);
      case K::Next: return DltlFormula::next(formula(*f.a), f.loc);
      case K::Eventually: return DltlFormula::eventually(formula(*f.a), f.loc);
      case K::Always: return DltlFormula::always(formula(*f.a), f.loc);
    }
    throw DomainError(f.loc, "bad formula node");
  }

 private:
  const DomainDescription& d_;
};

Law resolveLaw(const RawLaw& raw, const Resolver& r) {
  Law law;
  law.loc = raw.loc;
  if (raw.head.name.empty() && !raw.headFalsum) throw DomainError(raw.loc, "law without head");

  auto resolveBody = [&](TemporalPrefix allowed, ActionId sameAction, const char* shape) {
    for (const RawExtLit& e : raw.body) {
      ExtendedLiteral el;
      el.defaultNegated = e.defaultNegated;
      el.lit.lit = r.literal(e.lit);
      switch (e.prefix) {
        case RawExtLit::Prefix::None:
          el.lit.prefix = TemporalPrefix::None;
          break;
        case RawExtLit::Prefix::Next:
          if (allowed != TemporalPrefix::Next)
            throw DomainError(e.loc, std::string("law-shape violation: 'next' condition in ") + shape);
          el.lit.prefix = TemporalPrefix::Next;
          break;
        case RawExtLit::Prefix::After: {
          if (allowed != TemporalPrefix::AfterAction)
            throw DomainError(e.loc, std::string("law-shape violation: '[") + e.afterAction +
                                         "]' condition in " + shape);
          ActionId a = r.action(e.afterAction, e.loc);
          if (a != sameAction)
            throw DomainError(e.loc,
                              "law-shape violation: condition action '" + e.afterAction +
                                  "' differs from the law's action");
          el.lit.prefix = TemporalPrefix::AfterAction;
          el.lit.action = a;
          break;
        }
      }
      law.body.push_back(el);
    }
  };

  switch (raw.kind) {
    case RawLaw::Kind::Action: {
      law.action = r.action(raw.action, raw.loc);
      if (raw.headFalsum) {
        law.kind = LawKind::Precondition;
        law.head = std::nullopt;
        resolveBody(TemporalPrefix::None, -1, "a precondition law");
      } else {
        law.kind = LawKind::Action;
        law.head = r.literal(raw.head);
        resolveBody(TemporalPrefix::AfterAction, law.action, "an action law");
      }
      break;
    }
    case RawLaw::Kind::Impossible: {
      law.kind = LawKind::Precondition;
      law.action = r.action(raw.action, raw.loc);
      law.head = std::nullopt;
      resolveBody(TemporalPrefix::None, -1, "a precondition law");
      break;
    }
    case RawLaw::Kind::Static: {
      if (raw.headFalsum) {
        law.kind = LawKind::StateConstraint;
        law.head = std::nullopt;
      } else {
        law.kind = LawKind::StaticCausal;
        law.head = r.literal(raw.head);
      }
      resolveBody(TemporalPrefix::None, -1, "a static causal law");
      break;
    }
    case RawLaw::Kind::Dynamic: {
      law.kind = LawKind::DynamicCausal;
      law.head = r.literal(raw.head);
      resolveBody(TemporalPrefix::Next, -1, "a dynamic causal law");
      break;
    }
    case RawLaw::Kind::Initial: {
      if (raw.headFalsum) {
        law.kind = LawKind::StateConstraint;
        law.head = std::nullopt;
        law.initialOnly = true;
      } else {
        law.kind = LawKind::InitialState;
        law.head = r.literal(raw.head);
      }
      resolveBody(TemporalPrefix::None, -1, "an initial-state law");
      break;
    }
  }
  return law;
}

}  // namespace

DomainDescription parse_domain(std::string_view text) {
  Parser parser(text);
  RawDomain raw = parser.parseDomain();

  DomainDescription d;
  for (const auto& [name, loc] : raw.fluents) d.addFluent(name);
  for (const auto& [name, loc] : raw.actions) {
    if (d.fluentId(name) >= 0)
      throw DomainError(loc, "'" + name + "' is declared both as action and fluent");
    d.addAction({name, false, {}, false});
  }
  if (d.actions.empty()) throw DomainError({}, "empty domain (no actions)");
  if (d.fluents.empty()) throw DomainError({}, "empty domain (no fluents)");

  Resolver r(d);
  for (const auto& [name, loc] : raw.inertials) {
    FluentId f = d.fluentId(name);
    if (f < 0) throw DomainError(loc, "undeclared fluent '" + name + "'");
    d.inertial.insert(f);
  }
  for (const RawLiteral& t : raw.tests) {
    FluentLiteral l = r.literal(t);
    std::string name = d.litName(l) + "?";
    if (d.actionId(name) < 0) {
      d.addAction({name, true, l, true});
      d.declaredTests.push_back(l);
    }
  }
  // tests may appear inside laws/constraints, so re-resolve with them present
  Resolver r2(d);
  for (const RawLaw& law : raw.laws) d.laws.push_back(resolveLaw(law, r2));
  for (const RawFormulaPtr& c : raw.constraints) d.constraints.push_back(r2.formula(*c));
  return d;
}

FormulaPtr parse_formula(std::string_view text, const DomainDescription& d) {
  Parser parser(text);
  RawFormulaPtr raw = parser.parseFormulaOnly();
  Resolver r(d);
  return r.formula(*raw);
}

ProgPtr parse_program(std::string_view text, const DomainDescription& d) {
  Parser parser(text);
  RawProgPtr raw = parser.parseProgramOnly();
  Resolver r(d);
  return r.program(*raw);
}

}  // namespace tasl
