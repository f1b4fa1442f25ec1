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

#include "tasl/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace tasl {

// ---------------------------------------------------------------------------
// Regular programs
// ---------------------------------------------------------------------------

ProgPtr RegularProgram::atomic(ActionId a, SourceLoc loc) {
  auto p = std::make_shared<RegularProgram>();
  p->kind = Kind::Atomic;
  p->action = a;
  p->loc = loc;
  return p;
}

ProgPtr RegularProgram::seq(ProgPtr l, ProgPtr r, SourceLoc loc) {
  auto p = std::make_shared<RegularProgram>();
  p->kind = Kind::Seq;
  p->left = std::move(l);
  p->right = std::move(r);
  p->loc = loc;
  return p;
}

ProgPtr RegularProgram::choice(ProgPtr l, ProgPtr r, SourceLoc loc) {
  auto p = std::make_shared<RegularProgram>();
  p->kind = Kind::Choice;
  p->left = std::move(l);
  p->right = std::move(r);
  p->loc = loc;
  return p;
}

ProgPtr RegularProgram::star(ProgPtr inner, SourceLoc loc) {
  auto p = std::make_shared<RegularProgram>();
  p->kind = Kind::Star;
  p->left = std::move(inner);
  p->loc = loc;
  return p;
}

int RegularProgram::size() const {
  switch (kind) {
    case Kind::Atomic: return 1;
    case Kind::Star: return 1 + left->size();
    default: return 1 + left->size() + right->size();
  }
}

bool structurallyEqual(const RegularProgram& a, const RegularProgram& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RegularProgram::Kind::Atomic: return a.action == b.action;
    case RegularProgram::Kind::Star: return structurallyEqual(*a.left, *b.left);
    default:
      return structurallyEqual(*a.left, *b.left) &&
             structurallyEqual(*a.right, *b.right);
  }
}

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

namespace {
FormulaPtr mk(DltlFormula::Kind k, SourceLoc loc = {}) {
  auto f = std::make_shared<DltlFormula>();
  f->kind = k;
  f->loc = loc;
  return f;
}
}  // namespace

FormulaPtr DltlFormula::top() { return mk(Kind::Top); }
FormulaPtr DltlFormula::bottom() { return mk(Kind::Bottom); }

FormulaPtr DltlFormula::fluent(FluentLiteral l, SourceLoc loc) {
  auto f = mk(Kind::Fluent, loc);
  const_cast<DltlFormula&>(*f).lit = l;
  return f;
}

FormulaPtr DltlFormula::neg(FormulaPtr x, SourceLoc loc) {
  auto f = mk(Kind::Neg, loc);
  const_cast<DltlFormula&>(*f).a = std::move(x);
  return f;
}

FormulaPtr DltlFormula::disj(FormulaPtr x, FormulaPtr y, SourceLoc loc) {
  auto f = mk(Kind::Or, loc);
  auto& m = const_cast<DltlFormula&>(*f);
  m.a = std::move(x);
  m.b = std::move(y);
  return f;
}

FormulaPtr DltlFormula::conj(FormulaPtr x, FormulaPtr y, SourceLoc loc) {
  auto f = mk(Kind::And, loc);
  auto& m = const_cast<DltlFormula&>(*f);
  m.a = std::move(x);
  m.b = std::move(y);
  return f;
}

FormulaPtr DltlFormula::impl(FormulaPtr x, FormulaPtr y, SourceLoc loc) {
  auto f = mk(Kind::Impl, loc);
  auto& m = const_cast<DltlFormula&>(*f);
  m.a = std::move(x);
  m.b = std::move(y);
  return f;
}

FormulaPtr DltlFormula::until(ProgPtr p, FormulaPtr x, FormulaPtr y, SourceLoc loc) {
  auto f = mk(Kind::Until, loc);
  auto& m = const_cast<DltlFormula&>(*f);
  m.prog = std::move(p);
  m.a = std::move(x);
  m.b = std::move(y);
  return f;
}

FormulaPtr DltlFormula::untilLtl(FormulaPtr x, FormulaPtr y, SourceLoc loc) {
  return until(nullptr, std::move(x), std::move(y), loc);
}

FormulaPtr DltlFormula::diamond(ProgPtr p, FormulaPtr x, SourceLoc loc) {
  auto f = mk(Kind::DiamondProg, loc);
  auto& m = const_cast<DltlFormula&>(*f);
  m.prog = std::move(p);
  m.a = std::move(x);
  return f;
}

FormulaPtr DltlFormula::box(ProgPtr p, FormulaPtr x, SourceLoc loc) {
  auto f = mk(Kind::BoxProg, loc);
  auto& m = const_cast<DltlFormula&>(*f);
  m.prog = std::move(p);
  m.a = std::move(x);
  return f;
}

FormulaPtr DltlFormula::next(FormulaPtr x, SourceLoc loc) {
  auto f = mk(Kind::Next, loc);
  const_cast<DltlFormula&>(*f).a = std::move(x);
  return f;
}

FormulaPtr DltlFormula::eventually(FormulaPtr x, SourceLoc loc) {
  auto f = mk(Kind::Eventually, loc);
  const_cast<DltlFormula&>(*f).a = std::move(x);
  return f;
}

FormulaPtr DltlFormula::always(FormulaPtr x, SourceLoc loc) {
  auto f = mk(Kind::Always, loc);
  const_cast<DltlFormula&>(*f).a = std::move(x);
  return f;
}

bool structurallyEqual(const DltlFormula& a, const DltlFormula& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == DltlFormula::Kind::Fluent) return a.lit == b.lit;
  if ((a.prog == nullptr) != (b.prog == nullptr)) return false;
  if (a.prog && !structurallyEqual(*a.prog, *b.prog)) return false;
  if ((a.a == nullptr) != (b.a == nullptr)) return false;
  if (a.a && !structurallyEqual(*a.a, *b.a)) return false;
  if ((a.b == nullptr) != (b.b == nullptr)) return false;
  if (a.b && !structurallyEqual(*a.b, *b.b)) return false;
  return true;
}

FormulaPtr coreForm(const FormulaPtr& f, int numActions) {
  using K = DltlFormula::Kind;
  auto rec = [&](const FormulaPtr& x) { return coreForm(x, numActions); };
  switch (f->kind) {
    case K::Top:
    case K::Bottom:
      return f;
    case K::Fluent:
      if (f->lit.negated)
        return DltlFormula::neg(DltlFormula::fluent({f->lit.fluent, false}, f->loc), f->loc);
      return f;
    case K::Neg:
      return DltlFormula::neg(rec(f->a), f->loc);
    case K::Or:
      return DltlFormula::disj(rec(f->a), rec(f->b), f->loc);
    case K::And:  // a & b == ~(~a | ~b)
      return DltlFormula::neg(
          DltlFormula::disj(DltlFormula::neg(rec(f->a)), DltlFormula::neg(rec(f->b))), f->loc);
    case K::Impl:
      return DltlFormula::disj(DltlFormula::neg(rec(f->a)), rec(f->b), f->loc);
    case K::Until:
      return DltlFormula::until(f->prog, rec(f->a), rec(f->b), f->loc);
    case K::DiamondProg:  // <p> a == true U^p a
      return DltlFormula::until(f->prog, DltlFormula::top(), rec(f->a), f->loc);
    case K::BoxProg:  // [p] a == ~(true U^p ~a)
      return DltlFormula::neg(
          DltlFormula::until(f->prog, DltlFormula::top(), DltlFormula::neg(rec(f->a))), f->loc);
    case K::Next: {
      // X a == <a_1> a | ... | <a_n> a over the whole alphabet
      FormulaPtr core = rec(f->a);
      FormulaPtr acc;
      for (int i = numActions - 1; i >= 0; --i) {
        FormulaPtr dia = DltlFormula::until(RegularProgram::atomic(i), DltlFormula::top(), core);
        acc = acc ? DltlFormula::disj(dia, acc) : dia;
      }
      if (!acc) return DltlFormula::bottom();
      return acc;
    }
    case K::Eventually:  // F a == true U a
      return DltlFormula::until(nullptr, DltlFormula::top(), rec(f->a), f->loc);
    case K::Always:  // G a == ~F ~a
      return DltlFormula::neg(
          DltlFormula::until(nullptr, DltlFormula::top(), DltlFormula::neg(rec(f->a))), f->loc);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Domain description
// ---------------------------------------------------------------------------

FluentId DomainDescription::addFluent(const std::string& name) {
  auto it = fluentByName.find(name);
  if (it != fluentByName.end()) return it->second;
  FluentId id = static_cast<FluentId>(fluents.size());
  fluents.push_back(name);
  fluentByName.emplace(name, id);
  return id;
}

ActionId DomainDescription::addAction(const ActionInfo& info) {
  auto it = actionByName.find(info.name);
  if (it != actionByName.end()) return it->second;
  ActionId id = static_cast<ActionId>(actions.size());
  actions.push_back(info);
  actionByName.emplace(info.name, id);
  return id;
}

FluentId DomainDescription::fluentId(const std::string& name) const {
  auto it = fluentByName.find(name);
  return it == fluentByName.end() ? -1 : it->second;
}

ActionId DomainDescription::actionId(const std::string& name) const {
  auto it = actionByName.find(name);
  return it == actionByName.end() ? -1 : it->second;
}

// ---------------------------------------------------------------------------
// Macro expansion
// ---------------------------------------------------------------------------

namespace {

bool hasLaw(const DomainDescription& d, const Law& law) {
  return std::any_of(d.laws.begin(), d.laws.end(),
                     [&](const Law& l) { return l.sameShape(law); });
}

void addLawOnce(DomainDescription& d, Law law) {
  if (!hasLaw(d, law)) d.laws.push_back(std::move(law));
}

bool hasConstraint(const DomainDescription& d, const DltlFormula& f) {
  return std::any_of(d.constraints.begin(), d.constraints.end(),
                     [&](const FormulaPtr& c) { return structurallyEqual(*c, f); });
}

ExtendedLiteral simpleLit(FluentLiteral l, bool defaultNegated = false) {
  return {{TemporalPrefix::None, -1, l}, defaultNegated};
}

ExtendedLiteral nextLit(FluentLiteral l, bool defaultNegated = false) {
  return {{TemporalPrefix::Next, -1, l}, defaultNegated};
}

}  // namespace

DomainDescription expand_macros(const DomainDescription& d, ExpandOptions opts) {
  DomainDescription out = d;

  // Persistency pair per inertial fluent:
  //   next f <- f, not next -f      next -f <- -f, not next f
  for (FluentId f : out.inertial) {
    for (bool neg : {false, true}) {
      FluentLiteral l{f, neg};
      Law law;
      law.kind = LawKind::DynamicCausal;
      law.head = l;
      law.body = {simpleLit(l), nextLit(l.complement(), true)};
      addLawOnce(out, law);
    }
  }

  // Initial-state completion pair per fluent: f <- not -f and -f <- not f.
  if (opts.addCompletion) {
    for (FluentId f = 0; f < static_cast<FluentId>(out.fluents.size()); ++f) {
      for (bool neg : {false, true}) {
        FluentLiteral l{f, neg};
        Law law;
        law.kind = LawKind::InitialState;
        law.head = l;
        law.body = {simpleLit(l.complement(), true)};
        addLawOnce(out, law);
      }
    }
  }

  // Test actions: [l?] false <- not l, plus the 2|P| frame laws.
  for (const FluentLiteral& l : out.declaredTests) {
    std::string name = out.litName(l) + "?";
    ActionId test = out.actionId(name);
    assert(test >= 0);
    Law pre;
    pre.kind = LawKind::Precondition;
    pre.action = test;
    pre.head = std::nullopt;
    pre.body = {simpleLit(l, true)};
    addLawOnce(out, pre);
    for (FluentId f = 0; f < static_cast<FluentId>(out.fluents.size()); ++f) {
      for (bool neg : {false, true}) {
        FluentLiteral fl{f, neg};
        Law frame;
        frame.kind = LawKind::Action;
        frame.action = test;
        frame.head = fl;
        frame.body = {simpleLit(fl)};
        addLawOnce(out, frame);
      }
    }
  }

  if (opts.addDummy) {
    ActionId dummy = out.addAction({"dummy", false, {}, true});
    ProgPtr dprog = RegularProgram::atomic(dummy);
    FormulaPtr diaTop = DltlFormula::diamond(dprog, DltlFormula::top());
    FormulaPtr eventuallyDummy = DltlFormula::eventually(diaTop);
    FormulaPtr alwaysAfter = DltlFormula::always(DltlFormula::box(dprog, diaTop));
    if (!hasConstraint(out, *eventuallyDummy)) out.constraints.push_back(eventuallyDummy);
    if (!hasConstraint(out, *alwaysAfter)) out.constraints.push_back(alwaysAfter);
  }

  out.expanded = true;
  return out;
}

// ---------------------------------------------------------------------------
// Printers
// ---------------------------------------------------------------------------

namespace {

int progPrec(RegularProgram::Kind k) {
  switch (k) {
    case RegularProgram::Kind::Choice: return 0;
    case RegularProgram::Kind::Seq: return 1;
    default: return 2;  // Star, Atomic
  }
}

void printProgramRec(std::ostream& os, const RegularProgram& p,
                     const DomainDescription& d, int parentPrec) {
  int prec = progPrec(p.kind);
  bool paren = prec < parentPrec;
  if (paren) os << "(";
  switch (p.kind) {
    case RegularProgram::Kind::Atomic:
      os << d.actionName(p.action);
      break;
    case RegularProgram::Kind::Seq:
      printProgramRec(os, *p.left, d, 1);
      os << ";";
      printProgramRec(os, *p.right, d, 2);
      break;
    case RegularProgram::Kind::Choice:
      printProgramRec(os, *p.left, d, 0);
      os << "+";
      printProgramRec(os, *p.right, d, 1);
      break;
    case RegularProgram::Kind::Star:
      printProgramRec(os, *p.left, d, 3);
      os << "*";
      break;
  }
  if (paren) os << ")";
}

// Formula precedence levels: -> (0), | (1), & (2), U (3), unary (4).
int formulaPrec(DltlFormula::Kind k) {
  using K = DltlFormula::Kind;
  switch (k) {
    case K::Impl: return 0;
    case K::Or: return 1;
    case K::And: return 2;
    case K::Until: return 3;
    default: return 4;
  }
}

void printFormulaRec(std::ostream& os, const DltlFormula& f,
                     const DomainDescription& d, int parentPrec) {
  using K = DltlFormula::Kind;
  int prec = formulaPrec(f.kind);
  bool paren = prec < parentPrec;
  if (paren) os << "(";
  switch (f.kind) {
    case K::Top: os << "true"; break;
    case K::Bottom: os << "false"; break;
    case K::Fluent: os << d.litName(f.lit); break;
    case K::Neg:
      os << "~";
      printFormulaRec(os, *f.a, d, 5);
      break;
    case K::Or:
      printFormulaRec(os, *f.a, d, 2);
      os << " | ";
      printFormulaRec(os, *f.b, d, 1);
      break;
    case K::And:
      printFormulaRec(os, *f.a, d, 3);
      os << " & ";
      printFormulaRec(os, *f.b, d, 2);
      break;
    case K::Impl:
      printFormulaRec(os, *f.a, d, 1);
      os << " -> ";
      printFormulaRec(os, *f.b, d, 0);
      break;
    case K::Until:
      printFormulaRec(os, *f.a, d, 4);
      if (f.prog) {
        os << " U{";
        printProgramRec(os, *f.prog, d, 0);
        os << "} ";
      } else {
        os << " U ";
      }
      printFormulaRec(os, *f.b, d, 3);
      break;
    case K::DiamondProg:
      os << "<";
      printProgramRec(os, *f.prog, d, 0);
      os << ">";
      printFormulaRec(os, *f.a, d, 5);
      break;
    case K::BoxProg:
      os << "[";
      printProgramRec(os, *f.prog, d, 0);
      os << "]";
      printFormulaRec(os, *f.a, d, 5);
      break;
    case K::Next:
      os << "X ";
      printFormulaRec(os, *f.a, d, 5);
      break;
    case K::Eventually:
      os << "F ";
      printFormulaRec(os, *f.a, d, 5);
      break;
    case K::Always:
      os << "G ";
      printFormulaRec(os, *f.a, d, 5);
      break;
  }
  if (paren) os << ")";
}

void printExtLit(std::ostream& os, const ExtendedLiteral& e, const DomainDescription& d) {
  if (e.defaultNegated) os << "not ";
  switch (e.lit.prefix) {
    case TemporalPrefix::None: break;
    case TemporalPrefix::Next: os << "next "; break;
    case TemporalPrefix::AfterAction: os << "[" << d.actionName(e.lit.action) << "] "; break;
  }
  os << d.litName(e.lit.lit);
}

void printBody(std::ostream& os, const std::vector<ExtendedLiteral>& body,
               const DomainDescription& d) {
  if (body.empty()) return;
  os << " if ";
  for (size_t i = 0; i < body.size(); ++i) {
    if (i) os << ", ";
    printExtLit(os, body[i], d);
  }
}

}  // namespace

std::string printProgram(const RegularProgram& p, const DomainDescription& d) {
  std::ostringstream os;
  printProgramRec(os, p, d, 0);
  return os.str();
}

std::string printFormula(const DltlFormula& f, const DomainDescription& d) {
  std::ostringstream os;
  printFormulaRec(os, f, d, 0);
  return os.str();
}

std::string printLaw(const Law& law, const DomainDescription& d) {
  std::ostringstream os;
  switch (law.kind) {
    case LawKind::Action:
      os << "law [" << d.actionName(law.action) << "] "
         << (law.head ? d.litName(*law.head) : std::string("false"));
      break;
    case LawKind::Precondition:
      os << "impossible [" << d.actionName(law.action) << "]";
      break;
    case LawKind::StaticCausal:
      os << "caused " << d.litName(*law.head);
      break;
    case LawKind::DynamicCausal:
      os << "caused next " << d.litName(*law.head);
      break;
    case LawKind::InitialState:
      os << "initially " << d.litName(*law.head);
      break;
    case LawKind::StateConstraint:
      os << (law.initialOnly ? "initially false" : "caused false");
      break;
  }
  printBody(os, law.body, d);
  os << ".";
  return os.str();
}

std::string printDomain(const DomainDescription& d) {
  std::ostringstream os;
  for (const auto& a : d.actions) {
    if (a.generated) continue;  // re-created by the test decls or by expansion
    os << "action " << a.name << ".\n";
  }
  for (const auto& f : d.fluents) os << "fluent " << f << ".\n";
  for (FluentId f : d.inertial) os << "inertial " << d.fluents[f] << ".\n";
  for (const auto& t : d.declaredTests) os << "test " << d.litName(t) << "?.\n";
  for (const auto& law : d.laws) os << printLaw(law, d) << "\n";
  for (const auto& c : d.constraints) os << "constraint " << printFormula(*c, d) << ".\n";
  return os.str();
}

}  // namespace tasl
