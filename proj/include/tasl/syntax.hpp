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

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tasl {

struct SourceLoc {
  int line = 0;
  int col = 0;
  bool known() const { return line > 0; }
};

/// Error with an attached source position. Thrown by the parser and by
/// resolution/shape validation.
class DomainError : public std::runtime_error {
 public:
  DomainError(SourceLoc loc, const std::string& msg)
      : std::runtime_error(format(loc, msg)), loc_(loc) {}
  SourceLoc loc() const { return loc_; }

 private:
  static std::string format(SourceLoc loc, const std::string& msg) {
    if (!loc.known()) return msg;
    return std::to_string(loc.line) + ":" + std::to_string(loc.col) + ": " + msg;
  }
  SourceLoc loc_;
};

using FluentId = int32_t;
using ActionId = int32_t;

/// A fluent name or its classical negation.
struct FluentLiteral {
  FluentId fluent = -1;
  bool negated = false;

  FluentLiteral complement() const { return {fluent, !negated}; }
  bool operator==(const FluentLiteral&) const = default;
  auto operator<=>(const FluentLiteral&) const = default;
};

enum class TemporalPrefix : uint8_t { None, AfterAction, Next };

/// A fluent literal, optionally behind an after-action or next-state prefix.
struct TemporalLiteral {
  TemporalPrefix prefix = TemporalPrefix::None;
  ActionId action = -1;  // meaningful only for AfterAction
  FluentLiteral lit;

  bool operator==(const TemporalLiteral&) const = default;
};

/// Temporal literal, possibly under default negation.
struct ExtendedLiteral {
  TemporalLiteral lit;
  bool defaultNegated = false;

  bool operator==(const ExtendedLiteral&) const = default;
};

enum class LawKind : uint8_t {
  Action,         // [a] l <- body          (body prefixes: none or [a])
  StaticCausal,   // l <- body              (simple body, applies to every state)
  DynamicCausal,  // next l <- body         (body prefixes: none or next)
  Precondition,   // [a] false <- body      (simple body)
  InitialState,   // l <- body              (state 0 only)
  StateConstraint // false <- body          (every state, or state 0 when initialOnly)
};

struct Law {
  LawKind kind = LawKind::StaticCausal;
  ActionId action = -1;               // Action and Precondition laws
  std::optional<FluentLiteral> head;  // nullopt encodes a falsum head
  bool initialOnly = false;           // StateConstraint scope
  std::vector<ExtendedLiteral> body;
  SourceLoc loc;

  bool sameShape(const Law& o) const {
    return kind == o.kind && action == o.action && head == o.head &&
           initialOnly == o.initialOnly && body == o.body;
  }
};

// ---------------------------------------------------------------------------
// Regular programs and DLTL formulas
// ---------------------------------------------------------------------------

struct RegularProgram;
using ProgPtr = std::shared_ptr<const RegularProgram>;

/// Regular expression over atomic actions (tests are actions too).
struct RegularProgram {
  enum class Kind : uint8_t { Atomic, Seq, Choice, Star };
  Kind kind = Kind::Atomic;
  ActionId action = -1;  // Atomic
  ProgPtr left, right;   // Seq/Choice use both, Star uses left
  SourceLoc loc;

  static ProgPtr atomic(ActionId a, SourceLoc loc = {});
  static ProgPtr seq(ProgPtr l, ProgPtr r, SourceLoc loc = {});
  static ProgPtr choice(ProgPtr l, ProgPtr r, SourceLoc loc = {});
  static ProgPtr star(ProgPtr p, SourceLoc loc = {});

  int size() const;  // number of AST nodes
};

bool structurallyEqual(const RegularProgram& a, const RegularProgram& b);

struct DltlFormula;
using FormulaPtr = std::shared_ptr<const DltlFormula>;

/// Surface DLTL formula. Derived connectives are kept as distinct nodes for
/// printing; coreForm() rewrites everything into {top, bottom, fluent, neg,
/// or, until}.
struct DltlFormula {
  enum class Kind : uint8_t {
    Top,
    Bottom,
    Fluent,       // lit
    Neg,          // a
    Or,           // a, b
    And,          // a, b
    Impl,         // a, b
    Until,        // a U^{prog} b; prog == nullptr means the LTL until (Sigma*)
    DiamondProg,  // <prog> a
    BoxProg,      // [prog] a
    Next,         // X a
    Eventually,   // F a
    Always        // G a
  };
  Kind kind = Kind::Top;
  FluentLiteral lit;  // Fluent
  ProgPtr prog;       // Until/DiamondProg/BoxProg
  FormulaPtr a, b;
  SourceLoc loc;

  static FormulaPtr top();
  static FormulaPtr bottom();
  static FormulaPtr fluent(FluentLiteral l, SourceLoc loc = {});
  static FormulaPtr neg(FormulaPtr f, SourceLoc loc = {});
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b, SourceLoc loc = {});
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b, SourceLoc loc = {});
  static FormulaPtr impl(FormulaPtr a, FormulaPtr b, SourceLoc loc = {});
  static FormulaPtr until(ProgPtr p, FormulaPtr a, FormulaPtr b, SourceLoc loc = {});
  static FormulaPtr untilLtl(FormulaPtr a, FormulaPtr b, SourceLoc loc = {});
  static FormulaPtr diamond(ProgPtr p, FormulaPtr f, SourceLoc loc = {});
  static FormulaPtr box(ProgPtr p, FormulaPtr f, SourceLoc loc = {});
  static FormulaPtr next(FormulaPtr f, SourceLoc loc = {});
  static FormulaPtr eventually(FormulaPtr f, SourceLoc loc = {});
  static FormulaPtr always(FormulaPtr f, SourceLoc loc = {});
};

bool structurallyEqual(const DltlFormula& a, const DltlFormula& b);

/// Rewrites a formula into the {top, bottom, fluent, neg, or, until} core.
/// Negative fluent literals become neg(fluent); derived modalities expand per
/// their defining equivalences (next needs the action alphabet). Idempotent.
FormulaPtr coreForm(const FormulaPtr& f, int numActions);

// ---------------------------------------------------------------------------
// Domain descriptions
// ---------------------------------------------------------------------------

struct ActionInfo {
  std::string name;        // display name; tests look like "-in_sight?"
  bool isTest = false;
  FluentLiteral testLit{};  // for tests
  bool generated = false;   // created by a test declaration or the dummy option
};

/// The pair (Pi, C): declarations, laws and DLTL constraints.
struct DomainDescription {
  std::vector<std::string> fluents;  // FluentId -> name
  std::vector<ActionInfo> actions;   // ActionId -> info
  std::set<FluentId> inertial;
  std::vector<Law> laws;
  std::vector<FormulaPtr> constraints;
  std::vector<FluentLiteral> declaredTests;
  bool expanded = false;

  std::map<std::string, FluentId> fluentByName;
  std::map<std::string, ActionId> actionByName;

  FluentId addFluent(const std::string& name);
  ActionId addAction(const ActionInfo& info);
  FluentId fluentId(const std::string& name) const;  // -1 if unknown
  ActionId actionId(const std::string& name) const;

  const std::string& fluentName(FluentId f) const { return fluents.at(f); }
  const std::string& actionName(ActionId a) const { return actions.at(a).name; }

  std::string litName(FluentLiteral l) const {
    return (l.negated ? "-" : "") + fluents.at(l.fluent);
  }
};

struct ExpandOptions {
  bool addDummy = false;
  bool addCompletion = true;  // suppressible for well-definedness experiments
};

/// Adds persistency laws for inertial fluents, the initial-state completion
/// pair per fluent, the three-law schema per declared test, and (optionally)
/// the dummy action with its two constraints. Idempotent.
DomainDescription expand_macros(const DomainDescription& d, ExpandOptions opts = {});

// ---------------------------------------------------------------------------
// Printing (round-trips through the parser)
// ---------------------------------------------------------------------------

std::string printProgram(const RegularProgram& p, const DomainDescription& d);
std::string printFormula(const DltlFormula& f, const DomainDescription& d);
std::string printLaw(const Law& law, const DomainDescription& d);
std::string printDomain(const DomainDescription& d);

}  // namespace tasl
