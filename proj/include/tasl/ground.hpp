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

#include <unordered_map>

#include "tasl/automata.hpp"
#include "tasl/syntax.hpp"

namespace tasl {

/// Structured propositional atom. States run 0..k+1 for holds, 0..k for
/// occurs/next/eq_last. NHolds/NOccurs/NNext are the paired atoms standing for
/// classical negation, guarded by integrity constraints.
struct GroundAtom {
  enum class Kind : uint8_t {
    Holds,            // (fluent, state)
    NHolds,           // (fluent, state)
    Occurs,           // (action, state)
    NOccurs,          // (action, state)
    Next,             // (state, state)
    NNext,            // (state, state)
    EqLast,           // (state, -)
    DiffLast,         // (state, -)
    Sat,              // (formula id, state)
    UndefinedFluent,  // (state, -)
    Aux               // (tag, -)
  };
  Kind kind = Kind::Aux;
  int32_t x = -1;
  int32_t y = -1;

  bool operator==(const GroundAtom&) const = default;
};

/// Normal rule head <- pos, not neg. head < 0 encodes an integrity constraint.
struct GroundRule {
  int32_t head = -1;
  std::vector<int32_t> pos;
  std::vector<int32_t> neg;
};

enum class AttachMode { Require, Forbid };

/// Closure of a goal/constraint formula in the ground term language:
/// true/false/fluent/neg/or/and/impl/ev/diamond/box/until(A,q,.,.), plus the
/// undefined-fluent probe atom. Until entries exist for every automaton state
/// reachable from the start handle.
struct FormulaClosure {
  struct Entry {
    enum class Kind : uint8_t {
      True, False, Fluent, Neg, Or, And, Impl, Ev, Diamond, Box, Until, Probe
    };
    Kind kind = Kind::True;
    FluentId fluent = -1;
    ActionId action = -1;  // Diamond/Box
    int32_t a = -1, b = -1;
    int32_t autId = -1, autState = -1;  // Until
    bool operator==(const Entry&) const = default;
  };
  struct Automaton {
    std::shared_ptr<const Nfa> nfa;
    std::string name;
    int startState = 0;
  };

  std::vector<Entry> entries;
  std::vector<Automaton> automata;
  std::map<std::string, int32_t> automatonByKey;

  static int maxEntries;  // guard against closure blowup

  int32_t intern(const Entry& e);
  int32_t find(const Entry& e) const;

  /// Negation with double-negation elimination.
  int32_t mkNeg(int32_t id);

  /// Builds the ground normal form of a surface formula, compiling programs
  /// to automata (shared by structure) and adding derived until entries.
  int32_t addFormula(const DltlFormula& f, const DomainDescription& d);

  std::string entryTerm(int32_t id, const DomainDescription& d) const;

 private:
  int32_t addAutomaton(const RegularProgram& p, const DomainDescription& d);
  int32_t sigmaStarAutomaton(const DomainDescription& d);
  int32_t mkUntilFamily(int32_t autId, int startState, int32_t a, int32_t b);
  mutable std::vector<std::string> termCache_;
};

/// Immutable-after-construction propositional program over structured atoms.
struct GroundProgram {
  std::shared_ptr<const DomainDescription> domain;
  int k = 0;
  std::vector<GroundAtom> atoms;
  std::unordered_map<uint64_t, int32_t> atomIndex;
  std::vector<GroundRule> rules;
  FormulaClosure closure;
  int32_t satRulesEmitted = 0;  // closure entries whose rules exist already
  std::vector<std::pair<int32_t, AttachMode>> goals;
  std::vector<int32_t> branchHints;  // solver decision order (state-major)

  int32_t atom(GroundAtom a);
  int32_t findAtom(GroundAtom a) const;  // -1 when absent
  const GroundAtom& atomAt(int32_t i) const { return atoms[i]; }
  std::string atomName(int32_t i) const;
};

/// tr(Pi) at bound k: exactly-one-occurs guesses, next/eq_last k-loop
/// machinery, pairing constraints, and the per-law translations.
GroundProgram translate(const DomainDescription& d, int k);

/// Adds sat rules for the formula's closure at every state 0..k and the
/// require/forbid constraint on sat(f, 0).
GroundProgram attach_formula(const GroundProgram& g, const FormulaPtr& f, AttachMode mode);

/// Adds undefined_fluent(s) <- not holds(f,s), not -holds(f,s) for every
/// fluent and state, plus the required goal F undefined_fluent.
GroundProgram attach_welldefined_probe(const GroundProgram& g);

/// Reference text dialect (`:-`, not, -/~ paired atoms, % comments), suitable
/// for diffing and for feeding external ASP systems. Deterministic.
std::string export_text(const GroundProgram& g);

/// Machine-readable dump: one rule per line, sorted by head then body.
std::string dump_rules(const GroundProgram& g);

}  // namespace tasl
