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

#include "tasl/ground.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace tasl {

int FormulaClosure::maxEntries = 10000;

namespace {

uint64_t packAtom(const GroundAtom& a) {
  return (static_cast<uint64_t>(a.kind) << 56) |
         ((static_cast<uint64_t>(a.x) & 0xFFFFFFF) << 28) |
         (static_cast<uint64_t>(a.y) & 0xFFFFFFF);
}

// Export-safe action spelling: tests become test(f) / test(neg(f)).
std::string exportActionName(const DomainDescription& d, ActionId a) {
  const ActionInfo& info = d.actions[a];
  if (!info.isTest) return info.name;
  if (info.testLit.negated) return "test(neg(" + d.fluentName(info.testLit.fluent) + "))";
  return "test(" + d.fluentName(info.testLit.fluent) + ")";
}

std::string programKey(const RegularProgram& p) {
  switch (p.kind) {
    case RegularProgram::Kind::Atomic: return "a" + std::to_string(p.action);
    case RegularProgram::Kind::Seq: return "(" + programKey(*p.left) + ";" + programKey(*p.right) + ")";
    case RegularProgram::Kind::Choice: return "(" + programKey(*p.left) + "+" + programKey(*p.right) + ")";
    case RegularProgram::Kind::Star: return "(" + programKey(*p.left) + ")*";
  }
  return "?";
}

}  // namespace

// ---------------------------------------------------------------------------
// FormulaClosure
// ---------------------------------------------------------------------------

int32_t FormulaClosure::find(const Entry& e) const {
  for (int32_t i = 0; i < static_cast<int32_t>(entries.size()); ++i)
    if (entries[i] == e) return i;
  return -1;
}

int32_t FormulaClosure::intern(const Entry& e) {
  int32_t id = find(e);
  if (id >= 0) return id;
  if (static_cast<int>(entries.size()) >= maxEntries)
    throw std::runtime_error("formula closure limit exceeded (" +
                             std::to_string(maxEntries) + " entries)");
  entries.push_back(e);
  termCache_.clear();
  return static_cast<int32_t>(entries.size()) - 1;
}

int32_t FormulaClosure::mkNeg(int32_t id) {
  if (entries[id].kind == Entry::Kind::Neg) return entries[id].a;
  Entry e;
  e.kind = Entry::Kind::Neg;
  e.a = id;
  return intern(e);
}

int32_t FormulaClosure::addAutomaton(const RegularProgram& p, const DomainDescription& d) {
  std::string key = programKey(p);
  auto it = automatonByKey.find(key);
  if (it != automatonByKey.end()) return it->second;
  AutomatonHandle h = compile(p);
  Automaton a;
  a.nfa = h.nfa;
  a.startState = h.start;
  a.name = "aut" + std::to_string(automata.size() + 1);
  automata.push_back(a);
  int32_t id = static_cast<int32_t>(automata.size()) - 1;
  automatonByKey.emplace(key, id);
  (void)d;
  return id;
}

int32_t FormulaClosure::sigmaStarAutomaton(const DomainDescription& d) {
  std::string key = "SIGMA*";
  auto it = automatonByKey.find(key);
  if (it != automatonByKey.end()) return it->second;
  auto nfa = std::make_shared<Nfa>();
  nfa->numStates = 1;
  nfa->finals = {true};
  for (ActionId a = 0; a < static_cast<ActionId>(d.actions.size()); ++a)
    nfa->transitions.emplace_back(0, a, 0);
  nfa->buildIndex();
  Automaton a;
  a.nfa = nfa;
  a.startState = 0;
  a.name = "aut" + std::to_string(automata.size() + 1);
  automata.push_back(a);
  int32_t id = static_cast<int32_t>(automata.size()) - 1;
  automatonByKey.emplace(key, id);
  return id;
}

int32_t FormulaClosure::mkUntilFamily(int32_t autId, int startState, int32_t a, int32_t b) {
  const Nfa& nfa = *automata[autId].nfa;
  int32_t startEntry = -1;
  for (int q = 0; q < nfa.numStates; ++q) {
    Entry e;
    e.kind = Entry::Kind::Until;
    e.autId = autId;
    e.autState = q;
    e.a = a;
    e.b = b;
    int32_t id = intern(e);
    if (q == startState) startEntry = id;
  }
  assert(startEntry >= 0);
  return startEntry;
}

int32_t FormulaClosure::addFormula(const DltlFormula& f, const DomainDescription& d) {
  using K = DltlFormula::Kind;
  switch (f.kind) {
    case K::Top: return intern({Entry::Kind::True});
    case K::Bottom: return intern({Entry::Kind::False});
    case K::Fluent: {
      Entry e;
      e.kind = Entry::Kind::Fluent;
      e.fluent = f.lit.fluent;
      int32_t id = intern(e);
      return f.lit.negated ? mkNeg(id) : id;
    }
    case K::Neg: return mkNeg(addFormula(*f.a, d));
    case K::Or: {
      Entry e;
      e.kind = Entry::Kind::Or;
      e.a = addFormula(*f.a, d);
      e.b = addFormula(*f.b, d);
      return intern(e);
    }
    case K::And: {
      Entry e;
      e.kind = Entry::Kind::And;
      e.a = addFormula(*f.a, d);
      e.b = addFormula(*f.b, d);
      return intern(e);
    }
    case K::Impl: {
      Entry e;
      e.kind = Entry::Kind::Impl;
      e.a = addFormula(*f.a, d);
      e.b = addFormula(*f.b, d);
      return intern(e);
    }
    case K::Until: {
      int32_t a = addFormula(*f.a, d);
      int32_t b = addFormula(*f.b, d);
      if (f.prog) {
        int32_t autId = addAutomaton(*f.prog, d);
        return mkUntilFamily(autId, automata[autId].startState, a, b);
      }
      int32_t autId = sigmaStarAutomaton(d);
      return mkUntilFamily(autId, automata[autId].startState, a, b);
    }
    case K::DiamondProg: {
      int32_t a = addFormula(*f.a, d);
      if (f.prog->kind == RegularProgram::Kind::Atomic) {
        Entry e;
        e.kind = Entry::Kind::Diamond;
        e.action = f.prog->action;
        e.a = a;
        return intern(e);
      }
      int32_t autId = addAutomaton(*f.prog, d);
      int32_t top = intern({Entry::Kind::True});
      return mkUntilFamily(autId, automata[autId].startState, top, a);
    }
    case K::BoxProg: {
      if (f.prog->kind == RegularProgram::Kind::Atomic) {
        Entry e;
        e.kind = Entry::Kind::Box;
        e.action = f.prog->action;
        e.a = addFormula(*f.a, d);
        return intern(e);
      }
      // [p] a == neg(true U^p neg a)
      int32_t na = mkNeg(addFormula(*f.a, d));
      int32_t autId = addAutomaton(*f.prog, d);
      int32_t top = intern({Entry::Kind::True});
      return mkNeg(mkUntilFamily(autId, automata[autId].startState, top, na));
    }
    case K::Next: {
      // X a expands to the disjunction of <b> a over the whole alphabet
      int32_t a = addFormula(*f.a, d);
      int32_t acc = -1;
      for (int i = static_cast<int>(d.actions.size()) - 1; i >= 0; --i) {
        Entry dia;
        dia.kind = Entry::Kind::Diamond;
        dia.action = i;
        dia.a = a;
        int32_t diaId = intern(dia);
        if (acc < 0) {
          acc = diaId;
        } else {
          Entry orE;
          orE.kind = Entry::Kind::Or;
          orE.a = diaId;
          orE.b = acc;
          acc = intern(orE);
        }
      }
      if (acc < 0) return intern({Entry::Kind::False});
      return acc;
    }
    case K::Eventually: {
      Entry e;
      e.kind = Entry::Kind::Ev;
      e.a = addFormula(*f.a, d);
      return intern(e);
    }
    case K::Always: {
      // G a == neg(ev(neg a))
      int32_t na = mkNeg(addFormula(*f.a, d));
      Entry ev;
      ev.kind = Entry::Kind::Ev;
      ev.a = na;
      return mkNeg(intern(ev));
    }
  }
  throw std::logic_error("addFormula: bad node");
}

std::string FormulaClosure::entryTerm(int32_t id, const DomainDescription& d) const {
  if (termCache_.size() == entries.size() && !termCache_[id].empty()) return termCache_[id];
  if (termCache_.size() != entries.size()) termCache_.assign(entries.size(), "");
  const Entry& e = entries[id];
  std::string s;
  switch (e.kind) {
    case Entry::Kind::True: s = "true"; break;
    case Entry::Kind::False: s = "false"; break;
    case Entry::Kind::Fluent: s = d.fluentName(e.fluent); break;
    case Entry::Kind::Neg: s = "neg(" + entryTerm(e.a, d) + ")"; break;
    case Entry::Kind::Or: s = "or(" + entryTerm(e.a, d) + "," + entryTerm(e.b, d) + ")"; break;
    case Entry::Kind::And: s = "and(" + entryTerm(e.a, d) + "," + entryTerm(e.b, d) + ")"; break;
    case Entry::Kind::Impl: s = "impl(" + entryTerm(e.a, d) + "," + entryTerm(e.b, d) + ")"; break;
    case Entry::Kind::Ev: s = "ev(" + entryTerm(e.a, d) + ")"; break;
    case Entry::Kind::Diamond:
      s = "diamond(" + exportActionName(d, e.action) + "," + entryTerm(e.a, d) + ")";
      break;
    case Entry::Kind::Box:
      s = "box(" + exportActionName(d, e.action) + "," + entryTerm(e.a, d) + ")";
      break;
    case Entry::Kind::Until:
      s = "until(" + automata[e.autId].name + ",q" + std::to_string(e.autState + 1) + "," +
          entryTerm(e.a, d) + "," + entryTerm(e.b, d) + ")";
      break;
    case Entry::Kind::Probe: s = "undefined_fluent"; break;
  }
  termCache_[id] = s;
  return s;
}

// ---------------------------------------------------------------------------
// GroundProgram
// ---------------------------------------------------------------------------

int32_t GroundProgram::atom(GroundAtom a) {
  uint64_t key = packAtom(a);
  auto it = atomIndex.find(key);
  if (it != atomIndex.end()) return it->second;
  int32_t id = static_cast<int32_t>(atoms.size());
  atoms.push_back(a);
  atomIndex.emplace(key, id);
  return id;
}

int32_t GroundProgram::findAtom(GroundAtom a) const {
  auto it = atomIndex.find(packAtom(a));
  return it == atomIndex.end() ? -1 : it->second;
}

std::string GroundProgram::atomName(int32_t i) const {
  const GroundAtom& a = atoms[i];
  const DomainDescription& d = *domain;
  std::ostringstream os;
  switch (a.kind) {
    case GroundAtom::Kind::Holds:
      os << "holds(" << d.fluentName(a.x) << "," << a.y << ")";
      break;
    case GroundAtom::Kind::NHolds:
      os << "-holds(" << d.fluentName(a.x) << "," << a.y << ")";
      break;
    case GroundAtom::Kind::Occurs:
      os << "occurs(" << exportActionName(d, a.x) << "," << a.y << ")";
      break;
    case GroundAtom::Kind::NOccurs:
      os << "~occurs(" << exportActionName(d, a.x) << "," << a.y << ")";
      break;
    case GroundAtom::Kind::Next:
      os << "next(" << a.x << "," << a.y << ")";
      break;
    case GroundAtom::Kind::NNext:
      os << "-next(" << a.x << "," << a.y << ")";
      break;
    case GroundAtom::Kind::EqLast:
      os << "eq_last(" << a.x << ")";
      break;
    case GroundAtom::Kind::DiffLast:
      os << "diff_last(" << a.x << ")";
      break;
    case GroundAtom::Kind::Sat:
      os << "sat(" << closure.entryTerm(a.x, d) << "," << a.y << ")";
      break;
    case GroundAtom::Kind::UndefinedFluent:
      os << "undefined_fluent(" << a.x << ")";
      break;
    case GroundAtom::Kind::Aux:
      os << "aux(" << a.x << ")";
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// translate
// ---------------------------------------------------------------------------

namespace {

struct Builder {
  GroundProgram& g;

  int32_t holds(FluentId f, int s) { return g.atom({GroundAtom::Kind::Holds, f, s}); }
  int32_t nholds(FluentId f, int s) { return g.atom({GroundAtom::Kind::NHolds, f, s}); }
  int32_t litAtom(FluentLiteral l, int s) {
    return l.negated ? nholds(l.fluent, s) : holds(l.fluent, s);
  }
  int32_t occurs(ActionId a, int s) { return g.atom({GroundAtom::Kind::Occurs, a, s}); }
  int32_t noccurs(ActionId a, int s) { return g.atom({GroundAtom::Kind::NOccurs, a, s}); }
  int32_t next(int s1, int s2) { return g.atom({GroundAtom::Kind::Next, s1, s2}); }
  int32_t nnext(int s1, int s2) { return g.atom({GroundAtom::Kind::NNext, s1, s2}); }
  int32_t eqLast(int s) { return g.atom({GroundAtom::Kind::EqLast, s, -1}); }
  int32_t diffLast(int s) { return g.atom({GroundAtom::Kind::DiffLast, s, -1}); }
  int32_t sat(int32_t formula, int s) { return g.atom({GroundAtom::Kind::Sat, formula, s}); }
  int32_t undef(int s) { return g.atom({GroundAtom::Kind::UndefinedFluent, s, -1}); }

  void rule(int32_t head, std::vector<int32_t> pos, std::vector<int32_t> neg) {
    dedupe(pos);
    dedupe(neg);
    g.rules.push_back({head, std::move(pos), std::move(neg)});
  }
  static void dedupe(std::vector<int32_t>& v) {
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size();) {
        if (v[j] == v[i])
          v.erase(v.begin() + j);
        else
          ++j;
      }
  }
  void fact(int32_t head) { rule(head, {}, {}); }
  void constraint(std::vector<int32_t> pos, std::vector<int32_t> neg) {
    rule(-1, std::move(pos), std::move(neg));
  }
};

void translateLaw(Builder& b, const Law& law, int k) {
  auto bodyAt = [&](int s, int sNext, std::vector<int32_t>& pos, std::vector<int32_t>& neg) {
    for (const ExtendedLiteral& e : law.body) {
      int state = e.lit.prefix == TemporalPrefix::None ? s : sNext;
      int32_t atom = b.litAtom(e.lit.lit, state);
      (e.defaultNegated ? neg : pos).push_back(atom);
    }
  };
  switch (law.kind) {
    case LawKind::Action:
      for (int s = 0; s <= k; ++s) {
        std::vector<int32_t> pos{b.occurs(law.action, s)}, neg;
        bodyAt(s, s + 1, pos, neg);
        b.rule(b.litAtom(*law.head, s + 1), std::move(pos), std::move(neg));
      }
      break;
    case LawKind::Precondition:
      for (int s = 0; s <= k; ++s) {
        std::vector<int32_t> pos{b.occurs(law.action, s)}, neg;
        bodyAt(s, s + 1, pos, neg);
        b.constraint(std::move(pos), std::move(neg));
      }
      break;
    case LawKind::DynamicCausal:
      for (int s = 0; s <= k; ++s) {
        std::vector<int32_t> pos, neg;
        bodyAt(s, s + 1, pos, neg);
        b.rule(b.litAtom(*law.head, s + 1), std::move(pos), std::move(neg));
      }
      break;
    case LawKind::StaticCausal:
      for (int s = 0; s <= k + 1; ++s) {
        std::vector<int32_t> pos, neg;
        bodyAt(s, s, pos, neg);
        b.rule(b.litAtom(*law.head, s), std::move(pos), std::move(neg));
      }
      break;
    case LawKind::InitialState: {
      std::vector<int32_t> pos, neg;
      bodyAt(0, 0, pos, neg);
      b.rule(b.litAtom(*law.head, 0), std::move(pos), std::move(neg));
      break;
    }
    case LawKind::StateConstraint: {
      int last = law.initialOnly ? 0 : k + 1;
      for (int s = 0; s <= last; ++s) {
        std::vector<int32_t> pos, neg;
        bodyAt(s, s, pos, neg);
        b.constraint(std::move(pos), std::move(neg));
      }
      break;
    }
  }
}

// Emits the sat rules for closure entries [from, entries.size()).
void emitSatRules(GroundProgram& g, int32_t from) {
  Builder b{g};
  const FormulaClosure& c = g.closure;
  int k = g.k;
  using EK = FormulaClosure::Entry::Kind;
  for (int32_t id = from; id < static_cast<int32_t>(c.entries.size()); ++id) {
    const auto& e = c.entries[id];
    for (int s = 0; s <= k; ++s) {
      auto succRules = [&](std::vector<int32_t> basePos, int32_t targetEntry) {
        // body ... , next(s,s'), sat(target, s') for each next candidate
        if (s < k) {
          std::vector<int32_t> pos = basePos;
          pos.push_back(b.next(s, s + 1));
          pos.push_back(b.sat(targetEntry, s + 1));
          b.rule(b.sat(id, s), std::move(pos), {});
        } else {
          for (int j = 0; j <= k; ++j) {
            std::vector<int32_t> pos = basePos;
            pos.push_back(b.next(k, j));
            pos.push_back(b.sat(targetEntry, j));
            b.rule(b.sat(id, s), std::move(pos), {});
          }
        }
      };
      switch (e.kind) {
        case EK::True:
          b.fact(b.sat(id, s));
          break;
        case EK::False:
          break;
        case EK::Fluent:
          b.rule(b.sat(id, s), {b.holds(e.fluent, s)}, {});
          break;
        case EK::Neg:
          b.rule(b.sat(id, s), {}, {b.sat(e.a, s)});
          break;
        case EK::Or:
          b.rule(b.sat(id, s), {b.sat(e.a, s)}, {});
          b.rule(b.sat(id, s), {b.sat(e.b, s)}, {});
          break;
        case EK::And:
          b.rule(b.sat(id, s), {b.sat(e.a, s), b.sat(e.b, s)}, {});
          break;
        case EK::Impl:
          b.rule(b.sat(id, s), {}, {b.sat(e.a, s)});
          b.rule(b.sat(id, s), {b.sat(e.b, s)}, {});
          break;
        case EK::Ev:
          b.rule(b.sat(id, s), {b.sat(e.a, s)}, {});
          succRules({}, id);
          break;
        case EK::Diamond:
          succRules({b.occurs(e.action, s)}, e.a);
          break;
        case EK::Box:
          for (ActionId other = 0; other < static_cast<ActionId>(g.domain->actions.size());
               ++other)
            if (other != e.action) b.rule(b.sat(id, s), {b.occurs(other, s)}, {});
          succRules({b.occurs(e.action, s)}, e.a);
          break;
        case EK::Until: {
          const auto& aut = *c.automata[e.autId].nfa;
          if (aut.isFinal(e.autState)) b.rule(b.sat(id, s), {b.sat(e.b, s)}, {});
          for (const auto& [q, act, q2] : aut.transitions) {
            if (q != e.autState) continue;
            FormulaClosure::Entry derived = e;
            derived.autState = q2;
            int32_t targetEntry = c.find(derived);
            assert(targetEntry >= 0);
            succRules({b.sat(e.a, s), b.occurs(act, s)}, targetEntry);
          }
          break;
        }
        case EK::Probe:
          b.rule(b.sat(id, s), {b.undef(s)}, {});
          break;
      }
    }
  }
  g.satRulesEmitted = static_cast<int32_t>(c.entries.size());
}

}  // namespace

GroundProgram translate(const DomainDescription& d, int k) {
  if (!d.expanded)
    throw std::invalid_argument("translate: domain must be macro-expanded first");
  if (k < 0) throw std::invalid_argument("translate: k must be >= 0");

  GroundProgram g;
  g.domain = std::make_shared<DomainDescription>(d);
  g.k = k;
  Builder b{g};

  int numFluents = static_cast<int>(d.fluents.size());
  int numActions = static_cast<int>(d.actions.size());

  // create the base atoms up front so indices are state-major
  for (FluentId f = 0; f < numFluents; ++f) {
    b.holds(f, 0);
    b.nholds(f, 0);
  }
  for (int s = 0; s <= k; ++s) {
    for (ActionId a = 0; a < numActions; ++a) {
      b.occurs(a, s);
      b.noccurs(a, s);
    }
    for (FluentId f = 0; f < numFluents; ++f) {
      b.holds(f, s + 1);
      b.nholds(f, s + 1);
    }
  }

  // decision order for the solver: initial state, then per state the action
  // guess and the resulting fluents, then the back edge
  for (FluentId f = 0; f < numFluents; ++f) {
    g.branchHints.push_back(b.holds(f, 0));
    g.branchHints.push_back(b.nholds(f, 0));
  }
  for (int s = 0; s <= k; ++s) {
    for (ActionId a = 0; a < numActions; ++a) g.branchHints.push_back(b.occurs(a, s));
    for (FluentId f = 0; f < numFluents; ++f) {
      g.branchHints.push_back(b.holds(f, s + 1));
      g.branchHints.push_back(b.nholds(f, s + 1));
    }
  }
  for (int j = 0; j <= k; ++j) g.branchHints.push_back(b.next(k, j));

  // occurrence of exactly one action in each state
  for (int s = 0; s <= k; ++s) {
    for (ActionId a = 0; a < numActions; ++a)
      b.rule(b.occurs(a, s), {}, {b.noccurs(a, s)});
    for (ActionId a = 0; a < numActions; ++a)
      for (ActionId a2 = 0; a2 < numActions; ++a2)
        if (a2 != a) b.rule(b.noccurs(a2, s), {b.occurs(a, s)}, {});
    for (ActionId a = 0; a < numActions; ++a)
      b.constraint({b.occurs(a, s), b.noccurs(a, s)}, {});
  }

  // next(i,i+1) facts plus the guessed back edge next(k,j)
  for (int s = 0; s < k; ++s) b.fact(b.next(s, s + 1));
  for (int j = 0; j <= k; ++j) b.rule(b.next(k, j), {}, {b.nnext(k, j)});
  for (int j = 0; j <= k; ++j)
    for (int j2 = 0; j2 <= k; ++j2)
      if (j2 != j) b.rule(b.nnext(k, j2), {b.next(k, j)}, {});
  for (int j = 0; j <= k; ++j) b.constraint({b.next(k, j), b.nnext(k, j)}, {});
  for (int j = 0; j <= k; ++j) b.constraint({b.next(k, j)}, {b.eqLast(j)});

  // eq_last / diff_last against state k+1
  for (int s = 0; s <= k; ++s) {
    for (FluentId f = 0; f < numFluents; ++f) {
      b.rule(b.diffLast(s), {b.holds(f, s), b.nholds(f, k + 1)}, {});
      b.rule(b.diffLast(s), {b.holds(f, k + 1), b.nholds(f, s)}, {});
    }
    b.rule(b.eqLast(s), {}, {b.diffLast(s)});
  }

  // pairing constraints for the classically-negated atom pairs
  for (FluentId f = 0; f < numFluents; ++f)
    for (int s = 0; s <= k + 1; ++s) b.constraint({b.holds(f, s), b.nholds(f, s)}, {});

  for (const Law& law : d.laws) translateLaw(b, law, k);
  return g;
}

GroundProgram attach_formula(const GroundProgram& g, const FormulaPtr& f, AttachMode mode) {
  GroundProgram out = g;
  int32_t id = out.closure.addFormula(*f, *out.domain);
  emitSatRules(out, out.satRulesEmitted);
  Builder b{out};
  if (mode == AttachMode::Require)
    b.constraint({}, {b.sat(id, 0)});
  else
    b.constraint({b.sat(id, 0)}, {});
  out.goals.emplace_back(id, mode);
  return out;
}

GroundProgram attach_welldefined_probe(const GroundProgram& g) {
  GroundProgram out = g;
  Builder b{out};
  int numFluents = static_cast<int>(out.domain->fluents.size());
  for (int s = 0; s <= out.k + 1; ++s)
    for (FluentId f = 0; f < numFluents; ++f)
      b.rule(b.undef(s), {}, {b.holds(f, s), b.nholds(f, s)});
  // goal: F undefined_fluent (required)
  int32_t probe = out.closure.intern({FormulaClosure::Entry::Kind::Probe});
  FormulaClosure::Entry ev;
  ev.kind = FormulaClosure::Entry::Kind::Ev;
  ev.a = probe;
  int32_t goal = out.closure.intern(ev);
  emitSatRules(out, out.satRulesEmitted);
  b.constraint({}, {b.sat(goal, 0)});
  out.goals.emplace_back(goal, AttachMode::Require);
  return out;
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

namespace {
void printRule(std::ostringstream& os, const GroundProgram& g, const GroundRule& r) {
  bool needsArrow = !(r.pos.empty() && r.neg.empty());
  if (r.head >= 0) {
    os << g.atomName(r.head);
    if (needsArrow) os << " :- ";
  } else {
    os << ":- ";
  }
  bool first = true;
  for (int32_t a : r.pos) {
    if (!first) os << ", ";
    os << g.atomName(a);
    first = false;
  }
  for (int32_t a : r.neg) {
    if (!first) os << ", ";
    os << "not " << g.atomName(a);
    first = false;
  }
  os << ".\n";
}
}  // namespace

std::string export_text(const GroundProgram& g) {
  std::ostringstream os;
  os << "% ground program, k=" << g.k << ", states 0.." << g.k + 1 << "\n";
  for (size_t i = 0; i < g.closure.automata.size(); ++i) {
    const auto& aut = g.closure.automata[i];
    os << "% automaton " << aut.name << " (start q" << aut.startState + 1 << "):\n";
    std::istringstream dump(dumpAutomaton(*aut.nfa, aut.name, *g.domain));
    std::string line;
    while (std::getline(dump, line)) os << "%   " << line << "\n";
  }
  for (const auto& [id, mode] : g.goals)
    os << "% " << (mode == AttachMode::Require ? "require" : "forbid") << ": "
       << g.closure.entryTerm(id, *g.domain) << "\n";
  for (const GroundRule& r : g.rules) printRule(os, g, r);
  return os.str();
}

std::string dump_rules(const GroundProgram& g) {
  std::vector<const GroundRule*> sorted;
  sorted.reserve(g.rules.size());
  for (const GroundRule& r : g.rules) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const GroundRule* a, const GroundRule* b) {
    if (a->head != b->head) return a->head < b->head;
    if (a->pos != b->pos) return a->pos < b->pos;
    return a->neg < b->neg;
  });
  std::ostringstream os;
  for (const GroundRule* r : sorted) printRule(os, g, *r);
  return os.str();
}

}  // namespace tasl
