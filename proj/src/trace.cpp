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

#include "tasl/trace.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace tasl {

// ---------------------------------------------------------------------------
// decode
// ---------------------------------------------------------------------------

namespace {

LassoTrace decodeImpl(const GroundProgram& p, const Interpretation& i, bool lenient,
                      std::vector<std::pair<FluentId, int>>* undefined) {
  LassoTrace t;
  t.k = p.k;
  t.domain = p.domain;
  const DomainDescription& d = *p.domain;
  int numFluents = static_cast<int>(d.fluents.size());
  int numActions = static_cast<int>(d.actions.size());

  t.actions.assign(p.k + 1, -1);
  for (int s = 0; s <= p.k; ++s) {
    for (ActionId a = 0; a < numActions; ++a) {
      int32_t atom = p.findAtom({GroundAtom::Kind::Occurs, a, s});
      if (atom >= 0 && i.contains(atom)) {
        if (t.actions[s] != -1)
          throw std::runtime_error("malformed model: two actions occur in state " +
                                   std::to_string(s));
        t.actions[s] = a;
      }
    }
    if (t.actions[s] < 0)
      throw std::runtime_error("malformed model: no action occurs in state " +
                               std::to_string(s));
  }

  t.loopTarget = -1;
  for (int j = 0; j <= p.k; ++j) {
    int32_t atom = p.findAtom({GroundAtom::Kind::Next, p.k, j});
    if (atom >= 0 && i.contains(atom)) {
      if (t.loopTarget != -1) throw std::runtime_error("malformed model: two back edges");
      t.loopTarget = j;
    }
  }
  if (t.loopTarget < 0) throw std::runtime_error("malformed model: missing next(k,j)");

  t.holdsVal.assign(p.k + 1, std::vector<bool>(numFluents, false));
  for (int s = 0; s <= p.k; ++s) {
    for (FluentId f = 0; f < numFluents; ++f) {
      int32_t pa = p.findAtom({GroundAtom::Kind::Holds, f, s});
      int32_t na = p.findAtom({GroundAtom::Kind::NHolds, f, s});
      bool pos = pa >= 0 && i.contains(pa);
      bool neg = na >= 0 && i.contains(na);
      if (pos) {
        t.holdsVal[s][f] = true;
      } else if (!neg) {
        if (!lenient)
          throw std::runtime_error("partial valuation: fluent '" + d.fluentName(f) +
                                   "' undefined in state " + std::to_string(s) +
                                   " (domain is not well-defined)");
        if (undefined) undefined->emplace_back(f, s);
      }
    }
  }
  return t;
}

}  // namespace

LassoTrace decode(const GroundProgram& p, const Interpretation& i) {
  return decodeImpl(p, i, false, nullptr);
}

LassoTrace decode_partial(const GroundProgram& p, const Interpretation& i,
                          std::vector<std::pair<FluentId, int>>* undefined) {
  return decodeImpl(p, i, true, undefined);
}

// ---------------------------------------------------------------------------
// eval: least fixpoint over the core-form closure
// ---------------------------------------------------------------------------

namespace {

struct EvalNode {
  enum class Kind : uint8_t { Top, Bottom, Fluent, Neg, Or, Until, UntilStar };
  Kind kind = Kind::Top;
  FluentId fluent = -1;
  int a = -1, b = -1;
  int autIdx = -1;   // Until: index into automata
  int autState = 0;  // Until
};

struct EvalClosure {
  std::vector<EvalNode> nodes;
  std::vector<AutomatonHandle> automata;  // by compile order
  std::map<std::string, int> autKey;

  static std::string key(const RegularProgram& p) {
    switch (p.kind) {
      case RegularProgram::Kind::Atomic: return "a" + std::to_string(p.action);
      case RegularProgram::Kind::Seq: return "(" + key(*p.left) + ";" + key(*p.right) + ")";
      case RegularProgram::Kind::Choice: return "(" + key(*p.left) + "+" + key(*p.right) + ")";
      case RegularProgram::Kind::Star: return "(" + key(*p.left) + ")*";
    }
    return "?";
  }

  int intern(const EvalNode& n) {
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
      const EvalNode& m = nodes[i];
      if (m.kind == n.kind && m.fluent == n.fluent && m.a == n.a && m.b == n.b &&
          m.autIdx == n.autIdx && m.autState == n.autState)
        return i;
    }
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
  }

  // expects core form ({top,bottom,fluent,neg,or,until})
  int build(const DltlFormula& f) {
    using K = DltlFormula::Kind;
    switch (f.kind) {
      case K::Top: return intern({EvalNode::Kind::Top, -1, -1, -1, -1, 0});
      case K::Bottom: return intern({EvalNode::Kind::Bottom, -1, -1, -1, -1, 0});
      case K::Fluent: {
        int id = intern({EvalNode::Kind::Fluent, f.lit.fluent, -1, -1, -1, 0});
        if (f.lit.negated) return intern({EvalNode::Kind::Neg, -1, id, -1, -1, 0});
        return id;
      }
      case K::Neg: {
        int a = build(*f.a);
        return intern({EvalNode::Kind::Neg, -1, a, -1, -1, 0});
      }
      case K::Or: {
        int a = build(*f.a);
        int b = build(*f.b);
        return intern({EvalNode::Kind::Or, -1, a, b, -1, 0});
      }
      case K::Until: {
        int a = build(*f.a);
        int b = build(*f.b);
        if (!f.prog) {
          return intern({EvalNode::Kind::UntilStar, -1, a, b, -1, 0});
        }
        std::string k = key(*f.prog);
        int autIdx;
        auto it = autKey.find(k);
        if (it != autKey.end()) {
          autIdx = it->second;
        } else {
          automata.push_back(compile(*f.prog));
          autIdx = static_cast<int>(automata.size()) - 1;
          autKey.emplace(k, autIdx);
        }
        const Nfa& nfa = *automata[autIdx].nfa;
        int result = -1;
        for (int q = 0; q < nfa.numStates; ++q) {
          int id = intern({EvalNode::Kind::Until, -1, a, b, autIdx, q});
          if (q == automata[autIdx].start) result = id;
        }
        return result;
      }
      default:
        throw std::logic_error("eval: formula is not in core form");
    }
  }
};

}  // namespace

Verdict eval(const LassoTrace& t, const FormulaPtr& f) {
  FormulaPtr core = coreForm(f, static_cast<int>(t.domain->actions.size()));
  EvalClosure c;
  int root = c.build(*core);
  int states = t.k + 1;

  // val[node][state]; nodes evaluated bottom-up, until families as least
  // fixpoints over their member x state grid
  std::vector<std::vector<char>> val(c.nodes.size(), std::vector<char>(states, 0));
  std::vector<char> done(c.nodes.size(), 0);

  // recursive evaluation by structure; until families resolved together
  std::function<void(int)> evalNode = [&](int id) {
    if (done[id]) return;
    const EvalNode& n = c.nodes[id];
    switch (n.kind) {
      case EvalNode::Kind::Top:
        for (int s = 0; s < states; ++s) val[id][s] = 1;
        break;
      case EvalNode::Kind::Bottom:
        break;
      case EvalNode::Kind::Fluent:
        for (int s = 0; s < states; ++s) val[id][s] = t.holdsVal[s][n.fluent] ? 1 : 0;
        break;
      case EvalNode::Kind::Neg:
        evalNode(n.a);
        for (int s = 0; s < states; ++s) val[id][s] = val[n.a][s] ? 0 : 1;
        break;
      case EvalNode::Kind::Or:
        evalNode(n.a);
        evalNode(n.b);
        for (int s = 0; s < states; ++s) val[id][s] = (val[n.a][s] || val[n.b][s]) ? 1 : 0;
        break;
      case EvalNode::Kind::UntilStar: {
        evalNode(n.a);
        evalNode(n.b);
        bool changed = true;
        while (changed) {
          changed = false;
          for (int s = 0; s < states; ++s) {
            if (val[id][s]) continue;
            char v = val[n.b][s] || (val[n.a][s] && val[id][t.succ(s)]);
            if (v) {
              val[id][s] = 1;
              changed = true;
            }
          }
        }
        break;
      }
      case EvalNode::Kind::Until: {
        evalNode(n.a);
        evalNode(n.b);
        // find the family ids (same automaton, same children)
        std::vector<int> family(c.automata[n.autIdx].nfa->numStates, -1);
        for (int i = 0; i < static_cast<int>(c.nodes.size()); ++i) {
          const EvalNode& m = c.nodes[i];
          if (m.kind == EvalNode::Kind::Until && m.autIdx == n.autIdx && m.a == n.a &&
              m.b == n.b)
            family[m.autState] = i;
        }
        const Nfa& nfa = *c.automata[n.autIdx].nfa;
        bool changed = true;
        while (changed) {
          changed = false;
          for (int q = 0; q < nfa.numStates; ++q) {
            int fid = family[q];
            if (fid < 0) continue;
            for (int s = 0; s < states; ++s) {
              if (val[fid][s]) continue;
              char v = 0;
              if (nfa.isFinal(q) && val[n.b][s]) v = 1;
              if (!v && val[n.a][s]) {
                for (int e : nfa.out[q]) {
                  const auto& [qq, act, q2] = nfa.transitions[e];
                  if (act == t.actions[s] && family[q2] >= 0 &&
                      val[family[q2]][t.succ(s)]) {
                    v = 1;
                    break;
                  }
                }
              }
              if (v) {
                val[fid][s] = 1;
                changed = true;
              }
            }
          }
        }
        for (int q = 0; q < nfa.numStates; ++q)
          if (family[q] >= 0) done[family[q]] = 1;
        break;
      }
    }
    done[id] = 1;
  };
  evalNode(root);

  Verdict v;
  v.value = val[root][0] != 0;
  if (v.value && c.nodes[root].kind == EvalNode::Kind::UntilStar) {
    // cheap witness for plain untils: first reachable state satisfying b
    int s = 0;
    for (int step = 0; step <= 2 * t.k + 2; ++step) {
      if (val[c.nodes[root].b][s]) {
        v.witness = s;
        break;
      }
      s = t.succ(s);
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// eval_unfolded: three-valued evaluation on the explicit unfolding
// ---------------------------------------------------------------------------

namespace {

Verdict3 and3(Verdict3 a, Verdict3 b) {
  if (a == Verdict3::False || b == Verdict3::False) return Verdict3::False;
  if (a == Verdict3::True && b == Verdict3::True) return Verdict3::True;
  return Verdict3::Unknown;
}
Verdict3 or3(Verdict3 a, Verdict3 b) {
  if (a == Verdict3::True || b == Verdict3::True) return Verdict3::True;
  if (a == Verdict3::False && b == Verdict3::False) return Verdict3::False;
  return Verdict3::Unknown;
}
Verdict3 not3(Verdict3 a) {
  if (a == Verdict3::Unknown) return Verdict3::Unknown;
  return a == Verdict3::True ? Verdict3::False : Verdict3::True;
}

struct Unfolder {
  const LassoTrace& t;
  int depth;
  std::map<std::pair<const DltlFormula*, int>, Verdict3> memo;

  ActionId actionAt(int pos) const { return t.actions[t.stateAt(pos)]; }

  Verdict3 go(const DltlFormula& f, int pos) {
    auto key = std::make_pair(&f, pos);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Verdict3 r = compute(f, pos);
    memo.emplace(key, r);
    return r;
  }

  Verdict3 compute(const DltlFormula& f, int pos) {
    using K = DltlFormula::Kind;
    if (pos >= depth) return Verdict3::Unknown;
    switch (f.kind) {
      case K::Top: return Verdict3::True;
      case K::Bottom: return Verdict3::False;
      case K::Fluent: {
        bool v = t.holdsVal[t.stateAt(pos)][f.lit.fluent];
        if (f.lit.negated) v = !v;
        return v ? Verdict3::True : Verdict3::False;
      }
      case K::Neg: return not3(go(*f.a, pos));
      case K::Or: return or3(go(*f.a, pos), go(*f.b, pos));
      case K::Until: {
        if (f.prog) return untilProg(*f.prog, *f.a, *f.b, pos);
        // LTL until on the unfolding
        Verdict3 res = Verdict3::False;
        Verdict3 prefixAlpha = Verdict3::True;
        for (int p = pos; p < depth; ++p) {
          if (p > pos) {
            prefixAlpha = and3(prefixAlpha, go(*f.a, p - 1));
            if (prefixAlpha == Verdict3::False) return res;
          }
          res = or3(res, and3(prefixAlpha, go(*f.b, p)));
          if (res == Verdict3::True) return res;
        }
        return or3(res, Verdict3::Unknown);  // horizon reached
      }
      default:
        throw std::logic_error("eval_unfolded: formula is not in core form");
    }
  }

  Verdict3 untilProg(const RegularProgram& prog, const DltlFormula& alpha,
                     const DltlFormula& beta, int pos) {
    AutomatonHandle h = compile(prog);
    const Nfa& n = *h.nfa;
    std::vector<bool> cur(n.numStates, false);
    cur[h.start] = true;
    Verdict3 res = Verdict3::False;
    Verdict3 prefixAlpha = Verdict3::True;
    for (int p = pos; p < depth; ++p) {
      if (p > pos) {
        prefixAlpha = and3(prefixAlpha, go(alpha, p - 1));
        if (prefixAlpha == Verdict3::False) return res;
      }
      bool finalReach = false;
      for (int q = 0; q < n.numStates; ++q)
        if (cur[q] && n.finals[q]) finalReach = true;
      if (finalReach) {
        res = or3(res, and3(prefixAlpha, go(beta, p)));
        if (res == Verdict3::True) return res;
      }
      // advance over the action at p
      std::vector<bool> next(n.numStates, false);
      bool any = false;
      for (int q = 0; q < n.numStates; ++q)
        if (cur[q])
          for (int e : n.out[q]) {
            const auto& [qq, act, q2] = n.transitions[e];
            if (act == actionAt(p)) {
              next[q2] = true;
              any = true;
            }
          }
      if (!any) return res;  // the automaton died: no further candidates
      cur = std::move(next);
    }
    return or3(res, Verdict3::Unknown);  // live states beyond the horizon
  }
};

}  // namespace

Verdict3 eval_unfolded(const LassoTrace& t, const FormulaPtr& f, int depth) {
  if (depth > 10000) throw std::invalid_argument("eval_unfolded: depth limit (10000)");
  FormulaPtr core = coreForm(f, static_cast<int>(t.domain->actions.size()));
  Unfolder u{t, depth, {}};
  return u.go(*core, 0);
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

std::string render_text(const LassoTrace& t) {
  const DomainDescription& d = *t.domain;
  std::ostringstream os;
  for (int s = 0; s <= t.k; ++s) {
    os << "state " << s << ": ";
    if (s == 0) {
      bool first = true;
      for (FluentId f = 0; f < static_cast<FluentId>(d.fluents.size()); ++f) {
        if (!first) os << " ";
        os << (t.holdsVal[0][f] ? "" : "-") << d.fluentName(f);
        first = false;
      }
      if (first) os << "(no fluents)";
    } else {
      os << d.actionName(t.actions[s - 1]) << " =>";
      bool any = false;
      for (FluentId f = 0; f < static_cast<FluentId>(d.fluents.size()); ++f) {
        if (t.holdsVal[s][f] != t.holdsVal[s - 1][f]) {
          os << " " << (t.holdsVal[s][f] ? "" : "-") << d.fluentName(f);
          any = true;
        }
      }
      if (!any) os << " (no change)";
    }
    os << "\n";
  }
  os << "loop: " << d.actionName(t.actions[t.k]) << " -> " << t.loopTarget << "\n";
  return os.str();
}

std::string render_structured(const LassoTrace& t) {
  const DomainDescription& d = *t.domain;
  nlohmann::json j;
  j["k"] = t.k;
  j["loop"] = t.loopTarget;
  j["states"] = nlohmann::json::array();
  for (int s = 0; s <= t.k; ++s) {
    nlohmann::json st;
    st["action"] = d.actionName(t.actions[s]);
    nlohmann::json holds;
    for (FluentId f = 0; f < static_cast<FluentId>(d.fluents.size()); ++f)
      holds[d.fluentName(f)] = static_cast<bool>(t.holdsVal[s][f]);
    st["holds"] = holds;
    j["states"].push_back(st);
  }
  return j.dump(2) + "\n";
}

LassoTrace parse_structured_trace(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LassoTrace t;
  t.k = j.at("k").get<int>();
  t.loopTarget = j.at("loop").get<int>();
  auto d = std::make_shared<DomainDescription>();

  const auto& states = j.at("states");
  if (static_cast<int>(states.size()) != t.k + 1)
    throw std::runtime_error("trace: expected " + std::to_string(t.k + 1) + " states");
  if (t.loopTarget < 0 || t.loopTarget > t.k)
    throw std::runtime_error("trace: loop target out of range");

  for (auto& [name, value] : states.at(0).at("holds").items()) d->addFluent(name);

  auto internAction = [&](const std::string& name) -> ActionId {
    ActionId existing = d->actionId(name);
    if (existing >= 0) return existing;
    if (!name.empty() && name.back() == '?') {
      std::string body = name.substr(0, name.size() - 1);
      bool negated = false;
      if (!body.empty() && (body[0] == '-' || body[0] == '~')) {
        negated = true;
        body = body.substr(1);
      }
      FluentId f = d->fluentId(body);
      if (f < 0) throw std::runtime_error("trace: test '" + name + "' over unknown fluent");
      FluentLiteral lit{f, negated};
      d->declaredTests.push_back(lit);
      return d->addAction({name, true, lit, true});
    }
    return d->addAction({name, false, {}, false});
  };

  t.actions.clear();
  t.holdsVal.assign(t.k + 1, std::vector<bool>(d->fluents.size(), false));
  for (int s = 0; s <= t.k; ++s) {
    const auto& st = states.at(s);
    t.actions.push_back(internAction(st.at("action").get<std::string>()));
    for (auto& [name, value] : st.at("holds").items()) {
      FluentId f = d->fluentId(name);
      if (f < 0) throw std::runtime_error("trace: fluent '" + name + "' missing in state 0");
      t.holdsVal[s][f] = value.get<bool>();
    }
  }
  d->expanded = true;
  t.domain = d;
  return t;
}

}  // namespace tasl
