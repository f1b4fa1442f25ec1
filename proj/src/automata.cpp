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

#include "tasl/automata.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace tasl {

void Nfa::buildIndex() {
  out.assign(numStates, {});
  for (int i = 0; i < static_cast<int>(transitions.size()); ++i)
    out[std::get<0>(transitions[i])].push_back(i);
}

namespace {

// Thompson fragment with epsilon edges (symbol -1).
struct EpsNfa {
  int numStates = 0;
  std::vector<std::tuple<int, ActionId, int>> edges;
  int newState() { return numStates++; }
  void edge(int a, ActionId sym, int b) { edges.emplace_back(a, sym, b); }
};

struct Frag {
  int start, accept;
};

Frag thompson(EpsNfa& n, const RegularProgram& p) {
  switch (p.kind) {
    case RegularProgram::Kind::Atomic: {
      int s = n.newState(), t = n.newState();
      n.edge(s, p.action, t);
      return {s, t};
    }
    case RegularProgram::Kind::Seq: {
      Frag l = thompson(n, *p.left);
      Frag r = thompson(n, *p.right);
      n.edge(l.accept, -1, r.start);
      return {l.start, r.accept};
    }
    case RegularProgram::Kind::Choice: {
      Frag l = thompson(n, *p.left);
      Frag r = thompson(n, *p.right);
      int s = n.newState(), t = n.newState();
      n.edge(s, -1, l.start);
      n.edge(s, -1, r.start);
      n.edge(l.accept, -1, t);
      n.edge(r.accept, -1, t);
      return {s, t};
    }
    case RegularProgram::Kind::Star: {
      Frag in = thompson(n, *p.left);
      int s = n.newState(), t = n.newState();
      n.edge(s, -1, in.start);
      n.edge(s, -1, t);
      n.edge(in.accept, -1, in.start);
      n.edge(in.accept, -1, t);
      return {s, t};
    }
  }
  return {0, 0};
}

std::vector<int> epsClosure(const EpsNfa& n, int q) {
  std::vector<bool> seen(n.numStates, false);
  std::vector<int> stack{q}, result;
  seen[q] = true;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    result.push_back(s);
    for (const auto& [a, sym, b] : n.edges)
      if (a == s && sym == -1 && !seen[b]) {
        seen[b] = true;
        stack.push_back(b);
      }
  }
  return result;
}

// Merge states with identical (finality, outgoing edge set) signatures until
// a fixpoint; languages are preserved.
void mergeEquivalent(Nfa& nfa, int& start) {
  for (;;) {
    std::map<std::pair<bool, std::vector<std::pair<ActionId, int>>>, int> sig;
    std::vector<int> rep(nfa.numStates);
    bool changed = false;
    std::vector<std::vector<std::pair<ActionId, int>>> outEdges(nfa.numStates);
    for (const auto& [a, sym, b] : nfa.transitions) outEdges[a].emplace_back(sym, b);
    for (auto& v : outEdges) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (int q = 0; q < nfa.numStates; ++q) {
      auto key = std::make_pair(nfa.finals[q], outEdges[q]);
      auto [it, inserted] = sig.emplace(key, q);
      rep[q] = it->second;
      if (!inserted) changed = true;
    }
    if (!changed) return;
    // rebuild over representatives
    std::map<int, int> compact;
    for (int q = 0; q < nfa.numStates; ++q)
      if (rep[q] == q) {
        int id = static_cast<int>(compact.size());
        compact[q] = id;
      }
    Nfa out;
    out.numStates = static_cast<int>(compact.size());
    out.finals.assign(out.numStates, false);
    std::set<std::tuple<int, ActionId, int>> edges;
    for (int q = 0; q < nfa.numStates; ++q)
      if (nfa.finals[q]) out.finals[compact[rep[q]]] = true;
    for (const auto& [a, sym, b] : nfa.transitions)
      edges.emplace(compact[rep[a]], sym, compact[rep[b]]);
    out.transitions.assign(edges.begin(), edges.end());
    start = compact[rep[start]];
    nfa = std::move(out);
  }
}

// Renumber states in BFS order from the start (symbol-sorted), dropping
// unreachable states. Gives a canonical, deterministic numbering.
void canonicalize(Nfa& nfa, int& start) {
  std::vector<std::vector<std::pair<ActionId, int>>> outEdges(nfa.numStates);
  for (const auto& [a, sym, b] : nfa.transitions) outEdges[a].emplace_back(sym, b);
  for (auto& v : outEdges) std::sort(v.begin(), v.end());

  std::vector<int> order(nfa.numStates, -1);
  int next = 0;
  std::queue<int> bfs;
  order[start] = next++;
  bfs.push(start);
  while (!bfs.empty()) {
    int q = bfs.front();
    bfs.pop();
    for (const auto& [sym, b] : outEdges[q])
      if (order[b] < 0) {
        order[b] = next++;
        bfs.push(b);
      }
  }
  Nfa out;
  out.numStates = next;
  out.finals.assign(next, false);
  std::set<std::tuple<int, ActionId, int>> edges;
  for (int q = 0; q < nfa.numStates; ++q)
    if (order[q] >= 0 && nfa.finals[q]) out.finals[order[q]] = true;
  for (const auto& [a, sym, b] : nfa.transitions)
    if (order[a] >= 0 && order[b] >= 0) edges.emplace(order[a], sym, order[b]);
  out.transitions.assign(edges.begin(), edges.end());
  start = order[start];
  nfa = std::move(out);
}

}  // namespace

AutomatonHandle compile(const RegularProgram& p) {
  EpsNfa eps;
  Frag frag = thompson(eps, p);

  // epsilon elimination: delta'(q, a) = U_{r in cl(q)} delta(r, a),
  // final'(q) iff cl(q) hits the accept state
  Nfa nfa;
  nfa.numStates = eps.numStates;
  nfa.finals.assign(eps.numStates, false);
  std::set<std::tuple<int, ActionId, int>> edges;
  for (int q = 0; q < eps.numStates; ++q) {
    for (int r : epsClosure(eps, q)) {
      if (r == frag.accept) nfa.finals[q] = true;
      for (const auto& [a, sym, b] : eps.edges)
        if (a == r && sym != -1) edges.emplace(q, sym, b);
    }
  }
  nfa.transitions.assign(edges.begin(), edges.end());

  int start = frag.start;
  canonicalize(nfa, start);   // drop unreachable before merging
  mergeEquivalent(nfa, start);
  canonicalize(nfa, start);
  nfa.buildIndex();

  auto shared = std::make_shared<Nfa>(std::move(nfa));
  return {shared, start};
}

bool accepts(const AutomatonHandle& h, std::span<const ActionId> word) {
  const Nfa& n = *h.nfa;
  std::vector<bool> cur(n.numStates, false);
  cur[h.start] = true;
  for (ActionId sym : word) {
    std::vector<bool> next(n.numStates, false);
    bool any = false;
    for (int q = 0; q < n.numStates; ++q)
      if (cur[q])
        for (int e : n.out[q]) {
          const auto& [a, s, b] = n.transitions[e];
          if (s == sym) {
            next[b] = true;
            any = true;
          }
        }
    if (!any) return false;
    cur = std::move(next);
  }
  for (int q = 0; q < n.numStates; ++q)
    if (cur[q] && n.finals[q]) return true;
  return false;
}

namespace {
void enumerate(const Nfa& n, std::vector<bool>& stateSet, std::vector<ActionId>& word,
               int maxLen, int numActions, std::vector<std::vector<ActionId>>& out) {
  for (int q = 0; q < n.numStates; ++q)
    if (stateSet[q] && n.finals[q]) {
      out.push_back(word);
      break;
    }
  if (static_cast<int>(word.size()) == maxLen) return;
  for (ActionId sym = 0; sym < numActions; ++sym) {
    std::vector<bool> next(n.numStates, false);
    bool any = false;
    for (int q = 0; q < n.numStates; ++q)
      if (stateSet[q])
        for (int e : n.out[q]) {
          const auto& [a, s, b] = n.transitions[e];
          if (s == sym) {
            next[b] = true;
            any = true;
          }
        }
    if (!any) continue;
    word.push_back(sym);
    enumerate(n, next, word, maxLen, numActions, out);
    word.pop_back();
  }
}
}  // namespace

std::vector<std::vector<ActionId>> language_upto(const AutomatonHandle& h, int maxLen,
                                                 int numActions) {
  if (maxLen > 12) throw std::invalid_argument("language_upto: maxLen limit (12) exceeded");
  std::vector<std::vector<ActionId>> out;
  std::vector<bool> start(h.nfa->numStates, false);
  start[h.start] = true;
  std::vector<ActionId> word;
  enumerate(*h.nfa, start, word, maxLen, numActions, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<AutomatonHandle> reachable_handles(const AutomatonHandle& h) {
  const Nfa& n = *h.nfa;
  std::vector<bool> seen(n.numStates, false);
  std::vector<int> stack{h.start};
  seen[h.start] = true;
  std::vector<int> states;
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    states.push_back(q);
    for (int e : n.out[q]) {
      int b = std::get<2>(n.transitions[e]);
      if (!seen[b]) {
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  std::sort(states.begin(), states.end());
  std::vector<AutomatonHandle> out;
  out.reserve(states.size());
  for (int q : states) out.push_back({h.nfa, q});
  return out;
}

std::string dumpAutomaton(const Nfa& nfa, const std::string& name,
                          const DomainDescription& d) {
  std::ostringstream os;
  for (const auto& [a, sym, b] : nfa.transitions)
    os << "trans(" << name << ",q" << a + 1 << "," << d.actionName(sym) << ",q" << b + 1
       << ").\n";
  for (int q = 0; q < nfa.numStates; ++q)
    if (nfa.finals[q]) os << "final(" << name << ",q" << q + 1 << ").\n";
  return os.str();
}

}  // namespace tasl
