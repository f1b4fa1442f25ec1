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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tasl/syntax.hpp"

namespace tasl {

/// Epsilon-free NFA without a distinguished initial state. A handle (nfa, q)
/// denotes the automaton started at q. Immutable after construction.
struct Nfa {
  int numStates = 0;
  std::vector<std::tuple<int, ActionId, int>> transitions;  // (q, symbol, q')
  std::vector<bool> finals;

  // adjacency: per state, indices into `transitions`
  std::vector<std::vector<int>> out;

  void buildIndex();
  bool isFinal(int q) const { return finals[q]; }
};

struct AutomatonHandle {
  std::shared_ptr<const Nfa> nfa;
  int start = 0;
};

/// Compiles a regular program into an epsilon-free NFA handle whose language
/// equals the program's word set. State count stays within 2*size(p)+2.
AutomatonHandle compile(const RegularProgram& p);

bool accepts(const AutomatonHandle& h, std::span<const ActionId> word);

/// All words of the handle's language up to maxLen (maxLen <= 12).
std::vector<std::vector<ActionId>> language_upto(const AutomatonHandle& h, int maxLen,
                                                 int numActions);

/// Handles for every state reachable from h.start (including h itself).
std::vector<AutomatonHandle> reachable_handles(const AutomatonHandle& h);

/// Debug dump using trans/final facts.
std::string dumpAutomaton(const Nfa& nfa, const std::string& name,
                          const DomainDescription& d);

}  // namespace tasl
