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

#include "tasl/solver.hpp"

namespace tasl {

/// Finite representation of an infinite run: states 0..k with a back edge
/// from k to loopTarget. actions[s] is the action occurring in state s (so
/// the infinite word is actions[0..k] followed by actions[loopTarget..k]
/// repeated forever). Valuations are total.
struct LassoTrace {
  int k = 0;
  int loopTarget = 0;
  std::vector<ActionId> actions;            // size k+1
  std::vector<std::vector<bool>> holdsVal;  // [state 0..k][fluent]
  std::shared_ptr<const DomainDescription> domain;

  int succ(int s) const { return s < k ? s + 1 : loopTarget; }
  /// state index reached after `pos` steps of the infinite unfolding
  int stateAt(long pos) const {
    if (pos <= k) return static_cast<int>(pos);
    long len = k + 1 - loopTarget;
    return static_cast<int>(loopTarget + (pos - loopTarget) % len);
  }
};

struct Verdict {
  bool value = false;
  std::optional<int> witness;  // state annotation when cheap to produce
};

enum class Verdict3 { False, True, Unknown };

/// Reads a trace out of an answer set: actions from occurs, the loop from
/// next(k,j), valuations from holds/-holds. Throws on partial valuations and
/// malformed models.
LassoTrace decode(const GroundProgram& p, const Interpretation& i);

/// Lenient variant: undefined fluents default to false and are reported in
/// `undefined` as (fluent, state) pairs.
LassoTrace decode_partial(const GroundProgram& p, const Interpretation& i,
                          std::vector<std::pair<FluentId, int>>* undefined);

/// Satisfaction of a DLTL formula at the start of the infinite unfolding.
/// Computed as the least fixpoint of the until axioms over closure x state,
/// with the back edge as successor of k; two-valued.
Verdict eval(const LassoTrace& t, const FormulaPtr& f);

/// Semi-decision oracle: evaluates the defining semantics on the explicit
/// unfolding of length `depth`; Unknown when the horizon cannot settle it.
Verdict3 eval_unfolded(const LassoTrace& t, const FormulaPtr& f, int depth);

/// Text rendering: per-state incoming action + changed fluents + loop marker.
std::string render_text(const LassoTrace& t);

/// Structured rendering (JSON): {"k":..,"loop":..,"states":[{"action":..,
/// "holds":{fluent:bool,..}},..]} where states[s].action occurs in state s.
std::string render_structured(const LassoTrace& t);

/// Parses render_structured output; reconstructs a minimal domain (fluents,
/// actions, tests) from the trace itself.
LassoTrace parse_structured_trace(const std::string& text);

}  // namespace tasl
