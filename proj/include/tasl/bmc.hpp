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

#include "tasl/trace.hpp"

namespace tasl {

/// Iterative-deepening query. Projection desugars to satisfy(<prog> lit);
/// diagnosis desugars to satisfy((~obs1 & ... & ~obsn) U faultObs).
struct Query {
  enum class Task { Satisfy, Validity, Projection, Diagnosis, WellDefined };
  Task task = Task::Satisfy;
  FormulaPtr formula;                       // Satisfy / Validity
  ProgPtr program;                          // Projection
  std::optional<FluentLiteral> literal;     // Projection
  std::vector<FluentLiteral> observations;  // Diagnosis
  std::optional<FluentLiteral> faultObs;    // Diagnosis
  int kMin = 0;
  int kMax = 5;
  SolveConfig cfg;
  bool addDummy = false;
};

struct Outcome {
  enum class Status {
    Witness,
    NoWitnessUpTo,
    ValidUpTo,
    Counterexample,
    IllDefined,
    BudgetExhausted
  };
  Status status = Status::NoWitnessUpTo;
  std::optional<LassoTrace> trace;
  int k = -1;  // first bound that produced the result, or the exhausted bound
  std::vector<std::pair<FluentId, int>> undefined;  // IllDefined detail
};

/// Runs the query for k = kMin..kMax. Every returned trace is re-checked
/// against the evaluator: the goal and all constraints for witnesses, the
/// negated goal for counterexamples.
Outcome run(const DomainDescription& d, const Query& q);

/// Decoded traces of all answer sets of the translation at bound k, with all
/// constraints required.
std::vector<LassoTrace> all_extensions(const DomainDescription& d, int k,
                                       const SolveConfig& cfg,
                                       SolveStatus* status = nullptr);

struct Transition {
  std::vector<bool> from;
  ActionId action = -1;
  std::vector<bool> to;
  auto operator<=>(const Transition&) const = default;
};

/// All (state, action, state) triples occurring in traces at bound k; the
/// constraint set C is dropped here, the transition system comes from the
/// laws alone.
std::vector<Transition> transitions(const DomainDescription& d, int k);

}  // namespace tasl
