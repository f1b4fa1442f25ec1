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

#include "tasl/bmc.hpp"

#include <algorithm>
#include <set>

namespace tasl {

namespace {

FormulaPtr desugarGoal(const Query& q) {
  switch (q.task) {
    case Query::Task::Satisfy:
    case Query::Task::Validity:
      return q.formula;
    case Query::Task::Projection:
      return DltlFormula::diamond(q.program, DltlFormula::fluent(*q.literal));
    case Query::Task::Diagnosis: {
      FormulaPtr guard;
      for (const FluentLiteral& obs : q.observations) {
        FormulaPtr n = DltlFormula::neg(DltlFormula::fluent(obs));
        guard = guard ? DltlFormula::conj(guard, n) : n;
      }
      if (!guard) guard = DltlFormula::top();
      return DltlFormula::untilLtl(guard, DltlFormula::fluent(*q.faultObs));
    }
    case Query::Task::WellDefined:
      return nullptr;
  }
  return nullptr;
}

}  // namespace

Outcome run(const DomainDescription& d, const Query& q) {
  if (q.kMin > q.kMax) throw std::invalid_argument("bmc: kMin > kMax");
  DomainDescription dx = expand_macros(d, {.addDummy = q.addDummy});

  bool validity = q.task == Query::Task::Validity;
  bool wellDefined = q.task == Query::Task::WellDefined;
  FormulaPtr goal = desugarGoal(q);
  FormulaPtr attached =
      wellDefined ? nullptr : (validity ? DltlFormula::neg(goal) : goal);

  for (int k = q.kMin; k <= q.kMax; ++k) {
    GroundProgram g = translate(dx, k);
    for (const FormulaPtr& c : dx.constraints) g = attach_formula(g, c, AttachMode::Require);
    if (wellDefined)
      g = attach_welldefined_probe(g);
    else
      g = attach_formula(g, attached, AttachMode::Require);

    SolveConfig cfg = q.cfg;
    cfg.maxModels = 1;
    std::optional<Interpretation> model;
    SolveStatus status = solve(g, cfg, [&](const Interpretation& m) {
      model = m;
      return false;
    });
    if (model) {
      Outcome out;
      out.k = k;
      if (wellDefined) {
        out.status = Outcome::Status::IllDefined;
        out.trace = decode_partial(g, *model, &out.undefined);
        return out;
      }
      LassoTrace t = decode(g, *model);
      // independent re-check through the evaluator
      for (const FormulaPtr& c : dx.constraints)
        if (!eval(t, c).value)
          throw std::logic_error("bmc: witness fails a constraint under eval");
      if (!eval(t, attached).value)
        throw std::logic_error("bmc: witness fails the goal under eval");
      out.status = validity ? Outcome::Status::Counterexample : Outcome::Status::Witness;
      out.trace = std::move(t);
      return out;
    }
    if (status == SolveStatus::BudgetExhausted) {
      Outcome out;
      out.status = Outcome::Status::BudgetExhausted;
      out.k = k;
      return out;
    }
  }
  Outcome out;
  out.k = q.kMax;
  out.status = (validity || wellDefined) ? Outcome::Status::ValidUpTo
                                         : Outcome::Status::NoWitnessUpTo;
  return out;
}

std::vector<LassoTrace> all_extensions(const DomainDescription& d, int k,
                                       const SolveConfig& cfg, SolveStatus* status) {
  DomainDescription dx = d.expanded ? d : expand_macros(d);
  GroundProgram g = translate(dx, k);
  for (const FormulaPtr& c : dx.constraints) g = attach_formula(g, c, AttachMode::Require);
  std::vector<LassoTrace> traces;
  SolveStatus st = solve(g, cfg, [&](const Interpretation& m) {
    LassoTrace t = decode(g, m);
    for (const FormulaPtr& c : dx.constraints)
      if (!eval(t, c).value)
        throw std::logic_error("all_extensions: trace fails a constraint under eval");
    traces.push_back(std::move(t));
    return true;
  });
  if (status) *status = st;
  return traces;
}

std::vector<Transition> transitions(const DomainDescription& d, int k) {
  DomainDescription dx = d.expanded ? d : expand_macros(d);
  dx.constraints.clear();  // the transition system is defined from the laws alone
  GroundProgram g = translate(dx, k);
  std::set<Transition> set;
  SolveConfig cfg;
  solve(g, cfg, [&](const Interpretation& m) {
    LassoTrace t = decode(g, m);
    for (int s = 0; s <= k; ++s) {
      Transition tr;
      tr.from = std::vector<bool>(t.holdsVal[s].begin(), t.holdsVal[s].end());
      tr.action = t.actions[s];
      const auto& to = t.holdsVal[t.succ(s)];
      tr.to = std::vector<bool>(to.begin(), to.end());
      set.insert(std::move(tr));
    }
    return true;
  });
  return {set.begin(), set.end()};
}

}  // namespace tasl
