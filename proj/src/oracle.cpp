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

#include "tasl/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "tasl/solver.hpp"

namespace tasl {

namespace {

// One instantiated rule on loop classes. Literal slots are (class, fluent,
// sign); negated conditions are evaluated against the candidate.
struct ClassLit {
  int cls;
  FluentId fluent;
  bool negatedSign;  // the classical sign of the literal
};

struct ClassRule {
  bool falsumHead = false;
  ClassLit head{};
  std::vector<ClassLit> pos;
  std::vector<ClassLit> negated;  // under default negation
};

// Rules are instantiated over slots 0..k+1 (slot k+1 is the forward image of
// slot k, exactly like state k+1 of the translation); initial-state laws live
// at slot 0 only. Negated conditions are evaluated against the candidate.
std::vector<ClassRule> instantiate(const DomainDescription& d, int k,
                                   const std::vector<ActionId>& actions) {
  std::vector<ClassRule> out;
  auto lit = [](int cls, FluentLiteral l) {
    return ClassLit{cls, l.fluent, l.negated};
  };
  for (const Law& law : d.laws) {
    auto bodyAt = [&](ClassRule& r, int c, int cNext) {
      for (const ExtendedLiteral& e : law.body) {
        int cls = e.lit.prefix == TemporalPrefix::None ? c : cNext;
        (e.defaultNegated ? r.negated : r.pos).push_back(lit(cls, e.lit.lit));
      }
    };
    switch (law.kind) {
      case LawKind::Action:
      case LawKind::Precondition:
        for (int c = 0; c <= k; ++c) {
          if (actions[c] != law.action) continue;  // head vacuously true
          ClassRule r;
          if (law.kind == LawKind::Precondition) {
            r.falsumHead = true;
          } else {
            r.head = lit(c + 1, *law.head);
          }
          bodyAt(r, c, c + 1);
          out.push_back(std::move(r));
        }
        break;
      case LawKind::DynamicCausal:
        for (int c = 0; c <= k; ++c) {
          ClassRule r;
          r.head = lit(c + 1, *law.head);
          bodyAt(r, c, c + 1);
          out.push_back(std::move(r));
        }
        break;
      case LawKind::StaticCausal:
        for (int c = 0; c <= k + 1; ++c) {
          ClassRule r;
          r.head = lit(c, *law.head);
          bodyAt(r, c, c);
          out.push_back(std::move(r));
        }
        break;
      case LawKind::InitialState: {
        ClassRule r;
        r.head = lit(0, *law.head);
        bodyAt(r, 0, 0);
        out.push_back(std::move(r));
        break;
      }
      case LawKind::StateConstraint: {
        int last = law.initialOnly ? 0 : k + 1;
        for (int c = 0; c <= last; ++c) {
          ClassRule r;
          r.falsumHead = true;
          bodyAt(r, c, c);
          out.push_back(std::move(r));
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<CandidateSet> enumerate_temporal_answer_sets(const DomainDescription& d, int k) {
  if (!d.expanded)
    throw std::invalid_argument("oracle: domain must be macro-expanded first");
  int numFluents = static_cast<int>(d.fluents.size());
  int numActions = static_cast<int>(d.actions.size());
  if (numFluents > 4 || numActions > 4 || k > 3)
    throw std::invalid_argument("oracle scale guard: need |P| <= 4, |Sigma| <= 4, k <= 3");

  int coreSlots = (k + 1) * numFluents;        // slots of classes 0..k
  int allSlots = (k + 2) * numFluents;         // plus the forward image k+1
  auto slot = [&](int cls, FluentId f) { return cls * numFluents + f; };

  std::vector<CandidateSet> result;
  std::vector<ActionId> actions(k + 1, 0);
  std::vector<int8_t> cand(allSlots, 0);
  std::vector<int8_t> derived(allSlots, 0);

  for (;;) {  // action tuples
    std::vector<ClassRule> rules = instantiate(d, k, actions);
    std::vector<const ClassRule*> coreRules, lastRules, coreFalsum, lastFalsum;
    for (const ClassRule& r : rules) {
      bool last = !r.falsumHead && r.head.cls == k + 1;
      for (const ClassLit& l : r.pos) last |= l.cls == k + 1;
      for (const ClassLit& l : r.negated) last |= l.cls == k + 1;
      if (r.falsumHead)
        (last ? lastFalsum : coreFalsum).push_back(&r);
      else
        (last ? lastRules : coreRules).push_back(&r);
    }

    auto holdsInCand = [&](const ClassLit& l) {
      return cand[slot(l.cls, l.fluent)] == (l.negatedSign ? 2 : 1);
    };
    auto fires = [&](const ClassRule& r) {
      for (const ClassLit& l : r.negated)
        if (holdsInCand(l)) return false;
      for (const ClassLit& l : r.pos)
        if (!holdsInCand(l)) return false;
      return true;
    };
    // least fixpoint of the given reduct slice; rejects as soon as it leaves
    // the candidate or derives both signs
    auto chase = [&](const std::vector<const ClassRule*>& slice) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (const ClassRule* r : slice) {
          int s = slot(r->head.cls, r->head.fluent);
          int8_t want = r->head.negatedSign ? 2 : 1;
          if (derived[s] == want) continue;
          bool fire = true;
          for (const ClassLit& l : r->negated)
            if (holdsInCand(l)) {
              fire = false;
              break;
            }
          if (fire)
            for (const ClassLit& l : r->pos)
              if (derived[slot(l.cls, l.fluent)] != (l.negatedSign ? 2 : 1)) {
                fire = false;
                break;
              }
          if (!fire) continue;
          if (derived[s] != 0 || cand[s] != want) return false;
          derived[s] = want;
          changed = true;
        }
      }
      return true;
    };

    std::fill(cand.begin(), cand.end(), 0);
    for (;;) {  // candidates over classes 0..k
      std::fill(derived.begin(), derived.begin() + coreSlots, 0);
      bool ok = chase(coreRules);
      if (ok)
        for (int s = 0; s < coreSlots && ok; ++s) ok = cand[s] == derived[s];
      if (ok)
        for (const ClassRule* r : coreFalsum)
          if (fires(*r)) {
            ok = false;
            break;
          }
      if (ok) {
        // extend by the forward image at slot k+1
        std::fill(cand.begin() + coreSlots, cand.end(), 0);
        for (;;) {  // candidates for slot k+1
          std::fill(derived.begin() + coreSlots, derived.end(), 0);
          bool okLast = chase(lastRules);
          if (okLast)
            for (int s = coreSlots; s < allSlots && okLast; ++s)
              okLast = cand[s] == derived[s];
          if (okLast)
            for (const ClassRule* r : lastFalsum)
              if (fires(*r)) {
                okLast = false;
                break;
              }
          if (okLast) {
            // back edges: slot k+1 must not contradict the loop target
            for (int j = 0; j <= k; ++j) {
              bool compatible = true;
              for (FluentId f = 0; f < numFluents && compatible; ++f) {
                int8_t a = cand[slot(k + 1, f)], b = cand[slot(j, f)];
                if (a != 0 && b != 0 && a != b) compatible = false;
              }
              if (!compatible) continue;
              CandidateSet cs;
              cs.k = k;
              cs.j = j;
              cs.actions = actions;
              cs.vals.assign(k + 1, std::vector<LitVal>(numFluents, LitVal::Absent));
              for (int c = 0; c <= k; ++c)
                for (FluentId f = 0; f < numFluents; ++f)
                  cs.vals[c][f] = static_cast<LitVal>(cand[slot(c, f)]);
              result.push_back(std::move(cs));
            }
          }
          int i = coreSlots;
          while (i < allSlots) {
            if (++cand[i] <= 2) break;
            cand[i] = 0;
            ++i;
          }
          if (i == allSlots) break;
        }
      }
      int i = 0;
      while (i < coreSlots) {
        if (++cand[i] <= 2) break;
        cand[i] = 0;
        ++i;
      }
      if (i == coreSlots) break;
    }
    int i = 0;
    while (i <= k) {
      if (++actions[i] < numActions) break;
      actions[i] = 0;
      ++i;
    }
    if (i == k + 1) break;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Crosscheck against the translation
// ---------------------------------------------------------------------------

namespace {

// Canonical form of the infinite (valuation, action) sequence: minimal stem
// plus minimal loop.
struct CanonicalModel {
  std::vector<std::string> stem, loop;
  auto operator<=>(const CanonicalModel&) const = default;

  std::string str() const {
    std::string s = "stem[";
    for (const auto& e : stem) s += e + " ";
    s += "] loop[";
    for (const auto& e : loop) s += e + " ";
    s += "]";
    return s;
  }
};

CanonicalModel canonicalize(int k, int j, const std::vector<std::string>& elems) {
  int loopLen = k + 1 - j;
  auto at = [&](int i) -> const std::string& {
    if (i <= k) return elems[i];
    return elems[j + (i - j) % loopLen];
  };
  int p = loopLen;
  for (int cand = 1; cand <= loopLen; ++cand) {
    if (loopLen % cand != 0) continue;
    bool periodic = true;
    for (int i = j; i + cand <= k && periodic; ++i)
      if (elems[i] != at(i + cand)) periodic = false;
    if (periodic) {
      p = cand;
      break;
    }
  }
  int stem = j;
  while (stem > 0 && at(stem - 1) == at(stem - 1 + p)) stem--;
  CanonicalModel cm;
  for (int i = 0; i < stem; ++i) cm.stem.push_back(at(i));
  for (int i = stem; i < stem + p; ++i) cm.loop.push_back(at(i));
  return cm;
}

std::string elemString(const DomainDescription& d, ActionId action,
                       const std::vector<LitVal>& vals) {
  std::string s = "{";
  for (FluentId f = 0; f < static_cast<FluentId>(vals.size()); ++f) {
    if (vals[f] == LitVal::Pos) s += d.fluentName(f) + " ";
    if (vals[f] == LitVal::Neg) s += "-" + d.fluentName(f) + " ";
  }
  s += "}" + d.actionName(action);
  return s;
}

}  // namespace

CrosscheckReport crosscheck_translation(const DomainDescription& d, int k) {
  CrosscheckReport rep;
  DomainDescription dx = d.expanded ? d : expand_macros(d);

  std::vector<CanonicalModel> oracleModels;
  for (const CandidateSet& cs : enumerate_temporal_answer_sets(dx, k)) {
    std::vector<std::string> elems;
    for (int c = 0; c <= k; ++c) elems.push_back(elemString(dx, cs.actions[c], cs.vals[c]));
    oracleModels.push_back(canonicalize(k, cs.j, elems));
    rep.oracleCount++;
  }

  GroundProgram g = translate(dx, k);
  std::vector<CanonicalModel> solverModels;
  SolveConfig cfg;
  solve(g, cfg, [&](const Interpretation& m) {
    rep.solverCount++;
    // extract the tri-state valuation directly (tolerates partial models)
    int j = -1;
    std::vector<ActionId> actions(k + 1, -1);
    std::vector<std::vector<LitVal>> vals(k + 1,
                                          std::vector<LitVal>(dx.fluents.size(), LitVal::Absent));
    for (int s = 0; s <= k; ++s) {
      for (ActionId a = 0; a < static_cast<ActionId>(dx.actions.size()); ++a) {
        int32_t atom = g.findAtom({GroundAtom::Kind::Occurs, a, s});
        if (atom >= 0 && m.contains(atom)) actions[s] = a;
      }
      for (FluentId f = 0; f < static_cast<FluentId>(dx.fluents.size()); ++f) {
        int32_t pa = g.findAtom({GroundAtom::Kind::Holds, f, s});
        int32_t na = g.findAtom({GroundAtom::Kind::NHolds, f, s});
        if (pa >= 0 && m.contains(pa)) vals[s][f] = LitVal::Pos;
        if (na >= 0 && m.contains(na)) vals[s][f] = LitVal::Neg;
      }
    }
    for (int jj = 0; jj <= k; ++jj) {
      int32_t atom = g.findAtom({GroundAtom::Kind::Next, k, jj});
      if (atom >= 0 && m.contains(atom)) j = jj;
    }
    std::vector<std::string> elems;
    for (int c = 0; c <= k; ++c) elems.push_back(elemString(dx, actions[c], vals[c]));
    solverModels.push_back(canonicalize(k, j, elems));
    return true;
  });

  std::sort(oracleModels.begin(), oracleModels.end());
  oracleModels.erase(std::unique(oracleModels.begin(), oracleModels.end()),
                     oracleModels.end());
  std::sort(solverModels.begin(), solverModels.end());
  solverModels.erase(std::unique(solverModels.begin(), solverModels.end()),
                     solverModels.end());

  for (const auto& om : oracleModels)
    if (!std::binary_search(solverModels.begin(), solverModels.end(), om))
      rep.mismatches.push_back("oracle only: " + om.str());
  for (const auto& sm : solverModels)
    if (!std::binary_search(oracleModels.begin(), oracleModels.end(), sm))
      rep.mismatches.push_back("solver only: " + sm.str());
  if (rep.oracleCount != rep.solverCount)
    rep.mismatches.push_back("count mismatch: oracle " + std::to_string(rep.oracleCount) +
                             " vs solver " + std::to_string(rep.solverCount));
  rep.ok = rep.mismatches.empty();
  return rep;
}

}  // namespace tasl
