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

#include "tasl/solver.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>

namespace tasl {

// ---------------------------------------------------------------------------
// Reduct-based kernel (independent of the search engine below; used both as
// the user-facing operations and as the per-model verification path)
// ---------------------------------------------------------------------------

GroundProgram reduct(const GroundProgram& p, const Interpretation& i) {
  GroundProgram out = p;
  out.rules.clear();
  std::vector<char> isTrue(p.atoms.size(), 0);
  for (int32_t a : i.trueAtoms)
    if (a >= 0 && a < static_cast<int32_t>(isTrue.size())) isTrue[a] = 1;
  for (const GroundRule& r : p.rules) {
    bool blocked = false;
    for (int32_t a : r.neg)
      if (isTrue[a]) {
        blocked = true;
        break;
      }
    if (blocked) continue;
    out.rules.push_back({r.head, r.pos, {}});
  }
  return out;
}

namespace {

// Least fixpoint of the definite rules of `p` whose negative body avoids
// `blockedBy` (pass nullptr for purely positive programs). Returns the closure.
std::vector<char> chase(const GroundProgram& p, const std::vector<char>* blockedBy) {
  size_t n = p.atoms.size();
  std::vector<char> derived(n, 0);
  std::vector<int> remaining(p.rules.size(), 0);
  std::vector<std::vector<int>> watchers(n);
  std::vector<int32_t> queue;
  for (int ri = 0; ri < static_cast<int>(p.rules.size()); ++ri) {
    const GroundRule& r = p.rules[ri];
    if (r.head < 0) continue;
    if (blockedBy) {
      bool blocked = false;
      for (int32_t a : r.neg)
        if ((*blockedBy)[a]) {
          blocked = true;
          break;
        }
      if (blocked) continue;
    }
    remaining[ri] = static_cast<int>(r.pos.size());
    for (int32_t a : r.pos) watchers[a].push_back(ri);
    if (r.pos.empty() && !derived[r.head]) {
      derived[r.head] = 1;
      queue.push_back(r.head);
    }
  }
  while (!queue.empty()) {
    int32_t a = queue.back();
    queue.pop_back();
    for (int ri : watchers[a]) {
      if (--remaining[ri] == 0) {
        int32_t h = p.rules[ri].head;
        if (!derived[h]) {
          derived[h] = 1;
          queue.push_back(h);
        }
      }
    }
  }
  return derived;
}

}  // namespace

std::optional<Interpretation> least_model(const GroundProgram& p) {
  for (const GroundRule& r : p.rules)
    if (!r.neg.empty())
      throw std::invalid_argument("least_model: program contains default negation");
  std::vector<char> derived = chase(p, nullptr);
  for (const GroundRule& r : p.rules) {
    if (r.head >= 0) continue;
    bool all = true;
    for (int32_t a : r.pos)
      if (!derived[a]) {
        all = false;
        break;
      }
    if (all) return std::nullopt;  // a constraint fires in the least model
  }
  Interpretation out;
  for (int32_t a = 0; a < static_cast<int32_t>(derived.size()); ++a)
    if (derived[a]) out.trueAtoms.push_back(a);
  return out;
}

bool is_answer_set(const GroundProgram& p, const Interpretation& i) {
  std::vector<char> isTrue(p.atoms.size(), 0);
  for (int32_t a : i.trueAtoms) {
    if (a < 0 || a >= static_cast<int32_t>(p.atoms.size())) return false;
    isTrue[a] = 1;
  }
  std::vector<char> lm = chase(p, &isTrue);
  for (int32_t a = 0; a < static_cast<int32_t>(lm.size()); ++a)
    if (lm[a] != isTrue[a]) return false;
  // integrity constraints of the reduct wrt i
  for (const GroundRule& r : p.rules) {
    if (r.head >= 0) continue;
    bool blocked = false;
    for (int32_t a : r.neg)
      if (isTrue[a]) {
        blocked = true;
        break;
      }
    if (blocked) continue;
    bool all = true;
    for (int32_t a : r.pos)
      if (!isTrue[a]) {
        all = false;
        break;
      }
    if (all) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// CDCL over the completion, with SCC loop clauses up front and lazy
// unfounded-set clauses on stable-check failures
// ---------------------------------------------------------------------------

namespace {

using Lit = int32_t;  // 2*var | sign; sign bit set = negated
inline Lit mkLit(int v, bool neg) { return 2 * v + (neg ? 1 : 0); }
inline int litVar(Lit l) { return l >> 1; }
inline bool litSign(Lit l) { return l & 1; }
inline Lit litNeg(Lit l) { return l ^ 1; }

enum : uint8_t { UNDEF = 0, TT = 1, FF = 2 };

class Cdcl {
 public:
  Cdcl(const GroundProgram& p, const SolveConfig& cfg) : p_(p), cfg_(cfg) { build(); }

  SolveStatus run(const std::function<bool(const Interpretation&)>& onModel,
                  int64_t* conflictsOut);

 private:
  void build();
  Lit bodyLiteral(const GroundRule& r);
  void newVar();
  // Adds a clause under the current assignment; maintains watches, enqueues a
  // unit consequence, and flags root-level unsatisfiability. Returns false if
  // the clause is conflicting right now (caller must resolve/restart).
  bool addClauseDynamic(std::vector<Lit> lits, bool keepOrder);
  void addLoopClausesFor(const std::vector<int32_t>& loop);

  uint8_t value(Lit l) const {
    uint8_t a = assign_[litVar(l)];
    if (a == UNDEF) return UNDEF;
    return (a == TT) != litSign(l) ? TT : FF;
  }

  bool enqueue(Lit l, int reason);
  int propagate();
  void analyze(int confl, std::vector<Lit>& learnt, int& backLevel);
  void cancelUntil(int level);
  Lit pickBranch();
  void bumpVar(int v);

  bool verifyAndHandleModel(const std::function<bool(const Interpretation&)>& onModel,
                            bool& stop, bool& emitted);

  const GroundProgram& p_;
  SolveConfig cfg_;

  int nAtoms_ = 0, nVars_ = 0;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<uint8_t> assign_;
  std::vector<int> level_, reason_;
  std::vector<Lit> trail_;
  std::vector<int> trailLim_;
  size_t qhead_ = 0;
  std::vector<double> activity_;
  double actInc_ = 1.0;
  std::vector<uint8_t> phase_;
  std::vector<int> hintIndex_;  // var -> position in branch hints (INT_MAX none)
  size_t hintPos_ = 0;
  std::vector<int> hints_;
  std::vector<uint8_t> seen_;
  std::vector<int> toClear_;
  int64_t conflicts_ = 0;
  bool unsatAtRoot_ = false;

  std::vector<Lit> ruleBody_;
  std::vector<uint8_t> mark_;
  static constexpr Lit kTrueLit = -2;
  std::map<std::pair<std::vector<int32_t>, std::vector<int32_t>>, int> bodyVar_;
};

void Cdcl::newVar() {
  nVars_++;
  assign_.push_back(UNDEF);
  level_.push_back(-1);
  reason_.push_back(-1);
  activity_.push_back(0.0);
  phase_.push_back(0);
  hintIndex_.push_back(INT32_MAX);
  seen_.push_back(0);
  watches_.emplace_back();
  watches_.emplace_back();
}

Lit Cdcl::bodyLiteral(const GroundRule& r) {
  size_t total = r.pos.size() + r.neg.size();
  if (total == 0) return kTrueLit;
  if (total == 1) {
    if (!r.pos.empty()) return mkLit(r.pos[0], false);
    return mkLit(r.neg[0], true);
  }
  auto key = std::make_pair(r.pos, r.neg);
  auto it = bodyVar_.find(key);
  if (it != bodyVar_.end()) return mkLit(it->second, false);
  int v = nVars_;
  newVar();
  bodyVar_.emplace(key, v);
  std::vector<Lit> big{mkLit(v, false)};
  for (int32_t a : r.pos) {
    addClauseDynamic({mkLit(v, true), mkLit(a, false)}, false);
    big.push_back(mkLit(a, true));
  }
  for (int32_t a : r.neg) {
    addClauseDynamic({mkLit(v, true), mkLit(a, true)}, false);
    big.push_back(mkLit(a, false));
  }
  addClauseDynamic(std::move(big), false);
  return mkLit(v, false);
}

bool Cdcl::addClauseDynamic(std::vector<Lit> lits, bool keepOrder) {
  // dedupe; detect tautologies
  {
    if (mark_.size() < 2 * static_cast<size_t>(nVars_)) mark_.resize(2 * nVars_, 0);
    std::vector<Lit> unique;
    unique.reserve(lits.size());
    bool taut = false;
    for (Lit l : lits) {
      if (mark_[l]) continue;
      if (mark_[litNeg(l)]) {
        taut = true;
        break;
      }
      mark_[l] = 1;
      unique.push_back(l);
    }
    for (Lit l : unique) mark_[l] = 0;
    if (taut) return true;  // trivially satisfied
    lits = std::move(unique);
  }
  // drop literals permanently false at the root
  std::vector<Lit> kept;
  kept.reserve(lits.size());
  for (Lit l : lits) {
    uint8_t v = value(l);
    if (v == FF && level_[litVar(l)] == 0) continue;
    if (v == TT && level_[litVar(l)] == 0) return true;  // permanently satisfied
    kept.push_back(l);
  }
  lits = std::move(kept);
  if (lits.empty()) {
    unsatAtRoot_ = true;
    return false;
  }
  if (lits.size() == 1) {
    uint8_t v = value(lits[0]);
    if (v == TT) return true;
    if (v == FF) {
      if (trailLim_.empty()) {
        unsatAtRoot_ = true;
        return false;
      }
      // conflicting unit: back out to the root and assert it there
      cancelUntil(0);
      if (value(lits[0]) == FF) {
        unsatAtRoot_ = true;
        return false;
      }
    }
    enqueue(lits[0], -1);  // root-level fact (reason irrelevant at level 0)
    return true;
  }
  if (!keepOrder) {
    // watch the two "best" literals: unassigned/true first, then by level
    auto rank = [&](Lit l) {
      uint8_t v = value(l);
      if (v != FF) return INT32_MAX;
      return level_[litVar(l)];
    };
    size_t b0 = 0;
    for (size_t i = 1; i < lits.size(); ++i)
      if (rank(lits[i]) > rank(lits[b0])) b0 = i;
    std::swap(lits[0], lits[b0]);
    size_t b1 = 1;
    for (size_t i = 2; i < lits.size(); ++i)
      if (rank(lits[i]) > rank(lits[b1])) b1 = i;
    std::swap(lits[1], lits[b1]);
  }
  clauses_.push_back(std::move(lits));
  int ci = static_cast<int>(clauses_.size()) - 1;
  auto& c = clauses_[ci];
  watches_[litNeg(c[0])].push_back(ci);
  watches_[litNeg(c[1])].push_back(ci);
  if (value(c[1]) == FF && value(c[0]) == UNDEF) enqueue(c[0], ci);
  if (value(c[1]) == FF && value(c[0]) == FF) return false;  // conflicting now
  return true;
}

void Cdcl::build() {
  nAtoms_ = static_cast<int>(p_.atoms.size());
  nVars_ = 0;
  for (int i = 0; i < nAtoms_; ++i) newVar();

  uint64_t s = cfg_.deterministicSeed * 6364136223846793005ULL + 1442695040888963407ULL;
  for (int v = 0; v < nAtoms_; ++v) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    activity_[v] = static_cast<double>(s >> 40) * 1e-12;
  }

  hints_.clear();
  for (int32_t a : p_.branchHints)
    if (a >= 0 && a < nAtoms_) {
      hintIndex_[a] = static_cast<int>(hints_.size());
      hints_.push_back(a);
      phase_[a] = 1;
    }

  ruleBody_.resize(p_.rules.size());
  std::vector<std::vector<int>> supports(nAtoms_);
  for (int ri = 0; ri < static_cast<int>(p_.rules.size()); ++ri) {
    const GroundRule& r = p_.rules[ri];
    Lit b = bodyLiteral(r);
    ruleBody_[ri] = b;
    if (r.head < 0) {
      if (b == kTrueLit)
        unsatAtRoot_ = true;
      else
        addClauseDynamic({litNeg(b)}, false);
    } else {
      supports[r.head].push_back(ri);
      if (b == kTrueLit)
        addClauseDynamic({mkLit(r.head, false)}, false);
      else
        addClauseDynamic({mkLit(r.head, false), litNeg(b)}, false);
    }
  }

  for (int a = 0; a < nAtoms_; ++a) {
    bool hasFact = false;
    std::vector<Lit> cl{mkLit(a, true)};
    for (int ri : supports[a]) {
      if (ruleBody_[ri] == kTrueLit) {
        hasFact = true;
        break;
      }
      cl.push_back(ruleBody_[ri]);
    }
    if (hasFact) continue;
    addClauseDynamic(std::move(cl), false);
  }

  // Positive-dependency SCCs (iterative Tarjan); loop clauses per component.
  std::vector<std::vector<int>> adj(nAtoms_);
  for (const GroundRule& r : p_.rules)
    if (r.head >= 0)
      for (int32_t a : r.pos) adj[r.head].push_back(a);
  std::vector<int> index(nAtoms_, -1), low(nAtoms_, 0), comp(nAtoms_, -1);
  std::vector<int> stack;
  std::vector<char> onStack(nAtoms_, 0);
  int idx = 0, comps = 0;
  std::vector<std::pair<int, size_t>> dfs;
  for (int root = 0; root < nAtoms_; ++root) {
    if (index[root] != -1) continue;
    dfs.emplace_back(root, 0);
    index[root] = low[root] = idx++;
    stack.push_back(root);
    onStack[root] = 1;
    while (!dfs.empty()) {
      auto& [v, ei] = dfs.back();
      if (ei < adj[v].size()) {
        int w = adj[v][ei++];
        if (index[w] == -1) {
          index[w] = low[w] = idx++;
          stack.push_back(w);
          onStack[w] = 1;
          dfs.emplace_back(w, 0);
        } else if (onStack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          comps++;
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            onStack[w] = 0;
            comp[w] = comps - 1;
            if (w == v) break;
          }
        }
        int finished = v;
        dfs.pop_back();
        if (!dfs.empty())
          low[dfs.back().first] = std::min(low[dfs.back().first], low[finished]);
      }
    }
  }
  std::vector<std::vector<int32_t>> members(comps);
  for (int a = 0; a < nAtoms_; ++a) members[comp[a]].push_back(a);
  for (const auto& m : members)
    if (m.size() >= 2) addLoopClausesFor(m);
}

void Cdcl::addLoopClausesFor(const std::vector<int32_t>& loop) {
  std::vector<char> inLoop(nAtoms_, 0);
  for (int32_t a : loop) inLoop[a] = 1;
  std::vector<Lit> ext;
  for (int ri = 0; ri < static_cast<int>(p_.rules.size()); ++ri) {
    const GroundRule& r = p_.rules[ri];
    if (r.head < 0 || !inLoop[r.head]) continue;
    bool external = true;
    for (int32_t a : r.pos)
      if (inLoop[a]) {
        external = false;
        break;
      }
    if (!external) continue;
    if (ruleBody_[ri] == kTrueLit) return;  // a fact supports the loop
    ext.push_back(ruleBody_[ri]);
  }
  std::sort(ext.begin(), ext.end());
  ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
  for (int32_t a : loop) {
    std::vector<Lit> cl{mkLit(a, true)};
    cl.insert(cl.end(), ext.begin(), ext.end());
    addClauseDynamic(std::move(cl), false);
  }
}

bool Cdcl::enqueue(Lit l, int reason) {
  int v = litVar(l);
  uint8_t want = litSign(l) ? FF : TT;
  if (assign_[v] != UNDEF) return assign_[v] == want;
  assign_[v] = want;
  level_[v] = static_cast<int>(trailLim_.size());
  reason_[v] = reason;
  trail_.push_back(l);
  return true;
}

int Cdcl::propagate() {
  while (qhead_ < trail_.size()) {
    Lit l = trail_[qhead_++];
    auto& ws = watches_[l];
    size_t keep = 0;
    size_t wi = 0;
    for (; wi < ws.size(); ++wi) {
      int ci = ws[wi];
      auto& c = clauses_[ci];
      Lit falsified = litNeg(l);
      if (c[0] == falsified) std::swap(c[0], c[1]);
      if (value(c[0]) == TT) {
        ws[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) != FF) {
          std::swap(c[1], c[k]);
          watches_[litNeg(c[1])].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      if (value(c[0]) == UNDEF) {
        ws[keep++] = ci;
        enqueue(c[0], ci);
      } else {
        for (size_t k = wi; k < ws.size(); ++k) ws[keep++] = ws[k];
        ws.resize(keep);
        return ci;
      }
    }
    ws.resize(keep);
  }
  return -1;
}

void Cdcl::analyze(int confl, std::vector<Lit>& learnt, int& backLevel) {
  learnt.clear();
  learnt.push_back(0);
  int counter = 0;
  Lit p = -1;
  int decisionLevel = static_cast<int>(trailLim_.size());
  size_t trailIdx = trail_.size();

  int ci = confl;
  for (;;) {
    assert(ci >= 0);
    const auto& c = clauses_[ci];
    for (Lit q : c) {
      if (q == p) continue;
      int v = litVar(q);
      if (!seen_[v] && level_[v] > 0) {
        seen_[v] = 1;
        toClear_.push_back(v);
        bumpVar(v);
        if (level_[v] >= decisionLevel)
          counter++;
        else
          learnt.push_back(q);
      }
    }
    do {
      p = trail_[--trailIdx];
    } while (!seen_[litVar(p)]);
    seen_[litVar(p)] = 0;
    counter--;
    if (counter <= 0) break;
    ci = reason_[litVar(p)];
  }
  learnt[0] = litNeg(p);
  for (int v : toClear_) seen_[v] = 0;
  toClear_.clear();

  backLevel = 0;
  for (size_t i = 1; i < learnt.size(); ++i)
    backLevel = std::max(backLevel, level_[litVar(learnt[i])]);
  if (learnt.size() > 1) {
    size_t best = 1;
    for (size_t i = 2; i < learnt.size(); ++i)
      if (level_[litVar(learnt[i])] > level_[litVar(learnt[best])]) best = i;
    std::swap(learnt[1], learnt[best]);
  }
}

void Cdcl::cancelUntil(int lvl) {
  if (static_cast<int>(trailLim_.size()) <= lvl) return;
  int bound = trailLim_[lvl];
  for (int i = static_cast<int>(trail_.size()) - 1; i >= bound; --i) {
    int v = litVar(trail_[i]);
    phase_[v] = (assign_[v] == TT) ? 1 : 0;
    assign_[v] = UNDEF;
    reason_[v] = -1;
    level_[v] = -1;
    if (hintIndex_[v] < static_cast<int>(hintPos_)) hintPos_ = hintIndex_[v];
  }
  trail_.resize(bound);
  trailLim_.resize(lvl);
  qhead_ = bound;
}

Lit Cdcl::pickBranch() {
  while (hintPos_ < hints_.size()) {
    int v = hints_[hintPos_];
    if (assign_[v] == UNDEF) return mkLit(v, phase_[v] == 0);
    hintPos_++;
  }
  int best = -1;
  double bestAct = -1.0;
  for (int v = 0; v < nVars_; ++v)
    if (assign_[v] == UNDEF && activity_[v] > bestAct) {
      bestAct = activity_[v];
      best = v;
    }
  if (best < 0) return -1;
  return mkLit(best, phase_[best] == 0);
}

void Cdcl::bumpVar(int v) {
  activity_[v] += actInc_;
  if (activity_[v] > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    actInc_ *= 1e-100;
  }
}

bool Cdcl::verifyAndHandleModel(const std::function<bool(const Interpretation&)>& onModel,
                                bool& stop, bool& emitted) {
  Interpretation m;
  for (int a = 0; a < nAtoms_; ++a)
    if (assign_[a] == TT) m.trueAtoms.push_back(a);

  std::vector<Lit> block;
  block.reserve(nAtoms_);
  for (int a = 0; a < nAtoms_; ++a) block.push_back(mkLit(a, assign_[a] == TT));

  if (is_answer_set(p_, m)) {
    stop = !onModel(m);
    emitted = true;
    cancelUntil(0);
    addClauseDynamic(std::move(block), false);
    return true;
  }
  emitted = false;
  std::vector<char> isTrue(nAtoms_, 0);
  for (int32_t a : m.trueAtoms) isTrue[a] = 1;
  std::vector<char> lm = chase(p_, &isTrue);
  std::vector<int32_t> unfounded;
  for (int32_t a : m.trueAtoms)
    if (!lm[a]) unfounded.push_back(a);
  cancelUntil(0);
  if (!unfounded.empty()) {
    std::vector<char> inU(nAtoms_, 0);
    for (int32_t a : unfounded) inU[a] = 1;
    std::vector<Lit> ext;
    bool supported = false;
    for (int ri = 0; ri < static_cast<int>(p_.rules.size()); ++ri) {
      const GroundRule& r = p_.rules[ri];
      if (r.head < 0 || !inU[r.head]) continue;
      bool external = true;
      for (int32_t a : r.pos)
        if (inU[a]) {
          external = false;
          break;
        }
      if (!external) continue;
      if (ruleBody_[ri] == kTrueLit) {
        supported = true;
        break;
      }
      ext.push_back(ruleBody_[ri]);
    }
    if (!supported) {
      std::sort(ext.begin(), ext.end());
      ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
      for (int32_t a : unfounded) {
        std::vector<Lit> cl{mkLit(a, true)};
        cl.insert(cl.end(), ext.begin(), ext.end());
        addClauseDynamic(std::move(cl), false);
      }
    }
  }
  // the blocking clause guarantees progress even if every loop clause above
  // got simplified away
  addClauseDynamic(std::move(block), false);
  return false;
}

SolveStatus Cdcl::run(const std::function<bool(const Interpretation&)>& onModel,
                      int64_t* conflictsOut) {
  auto finish = [&](SolveStatus st) {
    if (conflictsOut) *conflictsOut = conflicts_;
    return st;
  };
  if (unsatAtRoot_) return finish(SolveStatus::Complete);

  int64_t modelsFound = 0;
  int64_t conflictsAtRestart = 0;
  int64_t restartInterval = 512;

  for (;;) {
    if (unsatAtRoot_) return finish(SolveStatus::Complete);
    int confl = propagate();
    if (confl >= 0) {
      conflicts_++;
      if (cfg_.conflictBudget >= 0 && conflicts_ > cfg_.conflictBudget)
        return finish(SolveStatus::BudgetExhausted);
      if (trailLim_.empty()) return finish(SolveStatus::Complete);
      std::vector<Lit> learnt;
      int backLevel = 0;
      analyze(confl, learnt, backLevel);
      cancelUntil(backLevel);
      addClauseDynamic(std::move(learnt), true);
      actInc_ /= 0.95;
      if (conflicts_ - conflictsAtRestart >= restartInterval) {
        conflictsAtRestart = conflicts_;
        restartInterval = restartInterval * 3 / 2;
        cancelUntil(0);
      }
      continue;
    }
    Lit next = pickBranch();
    if (next < 0) {
      bool stop = false, emitted = false;
      verifyAndHandleModel(onModel, stop, emitted);
      if (emitted) {
        modelsFound++;
        if (stop) return finish(SolveStatus::Stopped);
        if (cfg_.maxModels >= 0 && modelsFound >= cfg_.maxModels)
          return finish(SolveStatus::Stopped);
      }
      continue;
    }
    trailLim_.push_back(static_cast<int>(trail_.size()));
    enqueue(next, -1);
  }
}

}  // namespace

SolveStatus solve(const GroundProgram& p, const SolveConfig& cfg,
                  const std::function<bool(const Interpretation&)>& onModel,
                  int64_t* conflictsOut) {
  if (static_cast<int64_t>(p.atoms.size()) > cfg.atomBudget) {
    if (conflictsOut) *conflictsOut = 0;
    return SolveStatus::BudgetExhausted;
  }
  Cdcl solver(p, cfg);
  return solver.run(onModel, conflictsOut);
}

SolveResult solve(const GroundProgram& p, const SolveConfig& cfg) {
  SolveResult res;
  res.status = solve(
      p, cfg,
      [&](const Interpretation& m) {
        res.models.push_back(m);
        return true;
      },
      &res.conflicts);
  return res;
}

}  // namespace tasl
