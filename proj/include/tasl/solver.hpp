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

#include <functional>
#include <optional>

#include "tasl/ground.hpp"

namespace tasl {

struct Interpretation {
  std::vector<int32_t> trueAtoms;  // sorted, unique

  bool contains(int32_t a) const {
    return std::binary_search(trueAtoms.begin(), trueAtoms.end(), a);
  }
  bool operator==(const Interpretation&) const = default;
};

struct SolveConfig {
  int64_t maxModels = -1;       // < 0: unlimited
  int64_t atomBudget = 50'000'000;
  int64_t conflictBudget = -1;  // < 0: unlimited
  uint64_t deterministicSeed = 0;
};

enum class SolveStatus {
  Complete,         // the emitted models are all answer sets
  Stopped,          // consumer stopped early or maxModels reached
  BudgetExhausted,  // conflict or atom budget hit; enumeration incomplete
};

struct SolveResult {
  std::vector<Interpretation> models;
  SolveStatus status = SolveStatus::Complete;
  int64_t conflicts = 0;
};

/// Gelfond-Lifschitz transform: keeps rules whose negative body avoids i,
/// drops the negative bodies. Constraints are kept.
GroundProgram reduct(const GroundProgram& p, const Interpretation& i);

/// Least model of a negation-free program; nullopt when a constraint fires
/// inside it.
std::optional<Interpretation> least_model(const GroundProgram& p);

bool is_answer_set(const GroundProgram& p, const Interpretation& i);

/// Enumerates answer sets. Every emitted interpretation passes is_answer_set.
/// Returning false from onModel stops the enumeration. Deterministic for a
/// fixed seed.
SolveStatus solve(const GroundProgram& p, const SolveConfig& cfg,
                  const std::function<bool(const Interpretation&)>& onModel,
                  int64_t* conflictsOut = nullptr);

SolveResult solve(const GroundProgram& p, const SolveConfig& cfg);

}  // namespace tasl
