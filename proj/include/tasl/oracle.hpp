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

#include "tasl/syntax.hpp"

namespace tasl {

/// Tri-state valuation of one fluent in one state class.
enum class LitVal : int8_t { Absent = 0, Pos = 1, Neg = 2 };

/// A candidate temporal interpretation on a k-loop skeleton, quotiented by
/// the loop: classes 0..k, class k+1 identified with class j.
struct CandidateSet {
  int k = 0;
  int j = 0;
  std::vector<ActionId> actions;       // size k+1
  std::vector<std::vector<LitVal>> vals;  // [class][fluent]
};

/// Brute-force reference semantics: enumerates every action skeleton and
/// every loop-invariant candidate, keeps those equal to the least model of
/// their own prefix-indexed reduct. Guarded to |P| <= 4, |Sigma| <= 4, k <= 3.
std::vector<CandidateSet> enumerate_temporal_answer_sets(const DomainDescription& expanded,
                                                         int k);

struct CrosscheckReport {
  bool ok = true;
  long oracleCount = 0;
  long solverCount = 0;
  std::vector<std::string> mismatches;
};

/// Compares the oracle's temporal answer sets against the decoded answer
/// sets of the ASP translation at the same bound, as sets of temporal models
/// (canonical ultimately-periodic form) and as raw counts.
CrosscheckReport crosscheck_translation(const DomainDescription& d, int k);

}  // namespace tasl
