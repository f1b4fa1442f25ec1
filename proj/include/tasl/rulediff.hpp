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

#include <optional>
#include <string>

namespace tasl {

/// Compares two rule listings as multisets of rules, ignoring comments,
/// whitespace and rule order, modulo renaming of automaton names (autN) and,
/// when needed, of automaton state names (qN, searched per automaton up to 8
/// states). Returns std::nullopt when equal, otherwise a human-readable diff.
std::optional<std::string> structural_rule_diff(const std::string& a, const std::string& b);

}  // namespace tasl
