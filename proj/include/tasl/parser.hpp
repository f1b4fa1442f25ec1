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

#include <string_view>

#include "tasl/syntax.hpp"

namespace tasl {

/// Parses a full domain description. Statements end with '.', '%' starts a
/// line comment. Declarations may appear in any order relative to their uses.
/// Throws DomainError with position info on syntax errors, undeclared
/// symbols, and law-shape violations.
DomainDescription parse_domain(std::string_view text);

/// Parses a DLTL formula and resolves its symbols against `d`.
FormulaPtr parse_formula(std::string_view text, const DomainDescription& d);

/// Parses a regular program (exposed for tests and the CLI).
ProgPtr parse_program(std::string_view text, const DomainDescription& d);

}  // namespace tasl
