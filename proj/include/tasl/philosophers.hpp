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

#include <string>

namespace tasl {

struct PhilosophersBenchmark {
  std::string domain;    // domain description source
  std::string property;  // formula checked with `valid`
};

/// Dining philosophers with interleaved semantics, one action per step.
/// The deadlock watchdog raises `alarm` one step after every philosopher
/// holds exactly their left fork and `starving` one step later, so the
/// first counterexample to `G ~starving` appears at bound k = n + 2.
PhilosophersBenchmark gen_philosophers(int n);

}  // namespace tasl
