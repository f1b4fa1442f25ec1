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

#include "tasl/philosophers.hpp"

#include <sstream>
#include <stdexcept>

namespace tasl {

PhilosophersBenchmark gen_philosophers(int n) {
  if (n < 2) throw std::invalid_argument("gen_philosophers: need at least 2 philosophers");
  std::ostringstream d;
  auto p = [&](int i) { return "(" + std::to_string(i) + ")"; };
  auto leftFork = [&](int i) { return "(" + std::to_string(i) + ")"; };
  auto rightFork = [&](int i) { return "(" + std::to_string(i % n + 1) + ")"; };

  d << "% dining philosophers, n=" << n << ", interleaved semantics (one action per step)\n";
  d << "% cycle per philosopher: take_left, take_right, eat, release, think\n";
  d << "% fork(i) is the left fork of philosopher i; the right fork is fork(i mod n + 1)\n";
  d << "% watchdog: alarm holds one step after a total block (everyone holds\n";
  d << "% exactly the left fork), starving one step after alarm; idle is only\n";
  d << "% executable while the table is blocked, so the first counterexample\n";
  d << "% to 'G ~starving' is the deadlock run of length n+2\n";

  for (int i = 1; i <= n; ++i) {
    d << "action take_left" << p(i) << ". action take_right" << p(i) << ". action eat" << p(i)
      << ". action release" << p(i) << ". action think" << p(i) << ".\n";
  }
  d << "action idle.\n";
  for (int i = 1; i <= n; ++i) {
    d << "fluent thinking" << p(i) << ". fluent hasl" << p(i) << ". fluent hasr" << p(i)
      << ". fluent eating" << p(i) << ". fluent sated" << p(i) << ".\n";
  }
  for (int i = 1; i <= n; ++i) d << "fluent free" << p(i) << ".\n";
  d << "fluent blocked. fluent alarm. fluent starving.\n";

  for (int i = 1; i <= n; ++i) {
    d << "inertial thinking" << p(i) << ". inertial hasl" << p(i) << ". inertial hasr" << p(i)
      << ". inertial eating" << p(i) << ". inertial sated" << p(i) << ". inertial free" << p(i)
      << ".\n";
  }

  for (int i = 1; i <= n; ++i) {
    d << "% philosopher " << i << "\n";
    d << "law [take_left" << p(i) << "] hasl" << p(i) << ".\n";
    d << "law [take_left" << p(i) << "] -thinking" << p(i) << ".\n";
    d << "law [take_left" << p(i) << "] -free" << leftFork(i) << ".\n";
    d << "impossible [take_left" << p(i) << "] if -thinking" << p(i) << ".\n";
    d << "impossible [take_left" << p(i) << "] if -free" << leftFork(i) << ".\n";

    d << "law [take_right" << p(i) << "] hasr" << p(i) << ".\n";
    d << "law [take_right" << p(i) << "] -free" << rightFork(i) << ".\n";
    d << "impossible [take_right" << p(i) << "] if -hasl" << p(i) << ".\n";
    d << "impossible [take_right" << p(i) << "] if hasr" << p(i) << ".\n";
    d << "impossible [take_right" << p(i) << "] if -free" << rightFork(i) << ".\n";

    d << "law [eat" << p(i) << "] eating" << p(i) << ".\n";
    d << "impossible [eat" << p(i) << "] if -hasl" << p(i) << ".\n";
    d << "impossible [eat" << p(i) << "] if -hasr" << p(i) << ".\n";
    d << "impossible [eat" << p(i) << "] if eating" << p(i) << ".\n";

    d << "law [release" << p(i) << "] -eating" << p(i) << ".\n";
    d << "law [release" << p(i) << "] -hasl" << p(i) << ".\n";
    d << "law [release" << p(i) << "] -hasr" << p(i) << ".\n";
    d << "law [release" << p(i) << "] free" << leftFork(i) << ".\n";
    d << "law [release" << p(i) << "] free" << rightFork(i) << ".\n";
    d << "law [release" << p(i) << "] sated" << p(i) << ".\n";
    d << "impossible [release" << p(i) << "] if -eating" << p(i) << ".\n";

    d << "law [think" << p(i) << "] thinking" << p(i) << ".\n";
    d << "law [think" << p(i) << "] -sated" << p(i) << ".\n";
    d << "impossible [think" << p(i) << "] if -sated" << p(i) << ".\n";
  }

  d << "% idle is executable only while every philosopher waits on the right fork\n";
  for (int i = 1; i <= n; ++i) {
    d << "impossible [idle] if -hasl" << p(i) << ".\n";
    d << "impossible [idle] if hasr" << p(i) << ".\n";
  }

  d << "% deadlock watchdog\n";
  d << "caused blocked if ";
  for (int i = 1; i <= n; ++i) {
    if (i > 1) d << ", ";
    d << "hasl" << p(i) << ", -hasr" << p(i);
  }
  d << ".\n";
  for (int i = 1; i <= n; ++i) {
    d << "caused -blocked if -hasl" << p(i) << ".\n";
    d << "caused -blocked if hasr" << p(i) << ".\n";
  }
  d << "caused next alarm if blocked.\n";
  d << "caused next -alarm if -blocked.\n";
  d << "caused next starving if alarm.\n";
  d << "caused next -starving if -alarm.\n";

  d << "% initial state\n";
  for (int i = 1; i <= n; ++i) {
    d << "initially thinking" << p(i) << ". initially -hasl" << p(i) << ". initially -hasr"
      << p(i) << ". initially -eating" << p(i) << ". initially -sated" << p(i) << ".\n";
  }
  for (int i = 1; i <= n; ++i) d << "initially free" << p(i) << ".\n";
  d << "initially -blocked. initially -alarm. initially -starving.\n";

  return {d.str(), "G ~starving\n"};
}

}  // namespace tasl
