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

// Order-insensitive comparison of two ground-program listings, modulo
// automaton renaming. Exit 0 when the rule multisets match.

#include <fstream>
#include <iostream>
#include <sstream>

#include "tasl/rulediff.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: grounddiff FILE_A FILE_B\n";
    return 2;
  }
  auto slurp = [](const char* path) {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "cannot open '" << path << "'\n";
      exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  auto diff = tasl::structural_rule_diff(slurp(argv[1]), slurp(argv[2]));
  if (!diff) {
    std::cout << "rule multisets match\n";
    return 0;
  }
  std::cout << *diff;
  return 1;
}
