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

#include "tasl/rulediff.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace tasl {

namespace {

std::vector<std::string> ruleLines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string cleaned;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '%') break;
      cleaned += line[i];
    }
    // collapse whitespace
    std::string norm;
    for (char c : cleaned) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!norm.empty() && norm.back() != ' ') norm += ' ';
      } else {
        norm += c;
      }
    }
    while (!norm.empty() && norm.back() == ' ') norm.pop_back();
    if (!norm.empty()) out.push_back(norm);
  }
  return out;
}

// Renames aut<digits> tokens to canonical ids in first-occurrence order.
std::vector<std::string> canonAutNames(const std::vector<std::string>& lines) {
  std::map<std::string, std::string> names;
  std::vector<std::string> out;
  for (const std::string& line : lines) {
    std::string result;
    for (size_t i = 0; i < line.size();) {
      if (line.compare(i, 3, "aut") == 0 && (i == 0 || !std::isalnum(static_cast<unsigned char>(line[i - 1])))) {
        size_t j = i + 3;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        if (j < line.size() && std::isalpha(static_cast<unsigned char>(line[j]))) {
          result += line[i];
          ++i;
          continue;
        }
        std::string tok = line.substr(i, j - i);
        auto it = names.find(tok);
        if (it == names.end())
          it = names.emplace(tok, "autA" + std::to_string(names.size() + 1)).first;
        result += it->second;
        i = j;
      } else {
        result += line[i];
        ++i;
      }
    }
    out.push_back(result);
  }
  return out;
}

std::string diffReport(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<std::string> onlyA, onlyB;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(onlyA));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(onlyB));
  std::ostringstream os;
  for (const auto& l : onlyA) os << "- " << l << "\n";
  for (const auto& l : onlyB) os << "+ " << l << "\n";
  return os.str();
}

bool equalAsMultisets(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Collects the q<digits> tokens used together with a given automaton name.
std::vector<std::string> statesOf(const std::vector<std::string>& lines,
                                  const std::string& aut) {
  std::vector<std::string> states;
  for (const std::string& line : lines) {
    if (line.find(aut) == std::string::npos) continue;
    for (size_t i = 0; i < line.size();) {
      if (line[i] == 'q' && i + 1 < line.size() &&
          std::isdigit(static_cast<unsigned char>(line[i + 1])) &&
          (i == 0 || !std::isalnum(static_cast<unsigned char>(line[i - 1])))) {
        size_t j = i + 1;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        std::string tok = line.substr(i, j - i);
        if (std::find(states.begin(), states.end(), tok) == states.end())
          states.push_back(tok);
        i = j;
      } else {
        ++i;
      }
    }
  }
  std::sort(states.begin(), states.end());
  return states;
}

std::vector<std::string> renameStates(const std::vector<std::string>& lines,
                                      const std::map<std::string, std::string>& mapping) {
  std::vector<std::string> out;
  for (const std::string& line : lines) {
    std::string result;
    for (size_t i = 0; i < line.size();) {
      if (line[i] == 'q' && i + 1 < line.size() &&
          std::isdigit(static_cast<unsigned char>(line[i + 1])) &&
          (i == 0 || !std::isalnum(static_cast<unsigned char>(line[i - 1])))) {
        size_t j = i + 1;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        std::string tok = line.substr(i, j - i);
        auto it = mapping.find(tok);
        result += it == mapping.end() ? tok : it->second;
        i = j;
      } else {
        result += line[i];
        ++i;
      }
    }
    out.push_back(result);
  }
  return out;
}

}  // namespace

std::optional<std::string> structural_rule_diff(const std::string& a, const std::string& b) {
  std::vector<std::string> la = canonAutNames(ruleLines(a));
  std::vector<std::string> lb = canonAutNames(ruleLines(b));
  if (equalAsMultisets(la, lb)) return std::nullopt;

  // try state renamings of b onto a, automaton by automaton (small search)
  std::vector<std::string> statesA = statesOf(la, "autA");
  std::vector<std::string> statesB = statesOf(lb, "autA");
  if (!statesA.empty() && statesA.size() == statesB.size() && statesA.size() <= 8) {
    std::vector<std::string> perm = statesB;
    std::sort(perm.begin(), perm.end());
    do {
      std::map<std::string, std::string> mapping;
      bool ok = true;
      for (size_t i = 0; i < perm.size(); ++i) {
        // avoid clashes through transitional names
        mapping[perm[i]] = statesA[i];
      }
      (void)ok;
      std::vector<std::string> renamed = renameStates(lb, mapping);
      if (equalAsMultisets(la, renamed)) return std::nullopt;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return diffReport(la, lb);
}

}  // namespace tasl
