#include <doctest.h>

#include <random>
#include <sstream>

#include "tasl/solver.hpp"

using namespace tasl;

namespace {

// tiny program builder over opaque aux atoms
struct Prog {
  GroundProgram g;
  explicit Prog(int atoms) {
    g.domain = std::make_shared<DomainDescription>();
    for (int i = 0; i < atoms; ++i) g.atom({GroundAtom::Kind::Aux, i, -1});
  }
  void rule(int head, std::vector<int32_t> pos, std::vector<int32_t> neg) {
    g.rules.push_back({head, std::move(pos), std::move(neg)});
  }
};

Interpretation interp(std::vector<int32_t> atoms) {
  std::sort(atoms.begin(), atoms.end());
  return {atoms};
}

// exhaustive answer-set enumeration via is_answer_set over all subsets
std::vector<Interpretation> enumerateAnswerSets(const GroundProgram& g) {
  int n = static_cast<int>(g.atoms.size());
  std::vector<Interpretation> out;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    Interpretation i;
    for (int a = 0; a < n; ++a)
      if (mask & (1u << a)) i.trueAtoms.push_back(a);
    if (is_answer_set(g, i)) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("reduct follows the transform") {
  Prog p(2);
  p.rule(0, {}, {1});  // a <- not b
  SUBCASE("empty interpretation keeps the rule, stripped") {
    GroundProgram r = reduct(p.g, interp({}));
    REQUIRE(r.rules.size() == 1);
    CHECK(r.rules[0].head == 0);
    CHECK(r.rules[0].pos.empty());
    CHECK(r.rules[0].neg.empty());
  }
  SUBCASE("b true deletes the rule") {
    GroundProgram r = reduct(p.g, interp({1}));
    CHECK(r.rules.empty());
  }
}

TEST_CASE("least model by forward chaining") {
  Prog p(3);
  p.rule(0, {}, {});   // a.
  p.rule(1, {0}, {});  // b <- a
  auto lm = least_model(p.g);
  REQUIRE(lm.has_value());
  CHECK(lm->trueAtoms == std::vector<int32_t>{0, 1});

  Prog q(1);
  q.rule(-1, {0}, {});  // :- a
  q.rule(0, {}, {});    // a.
  CHECK_FALSE(least_model(q.g).has_value());

  Prog empty(0);
  auto lmEmpty = least_model(empty.g);
  REQUIRE(lmEmpty.has_value());
  CHECK(lmEmpty->trueAtoms.empty());
}

TEST_CASE("is_answer_set on the even loop") {
  Prog p(2);
  p.rule(0, {}, {1});  // a <- not b
  p.rule(1, {}, {0});  // b <- not a
  CHECK(is_answer_set(p.g, interp({0})));
  CHECK(is_answer_set(p.g, interp({1})));
  CHECK_FALSE(is_answer_set(p.g, interp({0, 1})));
  CHECK_FALSE(is_answer_set(p.g, interp({})));
}

TEST_CASE("solve enumerates the even-loop answer sets") {
  Prog p(2);
  p.rule(0, {}, {1});
  p.rule(1, {}, {0});
  SolveResult r = solve(p.g, SolveConfig{});
  CHECK(r.status == SolveStatus::Complete);
  REQUIRE(r.models.size() == 2);
  std::set<std::vector<int32_t>> models;
  for (const auto& m : r.models) models.insert(m.trueAtoms);
  CHECK(models == std::set<std::vector<int32_t>>{{0}, {1}});
}

TEST_CASE("positive loops are not self-supporting") {
  Prog p(2);
  p.rule(0, {1}, {});  // a <- b
  p.rule(1, {0}, {});  // b <- a
  SolveResult r = solve(p.g, SolveConfig{});
  REQUIRE(r.models.size() == 1);
  CHECK(r.models[0].trueAtoms.empty());
}

TEST_CASE("constraints filter models") {
  Prog p(2);
  p.rule(0, {}, {1});
  p.rule(1, {}, {0});
  p.rule(-1, {0}, {});  // :- a
  SolveResult r = solve(p.g, SolveConfig{});
  REQUIRE(r.models.size() == 1);
  CHECK(r.models[0].trueAtoms == std::vector<int32_t>{1});
}

TEST_CASE("budget exhaustion is distinguishable from unsatisfiability") {
  Prog p(3);
  p.rule(0, {}, {1});
  p.rule(1, {}, {0});
  p.rule(2, {}, {});
  SolveConfig cfg;
  cfg.conflictBudget = 0;
  cfg.maxModels = 100;
  // an unsatisfiable program reports Complete with zero models
  Prog unsat(1);
  unsat.rule(0, {}, {});
  unsat.rule(-1, {0}, {});
  SolveResult r1 = solve(unsat.g, SolveConfig{});
  CHECK(r1.status == SolveStatus::Complete);
  CHECK(r1.models.empty());

  SolveConfig tiny;
  tiny.atomBudget = 1;
  SolveResult r2 = solve(p.g, tiny);
  CHECK(r2.status == SolveStatus::BudgetExhausted);
}

TEST_CASE("solver output is deterministic for a fixed seed") {
  Prog p(3);
  p.rule(0, {}, {1});
  p.rule(1, {}, {0});
  p.rule(2, {0}, {});
  SolveConfig cfg;
  cfg.deterministicSeed = 99;
  SolveResult a = solve(p.g, cfg);
  SolveResult b = solve(p.g, cfg);
  REQUIRE(a.models.size() == b.models.size());
  for (size_t i = 0; i < a.models.size(); ++i) CHECK(a.models[i] == b.models[i]);
}

#include <fstream>
#include "tasl/parser.hpp"

TEST_CASE("the reduct of a found model reproduces it as its least model") {
  std::ifstream in(std::string(TASL_SOURCE_DIR) + "/domains/mail.dom");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  DomainDescription d = expand_macros(parse_domain(ss.str()));
  GroundProgram g = translate(d, 3);
  for (const FormulaPtr& c : d.constraints) g = attach_formula(g, c, AttachMode::Require);
  SolveConfig cfg;
  cfg.maxModels = 3;
  SolveResult r = solve(g, cfg);
  REQUIRE(!r.models.empty());
  for (const Interpretation& m : r.models) {
    GroundProgram red = reduct(g, m);
    for (const GroundRule& rule : red.rules) CHECK(rule.neg.empty());
    auto lm = least_model(red);
    REQUIRE(lm.has_value());
    CHECK(*lm == m);
  }
}

namespace {

GroundProgram randomProgram(std::mt19937_64& rng, int maxAtoms) {
  std::uniform_int_distribution<int> dn(2, maxAtoms);
  int n = dn(rng);
  Prog p(n);
  std::uniform_int_distribution<int> dr(1, 2 * n);
  std::uniform_int_distribution<int> da(0, n - 1);
  std::uniform_int_distribution<int> dlen(0, 2);
  std::uniform_int_distribution<int> dhead(0, 9);
  int rules = dr(rng);
  for (int i = 0; i < rules; ++i) {
    int head = dhead(rng) == 0 ? -1 : da(rng);
    std::vector<int32_t> pos, neg;
    for (int j = dlen(rng); j > 0; --j) pos.push_back(da(rng));
    for (int j = dlen(rng); j > 0; --j) neg.push_back(da(rng));
    p.rule(head, pos, neg);
  }
  return p.g;
}

}  // namespace

TEST_CASE("solve matches exhaustive enumeration on random programs") {
  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 60; ++trial) {
    GroundProgram g = randomProgram(rng, 10);
    std::vector<Interpretation> expected = enumerateAnswerSets(g);
    SolveResult got = solve(g, SolveConfig{});
    REQUIRE(got.status == SolveStatus::Complete);
    std::set<std::vector<int32_t>> a, b;
    for (const auto& m : expected) a.insert(m.trueAtoms);
    for (const auto& m : got.models) b.insert(m.trueAtoms);
    REQUIRE(a == b);
    // every emitted model satisfies every constraint and is minimal wrt its reduct
    for (const auto& m : got.models) CHECK(is_answer_set(g, m));
  }
}
