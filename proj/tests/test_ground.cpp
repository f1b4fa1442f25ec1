#include <doctest.h>

#include <fstream>
#include <sstream>

#include "tasl/parser.hpp"
#include "tasl/rulediff.hpp"
#include "tasl/solver.hpp"

using namespace tasl;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
const std::string kRoot = std::string(TASL_SOURCE_DIR) + "/";

DomainDescription loadExpanded(const std::string& name, ExpandOptions opts = {}) {
  return expand_macros(parse_domain(slurp(kRoot + "domains/" + name)), opts);
}

bool hasRule(const GroundProgram& g, const std::string& printed) {
  std::istringstream in(dump_rules(g));
  std::string line;
  while (std::getline(in, line))
    if (line == printed) return true;
  return false;
}
}  // namespace

TEST_CASE("action law grounds to head-at-next rules guarded by occurs") {
  DomainDescription d =
      expand_macros(parse_domain("fluent loaded. action load. law [load] loaded."),
                    {.addCompletion = false});
  GroundProgram g = translate(d, 1);
  CHECK(hasRule(g, "holds(loaded,1) :- occurs(load,0)."));
  CHECK(hasRule(g, "holds(loaded,2) :- occurs(load,1)."));
  int lawRules = 0;
  for (const GroundRule& r : g.rules) {
    if (r.head < 0) continue;
    if (g.atomAt(r.head).kind == GroundAtom::Kind::Holds) lawRules++;
  }
  CHECK(lawRules == 2);
}

TEST_CASE("k=0 forces the self-loop on the initial state") {
  DomainDescription d = expand_macros(parse_domain("fluent f. action a. inertial f."));
  GroundProgram g = translate(d, 0);
  SolveResult r = solve(g, SolveConfig{});
  REQUIRE(r.status == SolveStatus::Complete);
  REQUIRE(!r.models.empty());
  int32_t nextAtom = g.findAtom({GroundAtom::Kind::Next, 0, 0});
  int32_t eqAtom = g.findAtom({GroundAtom::Kind::EqLast, 0, -1});
  REQUIRE(nextAtom >= 0);
  for (const Interpretation& m : r.models) {
    CHECK(m.contains(nextAtom));
    CHECK(m.contains(eqAtom));
  }
}

TEST_CASE("precondition laws become constraints per state") {
  DomainDescription d = expand_macros(
      parse_domain("fluent loaded. action load. impossible [load] if loaded."),
      {.addCompletion = false});
  GroundProgram g = translate(d, 1);
  CHECK(hasRule(g, ":- occurs(load,0), holds(loaded,0)."));
  CHECK(hasRule(g, ":- occurs(load,1), holds(loaded,1)."));
}

TEST_CASE("attach fluent formula at k=0 emits the base clause and constraint") {
  DomainDescription d = expand_macros(parse_domain("fluent f. action a."));
  GroundProgram g0 = translate(d, 0);
  GroundProgram g = attach_formula(g0, parse_formula("f", d), AttachMode::Require);
  CHECK(hasRule(g, "sat(f,0) :- holds(f,0)."));
  CHECK(hasRule(g, ":- not sat(f,0)."));
  CHECK(g.rules.size() == g0.rules.size() + 2);

  GroundProgram gf = attach_formula(g0, parse_formula("f", d), AttachMode::Forbid);
  CHECK(hasRule(gf, ":- sat(f,0)."));
}

TEST_CASE("<begin>true is satisfiable only with occurs(begin,0)") {
  DomainDescription d = loadExpanded("mail.dom");
  for (int k = 0; k <= 2; ++k) {
    GroundProgram g = translate(d, k);
    g = attach_formula(g, parse_formula("<begin> true", d), AttachMode::Require);
    int32_t begin0 = g.findAtom({GroundAtom::Kind::Occurs, d.actionId("begin"), 0});
    SolveConfig cfg;
    cfg.maxModels = 50;
    SolveResult r = solve(g, cfg);
    REQUIRE(!r.models.empty());
    for (const Interpretation& m : r.models) CHECK(m.contains(begin0));
  }
}

TEST_CASE("the protocol constraint reproduces the reference rule set") {
  DomainDescription d = loadExpanded("mail.dom");
  GroundProgram g = translate(d, 1);
  g = attach_formula(
      g,
      parse_formula(
          "G [begin] <sense_mail(a); sense_mail(b); (deliver(a)+deliver(b)+wait); begin> true",
          d),
      AttachMode::Require);
  // the goal uses the reference term spelling
  REQUIRE(g.goals.size() == 1);
  CHECK(g.closure.entryTerm(g.goals[0].first, d) ==
        "neg(ev(neg(box(begin,until(aut1,q1,true,true)))))");
  // the indexing automaton has the five protocol states and six transitions
  REQUIRE(g.closure.automata.size() == 1);
  CHECK(g.closure.automata[0].nfa->numStates == 5);
  CHECK(g.closure.automata[0].nfa->transitions.size() == 6);
  // until entries exist for every reachable state (derived formulas)
  int untils = 0;
  for (const auto& e : g.closure.entries)
    if (e.kind == FormulaClosure::Entry::Kind::Until) untils++;
  CHECK(untils == 5);
}

TEST_CASE("structurally equal subformulas share one sat atom family") {
  DomainDescription d = loadExpanded("mail.dom");
  GroundProgram g = translate(d, 1);
  size_t before = g.closure.entries.size();
  g = attach_formula(g, parse_formula("F mail(a)", d), AttachMode::Require);
  size_t after1 = g.closure.entries.size();
  g = attach_formula(g, parse_formula("F mail(a)", d), AttachMode::Require);
  CHECK(g.closure.entries.size() == after1);  // no new entries
  CHECK(after1 > before);
}

TEST_CASE("well-defined probe on an all-inertial domain is unsatisfiable") {
  DomainDescription d = loadExpanded("turkey.dom");
  for (int k = 0; k <= 2; ++k) {
    GroundProgram g = attach_welldefined_probe(translate(d, k));
    SolveResult r = solve(g, SolveConfig{});
    CHECK(r.status == SolveStatus::Complete);
    CHECK(r.models.empty());
  }
}

TEST_CASE("well-defined probe finds a lawless fluent when completion is off") {
  DomainDescription d = expand_macros(parse_domain("fluent g. action a."),
                                      {.addCompletion = false});
  GroundProgram g = attach_welldefined_probe(translate(d, 0));
  SolveConfig cfg;
  cfg.maxModels = 1;
  SolveResult r = solve(g, cfg);
  REQUIRE(!r.models.empty());
  int32_t undef0 = g.findAtom({GroundAtom::Kind::UndefinedFluent, 0, -1});
  REQUIRE(undef0 >= 0);
  CHECK(r.models[0].contains(undef0));
}

TEST_CASE("export with no constraints has no sat rules") {
  DomainDescription d = expand_macros(parse_domain("fluent f. action a."));
  std::string text = export_text(translate(d, 1));
  CHECK(text.find("sat(") == std::string::npos);
}

TEST_CASE("golden export: yale fragment at k=1") {
  DomainDescription d = loadExpanded("yale_fragment.dom");
  std::string got = export_text(translate(d, 1));
  std::string want = slurp(kRoot + "tests/golden/yale_fragment_k1.lp");
  auto diff = structural_rule_diff(want, got);
  if (diff) FAIL_CHECK(*diff);
}

TEST_CASE("golden export: mail delivery at k=3 (reference dialect)") {
  DomainDescription d = loadExpanded("mail.dom");
  GroundProgram g = translate(d, 3);
  for (const FormulaPtr& c : d.constraints) g = attach_formula(g, c, AttachMode::Require);
  std::string got = export_text(g);
  std::string want = slurp(kRoot + "tests/golden/mail_k3.lp");
  auto diff = structural_rule_diff(want, got);
  if (diff) FAIL_CHECK(*diff);
}

TEST_CASE("the structural differ tolerates renamed automata and rule order") {
  std::string a = "sat(until(aut1,q1,true,f),0) :- holds(f,0).\nfoo :- bar.\n";
  std::string b = "% comment\nfoo :- bar.\nsat(until(aut7,q1,true,f),0) :- holds(f,0).\n";
  CHECK_FALSE(structural_rule_diff(a, b).has_value());
  std::string c = "sat(until(aut1,q2,true,f),0) :- holds(f,0).\nfoo :- bar.\nbaz :- foo.\n";
  CHECK(structural_rule_diff(a, c).has_value());
}

TEST_CASE("ground invariants hold over solver outputs") {
  DomainDescription d = loadExpanded("turkey.dom");
  int k = 2;
  GroundProgram g = translate(d, k);
  for (const FormulaPtr& c : d.constraints) g = attach_formula(g, c, AttachMode::Require);
  SolveConfig cfg;
  cfg.maxModels = 200;
  SolveResult r = solve(g, cfg);
  REQUIRE(!r.models.empty());
  int numActions = static_cast<int>(d.actions.size());
  int numFluents = static_cast<int>(d.fluents.size());
  for (const Interpretation& m : r.models) {
    // exactly one occurs per state
    for (int s = 0; s <= k; ++s) {
      int occ = 0;
      for (ActionId a = 0; a < numActions; ++a)
        if (m.contains(g.findAtom({GroundAtom::Kind::Occurs, a, s}))) occ++;
      CHECK(occ == 1);
    }
    // exactly one back edge, and its target is eq_last
    int backs = 0, j = -1;
    for (int jj = 0; jj <= k; ++jj)
      if (m.contains(g.findAtom({GroundAtom::Kind::Next, k, jj}))) {
        backs++;
        j = jj;
      }
    CHECK(backs == 1);
    CHECK(m.contains(g.findAtom({GroundAtom::Kind::EqLast, j, -1})));
    // state k+1 duplicates state j; no holds/-holds pair is violated
    for (FluentId f = 0; f < numFluents; ++f) {
      bool pkj = m.contains(g.findAtom({GroundAtom::Kind::Holds, f, j}));
      bool pk1 = m.contains(g.findAtom({GroundAtom::Kind::Holds, f, k + 1}));
      CHECK(pkj == pk1);
      for (int s = 0; s <= k + 1; ++s) {
        bool pos = m.contains(g.findAtom({GroundAtom::Kind::Holds, f, s}));
        bool neg = m.contains(g.findAtom({GroundAtom::Kind::NHolds, f, s}));
        CHECK_FALSE((pos && neg));
      }
    }
  }
}

TEST_CASE("closure soundness: sat rules reference closure entries only") {
  DomainDescription d = loadExpanded("mail.dom");
  GroundProgram g = translate(d, 2);
  for (const FormulaPtr& c : d.constraints) g = attach_formula(g, c, AttachMode::Require);
  for (const GroundRule& r : g.rules) {
    auto checkAtom = [&](int32_t a) {
      if (a < 0) return;
      const GroundAtom& atom = g.atomAt(a);
      if (atom.kind == GroundAtom::Kind::Sat) {
        CHECK(atom.x >= 0);
        CHECK(atom.x < static_cast<int32_t>(g.closure.entries.size()));
      }
    };
    checkAtom(r.head);
    for (int32_t a : r.pos) checkAtom(a);
    for (int32_t a : r.neg) checkAtom(a);
  }
  // until entries stay within their automata
  for (const auto& e : g.closure.entries) {
    if (e.kind != FormulaClosure::Entry::Kind::Until) continue;
    CHECK(e.autState >= 0);
    CHECK(e.autState < g.closure.automata[e.autId].nfa->numStates);
  }
}

TEST_CASE("closure limit guards against blowup") {
  DomainDescription d = loadExpanded("mail.dom");
  int saved = FormulaClosure::maxEntries;
  FormulaClosure::maxEntries = 3;
  GroundProgram g = translate(d, 1);
  CHECK_THROWS_AS(attach_formula(g, d.constraints[1], AttachMode::Require),
                  std::runtime_error);
  FormulaClosure::maxEntries = saved;
}
