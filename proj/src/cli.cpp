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

#include "tasl/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tasl/bmc.hpp"
#include "tasl/parser.hpp"
#include "tasl/philosophers.hpp"

namespace tasl {

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int64_t envInt(const char* name, int64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return std::strtoll(v, nullptr, 10);
}

struct CommonOpts {
  std::string domainPath;
  std::string formulaText;
  int kmin = 0;
  int kmax = 5;
  int k = 0;
  bool dummy = false;
  std::string format = "text";
  int64_t maxModels = -1;
  int64_t seed = 0;
  int64_t limit = -1;

  SolveConfig config() const {
    SolveConfig cfg;
    cfg.deterministicSeed = static_cast<uint64_t>(seed);
    cfg.conflictBudget = envInt("TASL_CONFLICT_BUDGET", -1);
    cfg.atomBudget = envInt("TASL_ATOM_BUDGET", 50'000'000);
    cfg.maxModels = maxModels;
    return cfg;
  }
};

void printTrace(std::ostream& out, const LassoTrace& t, const std::string& format) {
  if (format == "structured")
    out << render_structured(t);
  else
    out << render_text(t);
}

int reportOutcome(std::ostream& out, const Outcome& oc, const CommonOpts& opts,
                  const DomainDescription* d) {
  switch (oc.status) {
    case Outcome::Status::Witness:
      out << "witness at k=" << oc.k << "\n";
      printTrace(out, *oc.trace, opts.format);
      return 0;
    case Outcome::Status::NoWitnessUpTo:
      out << "no witness up to k=" << oc.k << "\n";
      return 1;
    case Outcome::Status::ValidUpTo:
      out << "valid up to k=" << oc.k << "\n";
      return 0;
    case Outcome::Status::Counterexample:
      out << "counterexample at k=" << oc.k << "\n";
      printTrace(out, *oc.trace, opts.format);
      return 1;
    case Outcome::Status::IllDefined:
      out << "ill-defined at k=" << oc.k << "\n";
      if (d)
        for (const auto& [f, s] : oc.undefined)
          out << "  undefined: " << d->fluentName(f) << " in state " << s << "\n";
      if (oc.trace) printTrace(out, *oc.trace, opts.format);
      return 1;
    case Outcome::Status::BudgetExhausted:
      out << "budget exhausted at k=" << oc.k << "\n";
      return 2;
  }
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"temporal answer set solving and bounded model checking for action theories"};
  app.require_subcommand(1);
  CommonOpts opts;
  opts.maxModels = envInt("TASL_MAX_MODELS", -1);

  auto addDomainOpt = [&](CLI::App* cmd) {
    cmd->add_option("domain", opts.domainPath, "domain description file")->required();
  };
  auto addFormulaOpt = [&](CLI::App* cmd, bool required) {
    auto* o = cmd->add_option("-f,--formula", opts.formulaText, "goal formula");
    if (required) o->required();
  };
  auto addBoundOpts = [&](CLI::App* cmd) {
    cmd->add_option("--kmax", opts.kmax, "largest bound to try");
    cmd->add_option("--kmin", opts.kmin, "smallest bound to try");
  };
  auto addTuning = [&](CLI::App* cmd) {
    cmd->add_option("--seed", opts.seed, "deterministic tie-breaking seed");
    cmd->add_option("--max-models", opts.maxModels, "model budget");
    cmd->add_option("--format", opts.format, "trace rendering: text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* check = app.add_subcommand("check", "search for an extension satisfying a formula");
  addDomainOpt(check);
  addFormulaOpt(check, true);
  addBoundOpts(check);
  check->add_flag("--dummy", opts.dummy, "add the dummy action for finite plans");
  addTuning(check);

  CLI::App* valid = app.add_subcommand("valid", "check validity by searching counterexamples");
  addDomainOpt(valid);
  addFormulaOpt(valid, true);
  addBoundOpts(valid);
  valid->add_flag("--dummy", opts.dummy, "add the dummy action");
  addTuning(valid);

  CLI::App* plan = app.add_subcommand("plan", "search for a plan achieving a goal (F goal)");
  addDomainOpt(plan);
  addFormulaOpt(plan, true);
  addBoundOpts(plan);
  plan->add_flag("--dummy", opts.dummy, "add the dummy action (finite plans)");
  addTuning(plan);

  CLI::App* exts = app.add_subcommand("extensions", "enumerate extensions at a fixed bound");
  addDomainOpt(exts);
  exts->add_option("--k", opts.k, "bound")->required();
  exts->add_option("--limit", opts.limit, "max number of extensions to list");
  addTuning(exts);

  CLI::App* ground = app.add_subcommand("ground", "print the ground program");
  addDomainOpt(ground);
  ground->add_option("--k", opts.k, "bound")->required();
  addFormulaOpt(ground, false);
  bool forbid = false, dump = false, probe = false;
  ground->add_flag("--forbid", forbid, "attach the formula in forbid mode");
  ground->add_flag("--dump", dump, "sorted machine dump instead of the sectioned text");
  ground->add_flag("--welldefined-probe", probe, "attach the undefined-fluent probe");
  ground->add_flag("--dummy", opts.dummy, "add the dummy action");

  CLI::App* wd = app.add_subcommand("welldefined", "search for states with undefined fluents");
  addDomainOpt(wd);
  addBoundOpts(wd);
  addTuning(wd);

  CLI::App* gen = app.add_subcommand("gen-philosophers", "emit a dining-philosophers domain");
  int nPhil = 2;
  std::string outPrefix;
  gen->add_option("n", nPhil, "number of philosophers")->required();
  gen->add_option("-o,--output", outPrefix, "output prefix (default dpN)");

  CLI::App* evalTrace = app.add_subcommand("eval-trace", "evaluate a formula on a stored trace");
  std::string tracePath;
  evalTrace->add_option("trace", tracePath, "structured trace file")->required();
  addFormulaOpt(evalTrace, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed() || valid->parsed() || plan->parsed()) {
      DomainDescription d = parse_domain(readFile(opts.domainPath));
      DomainDescription forFormula = expand_macros(d, {.addDummy = opts.dummy});
      FormulaPtr f = parse_formula(opts.formulaText, forFormula);
      Query q;
      q.kMin = opts.kmin;
      q.kMax = opts.kmax;
      q.cfg = opts.config();
      q.addDummy = opts.dummy;
      if (plan->parsed()) {
        q.task = Query::Task::Satisfy;
        q.formula = DltlFormula::eventually(f);
      } else {
        q.task = valid->parsed() ? Query::Task::Validity : Query::Task::Satisfy;
        q.formula = f;
      }
      Outcome oc = run(d, q);
      return reportOutcome(out, oc, opts, &forFormula);
    }
    if (exts->parsed()) {
      DomainDescription d = parse_domain(readFile(opts.domainPath));
      SolveConfig cfg = opts.config();
      if (opts.limit >= 0) cfg.maxModels = opts.limit;
      SolveStatus status = SolveStatus::Complete;
      std::vector<LassoTrace> traces = all_extensions(d, opts.k, cfg, &status);
      for (size_t i = 0; i < traces.size(); ++i) {
        out << "extension " << i + 1 << ":\n";
        printTrace(out, traces[i], opts.format);
      }
      out << traces.size() << " extension(s) at k=" << opts.k;
      if (status == SolveStatus::BudgetExhausted) out << " (budget exhausted)";
      if (status == SolveStatus::Stopped) out << " (limit reached)";
      out << "\n";
      if (status == SolveStatus::BudgetExhausted) return 2;
      return traces.empty() ? 1 : 0;
    }
    if (ground->parsed()) {
      DomainDescription d = parse_domain(readFile(opts.domainPath));
      DomainDescription dx = expand_macros(d, {.addDummy = opts.dummy});
      GroundProgram g = translate(dx, opts.k);
      for (const FormulaPtr& c : dx.constraints) g = attach_formula(g, c, AttachMode::Require);
      if (!opts.formulaText.empty()) {
        FormulaPtr f = parse_formula(opts.formulaText, dx);
        g = attach_formula(g, f, forbid ? AttachMode::Forbid : AttachMode::Require);
      }
      if (probe) g = attach_welldefined_probe(g);
      out << (dump ? dump_rules(g) : export_text(g));
      return 0;
    }
    if (wd->parsed()) {
      DomainDescription d = parse_domain(readFile(opts.domainPath));
      Query q;
      q.task = Query::Task::WellDefined;
      q.kMin = opts.kmin;
      q.kMax = opts.kmax;
      q.cfg = opts.config();
      Outcome oc = run(d, q);
      if (oc.status == Outcome::Status::ValidUpTo) {
        out << "well-defined up to k=" << oc.k << "\n";
        return 0;
      }
      DomainDescription dx = expand_macros(d);
      return reportOutcome(out, oc, opts, &dx);
    }
    if (gen->parsed()) {
      PhilosophersBenchmark b = gen_philosophers(nPhil);
      std::string prefix = outPrefix.empty() ? "dp" + std::to_string(nPhil) : outPrefix;
      std::ofstream dom(prefix + ".dom"), prop(prefix + ".prop");
      if (!dom || !prop) throw std::runtime_error("cannot write '" + prefix + ".dom/.prop'");
      dom << b.domain;
      prop << b.property;
      out << "wrote " << prefix << ".dom and " << prefix << ".prop\n";
      return 0;
    }
    if (evalTrace->parsed()) {
      LassoTrace t = parse_structured_trace(readFile(tracePath));
      FormulaPtr f = parse_formula(opts.formulaText, *t.domain);
      Verdict v = eval(t, f);
      out << (v.value ? "true" : "false");
      if (v.witness) out << " (witness state " << *v.witness << ")";
      out << "\n";
      return v.value ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace tasl
