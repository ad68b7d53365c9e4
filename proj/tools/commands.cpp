// Copyright 2026 The tvec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "tvec/kirillov.hpp"
#include "tvec/suites.hpp"
#include "tvec/theorems.hpp"
#include "tvec/tree.hpp"
#include "tvec/trilinear.hpp"

namespace tvec::cli {

using nlohmann::json;

namespace {

// Configurations the library deliberately does not cover.
class OutOfScope : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

json claim_json(const Claim& c) {
  return {{"tensor", c.tensor},        {"expect_nonzero", c.expect_nonzero},
          {"value", cjson(c.value)},   {"abs", std::abs(c.value)},
          {"scale", c.scale},          {"determined", c.determined},
          {"provenance", c.provenance}, {"certificate", c.certificate},
          {"holds", c.holds()}};
}

json theorem_json(const TheoremReport& r) {
  json claims = json::array();
  for (const Claim& c : r.claims) claims.push_back(claim_json(c));
  return {{"case", r.case_id},
          {"subcase", r.subcase},
          {"p", r.p},
          {"representations", r.representations},
          {"claims", claims},
          {"checks", r.checks},
          {"checks_ok", r.checks_ok},
          {"conventions", r.conventions},
          {"pass", r.pass()}};
}

Tensor parse_tensor(const std::string& desc) {
  Tensor t;
  std::istringstream in(desc);
  char c1 = 0, c2 = 0;
  if (!(in >> t.a >> c1 >> t.b >> c2 >> t.c) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof()) {
    throw ConfigError("tensor descriptor must be 'a,b,c', got '" + desc + "'");
  }
  return t;
}

int stub_count(const std::vector<RepSpec>& specs) {
  int n = 0;
  for (const RepSpec& s : specs) n += s.is_stub() ? 1 : 0;
  return n;
}

CommandResult eval_stubs(const RunConfig& cfg, const Tensor& t) {
  const auto s = triple(cfg);
  if (s[0].is_stub() || s[1].conductor() != s[2].conductor()) {
    throw OutOfScope(
        "eval-form: with two stubs only V1 principal and V2, V3 stubs of equal conductor "
        "are evaluated");
  }
  const int n1 = s[0].conductor();
  const int n3 = s[2].conductor();
  if (t.a != n3 - n1 || t.b != 0 || t.c != 0) {
    throw OutOfScope("eval-form: stub configurations only evaluate the tensor " +
                     std::to_string(n3 - n1) + ",0,0");
  }
  const EqualConductorResult r = ell_equal_conductor(s[0], s[1], s[2], cfg.radius, cfg.budget);
  const double err = std::abs(r.computed - r.closed_form);
  CommandResult out;
  out.exit_code = err <= 1e-12 * std::max(1.0, std::abs(r.closed_form)) ? kPass : kCheckFailed;
  out.report["result"] = {{"tensor", t.to_string()},
                          {"value", cjson(r.computed)},
                          {"closed_form", cjson(r.closed_form)},
                          {"deviation", err},
                          {"cosets", r.cosets},
                          {"volume", r.volume},
                          {"provenance", "Kirillov pairing of the stub new vectors over level-" +
                                             std::to_string(n3) + " cosets"}};
  return out;
}

}  // namespace

CommandResult cmd_verify_lemmas(const RunConfig& cfg) {
  LemmaSuiteOptions opt;
  opt.cap = std::max(cfg.radius, cfg.N);
  opt.budget = cfg.budget;
  opt.tolerance = cfg.tolerance;
  opt.alpha_fault = cfg.alpha_fault;
  const LemmaSuiteResult lemmas = run_lemma_suite(cfg.p, opt);
  const auto structural = run_structural_suite(cfg.p, 3, 3, cfg.budget);

  struct Summary {
    int cases = 0;
    int passed = 0;
    double worst = 0.0;
  };
  std::map<std::string, Summary> by_lemma;
  json cases = json::array();
  for (const auto& c : lemmas.cases) {
    Summary& s = by_lemma[c.lemma];
    ++s.cases;
    s.passed += c.ok ? 1 : 0;
    s.worst = std::max(s.worst, c.max_rel_error);
    cases.push_back({{"lemma", c.lemma},
                     {"representation", c.representation},
                     {"variant", c.variant},
                     {"r", c.r},
                     {"level", c.level},
                     {"checked", c.checked},
                     {"exhaustive", c.exhaustive},
                     {"max_rel_error", c.max_rel_error},
                     {"pass", c.ok}});
  }
  json summary = json::array();
  for (const auto& [name, s] : by_lemma) {
    summary.push_back({{"lemma", name},
                       {"cases", s.cases},
                       {"passed", s.passed},
                       {"worst_rel_error", s.worst},
                       {"pass", s.passed == s.cases}});
  }
  bool ok = lemmas.ok();
  json structs = json::array();
  for (const auto& s : structural) {
    ok = ok && s.ok;
    structs.push_back({{"identity", s.name},
                       {"checked", s.checked},
                       {"pass", s.ok},
                       {"first_failure", s.first_failure}});
  }
  CommandResult out;
  out.exit_code = ok ? kPass : kCheckFailed;
  out.report["result"] = {{"lemmas", summary},
                          {"cases", cases},
                          {"structural", structs},
                          {"alpha_fault", cfg.alpha_fault}};
  return out;
}

CommandResult cmd_eval_form(const RunConfig& cfg, const std::string& tensor) {
  const Tensor t = parse_tensor(tensor);
  const auto specs = triple(cfg);
  const int stubs = stub_count(cfg.specs);
  if (stubs == 3) throw OutOfScope("eval-form: three supercuspidal stubs are not covered");
  if (stubs == 2) return eval_stubs(cfg, t);
  if (stubs == 1) throw OutOfScope("eval-form: a single stub is not covered");

  ContextOptions copt;
  copt.spherical1 = cfg.spherical >= 1;
  copt.spherical2 = cfg.spherical >= 2;
  copt.cap = cfg.radius;
  const TrilinearContext ctx = make_context(specs[0], specs[1], specs[2], copt);
  const DescentResult d = descent_solve(ctx, {t});
  const HypothesisCheck hyp = chain_hypotheses(ctx);
  const EllValue& v = d.values.front();

  json chain = json::array();
  for (cplx z : d.chain) chain.push_back(cjson(z));
  CommandResult out;
  out.exit_code = v.determined && hyp.ok() ? kPass : kCheckFailed;
  out.report["result"] = {
      {"tensor", v.tensor.to_string()},
      {"value", cjson(v.value)},
      {"abs", std::abs(v.value)},
      {"scale", d.scale},
      {"determined", v.determined},
      {"certified_zero", v.certified_zero},
      {"certificate", v.certificate},
      {"provenance",
       {{"chain", chain},
        {"unknowns", d.unknowns},
        {"equations", d.equations},
        {"rank", d.rank},
        {"residual", d.residual},
        {"atkin_lehner_relation", d.atkin_lehner_used},
        {"phi_order", ctx.phi_order},
        {"hypotheses_ok", hyp.ok()},
        {"hypotheses", hyp.detail}}}};
  return out;
}

CommandResult cmd_verify_theorem(const RunConfig& cfg, const std::string& case_id) {
  TheoremOptions opt;
  opt.cap = cfg.radius;
  opt.pair_budget = cfg.budget;
  opt.verify_h = cfg.verify_h;
  opt.cross_check_kernel = cfg.cross_check_kernel;
  if (stub_count(cfg.specs) == 3) throw OutOfScope("verify-theorem: three supercuspidal stubs are not covered");
  const TheoremReport r = verify_theorem(case_id, triple(cfg), opt);
  CommandResult out;
  out.exit_code = r.pass() ? kPass : kCheckFailed;
  out.report["result"] = theorem_json(r);
  return out;
}

CommandResult cmd_tree(const RunConfig& cfg, const std::string& out_path) {
  if (cfg.paths.empty()) throw ConfigError("tree: config lists no paths");
  std::vector<OrientedPath> paths;
  for (const PathSpec& ps : cfg.paths) {
    paths.push_back(act(GL2Elem::gamma(cfg.p, cfg.N, ps.offset), standard_path(cfg.p, ps.n)));
  }
  json cover = nullptr;
  std::string comment = "// covering_ok = n/a (needs three paths)\n";
  if (paths.size() == 3) {
    const CoveringResult c = covering_ok(paths[0], paths[1], paths[2]);
    cover = {{"ok", c.ok}, {"longest", c.longest}, {"diagnostic", c.diagnostic}};
    comment = std::string("// covering_ok = ") + (c.ok ? "true" : "false") + " (" + c.diagnostic +
              ")\n";
  }
  std::ofstream f(out_path);
  if (!f) throw ConfigError("tree: cannot write " + out_path);
  f << comment << to_dot(paths);
  CommandResult out;
  out.report["result"] = {{"out", out_path}, {"paths", cfg.paths.size()}, {"covering", cover}};
  return out;
}

CommandResult error_result(const std::string& command, const std::string& kind,
                           const std::string& message) {
  CommandResult out;
  out.exit_code = kResourceError;
  out.report = {{"schema", kReportSchema},
                {"command", command},
                {"status", "error"},
                {"exit_code", kResourceError},
                {"error", {{"kind", kind}, {"message", message}}}};
  return out;
}

CommandResult run_command(const std::string& name, const RunConfig& cfg,
                          const std::string& argument) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult out;
  try {
    if (name == "verify-lemmas") {
      out = cmd_verify_lemmas(cfg);
    } else if (name == "eval-form") {
      out = cmd_eval_form(cfg, argument);
    } else if (name == "verify-theorem") {
      out = cmd_verify_theorem(cfg, argument);
    } else if (name == "tree") {
      out = cmd_tree(cfg, argument);
    } else {
      return error_result(name, "usage", "unknown command");
    }
  } catch (const ConfigError& e) {
    out = error_result(name, "config", e.what());
  } catch (const OutOfScope& e) {
    out = error_result(name, "out_of_scope", e.what());
  } catch (const BudgetError& e) {
    out = error_result(name, "budget", e.what());
  } catch (const PrecisionError& e) {
    out = error_result(name, "precision", e.what());
  } catch (const UnsupportedError& e) {
    out = error_result(name, "unsupported", e.what());
  } catch (const DomainError& e) {
    out = error_result(name, "domain", e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.report["schema"] = kReportSchema;
  out.report["command"] = name;
  out.report["exit_code"] = out.exit_code;
  out.report["status"] = out.exit_code == kPass ? "pass" : out.exit_code == kCheckFailed ? "fail" : "error";
  out.report["seed"] = cfg.seed;
  out.report["config"] = cfg.source;
  out.report["wall_time_s"] = secs;
  out.report["tolerance"] = cfg.tolerance;
  out.report["conventions"] = {
      "gamma = diag(p^-1, 1)", "vol(K) = 1 on K-integrals",
      "vol(J_n) = p^n / |GL2(Z/p^n)|", "phi normalized by the integral over w~ n(x), x in Q_p"};
  return out;
}

}  // namespace tvec::cli
