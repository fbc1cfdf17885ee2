// depth2-kit: command-line front end for the depth2 library.
//
// Exit codes: 0 success, 1 a checked property is false, 2 usage or input
// error, 3 budget or size limit exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "depth2/duality.hpp"
#include "depth2/errors.hpp"
#include "depth2/formula.hpp"
#include "depth2/frame.hpp"
#include "depth2/io.hpp"
#include "depth2/modal_algebra.hpp"
#include "depth2/semantics.hpp"
#include "depth2/verify.hpp"

namespace {

using nlohmann::json;
using namespace depth2;

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kLimit = 3 };

struct Options {
  std::string format = "table";
  bool json() const { return format == "json"; }
};

SearchOptions search_options() {
  SearchOptions opts;
  if (const char* env = std::getenv("D2_BUDGET")) {
    try {
      opts.budget = std::stoull(env);
    } catch (const std::exception&) {
      throw ParameterError(std::string("D2_BUDGET is not a number: ") + env);
    }
  }
  return opts;
}

std::string world_set(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(std::countr_zero(m));
  }
  return out + "}";
}

std::string element_set(const BooleanAlgebra& ba, const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_element(ba, s[i]);
  }
  return out + "}";
}

void write_json(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw LookupError("cannot write " + path);
  out << j.dump(2) << "\n";
}

int cmd_parse(const Options& o, const std::string& text) {
  const Formula f = parse_formula(text);
  if (o.json()) {
    std::cout << json{{"formula", print_formula(f)}, {"variables", variables(f)}}.dump(2) << "\n";
  } else {
    std::cout << print_formula(f) << "\n";
  }
  return kOk;
}

int cmd_frame_check(const Options& o, const std::string& file, const std::string& condition,
                    const std::string& axiom_name) {
  const Frame f = frame_from_json(read_json_file(file));
  if (!condition.empty()) {
    const FrameCondition c = parse_frame_condition(condition);
    const ConditionResult r = frame_condition(f, c);
    if (o.json()) {
      std::cout << json{{"condition", to_string(c)}, {"holds", r.holds}, {"counterexample", r.counterexample}}.dump(2)
                << "\n";
    } else {
      std::cout << to_string(c) << ": " << (r.holds ? "holds" : "fails");
      if (!r.holds) {
        std::cout << " at (";
        for (std::size_t i = 0; i < r.counterexample.size(); ++i) {
          std::cout << (i > 0 ? "," : "") << r.counterexample[i];
        }
        std::cout << ")";
      }
      std::cout << "\n";
    }
    return r.holds ? kOk : kFalse;
  }
  const Formula phi = axiom(axiom_name);
  const FrameValidity r = frame_validates(f, phi, search_options());
  if (o.json()) {
    json j{{"axiom", axiom_name}, {"formula", print_formula(phi)}, {"valid", r.valid}};
    if (r.counterexample) j["counterexample"] = valuation_to_json(*r.counterexample);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << axiom_name << " (" << print_formula(phi) << "): " << (r.valid ? "valid" : "refuted") << "\n";
    if (r.counterexample) {
      for (const auto& [name, mask] : *r.counterexample) std::cout << "  " << name << " = " << world_set(mask) << "\n";
    }
  }
  return r.valid ? kOk : kFalse;
}

int cmd_frame_classify(const Options& o, const std::string& file) {
  const Frame f = frame_from_json(read_json_file(file));
  json j{{"worlds", f.worlds()}, {"quasiorder", is_quasiorder(f)}};
  json conditions = json::object();
  for (const FrameCondition c : kFrameConditions) {
    const bool needs_qo = c == FrameCondition::dum || c == FrameCondition::grz || c == FrameCondition::m;
    if (needs_qo && !is_quasiorder(f)) continue;
    conditions[to_string(c)] = frame_condition(f, c).holds;
  }
  j["conditions"] = conditions;
  if (is_quasiorder(f)) {
    const ClusterPoset cp = cluster_poset(f);
    json clusters = json::array();
    for (std::size_t c = 0; c < cp.clusters.size(); ++c) {
      json members = json::array();
      for (std::uint32_t m = cp.clusters[c]; m != 0; m &= m - 1) members.push_back(std::countr_zero(m));
      clusters.push_back({{"worlds", members}, {"level", cp.level[c]}, {"simple", cp.simple(c)}});
    }
    j["clusters"] = clusters;
    j["depth"] = cp.depth;
    json kinds = json::array();
    for (const ExtremalMatch& m : classify_extremal(f)) {
      kinds.push_back({{"kind", to_string(m.kind)}, {"U", world_set(m.lower)}, {"V", world_set(m.upper)}});
    }
    j["extremal"] = kinds;
  }
  if (o.json()) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "worlds: " << f.worlds() << "\nquasiorder: " << (is_quasiorder(f) ? "yes" : "no") << "\n";
  if (is_quasiorder(f)) {
    const ClusterPoset cp = cluster_poset(f);
    std::cout << "depth: " << cp.depth << "\n";
    for (int level = cp.depth; level >= 1; --level) {
      std::cout << "  level " << level << ":";
      for (std::size_t c = 0; c < cp.clusters.size(); ++c) {
        if (cp.level[c] == level) std::cout << " " << world_set(cp.clusters[c]);
      }
      std::cout << "\n";
    }
    std::cout << "extremal:";
    const auto matches = classify_extremal(f);
    if (matches.empty()) std::cout << " none";
    for (const ExtremalMatch& m : matches) std::cout << " " << to_string(m.kind);
    std::cout << "\n";
  }
  std::cout << "conditions:";
  for (const auto& [name, holds] : conditions.items()) {
    if (holds.get<bool>()) std::cout << " " << name;
  }
  std::cout << "\n";
  return kOk;
}

int cmd_alg_classify(const Options& o, const std::string& file) {
  const ModalAlgebra a = algebra_from_json(read_json_file(file));
  const BooleanAlgebra& ba = a.base();
  const OperatorProperties p = operator_properties(a);
  json j{{"atoms", a.atoms()},
         {"properties", {{"normal", p.normal}, {"additive", p.additive}, {"closure", p.closure}, {"interior", p.interior}}}};
  json closed = json::array();
  for (const Element x : closed_elements(a)) closed.push_back(format_element(ba, x));
  j["closed"] = closed;
  json labels = json::array();
  for (const ClassLabel& l : classify_algebra(a)) labels.push_back(format_label(ba, l));
  j["labels"] = labels;
  if (p.closure) {
    const IrreducibilityVerdict v = irreducibility(a);
    j["irreducibility"] = to_string(v.kind);
    if (v.witness) j["witness"] = format_element(ba, *v.witness);
    j["depth2_axiom"] = satisfies_depth2_axiom(a);
  }
  if (o.json()) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "atoms: " << a.atoms() << "\nclosure: " << (p.closure ? "yes" : "no")
            << "\nclosed: " << element_set(ba, closed_elements(a)) << "\nlabels:";
  if (labels.empty()) std::cout << " none";
  for (const auto& l : labels) std::cout << " " << l.get<std::string>();
  std::cout << "\n";
  if (p.closure) {
    std::cout << "irreducibility: " << j["irreducibility"].get<std::string>();
    if (j.contains("witness")) std::cout << " (least nonzero closed " << j["witness"].get<std::string>() << ")";
    std::cout << "\ndepth-two axiom: " << (j["depth2_axiom"].get<bool>() ? "holds" : "fails") << "\n";
  }
  return kOk;
}

int cmd_enum(const Options& o, int worlds, bool quasiorder, int max_depth) {
  EnumerationOptions eo;
  eo.quasiorder = quasiorder;
  if (max_depth > 0) eo.max_depth = max_depth;
  const std::vector<Frame> frames = enumerate_frames(worlds, eo);
  if (o.json()) {
    json out = json::array();
    for (const Frame& f : frames) out.push_back(frame_to_json(f));
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < frames.size(); ++i) {
    std::cout << i << ":";
    for (int w = 0; w < frames[i].worlds(); ++w) std::cout << " " << w << "->" << world_set(frames[i].row(w));
    std::cout << "\n";
  }
  std::cout << frames.size() << " frames\n";
  return kOk;
}

int cmd_eval(const Options& o, const std::string& file, const std::string& text, const std::string& valuation) {
  const Frame f = frame_from_json(read_json_file(file));
  const Formula phi = parse_formula(text);
  if (!valuation.empty()) {
    json vj;
    try {
      vj = json::parse(valuation);
    } catch (const json::exception& e) {
      throw DomainError(std::string("valuation is not JSON: ") + e.what());
    }
    const std::uint32_t truth = eval_in_model(f, valuation_from_json(vj, f.worlds()), phi);
    if (o.json()) {
      json worlds = json::array();
      for (std::uint32_t m = truth; m != 0; m &= m - 1) worlds.push_back(std::countr_zero(m));
      std::cout << json{{"formula", print_formula(phi)}, {"worlds", worlds}}.dump(2) << "\n";
    } else {
      std::cout << world_set(truth) << "\n";
    }
    return kOk;
  }
  const FrameValidity r = frame_validates(f, phi, search_options());
  if (o.json()) {
    json j{{"formula", print_formula(phi)}, {"valid", r.valid}};
    if (r.counterexample) j["counterexample"] = valuation_to_json(*r.counterexample);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (r.valid ? "valid" : "refuted") << "\n";
    if (r.counterexample) {
      for (const auto& [name, mask] : *r.counterexample) std::cout << "  " << name << " = " << world_set(mask) << "\n";
    }
  }
  return r.valid ? kOk : kFalse;
}

int cmd_verify(const Options& o, const std::string& suite, int atoms, int worlds, unsigned workers) {
  SuiteParams p;
  if (atoms > 0) p.atoms = atoms;
  if (worlds > 0) p.worlds = worlds;
  p.workers = workers;
  std::vector<std::string> names;
  if (suite.empty()) {
    for (const SuiteInfo& s : suite_catalog()) names.push_back(s.name);
  } else {
    names.push_back(suite);
  }
  bool all_passed = true;
  json reports = json::array();
  for (const std::string& name : names) {
    const VerificationReport r = run_suite(name, p);
    all_passed = all_passed && r.passed;
    if (o.json()) {
      reports.push_back(report_to_json(r));
      continue;
    }
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << "  atoms<=" << r.atoms << " worlds<=" << r.worlds
              << "  checked=" << r.checked << " failures=" << r.failures.size() << "  "
              << static_cast<long long>(r.elapsed_ms) << " ms\n";
    for (const SuiteFailure& f : r.failures) {
      std::cout << "    " << f.instance << ": expected " << f.expected << ", got " << f.got << "\n";
    }
    for (const std::string& n : r.notes) std::cout << "    note: " << n << "\n";
  }
  if (o.json()) std::cout << (names.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return all_passed ? kOk : kFalse;
}

int cmd_meet_axiom(const Options& o, const std::string& a, const std::string& b) {
  const Formula m = meet_axiom(parse_formula(a), parse_formula(b));
  if (o.json()) {
    std::cout << json{{"formula", print_formula(m)}}.dump(2) << "\n";
  } else {
    std::cout << print_formula(m) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closure algebras of depth two and their Kripke frames"};
  app.name("depth2-kit");
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));

  int code = kOk;
  std::function<int()> action;

  std::string formula_text;
  auto* parse = app.add_subcommand("parse", "Parse and print a formula in normal form");
  parse->add_option("formula", formula_text)->required();
  parse->callback([&] { action = [&] { return cmd_parse(o, formula_text); }; });

  auto* frame = app.add_subcommand("frame", "Frame conditions and classification");
  frame->require_subcommand(1);
  std::string frame_file, condition, axiom_name;
  auto* check = frame->add_subcommand("check", "Check a frame condition or axiom");
  check->add_option("file", frame_file)->required()->check(CLI::ExistingFile);
  auto* cond_opt = check->add_option("--condition", condition, "Frame condition name");
  auto* axiom_opt = check->add_option("--axiom", axiom_name, "Catalog axiom name");
  cond_opt->excludes(axiom_opt);
  check->callback([&] {
    if (condition.empty() && axiom_name.empty()) throw CLI::RequiredError("--condition or --axiom");
    action = [&] { return cmd_frame_check(o, frame_file, condition, axiom_name); };
  });
  auto* fclassify = frame->add_subcommand("classify", "Cluster poset, depth and extremal kinds");
  fclassify->add_option("file", frame_file)->required()->check(CLI::ExistingFile);
  fclassify->callback([&] { action = [&] { return cmd_frame_classify(o, frame_file); }; });

  auto* alg = app.add_subcommand("alg", "Modal algebra classification");
  alg->require_subcommand(1);
  std::string alg_file;
  auto* aclassify = alg->add_subcommand("classify", "Class labels, irreducibility, closed elements");
  aclassify->add_option("file", alg_file)->required()->check(CLI::ExistingFile);
  aclassify->callback([&] { action = [&] { return cmd_alg_classify(o, alg_file); }; });

  auto* dual = app.add_subcommand("dual", "Duality maps");
  dual->require_subcommand(1);
  std::string dual_file, out_file;
  auto* cm = dual->add_subcommand("cm", "Complex algebra of a frame");
  cm->add_option("file", dual_file)->required()->check(CLI::ExistingFile);
  cm->add_option("-o,--output", out_file, "Write to a file instead of standard output");
  cm->callback([&] {
    action = [&] {
      write_json(algebra_to_json(complex_algebra(frame_from_json(read_json_file(dual_file)))), out_file);
      return kOk;
    };
  });
  auto* ult = dual->add_subcommand("ult", "Canonical frame of an algebra");
  ult->add_option("file", dual_file)->required()->check(CLI::ExistingFile);
  ult->add_option("-o,--output", out_file, "Write to a file instead of standard output");
  ult->callback([&] {
    action = [&] {
      write_json(frame_to_json(canonical_frame(algebra_from_json(read_json_file(dual_file)))), out_file);
      return kOk;
    };
  });

  int enum_worlds = 0;
  int max_depth = 0;
  bool quasiorder = false;
  auto* en = app.add_subcommand("enum", "Frames up to isomorphism");
  en->add_option("--worlds", enum_worlds)->required()->check(CLI::PositiveNumber);
  en->add_flag("--quasiorder", quasiorder);
  en->add_option("--max-depth", max_depth)->check(CLI::PositiveNumber);
  en->callback([&] { action = [&] { return cmd_enum(o, enum_worlds, quasiorder, max_depth); }; });

  std::string eval_frame, eval_formula, eval_valuation;
  auto* ev = app.add_subcommand("eval", "Evaluate a formula in a model, or check frame validity");
  ev->add_option("--frame", eval_frame)->required()->check(CLI::ExistingFile);
  ev->add_option("--formula", eval_formula)->required();
  ev->add_option("--valuation", eval_valuation, "JSON object: variable to world list");
  ev->callback([&] { action = [&] { return cmd_eval(o, eval_frame, eval_formula, eval_valuation); }; });

  std::string suite;
  int atoms = 0;
  int worlds = 0;
  unsigned workers = 0;
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", suite);
  ver->add_option("--atoms", atoms)->check(CLI::PositiveNumber);
  ver->add_option("--worlds", worlds)->check(CLI::PositiveNumber);
  ver->add_option("--workers", workers, "Worker threads (0 = all cores)");
  ver->callback([&] { action = [&] { return cmd_verify(o, suite, atoms, worlds, workers); }; });

  std::string left, right;
  auto* meet = app.add_subcommand("meet-axiom", "Boxed disjunction of two formulas with disjoint variables");
  meet->add_option("left", left)->required();
  meet->add_option("right", right)->required();
  meet->callback([&] { action = [&] { return cmd_meet_axiom(o, left, right); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    code = action();
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "; expected one of:";
    for (const std::string& t : e.expected()) std::cerr << " " << t;
    std::cerr << "\n";
    return kUsage;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << " (raise D2_BUDGET to allow it)\n";
    return kLimit;
  } catch (const SizeError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kLimit;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
