// Copyright 2026 The zxnf Authors
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


#include "zx/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zx/errors.hpp"
#include "zx/json_io.hpp"
#include "zx/lemmas.hpp"
#include "zx/normalform.hpp"
#include "zx/rules.hpp"

namespace zx {

namespace {

struct Flags {
  std::string backend = "auto";
  std::int64_t fragment = 1;
  int samples = 100;
  double tol = 1e-9;
  int max_qubits = 12;
  std::uint64_t seed = 1;
  std::int64_t p = 3;
  std::vector<std::string> files;
  std::string corpus = "data/lemmas";
  std::string export_dir;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ZxError(ErrorCode::Parse, path + ": cannot open");
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

template <typename F>
auto with_file(const std::string& path, F parse) {
  try {
    return parse(read_file(path));
  } catch (const ZxError& e) {
    if (e.code() == ErrorCode::Parse && std::string(e.what()).rfind(path, 0) != 0)
      throw ZxError(ErrorCode::Parse, path + ": " + e.what());
    throw;
  }
}

InterpOptions options_of(const Flags& f) {
  InterpOptions o;
  o.max_qubits = f.max_qubits;
  if (f.backend == "exact") o.backend = Backend::exact();
  if (f.backend == "float") o.backend = Backend::floating();
  return o;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return kParseError;
    case ErrorCode::Resource:
    case ErrorCode::SizeLimit: return kResourceError;
    default: return kSemanticError;
  }
}

int cmd_interp(const Flags& f, std::ostream& out) {
  const Term d = with_file(f.files.at(0), parse_diagram);
  out << matrix_to_json(interp(d, options_of(f))).dump() << "\n";
  return kOk;
}

int cmd_normalize(const Flags& f, std::ostream& out) {
  const Term d = with_file(f.files.at(0), parse_diagram);
  out << normal_form_to_json(normalize(d, options_of(f))).dump() << "\n";
  return kOk;
}

int cmd_eq(const Flags& f, std::ostream& out) {
  const Term a = with_file(f.files.at(0), parse_diagram);
  const Term b = with_file(f.files.at(1), parse_diagram);
  const bool same = equal(a, b, options_of(f), f.tol);
  out << Json{{"equal", same}}.dump() << "\n";
  return same ? kOk : kUnequal;
}

int cmd_check_rules(const Flags& f, std::ostream& out) {
  if (f.samples < 1) throw ZxError(ErrorCode::Precondition, "--samples must be positive");
  const Fragment frag = f.fragment == 0 ? Fragment::any() : Fragment::rational(f.fragment);
  bool all = true;
  for (const Rule& r : builtin_rules()) {
    const SoundnessReport rep = check_soundness(r, f.samples, frag, f.seed, f.tol);
    Json line{{"rule", rep.rule}, {"samples", rep.samples}, {"passed", rep.passed}, {"ok", rep.ok()}};
    if (rep.counterexample) line["counterexample"] = rep.counterexample->to_string();
    out << line.dump() << "\n";
    all = all && rep.ok();
  }
  return all ? kOk : kUnequal;
}

int cmd_synth(const Flags& f, std::ostream& out) {
  const Matrix m = with_file(f.files.at(0), parse_matrix);
  out << term_to_json(render(lambda_map(m))).dump() << "\n";
  return kOk;
}

int cmd_demo(const Flags& f, std::ostream& out) {
  const IncompletenessReport rep = incompleteness_witness(f.p, f.samples, f.seed);
  out << Json{{"p", rep.p},
              {"multiplier", rep.multiplier},
              {"original", scalar_to_json(rep.original)},
              {"original_text", rep.original.to_string()},
              {"multiplied", scalar_to_json(rep.multiplied)},
              {"multiplied_text", rep.multiplied.to_string()},
              {"rule_samples", rep.rule_samples},
              {"rule_failures", rep.rule_failures},
              {"failing_rules", rep.failing_rules},
              {"ok", rep.ok()}}
             .dump()
      << "\n";
  return rep.ok() ? kOk : kUnequal;
}

int cmd_lemmas(const Flags& f, std::ostream& out) {
  if (!f.export_dir.empty()) {
    for (const std::string& p : export_lemmas(builtin_lemmas(), f.export_dir)) out << Json{{"wrote", p}}.dump() << "\n";
    return kOk;
  }
  bool all = true;
  for (const Equation& e : load_lemmas(f.corpus)) {
    Json params = Json::object();
    for (const auto& [k, v] : e.params) params[k] = v.to_string();
    const bool ok = verify_equation(e, options_of(f), f.tol);
    out << Json{{"lemma", e.label}, {"params", params}, {"verified", ok}}.dump() << "\n";
    all = all && ok;
  }
  return all ? kOk : kUnequal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ZX-calculus interpreter, normalizer and rule checker", "zxnf"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--backend", f.backend, "exact, float or auto")->check(CLI::IsMember({"auto", "exact", "float"}));
  app.add_option("--fragment", f.fragment, "angles in multiples of pi/4N; 0 for unrestricted")
      ->check(CLI::Range(std::int64_t(0), std::int64_t(1) << 20));
  app.add_option("--samples", f.samples, "random instances per rule")->check(CLI::PositiveNumber);
  app.add_option("--tol", f.tol, "float comparison tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--max-qubits", f.max_qubits, "largest wire count held during evaluation")->check(CLI::PositiveNumber);
  app.add_option("--seed", f.seed, "random seed");

  auto* interp_cmd = app.add_subcommand("interp", "print the matrix of a diagram");
  interp_cmd->add_option("diagram", f.files)->required()->expected(1);
  auto* normalize_cmd = app.add_subcommand("normalize", "print the normal form of a diagram");
  normalize_cmd->add_option("diagram", f.files)->required()->expected(1);
  auto* eq_cmd = app.add_subcommand("eq", "decide equality of two diagrams");
  eq_cmd->add_option("diagrams", f.files)->required()->expected(2);
  auto* rules_cmd = app.add_subcommand("check-rules", "sample every rule variant for soundness");
  auto* synth_cmd = app.add_subcommand("synth", "print a diagram whose matrix is the given one");
  synth_cmd->add_option("matrix", f.files)->required()->expected(1);
  auto* demo_cmd = app.add_subcommand("demo-incompleteness", "report the cyclotomic witness for a prime");
  demo_cmd->add_option("--p", f.p, "odd prime");
  auto* lemma_cmd = app.add_subcommand("lemma-corpus", "verify every equation of a lemma directory");
  lemma_cmd->add_option("dir", f.corpus, "corpus directory");
  lemma_cmd->add_option("--export", f.export_dir, "write the builtin corpus here instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (*interp_cmd) return cmd_interp(f, out);
    if (*normalize_cmd) return cmd_normalize(f, out);
    if (*eq_cmd) return cmd_eq(f, out);
    if (*rules_cmd) return cmd_check_rules(f, out);
    if (*synth_cmd) return cmd_synth(f, out);
    if (*demo_cmd) return cmd_demo(f, out);
    if (*lemma_cmd) return cmd_lemmas(f, out);
  } catch (const ZxError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return kParseError;
}

}  // namespace zx
