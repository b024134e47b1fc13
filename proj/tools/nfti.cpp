// nfti.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: learn, eval, check, transform, gen-informant, dot.

#include <iostream>

#include "CLI11.hpp"
#include "nfti/cli.hpp"

namespace {

// Accepts a single character.
std::optional<char> single_char(const std::string& s) {
  if (s.size() != 1) throw CLI::ValidationError("expected one character");
  return s[0];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learn and inspect nondeterministic functional transducers."};
  app.require_subcommand(1);

  nfti::LearnCommand learn;
  std::string learn_reject;
  auto* learn_cmd = app.add_subcommand("learn", "Infer a machine from samples");
  learn_cmd->add_option("samples", learn.samples_path, "Sample file")
      ->required();
  learn_cmd->add_option("-o,--output", learn.output_path,
                        "Machine file (default: standard output)");
  learn_cmd->add_flag("--trace", learn.trace, "Log merges to standard error");
  learn_cmd->add_option("--max-passes", learn.max_passes, "Merge passes")
      ->check(CLI::PositiveNumber);
  learn_cmd->add_option("--reject-symbol", learn_reject,
                        "Treat samples with this one-symbol output as "
                        "negative examples");

  std::string eval_path, eval_input;
  auto* eval_cmd = app.add_subcommand("eval", "Run a machine on one input");
  eval_cmd->add_option("machine", eval_path, "Machine file")->required();
  eval_cmd->add_option("--input", eval_input, "Input word")->required();

  nfti::CheckCommand check;
  auto* check_cmd =
      app.add_subcommand("check", "Check functionality, ambiguity and local "
                                  "prefix preservation");
  check_cmd->add_option("machine", check.machine_path, "Machine file")
      ->required();
  check_cmd->add_flag("--functional", check.functional);
  check_cmd->add_flag("--ambiguity", check.ambiguity);
  check_cmd->add_flag("--lpp", check.lpp);
  check_cmd->add_option("--max-len", check.max_len,
                        "Input length bound for bounded checks");

  nfti::TransformCommand transform;
  std::string totalize_symbol;
  auto* transform_cmd =
      app.add_subcommand("transform", "Totalize, disambiguate or trim");
  transform_cmd->add_option("machine", transform.machine_path, "Machine file")
      ->required();
  auto* tot = transform_cmd->add_option("--totalize", totalize_symbol,
                                        "Reject symbol");
  auto* dis = transform_cmd->add_flag("--disambiguate", transform.disambiguate);
  auto* trm = transform_cmd->add_flag("--trim", transform.trim);
  tot->excludes(dis)->excludes(trm);
  dis->excludes(trm);
  transform_cmd->add_option("-o,--output", transform.output_path,
                            "Machine file (default: standard output)");

  std::string inf_path, inf_output;
  std::size_t inf_len = 0;
  auto* inf_cmd = app.add_subcommand(
      "gen-informant", "Write every (input, output) pair up to a length");
  inf_cmd->add_option("machine", inf_path, "Machine file")->required();
  inf_cmd->add_option("--max-len", inf_len, "Longest input")->required();
  inf_cmd->add_option("-o,--output", inf_output,
                      "Sample file (default: standard output)");

  std::string dot_path;
  auto* dot_cmd = app.add_subcommand("dot", "Print a Graphviz description");
  dot_cmd->add_option("machine", dot_path, "Machine file")->required();

  try {
    app.parse(argc, argv);
    if (!learn_reject.empty()) learn.reject_symbol = single_char(learn_reject);
    if (!totalize_symbol.empty())
      transform.totalize = single_char(totalize_symbol);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : nfti::kExitIntegrity;
  }

  if (*learn_cmd) return nfti::cmd_learn(learn, std::cout, std::cerr);
  if (*eval_cmd)
    return nfti::cmd_eval(eval_path, eval_input, std::cout, std::cerr);
  if (*check_cmd) return nfti::cmd_check(check, std::cout, std::cerr);
  if (*transform_cmd)
    return nfti::cmd_transform(transform, std::cout, std::cerr);
  if (*inf_cmd)
    return nfti::cmd_gen_informant(inf_path, inf_len, inf_output, std::cout,
                                   std::cerr);
  return nfti::cmd_export_dot(dot_path, std::cout, std::cerr);
}
