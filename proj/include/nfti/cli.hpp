// cli.hpp
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
// \file
// Command implementations behind the nfti tool. Each command writes its
// results to `out`, diagnostics to `err`, and returns the exit status:
// 0 on success, 1 on a domain failure (rejected input, failed check,
// inconsistent samples), 2 on an integrity failure (unreadable or invalid
// file, non-functional machine).

#ifndef NFTI_CLI_HPP_
#define NFTI_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>

#include "nfti/core.hpp"

namespace nfti {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitIntegrity = 2;

struct LearnCommand {
  std::string samples_path;
  std::string output_path;  // Empty or "-" for standard output.
  bool trace = false;
  int max_passes = 1;
  std::optional<Symbol> reject_symbol;
};

struct CheckCommand {
  std::string machine_path;
  bool functional = false;
  bool ambiguity = false;
  bool lpp = false;
  std::size_t max_len = 6;
};

struct TransformCommand {
  std::string machine_path;
  std::string output_path;
  std::optional<Symbol> totalize;
  bool disambiguate = false;
  bool trim = false;
};

int cmd_learn(const LearnCommand& c, std::ostream& out, std::ostream& err);
int cmd_eval(const std::string& machine_path, const std::string& input,
             std::ostream& out, std::ostream& err);
int cmd_check(const CheckCommand& c, std::ostream& out, std::ostream& err);
int cmd_transform(const TransformCommand& c, std::ostream& out,
                  std::ostream& err);
int cmd_gen_informant(const std::string& machine_path, std::size_t max_len,
                      const std::string& output_path, std::ostream& out,
                      std::ostream& err);
int cmd_export_dot(const std::string& machine_path, std::ostream& out,
                   std::ostream& err);

}  // namespace nfti

#endif  // NFTI_CLI_HPP_
