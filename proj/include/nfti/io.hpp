// io.hpp
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
// Text formats.
//
// Sample file: one pair per line, input TAB output. An empty field is the
// empty string. Empty lines are ignored.
//
// Machine file:
//
//   fst <input symbols> <output symbols> <initial>
//   state <id> [accept]
//   trans <src> <symbol> <dst> <output>
//   epsilon-output <output>
//
// Alphabets are written as one word of characters; `-` stands for the
// empty alphabet or the empty output. Symbols may not be `-` or
// whitespace. The epsilon-output line is optional and records the output
// of the empty input when it differs from the machine's.

#ifndef NFTI_IO_HPP_
#define NFTI_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>

#include "nfti/core.hpp"
#include "nfti/infer.hpp"

namespace nfti {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads samples in file order. Throws ParseError on a line without a TAB.
RawSamples read_samples(std::istream& in);
void write_samples(std::ostream& out, const RawSamples& samples);

struct MachineFile {
  Transducer machine;
  std::optional<std::string> epsilon_output;
};

/// Parses and validates a machine. Throws ParseError.
MachineFile read_machine(std::istream& in);
void write_machine(std::ostream& out, const Transducer& t,
                   const std::optional<std::string>& epsilon_output = {});

/// Graphviz rendering: the initial state is bold, accepting states are
/// double circles, edges are labeled `symbol/output`.
void write_dot(std::ostream& out, const Transducer& t);

}  // namespace nfti

#endif  // NFTI_IO_HPP_
