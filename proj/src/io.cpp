// io.cpp
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

#include "nfti/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace nfti {

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(line == 0 ? message
                      : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

RawSamples read_samples(std::istream& in) {
  RawSamples samples;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(n, "expected input TAB output");
    std::string output = line.substr(tab + 1);
    if (output.find('\t') != std::string::npos)
      throw ParseError(n, "more than one TAB");
    samples.emplace_back(line.substr(0, tab), std::move(output));
  }
  return samples;
}

void write_samples(std::ostream& out, const RawSamples& samples) {
  for (const auto& [in, o] : samples) out << in << '\t' << o << '\n';
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream s(line);
  std::vector<std::string> words;
  std::string w;
  while (s >> w) words.push_back(w);
  return words;
}

StateId parse_id(const std::string& word, std::size_t line) {
  StateId q = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), q);
  if (ec != std::errc() || ptr != word.data() + word.size())
    throw ParseError(line, "bad state id '" + word + "'");
  return q;
}

std::string parse_string(const std::string& word) {
  return word == "-" ? std::string() : word;
}

std::string show_string(const std::string& s) { return s.empty() ? "-" : s; }

}  // namespace

MachineFile read_machine(std::istream& in) {
  MachineFile file;
  Transducer& t = file.machine;
  bool header = false;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    const std::vector<std::string> w = split(line);
    if (w.empty()) continue;
    const std::string& kind = w[0];
    if (!header) {
      if (kind != "fst" || w.size() != 4)
        throw ParseError(n, "expected 'fst <input> <output> <initial>'");
      t.input_alphabet = make_alphabet(parse_string(w[1]));
      t.output_alphabet = make_alphabet(parse_string(w[2]));
      t.initial = parse_id(w[3], n);
      header = true;
    } else if (kind == "state") {
      if (w.size() < 2 || w.size() > 3 || (w.size() == 3 && w[2] != "accept"))
        throw ParseError(n, "expected 'state <id> [accept]'");
      const StateId q = parse_id(w[1], n);
      if (t.has_state(q)) throw ParseError(n, "state " + w[1] + " repeated");
      t.add_state(q, w.size() == 3);
    } else if (kind == "trans") {
      if (w.size() != 5 || w[2].size() != 1 || w[2] == "-")
        throw ParseError(n, "expected 'trans <src> <symbol> <dst> <output>'");
      t.add_transition(parse_id(w[1], n), w[2][0], parse_id(w[3], n),
                       parse_string(w[4]));
    } else if (kind == "epsilon-output") {
      if (w.size() != 2) throw ParseError(n, "expected 'epsilon-output <out>'");
      file.epsilon_output = parse_string(w[1]);
    } else {
      throw ParseError(n, "unknown line kind '" + kind + "'");
    }
  }
  if (!header) throw ParseError(n, "missing 'fst' header");
  const std::vector<Violation> problems = validate(t);
  if (!problems.empty()) throw ParseError(0, problems.front().detail);
  std::sort(t.transitions.begin(), t.transitions.end());
  return file;
}

void write_machine(std::ostream& out, const Transducer& t,
                   const std::optional<std::string>& epsilon_output) {
  for (char c : t.input_alphabet + t.output_alphabet) {
    if (c == '-' || std::isspace(static_cast<unsigned char>(c)))
      throw ConfigError(std::string("symbol '") + c +
                        "' cannot be written to a machine file");
  }
  out << "fst " << show_string(t.input_alphabet) << ' '
      << show_string(t.output_alphabet) << ' ' << t.initial << '\n';
  for (StateId q : t.states) {
    out << "state " << q;
    if (t.is_accepting(q)) out << " accept";
    out << '\n';
  }
  std::vector<Transition> sorted = t.transitions;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& tr : sorted) {
    out << "trans " << tr.src << ' ' << tr.symbol << ' ' << tr.dst << ' '
        << show_string(tr.output) << '\n';
  }
  if (epsilon_output)
    out << "epsilon-output " << show_string(*epsilon_output) << '\n';
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

void write_dot(std::ostream& out, const Transducer& t) {
  out << "digraph FST {\n"
      << "rankdir = LR;\n"
      << "node [shape = circle];\n";
  for (StateId q : t.states) {
    out << q << " [label = \"" << q << "\"";
    if (t.is_accepting(q)) out << ", shape = doublecircle";
    if (q == t.initial) out << ", style = bold";
    out << "];\n";
  }
  for (const auto& tr : t.transitions) {
    const std::string label = std::string(1, tr.symbol) + "/" +
                              (tr.output.empty() ? "<eps>" : tr.output);
    out << tr.src << " -> " << tr.dst << " [label = \"" << escape(label)
        << "\"];\n";
  }
  out << "}\n";
}

}  // namespace nfti
