// test_io.cpp
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

#include <sstream>

#include "doctest.h"
#include "nfti/io.hpp"
#include "nfti/oracle.hpp"
#include "test_support.hpp"

namespace nfti {
namespace {

RawSamples parse_samples(const std::string& text) {
  std::istringstream in(text);
  return read_samples(in);
}

MachineFile parse_machine(const std::string& text) {
  std::istringstream in(text);
  return read_machine(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse_machine(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

TEST_SUITE("io") {

TEST_CASE("sample files") {
  CHECK(parse_samples("a\tx\n\n\tz\r\nab\t\n") ==
        RawSamples{{"a", "x"}, {"", "z"}, {"ab", ""}});
  try {
    parse_samples("a\tx\nb\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_samples("a\tx\ty\n"), ParseError);

  std::ostringstream out;
  write_samples(out, {{"a", "x"}, {"", ""}});
  CHECK(out.str() == "a\tx\n\t\n");
}

TEST_CASE("machine files") {
  const MachineFile f = parse_machine(
      "fst ab xy 0\n"
      "state 0\n"
      "state 1 accept\n"
      "trans 0 a 1 x\n"
      "trans 1 b 1 -\n"
      "epsilon-output y\n");
  CHECK(f.machine.input_alphabet == "ab");
  CHECK(f.machine.accepting == std::set<StateId>{1});
  CHECK(f.machine.transitions ==
        std::vector<Transition>{{0, 'a', 1, "x"}, {1, 'b', 1, ""}});
  CHECK(f.epsilon_output == std::optional<std::string>("y"));
}

TEST_CASE("machine file errors") {
  CHECK(error_line("state 0\n") == 1);
  CHECK(error_line("fst a x 0\nstate 0\nstate 0\n") == 3);
  CHECK(error_line("fst a x 0\nstate 0\nbogus\n") == 3);
  CHECK(error_line("fst a x 0\nstate 0\ntrans 0 ab 0 x\n") == 3);
  CHECK(error_line("fst a x 0\nstate x\n") == 2);
  CHECK(error_line("") == 0);
  // Validation failures carry no line.
  CHECK(error_line("fst a x 0\nstate 0\ntrans 0 a 3 x\n") == 0);
}

TEST_CASE("round trip") {
  for (const auto& target : testing::battery()) {
    std::ostringstream out;
    write_machine(out, target.machine);
    const MachineFile back = parse_machine(out.str());
    CHECK(validate(back.machine).empty());
    CHECK(back.machine == target.machine);
    CHECK(equivalent_up_to(back.machine, target.machine, 5));
    std::ostringstream again;
    write_machine(again, back.machine);
    CHECK(again.str() == out.str());
  }
}

TEST_CASE("reserved symbols cannot be written") {
  Transducer t = testing::machine(2, {1}, {{0, 'a', 1, "-"}});
  std::ostringstream out;
  CHECK_THROWS_AS(write_machine(out, t), ConfigError);
}

TEST_CASE("dot output") {
  std::ostringstream loop;
  write_dot(loop, testing::machine(1, {0}, {{0, 'a', 0, "x"}}));
  CHECK(loop.str() ==
        "digraph FST {\n"
        "rankdir = LR;\n"
        "node [shape = circle];\n"
        "0 [label = \"0\", shape = doublecircle, style = bold];\n"
        "0 -> 0 [label = \"a/x\"];\n"
        "}\n");
  std::ostringstream empty;
  write_dot(empty, empty_transducer("a"));
  CHECK(empty.str().find("->") == std::string::npos);
  CHECK(empty.str().find("0 [label") != std::string::npos);
}

}  // TEST_SUITE

}  // namespace
}  // namespace nfti
