// test_infer.cpp
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

#include "doctest.h"
#include "nfti/infer.hpp"
#include "nfti/oracle.hpp"
#include "test_support.hpp"

namespace nfti {
namespace {

using testing::machine;

// The hand-built nondeterministic target with a reject sink (state 4).
Transducer branching_target() {
  return machine(5, {1, 3, 4},
                 {{0, 'a', 1, "x"},
                  {0, 'a', 2, "yz"},
                  {2, 'b', 3, ""},
                  {0, 'b', 4, "#"},
                  {1, 'a', 4, "#"},
                  {3, 'a', 4, "#"},
                  {3, 'b', 4, "#"},
                  {4, 'a', 4, ""},
                  {4, 'b', 4, ""}});
}

TEST_SUITE("infer") {

TEST_CASE("split_epsilon") {
  auto [s, eps] = split_epsilon({{"", "z"}, {"a", "x"}});
  CHECK(s == SampleSet{{"", ""}, {"a", "x"}});
  CHECK(eps == std::optional<std::string>("z"));

  auto [s2, eps2] = split_epsilon({{"a", "x"}});
  CHECK(s2 == SampleSet{{"a", "x"}});
  CHECK(!eps2);

  CHECK_THROWS_AS(split_epsilon({{"", "z"}, {"", "w"}}), ConflictError);
}

TEST_CASE("state order tie-breaks") {
  PTreeAnnotation ann;
  ann[0] = {"", "", {}};
  ann[1] = {"a", "yz", {}};
  ann[2] = {"a", "x", {}};
  CHECK(state_order(ann, TieBreak::kLexLen) == std::vector<StateId>{0, 2, 1});
  CHECK(state_order(ann, TieBreak::kCreationOrder) ==
        std::vector<StateId>{0, 1, 2});
}

TEST_CASE("a run of a's becomes a loop") {
  const RawSamples s{{"a", "x"}, {"aa", "xx"}, {"aaa", "xxx"}, {"aaaa", "xxxx"}};
  const LearnedModel m = infer(s);
  CHECK(m.machine.num_states() == 1);
  CHECK(m.machine.transitions == std::vector<Transition>{{0, 'a', 0, "x"}});
  CHECK(testing::consistent(m, s));

  RawSamples with_eps = s;
  with_eps.insert(with_eps.begin(), {"", ""});
  const LearnedModel e = infer(with_eps);
  CHECK(e.machine.num_states() == 1);
  CHECK(e.machine.is_accepting(0));
}

TEST_CASE("even number of a's with reject marks") {
  const RawSamples s = generate_informant(testing::even_a_total(), 6);
  LearnerConfig c;
  c.reject_symbol = '#';
  const LearnedModel m = infer(s, c);
  CHECK(m.machine.num_states() == 2);
  CHECK(equivalent_up_to(m.machine, testing::even_a_acceptor(), 10));
}

TEST_CASE("nondeterministic target") {
  const Transducer t = branching_target();
  REQUIRE(check_functional_up_to(t, 8));
  const RawSamples s = generate_informant(t, 6);
  const LearnedModel m = infer(s);
  CHECK(testing::consistent(m, s));
  CHECK(equivalent_up_to(t, m.machine, 8));
}

TEST_CASE("empty-input output is kept apart") {
  const LearnedModel m = infer({{"", "z"}, {"a", "x"}});
  CHECK(m.epsilon_output == std::optional<std::string>("z"));
  CHECK(m.transduce("") == std::set<std::string>{"z"});
  CHECK(m.transduce("a") == std::set<std::string>{"x"});
}

TEST_CASE("conflicting samples") {
  CHECK_THROWS_AS(infer({{"", "z"}, {"", "w"}}), ConflictError);
  CHECK_THROWS_AS(infer({{"a", "x"}, {"a", "y"}}), ConflictError);
  CHECK_THROWS_AS(infer({{"ab", ""}}), InconsistencyError);
  LearnerConfig bad;
  bad.max_merge_passes = 0;
  CHECK_THROWS_AS(infer({}, bad), ConfigError);
}

TEST_CASE("empty sample list") {
  const LearnedModel m = infer({});
  CHECK(m.machine.num_states() == 1);
  CHECK(m.machine.accepting.empty());
}

TEST_CASE("consistency, determinism and shrinking merges") {
  std::mt19937 rng(71);
  for (std::size_t run = 0; run < 30; ++run) {
    const RawSamples s = testing::random_conforming_samples(rng, run);
    LearnerConfig c;
    bool shrinking = true;
    c.on_commit = [&](const Transducer& before, const Transducer& after,
                      const MergeResult&) {
      shrinking &= after.num_states() < before.num_states();
    };
    const LearnedModel a = infer(s, c);
    const LearnedModel b = infer(s);
    std::string why;
    CHECK_MESSAGE(testing::consistent(a, s, &why), why);
    CHECK(a.machine == b.machine);
    CHECK(shrinking);
  }
}

TEST_CASE("trace") {
  LearnerConfig c;
  c.emit_trace = true;
  const LearnedModel m = infer({{"a", "x"}, {"aa", "y"}}, c);
  REQUIRE(!m.trace.empty());
  CHECK(m.trace.front().rfind("prefix tree: ", 0) == 0);
  bool rejected = false;
  for (const auto& line : m.trace) rejected |= line.rfind("reject ", 0) == 0;
  CHECK(rejected);

  std::vector<std::string> sink;
  c.trace_sink = [&](const std::string& line) { sink.push_back(line); };
  const LearnedModel n = infer({{"a", "x"}, {"aa", "xx"}}, c);
  CHECK(n.trace.empty());
  REQUIRE(sink.size() >= 2);
  CHECK(sink[1].rfind("merge ", 0) == 0);
}

}  // TEST_SUITE

}  // namespace
}  // namespace nfti
