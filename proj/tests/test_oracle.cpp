// test_oracle.cpp
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
#include "nfti/oracle.hpp"
#include "nfti/ptree.hpp"
#include "test_support.hpp"

namespace nfti {
namespace {

using testing::machine;

Transducer loop() { return machine(1, {0}, {{0, 'a', 0, "x"}}); }

TEST_SUITE("oracle") {

TEST_CASE("outputs and path counts") {
  const Transducer t = machine(3, {1, 2}, {{0, 'a', 1, "x"}, {0, 'a', 2, "x"}});
  CHECK(outputs_of(t, "a") == std::set<std::string>{"x"});
  CHECK(outputs_of(t, "c").empty());
  CHECK(count_accepting_paths(t, "a") == 2);
  CHECK(count_accepting_paths(t, "a", 1) == 1);
  CHECK(count_accepting_paths(t, "aa") == 0);
}

TEST_CASE("bounded equivalence") {
  const Transducer t = testing::battery()[2].machine;
  CHECK(equivalent_up_to(t, t, 5));
  CHECK(equivalent_up_to(trim(t), t, 5));

  SampleSet s;
  for (const auto& [in, out] : generate_informant(t, 3)) s.insert(in, out);
  const Transducer star = build_star(s);
  SampleSet perturbed = s;
  SampleSet changed;
  for (const auto& [in, out] : s) changed.insert(in, in == "aba" ? out + "y" : out);
  const Transducer other = build_star(changed);
  CHECK(equivalent_up_to(star, build_star(perturbed), 3));
  const BoundedCheckReport r = equivalent_up_to(star, other, 3);
  CHECK(!r.verdict);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->input == "aba");
}

TEST_CASE("bounded functionality") {
  CHECK(check_functional_up_to(testing::battery()[2].machine, 6));
  const BoundedCheckReport r = check_functional_up_to(
      machine(3, {1, 2}, {{0, 'a', 1, "x"}, {0, 'a', 2, "y"}}), 6);
  CHECK(!r.verdict);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->input == "a");
  CHECK(r.summary().rfind("functional up to 6: no (input \"a\"", 0) == 0);
}

TEST_CASE("bounded unambiguity") {
  CHECK(check_unambiguous_up_to(loop(), 5));
  const BoundedCheckReport r = check_unambiguous_up_to(
      machine(3, {1, 2}, {{0, 'a', 1, "x"}, {0, 'a', 2, "x"}}), 5);
  CHECK(!r.verdict);
  CHECK(r.counterexample->input == "a");
}

TEST_CASE("local prefix preservation") {
  CHECK(check_local_prefix_preservation_up_to(
      machine(3, {2}, {{0, 'a', 1, "x"}, {1, 'b', 2, "y"}}), 6));
  const BoundedCheckReport r = check_local_prefix_preservation_up_to(
      machine(3, {1, 2}, {{0, 'a', 1, ""}, {0, 'a', 2, "x"}}), 6);
  CHECK(!r.verdict);
  CHECK(r.counterexample->input == "a");
  for (const auto& target : testing::battery()) {
    CHECK_MESSAGE(check_local_prefix_preservation_up_to(
                      target.machine, 2 * target.states + 2),
                  target.name);
  }
}

TEST_CASE("informants") {
  CHECK(generate_informant(loop(), 3) ==
        RawSamples{{"", ""}, {"a", "x"}, {"aa", "xx"}, {"aaa", "xxx"}});
  const Transducer open = machine(2, {1}, {{0, 'a', 1, "x"}, {1, 'a', 1, "x"}});
  CHECK(generate_informant(open, 3).size() == 3);
  CHECK(generate_informant(empty_transducer("ab"), 4).empty());
  const RawSamples total = generate_informant(testing::battery()[1].machine, 2);
  std::size_t nonempty = 0;
  for (const auto& [in, out] : total) nonempty += in.empty() ? 0 : 1;
  CHECK(nonempty == 6);
  CHECK_THROWS_AS(
      generate_informant(
          machine(3, {1, 2}, {{0, 'a', 1, "x"}, {0, 'a', 2, "y"}}), 2),
      FunctionalityError);
}

TEST_CASE("enumeration learner") {
  const SampleSet one{{"a", "x"}};
  const auto m = enumerate_minimal_consistent(one, 3);
  REQUIRE(m);
  CHECK(transduce(*m, "a") == std::set<std::string>{"x"});

  const auto e = enumerate_minimal_consistent(SampleSet{}, 3);
  REQUIRE(e);
  CHECK(e->num_states() == 1);

  const SampleSet two{{"a", "x"}, {"aa", "y"}};
  // "aa" must leave the first step on a path that does not accept "a".
  CHECK(!enumerate_minimal_consistent(two, 1));
  CHECK(!enumerate_minimal_consistent(two, 2));
  const auto m2 = enumerate_minimal_consistent(two, 3);
  REQUIRE(m2);
  CHECK(m2->num_states() == 3);
  for (const auto& [in, out] : two)
    CHECK(transduce(*m2, in) == std::set<std::string>{out});
}

}  // TEST_SUITE

}  // namespace
}  // namespace nfti
