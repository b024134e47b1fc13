// test_ptree.cpp
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

// The state annotated with (input, output).
StateId node(const PrefixTree& t, const std::string& in, const std::string& out) {
  for (const auto& [q, n] : t.annotation) {
    if (n.input == in && n.output == out) return q;
  }
  FAIL("no node " << in << ":" << out);
  return 0;
}

bool has_edge(const Transducer& t, StateId src, char sym, StateId dst,
              const std::string& out) {
  for (const auto& tr : t.transitions) {
    if (tr == Transition{src, sym, dst, out}) return true;
  }
  return false;
}

TEST_SUITE("ptree") {

TEST_CASE("derivative") {
  const SampleSet s{{"ab", "xy"}, {"ac", "xz"}, {"b", "w"}};
  CHECK(derivative(s, "a", "x") == SampleSet{{"b", "y"}, {"c", "z"}});
  CHECK(derivative(SampleSet{{"a", "x"}}, "a", "x") == SampleSet{{"", ""}});
  CHECK(derivative(SampleSet{{"a", "x"}}, "b", "").empty());
}

TEST_CASE("lcp") {
  CHECK(lcp({"abc", "abd"}) == "ab");
  CHECK(lcp({"x"}) == "x");
  CHECK(lcp({"x", "y"}) == "");
  CHECK_THROWS(lcp({}));
}

TEST_CASE("sample set rejects two outputs for one input") {
  SampleSet s;
  s.insert("a", "x");
  s.insert("a", "x");
  CHECK_THROWS_AS(s.insert("a", "y"), ConflictError);
}

TEST_CASE("tree of a chain") {
  const PrefixTree t = build_prefix_tree(SampleSet{{"a", "x"}, {"aa", "xx"}});
  const StateId r = node(t, "", "");
  const StateId q1 = node(t, "a", "x");
  const StateId q2 = node(t, "aa", "xx");
  CHECK(t.machine.num_states() == 3);
  CHECK(has_edge(t.machine, r, 'a', q1, "x"));
  CHECK(has_edge(t.machine, q1, 'a', q2, "x"));
  CHECK(t.machine.accepting == std::set<StateId>{q1, q2});
}

TEST_CASE("tree with an output branch") {
  const PrefixTree t = build_prefix_tree(SampleSet{{"a", "x"}, {"ab", "yz"}});
  const StateId r = node(t, "", "");
  const StateId ax = node(t, "a", "x");
  const StateId ayz = node(t, "a", "yz");
  const StateId abyz = node(t, "ab", "yz");
  CHECK(t.machine.num_states() == 4);
  CHECK(has_edge(t.machine, r, 'a', ax, "x"));
  CHECK(has_edge(t.machine, r, 'a', ayz, "yz"));
  CHECK(has_edge(t.machine, ayz, 'b', abyz, ""));
  CHECK(t.machine.accepting == std::set<StateId>{ax, abyz});
  CHECK(t.annotation.at(ayz).residual == SampleSet{{"b", ""}});
}

TEST_CASE("tree of the empty pair") {
  const PrefixTree t = build_prefix_tree(SampleSet{{"", ""}});
  CHECK(t.machine.num_states() == 1);
  CHECK(t.machine.is_accepting(t.machine.initial));
}

TEST_CASE("stranded continuation is an inconsistency") {
  // "ab" writes nothing beyond the root while "a" is not sampled.
  CHECK_THROWS_AS(build_prefix_tree(SampleSet{{"ab", ""}}), InconsistencyError);
  PrefixTreeOptions eps;
  eps.epsilon_branches = true;
  const PrefixTree t = build_prefix_tree(SampleSet{{"ab", ""}}, eps);
  CHECK(transduce(t.machine, "ab") == std::set<std::string>{""});
}

TEST_CASE("star") {
  const Transducer s = build_star(SampleSet{{"ab", "xyz"}});
  CHECK(s.num_states() == 3);
  CHECK(has_edge(s, 0, 'a', 1, "xyz"));
  CHECK(has_edge(s, 1, 'b', 2, ""));
  CHECK(s.accepting == std::set<StateId>{2});

  const Transducer two = build_star(SampleSet{{"a", "x"}, {"b", "y"}});
  CHECK(two.num_states() == 3);
  CHECK(transduce(two, "a") == std::set<std::string>{"x"});
  CHECK(transduce(two, "b") == std::set<std::string>{"y"});

  const Transducer none = build_star(SampleSet{});
  CHECK(none.num_states() == 1);
  CHECK(none.accepting.empty());
}

TEST_CASE("state order") {
  PTreeAnnotation ann;
  ann[0] = {"", "", {}};
  ann[3] = {"aa", "", {}};
  ann[1] = {"b", "", {}};
  ann[2] = {"a", "", {}};
  CHECK(state_order(ann) == std::vector<StateId>{0, 2, 1, 3});

  PTreeAnnotation ties;
  ties[0] = {"", "", {}};
  ties[1] = {"a", "yz", {}};
  ties[2] = {"a", "x", {}};
  CHECK(state_order(ties) == std::vector<StateId>{0, 2, 1});

  PTreeAnnotation single;
  single[0] = {"", "", {}};
  CHECK(state_order(single) == std::vector<StateId>{0});
}

TEST_CASE("renumbering follows the state order") {
  const PrefixTree t = renumber_by_order(
      build_prefix_tree(SampleSet{{"a", "x"}, {"ab", "yz"}, {"b", "w"}}));
  const std::vector<StateId> order = state_order(t.annotation);
  for (std::size_t k = 0; k < order.size(); ++k) CHECK(order[k] == k);
}

TEST_CASE("tree laws on conforming samples") {
  std::mt19937 rng(101);
  for (std::size_t run = 0; run < 60; ++run) {
    SampleSet s;
    for (const auto& [in, out] : testing::random_conforming_samples(rng, run))
      s.insert(in, out);
    const PrefixTree t = build_prefix_tree(s);
    for (const auto& [in, out] : s)
      CHECK(transduce(t.machine, in) == std::set<std::string>{out});
    for (const auto& w : words_up_to(t.machine.input_alphabet,
                                     s.max_input_length() + 1)) {
      if (s.find(w) == nullptr) CHECK(transduce(t.machine, w).empty());
    }
    CHECK(testing::sibling_property(t.machine));
    CHECK(check_local_prefix_preservation_up_to(t.machine,
                                                s.max_input_length()));
    // Each residual is the derivative of the root samples.
    for (const auto& [q, n] : t.annotation)
      CHECK(n.residual == derivative(s, n.input, n.output));
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace nfti
