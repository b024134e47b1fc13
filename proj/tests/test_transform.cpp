// test_transform.cpp
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
#include "nfti/ambiguity.hpp"
#include "nfti/oracle.hpp"
#include "nfti/transform.hpp"
#include "test_support.hpp"

namespace nfti {
namespace {

using testing::machine;

// Accepting paths for `input`, counted by brute force.
std::uint64_t paths(const Transducer& t, const std::string& input) {
  return count_accepting_paths(t, input, 1000);
}

TEST_SUITE("transform") {

TEST_CASE("input projection") {
  const Nfa one = input_projection(machine(2, {1}, {{0, 'a', 1, "xy"}}));
  CHECK(one.accepts("a"));
  CHECK(!one.accepts(""));
  CHECK(!one.accepts("aa"));

  const Nfa two = input_projection(machine(
      4, {1, 3}, {{0, 'a', 1, "x"}, {0, 'a', 2, "yz"}, {2, 'b', 3, ""}}));
  for (const auto& w : words_up_to("ab", 4))
    CHECK(two.accepts(w) == (w == "a" || w == "ab"));

  const Nfa none = input_projection(empty_transducer("ab"));
  for (const auto& w : words_up_to("ab", 4)) CHECK(!none.accepts(w));
}

TEST_CASE("complement_dfa") {
  const Nfa a = input_projection(machine(2, {1}, {{0, 'a', 1, ""}}, "a"));
  const Nfa c = complement_dfa(a);
  CHECK(c.is_deterministic());
  CHECK(c.is_complete());
  for (const auto& w : words_up_to("a", 6)) CHECK(c.accepts(w) == (w != "a"));

  const Nfa cc = complement_dfa(c);
  for (const auto& w : words_up_to("a", 6)) CHECK(cc.accepts(w) == a.accepts(w));

  const Nfa all =
      input_projection(machine(1, {0}, {{0, 'a', 0, ""}, {0, 'b', 0, ""}}));
  const Nfa nothing = complement_dfa(all);
  for (const auto& w : words_up_to("ab", 5)) CHECK(!nothing.accepts(w));
}

TEST_CASE("totalize a partial machine") {
  const Transducer t = machine(2, {1}, {{0, 'a', 1, "x"}}, "ab");
  const Transducer r = totalize(t, '#');
  for (const auto& w : words_up_to("ab", 4)) {
    if (w.empty()) {
      CHECK(transduce(r, w).empty());
    } else if (w == "a") {
      CHECK(transduce(r, w) == std::set<std::string>{"x"});
    } else {
      CHECK(transduce(r, w) == std::set<std::string>{"#"});
    }
  }
}

TEST_CASE("totalize a total machine and an empty machine") {
  const Transducer total = testing::battery()[1].machine;
  const Transducer r = totalize(total, '#');
  for (const auto& w : words_up_to("ab", 4)) {
    if (w.empty()) continue;
    CHECK(transduce(r, w) == transduce(total, w));
  }
  const Transducer e = totalize(empty_transducer("ab"), '#');
  for (const auto& w : words_up_to("ab", 4)) {
    if (w.empty())
      CHECK(transduce(e, w).empty());
    else
      CHECK(transduce(e, w) == std::set<std::string>{"#"});
  }
}

TEST_CASE("totalize keeps the empty pair") {
  const Transducer t = machine(2, {0, 1}, {{0, 'a', 1, "x"}}, "a");
  CHECK(transduce(totalize(t, '#'), "") == std::set<std::string>{""});
}

TEST_CASE("totalize rejects a reserved symbol") {
  const Transducer t = machine(2, {1}, {{0, 'a', 1, "#"}}, "a");
  CHECK_THROWS_AS(totalize(t, '#'), ConfigError);
}

TEST_CASE("disambiguate two equal branches") {
  const Transducer t =
      machine(3, {1, 2}, {{0, 'a', 1, "x"}, {0, 'a', 2, "x"}});
  CHECK(paths(t, "a") == 2);
  const Transducer d = disambiguate(t);
  CHECK(paths(d, "a") == 1);
  CHECK(transduce(d, "a") == std::set<std::string>{"x"});
  CHECK(!find_ambiguity(d));
}

TEST_CASE("disambiguate two length-2 paths") {
  const Transducer t = machine(4, {3},
                               {{0, 'a', 1, "x"},
                                {0, 'a', 2, "x"},
                                {1, 'b', 3, "y"},
                                {2, 'b', 3, "y"}});
  CHECK(paths(t, "ab") == 2);
  const Transducer d = disambiguate(t);
  for (const auto& w : words_up_to("ab", 4)) {
    CHECK(paths(d, w) <= 1);
    CHECK(transduce(d, w) == transduce(t, w));
  }
}

TEST_CASE("disambiguate keeps a deterministic machine") {
  const Transducer t = testing::battery()[2].machine;
  const Transducer d = disambiguate(t);
  CHECK(equivalent_up_to(t, d, 5));
  CHECK(!find_ambiguity(d));
}

TEST_CASE("union") {
  const Transducer t = testing::battery()[2].machine;
  CHECK(equivalent_up_to(union_of(t, empty_transducer("ab")), t, 4));
  CHECK(equivalent_up_to(union_of(t, t), t, 4));
  const Transducer a = machine(2, {1}, {{0, 'a', 1, "x"}}, "ab");
  const Transducer b = machine(2, {1}, {{0, 'b', 1, "y"}}, "ab");
  const Transducer u = union_of(a, b);
  CHECK(transduce(u, "a") == std::set<std::string>{"x"});
  CHECK(transduce(u, "b") == std::set<std::string>{"y"});
  CHECK(transduce(u, "").empty());
}

TEST_CASE("totalize and disambiguate on random functional machines") {
  std::mt19937 rng(23);
  int checked = 0;
  while (checked < 20) {
    const Transducer t = testing::random_machine(rng, 4);
    if (!check_functional_up_to(t, 5)) continue;
    ++checked;
    const Transducer r = totalize(t, '#');
    const Transducer d = disambiguate(t);
    CHECK(!find_ambiguity(d));
    CHECK(equivalent_up_to(t, d, 5));
    for (const auto& w : words_up_to("ab", 5)) {
      if (w.empty()) continue;
      const auto base = transduce(t, w);
      CHECK(transduce(r, w) == (base.empty() ? std::set<std::string>{"#"} : base));
    }
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace nfti
