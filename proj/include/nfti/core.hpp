// core.hpp
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
// Transducer data model: nondeterministic machines without epsilon
// transitions whose transitions carry output strings.

#ifndef NFTI_CORE_HPP_
#define NFTI_CORE_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nfti {

using StateId = std::uint32_t;
using Symbol = char;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input symbol outside the machine's input alphabet.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// Sample data that cannot be represented (or is contradictory).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Two different outputs given for the same input.
class ConflictError : public Error {
 public:
  using Error::Error;
};

/// Invalid arguments, e.g. a reserved symbol already in use.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct Transition {
  StateId src = 0;
  Symbol symbol = 0;
  StateId dst = 0;
  std::string output;

  auto operator<=>(const Transition&) const = default;
  bool operator==(const Transition&) const = default;
};

/// Returns the sorted set of distinct characters of `chars`.
std::string make_alphabet(std::string_view chars);

/// A finite-state transducer. States are opaque ordered identifiers; they
/// need not be contiguous. Transitions are kept sorted by (src, symbol, dst).
struct Transducer {
  std::string input_alphabet;
  std::string output_alphabet;
  StateId initial = 0;
  std::set<StateId> states;
  std::set<StateId> accepting;
  std::vector<Transition> transitions;

  bool is_accepting(StateId q) const { return accepting.count(q) != 0; }
  bool has_state(StateId q) const { return states.count(q) != 0; }
  std::size_t num_states() const { return states.size(); }

  /// Adds a state (no-op when present) and returns it.
  StateId add_state(StateId q, bool accept = false);
  /// Adds a fresh state numbered one past the current maximum.
  StateId new_state(bool accept = false);
  void add_transition(StateId src, Symbol symbol, StateId dst,
                      std::string output);

  /// Sorts transitions and extends the alphabets with every symbol in use.
  void normalize();

  /// Indices of transitions leaving each state.
  std::map<StateId, std::vector<std::size_t>> out_index() const;

  bool operator==(const Transducer&) const = default;
};

/// Builds an empty-relation machine: one non-accepting initial state.
Transducer empty_transducer(std::string input_alphabet,
                            std::string output_alphabet = {});

/// One reachable (state, pending output) pair.
struct ConfigEntry {
  StateId state = 0;
  std::string output;

  auto operator<=>(const ConfigEntry&) const = default;
  bool operator==(const ConfigEntry&) const = default;
};

using Configuration = std::set<ConfigEntry>;

struct Path {
  StateId start = 0;
  std::vector<Transition> steps;

  std::string input() const;
  std::string output() const;
  StateId end() const { return steps.empty() ? start : steps.back().dst; }
  bool operator==(const Path&) const = default;
};

/// Configuration reached after reading `input` from the initial state.
Configuration configuration_after(const Transducer& t, std::string_view input);

/// All outputs produced by accepting paths over `input`.
std::set<std::string> transduce(const Transducer& t, std::string_view input);

/// Removes every state that is not on a path from the initial state to an
/// accepting state. When no accepting state is reachable the result is the
/// single-state empty machine.
Transducer trim(const Transducer& t);

struct Violation {
  std::string kind;
  std::string detail;
};

/// Structural well-formedness check; an empty result means the machine is
/// valid.
std::vector<Violation> validate(const Transducer& t);

/// Enumerates every word over `alphabet` of length at most `max_len` in
/// length-lexicographic order.
std::vector<std::string> words_up_to(std::string_view alphabet,
                                     std::size_t max_len);

/// Length-then-lexicographic comparison.
bool lex_len_less(std::string_view a, std::string_view b);

}  // namespace nfti

#endif  // NFTI_CORE_HPP_
