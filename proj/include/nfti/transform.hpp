// transform.hpp
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
// Closure constructions on transducers: reduction of a partial function to a
// total one via a reject symbol, and reduction of a functional machine to an
// unambiguous one via a subset-annotated product.

#ifndef NFTI_TRANSFORM_HPP_
#define NFTI_TRANSFORM_HPP_

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "nfti/core.hpp"

namespace nfti {

/// Finite acceptor over the same state-id space as Transducer.
struct Nfa {
  std::string alphabet;
  StateId initial = 0;
  std::set<StateId> states;
  std::set<StateId> accepting;
  std::set<std::tuple<StateId, Symbol, StateId>> transitions;

  bool accepts(std::string_view word) const;
  bool is_deterministic() const;
  bool is_complete() const;
};

/// State of the product used by disambiguate(): a base state together with
/// the set of all states reachable on the same input.
struct PowersetState {
  StateId base = 0;
  std::set<StateId> context;

  auto operator<=>(const PowersetState&) const = default;
};

/// Drops outputs; accepts exactly the domain of the relation.
Nfa input_projection(const Transducer& t);

/// Subset construction followed by negation. The result is deterministic and
/// complete over the alphabet.
Nfa complement_dfa(const Nfa& n);

/// Union of relations through a fresh initial state. The result accepts
/// (ε,ε) iff either operand does.
Transducer union_of(const Transducer& a, const Transducer& b);

/// Maps every non-empty input outside the domain of `t` to `reject`.
/// Throws ConfigError when `reject` already occurs in the output alphabet.
Transducer totalize(const Transducer& t, Symbol reject = '#');

/// Equivalent unambiguous machine, for functional `t`.
Transducer disambiguate(const Transducer& t);

}  // namespace nfti

#endif  // NFTI_TRANSFORM_HPP_
