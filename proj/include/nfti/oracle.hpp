// oracle.hpp
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
// Brute-force reference procedures. Everything here works by exhaustive
// enumeration up to a length bound and shares no code with the learner
// beyond the data model.

#ifndef NFTI_ORACLE_HPP_
#define NFTI_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nfti/core.hpp"
#include "nfti/ptree.hpp"

namespace nfti {

/// Input with more than one output.
class FunctionalityError : public Error {
 public:
  FunctionalityError(std::string input, std::set<std::string> outputs);
  const std::string& input() const { return input_; }
  const std::set<std::string>& outputs() const { return outputs_; }

 private:
  std::string input_;
  std::set<std::string> outputs_;
};

struct Counterexample {
  std::string input;
  std::string detail;
};

struct BoundedCheckReport {
  std::string property;
  std::size_t bound = 0;
  bool verdict = true;
  std::optional<Counterexample> counterexample;

  explicit operator bool() const { return verdict; }
  /// One line, e.g. "functional up to 6: yes".
  std::string summary() const;
};

/// Outputs of `t` on `input`; empty for inputs with foreign symbols.
std::set<std::string> outputs_of(const Transducer& t, std::string_view input);

/// Number of accepting paths over `input`, saturated at `cap`.
std::uint64_t count_accepting_paths(const Transducer& t, std::string_view input,
                                    std::uint64_t cap = 2);

/// Same outputs on every input of length <= max_len over the union of both
/// input alphabets. The counterexample is the least such input.
BoundedCheckReport equivalent_up_to(const Transducer& a, const Transducer& b,
                                    std::size_t max_len);

BoundedCheckReport check_functional_up_to(const Transducer& t,
                                          std::size_t max_len);

/// No input of length <= max_len has two accepting paths.
BoundedCheckReport check_unambiguous_up_to(const Transducer& t,
                                           std::size_t max_len);

/// For all paths p1, p2 from the initial state with inputs of length
/// <= max_len: if input and output of p1 prefix those of p2, then p1 is a
/// prefix-path of p2.
BoundedCheckReport check_local_prefix_preservation_up_to(const Transducer& t,
                                                         std::size_t max_len);

/// (input, output) for every input of length <= max_len in the domain, in
/// length-lexicographic order. Throws FunctionalityError on an input with
/// several outputs.
std::vector<std::pair<std::string, std::string>> generate_informant(
    const Transducer& t, std::size_t max_len);

struct EnumerationStats {
  std::uint64_t nodes = 0;
};

/// First machine with at most `max_states` states, in a fixed enumeration
/// order, that maps every sampled input to exactly its sampled output.
///
/// Order: state count ascending; state 0 initial; accepting sets by
/// bitmask; then, for each (source, symbol, target) triple in lexicographic
/// order, "no transition" before outputs in length-lexicographic order. At
/// most one transition per triple. Outputs range over substrings of sample
/// outputs.
std::optional<Transducer> enumerate_minimal_consistent(
    const SampleSet& s, std::size_t max_states,
    EnumerationStats* stats = nullptr);

}  // namespace nfti

#endif  // NFTI_ORACLE_HPP_
