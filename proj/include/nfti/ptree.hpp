// ptree.hpp
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
// Onward prefix tree transducer built from pair derivatives of a sample set.
//
// Every tree state q is identified by the input/output prefix pair (i, o)
// that leads to it and carries the residual S(q): the samples whose input
// starts with i and output starts with o, with both prefixes removed. For a
// state with residual S and an input symbol c the builder creates
//
//   * the exact branch c/a when (c, a) is in S,
//   * for every output symbol g, the branch c/gp where p is the longest
//     common prefix of the outputs of the (c, g)-derivative of S, unless the
//     exact branch exists and a is a prefix of gp.
//
// Children are numbered in creation order; the exact branch comes first and
// output symbols are visited in alphabet order.

#ifndef NFTI_PTREE_HPP_
#define NFTI_PTREE_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nfti/core.hpp"

namespace nfti {

/// A finite function from input strings to output strings.
class SampleSet {
 public:
  using Map = std::map<std::string, std::string>;

  SampleSet() = default;
  SampleSet(std::initializer_list<std::pair<const std::string, std::string>> pairs);

  /// Throws ConflictError when `input` is already mapped to another output.
  void insert(std::string input, std::string output);

  bool contains(std::string_view input, std::string_view output) const;
  const std::string* find(std::string_view input) const;

  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }
  Map::const_iterator begin() const { return pairs_.begin(); }
  Map::const_iterator end() const { return pairs_.end(); }
  const Map& pairs() const { return pairs_; }

  /// Characters used on the input and output side.
  std::string input_symbols() const;
  std::string output_symbols() const;
  std::size_t max_input_length() const;
  std::size_t max_output_length() const;

  bool operator==(const SampleSet&) const = default;

 private:
  Map pairs_;
};

/// {(u, v) : (input·u, output·v) ∈ s}.
SampleSet derivative(const SampleSet& s, std::string_view input,
                     std::string_view output);

/// Longest common prefix. Throws std::invalid_argument on an empty set.
std::string lcp(const std::vector<std::string>& strings);

struct TreeNode {
  std::string input;
  std::string output;
  SampleSet residual;
};

using PTreeAnnotation = std::map<StateId, TreeNode>;

struct PrefixTree {
  Transducer machine;
  PTreeAnnotation annotation;
};

struct PrefixTreeOptions {
  /// Input alphabet of the machine; defaults to the symbols of the samples.
  std::string input_alphabet;
  /// Output alphabet; defaults to the symbols of the samples.
  std::string output_alphabet;
  /// When a symbol has continuation samples whose remaining output is empty
  /// and there is no exact pair for it, route all of that symbol's samples
  /// through a single empty-output branch instead of failing. Needed for
  /// acceptor-like data where long paths write nothing.
  bool epsilon_branches = false;
};

/// Throws InconsistencyError when some sample cannot be placed on a branch.
PrefixTree build_prefix_tree(const SampleSet& s,
                             const PrefixTreeOptions& options = {});

/// One arm per sample; the first transition of each arm writes the whole
/// output.
Transducer build_star(const SampleSet& s, std::string input_alphabet = {});

/// Tree states sorted by input prefix in length-lexicographic order, ties
/// broken the same way on the output prefix.
std::vector<StateId> state_order(const PTreeAnnotation& annotation);

/// Renumbers the tree so that state ids follow state_order().
PrefixTree renumber_by_order(const PrefixTree& tree);

/// Renumbers the tree so that `order[k]` becomes state k.
PrefixTree renumber(const PrefixTree& tree, const std::vector<StateId>& order);

}  // namespace nfti

#endif  // NFTI_PTREE_HPP_
