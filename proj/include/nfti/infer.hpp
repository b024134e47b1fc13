// infer.hpp
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
// The learner. Builds the prefix tree of the samples, then tries to merge
// every state into each earlier state in length-lexicographic order of the
// prefixes that identify them. The empty input is handled on the side: its
// output is stored separately and the machine only records whether the
// empty input belongs to the domain.

#ifndef NFTI_INFER_HPP_
#define NFTI_INFER_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nfti/core.hpp"
#include "nfti/merge.hpp"
#include "nfti/ptree.hpp"

namespace nfti {

using RawSamples = std::vector<std::pair<std::string, std::string>>;

enum class TieBreak {
  kLexLen,         // Equal input prefixes ordered by output prefix.
  kCreationOrder,  // Equal input prefixes ordered by tree creation order.
};

struct LearnerConfig {
  int max_merge_passes = 1;
  TieBreak order_tie_break = TieBreak::kLexLen;
  bool emit_trace = false;
  /// Receives trace lines; when unset they are collected in the model.
  std::function<void(const std::string&)> trace_sink;
  /// Samples whose output is exactly this symbol are negative examples:
  /// their inputs must stay outside the learned domain.
  std::optional<Symbol> reject_symbol;
  /// Forwarded to every merge session.
  std::function<void(const Transducer&, const Transducer&, const PushBack&)>
      on_push_back;
  /// Called with the hypothesis before and after every committed merge.
  std::function<void(const Transducer&, const Transducer&, const MergeResult&)>
      on_commit;
};

struct LearnedModel {
  Transducer machine;
  std::optional<std::string> epsilon_output;
  std::size_t merges = 0;
  std::size_t attempts = 0;
  std::vector<std::string> trace;

  /// Outputs for `input`, with the stored empty-input output applied.
  std::set<std::string> transduce(std::string_view input) const;
};

/// Removes empty-input pairs and returns their output separately; (ε, ε)
/// is kept in the set iff an empty-input pair was present. Throws
/// ConflictError on contradicting pairs.
std::pair<SampleSet, std::optional<std::string>> split_epsilon(
    const RawSamples& samples);

/// Tree states in learning order.
std::vector<StateId> state_order(const PTreeAnnotation& annotation,
                                 TieBreak tie_break);

LearnedModel infer(const RawSamples& samples, const LearnerConfig& config = {});

}  // namespace nfti

#endif  // NFTI_INFER_HPP_
