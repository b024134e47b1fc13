// merge.hpp
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
// State merging with ambiguity elimination.
//
// A session works on a private copy of the hypothesis. States are never
// physically merged while the session runs; instead an alias map records
// which states are identified, and the quotient is materialized on commit.
// Merging two states may make the quotient ambiguous. Each witness (two
// distinct same-input accepting paths) is unified position by position:
// outputs are equalized by pushing suffixes back onto successor edges, the
// states along both paths are identified and the now identical edges are
// fused. The session commits once no witness remains.

#ifndef NFTI_MERGE_HPP_
#define NFTI_MERGE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfti/ambiguity.hpp"
#include "nfti/core.hpp"

namespace nfti {

/// A suffix moved from `edge` onto the outgoing edges of its target.
struct PushBack {
  Transition edge;  // Before the operation.
  std::string suffix;
  // Facts about the target class observed when the push-back was applied.
  StateId target = 0;
  std::size_t target_incoming = 0;
  bool target_accepting = false;
  bool target_initial = false;
};

enum class MergeFailure {
  kNone,
  kRootAsymmetry,     // (i)
  kPushBackBlocked,   // (ii)
  kOutputConflict,    // (iii)
  kNegativeAccepted,  // The quotient accepts a negative example.
  kNoProgress,
};

/// Short label used in traces, e.g. "(ii) push-back blocked".
std::string_view failure_label(MergeFailure f);

struct MergeOptions {
  /// Inputs that must stay outside the domain.
  std::vector<std::string> negatives;
  /// Reject merges when a witness position maps exactly one side into the
  /// merged root pair. Checked only on path prefixes that are paths of the
  /// hypothesis itself.
  bool root_pair_rule = true;
  /// Called after every push-back with the quotient before and after it.
  std::function<void(const Transducer&, const Transducer&, const PushBack&)>
      on_push_back;
  /// Upper bound on unified witnesses per session.
  std::size_t max_witnesses = 100000;
};

struct MergeResult {
  std::optional<Transducer> machine;
  MergeFailure failure = MergeFailure::kNone;
  std::string detail;
  std::vector<PushBack> push_log;
  std::size_t witnesses = 0;

  bool ok() const { return machine.has_value(); }
};

class MergeSession {
 public:
  explicit MergeSession(const Transducer& h, MergeOptions options = {});

  /// Sets the pair the session was opened for (used by the root-pair rule).
  void set_root_pair(StateId a, StateId b);

  /// Identifies the classes of `a` and `b` and fuses duplicate edges.
  void merge_states(StateId a, StateId b);

  /// Least witness of the current quotient, as indices into edges().
  std::optional<AmbiguousPathPair> next_witness() const;

  /// Makes both paths of `w` one path. On failure the session is left in an
  /// unspecified state and should be discarded.
  MergeFailure unify(const AmbiguousPathPair& w);

  /// Moves `suffix` from edge `index` onto the outgoing edges of its target
  /// class. Fails, changing nothing, when the suffix does not end the edge
  /// output or the target is accepting, initial, or has other incoming edges.
  bool push_back(std::size_t index, std::string_view suffix);

  /// Unifies witnesses until none is left.
  MergeFailure run();

  /// The current quotient machine, trimmed. Class representatives are the
  /// least member ids.
  Transducer quotient() const;

  const std::vector<Transition>& edges() const { return edges_; }
  bool alive(std::size_t i) const { return alive_[i]; }
  const AliasMap& aliases() const { return aliases_; }
  const std::vector<PushBack>& push_log() const { return log_; }
  const std::string& detail() const { return detail_; }
  std::size_t witnesses() const { return witnesses_; }

 private:
  std::size_t resolve(std::size_t i) const;
  void fuse();
  std::size_t incoming(StateId cls) const;
  bool class_accepting(StateId cls) const;
  bool jump_free(const std::vector<std::size_t>& path, std::size_t k) const;
  bool equalize(std::size_t e, std::size_t f);

  const Transducer& base_;
  MergeOptions options_;
  std::vector<Transition> edges_;
  std::vector<bool> alive_;
  std::vector<std::size_t> fused_into_;
  AliasMap aliases_;
  std::optional<std::pair<StateId, StateId>> root_pair_;
  std::vector<PushBack> log_;
  std::string detail_;
  std::size_t witnesses_ = 0;
};

/// Attempts to merge state `b` into state `a` (a < b) of the trim
/// hypothesis `h`. On failure `h` is untouched and the result carries the
/// reason.
MergeResult try_merge(const Transducer& h, StateId a, StateId b,
                      const MergeOptions& options = {});

}  // namespace nfti

#endif  // NFTI_MERGE_HPP_
