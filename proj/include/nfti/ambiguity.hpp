// ambiguity.hpp
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
// Ambiguity detection on the squared automaton.
//
// The search explores unordered pairs {p, q} of states reachable by two
// paths reading the same input from the initial state. A pair is flagged
// diverged once the two paths used different transitions. States that are
// aliased (pending merges) are interchangeable: whenever {p, q} is reached,
// so is every {p', q'} with p' ~ p and q' ~ q. The search therefore never
// rewrites the machine; merging two states only adds pairs, so reached sets
// can be updated incrementally.
//
// A diverged pair whose members fall into the same alias class, or whose
// members are both accepting, witnesses two distinct accepting paths.

#ifndef NFTI_AMBIGUITY_HPP_
#define NFTI_AMBIGUITY_HPP_

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nfti/core.hpp"

namespace nfti {

/// Union-find over state ids; the representative of a class is its least
/// member.
class AliasMap {
 public:
  StateId find(StateId q) const;
  /// Merges the classes of `a` and `b`; returns false if already merged.
  bool unite(StateId a, StateId b);
  bool same(StateId a, StateId b) const { return find(a) == find(b); }
  /// Members of the class of `q` in ascending order.
  std::vector<StateId> members(StateId q) const;
  bool trivial() const { return classes_.empty(); }

 private:
  mutable std::unordered_map<StateId, StateId> parent_;
  // Only non-singleton classes are stored, keyed by representative.
  std::unordered_map<StateId, std::vector<StateId>> classes_;
};

struct PairKey {
  StateId first = 0;
  StateId second = 0;
  bool diverged = false;

  static PairKey make(StateId a, StateId b, bool diverged) {
    return a <= b ? PairKey{a, b, diverged} : PairKey{b, a, diverged};
  }
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    std::uint64_t h = (std::uint64_t{k.first} << 32) ^ k.second;
    h = h * 0x9E3779B97F4A7C15ull + (k.diverged ? 1 : 0);
    return std::hash<std::uint64_t>{}(h);
  }
};

inline constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

/// How a pair was first reached. `edge_first`/`edge_second` are transition
/// indices taken from the predecessor's first/second member (kNoEdge for an
/// alias substitution). `swapped` is set when the new pair's first member
/// descends from the predecessor's second member.
struct BackPointer {
  PairKey pred;
  std::size_t edge_first = kNoEdge;
  std::size_t edge_second = kNoEdge;
  bool swapped = false;
  bool root = false;
  std::uint64_t seq = 0;
};

struct PairSearchState {
  AliasMap aliases;
  std::unordered_map<PairKey, BackPointer, PairKeyHash> reached;
  std::deque<PairKey> frontier;
  std::uint64_t next_seq = 0;

  bool contains(StateId a, StateId b, bool diverged) const {
    return reached.count(PairKey::make(a, b, diverged)) != 0;
  }
  /// Whether {a, b} is reached with either flag.
  bool contains(StateId a, StateId b) const {
    return contains(a, b, false) || contains(a, b, true);
  }
};

struct AmbiguousPathPair {
  Path a;
  Path b;
  /// Transition indices (into the searched machine) of both paths.
  std::vector<std::size_t> edges_a;
  std::vector<std::size_t> edges_b;
};

/// Seeds a search with the diagonal pairs of the initial state's class.
PairSearchState start_pair_search(const Transducer& t, AliasMap aliases = {});

/// Continues the search until the frontier is empty, or until a witness
/// pair is reached when `stop_at_witness` is set. Returns the first witness
/// reached during this call, if any.
std::optional<PairKey> extend_reach(const Transducer& t, PairSearchState& st,
                                    bool stop_at_witness = false);

/// Full reachable pair set under `aliases`.
PairSearchState square_reach(const Transducer& t, AliasMap aliases = {});

/// Records the alias keep ~ drop and adds every pair obtained from a reached
/// pair by substituting members of the merged class. The new pairs are
/// queued; extend_reach() explores only from them.
void merge_update(PairSearchState& st, StateId keep, StateId drop);

bool is_witness(const Transducer& t, const AliasMap& aliases,
                const PairKey& key);

/// Two distinct accepting same-input paths from the initial state, or
/// nothing when no reached pair is a witness. Reconverging witnesses are
/// extended along a shortest accepting continuation.
std::optional<AmbiguousPathPair> find_ambiguity(const Transducer& t,
                                                const PairSearchState& st);

/// Convenience: full search without aliases.
std::optional<AmbiguousPathPair> find_ambiguity(const Transducer& t);

/// Witness paths for a specific reached witness pair.
AmbiguousPathPair witness_paths(const Transducer& t, const PairSearchState& st,
                                const PairKey& key);

}  // namespace nfti

#endif  // NFTI_AMBIGUITY_HPP_
