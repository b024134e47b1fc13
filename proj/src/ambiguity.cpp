// ambiguity.cpp
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

#include "nfti/ambiguity.hpp"

#include <algorithm>
#include <map>

namespace nfti {

StateId AliasMap::find(StateId q) const {
  StateId root = q;
  for (auto it = parent_.find(root); it != parent_.end();
       it = parent_.find(root)) {
    root = it->second;
  }
  // Path compression.
  while (q != root) {
    auto it = parent_.find(q);
    StateId next = it->second;
    it->second = root;
    q = next;
  }
  return root;
}

bool AliasMap::unite(StateId a, StateId b) {
  StateId ra = find(a);
  StateId rb = find(b);
  if (ra == rb) return false;
  if (rb < ra) std::swap(ra, rb);
  std::vector<StateId> merged;
  const std::vector<StateId> ma = members(ra);
  const std::vector<StateId> mb = members(rb);
  std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(),
             std::back_inserter(merged));
  parent_[rb] = ra;
  classes_.erase(rb);
  classes_[ra] = std::move(merged);
  return true;
}

std::vector<StateId> AliasMap::members(StateId q) const {
  const StateId r = find(q);
  auto it = classes_.find(r);
  if (it == classes_.end()) return {r};
  return it->second;
}

namespace {

class ClassAcceptance {
 public:
  ClassAcceptance(const Transducer& t, const AliasMap& aliases)
      : t_(t), aliases_(aliases) {}

  bool operator()(StateId q) {
    if (aliases_.trivial()) return t_.is_accepting(q);
    const StateId r = aliases_.find(q);
    auto it = cache_.find(r);
    if (it != cache_.end()) return it->second;
    bool acc = false;
    for (StateId m : aliases_.members(r)) acc |= t_.is_accepting(m);
    cache_.emplace(r, acc);
    return acc;
  }

 private:
  const Transducer& t_;
  const AliasMap& aliases_;
  std::unordered_map<StateId, bool> cache_;
};

bool witness(const AliasMap& aliases, ClassAcceptance& accepting,
             const PairKey& k) {
  if (!k.diverged) return false;
  if (aliases.find(k.first) == aliases.find(k.second)) return true;
  return accepting(k.first) && accepting(k.second);
}

// Inserts `key` if new. Returns true when inserted.
bool add_pair(PairSearchState& st, const PairKey& key, BackPointer bp) {
  bp.seq = st.next_seq;
  auto [it, fresh] = st.reached.emplace(key, bp);
  if (!fresh) return false;
  ++st.next_seq;
  st.frontier.push_back(key);
  return true;
}

// Adds every pair obtained from `cur` by replacing members with aliases.
void add_alias_substitutes(PairSearchState& st, const PairKey& cur,
                           const std::function<void(const PairKey&)>& on_new) {
  const std::vector<StateId> xs = st.aliases.members(cur.first);
  const std::vector<StateId> ys = st.aliases.members(cur.second);
  if (xs.size() == 1 && ys.size() == 1) return;
  for (StateId x : xs) {
    for (StateId y : ys) {
      BackPointer bp;
      bp.pred = cur;
      bp.swapped = x > y;
      PairKey k = PairKey::make(x, y, cur.diverged);
      if (add_pair(st, k, bp)) on_new(k);
    }
  }
}

}  // namespace

bool is_witness(const Transducer& t, const AliasMap& aliases,
                const PairKey& key) {
  ClassAcceptance accepting(t, aliases);
  return witness(aliases, accepting, key);
}

PairSearchState start_pair_search(const Transducer& t, AliasMap aliases) {
  PairSearchState st;
  st.aliases = std::move(aliases);
  BackPointer bp;
  bp.root = true;
  add_pair(st, PairKey{t.initial, t.initial, false}, bp);
  return st;
}

std::optional<PairKey> extend_reach(const Transducer& t, PairSearchState& st,
                                    bool stop_at_witness) {
  const auto out = t.out_index();
  static const std::vector<std::size_t> kNone;
  auto edges_of = [&](StateId q) -> const std::vector<std::size_t>& {
    auto it = out.find(q);
    return it == out.end() ? kNone : it->second;
  };
  ClassAcceptance accepting(t, st.aliases);
  std::optional<PairKey> found;
  auto on_new = [&](const PairKey& k) {
    if (!found && witness(st.aliases, accepting, k)) found = k;
  };
  // The seed pairs may themselves be witnesses.
  for (const PairKey& k : st.frontier) on_new(k);

  while (!st.frontier.empty()) {
    if (stop_at_witness && found) break;
    const PairKey cur = st.frontier.front();
    st.frontier.pop_front();
    add_alias_substitutes(st, cur, on_new);
    for (std::size_t i : edges_of(cur.first)) {
      const Transition& e = t.transitions[i];
      for (std::size_t j : edges_of(cur.second)) {
        const Transition& f = t.transitions[j];
        if (e.symbol != f.symbol) continue;
        BackPointer bp;
        bp.pred = cur;
        bp.edge_first = i;
        bp.edge_second = j;
        bp.swapped = e.dst > f.dst;
        PairKey k = PairKey::make(e.dst, f.dst, cur.diverged || i != j);
        if (add_pair(st, k, bp)) on_new(k);
      }
    }
  }
  return found;
}

PairSearchState square_reach(const Transducer& t, AliasMap aliases) {
  PairSearchState st = start_pair_search(t, std::move(aliases));
  extend_reach(t, st);
  return st;
}

void merge_update(PairSearchState& st, StateId keep, StateId drop) {
  if (!st.aliases.unite(keep, drop)) return;
  const StateId rep = st.aliases.find(keep);
  std::vector<PairKey> touched;
  for (const auto& [k, bp] : st.reached) {
    if (st.aliases.find(k.first) == rep || st.aliases.find(k.second) == rep)
      touched.push_back(k);
  }
  // Deterministic insertion order regardless of hash layout.
  std::sort(touched.begin(), touched.end(), [&](const PairKey& a,
                                                const PairKey& b) {
    return st.reached.at(a).seq < st.reached.at(b).seq;
  });
  for (const PairKey& k : touched)
    add_alias_substitutes(st, k, [](const PairKey&) {});
}

namespace {

// Shortest continuation (over the alias quotient) from the class of `q` to
// an accepting class. Empty when the class already accepts.
std::vector<std::size_t> accepting_continuation(const Transducer& t,
                                                const AliasMap& aliases,
                                                StateId q) {
  ClassAcceptance accepting(t, aliases);
  const auto out = t.out_index();
  const StateId start = aliases.find(q);
  if (accepting(start)) return {};
  std::map<StateId, std::pair<StateId, std::size_t>> parent;
  std::deque<StateId> queue{start};
  parent.emplace(start, std::pair{start, kNoEdge});
  while (!queue.empty()) {
    const StateId r = queue.front();
    queue.pop_front();
    for (StateId m : aliases.members(r)) {
      auto it = out.find(m);
      if (it == out.end()) continue;
      for (std::size_t i : it->second) {
        const StateId next = aliases.find(t.transitions[i].dst);
        if (!parent.emplace(next, std::pair{r, i}).second) continue;
        if (accepting(next)) {
          std::vector<std::size_t> path;
          for (StateId c = next; c != start; c = parent.at(c).first)
            path.push_back(parent.at(c).second);
          std::reverse(path.begin(), path.end());
          return path;
        }
        queue.push_back(next);
      }
    }
  }
  return {};  // Unreachable for trim machines.
}

}  // namespace

AmbiguousPathPair witness_paths(const Transducer& t, const PairSearchState& st,
                                const PairKey& key) {
  std::vector<std::size_t> a, b;
  // `flip` is set when side A currently sits on the pair's second member.
  bool flip = false;
  PairKey cur = key;
  for (;;) {
    const BackPointer& bp = st.reached.at(cur);
    if (bp.root) break;
    const bool next_flip = flip != bp.swapped;
    if (bp.edge_first != kNoEdge) {
      a.push_back(next_flip ? bp.edge_second : bp.edge_first);
      b.push_back(next_flip ? bp.edge_first : bp.edge_second);
    }
    flip = next_flip;
    cur = bp.pred;
  }
  std::reverse(a.begin(), a.end());
  std::reverse(b.begin(), b.end());
  if (st.aliases.find(key.first) == st.aliases.find(key.second)) {
    for (std::size_t i : accepting_continuation(t, st.aliases, key.first)) {
      a.push_back(i);
      b.push_back(i);
    }
  }
  AmbiguousPathPair w;
  w.a.start = w.b.start = t.initial;
  for (std::size_t i : a) w.a.steps.push_back(t.transitions[i]);
  for (std::size_t i : b) w.b.steps.push_back(t.transitions[i]);
  w.edges_a = std::move(a);
  w.edges_b = std::move(b);
  return w;
}

std::optional<AmbiguousPathPair> find_ambiguity(const Transducer& t,
                                                const PairSearchState& st) {
  ClassAcceptance accepting(t, st.aliases);
  const PairKey* best = nullptr;
  std::uint64_t best_seq = 0;
  for (const auto& [k, bp] : st.reached) {
    if (!witness(st.aliases, accepting, k)) continue;
    if (best == nullptr || bp.seq < best_seq) {
      best = &k;
      best_seq = bp.seq;
    }
  }
  if (best == nullptr) return std::nullopt;
  return witness_paths(t, st, *best);
}

std::optional<AmbiguousPathPair> find_ambiguity(const Transducer& t) {
  return find_ambiguity(t, square_reach(t));
}

}  // namespace nfti
