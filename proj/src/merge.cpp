// merge.cpp
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

#include "nfti/merge.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace nfti {

std::string_view failure_label(MergeFailure f) {
  switch (f) {
    case MergeFailure::kNone:
      return "ok";
    case MergeFailure::kRootAsymmetry:
      return "(i) root-pair asymmetry";
    case MergeFailure::kPushBackBlocked:
      return "(ii) push-back blocked";
    case MergeFailure::kOutputConflict:
      return "(iii) output conflict";
    case MergeFailure::kNegativeAccepted:
      return "negative example accepted";
    case MergeFailure::kNoProgress:
      return "no progress";
  }
  return "?";
}

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::string show(const Transition& e) {
  return std::to_string(e.src) + " -" + e.symbol + "/" + e.output + "-> " +
         std::to_string(e.dst);
}

bool in_domain(const Transducer& t, std::string_view input) {
  try {
    return !transduce(t, input).empty();
  } catch (const AlphabetError&) {
    return false;
  }
}

}  // namespace

MergeSession::MergeSession(const Transducer& h, MergeOptions options)
    : base_(h),
      options_(std::move(options)),
      edges_(h.transitions),
      alive_(h.transitions.size(), true),
      fused_into_(h.transitions.size(), kNoEdge) {}

void MergeSession::set_root_pair(StateId a, StateId b) {
  root_pair_ = std::pair{a, b};
}

std::size_t MergeSession::resolve(std::size_t i) const {
  while (!alive_[i]) i = fused_into_[i];
  return i;
}

void MergeSession::fuse() {
  using Key = std::tuple<StateId, Symbol, StateId, std::string_view>;
  std::map<Key, std::size_t> first;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!alive_[i]) continue;
    const Transition& e = edges_[i];
    Key key{aliases_.find(e.src), e.symbol, aliases_.find(e.dst), e.output};
    auto [it, fresh] = first.emplace(key, i);
    if (!fresh) {
      alive_[i] = false;
      fused_into_[i] = it->second;
    }
  }
}

std::size_t MergeSession::incoming(StateId cls) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (alive_[i] && aliases_.find(edges_[i].dst) == cls) ++n;
  }
  return n;
}

bool MergeSession::class_accepting(StateId cls) const {
  for (StateId m : aliases_.members(cls)) {
    if (base_.is_accepting(m)) return true;
  }
  return false;
}

void MergeSession::merge_states(StateId a, StateId b) {
  if (aliases_.unite(a, b)) fuse();
}

std::optional<AmbiguousPathPair> MergeSession::next_witness() const {
  // Searching the quotient is equivalent to searching the raw machine under
  // the alias map, and avoids enumerating every pair of class members.
  Transducer c;
  c.input_alphabet = base_.input_alphabet;
  c.output_alphabet = base_.output_alphabet;
  c.initial = aliases_.find(base_.initial);
  for (StateId q : base_.states)
    c.add_state(aliases_.find(q), base_.is_accepting(q));
  std::vector<std::size_t> index;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!alive_[i]) continue;
    const Transition& e = edges_[i];
    c.add_transition(aliases_.find(e.src), e.symbol, aliases_.find(e.dst),
                     e.output);
    index.push_back(i);
  }
  PairSearchState st = start_pair_search(c);
  std::optional<PairKey> key = extend_reach(c, st, /*stop_at_witness=*/true);
  if (!key) return std::nullopt;
  AmbiguousPathPair w = witness_paths(c, st, *key);
  for (auto& i : w.edges_a) i = index[i];
  for (auto& i : w.edges_b) i = index[i];
  return w;
}

bool MergeSession::jump_free(const std::vector<std::size_t>& path,
                             std::size_t k) const {
  StateId at = base_.initial;
  for (std::size_t j = 0; j <= k; ++j) {
    if (edges_[path[j]].src != at) return false;
    at = edges_[path[j]].dst;
  }
  return true;
}

bool MergeSession::push_back(std::size_t index, std::string_view suffix) {
  if (suffix.empty()) return true;
  Transition& e = edges_[index];
  if (!alive_[index] || !ends_with(e.output, suffix)) {
    detail_ = "cannot push back \"" + std::string(suffix) + "\" from " +
              show(e);
    return false;
  }
  PushBack pb;
  pb.edge = e;
  pb.suffix = std::string(suffix);
  pb.target = aliases_.find(e.dst);
  pb.target_incoming = incoming(pb.target);
  pb.target_accepting = class_accepting(pb.target);
  pb.target_initial = pb.target == aliases_.find(base_.initial);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    if (alive_[j] && aliases_.find(edges_[j].src) == pb.target)
      out.push_back(j);
  }
  if (pb.target_accepting || pb.target_initial || pb.target_incoming != 1 ||
      out.empty()) {
    detail_ = "push-back of \"" + pb.suffix + "\" from " + show(e) +
              " blocked: target " + std::to_string(pb.target) +
              (pb.target_accepting ? " is accepting" : "") +
              (pb.target_initial ? " is initial" : "") +
              (pb.target_incoming != 1
                   ? " has " + std::to_string(pb.target_incoming) +
                         " incoming edges"
                   : "");
    return false;
  }
  Transducer before;
  if (options_.on_push_back) before = quotient();
  e.output.resize(e.output.size() - suffix.size());
  for (std::size_t j : out) edges_[j].output.insert(0, suffix);
  log_.push_back(pb);
  if (options_.on_push_back) options_.on_push_back(before, quotient(), pb);
  fuse();
  return true;
}

bool MergeSession::equalize(std::size_t e, std::size_t f) {
  const std::string oe = edges_[e].output;
  const std::string of = edges_[f].output;
  if (oe == of) return true;
  if (starts_with(of, oe)) return push_back(f, std::string_view(of).substr(oe.size()));
  if (starts_with(oe, of)) return push_back(e, std::string_view(oe).substr(of.size()));
  detail_ = "outputs of " + show(edges_[e]) + " and " + show(edges_[f]) +
            " are incomparable";
  return false;
}

MergeFailure MergeSession::unify(const AmbiguousPathPair& w) {
  ++witnesses_;
  const auto& pa = w.edges_a;
  const auto& pb = w.edges_b;
  std::string oa, ob;
  for (std::size_t i : pa) oa += edges_[resolve(i)].output;
  for (std::size_t i : pb) ob += edges_[resolve(i)].output;
  if (oa != ob) {
    detail_ = "input \"" + w.a.input() + "\" yields \"" + oa + "\" and \"" +
              ob + "\"";
    return MergeFailure::kOutputConflict;
  }
  if (root_pair_ && options_.root_pair_rule) {
    const auto [a, b] = *root_pair_;
    for (std::size_t k = 0; k < pa.size(); ++k) {
      if (!jump_free(pa, k) || !jump_free(pb, k)) break;
      const StateId qa = edges_[pa[k]].dst;
      const StateId qb = edges_[pb[k]].dst;
      const bool in_a = qa == a || qa == b;
      const bool in_b = qb == a || qb == b;
      if (in_a != in_b) {
        detail_ = "position " + std::to_string(k + 1) + " pairs " +
                  std::to_string(qa) + " with " + std::to_string(qb);
        return MergeFailure::kRootAsymmetry;
      }
    }
  }
  bool progress = false;
  for (std::size_t k = 0; k < pa.size(); ++k) {
    std::size_t e = resolve(pa[k]);
    std::size_t f = resolve(pb[k]);
    if (e == f) continue;
    if (!equalize(e, f)) {
      return edges_[e].output == edges_[f].output ||
                     starts_with(edges_[e].output, edges_[f].output) ||
                     starts_with(edges_[f].output, edges_[e].output)
                 ? MergeFailure::kPushBackBlocked
                 : MergeFailure::kOutputConflict;
    }
    e = resolve(e);
    f = resolve(f);
    bool merged = aliases_.unite(edges_[e].src, edges_[f].src);
    merged |= aliases_.unite(edges_[e].dst, edges_[f].dst);
    if (merged) fuse();
    progress |= merged || resolve(e) == resolve(f);
  }
  if (!progress) {
    detail_ = "witness for \"" + w.a.input() + "\" could not be unified";
    return MergeFailure::kNoProgress;
  }
  return MergeFailure::kNone;
}

MergeFailure MergeSession::run() {
  while (auto w = next_witness()) {
    if (witnesses_ >= options_.max_witnesses) {
      detail_ = "witness limit reached";
      return MergeFailure::kNoProgress;
    }
    MergeFailure f = unify(*w);
    if (f != MergeFailure::kNone) return f;
  }
  return MergeFailure::kNone;
}

Transducer MergeSession::quotient() const {
  Transducer q;
  q.input_alphabet = base_.input_alphabet;
  q.output_alphabet = base_.output_alphabet;
  q.initial = aliases_.find(base_.initial);
  for (StateId s : base_.states)
    q.add_state(aliases_.find(s), base_.is_accepting(s));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!alive_[i]) continue;
    const Transition& e = edges_[i];
    q.add_transition(aliases_.find(e.src), e.symbol, aliases_.find(e.dst),
                     e.output);
  }
  q.normalize();
  q.transitions.erase(std::unique(q.transitions.begin(), q.transitions.end()),
                      q.transitions.end());
  return trim(q);
}

MergeResult try_merge(const Transducer& h, StateId a, StateId b,
                      const MergeOptions& options) {
  MergeSession s(h, options);
  s.set_root_pair(a, b);
  s.merge_states(a, b);
  MergeResult r;
  r.failure = s.run();
  r.detail = s.detail();
  r.push_log = s.push_log();
  r.witnesses = s.witnesses();
  if (r.failure != MergeFailure::kNone) return r;
  Transducer q = s.quotient();
  for (const auto& neg : options.negatives) {
    if (in_domain(q, neg)) {
      r.failure = MergeFailure::kNegativeAccepted;
      r.detail = "quotient accepts \"" + neg + "\"";
      return r;
    }
  }
  r.machine = std::move(q);
  return r;
}

}  // namespace nfti
