// oracle.cpp
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

#include "nfti/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace nfti {

namespace {

std::string join(const std::set<std::string>& outputs) {
  std::string s = "{";
  bool first = true;
  for (const auto& o : outputs) {
    if (!first) s += ", ";
    s += "\"" + o + "\"";
    first = false;
  }
  return s + "}";
}

}  // namespace

FunctionalityError::FunctionalityError(std::string input,
                                       std::set<std::string> outputs)
    : Error("input \"" + input + "\" has outputs " + join(outputs)),
      input_(std::move(input)),
      outputs_(std::move(outputs)) {}

std::string BoundedCheckReport::summary() const {
  std::string s = property + " up to " + std::to_string(bound) + ": " +
                  (verdict ? "yes" : "no");
  if (counterexample) {
    s += " (input \"" + counterexample->input + "\"";
    if (!counterexample->detail.empty()) s += ": " + counterexample->detail;
    s += ")";
  }
  return s;
}

std::set<std::string> outputs_of(const Transducer& t, std::string_view input) {
  try {
    return transduce(t, input);
  } catch (const AlphabetError&) {
    return {};
  }
}

std::uint64_t count_accepting_paths(const Transducer& t, std::string_view input,
                                    std::uint64_t cap) {
  std::map<StateId, std::uint64_t> current{{t.initial, 1}};
  for (char c : input) {
    std::map<StateId, std::uint64_t> next;
    for (const auto& tr : t.transitions) {
      if (tr.symbol != c) continue;
      auto it = current.find(tr.src);
      if (it == current.end()) continue;
      auto& n = next[tr.dst];
      n = std::min(cap, n + it->second);
    }
    current = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& [q, n] : current) {
    if (t.is_accepting(q)) total = std::min(cap, total + n);
  }
  return total;
}

BoundedCheckReport equivalent_up_to(const Transducer& a, const Transducer& b,
                                    std::size_t max_len) {
  BoundedCheckReport r{"equivalent", max_len, true, std::nullopt};
  const std::string sigma = make_alphabet(a.input_alphabet + b.input_alphabet);
  for (const auto& w : words_up_to(sigma, max_len)) {
    auto x = outputs_of(a, w);
    auto y = outputs_of(b, w);
    if (x != y) {
      r.verdict = false;
      r.counterexample = Counterexample{w, join(x) + " vs " + join(y)};
      break;
    }
  }
  return r;
}

BoundedCheckReport check_functional_up_to(const Transducer& t,
                                          std::size_t max_len) {
  BoundedCheckReport r{"functional", max_len, true, std::nullopt};
  for (const auto& w : words_up_to(t.input_alphabet, max_len)) {
    auto x = outputs_of(t, w);
    if (x.size() > 1) {
      r.verdict = false;
      r.counterexample = Counterexample{w, "outputs " + join(x)};
      break;
    }
  }
  return r;
}

BoundedCheckReport check_unambiguous_up_to(const Transducer& t,
                                           std::size_t max_len) {
  BoundedCheckReport r{"unambiguous", max_len, true, std::nullopt};
  for (const auto& w : words_up_to(t.input_alphabet, max_len)) {
    if (count_accepting_paths(t, w) > 1) {
      r.verdict = false;
      r.counterexample = Counterexample{w, "two accepting paths"};
      break;
    }
  }
  return r;
}

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

// Whether some path from `q` of at most `budget` steps has an output that
// starts with `pending`.
bool can_emit(const Transducer& t,
              const std::map<StateId, std::vector<std::size_t>>& out, StateId q,
              const std::string& pending, std::size_t budget) {
  if (pending.empty()) return true;
  std::set<std::pair<StateId, std::string>> seen{{q, pending}};
  std::deque<std::tuple<StateId, std::string, std::size_t>> queue{
      {q, pending, 0}};
  while (!queue.empty()) {
    auto [s, rest, d] = queue.front();
    queue.pop_front();
    if (d == budget) continue;
    auto it = out.find(s);
    if (it == out.end()) continue;
    for (std::size_t i : it->second) {
      const Transition& e = t.transitions[i];
      if (starts_with(e.output, rest)) return true;
      if (!starts_with(rest, e.output)) continue;
      std::string next = rest.substr(e.output.size());
      if (seen.emplace(e.dst, next).second) queue.emplace_back(e.dst, next, d + 1);
    }
  }
  return false;
}

}  // namespace

BoundedCheckReport check_local_prefix_preservation_up_to(const Transducer& t,
                                                         std::size_t max_len) {
  BoundedCheckReport r{"locally prefix-preserving", max_len, true,
                       std::nullopt};
  const auto out = t.out_index();

  // A node pairs the end of p1 with the same-input prefix of p2. `ahead`
  // holds the output excess of one side over the other: side 1 when
  // `first_ahead`, otherwise side 2.
  struct Key {
    StateId q1, q2;
    bool diverged;
    bool first_ahead;
    std::string ahead;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, std::size_t> depth;
  std::deque<std::pair<Key, std::string>> queue;
  Key start{t.initial, t.initial, false, false, ""};
  depth.emplace(start, 0);
  queue.emplace_back(start, "");
  while (!queue.empty()) {
    auto [k, input] = queue.front();
    queue.pop_front();
    const std::size_t d = input.size();
    if (k.diverged) {
      const bool violated =
          !k.first_ahead || can_emit(t, out, k.q2, k.ahead, max_len - d);
      if (violated) {
        r.verdict = false;
        r.counterexample = Counterexample{
            input, "a path ending in " + std::to_string(k.q1) +
                       " prefixes a different path through " +
                       std::to_string(k.q2)};
        return r;
      }
    }
    if (d == max_len) continue;
    auto i1 = out.find(k.q1);
    auto i2 = out.find(k.q2);
    if (i1 == out.end() || i2 == out.end()) continue;
    for (std::size_t e : i1->second) {
      for (std::size_t f : i2->second) {
        const Transition& te = t.transitions[e];
        const Transition& tf = t.transitions[f];
        if (te.symbol != tf.symbol) continue;
        std::string x1 = (k.first_ahead ? k.ahead : "") + te.output;
        std::string x2 = (k.first_ahead ? "" : k.ahead) + tf.output;
        std::size_t n = 0;
        while (n < x1.size() && n < x2.size() && x1[n] == x2[n]) ++n;
        x1.erase(0, n);
        x2.erase(0, n);
        if (!x1.empty() && !x2.empty()) continue;  // Incomparable outputs.
        Key next{te.dst, tf.dst, k.diverged || e != f, !x1.empty(),
                 x1.empty() ? x2 : x1};
        if (depth.emplace(next, d + 1).second)
          queue.emplace_back(std::move(next), input + te.symbol);
      }
    }
  }
  return r;
}

std::vector<std::pair<std::string, std::string>> generate_informant(
    const Transducer& t, std::size_t max_len) {
  std::vector<std::pair<std::string, std::string>> samples;
  for (const auto& w : words_up_to(t.input_alphabet, max_len)) {
    auto x = outputs_of(t, w);
    if (x.size() > 1) throw FunctionalityError(w, x);
    if (x.size() == 1) samples.emplace_back(w, *x.begin());
  }
  return samples;
}

namespace {

class Enumerator {
 public:
  Enumerator(const SampleSet& s, EnumerationStats* stats)
      : stats_(stats), sigma_(s.input_symbols()) {
    for (const auto& [in, out] : s) samples_.emplace_back(in, out);
    std::set<std::string> subs{""};
    for (const auto& [in, out] : s) {
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j <= out.size(); ++j)
          subs.insert(out.substr(i, j - i));
      }
    }
    candidates_.assign(subs.begin(), subs.end());
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [](const std::string& a, const std::string& b) {
                       return lex_len_less(a, b);
                     });
  }

  std::optional<Transducer> run(std::size_t max_states) {
    for (std::size_t n = 1; n <= max_states; ++n) {
      n_ = static_cast<StateId>(n);
      triples_.clear();
      for (StateId src = 0; src < n_; ++src) {
        for (char c : sigma_) {
          for (StateId dst = 0; dst < n_; ++dst) triples_.emplace_back(src, c, dst);
        }
      }
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        mask_ = mask;
        choice_.assign(triples_.size(), kUndecided);
        if (search(0)) return build();
      }
    }
    return std::nullopt;
  }

 private:
  static constexpr int kUndecided = -2;
  static constexpr int kAbsent = -1;

  bool accepting(StateId q) const { return (mask_ >> q) & 1u; }

  bool search(std::size_t pos) {
    if (stats_) ++stats_->nodes;
    if (!feasible()) return false;
    if (pos == triples_.size()) return true;
    for (int c = kAbsent; c < static_cast<int>(candidates_.size()); ++c) {
      choice_[pos] = c;
      if (search(pos + 1)) return true;
    }
    choice_[pos] = kUndecided;
    return false;
  }

  // Decided transitions must not produce a wrong accepting output, and the
  // decided plus undecided (wildcard) transitions must still be able to
  // produce every sampled output.
  bool feasible() const {
    for (const auto& [in, out] : samples_) {
      if (!no_wrong_output(in, out) || !reachable(in, out)) return false;
    }
    return true;
  }

  bool no_wrong_output(const std::string& in, const std::string& out) const {
    // Good: (state, matched prefix length). Bad: states reached by outputs
    // that already left `out`.
    std::set<std::pair<StateId, std::size_t>> good{{0, 0}};
    std::set<StateId> bad;
    for (char c : in) {
      std::set<std::pair<StateId, std::size_t>> ngood;
      std::set<StateId> nbad;
      for (std::size_t k = 0; k < triples_.size(); ++k) {
        if (choice_[k] < 0) continue;
        const auto& [src, sym, dst] = triples_[k];
        if (sym != c) continue;
        const std::string& w = candidates_[choice_[k]];
        if (bad.count(src)) nbad.insert(dst);
        for (const auto& [q, p] : good) {
          if (q != src) continue;
          if (out.compare(p, w.size(), w) == 0 && p + w.size() <= out.size())
            ngood.emplace(dst, p + w.size());
          else
            nbad.insert(dst);
        }
      }
      good = std::move(ngood);
      bad = std::move(nbad);
    }
    for (StateId q : bad) {
      if (accepting(q)) return false;
    }
    for (const auto& [q, p] : good) {
      if (accepting(q) && p != out.size()) return false;
    }
    return true;
  }

  bool reachable(const std::string& in, const std::string& out) const {
    std::set<std::pair<StateId, std::size_t>> cur{{0, 0}};
    for (char c : in) {
      std::set<std::pair<StateId, std::size_t>> next;
      for (std::size_t k = 0; k < triples_.size(); ++k) {
        if (choice_[k] == kAbsent) continue;
        const auto& [src, sym, dst] = triples_[k];
        if (sym != c) continue;
        for (const auto& [q, p] : cur) {
          if (q != src) continue;
          if (choice_[k] == kUndecided) {
            for (std::size_t j = p; j <= out.size(); ++j) next.emplace(dst, j);
          } else {
            const std::string& w = candidates_[choice_[k]];
            if (p + w.size() <= out.size() && out.compare(p, w.size(), w) == 0)
              next.emplace(dst, p + w.size());
          }
        }
      }
      cur = std::move(next);
      if (cur.empty()) return false;
    }
    for (const auto& [q, p] : cur) {
      if (accepting(q) && p == out.size()) return true;
    }
    return false;
  }

  Transducer build() const {
    Transducer t;
    t.input_alphabet = sigma_;
    t.initial = 0;
    for (StateId q = 0; q < n_; ++q) t.add_state(q, accepting(q));
    for (std::size_t k = 0; k < triples_.size(); ++k) {
      if (choice_[k] < 0) continue;
      const auto& [src, sym, dst] = triples_[k];
      t.add_transition(src, sym, dst, candidates_[choice_[k]]);
    }
    t.normalize();
    return trim(t);
  }

  EnumerationStats* stats_;
  std::string sigma_;
  std::vector<std::pair<std::string, std::string>> samples_;
  std::vector<std::string> candidates_;
  StateId n_ = 0;
  std::uint32_t mask_ = 0;
  std::vector<std::tuple<StateId, char, StateId>> triples_;
  std::vector<int> choice_;
};

}  // namespace

std::optional<Transducer> enumerate_minimal_consistent(
    const SampleSet& s, std::size_t max_states, EnumerationStats* stats) {
  return Enumerator(s, stats).run(max_states);
}

}  // namespace nfti
