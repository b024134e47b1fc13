// transform.cpp
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

#include "nfti/transform.hpp"

#include <deque>
#include <map>

namespace nfti {

bool Nfa::accepts(std::string_view word) const {
  std::set<StateId> current{initial};
  for (char c : word) {
    std::set<StateId> next;
    for (const auto& [src, sym, dst] : transitions) {
      if (sym == c && current.count(src)) next.insert(dst);
    }
    current = std::move(next);
  }
  for (StateId q : current) {
    if (accepting.count(q)) return true;
  }
  return false;
}

bool Nfa::is_deterministic() const {
  std::set<std::pair<StateId, Symbol>> seen;
  for (const auto& [src, sym, dst] : transitions) {
    if (!seen.emplace(src, sym).second) return false;
  }
  return true;
}

bool Nfa::is_complete() const {
  std::set<std::pair<StateId, Symbol>> seen;
  for (const auto& [src, sym, dst] : transitions) seen.emplace(src, sym);
  for (StateId q : states) {
    for (char c : alphabet) {
      if (!seen.count({q, c})) return false;
    }
  }
  return true;
}

Nfa input_projection(const Transducer& t) {
  Nfa n;
  std::string symbols = t.input_alphabet;
  for (const auto& tr : t.transitions) symbols.push_back(tr.symbol);
  n.alphabet = make_alphabet(symbols);
  n.initial = t.initial;
  n.states = t.states;
  n.accepting = t.accepting;
  for (const auto& tr : t.transitions)
    n.transitions.emplace(tr.src, tr.symbol, tr.dst);
  return n;
}

Nfa complement_dfa(const Nfa& n) {
  std::map<StateId, std::map<Symbol, std::set<StateId>>> succ;
  for (const auto& [src, sym, dst] : n.transitions) succ[src][sym].insert(dst);

  std::map<std::set<StateId>, StateId> ids;
  std::vector<std::set<StateId>> subsets;
  auto intern = [&](const std::set<StateId>& s) {
    auto [it, fresh] = ids.emplace(s, static_cast<StateId>(subsets.size()));
    if (fresh) subsets.push_back(s);
    return it->second;
  };

  Nfa d;
  d.alphabet = n.alphabet;
  d.initial = intern({n.initial});
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const std::set<StateId> current = subsets[i];
    for (char c : n.alphabet) {
      std::set<StateId> next;
      for (StateId q : current) {
        auto it = succ.find(q);
        if (it == succ.end()) continue;
        auto jt = it->second.find(c);
        if (jt != it->second.end()) next.insert(jt->second.begin(), jt->second.end());
      }
      StateId target = intern(next);
      d.transitions.emplace(static_cast<StateId>(i), c, target);
    }
  }
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    StateId q = static_cast<StateId>(i);
    d.states.insert(q);
    bool member_accepts = false;
    for (StateId s : subsets[i]) member_accepts |= n.accepting.count(s) != 0;
    if (!member_accepts) d.accepting.insert(q);
  }
  return d;
}

namespace {

// Copies `t` into `out`, shifting every state id to a dense block starting
// at `base`. Returns the mapping.
std::map<StateId, StateId> embed(const Transducer& t, Transducer& out,
                                 StateId base) {
  std::map<StateId, StateId> rename;
  for (StateId q : t.states) {
    StateId fresh = base + static_cast<StateId>(rename.size());
    rename[q] = fresh;
    out.add_state(fresh, t.is_accepting(q));
  }
  for (const auto& tr : t.transitions)
    out.add_transition(rename[tr.src], tr.symbol, rename[tr.dst], tr.output);
  return rename;
}

}  // namespace

Transducer union_of(const Transducer& a, const Transducer& b) {
  Transducer out;
  out.input_alphabet = make_alphabet(a.input_alphabet + b.input_alphabet);
  out.output_alphabet = make_alphabet(a.output_alphabet + b.output_alphabet);
  out.initial = out.add_state(StateId{0},
                              a.is_accepting(a.initial) ||
                                  b.is_accepting(b.initial));
  auto ra = embed(a, out, 1);
  auto rb = embed(b, out, 1 + static_cast<StateId>(a.states.size()));
  for (const auto& tr : a.transitions) {
    if (tr.src == a.initial)
      out.add_transition(out.initial, tr.symbol, ra[tr.dst], tr.output);
  }
  for (const auto& tr : b.transitions) {
    if (tr.src == b.initial)
      out.add_transition(out.initial, tr.symbol, rb[tr.dst], tr.output);
  }
  out.normalize();
  return out;
}

Transducer totalize(const Transducer& t, Symbol reject) {
  if (t.output_alphabet.find(reject) != std::string::npos)
    throw ConfigError(std::string("reject symbol '") + reject +
                      "' already occurs in the output alphabet");

  Nfa rejected = complement_dfa(input_projection(t));

  // The negated acceptor as a transducer: the first step writes the reject
  // symbol, every later step writes nothing. A fresh initial state keeps the
  // empty input out of the relation.
  Transducer neg;
  neg.input_alphabet = t.input_alphabet;
  neg.output_alphabet = std::string(1, reject);
  neg.initial = neg.add_state(StateId{0});
  for (StateId d : rejected.states)
    neg.add_state(d + 1, rejected.accepting.count(d) != 0);
  for (const auto& [src, sym, dst] : rejected.transitions) {
    neg.add_transition(src + 1, sym, dst + 1, "");
    if (src == rejected.initial)
      neg.add_transition(neg.initial, sym, dst + 1, std::string(1, reject));
  }

  Transducer total = union_of(t, neg);
  // (ε,ε) membership follows t only.
  if (!t.is_accepting(t.initial)) total.accepting.erase(total.initial);
  return trim(total);
}

Transducer disambiguate(const Transducer& source) {
  const Transducer t = trim(source);
  std::map<StateId, std::vector<const Transition*>> out;
  for (const auto& tr : t.transitions) out[tr.src].push_back(&tr);

  std::map<PowersetState, StateId> ids;
  std::vector<PowersetState> order;
  auto intern = [&](PowersetState p) {
    auto [it, fresh] = ids.emplace(p, static_cast<StateId>(order.size()));
    if (fresh) order.push_back(std::move(p));
    return it->second;
  };

  // Candidate transitions grouped by (target, symbol, source context); only
  // the one with the least source base survives.
  using GroupKey = std::tuple<StateId, Symbol, std::set<StateId>>;
  std::map<GroupKey, std::pair<StateId, const Transition*>> kept;

  intern({t.initial, {t.initial}});
  for (std::size_t i = 0; i < order.size(); ++i) {
    const PowersetState current = order[i];
    const StateId current_id = static_cast<StateId>(i);
    for (char c : t.input_alphabet) {
      std::set<StateId> image;
      for (StateId q : current.context) {
        for (const Transition* tr : out[q]) {
          if (tr->symbol == c) image.insert(tr->dst);
        }
      }
      if (image.empty()) continue;
      for (const Transition* tr : out[current.base]) {
        if (tr->symbol != c) continue;
        StateId target = intern({tr->dst, image});
        GroupKey key{target, c, current.context};
        auto it = kept.find(key);
        if (it == kept.end() || current.base < order[it->second.first].base)
          kept[key] = {current_id, tr};
      }
    }
  }

  Transducer result;
  result.input_alphabet = t.input_alphabet;
  result.output_alphabet = t.output_alphabet;
  result.initial = 0;
  std::map<std::set<StateId>, StateId> least_accepting;
  for (const auto& p : order) {
    if (!t.is_accepting(p.base)) continue;
    auto [it, fresh] = least_accepting.emplace(p.context, p.base);
    if (!fresh && p.base < it->second) it->second = p.base;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& p = order[i];
    auto it = least_accepting.find(p.context);
    bool accept = it != least_accepting.end() && it->second == p.base;
    result.add_state(static_cast<StateId>(i), accept);
  }
  for (const auto& [key, value] : kept) {
    const auto& [target, c, context] = key;
    result.add_transition(value.first, c, target, value.second->output);
  }
  result.normalize();
  return trim(result);
}

}  // namespace nfti
