// core.cpp
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

#include "nfti/core.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace nfti {

std::string make_alphabet(std::string_view chars) {
  std::string out(chars);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StateId Transducer::add_state(StateId q, bool accept) {
  states.insert(q);
  if (accept) accepting.insert(q);
  return q;
}

StateId Transducer::new_state(bool accept) {
  StateId q = states.empty() ? 0 : *states.rbegin() + 1;
  return add_state(q, accept);
}

void Transducer::add_transition(StateId src, Symbol symbol, StateId dst,
                                std::string output) {
  transitions.push_back({src, symbol, dst, std::move(output)});
}

void Transducer::normalize() {
  std::sort(transitions.begin(), transitions.end());
  std::string in = input_alphabet;
  std::string out = output_alphabet;
  for (const auto& tr : transitions) {
    in.push_back(tr.symbol);
    out += tr.output;
  }
  input_alphabet = make_alphabet(in);
  output_alphabet = make_alphabet(out);
}

std::map<StateId, std::vector<std::size_t>> Transducer::out_index() const {
  std::map<StateId, std::vector<std::size_t>> index;
  for (std::size_t i = 0; i < transitions.size(); ++i)
    index[transitions[i].src].push_back(i);
  return index;
}

Transducer empty_transducer(std::string input_alphabet,
                            std::string output_alphabet) {
  Transducer t;
  t.input_alphabet = make_alphabet(input_alphabet);
  t.output_alphabet = make_alphabet(output_alphabet);
  t.initial = 0;
  t.states.insert(0);
  return t;
}

std::string Path::input() const {
  std::string s;
  for (const auto& tr : steps) s.push_back(tr.symbol);
  return s;
}

std::string Path::output() const {
  std::string s;
  for (const auto& tr : steps) s += tr.output;
  return s;
}

namespace {

void check_symbols(const Transducer& t, std::string_view input) {
  for (char c : input) {
    if (t.input_alphabet.find(c) == std::string::npos)
      throw AlphabetError(std::string("symbol '") + c +
                          "' is not in the input alphabet");
  }
}

}  // namespace

Configuration configuration_after(const Transducer& t,
                                  std::string_view input) {
  check_symbols(t, input);
  // Sorted transitions are searched directly; others go through an index.
  const bool sorted = std::is_sorted(t.transitions.begin(), t.transitions.end());
  std::map<StateId, std::vector<std::size_t>> index;
  if (!sorted) index = t.out_index();
  auto each = [&](StateId q, char sigma, auto&& f) {
    if (sorted) {
      auto it = std::lower_bound(
          t.transitions.begin(), t.transitions.end(), std::pair{q, sigma},
          [](const Transition& tr, const std::pair<StateId, char>& key) {
            return std::pair{tr.src, tr.symbol} < key;
          });
      for (; it != t.transitions.end() && it->src == q && it->symbol == sigma;
           ++it)
        f(*it);
      return;
    }
    auto it = index.find(q);
    if (it == index.end()) return;
    for (std::size_t i : it->second) {
      if (t.transitions[i].symbol == sigma) f(t.transitions[i]);
    }
  };
  Configuration current{{t.initial, std::string()}};
  for (char sigma : input) {
    Configuration next;
    for (const auto& entry : current) {
      each(entry.state, sigma, [&](const Transition& tr) {
        next.insert({tr.dst, entry.output + tr.output});
      });
    }
    current = std::move(next);
    if (current.empty()) break;
  }
  return current;
}

std::set<std::string> transduce(const Transducer& t, std::string_view input) {
  std::set<std::string> outputs;
  for (const auto& entry : configuration_after(t, input)) {
    if (t.is_accepting(entry.state)) outputs.insert(entry.output);
  }
  return outputs;
}

Transducer trim(const Transducer& t) {
  std::map<StateId, std::vector<StateId>> fwd, bwd;
  for (const auto& tr : t.transitions) {
    fwd[tr.src].push_back(tr.dst);
    bwd[tr.dst].push_back(tr.src);
  }
  auto closure = [](const std::vector<StateId>& seeds,
                    std::map<StateId, std::vector<StateId>>& graph) {
    std::set<StateId> seen(seeds.begin(), seeds.end());
    std::deque<StateId> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
      StateId q = work.front();
      work.pop_front();
      for (StateId r : graph[q]) {
        if (seen.insert(r).second) work.push_back(r);
      }
    }
    return seen;
  };
  std::set<StateId> reachable = closure({t.initial}, fwd);
  std::vector<StateId> finals(t.accepting.begin(), t.accepting.end());
  std::set<StateId> productive = closure(finals, bwd);

  if (!reachable.count(t.initial) || !productive.count(t.initial)) {
    Transducer empty = empty_transducer(t.input_alphabet, t.output_alphabet);
    empty.states.clear();
    empty.add_state(t.initial);
    empty.initial = t.initial;
    return empty;
  }

  Transducer out;
  out.input_alphabet = t.input_alphabet;
  out.output_alphabet = t.output_alphabet;
  out.initial = t.initial;
  for (StateId q : t.states) {
    if (reachable.count(q) && productive.count(q))
      out.add_state(q, t.is_accepting(q));
  }
  for (const auto& tr : t.transitions) {
    if (out.has_state(tr.src) && out.has_state(tr.dst))
      out.transitions.push_back(tr);
  }
  std::sort(out.transitions.begin(), out.transitions.end());
  return out;
}

std::vector<Violation> validate(const Transducer& t) {
  std::vector<Violation> report;
  auto id = [](StateId q) { return std::to_string(q); };
  if (!t.has_state(t.initial))
    report.push_back({"initial", "initial state " + id(t.initial) +
                                     " is not a state"});
  for (StateId q : t.accepting) {
    if (!t.has_state(q))
      report.push_back({"accepting", "accepting state " + id(q) +
                                         " is not a state"});
  }
  std::map<std::tuple<StateId, Symbol, StateId>, std::string> seen;
  for (const auto& tr : t.transitions) {
    std::string where = id(tr.src) + " -" + tr.symbol + "-> " + id(tr.dst);
    if (!t.has_state(tr.src) || !t.has_state(tr.dst))
      report.push_back({"endpoint", "transition " + where +
                                        " has an unknown endpoint"});
    if (t.input_alphabet.find(tr.symbol) == std::string::npos)
      report.push_back({"alphabet", "transition " + where +
                                        " reads a symbol outside the input "
                                        "alphabet"});
    for (char c : tr.output) {
      if (t.output_alphabet.find(c) == std::string::npos) {
        report.push_back({"alphabet", "transition " + where + " writes '" +
                                          std::string(1, c) +
                                          "' outside the output alphabet"});
        break;
      }
    }
    auto key = std::make_tuple(tr.src, tr.symbol, tr.dst);
    auto [it, fresh] = seen.emplace(key, tr.output);
    if (!fresh) {
      report.push_back({"delta not a function",
                        "transition " + where + " is defined twice (\"" +
                            it->second + "\" and \"" + tr.output + "\")"});
    }
  }
  return report;
}

std::vector<std::string> words_up_to(std::string_view alphabet,
                                     std::size_t max_len) {
  std::vector<std::string> words{std::string()};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = words.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (char c : alphabet) words.push_back(words[i] + c);
    }
    level_begin = level_end;
  }
  return words;
}

bool lex_len_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace nfti
