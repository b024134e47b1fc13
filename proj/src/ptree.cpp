// ptree.cpp
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

#include "nfti/ptree.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace nfti {

SampleSet::SampleSet(
    std::initializer_list<std::pair<const std::string, std::string>> pairs) {
  for (const auto& [in, out] : pairs) insert(in, out);
}

void SampleSet::insert(std::string input, std::string output) {
  auto [it, fresh] = pairs_.emplace(std::move(input), output);
  if (!fresh && it->second != output) {
    throw ConflictError("input \"" + it->first + "\" has two outputs: \"" +
                        it->second + "\" and \"" + output + "\"");
  }
}

bool SampleSet::contains(std::string_view input,
                         std::string_view output) const {
  const std::string* found = find(input);
  return found != nullptr && *found == output;
}

const std::string* SampleSet::find(std::string_view input) const {
  auto it = pairs_.find(std::string(input));
  return it == pairs_.end() ? nullptr : &it->second;
}

std::string SampleSet::input_symbols() const {
  std::string all;
  for (const auto& [in, out] : pairs_) all += in;
  return make_alphabet(all);
}

std::string SampleSet::output_symbols() const {
  std::string all;
  for (const auto& [in, out] : pairs_) all += out;
  return make_alphabet(all);
}

std::size_t SampleSet::max_input_length() const {
  std::size_t n = 0;
  for (const auto& [in, out] : pairs_) n = std::max(n, in.size());
  return n;
}

std::size_t SampleSet::max_output_length() const {
  std::size_t n = 0;
  for (const auto& [in, out] : pairs_) n = std::max(n, out.size());
  return n;
}

SampleSet derivative(const SampleSet& s, std::string_view input,
                     std::string_view output) {
  SampleSet d;
  for (const auto& [in, out] : s) {
    if (in.compare(0, input.size(), input) == 0 && in.size() >= input.size() &&
        out.size() >= output.size() &&
        out.compare(0, output.size(), output) == 0) {
      d.insert(in.substr(input.size()), out.substr(output.size()));
    }
  }
  return d;
}

std::string lcp(const std::vector<std::string>& strings) {
  if (strings.empty())
    throw std::invalid_argument("lcp of an empty set is undefined");
  std::string prefix = strings.front();
  for (const auto& s : strings) {
    std::size_t n = 0;
    while (n < prefix.size() && n < s.size() && prefix[n] == s[n]) ++n;
    prefix.resize(n);
  }
  return prefix;
}

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

PrefixTree build_prefix_tree(const SampleSet& s,
                             const PrefixTreeOptions& options) {
  PrefixTree tree;
  Transducer& m = tree.machine;
  m.input_alphabet = make_alphabet(options.input_alphabet + s.input_symbols());
  m.output_alphabet =
      make_alphabet(options.output_alphabet + s.output_symbols());
  m.initial = m.add_state(StateId{0});
  tree.annotation[m.initial] = {"", "", s};

  std::deque<StateId> work{m.initial};
  while (!work.empty()) {
    const StateId q = work.front();
    work.pop_front();
    // Copy: creating children inserts into the annotation map.
    const TreeNode node = tree.annotation.at(q);
    const SampleSet& S = node.residual;
    if (S.contains("", "")) m.accepting.insert(q);

    auto branch = [&](char sigma, const std::string& out, SampleSet residual) {
      StateId child = m.new_state();
      m.add_transition(q, sigma, child, out);
      tree.annotation[child] = {node.input + sigma, node.output + out,
                                std::move(residual)};
      work.push_back(child);
    };

    for (char sigma : m.input_alphabet) {
      const std::string sym(1, sigma);
      const std::string* exact = S.find(sym);

      // Continuations whose remaining output is empty fit no output-symbol
      // branch; only an exact pair with empty output can carry them.
      const std::pair<const std::string, std::string>* stranded = nullptr;
      for (const auto& p : S) {
        if (p.first.size() > 1 && p.first[0] == sigma && p.second.empty()) {
          stranded = &p;
          break;
        }
      }
      if (stranded != nullptr && !(exact != nullptr && exact->empty())) {
        if (exact != nullptr || !options.epsilon_branches) {
          throw InconsistencyError(
              "sample (\"" + node.input + stranded->first + "\", \"" +
              node.output + "\") cannot be placed in the prefix tree");
        }
        branch(sigma, "", derivative(S, sym, ""));
        continue;
      }

      if (exact != nullptr) branch(sigma, *exact, derivative(S, sym, *exact));
      for (char gamma : m.output_alphabet) {
        SampleSet d = derivative(S, sym, std::string(1, gamma));
        if (d.empty()) continue;
        std::vector<std::string> outs;
        outs.reserve(d.size());
        for (const auto& [in, out] : d) outs.push_back(out);
        const std::string out = gamma + lcp(outs);
        if (exact != nullptr && starts_with(out, *exact)) continue;
        branch(sigma, out, derivative(S, sym, out));
      }
    }
  }
  m.normalize();
  return tree;
}

Transducer build_star(const SampleSet& s, std::string input_alphabet) {
  Transducer m;
  m.input_alphabet = make_alphabet(input_alphabet + s.input_symbols());
  m.output_alphabet = s.output_symbols();
  m.initial = m.add_state(StateId{0});
  for (const auto& [in, out] : s) {
    if (in.empty()) {
      if (!out.empty())
        throw ConfigError("the star cannot represent an empty input with "
                          "output \"" + out + "\"");
      m.accepting.insert(m.initial);
      continue;
    }
    StateId prev = m.initial;
    for (std::size_t k = 0; k < in.size(); ++k) {
      StateId next = m.new_state(k + 1 == in.size());
      m.add_transition(prev, in[k], next, k == 0 ? out : std::string());
      prev = next;
    }
  }
  m.normalize();
  return m;
}

std::vector<StateId> state_order(const PTreeAnnotation& annotation) {
  std::vector<StateId> order;
  order.reserve(annotation.size());
  for (const auto& [q, node] : annotation) order.push_back(q);
  std::stable_sort(order.begin(), order.end(), [&](StateId a, StateId b) {
    const TreeNode& x = annotation.at(a);
    const TreeNode& y = annotation.at(b);
    if (x.input != y.input) return lex_len_less(x.input, y.input);
    if (x.output != y.output) return lex_len_less(x.output, y.output);
    return a < b;
  });
  return order;
}

PrefixTree renumber_by_order(const PrefixTree& tree) {
  return renumber(tree, state_order(tree.annotation));
}

PrefixTree renumber(const PrefixTree& tree, const std::vector<StateId>& order) {
  std::map<StateId, StateId> rank;
  for (StateId q : order) rank.emplace(q, static_cast<StateId>(rank.size()));

  PrefixTree out;
  Transducer& m = out.machine;
  m.input_alphabet = tree.machine.input_alphabet;
  m.output_alphabet = tree.machine.output_alphabet;
  m.initial = rank.at(tree.machine.initial);
  for (StateId q : tree.machine.states)
    m.add_state(rank.at(q), tree.machine.is_accepting(q));
  for (const auto& tr : tree.machine.transitions)
    m.add_transition(rank.at(tr.src), tr.symbol, rank.at(tr.dst), tr.output);
  m.normalize();
  for (const auto& [q, node] : tree.annotation) out.annotation[rank.at(q)] = node;
  return out;
}

}  // namespace nfti
