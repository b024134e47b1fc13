// infer.cpp
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

#include "nfti/infer.hpp"

#include <algorithm>
#include <map>

namespace nfti {

std::set<std::string> LearnedModel::transduce(std::string_view input) const {
  std::set<std::string> out = nfti::transduce(machine, input);
  if (input.empty() && !out.empty() && epsilon_output)
    return {*epsilon_output};
  return out;
}

std::pair<SampleSet, std::optional<std::string>> split_epsilon(
    const RawSamples& samples) {
  SampleSet s;
  std::optional<std::string> eps;
  for (const auto& [in, out] : samples) {
    if (!in.empty()) {
      s.insert(in, out);
      continue;
    }
    if (eps && *eps != out)
      throw ConflictError("the empty input has two outputs: \"" + *eps +
                          "\" and \"" + out + "\"");
    eps = out;
  }
  if (eps) s.insert("", "");
  return {std::move(s), std::move(eps)};
}

std::vector<StateId> state_order(const PTreeAnnotation& annotation,
                                 TieBreak tie_break) {
  if (tie_break == TieBreak::kLexLen) return state_order(annotation);
  std::vector<StateId> order;
  for (const auto& [q, node] : annotation) order.push_back(q);
  std::stable_sort(order.begin(), order.end(), [&](StateId a, StateId b) {
    const std::string& x = annotation.at(a).input;
    const std::string& y = annotation.at(b).input;
    if (x != y) return lex_len_less(x, y);
    return a < b;
  });
  return order;
}

namespace {

// Renumbers states densely, preserving their relative order.
Transducer compact(const Transducer& t) {
  std::map<StateId, StateId> rank;
  for (StateId q : t.states) rank.emplace(q, static_cast<StateId>(rank.size()));
  Transducer out;
  out.input_alphabet = t.input_alphabet;
  out.output_alphabet = t.output_alphabet;
  out.initial = rank.at(t.initial);
  for (StateId q : t.states) out.add_state(rank.at(q), t.is_accepting(q));
  for (const auto& tr : t.transitions)
    out.add_transition(rank.at(tr.src), tr.symbol, rank.at(tr.dst), tr.output);
  out.normalize();
  return out;
}

}  // namespace

LearnedModel infer(const RawSamples& samples, const LearnerConfig& config) {
  if (config.max_merge_passes < 1)
    throw ConfigError("max_merge_passes must be at least 1");

  LearnedModel model;
  auto trace = [&](const std::string& line) {
    if (!config.emit_trace) return;
    if (config.trace_sink)
      config.trace_sink(line);
    else
      model.trace.push_back(line);
  };

  auto [all, eps] = split_epsilon(samples);
  SampleSet positives;
  MergeOptions options;
  options.on_push_back = config.on_push_back;
  PrefixTreeOptions tree_options;
  tree_options.input_alphabet = all.input_symbols();
  if (config.reject_symbol) {
    const std::string reject(1, *config.reject_symbol);
    if (eps == reject) {
      options.negatives.push_back("");
      eps.reset();
    }
    for (const auto& [in, out] : all) {
      if (in.empty() && !eps) continue;
      if (out == reject)
        options.negatives.push_back(in);
      else
        positives.insert(in, out);
    }
    tree_options.epsilon_branches = true;
  } else {
    positives = std::move(all);
  }
  model.epsilon_output = eps;

  PrefixTree tree = build_prefix_tree(positives, tree_options);
  tree = renumber(tree, state_order(tree.annotation, config.order_tie_break));
  Transducer h = std::move(tree.machine);
  trace("prefix tree: " + std::to_string(h.num_states()) + " states, " +
        std::to_string(h.transitions.size()) + " transitions");

  for (int pass = 0; pass < config.max_merge_passes; ++pass) {
    bool changed = false;
    const std::vector<StateId> order(h.states.begin(), h.states.end());
    for (StateId q : order) {
      if (!h.has_state(q)) continue;
      const std::vector<StateId> earlier(h.states.begin(), h.states.find(q));
      for (StateId p : earlier) {
        if (!h.has_state(p)) continue;
        ++model.attempts;
        MergeResult r = try_merge(h, p, q, options);
        const std::string pair =
            std::to_string(q) + " into " + std::to_string(p);
        if (!r.ok()) {
          trace("reject " + pair + ": " + std::string(failure_label(r.failure)) +
                (r.detail.empty() ? "" : ": " + r.detail));
          continue;
        }
        trace("merge " + pair + ": " + std::to_string(r.witnesses) +
              " witnesses, " + std::to_string(r.push_log.size()) +
              " push-backs, " + std::to_string(r.machine->num_states()) +
              " states");
        for (const auto& pb : r.push_log) {
          trace("  push back \"" + pb.suffix + "\" from " +
                std::to_string(pb.edge.src) + " -" + pb.edge.symbol + "/" +
                pb.edge.output + "-> " + std::to_string(pb.edge.dst));
        }
        if (config.on_commit) config.on_commit(h, *r.machine, r);
        h = std::move(*r.machine);
        ++model.merges;
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  model.machine = compact(trim(h));
  return model;
}

}  // namespace nfti
