// cli.cpp
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

#include "nfti/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>

#include "nfti/ambiguity.hpp"
#include "nfti/infer.hpp"
#include "nfti/io.hpp"
#include "nfti/oracle.hpp"
#include "nfti/transform.hpp"

namespace nfti {

namespace {

// Thrown for unreadable or unwritable files.
class FileError : public Error {
 public:
  using Error::Error;
};

MachineFile load_machine(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  return read_machine(in);
}

RawSamples load_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  return read_samples(in);
}

void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw FileError("cannot write " + path);
  write(file);
  if (!file) throw FileError("error writing " + path);
}

// Runs `body`, mapping exceptions to exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIntegrity;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitIntegrity;
  } catch (const FunctionalityError& e) {
    err << "not functional: " << e.what() << '\n';
    return kExitIntegrity;
  } catch (const ConflictError& e) {
    err << "conflict: " << e.what() << '\n';
    return kExitFailure;
  } catch (const InconsistencyError& e) {
    err << "inconsistent samples: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

std::string show_path(const Path& p) {
  std::string s = std::to_string(p.start);
  for (const auto& tr : p.steps) {
    s += " -" + std::string(1, tr.symbol) + "/" + tr.output + "-> " +
         std::to_string(tr.dst);
  }
  return s;
}

}  // namespace

int cmd_learn(const LearnCommand& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RawSamples samples = load_samples(c.samples_path);
    LearnerConfig config;
    config.max_merge_passes = c.max_passes;
    config.reject_symbol = c.reject_symbol;
    config.emit_trace = c.trace;
    config.trace_sink = [&](const std::string& line) { err << line << '\n'; };
    const LearnedModel model = infer(samples, config);
    std::optional<std::string> eps;
    if (model.epsilon_output && !model.epsilon_output->empty())
      eps = model.epsilon_output;
    emit(c.output_path, out, [&](std::ostream& o) {
      write_machine(o, model.machine, eps);
    });
    return kExitOk;
  });
}

int cmd_eval(const std::string& machine_path, const std::string& input,
             std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const MachineFile file = load_machine(machine_path);
    std::set<std::string> outputs = outputs_of(file.machine, input);
    if (input.empty() && !outputs.empty() && file.epsilon_output)
      outputs = {*file.epsilon_output};
    if (outputs.empty()) {
      out << "REJECT\n";
      return kExitFailure;
    }
    for (const auto& o : outputs) out << o << '\n';
    return outputs.size() == 1 ? kExitOk : kExitIntegrity;
  });
}

int cmd_check(const CheckCommand& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Transducer t = trim(load_machine(c.machine_path).machine);
    const bool all = !c.functional && !c.ambiguity && !c.lpp;
    bool pass = true;
    if (all || c.functional) {
      BoundedCheckReport r = check_functional_up_to(t, c.max_len);
      out << r.summary() << '\n';
      pass &= r.verdict;
    }
    if (all || c.ambiguity) {
      auto w = find_ambiguity(t);
      if (w) {
        out << "unambiguous: no (input \"" << w->a.input()
            << "\": " << show_path(w->a) << " and " << show_path(w->b)
            << ")\n";
        pass = false;
      } else {
        out << "unambiguous: yes\n";
      }
    }
    if (all || c.lpp) {
      BoundedCheckReport r = check_local_prefix_preservation_up_to(t, c.max_len);
      out << r.summary() << '\n';
      pass &= r.verdict;
    }
    return pass ? kExitOk : kExitFailure;
  });
}

int cmd_transform(const TransformCommand& c, std::ostream& out,
                  std::ostream& err) {
  const int ops = (c.totalize ? 1 : 0) + (c.disambiguate ? 1 : 0) +
                  (c.trim ? 1 : 0);
  if (ops != 1) {
    err << "error: exactly one of --totalize, --disambiguate, --trim is "
           "required\n";
    return kExitIntegrity;
  }
  return guarded(err, [&] {
    const MachineFile file = load_machine(c.machine_path);
    Transducer result;
    if (c.totalize)
      result = totalize(file.machine, *c.totalize);
    else if (c.disambiguate)
      result = disambiguate(file.machine);
    else
      result = trim(file.machine);
    emit(c.output_path, out, [&](std::ostream& o) {
      write_machine(o, result, file.epsilon_output);
    });
    return kExitOk;
  });
}

int cmd_gen_informant(const std::string& machine_path, std::size_t max_len,
                      const std::string& output_path, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    const MachineFile file = load_machine(machine_path);
    RawSamples samples = generate_informant(file.machine, max_len);
    if (file.epsilon_output && !samples.empty() && samples.front().first.empty())
      samples.front().second = *file.epsilon_output;
    emit(output_path, out, [&](std::ostream& o) { write_samples(o, samples); });
    return kExitOk;
  });
}

int cmd_export_dot(const std::string& machine_path, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    write_dot(out, load_machine(machine_path).machine);
    return kExitOk;
  });
}

}  // namespace nfti
