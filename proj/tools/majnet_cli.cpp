// Copyright 2026 The majnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*!
  \file
  \brief `majnet`, the command-line front end.

  Four commands: `simulate` runs a network and emits a trace, `compile`
  wraps each construction (circuit to majority net, clock, amplification,
  clocked cylinder, full reduction pipeline, circuit rewrites, threshold
  shift, latch and cascade instances, machine-step circuits), `predict`
  answers the decision problems, and `verify` replays a witness against
  fresh random runs.

  Exit codes: 0 success (including a NO verdict), 2 invalid input or
  instance, 3 exploration budget exceeded, 4 witness divergence.
*/

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "majnet/gadgets.hpp"
#include "majnet/io.hpp"
#include "majnet/solvers.hpp"
#include "majnet/transforms.hpp"
#include "majnet/turing.hpp"

namespace {

using namespace majnet;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot open " + path + " for writing");
  out << text;
}

config parse_bitstring(const std::string& s) {
  config x(static_cast<std::int32_t>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw validation_error("bitstring must be over {0,1}: " + s);
    x.set(static_cast<std::int32_t>(i), s[i] == '1');
  }
  return x;
}

std::string bits_to_string(const config& x) {
  std::string s(x.size(), '0');
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.get(static_cast<std::int32_t>(i))) s[i] = '1';
  return s;
}

rule parse_portion_flag(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    throw validation_error("portion must be written a/b: " + s);
  std::int64_t a = 0, b = 0;
  try {
    std::size_t used = 0;
    a = std::stoll(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("");
    std::string den = s.substr(slash + 1);
    b = std::stoll(den, &used);
    if (used != den.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw validation_error("portion must be written a/b: " + s);
  }
  return rule::portion(a, b);
}

std::vector<std::int32_t> parse_id_list(const std::string& s) {
  std::vector<std::int32_t> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(static_cast<std::int32_t>(std::stoll(item, &used)));
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw validation_error("vertex list must be comma-separated integers: " + s);
    }
  }
  return out;
}

std::vector<std::int32_t> parse_word(const std::string& s, const turing_machine& m) {
  std::vector<std::int32_t> word;
  for (char ch : s) {
    if (ch < '0' || ch > '9')
      throw validation_error("machine input word must be decimal digits: " + s);
    std::int32_t g = ch - '0';
    if (g >= m.num_symbols)
      throw validation_error("input symbol out of range: " + std::string(1, ch));
    word.push_back(g);
  }
  return word;
}

// ---------------------------------------------------------------- simulate

int run_simulate(const std::string& file, std::int64_t steps, bool until_cycle,
                 const std::string& trace_out) {
  network_file f = parse_network(read_file(file));
  trace_file tr;
  if (until_cycle) {
    orbit_summary orb = find_orbit(f.net, f.x0);
    tr.states = orb.prefix;
    tr.has_cycle = true;
    tr.transient = orb.transient;
    tr.period = orb.period;
  } else {
    tr.states = trajectory(f.net, f.x0, steps);
  }
  write_output(trace_out, serialize_trace(tr));
  return 0;
}

// ----------------------------------------------------------------- compile

void emit(const std::string& out_path, const std::string& witness_path,
          const network_file& f, const witness* w) {
  write_output(out_path, serialize_network(f));
  if (!witness_path.empty()) {
    if (w == nullptr) throw validation_error("this subcommand has no witness");
    write_output(witness_path, serialize_witness(*w));
  }
}

int run_compile_gates(const std::string& in, const std::string& out, const std::string& wout) {
  circuit c = parse_circuit(read_file(in));
  compiled_net cn = compile_circuit_to_majority(c);
  emit(out, wout, network_file{cn.net, cn.base(), -1}, &cn.w);
  return 0;
}

int run_compile_clock(const std::string& out, const std::string& wout) {
  clock_net ck = build_clock();
  emit(out, wout, network_file{ck.net, ck.x0, -1}, &ck.w);
  return 0;
}

int run_compile_amplify(const std::string& in, std::int64_t k, const std::string& out,
                        const std::string& wout) {
  network_file f = parse_network(read_file(in));
  amplified_net amp = amplify(f.net, static_cast<std::int32_t>(k));
  std::int32_t target = f.target < 0 ? -1 : f.target * amp.copies;
  emit(out, wout, network_file{amp.net, amp.lift(f.x0), target}, &amp.w);
  return 0;
}

int run_compile_clocked(const std::string& in, const std::string& input_bits,
                        const std::string& out, const std::string& wout) {
  std::string text = read_file(in);
  if (sniff_file(text) == file_kind::circuit) {
    circuit c = parse_circuit(text);
    compiled_net cyl = compile_circuit_to_clocked(c);
    config x0 = input_bits.empty() ? cyl.base() : cyl.initial(parse_bitstring(input_bits));
    emit(out, wout, network_file{cyl.net, x0, -1}, &cyl.w);
    return 0;
  }
  // A network input means the other direction: trade the clock words for
  // appended concrete clock gadgets.
  network_file f = parse_network(text);
  if (!input_bits.empty())
    throw validation_error("--input applies only to circuit inputs");
  compiled_net maj = compile_clocked_to_majority(f.net);
  emit(out, wout, network_file{maj.net, maj.initial(f.x0), f.target}, &maj.w);
  return 0;
}

int run_compile_bseq(const std::string& in, const std::string& input_bits, std::int64_t target,
                     const std::string& out, const std::string& wout) {
  circuit c = parse_circuit(read_file(in));
  config x = parse_bitstring(input_bits);
  bseq_instance inst = compile_bseq_instance(c, x, static_cast<std::int32_t>(target));
  emit(out, wout, network_file{inst.net, inst.x0, inst.target}, &inst.w);
  return 0;
}

int run_compile_flatten(const std::string& in, const std::string& out) {
  circuit c = parse_circuit(read_file(in));
  flat_result flat = flatten_depth1(synchronize(c));
  write_output(out, serialize_circuit(flat.c));
  return 0;
}

int run_compile_monotone(const std::string& in, const std::string& out) {
  circuit c = parse_circuit(read_file(in));
  mono_result mono = monotonize(c);
  write_output(out, serialize_circuit(mono.c));
  return 0;
}

int run_compile_portion(const std::string& in, const std::string& p, const std::string& out,
                        const std::string& wout) {
  network_file f = parse_network(read_file(in));
  compiled_net pc = to_portion(f.net, parse_portion_flag(p));
  emit(out, wout, network_file{pc.net, pc.initial(f.x0), f.target}, &pc.w);
  return 0;
}

int run_compile_eventual(const std::string& in, std::int64_t v, const std::string& out,
                         const std::string& wout) {
  network_file f = parse_network(read_file(in));
  eventual_net ev = attach_eventual_gadget(f.net, static_cast<std::int32_t>(v));
  emit(out, wout, network_file{ev.net, ev.initial(f.x0), ev.u}, &ev.w);
  return 0;
}

int run_compile_full(const std::string& in, std::int64_t v, const std::string& out,
                     const std::string& wout) {
  network_file f = parse_network(read_file(in));
  compiled_net fc = build_full_instance(f.net, static_cast<std::int32_t>(v));
  emit(out, wout, network_file{fc.net, fc.initial(f.x0), -1}, &fc.w);
  return 0;
}

int run_compile_tm(const std::string& in, const std::string& word, std::int64_t space,
                   const std::string& out, const std::string& wout) {
  turing_machine m = parse_tm(read_file(in));
  tm_circuit tc = tm_to_circuit(m, parse_word(word, m), static_cast<std::int32_t>(space));
  write_output(out, serialize_circuit(tc.c));
  if (!wout.empty()) {
    witness w;
    w.kind = witness_kind::tm_circuit;
    w.steps_per_iteration = 1;
    w.base.assign(tc.x0.size(), false);
    for (std::size_t i = 0; i < tc.x0.size(); ++i)
      w.base[i] = tc.x0.get(static_cast<std::int32_t>(i));
    write_output(wout, serialize_witness(w));
  }
  return 0;
}

// ----------------------------------------------------------------- predict

int run_predict(const std::string& file, const std::string& mode_name,
                const std::string& free_list, bool show_completion) {
  network_file f = parse_network(read_file(file));
  prediction_instance inst;
  inst.net = f.net;
  inst.x0 = f.x0;
  inst.target = f.target;
  if (mode_name == "once")
    inst.mode = predict_mode::once;
  else if (mode_name == "eventual")
    inst.mode = predict_mode::eventual;
  else if (mode_name == "full")
    inst.mode = predict_mode::full;
  else if (mode_name == "conditional")
    inst.mode = predict_mode::conditional;
  else
    throw validation_error("unknown mode: " + mode_name);
  inst.free_vertices = parse_id_list(free_list);
  if (!inst.free_vertices.empty() && inst.mode != predict_mode::conditional)
    throw validation_error("--free applies only to --mode conditional");

  verdict v;
  switch (inst.mode) {
    case predict_mode::once: v = predict_once(inst); break;
    case predict_mode::eventual: v = predict_eventual(inst); break;
    case predict_mode::full: v = predict_full(inst); break;
    case predict_mode::conditional: v = predict_conditional(inst); break;
  }
  if (v.yes) {
    std::cout << "YES t=" << v.time << "\n";
    if (show_completion && v.has_completion)
      std::cout << "completion " << bits_to_string(v.completion) << "\n";
  } else {
    std::cout << "NO transient=" << v.transient << " period=" << v.period << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ verify

tm_circuit rebuild_tm_circuit(const turing_machine& m, const circuit& c, const witness& w) {
  tm_circuit tc;
  tc.c = c;
  tc.cell_bits = detail::bits_for(m.num_symbols);
  tc.state_bits = detail::bits_for(m.num_states);
  std::int32_t body = c.num_inputs - tc.state_bits - 1;
  if (body <= 0 || body % (tc.cell_bits + 1) != 0)
    throw validation_error("circuit width does not match the machine's encoding");
  tc.cells = body / (tc.cell_bits + 1);
  tc.halt_coordinate = c.num_inputs - 1;
  tc.x0 = w.initial(config(0), c.num_inputs);
  return tc;
}

int run_verify(const std::string& witness_file, const std::string& source_file,
               const std::string& compiled_file, std::int64_t samples, std::int64_t steps,
               std::uint64_t seed) {
  witness w = parse_witness(read_file(witness_file));
  std::string source_text = read_file(source_file);
  file_kind source_kind = sniff_file(source_text);

  bool all_ok = true;
  verify_report last;

  if (w.kind == witness_kind::tm_circuit) {
    if (source_kind != file_kind::machine)
      throw validation_error("a machine-step witness needs a machine source file");
    turing_machine m = parse_tm(source_text);
    circuit c = parse_circuit(read_file(compiled_file));
    tm_circuit tc = rebuild_tm_circuit(m, c, w);
    last = verify_witness(m, tc, steps);
    std::cout << "sample 0: " << (last.ok ? "pass" : "FAIL " + last.message) << "\n";
    all_ok = last.ok;
  } else {
    network_file compiled = parse_network(read_file(compiled_file));
    // One library call per sample so each run gets its own seed and its
    // own pass/fail line.
    for (std::int64_t s = 0; s < samples; ++s) {
      if (source_kind == file_kind::circuit) {
        circuit c = parse_circuit(source_text);
        last = verify_witness(c, compiled.net, w, 1, steps, seed + static_cast<std::uint64_t>(s));
      } else {
        network_file src = parse_network(source_text);
        last = verify_witness(src.net, compiled.net, w, 1, steps,
                              seed + static_cast<std::uint64_t>(s));
      }
      std::cout << "sample " << s << ": " << (last.ok ? "pass" : "FAIL " + last.message) << "\n";
      if (!last.ok) {
        all_ok = false;
        break;
      }
    }
  }

  std::cout << "max-degree=" << last.max_degree << " max-block=" << last.max_block << "\n";
  if (!all_ok) {
    std::cout << "divergence sample=" << last.divergence_sample << " t=" << last.divergence_time
              << " vertex=" << last.divergence_vertex << "\n";
    return 4;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"majority-rule Boolean network simulator and reduction toolkit"};
  app.require_subcommand(1);
  std::function<int()> run;

  // simulate
  auto* sim = app.add_subcommand("simulate", "run a network and emit a trace");
  {
    auto file = std::make_shared<std::string>();
    auto steps = std::make_shared<std::int64_t>(10);
    auto trace = std::make_shared<std::string>();
    auto until = std::make_shared<bool>(false);
    sim->add_option("file", *file, "network file")->required();
    auto* so = sim->add_option("--steps", *steps, "number of global steps (default 10)");
    auto* uo = sim->add_flag("--until-cycle", *until, "run until the orbit closes");
    so->excludes(uo);
    sim->add_option("--trace", *trace, "write the trace here instead of stdout");
    sim->callback([=, &run] {
      run = [=] { return run_simulate(*file, *steps, *until, *trace); };
    });
  }

  // compile
  auto* comp = app.add_subcommand("compile", "build a gadget or reduction instance");
  comp->require_subcommand(1);
  {
    auto add_common = [](CLI::App* sub, std::shared_ptr<std::string> in,
                         std::shared_ptr<std::string> out, std::shared_ptr<std::string> wout,
                         bool with_witness = true) {
      if (in) sub->add_option("file", *in, "input file")->required();
      sub->add_option("--out", *out, "write the result here instead of stdout");
      if (with_witness) sub->add_option("--witness", *wout, "write the witness table here");
    };

    {
      auto in = std::make_shared<std::string>();
      auto out = std::make_shared<std::string>();
      auto wout = std::make_shared<std::string>();
      auto* sub = comp->add_subcommand("gates", "circuit to a majority network, one step per gate layer");
      add_common(sub, in, out, wout);
      sub->callback([=, &run] { run = [=] { return run_compile_gates(*in, *out, *wout); }; });
    }
    {
      auto out = std::make_shared<std::string>();
      auto wout = std::make_shared<std::string>();
      auto* sub = comp->add_subcommand("clock", "the 12-vertex period-3 schedule gadget");
      add_common(sub, nullptr, out, wout);
      sub->callback([=, &run] { run = [=] { return run_compile_clock(*out, *wout); }; });
    }
    {
      auto in = std::make_shared<std::string>();
      auto out = std::make_shared<std::string>();
      auto wout = std::make_shared<std::string>();
      auto k = std::make_shared<std::int64_t>(1);
      auto* sub = comp->add_subcommand("amplify", "replace each vertex by 2k+1 copies");
      sub->add_option("-k", *k, "amplification parameter (copies = 2k+1)")->required();
      add_common(sub, in, out, wout);
      sub->callback([=, &run] { run = [=] { return run_compile_amplify(*in, *k, *out, *wout); }; });
    }
    {
      auto in = std::make_shared<std::string>();
      auto out = std::make_shared<std::string>();
      auto wout = std::make_shared<std::string>();
      auto bits = std::make_shared<std::string>();
      auto* sub = comp->add_subcommand(
          "clocked", "circuit to a clocked cylinder; a network input removes its clocks instead");
      sub->add_option("--input", *bits, "circuit input bits to preload (circuit inputs only)");
      add_common(sub, in, out, wout);
      sub->callback([=, &run] { run = [=] { return run_compile_clocked(*in, *bits, *out, *wout); }; });
    }
    {
      auto in = std::make_shared<std::string>();
      auto out = std::make_shared<std::string>();
      auto wout = std::make_shared<std::string>();
      auto bits = std::make_shared<std::string>();
      auto target = std::make_shared<std::int64_t>(0);
      auto* sub = comp->add_subcommand("bseq", "full pipeline: circuit plus input to a prediction instance");
      sub->add_option("--input", *bits, "circuit input bits")->required();
      sub->add_option("--target", *target, "input coordinate whose activation is the question")->required();
      add_common(sub, in, out, wout);
      sub->callback(
          [=, &run] { run = [=] { return run_compile_bseq(*in, *bits, *target, *out, *wout); }; });
    }
    {
      auto in = std::make_shared<std::string>();
      auto out = std::make_shared<std::string>();
      auto wout = std::make_shared<std::string>();
      auto* sub = comp->add_subcommand("flatten", "rewrite a circuit as a depth-1 iterable circuit");
      add_common(sub, in, out, wout, false);
      sub->callback([=, &run] { run = [=] { return run_compile_flatten(*in, *out); }; });
    }
    {
      auto in = std::make_shared<std::string>();
      auto out = std::make_shared<std::string>();
      auto wout = std::make_shared<std::string>();
      auto* sub = comp->add_subcommand("monotone", "push negations to the inputs (dual-rail form)");
      add_common(sub, in, out, wout, false);
      sub->callback([=, &run] { run = [=] { return run_compile_monotone(*in, *out); }; });
    }
    {
      auto in = std::make_shared<std::string>();
      auto out = std::make_shared<std::string>();
      auto wout = std::make_shared<std::string>();
      auto p = std::make_shared<std::string>();
      auto* sub = comp->add_subcommand("portion", "shift a majority network to threshold a/b");
      sub->add_option("-p", *p, "target threshold, written a/b")->required();
      add_common(sub, in, out, wout);
      sub->callback([=, &run] { run = [=] { return run_compile_portion(*in, *p, *out, *wout); }; });
    }
    {
      auto in = std::make_shared<std::string>();
      auto out = std::make_shared<std::string>();
      auto wout = std::make_shared<std::string>();
      auto v = std::make_shared<std::int64_t>(0);
      auto* sub = comp->add_subcommand("eventual", "attach the latch that turns one activation into forever");
      sub->add_option("--vertex", *v, "watched vertex")->required();
      add_common(sub, in, out, wout);
      sub->callback([=, &run] { run = [=] { return run_compile_eventual(*in, *v, *out, *wout); }; });
    }
    {
      auto in = std::make_shared<std::string>();
      auto out = std::make_shared<std::string>();
      auto wout = std::make_shared<std::string>();
      auto v = std::make_shared<std::int64_t>(0);
      auto* sub = comp->add_subcommand("full", "attach the cascade that turns one activation into all-ones");
      sub->add_option("--vertex", *v, "watched vertex")->required();
      add_common(sub, in, out, wout);
      sub->callback([=, &run] { run = [=] { return run_compile_full(*in, *v, *out, *wout); }; });
    }
    {
      auto in = std::make_shared<std::string>();
      auto out = std::make_shared<std::string>();
      auto wout = std::make_shared<std::string>();
      auto word = std::make_shared<std::string>();
      auto space = std::make_shared<std::int64_t>(1);
      auto* sub = comp->add_subcommand("tm", "one machine step as a circuit over K|w| tape cells");
      sub->add_option("--input", *word, "input word, one decimal digit per symbol")->required();
      sub->add_option("-K", *space, "tape length factor (cells = K * |word|)");
      add_common(sub, in, out, wout);
      sub->callback(
          [=, &run] { run = [=] { return run_compile_tm(*in, *word, *space, *out, *wout); }; });
    }
  }

  // predict
  auto* pred = app.add_subcommand("predict", "answer a decision problem on a network file");
  {
    auto file = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("once");
    auto free_list = std::make_shared<std::string>();
    auto show = std::make_shared<bool>(false);
    pred->add_option("file", *file, "network file with init (and usually target)")->required();
    pred->add_option("--mode", *mode, "once | eventual | full | conditional (default once)");
    pred->add_option("--free", *free_list, "conditional only: comma-separated unobserved vertices");
    pred->add_flag("--show-completion", *show, "conditional YES: also print the witnessing start");
    pred->callback([=, &run] {
      run = [=] { return run_predict(*file, *mode, *free_list, *show); };
    });
  }

  // verify
  auto* ver = app.add_subcommand("verify", "replay a witness against fresh random runs");
  {
    auto wfile = std::make_shared<std::string>();
    auto sfile = std::make_shared<std::string>();
    auto cfile = std::make_shared<std::string>();
    auto samples = std::make_shared<std::int64_t>(20);
    auto steps = std::make_shared<std::int64_t>(30);
    auto seed = std::make_shared<std::uint64_t>(1);
    ver->add_option("witness", *wfile, "witness file")->required();
    ver->add_option("source", *sfile, "source file (circuit, network, or machine)")->required();
    ver->add_option("compiled", *cfile, "compiled file (network, or circuit for machine steps)")
        ->required();
    ver->add_option("--samples", *samples, "random runs (default 20)");
    ver->add_option("--steps", *steps, "steps per run (default 30)");
    ver->add_option("--seed", *seed, "base seed; sample s uses seed+s (default 1)");
    ver->callback([=, &run] {
      run = [=] { return run_verify(*wfile, *sfile, *cfile, *samples, *steps, *seed); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run();
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
