/* majnet: majority automata networks under block-sequential update schedules
 * Copyright (c) 2026 The majnet authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "majnet/gadgets.hpp"
#include "majnet/io.hpp"
#include "majnet/solvers.hpp"

using namespace majnet;
using namespace majnet_test;

namespace {

std::string g_cli;          // tool path, from argv[1]
std::filesystem::path g_dir; // scratch directory for the whole run

struct run_result {
  int code = -1;
  std::string out; // stdout and stderr, merged
};

// Runs the tool with the given argument string and captures everything.
run_result run_cli(const std::string& args) {
  std::string cmd = "'" + g_cli + "' " + args + " 2>&1";
  run_result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Writes text to a fresh scratch file and returns its (quoted-safe) path.
std::string put(const std::string& name, const std::string& text) {
  static int counter = 0;
  std::filesystem::path p = g_dir / (std::to_string(counter++) + "_" + name);
  std::ofstream out(p);
  out << text;
  out.close();
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The nine-vertex star with an active center, under a chosen schedule.
network_file star9(int schedule) {
  network_file f;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (std::int32_t leaf = 1; leaf <= 8; ++leaf) edges.push_back({0, leaf});
  f.net.g = graph::from_edges(9, edges);
  if (schedule == 0) {
    f.net.scheme = update_scheme::synchronous(9);
  } else if (schedule == 1) {
    // Leaves first, one per block, the center last.
    std::vector<std::vector<std::int32_t>> blocks;
    for (std::int32_t leaf = 1; leaf <= 8; ++leaf) blocks.push_back({leaf});
    blocks.push_back({0});
    f.net.scheme = update_scheme::from_block_lists(9, blocks);
  } else {
    // Center first, all leaves together.
    f.net.scheme = update_scheme::from_block_lists(9, {{0}, {1, 2, 3, 4, 5, 6, 7, 8}});
  }
  f.x0 = config(9);
  f.x0.set(0, true);
  // The question is whether leaf 1 ever fires; the center starts active.
  f.target = 1;
  return f;
}

} // namespace

// ----------------------------------------------------------------- simulate

TEST_CASE("simulate prints step-indexed bitstrings", "[cli]") {
  std::string net = put("sync.net", serialize_network(star9(0)));
  run_result r = run_cli("simulate " + net + " --steps 2");
  CHECK(r.code == 0);
  CHECK(r.out == "t=0 100000000\nt=1 011111111\nt=2 100000000\n");
}

TEST_CASE("simulate closes the orbit on request", "[cli]") {
  std::string net = put("sync.net", serialize_network(star9(0)));
  run_result r = run_cli("simulate " + net + " --until-cycle");
  CHECK(r.code == 0);
  CHECK(r.out == "t=0 100000000\nt=1 011111111\ncycle transient=0 period=2\n");
}

TEST_CASE("simulate writes the trace file when asked", "[cli]") {
  std::string net = put("seq.net", serialize_network(star9(1)));
  std::string trace = (g_dir / "trace.out").string();
  run_result r = run_cli("simulate " + net + " --steps 3 --trace " + trace);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  trace_file tr = parse_trace(slurp(trace));
  REQUIRE(tr.states.size() == 4);
  // Leaves update first and see the active center, so one pass lights
  // everything and the all-ones state is fixed.
  CHECK(tr.states[1].to_string() == "111111111");
  CHECK(tr.states[3].to_string() == "111111111");
}

TEST_CASE("malformed files exit 2 with a line number", "[cli]") {
  std::string bad = put("bad.net", "nodes 2\nedge 0 7\n");
  run_result r = run_cli("simulate " + bad + " --steps 1");
  CHECK(r.code == 2);
  CHECK(r.out.find("line 2:") != std::string::npos);
}

// ------------------------------------------------------------------ predict

TEST_CASE("predict prints the verdict lines verbatim", "[cli]") {
  std::string yes = put("seq.net", serialize_network(star9(1)));
  run_result ry = run_cli("predict " + yes);
  CHECK(ry.code == 0);
  CHECK(ry.out == "YES t=1\n");

  std::string no = put("cf.net", serialize_network(star9(2)));
  run_result rn = run_cli("predict " + no);
  CHECK(rn.code == 0);
  CHECK(rn.out == "NO transient=1 period=1\n");
}

TEST_CASE("predict validates its instance", "[cli]") {
  // The question is whether the target ever fires, so it must start off.
  network_file f = star9(0);
  f.x0 = config(9);
  f.x0.set(0, true);
  f.target = 0;
  std::string active = put("active.net", serialize_network(f));
  run_result r1 = run_cli("predict " + active + " --mode eventual");
  CHECK(r1.code == 2);

  std::string ok = put("ok.net", serialize_network(star9(1)));
  CHECK(run_cli("predict " + ok + " --mode nonsense").code == 2);
  CHECK(run_cli("predict " + ok + " --free 1,2").code == 2);
  CHECK(run_cli("predict missing-file.net").code == 2);
}

TEST_CASE("predict answers conditional questions with a completion", "[cli]") {
  network_file f = star9(0);
  f.x0 = config(9); // all inactive; the free leaves may be raised
  f.target = 0;     // now the center is the watched vertex
  run_result r = run_cli("predict " + put("cond.net", serialize_network(f)) +
                         " --mode conditional --free 1,2,3,4,5,6,7,8 --show-completion");
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 4) == "YES ");
  CHECK(r.out.find("completion ") != std::string::npos);

  // The library answer and the tool answer must be literally the same.
  prediction_instance inst;
  inst.net = f.net;
  inst.x0 = f.x0;
  inst.target = 0;
  inst.mode = predict_mode::conditional;
  inst.free_vertices = {1, 2, 3, 4, 5, 6, 7, 8};
  verdict v = predict_conditional(inst);
  REQUIRE(v.yes);
  std::string expect =
      "YES t=" + std::to_string(v.time) + "\ncompletion " + v.completion.to_string() + "\n";
  CHECK(r.out == expect);
}

TEST_CASE("predict reports an exhausted budget as exit 3", "[cli]") {
  // Twenty-one free vertices ask for 2^21 completions, past the cap.
  network_file f;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (std::int32_t v = 0; v + 1 < 24; ++v) edges.push_back({v, v + 1});
  f.net.g = graph::from_edges(24, edges);
  f.net.scheme = update_scheme::sequential(24);
  f.x0 = config(24);
  f.target = 23;
  std::string path = put("wide.net", serialize_network(f));
  run_result r = run_cli("predict " + path +
                         " --mode conditional --free 0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20");
  CHECK(r.code == 3);
}

// ------------------------------------------------------- compile and verify

TEST_CASE("compile gates then verify round-trips", "[cli]") {
  rng r(77);
  circuit c = random_monotone_circuit(r, 3, 5, false);
  std::string cir = put("c.cir", serialize_circuit(c));
  std::string net = (g_dir / "gates.net").string();
  std::string wit = (g_dir / "gates.wit").string();
  run_result rc = run_cli("compile gates " + cir + " --out " + net + " --witness " + wit);
  REQUIRE(rc.code == 0);

  run_result rv = run_cli("verify " + wit + " " + cir + " " + net +
                          " --samples 4 --steps 12 --seed 9");
  CHECK(rv.code == 0);
  for (int s = 0; s < 4; ++s)
    CHECK(rv.out.find("sample " + std::to_string(s) + ": pass") != std::string::npos);
  CHECK(rv.out.find("max-degree=") != std::string::npos);
  CHECK(rv.out.find("max-block=") != std::string::npos);
}

TEST_CASE("verify exits 4 on the first divergence", "[cli]") {
  // (x AND y, x OR y): swapping the two output rows is wrong on 01 and 10.
  circuit c;
  c.num_inputs = 2;
  c.gates.push_back({gate_kind::input, {}});
  c.gates.push_back({gate_kind::input, {}});
  c.gates.push_back({gate_kind::and_, {0, 1}});
  c.gates.push_back({gate_kind::or_, {0, 1}});
  c.outputs = {2, 3};
  std::string cir = put("c.cir", serialize_circuit(c));
  std::string net = (g_dir / "div.net").string();
  std::string wit = (g_dir / "div.wit").string();
  REQUIRE(run_cli("compile gates " + cir + " --out " + net + " --witness " + wit).code == 0);

  witness w = parse_witness(slurp(wit));
  REQUIRE(w.output_vertex.size() == 2);
  std::swap(w.output_vertex[0].second, w.output_vertex[1].second);
  std::string bad = put("bad.wit", serialize_witness(w));

  run_result rv = run_cli("verify " + bad + " " + cir + " " + net + " --samples 8 --steps 8");
  CHECK(rv.code == 4);
  CHECK(rv.out.find("FAIL") != std::string::npos);
  CHECK(rv.out.find("divergence sample=") != std::string::npos);
}

TEST_CASE("the full pipeline compiles and predicts through the tool", "[cli]") {
  // An iterable two-coordinate map: (x, y) -> (x OR y, x AND y).
  circuit c;
  c.num_inputs = 2;
  c.gates.push_back({gate_kind::input, {}});
  c.gates.push_back({gate_kind::input, {}});
  c.gates.push_back({gate_kind::or_, {0, 1}});
  c.gates.push_back({gate_kind::and_, {0, 1}});
  c.outputs = {2, 3};
  c.validate();
  std::string cir = put("map.cir", serialize_circuit(c));
  std::string net = (g_dir / "bseq.net").string();
  std::string wit = (g_dir / "bseq.wit").string();
  run_result rc =
      run_cli("compile bseq " + cir + " --input 01 --target 0 --out " + net + " --witness " + wit);
  REQUIRE(rc.code == 0);

  // Coordinate 0 becomes 1 on the first iteration; the tool's verdict on
  // the compiled instance must match the library's.
  config x0(2);
  x0.set(1, true);
  bseq_instance inst = compile_bseq_instance(c, x0, 0);
  prediction_instance pi;
  pi.net = inst.net;
  pi.x0 = inst.x0;
  pi.target = inst.target;
  verdict expect = predict_once(pi);
  REQUIRE(expect.yes);
  run_result rp = run_cli("predict " + net);
  CHECK(rp.code == 0);
  CHECK(rp.out == "YES t=" + std::to_string(expect.time) + "\n");

  run_result rv = run_cli("verify " + wit + " " + cir + " " + net + " --samples 3 --steps 20");
  CHECK(rv.code == 0);
}

TEST_CASE("compile clock produces the period-3 scheduler", "[cli]") {
  std::string net = (g_dir / "clk.net").string();
  REQUIRE(run_cli("compile clock --out " + net).code == 0);
  network_file f = parse_network(slurp(net));
  clock_net ck = build_clock();
  REQUIRE(f.net.n() == ck.net.n());

  std::string trace = (g_dir / "clk.trace").string();
  REQUIRE(run_cli("simulate " + net + " --steps 12 --trace " + trace).code == 0);
  trace_file tr = parse_trace(slurp(trace));
  REQUIRE(tr.states.size() == 13);
  for (int word = 0; word < 8; ++word)
    for (std::size_t t = 0; t < tr.states.size(); ++t) {
      bool want = ((word >> (2 - t % 3)) & 1) != 0;
      std::int32_t vtx = ck.vertex_for((word >> 2) & 1, (word >> 1) & 1, word & 1);
      REQUIRE(tr.states[t].get(vtx) == want);
    }
}

TEST_CASE("compile clocked dispatches on the input family", "[cli]") {
  // A circuit becomes the clocked cylinder net.
  circuit c;
  c.num_inputs = 2;
  c.gates.push_back({gate_kind::input, {}});
  c.gates.push_back({gate_kind::input, {}});
  c.gates.push_back({gate_kind::or_, {0, 1}});
  c.gates.push_back({gate_kind::and_, {0, 1}});
  c.outputs = {2, 3};
  std::string cir = put("c.cir", serialize_circuit(c));
  std::string mid = (g_dir / "cyl.net").string();
  REQUIRE(run_cli("compile clocked " + cir + " --input 10 --out " + mid).code == 0);
  network_file cyl = parse_network(slurp(mid));
  CHECK(cyl.net.clocked());

  // A clocked network becomes a plain majority one.
  std::string fin = (g_dir / "plain.net").string();
  REQUIRE(run_cli("compile clocked " + mid + " --out " + fin).code == 0);
  network_file plain = parse_network(slurp(fin));
  CHECK_FALSE(plain.net.clocked());
  CHECK(plain.net.n() > cyl.net.n());

  // Asking to preload inputs makes no sense for a network input.
  CHECK(run_cli("compile clocked " + mid + " --input 10 --out -").code == 2);
}

TEST_CASE("the circuit rewrites emit circuits", "[cli]") {
  circuit c;
  c.num_inputs = 2;
  c.gates.push_back({gate_kind::input, {}});
  c.gates.push_back({gate_kind::input, {}});
  c.gates.push_back({gate_kind::not_, {0}});
  c.gates.push_back({gate_kind::or_, {2, 1}});
  c.outputs = {3};
  std::string cir = put("c.cir", serialize_circuit(c));

  run_result rm = run_cli("compile monotone " + cir + " --out -");
  REQUIRE(rm.code == 0);
  circuit mono = parse_circuit(rm.out);
  for (const gate& g : mono.gates) CHECK(g.kind != gate_kind::not_);

  // Flattening wants an iterable circuit; give it a two-coordinate map.
  circuit it;
  it.num_inputs = 2;
  it.gates.push_back({gate_kind::input, {}});
  it.gates.push_back({gate_kind::input, {}});
  it.gates.push_back({gate_kind::and_, {0, 1}});
  it.gates.push_back({gate_kind::or_, {0, 2}});
  it.outputs = {3, 2};
  std::string icir = put("i.cir", serialize_circuit(it));
  run_result rf = run_cli("compile flatten " + icir + " --out -");
  REQUIRE(rf.code == 0);
  circuit flat = parse_circuit(rf.out);
  for (const gate& g : flat.gates)
    if (g.kind != gate_kind::input)
      for (std::int32_t s : g.sources) CHECK(s < flat.num_inputs);
}

TEST_CASE("compile portion rewrites the rule line", "[cli]") {
  rng r(79);
  network src = random_odd_net(r, 4, 0);
  network_file f;
  f.net = src;
  f.x0 = config(src.n());
  std::string in = put("src.net", serialize_network(f));
  run_result rc = run_cli("compile portion -p 2/5 " + in + " --out -");
  REQUIRE(rc.code == 0);
  network_file out = parse_network(rc.out);
  CHECK(out.net.r.kind == rule_kind::portion);
  CHECK(out.net.r.num == 2);
  CHECK(out.net.r.den == 5);
  CHECK(rc.out.find("rule portion 2/5\n") != std::string::npos);

  // A half threshold is exactly majority, which the shift refuses.
  CHECK(run_cli("compile portion -p 1/2 " + in + " --out -").code == 2);
}

TEST_CASE("compile amplify, eventual, and full attach their gadgets", "[cli]") {
  rng r(80);
  network src = random_odd_net(r, 4, 0);
  network_file f;
  f.net = src;
  f.x0 = config(src.n());
  std::string in = put("src.net", serialize_network(f));

  std::string amp = (g_dir / "amp.net").string();
  std::string ampw = (g_dir / "amp.wit").string();
  REQUIRE(run_cli("compile amplify -k 1 " + in + " --out " + amp + " --witness " + ampw).code == 0);
  network_file fa = parse_network(slurp(amp));
  CHECK(fa.net.n() == 3 * src.n());
  REQUIRE(run_cli("verify " + ampw + " " + in + " " + amp + " --samples 4 --steps 10").code == 0);

  std::string ev = (g_dir / "ev.net").string();
  std::string evw = (g_dir / "ev.wit").string();
  REQUIRE(run_cli("compile eventual --vertex 1 " + in + " --out " + ev + " --witness " + evw).code ==
          0);
  network_file fe = parse_network(slurp(ev));
  CHECK(fe.net.n() > src.n());
  CHECK(fe.target >= src.n()); // the watcher lives in the attached gadget
  REQUIRE(run_cli("verify " + evw + " " + in + " " + ev + " --samples 4 --steps 12").code == 0);

  std::string fu = (g_dir / "fu.net").string();
  std::string fuw = (g_dir / "fu.wit").string();
  REQUIRE(run_cli("compile full --vertex 1 " + in + " --out " + fu + " --witness " + fuw).code == 0);
  REQUIRE(run_cli("verify " + fuw + " " + in + " " + fu + " --samples 4 --steps 12").code == 0);
}

TEST_CASE("compile tm emits one machine step as a circuit", "[cli]") {
  // Two states over {0, blank 1}: walk right over the input, then halt.
  turing_machine m;
  m.num_states = 2;
  m.num_symbols = 2;
  m.num_input_symbols = 1;
  m.blank = 1;
  m.initial = 0;
  m.final_state = 1;
  m.delta.assign(4, {});
  m.at(0, 0) = {0, 0, 1};
  m.at(0, 1) = {1, 1, 0};
  m.at(1, 0) = {1, 0, 0};
  m.at(1, 1) = {1, 1, 0};
  m.validate();
  std::string tmf = put("m.tm", serialize_tm(m));
  std::string cir = (g_dir / "step.cir").string();
  std::string wit = (g_dir / "step.wit").string();
  REQUIRE(run_cli("compile tm --input 00 -K 2 " + tmf + " --out " + cir + " --witness " + wit)
              .code == 0);
  circuit c = parse_circuit(slurp(cir));
  CHECK(c.num_inputs == c.outputs.size());

  run_result rv = run_cli("verify " + wit + " " + tmf + " " + cir + " --steps 12");
  CHECK(rv.code == 0);
  CHECK(rv.out.find("sample 0: pass") != std::string::npos);
}

// ------------------------------------------------------------------- basics

TEST_CASE("help exits cleanly and bad invocations do not", "[cli]") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("compile gates no-such-file.cir").code == 2);
}

int main(int argc, char** argv) {
  if (argc < 2 || argv[1][0] == '-') {
    std::fprintf(stderr, "usage: %s <path-to-tool> [catch2 options]\n", argv[0]);
    return 2;
  }
  g_cli = argv[1];
  for (int i = 1; i + 1 < argc; ++i) argv[i] = argv[i + 1];
  --argc;

  std::error_code ec;
  g_dir = std::filesystem::temp_directory_path() / "majnet_cli_tests";
  std::filesystem::remove_all(g_dir, ec);
  std::filesystem::create_directories(g_dir);
  int rc = Catch::Session().run(argc, argv);
  std::filesystem::remove_all(g_dir, ec);
  return rc;
}
