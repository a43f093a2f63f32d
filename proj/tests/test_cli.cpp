#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "clslab/circuit.hpp"
#include "clslab/cli.hpp"
#include "clslab/line.hpp"
#include "clslab/reductions.hpp"
#include "support.hpp"

using namespace clslab;
namespace fs = std::filesystem;

namespace {

class Scratch {
 public:
  Scratch() {
    dir_ = fs::temp_directory_path() / ("clslab_cli_" + std::to_string(counter_++) + "_" +
                                        std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

 private:
  static inline int counter_ = 0;
  fs::path dir_;
};

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

const char* path_eopl =
    "EOPL 2 2\n"
    "00 01 00 0\n"
    "01 10 00 1\n"
    "10 10 01 2\n"
    "11 11 11 0\n";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("solve-lcp and check-pmatrix") {
    Scratch s;
    auto f = s.write("one.lcp", "1\n1\n-1\n");
    auto r = run({"solve-lcp", f});
    CHECK(r.code == cli::ok);
    CHECK(has(r.out, "Q1 1"));

    auto z = s.write("zero.lcp", "1\n0\n-1\n");
    CHECK(has(run({"solve-lcp", z}).out, "Q2 S={1} minor=0"));

    auto swap = s.write("swap.lcp", "2\n0 1\n1 0\n1 1\n");
    auto pm = run({"check-pmatrix", swap});
    CHECK(pm.code == cli::ok);
    CHECK(has(pm.out, "not a P-matrix: S={1} minor=0"));
    CHECK(run({"check-pmatrix", f}).out == "P-matrix\n");

    auto tied = s.write("tied.lcp", "2\n1 0\n0 1\n-1 -1\n");
    CHECK(run({"solve-lcp", tied}).code == cli::degeneracy);
    CHECK(run({"--lex", "solve-lcp", tied}).code == cli::ok);
    auto trace = run({"solve-lcp", f, "--trace"});
    CHECK(has(trace.out, "vertex 0"));

    // With the opposite sign convention the same numbers mean M = [[-1]].
    auto flipped = s.write("neg.lcp", "1\n-1\n-1\n");
    CHECK(has(run({"--paper-sign", "solve-lcp", flipped}).out, "Q1 1"));
  }

  TEST_CASE("pipeline examples") {
    Scratch s;
    auto one = run({"pipeline", "plcp", s.write("one.lcp", "1\n1\n-1\n")});
    CHECK(one.code == cli::ok);
    CHECK(has(one.out, "direct:   Q1 1"));
    CHECK(has(one.out, "via line: Q1 1"));
    CHECK(has(one.out, "agree:    yes"));

    auto easy = run({"pipeline", "plcp", s.write("easy.lcp", "1\n2\n3\n")});
    CHECK(easy.code == cli::ok);
    CHECK(has(easy.out, "via line: Q1 0"));

    auto tied = run({"pipeline", "plcp", s.write("tied.lcp", "2\n1 0\n0 1\n-1 -1\n")});
    CHECK(tied.code == cli::degeneracy);
    CHECK(has(tied.err, "indices {1,2}"));
  }

  TEST_CASE("follow, enumerate and verify on a line instance") {
    Scratch s;
    auto inst = s.write("path.eopl", path_eopl);
    auto f = run({"follow", inst, "--trace"});
    CHECK(f.code == cli::ok);
    CHECK(has(f.out, "solution R1 10"));
    CHECK(has(f.out, "steps 2"));
    CHECK(has(f.out, "step 1 01 V=1"));

    auto budget = run({"follow", inst, "--max-steps", "1"});
    CHECK(budget.code == cli::verification_failure);

    auto e = run({"enumerate", inst});
    CHECK(has(e.out, "R1 10"));
    CHECK(has(e.out, "1 solution(s)"));

    CHECK(run({"verify", "eopl", inst, s.write("good.sol", "R1 10\n")}).code == cli::ok);
    CHECK(run({"verify", "eopl", inst, s.write("bad.sol", "R1 01\n")}).code ==
          cli::verification_failure);
    CHECK(run({"verify", "eopl", inst, s.write("junk.sol", "Z9 01\n")}).code == cli::usage);
    CHECK(run({"verify", "eoml", inst, s.write("good2.sol", "R1 10\n")}).code == cli::usage);
  }

  TEST_CASE("tampered potential in an R2 certificate") {
    Scratch s;
    auto flat = s.write("flat.eopl",
                        "EOPL 2 2\n00 01 00 0\n01 10 00 1\n10 10 01 1\n11 11 11 0\n");
    auto sol = s.write("r2.sol", "R2 01\n");
    CHECK(run({"verify", "eopl", flat, sol}).code == cli::ok);
    auto tampered = s.write("tampered.eopl",
                            "EOPL 2 2\n00 01 00 0\n01 10 00 1\n10 10 01 2\n11 11 11 0\n");
    auto r = run({"verify", "eopl", tampered, sol});
    CHECK(r.code == cli::verification_failure);
    CHECK(has(r.out, "V(S(x)) - V(x) = 1 > 0"));
  }

  TEST_CASE("verify on LCP outcomes") {
    Scratch s;
    auto inst = s.write("one.lcp", "1\n1\n-1\n");
    CHECK(run({"verify", "lcp", inst, s.write("a.sol", "Q1 1\n")}).code == cli::ok);
    CHECK(run({"verify", "lcp", inst, s.write("b.sol", "Q1 2\n")}).code == cli::verification_failure);
    CHECK(run({"verify", "lcp", inst, s.write("c.sol", "Q2 S={1} minor=1\n")}).code ==
          cli::verification_failure);
    CHECK(run({"verify", "lcp", inst, s.write("d.sol", "Q2 S={3} minor=1\n")}).code == cli::usage);
  }

  TEST_CASE("verify on circuit problems") {
    using namespace circuit;
    Scratch s;
    MmcInstance mmc{testing::halving_map(1, Rational(1, 2), QVector{0}), testing::norm_distance(1, Norm::one()),
                    Norm::one(), Rational(1, 4), Rational(1, 2), Rational(1), Rational(1), 1, false};
    auto inst = s.write("m.mmc", format_problem(mmc));
    CircuitSolution tri{SolKind::MMviol, {QVector{0}, QVector{Rational(1, 2)}, QVector{1}}, 4};
    auto r = run({"verify", "mmc", inst, s.write("tri.sol", format_solution(tri) + "\n")});
    CHECK(r.code == cli::verification_failure);
    CHECK(has(r.out, "NOT verified"));

    CircuitSolution m1{SolKind::M1, {QVector{0}}, 0};
    CHECK(run({"verify", "mmc", inst, s.write("m1.sol", format_solution(m1) + "\n")}).code == cli::ok);
    CHECK(run({"verify", "gc", inst, s.write("m1b.sol", format_solution(m1) + "\n")}).code == cli::usage);
    CHECK(run({"verify", "clo", inst, s.write("m1c.sol", format_solution(m1) + "\n")}).code == cli::usage);
    CHECK(run({"verify", "mmc", inst, s.write("out.sol", "M1 (2)\n")}).code != cli::ok);
  }

  TEST_CASE("reduce eoml-eopl writes a valid 4-bit table") {
    Scratch s;
    auto src = s.write("m.eoml", "EOML 3\n000 001 000 1\n001 010 000 2\n010 010 001 3\n");
    auto r = run({"reduce", "eoml-eopl", src, "-o", s.path("out.eopl"), "--certify"});
    CHECK(r.code == cli::ok);
    CHECK(has(r.out, "verified:        yes"));
    std::istringstream in(s.read("out.eopl"));
    auto back = line::parse_line_instance(in);
    REQUIRE(std::holds_alternative<line::EoplInstance>(back));
    const auto& e = std::get<line::EoplInstance>(back);
    CHECK(e.n() == 4);
    CHECK(line::validate_instance(e).empty());
    CHECK(run({"follow", s.path("out.eopl")}).code == cli::ok);
  }

  TEST_CASE("reduce eopl-eoml immediate solution and round trip") {
    Scratch s;
    auto shortline = s.write("short.eopl", "EOPL 2 2\n00 01 00 0\n01 01 00 1\n");
    auto r = run({"reduce", "eopl-eoml", shortline, "-o", s.path("never.eoml")});
    CHECK(r.code == cli::ok);
    CHECK(has(r.out, "immediate-solution R1 01"));

    auto src = s.write("path.eopl", path_eopl);
    auto r2 = run({"reduce", "eopl-eoml", src, "-o", s.path("out.eoml"), "--certify"});
    CHECK(r2.code == cli::ok);
    CHECK(has(r2.out, "verified:        yes"));
    std::istringstream in(s.read("out.eoml"));
    auto back = line::parse_line_instance(in);
    REQUIRE(std::holds_alternative<line::EomlInstance>(back));
    // Pointwise agreement with the in-memory reduction.
    std::istringstream src_in(path_eopl);
    auto orig = std::get<line::EoplInstance>(line::parse_line_instance(src_in));
    auto mem = testing::tabulate(std::get<line::EomlInstance>(reduce::eopl_to_eoml(orig)));
    auto file = testing::tabulate(std::get<line::EomlInstance>(back));
    CHECK(file.S == mem.S);
    CHECK(file.P == mem.P);
    CHECK(file.V == mem.V);
  }

  TEST_CASE("reduce clo-mmc sets c = 1 - eps/4") {
    using namespace circuit;
    Scratch s;
    CloInstance clo{testing::halving_map(1, Rational(1, 2), QVector{0}), testing::coordinate_potential(1, 1),
                    Rational(1, 2), Rational(1), Norm::one(), 1};
    auto src = s.write("a.clo", format_problem(clo));
    auto r = run({"reduce", "clo-mmc", src, "-o", s.path("b.mmc"), "--certify"});
    CHECK(r.code == cli::ok);
    std::istringstream in(s.read("b.mmc"));
    auto back = parse_circuit_problem(in);
    REQUIRE(std::holds_alternative<MmcInstance>(back));
    CHECK(std::get<MmcInstance>(back).c == Rational(7, 8));
  }

  TEST_CASE("reduce plcp-eopl with a certificate") {
    Scratch s;
    auto src = s.write("a.lcp", "2\n2 1\n1 3\n-1 -2\n");
    auto r = run({"reduce", "plcp-eopl", src, "-o", s.path("a.eopl"), "--certify"});
    CHECK(r.code == cli::ok);
    CHECK(has(r.out, "source solution: Q1 1/5 3/5"));
    CHECK(has(r.out, "verified:        yes"));
    auto e = run({"enumerate", s.path("a.eopl")});
    CHECK(has(e.out, "1 solution(s)"));
  }

  TEST_CASE("wide targets are written as descriptors and reload") {
    Scratch s;
    // d = 9 gives an 18-bit instance, too wide for a truth table.
    std::string text = "9\n";
    for (int r = 0; r < 9; ++r) {
      for (int c = 0; c < 9; ++c) text += (r == c ? "3 " : (c == r + 1 ? "1 " : "0 "));
      text += "\n";
    }
    for (int i = 1; i <= 9; ++i) text += "-" + std::to_string(i) + " ";
    text += "\n";
    auto src = s.write("wide.lcp", text);
    auto r = run({"reduce", "plcp-eopl", src, "-o", s.path("wide.eopl")});
    CHECK(r.code == cli::ok);
    CHECK(s.read("wide.eopl").rfind("REDUCED plcp-eopl", 0) == 0);
    auto f = run({"follow", s.path("wide.eopl")});
    CHECK(f.code == cli::ok);
    REQUIRE(has(f.out, "solution R1 "));
    const auto line = f.out.substr(f.out.find("solution ") + 9);
    auto sol = s.write("wide.sol", line.substr(0, line.find('\n')) + "\n");
    CHECK(run({"verify", "eopl", s.path("wide.eopl"), sol}).code == cli::ok);
  }

  TEST_CASE("usage and parse errors") {
    Scratch s;
    CHECK(run({}).code == cli::usage);
    CHECK(run({"frobnicate"}).code == cli::usage);
    CHECK(run({"solve-lcp", s.path("missing.lcp")}).code == cli::usage);
    auto bad = run({"solve-lcp", s.write("bad.lcp", "2\n1 0\n0\n1 1\n")});
    CHECK(bad.code == cli::usage);
    CHECK(has(bad.err, "line"));
    CHECK(run({"reduce", "nope", s.write("x.lcp", "1\n1\n-1\n"), "-o", s.path("y")}).code == cli::usage);
    CHECK(run({"verify", "nope", s.path("x.lcp"), s.path("x.lcp")}).code == cli::usage);
    CHECK(run({"--help"}).code == cli::ok);
  }
}
