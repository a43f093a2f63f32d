#include "clslab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "clslab/circuit.hpp"
#include "clslab/errors.hpp"
#include "clslab/lcp.hpp"
#include "clslab/lemke.hpp"
#include "clslab/line.hpp"
#include "clslab/reductions.hpp"
#include "clslab/text_io.hpp"

namespace clslab::cli {
namespace {

using line::AnyLineInstance;
using line::BitConfig;
using line::EomlInstance;
using line::EoplInstance;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  bool lex = false;
  bool paper_sign = false;
  bool trace = false;
  bool certify = false;
  std::uint64_t max_steps = 0;  // 0: command default
  std::string out_path;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> header_of(const std::string& text) {
  std::istringstream is(text);
  TokenLines lines(is);
  auto l = lines.next();
  if (!l) throw ParseError("empty input");
  return l->tokens;
}

// Text after the first non-comment line.
std::string body_after_header(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::size_t consumed = 0;
  while (std::getline(is, line)) {
    consumed += line.size() + 1;
    auto toks = split_ws(line);
    if (!toks.empty() && toks[0][0] != '#') break;
  }
  return consumed < text.size() ? text.substr(consumed) : std::string();
}

lcp::LcpInstance load_lcp(const std::string& text, bool paper_sign) {
  std::istringstream is(text);
  return lcp::parse_lcp(is, paper_sign);
}

circuit::AnyCircuitProblem load_circuit(const std::string& text) {
  std::istringstream is(text);
  return circuit::parse_circuit_problem(is);
}

bool is_circuit_header(const std::string& h) {
  return h == "CLO" || h == "CONTRACTION" || h == "MMC" || h == "GC";
}

bool is_line_header(const std::string& h) { return h == "EOPL" || h == "EOML" || h == "REDUCED"; }

// A line instance, plus the P-LCP reduction when it came from one.
struct LineFile {
  AnyLineInstance inst;
  std::optional<reduce::PlcpReduction> plcp;
};

LineFile load_line(const std::string& text) {
  const auto head = header_of(text);
  if (head[0] != "REDUCED") {
    std::istringstream is(text);
    return {line::parse_line_instance(is), std::nullopt};
  }
  if (head.size() != 2) throw ParseError("descriptor header must be `REDUCED KIND`");
  const std::string body = body_after_header(text);
  if (head[1] == "plcp-eopl") {
    auto red = reduce::plcp_to_eopl(load_lcp(body, false));
    return {red.eopl, red};
  }
  LineFile src = load_line(body);
  if (head[1] == "eoml-eopl") {
    const auto* s = std::get_if<EomlInstance>(&src.inst);
    if (!s) throw ParseError("eoml-eopl descriptor needs an EOML source");
    return {reduce::eoml_to_eopl(*s), std::nullopt};
  }
  if (head[1] == "eopl-eoml") {
    const auto* s = std::get_if<EoplInstance>(&src.inst);
    if (!s) throw ParseError("eopl-eoml descriptor needs an EOPL source");
    auto red = reduce::eopl_to_eoml(*s);
    if (auto* sol = std::get_if<line::LineSolution>(&red))
      throw UsageError("source is trivial (" + line::format_solution(*sol) +
                       "), there is no reduced instance");
    return {std::get<EomlInstance>(red), std::nullopt};
  }
  throw ParseError("unknown descriptor kind '" + head[1] + "'");
}

std::size_t width_of(const AnyLineInstance& inst) {
  return std::visit([](const auto& i) { return i.n(); }, inst);
}

std::uint64_t line_budget(const AnyLineInstance& inst, std::uint64_t requested) {
  if (requested) return requested;
  const std::size_t n = width_of(inst);
  return n < 40 ? (std::uint64_t{1} << n) : (std::uint64_t{1} << 40);
}

line::TraceSink trace_sink(std::ostream& out) {
  return [&out](const line::TraceStep& s) {
    out << "step " << s.step << ' ' << s.x << " V=" << s.V.get_str() << std::endl;
  };
}

void write_line_target(const AnyLineInstance& target, const std::string& kind,
                       const std::string& source_text, std::ostream& os) {
  if (width_of(target) <= 16) {
    std::visit([&](const auto& i) { line::write_truth_table(os, i); }, target);
  } else {
    os << "REDUCED " << kind << '\n' << source_text;
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  return f;
}

QVector origin(std::size_t dim) { return QVector(dim); }

std::uint64_t circuit_budget(const Options& o) { return o.max_steps ? o.max_steps : 100000; }

// ---- commands --------------------------------------------------------------

int cmd_solve(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  auto inst = load_lcp(slurp(path), o.paper_sign);
  auto res = lcp::lemke_solve(inst, {o.lex});
  if (o.trace) {
    for (std::size_t i = 0; i < res.trace.vertices.size(); ++i) {
      const auto& v = res.trace.vertices[i];
      out << "vertex " << i << ": z=" << v.z << " y=" << v.y.str();
      if (i < res.trace.entering.size()) out << " enter " << res.trace.entering[i].str();
      out << '\n';
    }
  }
  out << lcp::format_outcome(res.outcome) << '\n';
  if (!lcp::verify_outcome(inst, res.outcome)) {
    err << "outcome failed exact verification\n";
    return verification_failure;
  }
  return ok;
}

int cmd_check_pmatrix(const std::string& path, const Options& o, std::ostream& out) {
  auto inst = load_lcp(slurp(path), o.paper_sign);
  if (auto w = lcp::p_matrix_violation(inst.M()))
    out << "not a P-matrix: S=" << format_index_set(w->S) << " minor=" << w->minor << '\n';
  else
    out << "P-matrix\n";
  return ok;
}

int reduce_line(const std::string& kind, const std::string& text, const Options& o,
                std::ostream& out) {
  reduce::ReductionCertificate cert;
  cert.target = o.out_path;
  std::optional<AnyLineInstance> target;
  std::string source_text = text;
  std::function<void(const BitConfig&)> back;

  if (kind == "plcp-eopl") {
    auto inst = load_lcp(text, o.paper_sign);
    source_text = lcp::format_lcp(inst);
    auto red = reduce::plcp_to_eopl(inst);
    cert.source = "P-LCP d=" + std::to_string(inst.dim());
    cert.forward = "EOPL n=" + std::to_string(red.ctx->n()) + " m=" + std::to_string(red.ctx->m()) +
                   " scale=" + red.ctx->scale().get_str();
    target = red.eopl;
    back = [&cert, red, inst](const BitConfig& x) {
      auto outcome = reduce::eopl_sol_to_plcp(red, x);
      cert.source_solution = lcp::format_outcome(outcome);
      cert.verified = lcp::verify_outcome(inst, outcome);
    };
  } else {
    LineFile src = load_line(text);
    if (kind == "eoml-eopl") {
      const auto* s = std::get_if<EomlInstance>(&src.inst);
      if (!s) throw UsageError("eoml-eopl needs an EOML instance");
      cert.source = "EOML n=" + std::to_string(s->n());
      auto t = reduce::eoml_to_eopl(*s);
      cert.forward = "EOPL n=" + std::to_string(t.n()) + " m=" + std::to_string(t.m());
      target = t;
      back = [&cert, src = *s](const BitConfig& x) {
        auto sol = reduce::eopl_sol_to_eoml(src, x);
        cert.source_solution = line::format_solution(sol);
        cert.verified = line::check_claim(src, sol).kind.has_value();
      };
    } else {
      const auto* s = std::get_if<EoplInstance>(&src.inst);
      if (!s) throw UsageError("eopl-eoml needs an EOPL instance");
      cert.source = "EOPL n=" + std::to_string(s->n()) + " m=" + std::to_string(s->m());
      auto red = reduce::eopl_to_eoml(*s);
      if (auto* sol = std::get_if<line::LineSolution>(&red)) {
        out << "immediate-solution " << line::format_solution(*sol) << '\n';
        return ok;
      }
      auto t = std::get<EomlInstance>(red);
      cert.forward = "EOML n=" + std::to_string(t.n());
      target = t;
      back = [&cert, src = *s](const BitConfig& x) {
        auto sol = reduce::eoml_sol_to_eopl(src, x);
        cert.source_solution = line::format_solution(sol);
        cert.verified = line::check_claim(src, sol).kind.has_value();
      };
    }
  }

  {
    auto f = open_out(o.out_path);
    write_line_target(*target, kind, source_text, f);
  }
  if (!o.certify) {
    out << "wrote " << o.out_path << " (" << cert.forward << ")\n";
    return ok;
  }
  auto res = std::visit(
      [&](const auto& i) { return line::follow_line(i, line_budget(*target, o.max_steps)); },
      *target);
  cert.target_solution = line::format_solution(res.solution);
  cert.notes.push_back("found after " + std::to_string(res.trace.size() - 1) + " steps");
  back(res.solution.x);
  out << cert.str();
  return cert.verified ? ok : verification_failure;
}

int reduce_circuit(const std::string& kind, const std::string& text, const Options& o,
                   std::ostream& out) {
  using namespace circuit;
  auto problem = load_circuit(text);
  reduce::ReductionCertificate cert;
  cert.target = o.out_path;
  std::string target_text;
  std::function<void()> solve;
  const std::uint64_t budget = circuit_budget(o);

  auto need_mmc = [&](bool general) -> const MmcInstance& {
    const auto* m = std::get_if<MmcInstance>(&problem);
    if (!m || m->general != general)
      throw UsageError(kind + " needs a " + (general ? "GC" : "MMC") + " instance");
    return *m;
  };

  if (kind == "gc-clo") {
    const MmcInstance gc = need_mmc(true);
    CloInstance clo = reduce::gc_to_clo(gc);
    cert.source = "GC dim=" + std::to_string(gc.dim);
    cert.forward = "CLO eps=" + clo.eps.str() + " lambda=" + clo.lambda.str();
    target_text = format_problem(clo);
    solve = [&, gc, clo] {
      auto r = clo_solve_iterate(clo, origin(clo.dim), budget);
      cert.target_solution = format_solution(r.solution);
      auto back = reduce::clo_sol_to_gc(gc, clo, r.solution);
      cert.source_solution = format_solution(back);
      cert.verified = mmc_verify(gc, back).ok;
    };
  } else if (kind == "clo-mmc") {
    const auto* clo_p = std::get_if<CloInstance>(&problem);
    if (!clo_p) throw UsageError("clo-mmc needs a CLO instance");
    const CloInstance clo = *clo_p;
    MmcInstance mmc = reduce::clo_to_mmc(clo);
    cert.source = "CLO dim=" + std::to_string(clo.dim);
    cert.forward = "MMC c=" + mmc.c.str() + " eps=" + mmc.eps.str() +
                   " delta_d=" + mmc.delta_d.str() + " lambda=" + mmc.lambda.str();
    target_text = format_problem(mmc);
    solve = [&, clo, mmc] {
      auto r = fixpoint_iterate(mmc, origin(mmc.dim), budget);
      cert.target_solution = format_solution(r.solution);
      auto back = reduce::mmc_sol_to_clo(clo, mmc, r.solution);
      cert.source_solution = format_solution(back);
      cert.verified = clo_verify(clo, back).ok;
    };
  } else if (kind == "mmc-gc") {
    const MmcInstance mmc = need_mmc(false);
    MmcInstance gc = reduce::mmc_to_gc(mmc);
    cert.source = "MMC dim=" + std::to_string(mmc.dim);
    cert.forward = "GC (identity)";
    target_text = format_problem(gc);
    solve = [&, mmc, gc] {
      auto r = fixpoint_iterate(gc, origin(gc.dim), budget);
      cert.target_solution = format_solution(r.solution);
      auto back = reduce::gc_sol_to_mmc(mmc, r.solution);
      cert.source_solution = format_solution(back);
      cert.verified = mmc_verify(mmc, back).ok;
    };
  } else {
    const auto* ci_p = std::get_if<ContractionInstance>(&problem);
    if (!ci_p) throw UsageError("contraction-clo needs a CONTRACTION instance");
    const ContractionInstance ci = *ci_p;
    CloInstance clo = reduce::contraction_to_clo(ci);
    cert.source = "CONTRACTION dim=" + std::to_string(ci.dim);
    cert.forward = "CLO eps=" + clo.eps.str() + " lambda=" + clo.lambda.str();
    target_text = format_problem(clo);
    solve = [&, ci, clo] {
      auto r = clo_solve_iterate(clo, origin(clo.dim), budget);
      cert.target_solution = format_solution(r.solution);
      auto back = reduce::clo_sol_to_contraction(ci, clo, r.solution);
      cert.source_solution = format_solution(back);
      cert.verified = contraction_verify(ci, back).ok;
    };
  }

  {
    auto f = open_out(o.out_path);
    f << target_text;
  }
  if (!o.certify) {
    out << "wrote " << o.out_path << " (" << cert.forward << ")\n";
    return ok;
  }
  solve();
  out << cert.str();
  return cert.verified ? ok : verification_failure;
}

int cmd_reduce(const std::string& kind, const std::string& path, const Options& o,
               std::ostream& out) {
  const std::string text = slurp(path);
  if (kind == "plcp-eopl" || kind == "eoml-eopl" || kind == "eopl-eoml")
    return reduce_line(kind, text, o, out);
  if (kind == "gc-clo" || kind == "clo-mmc" || kind == "mmc-gc" || kind == "contraction-clo")
    return reduce_circuit(kind, text, o, out);
  throw UsageError("unknown reduction '" + kind + "'");
}

void print_iterates(const std::vector<QVector>& trace, std::ostream& out) {
  for (std::size_t i = 0; i < trace.size(); ++i)
    out << "step " << i << ' ' << trace[i].str() << std::endl;
}

int cmd_follow(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  const std::string text = slurp(path);
  const auto head = header_of(text);
  if (is_circuit_header(head[0])) {
    auto problem = load_circuit(text);
    circuit::SolveResult r = std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, circuit::CloInstance>)
            return circuit::clo_solve_iterate(p, origin(p.dim), circuit_budget(o));
          else
            return circuit::fixpoint_iterate(p, origin(p.dim), circuit_budget(o));
        },
        problem);
    if (o.trace) print_iterates(r.trace, out);
    out << "solution " << circuit::format_solution(r.solution) << '\n';
    return ok;
  }
  LineFile lf = load_line(text);
  const line::TraceSink sink = o.trace ? trace_sink(out) : line::TraceSink{};
  try {
    auto res = std::visit(
        [&](const auto& i) { return line::follow_line(i, line_budget(lf.inst, o.max_steps), sink); },
        lf.inst);
    out << "solution " << line::format_solution(res.solution) << '\n';
    out << "steps " << res.trace.size() - 1 << '\n';
    return ok;
  } catch (const line::FollowBudgetExceeded& e) {
    err << e.what() << "; last point " << e.trace().back().x << '\n';
    return verification_failure;
  }
}

std::string first_line(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    const auto b = line.find_first_not_of(" \t\r");
    const auto e = line.find_last_not_of(" \t\r");
    return line.substr(b, e - b + 1);
  }
  throw ParseError("solution file is empty");
}

int report(bool verified, const std::vector<std::string>& notes, std::ostream& out) {
  for (const auto& n : notes) out << "  " << n << '\n';
  out << (verified ? "verified" : "NOT verified") << '\n';
  return verified ? ok : verification_failure;
}

int cmd_verify(const std::string& problem, const std::string& inst_path,
               const std::string& sol_path, const Options& o, std::ostream& out) {
  const std::string inst_text = slurp(inst_path);
  const std::string sol_text = first_line(slurp(sol_path));

  if (problem == "lcp") {
    auto inst = load_lcp(inst_text, o.paper_sign);
    auto outcome = lcp::parse_outcome(sol_text);
    std::vector<std::string> notes;
    if (const auto* q1 = std::get_if<lcp::Q1>(&outcome)) {
      notes = lcp::verify_lcp_solution(inst, q1->y).failures;
    } else {
      const auto& q2 = std::get<lcp::Q2>(outcome);
      for (auto i : q2.S)
        if (i >= inst.dim()) throw ParseError("index set leaves 1.." + std::to_string(inst.dim()));
      notes.push_back("det M[S,S] recomputed = " + principal_minor(inst.M(), q2.S).str() +
                      ", claimed " + q2.minor.str());
    }
    return report(lcp::verify_outcome(inst, outcome), notes, out);
  }
  if (problem == "eopl" || problem == "eoml") {
    LineFile lf = load_line(inst_text);
    auto sol = line::parse_solution(sol_text);
    if (sol.x.width() != width_of(lf.inst))
      throw ParseError("solution has " + std::to_string(sol.x.width()) + " bits, instance has " +
                       std::to_string(width_of(lf.inst)));
    line::Verdict v;
    if (problem == "eopl") {
      const auto* i = std::get_if<EoplInstance>(&lf.inst);
      if (!i) throw UsageError("instance is not an EOPL instance");
      v = line::check_claim(*i, sol);
    } else {
      const auto* i = std::get_if<EomlInstance>(&lf.inst);
      if (!i) throw UsageError("instance is not an EOML instance");
      v = line::check_claim(*i, sol);
    }
    return report(v.kind.has_value(), v.notes, out);
  }
  if (problem == "clo" || problem == "contraction" || problem == "mmc" || problem == "gc") {
    auto inst = load_circuit(inst_text);
    auto sol = circuit::parse_solution(sol_text);
    circuit::CheckResult r;
    try {
      if (problem == "clo") {
        const auto* i = std::get_if<circuit::CloInstance>(&inst);
        if (!i) throw UsageError("instance is not a CLO instance");
        r = circuit::clo_verify(*i, sol);
      } else if (problem == "contraction") {
        const auto* i = std::get_if<circuit::ContractionInstance>(&inst);
        if (!i) throw UsageError("instance is not a CONTRACTION instance");
        r = circuit::contraction_verify(*i, sol);
      } else {
        const auto* i = std::get_if<circuit::MmcInstance>(&inst);
        if (!i || i->general != (problem == "gc"))
          throw UsageError("instance is not a " + std::string(problem == "gc" ? "GC" : "MMC") +
                           " instance");
        r = circuit::mmc_verify(*i, sol);
      }
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    }
    return report(r.ok, r.notes, out);
  }
  throw UsageError("unknown problem '" + problem + "'");
}

int cmd_pipeline(const std::string& what, const std::string& path, const Options& o,
                 std::ostream& out, std::ostream& err) {
  if (what != "plcp") throw UsageError("pipeline supports only `plcp`");
  auto inst = load_lcp(slurp(path), o.paper_sign);
  const line::TraceSink sink = o.trace ? trace_sink(out) : line::TraceSink{};
  auto rep = reduce::run_plcp_pipeline(inst, o.max_steps, sink);
  out << "direct:   " << lcp::format_outcome(rep.direct) << '\n';
  out << "via line: " << lcp::format_outcome(rep.via_line) << '\n';
  out << "steps:    " << (rep.trace.empty() ? 0 : rep.trace.size() - 1) << '\n';
  out << "agree:    " << (rep.agree ? "yes" : "no") << '\n';
  if (!rep.agree) {
    err << "routes disagree: direct " << lcp::format_outcome(rep.direct) << ", via line "
        << lcp::format_outcome(rep.via_line) << '\n';
    return invariant_violation;
  }
  return ok;
}

int cmd_enumerate(const std::string& path, const Options& o, std::ostream& out) {
  const std::string text = slurp(path);
  const auto head = header_of(text);
  if (!is_line_header(head[0])) {
    auto inst = load_lcp(text, o.paper_sign);
    for (const auto& y : lcp::brute_force_solutions(inst)) out << lcp::format_outcome(lcp::Q1{y}) << '\n';
    return ok;
  }
  LineFile lf = load_line(text);
  auto sols = std::visit([](const auto& i) { return line::enumerate_solutions(i); }, lf.inst);
  for (const auto& s : sols) out << line::format_solution(s) << '\n';
  out << sols.size() << " solution(s)\n";
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers, verifiers and reductions for P-LCP, end-of-line and contraction problems",
               "clslab"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--lex", o.lex, "break Lemke ratio-test ties lexicographically");
  app.add_flag("--paper-sign", o.paper_sign, "negate M when loading (files written as My <= q)");

  std::string file, kind, what, problem, sol_file;

  auto* solve = app.add_subcommand("solve-lcp", "run Lemke's algorithm on an LCP file");
  solve->add_option("FILE", file)->required();
  solve->add_flag("--trace", o.trace, "print every vertex of the path");

  auto* pm = app.add_subcommand("check-pmatrix", "test every principal minor of M");
  pm->add_option("FILE", file)->required();

  auto* red = app.add_subcommand("reduce", "build a target instance");
  red->add_option("KIND", kind,
                  "plcp-eopl | eoml-eopl | eopl-eoml | gc-clo | clo-mmc | mmc-gc | contraction-clo")
      ->required();
  red->add_option("FILE", file)->required();
  red->add_option("-o,--out", o.out_path, "target instance file")->required();
  red->add_flag("--certify", o.certify, "solve the target, map back and print a certificate");
  red->add_option("--max-steps", o.max_steps, "solver step budget for --certify");

  auto* follow = app.add_subcommand("follow", "walk a line instance (or iterate a circuit problem)");
  follow->add_option("FILE", file)->required();
  follow->add_option("--max-steps", o.max_steps, "step budget");
  follow->add_flag("--trace", o.trace, "stream each step");

  auto* verify = app.add_subcommand("verify", "check a claimed solution");
  verify->add_option("PROBLEM", problem, "lcp | eopl | eoml | clo | contraction | mmc | gc")->required();
  verify->add_option("INST", file)->required();
  verify->add_option("SOL", sol_file)->required();

  auto* pipe = app.add_subcommand("pipeline", "P-LCP -> EOPL -> follow -> back-map, against Lemke");
  pipe->add_option("WHAT", what, "plcp")->required();
  pipe->add_option("FILE", file)->required();
  pipe->add_option("--max-steps", o.max_steps, "line-following budget");
  pipe->add_flag("--trace", o.trace, "stream each step of the line");

  auto* en = app.add_subcommand("enumerate", "list every solution of a line instance or LCP");
  en->add_option("FILE", file)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*solve) return cmd_solve(file, o, out, err);
    if (*pm) return cmd_check_pmatrix(file, o, out);
    if (*red) return cmd_reduce(kind, file, o, out);
    if (*follow) return cmd_follow(file, o, out, err);
    if (*verify) return cmd_verify(problem, file, sol_file, o, out);
    if (*pipe) return cmd_pipeline(what, file, o, out, err);
    if (*en) return cmd_enumerate(file, o, out);
  } catch (const DegeneracyError& e) {
    err << "degeneracy: " << e.what() << '\n';
    return degeneracy;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return invariant_violation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return usage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return usage;
  } catch (const DimensionError& e) {
    err << "dimension: " << e.what() << '\n';
    return usage;
  } catch (const Error& e) {
    // Contract breaks, domain escapes and exhausted budgets: no verified answer.
    err << "failed: " << e.what() << '\n';
    return verification_failure;
  }
  return usage;
}

}  // namespace clslab::cli
