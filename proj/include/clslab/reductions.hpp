#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>

#include "clslab/circuit.hpp"
#include "clslab/lcp.hpp"
#include "clslab/lemke.hpp"
#include "clslab/line.hpp"

namespace clslab::reduce {

using line::BitConfig;

// ---- P-LCP -> EndOfPotentialLine ----------------------------------------
//
// Configurations have n = 2d bits. Bit i of the first half is 1 iff s_i = 0
// is tight (0 means y_i = 0); the second half is a one-hot duplicate label,
// all zero meaning z = 0 is tight. Rational data is scaled by the LCM of its
// denominators first, which keeps y, the zero pattern of every vertex and the
// signs of all principal minors.
class PlcpEoplContext {
 public:
  // Throws PreconditionError when q >= 0 (y = 0 solves it, and 0^n would
  // collide with a genuine vertex) and DegeneracyError on a tied start.
  explicit PlcpEoplContext(lcp::LcpInstance inst);

  const lcp::LcpInstance& instance() const { return inst_; }
  const lcp::LcpInstance& scaled() const { return scaled_; }
  const BigInt& scale() const { return scale_; }
  std::size_t d() const { return inst_.dim(); }
  std::size_t n() const { return 2 * inst_.dim(); }
  const BigInt& i_max() const { return i_max_; }
  const BigInt& delta() const { return delta_; }
  std::size_t m() const { return m_; }
  const lcp::LemkeVertex& start() const { return start_; }
  const BitConfig& start_config() const { return start_config_; }

  bool is_valid_config(const BitConfig& u) const;
  // Polytope vertex (of the scaled instance) encoded by a valid u != 0^n.
  std::optional<lcp::LemkeVertex> vertex_of(const BitConfig& u) const;

  struct Point {
    QVector y, s;
    Rational z;
    friend bool operator==(const Point&, const Point&) = default;
  };
  // Point in the original instance's units. 0^n gives (0, q+(z0+1)1, z0+1);
  // an invalid u gives all zeros.
  Point etoi(const BitConfig& u) const;
  // nullopt for the invalid cases (some y_i s_i != 0, or two duplicate labels).
  std::optional<BitConfig> itoe(const QVector& y, const QVector& s, const Rational& z) const;
  std::optional<BitConfig> itoe(const lcp::LemkeVertex& v) const;

  BitConfig S(const BitConfig& u) const;
  BitConfig P(const BitConfig& u) const;
  BigInt V(const BitConfig& u) const;

 private:
  enum class Dir { succ, pred };
  BitConfig step(const BitConfig& u, Dir dir) const;

  lcp::LcpInstance inst_;
  lcp::LcpInstance scaled_;
  BigInt scale_;
  BigInt i_max_;
  BigInt delta_;
  std::size_t m_ = 0;
  lcp::LemkeVertex start_;
  BitConfig start_config_;

  mutable std::mutex mu_;
  mutable std::map<BitConfig, std::optional<lcp::LemkeVertex>> vertex_cache_;
  mutable std::map<BitConfig, BitConfig> succ_cache_, pred_cache_;
};

struct PlcpReduction {
  std::shared_ptr<const PlcpEoplContext> ctx;
  line::EoplInstance eopl;
};

PlcpReduction plcp_to_eopl(const lcp::LcpInstance& inst);

// Back-maps a solution u of the reduced instance: Q1(y) at z = 0, otherwise
// a verified Q2 witness read off the vertex. Throws PreconditionError for
// u = 0^n, ContractError when u is not a solution and InvariantViolation
// for an R2 solution.
lcp::LcpOutcome eopl_sol_to_plcp(const PlcpReduction& red, const BitConfig& u);

struct PipelineReport {
  lcp::LcpOutcome via_line;
  lcp::LcpOutcome direct;
  bool agree = false;
  std::vector<line::TraceStep> trace;
};

// plcp_to_eopl -> follow_line -> eopl_sol_to_plcp, next to lemke_solve.
// The two agree when both give the same Q1 vector or both give verified Q2
// witnesses. max_steps = 0 means 2^n.
PipelineReport run_plcp_pipeline(const lcp::LcpInstance& inst, std::uint64_t max_steps = 0,
                                 const line::TraceSink& sink = {});

// ---- EndOfMeteredLine -> EndOfPotentialLine ------------------------------

// (n+1)-bit instance with the source embedded under a leading 1 bit.
line::EoplInstance eoml_to_eopl(const line::EomlInstance& src);
// Throws ContractError when x is not a solution of the reduced instance and
// InvariantViolation when the source point fails to re-verify.
line::LineSolution eopl_sol_to_eoml(const line::EomlInstance& src, const BitConfig& x);

// ---- EndOfPotentialLine -> EndOfMeteredLine ------------------------------

// Either a solution found by the triviality pre-check (0^n or S(0^n) already
// solves the source) or an (n+m)-bit metered instance whose vertices are
// (u, pi) with pi in the low m bits.
using EoplToEoml = std::variant<line::LineSolution, line::EomlInstance>;
EoplToEoml eopl_to_eoml(const line::EoplInstance& src);
// Tries u, P(u), P(P(u)) against the source verifier.
line::LineSolution eoml_sol_to_eopl(const line::EoplInstance& src, const BitConfig& x);

// ---- Circuit problems ----------------------------------------------------

// p(x) = d(f(x), x), lambda' = (lambda+1) delta_d, eps' = (1-c) eps.
// Requires (lambda+1) delta_d >= lambda so that C2a maps to M2c.
circuit::CloInstance gc_to_clo(const circuit::MmcInstance& gc);
circuit::CircuitSolution clo_sol_to_gc(const circuit::MmcInstance& gc,
                                       const circuit::CloInstance& clo,
                                       const circuit::CircuitSolution& sol);

// d(x,y) = p(x)+p(y)+1, c = 1 - eps/4, lambda' = lambda for f and delta_d a
// rational upper bound on 2^{1-1/r} lambda for d. Requires eps < 1 and
// 0 <= p <= 1 on the probe grid.
circuit::MmcInstance clo_to_mmc(const circuit::CloInstance& clo);
circuit::CircuitSolution mmc_sol_to_clo(const circuit::CloInstance& clo,
                                        const circuit::MmcInstance& mmc,
                                        const circuit::CircuitSolution& sol);

// Identity embedding; GC solutions are MMC solutions verbatim.
circuit::MmcInstance mmc_to_gc(const circuit::MmcInstance& mmc);
circuit::CircuitSolution gc_sol_to_mmc(const circuit::MmcInstance& mmc,
                                       const circuit::CircuitSolution& sol);

// p(x) = ||f(x) - x||, lambda = c+1, eps = (1-c) delta. Norm must be 1 or inf.
circuit::CloInstance contraction_to_clo(const circuit::ContractionInstance& ci);
circuit::CircuitSolution clo_sol_to_contraction(const circuit::ContractionInstance& ci,
                                                const circuit::CloInstance& clo,
                                                const circuit::CircuitSolution& sol);

// Smallest a/2^16 with (a/2^16)^r >= 2^{r-1}, i.e. a dyadic upper bound on
// 2^{1-1/r}. Exact for r = 1 (1) and r = inf (2).
Rational continuity_factor(circuit::Norm r);

// ---- Certificates ---------------------------------------------------------

struct ReductionCertificate {
  std::string source;
  std::string target;
  std::string forward;
  std::string target_solution;
  std::string source_solution;
  bool verified = false;
  std::vector<std::string> notes;
  std::string str() const;
};

}  // namespace clslab::reduce
