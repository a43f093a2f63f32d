#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "clslab/matrix.hpp"

namespace clslab {
class TokenLines;
}

namespace clslab::circuit {

enum class Op { CONST, ADD, SUB, MUL, MAX, MIN, ABS };

// Node numbering: 0..arity-1 are the inputs, arity+j is gate j. A gate may
// only reference nodes numbered below its own.
struct Gate {
  Op op = Op::CONST;
  std::size_t a = 0;
  std::size_t b = 0;
  Rational value;  // CONST only
  friend bool operator==(const Gate&, const Gate&) = default;
};

class ArithCircuit {
 public:
  ArithCircuit() = default;
  // Throws DimensionError on forward references or an empty output list.
  ArithCircuit(std::size_t arity, std::vector<Gate> gates, std::vector<std::size_t> outputs);

  std::size_t arity() const { return arity_; }
  std::size_t output_count() const { return outputs_.size(); }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::size_t>& outputs() const { return outputs_; }

  // Exact evaluation; throws DimensionError when x has the wrong length.
  QVector eval(const QVector& x) const;

  friend bool operator==(const ArithCircuit&, const ArithCircuit&) = default;

 private:
  std::size_t arity_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::size_t> outputs_;
};

class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::size_t arity) : arity_(arity) {}

  std::size_t input(std::size_t i) const;
  std::size_t constant(const Rational& v);
  std::size_t add(std::size_t a, std::size_t b) { return push(Op::ADD, a, b); }
  std::size_t sub(std::size_t a, std::size_t b) { return push(Op::SUB, a, b); }
  std::size_t mul(std::size_t a, std::size_t b) { return push(Op::MUL, a, b); }
  std::size_t max(std::size_t a, std::size_t b) { return push(Op::MAX, a, b); }
  std::size_t min(std::size_t a, std::size_t b) { return push(Op::MIN, a, b); }
  std::size_t abs(std::size_t a) { return push(Op::ABS, a, a); }

  // Splices in a copy of `c` with its inputs wired to `args`; returns the
  // nodes carrying c's outputs.
  std::vector<std::size_t> splice(const ArithCircuit& c, const std::vector<std::size_t>& args);

  ArithCircuit build(std::vector<std::size_t> outputs) const;

 private:
  std::size_t push(Op op, std::size_t a, std::size_t b);
  std::size_t arity_;
  std::vector<Gate> gates_;
};

// Convenience circuits on `dim` inputs.
ArithCircuit identity_circuit(std::size_t dim);
ArithCircuit constant_circuit(std::size_t dim, const Rational& v);
// x -> k*x + b coordinatewise.
ArithCircuit affine_circuit(std::size_t dim, const Rational& k, const QVector& b);

// Circuit text: `ARITH arity n_gates n_outputs`, n_gates gate lines
// (`CONST p/q`, `ADD i j`, `SUB i j`, `MUL i j`, `MAX i j`, `MIN i j`,
// `ABS i`), then one line of output node indices.
ArithCircuit parse_circuit(std::istream& in);
ArithCircuit parse_circuit(TokenLines& lines);
std::string format_circuit(const ArithCircuit& c);

// r-norm selector: r >= 1, or infinity.
struct Norm {
  std::uint32_t r = 1;  // 0 encodes infinity
  static Norm one() { return {1}; }
  static Norm infinity() { return {0}; }
  bool is_infinity() const { return r == 0; }
  std::string str() const;
  static Norm parse(const std::string& text);  // "1", "2", ..., "inf"
  friend bool operator==(const Norm&, const Norm&) = default;
};

// The norm for r in {1, inf}; for other r, the r-th power of the norm.
Rational norm_pow(const QVector& v, Norm r);
// ||u|| > k ||v||, decided exactly by comparing r-th powers when needed.
bool norm_exceeds(const QVector& u, const Rational& k, const QVector& v, Norm r);
// |a| > k ||v|| for a scalar a.
bool scalar_exceeds(const Rational& a, const Rational& k, const QVector& v, Norm r);

struct CloInstance {
  ArithCircuit f;  // dim -> dim
  ArithCircuit p;  // dim -> 1
  Rational eps;
  Rational lambda;
  Norm norm = Norm::one();
  std::size_t dim = 3;
  void validate() const;  // throws DimensionError / PreconditionError
};

struct ContractionInstance {
  ArithCircuit f;
  Norm norm = Norm::one();
  Rational eps;
  Rational c;
  Rational delta;
  std::size_t dim = 3;
  void validate() const;
};

// MetametricContraction, or GeneralContraction when `general` is set (which
// excludes meta-metric violations as solutions).
struct MmcInstance {
  ArithCircuit f;  // dim -> dim
  ArithCircuit d;  // 2 dim -> 1
  Norm norm = Norm::one();
  Rational eps;
  Rational c;
  Rational delta_d;  // continuity bound for d
  Rational lambda;   // continuity bound for f
  std::size_t dim = 3;
  bool general = false;
  void validate() const;
};

enum class SolKind { C1, C2a, C2b, CM1, CM2, M1, M2a, M2b, M2c, MMviol };
std::string to_string(SolKind k);

// Points in the order the defining inequality names them. MMviol carries the
// violated meta-metric property (1..4) and two or three points.
struct CircuitSolution {
  SolKind kind;
  std::vector<QVector> points;
  int property = 0;
  friend bool operator==(const CircuitSolution&, const CircuitSolution&) = default;
};

std::string format_solution(const CircuitSolution& s);
CircuitSolution parse_solution(const std::string& text);

struct CheckResult {
  bool ok = false;
  std::vector<std::string> notes;
};

// Throw DomainError for points outside [0,1]^dim and PreconditionError for
// a solution kind that does not belong to the problem.
CheckResult clo_verify(const CloInstance& inst, const CircuitSolution& sol);
CheckResult contraction_verify(const ContractionInstance& inst, const CircuitSolution& sol);
CheckResult mmc_verify(const MmcInstance& inst, const CircuitSolution& sol);

// First meta-metric violation on the sample: nonnegativity, zero distance
// between distinct points, symmetry (all pairs), then the triangle
// inequality (all triples).
std::optional<CircuitSolution> check_metametric(const ArithCircuit& d,
                                                const std::vector<QVector>& points);

// All points of {0, 1/(k-1), ..., 1}^dim.
std::vector<QVector> unit_grid(std::size_t dim, std::size_t k);
// First grid point (k per axis) whose image leaves [0,1]^dim, if any.
std::optional<QVector> probe_domain(const ArithCircuit& f, std::size_t dim, std::size_t k = 3);
bool in_unit_cube(const QVector& x);

struct SolveResult {
  CircuitSolution solution;
  std::vector<QVector> trace;  // iterates, starting point first
};

// x <- f(x) until C1 holds at x, testing each (x, f(x)) pair for C2a/C2b.
// Throws DomainError on escape and BudgetExceeded after `budget` steps.
SolveResult clo_solve_iterate(const CloInstance& inst, const QVector& start, std::uint64_t budget);
// Banach iteration until CM1 / M1, testing consecutive pairs for violations.
SolveResult fixpoint_iterate(const ContractionInstance& inst, const QVector& start,
                             std::uint64_t budget);
SolveResult fixpoint_iterate(const MmcInstance& inst, const QVector& start, std::uint64_t budget);

// Problem file: a header line (CLO | CONTRACTION | MMC | GC), `key value`
// lines for dim, norm, eps, lambda, c, delta, delta_d, then `circuit NAME`
// sections (f, p, d) each followed by a circuit body.
using AnyCircuitProblem = std::variant<CloInstance, ContractionInstance, MmcInstance>;
AnyCircuitProblem parse_circuit_problem(std::istream& in);
std::string format_problem(const CloInstance& inst);
std::string format_problem(const ContractionInstance& inst);
std::string format_problem(const MmcInstance& inst);

}  // namespace clslab::circuit
