#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clslab/errors.hpp"
#include "clslab/rational.hpp"

namespace clslab::line {

// Fixed-width bit string. Bit 0 is the leftmost character of the text form,
// and the integer value reads the string as binary (bit 0 most significant).
class BitConfig {
 public:
  BitConfig() = default;
  explicit BitConfig(std::size_t width) : bits_(width, '0') {}

  // Throws ParseError on characters other than '0'/'1'.
  static BitConfig parse(std::string_view text);
  static BitConfig from_index(std::size_t width, std::uint64_t value);
  static BitConfig from_integer(std::size_t width, const BigInt& value);

  std::size_t width() const { return bits_.size(); }
  bool get(std::size_t i) const { return bits_[i] == '1'; }
  void set(std::size_t i, bool v) { bits_[i] = v ? '1' : '0'; }
  bool is_zero() const { return bits_.find('1') == std::string::npos; }
  const std::string& str() const { return bits_; }

  std::uint64_t index() const;  // width <= 64
  BigInt to_integer() const;
  BitConfig slice(std::size_t from, std::size_t len) const;
  friend BitConfig concat(const BitConfig& a, const BitConfig& b);

  friend bool operator==(const BitConfig&, const BitConfig&) = default;
  friend auto operator<=>(const BitConfig&, const BitConfig&) = default;

 private:
  std::string bits_;
};

std::ostream& operator<<(std::ostream& os, const BitConfig& b);

// Successor, predecessor and potential over n-bit strings. Implementations
// must be total and deterministic.
class LineOracle {
 public:
  virtual ~LineOracle() = default;
  virtual std::size_t n() const = 0;
  virtual BitConfig S(const BitConfig& x) const = 0;
  virtual BitConfig P(const BitConfig& x) const = 0;
  virtual BigInt V(const BitConfig& x) const = 0;
};

// Explicit table. Configurations without an entry are self-loops with V = 0.
class TruthTableOracle : public LineOracle {
 public:
  struct Entry {
    BitConfig S, P;
    BigInt V;
  };
  explicit TruthTableOracle(std::size_t n);

  void set(const BitConfig& x, Entry e);
  // Tabulates every configuration of `src`.
  static std::shared_ptr<TruthTableOracle> tabulate(const LineOracle& src);

  std::size_t n() const override { return n_; }
  BitConfig S(const BitConfig& x) const override;
  BitConfig P(const BitConfig& x) const override;
  BigInt V(const BitConfig& x) const override;

 private:
  const Entry* find(const BitConfig& x) const;
  std::size_t n_;
  std::vector<std::optional<Entry>> rows_;
};

// Procedural oracle from three callables.
class FunctionOracle : public LineOracle {
 public:
  using Map = std::function<BitConfig(const BitConfig&)>;
  using Potential = std::function<BigInt(const BitConfig&)>;
  FunctionOracle(std::size_t n, Map s, Map p, Potential v)
      : n_(n), s_(std::move(s)), p_(std::move(p)), v_(std::move(v)) {}

  std::size_t n() const override { return n_; }
  BitConfig S(const BitConfig& x) const override { return s_(x); }
  BitConfig P(const BitConfig& x) const override { return p_(x); }
  BigInt V(const BitConfig& x) const override { return v_(x); }

 private:
  std::size_t n_;
  Map s_, p_;
  Potential v_;
};

// Oracle access with width and potential-range checks on every call.
// Violations throw ContractError.
class LineInstance {
 public:
  std::size_t n() const { return oracle_->n(); }
  const BigInt& potential_bound() const { return bound_; }
  BitConfig zero() const { return BitConfig(n()); }
  BitConfig S(const BitConfig& x) const;
  BitConfig P(const BitConfig& x) const;
  BigInt V(const BitConfig& x) const;
  const std::shared_ptr<const LineOracle>& oracle() const { return oracle_; }

 protected:
  LineInstance(std::shared_ptr<const LineOracle> oracle, BigInt bound);

 private:
  void check_width(const BitConfig& x, const char* what) const;
  std::shared_ptr<const LineOracle> oracle_;
  BigInt bound_;
};

// EndOfPotentialLine: V takes values in [0, 2^m - 1].
class EoplInstance : public LineInstance {
 public:
  EoplInstance(std::shared_ptr<const LineOracle> oracle, std::size_t m);
  std::size_t m() const { return m_; }

 private:
  std::size_t m_;
};

// EndOfMeteredLine: V takes values in [0, 2^n].
class EomlInstance : public LineInstance {
 public:
  explicit EomlInstance(std::shared_ptr<const LineOracle> oracle);
};

enum class SolutionKind { R1, R2, T1, T2, T3 };
std::string to_string(SolutionKind k);

struct LineSolution {
  SolutionKind kind;
  BitConfig x;
  friend bool operator==(const LineSolution&, const LineSolution&) = default;
};

std::string format_solution(const LineSolution& s);    // "R1 0110"
LineSolution parse_solution(const std::string& text);  // throws ParseError

// Classification of a point with the facts that decided it.
struct Verdict {
  std::optional<SolutionKind> kind;
  std::vector<std::string> notes;
};

// R1 is reported ahead of R2; T1 ahead of T2 ahead of T3.
Verdict eopl_verify(const EoplInstance& inst, const BitConfig& x);
Verdict eoml_verify(const EomlInstance& inst, const BitConfig& x);

// Checks one claimed solution against its own defining condition only, so a
// point that is both R1 and R2 verifies under either claim. `kind` is set iff
// the claim holds; the notes carry the deciding (in)equality.
Verdict check_claim(const EoplInstance& inst, const LineSolution& claim);
Verdict check_claim(const EomlInstance& inst, const LineSolution& claim);

// Checks the promise P(0^n) = 0^n != S(0^n) and the value of V(0^n).
// Empty when all hold.
std::vector<std::string> validate_instance(const EoplInstance& inst);
std::vector<std::string> validate_instance(const EomlInstance& inst);

struct TraceStep {
  std::size_t step;
  BitConfig x;
  BigInt V;
};
using TraceSink = std::function<void(const TraceStep&)>;

struct FollowResult {
  LineSolution solution;
  std::vector<TraceStep> trace;
};

class FollowBudgetExceeded : public BudgetExceeded {
 public:
  FollowBudgetExceeded(const std::string& what, std::vector<TraceStep> trace)
      : BudgetExceeded(what), trace_(std::move(trace)) {}
  const std::vector<TraceStep>& trace() const { return trace_; }

 private:
  std::vector<TraceStep> trace_;
};

// Walks from 0^n along S, verifying each point, for at most max_steps moves.
// `sink` sees each trace step as it is produced.
FollowResult follow_line(const EoplInstance& inst, std::uint64_t max_steps,
                         const TraceSink& sink = {});
FollowResult follow_line(const EomlInstance& inst, std::uint64_t max_steps,
                         const TraceSink& sink = {});

// Every solution, by classifying all 2^n points. Requires n <= limit_n <= 20.
std::vector<LineSolution> enumerate_solutions(const EoplInstance& inst, std::size_t limit_n = 20);
std::vector<LineSolution> enumerate_solutions(const EomlInstance& inst, std::size_t limit_n = 20);

// Truth-table file: `EOPL n m` or `EOML n`, then `x S P V` lines.
using AnyLineInstance = std::variant<EoplInstance, EomlInstance>;
AnyLineInstance parse_line_instance(std::istream& in);
// Writes every configuration; refuses n > 16.
void write_truth_table(std::ostream& out, const EoplInstance& inst);
void write_truth_table(std::ostream& out, const EomlInstance& inst);

}  // namespace clslab::line
