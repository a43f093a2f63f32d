#include "clslab/line.hpp"

#include <ostream>
#include <set>

#include "clslab/text_io.hpp"

namespace clslab::line {

BitConfig BitConfig::parse(std::string_view text) {
  BitConfig b;
  for (char c : text) {
    if (c != '0' && c != '1') throw ParseError("bit string '" + std::string(text) + "' has non-bit characters");
  }
  b.bits_ = std::string(text);
  return b;
}

BitConfig BitConfig::from_index(std::size_t width, std::uint64_t value) {
  BitConfig b(width);
  for (std::size_t i = 0; i < width && i < 64; ++i)
    b.set(width - 1 - i, (value >> i) & 1U);
  return b;
}

BitConfig BitConfig::from_integer(std::size_t width, const BigInt& value) {
  if (value < 0) throw PreconditionError("negative value cannot be encoded in bits");
  if (mpz_sizeinbase(value.get_mpz_t(), 2) > width && value != 0)
    throw PreconditionError("value " + value.get_str() + " does not fit in " +
                            std::to_string(width) + " bits");
  BitConfig b(width);
  for (std::size_t i = 0; i < width; ++i)
    b.set(width - 1 - i, mpz_tstbit(value.get_mpz_t(), i));
  return b;
}

std::uint64_t BitConfig::index() const {
  if (width() > 64) throw PreconditionError("bit string too wide for a machine index");
  std::uint64_t v = 0;
  for (char c : bits_) v = (v << 1) | (c == '1' ? 1U : 0U);
  return v;
}

BigInt BitConfig::to_integer() const {
  BigInt v = 0;
  for (char c : bits_) v = v * 2 + (c == '1' ? 1 : 0);
  return v;
}

BitConfig BitConfig::slice(std::size_t from, std::size_t len) const {
  BitConfig b;
  b.bits_ = bits_.substr(from, len);
  return b;
}

BitConfig concat(const BitConfig& a, const BitConfig& b) {
  BitConfig out;
  out.bits_ = a.bits_ + b.bits_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const BitConfig& b) { return os << b.str(); }

TruthTableOracle::TruthTableOracle(std::size_t n) : n_(n) {
  if (n == 0 || n > 20) throw PreconditionError("truth tables support 1 <= n <= 20");
  rows_.resize(std::size_t{1} << n);
}

void TruthTableOracle::set(const BitConfig& x, Entry e) {
  if (x.width() != n_ || e.S.width() != n_ || e.P.width() != n_)
    throw DimensionError("truth-table entry has the wrong width");
  rows_[x.index()] = std::move(e);
}

std::shared_ptr<TruthTableOracle> TruthTableOracle::tabulate(const LineOracle& src) {
  auto table = std::make_shared<TruthTableOracle>(src.n());
  for (std::uint64_t i = 0; i < table->rows_.size(); ++i) {
    BitConfig x = BitConfig::from_index(src.n(), i);
    table->rows_[i] = Entry{src.S(x), src.P(x), src.V(x)};
  }
  return table;
}

const TruthTableOracle::Entry* TruthTableOracle::find(const BitConfig& x) const {
  const auto& row = rows_[x.index()];
  return row ? &*row : nullptr;
}

BitConfig TruthTableOracle::S(const BitConfig& x) const {
  const Entry* e = find(x);
  return e ? e->S : x;
}

BitConfig TruthTableOracle::P(const BitConfig& x) const {
  const Entry* e = find(x);
  return e ? e->P : x;
}

BigInt TruthTableOracle::V(const BitConfig& x) const {
  const Entry* e = find(x);
  return e ? e->V : BigInt(0);
}

LineInstance::LineInstance(std::shared_ptr<const LineOracle> oracle, BigInt bound)
    : oracle_(std::move(oracle)), bound_(std::move(bound)) {
  if (!oracle_) throw PreconditionError("line instance needs an oracle");
  if (oracle_->n() == 0) throw DimensionError("bit width must be at least 1");
}

void LineInstance::check_width(const BitConfig& x, const char* what) const {
  if (x.width() != n())
    throw ContractError(std::string(what) + " produced/received a " + std::to_string(x.width()) +
                        "-bit string, expected " + std::to_string(n()));
}

BitConfig LineInstance::S(const BitConfig& x) const {
  check_width(x, "S");
  BitConfig y = oracle_->S(x);
  check_width(y, "S");
  return y;
}

BitConfig LineInstance::P(const BitConfig& x) const {
  check_width(x, "P");
  BitConfig y = oracle_->P(x);
  check_width(y, "P");
  return y;
}

BigInt LineInstance::V(const BitConfig& x) const {
  check_width(x, "V");
  BigInt v = oracle_->V(x);
  if (v < 0 || v > bound_)
    throw ContractError("V(" + x.str() + ") = " + v.get_str() + " outside [0, " +
                        bound_.get_str() + "]");
  return v;
}

namespace {

BigInt pow2(std::size_t k) {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, k);
  return v;
}

}  // namespace

EoplInstance::EoplInstance(std::shared_ptr<const LineOracle> oracle, std::size_t m)
    : LineInstance(std::move(oracle), pow2(m) - 1), m_(m) {
  if (m == 0) throw DimensionError("potential width must be at least 1");
}

EomlInstance::EomlInstance(std::shared_ptr<const LineOracle> oracle)
    : LineInstance(oracle, pow2(oracle ? oracle->n() : 0)) {}

std::string to_string(SolutionKind k) {
  switch (k) {
    case SolutionKind::R1: return "R1";
    case SolutionKind::R2: return "R2";
    case SolutionKind::T1: return "T1";
    case SolutionKind::T2: return "T2";
    case SolutionKind::T3: return "T3";
  }
  return "?";
}

std::string format_solution(const LineSolution& s) { return to_string(s.kind) + " " + s.x.str(); }

LineSolution parse_solution(const std::string& text) {
  auto tokens = split_ws(text);
  if (tokens.size() != 2) throw ParseError("solution must read `KIND bits`");
  static const std::pair<const char*, SolutionKind> kinds[] = {
      {"R1", SolutionKind::R1}, {"R2", SolutionKind::R2}, {"T1", SolutionKind::T1},
      {"T2", SolutionKind::T2}, {"T3", SolutionKind::T3}};
  for (const auto& [name, kind] : kinds)
    if (tokens[0] == name) return {kind, BitConfig::parse(tokens[1])};
  throw ParseError("unknown solution kind '" + tokens[0] + "'");
}

namespace {

// The end-of-line clause shared by R1 and T1.
bool end_of_line(const LineInstance& inst, const BitConfig& x, std::vector<std::string>& notes) {
  const BitConfig px = inst.P(x);
  const BitConfig sx = inst.S(x);
  const BitConfig spx = inst.S(px);
  const BitConfig psx = inst.P(sx);
  notes.push_back("S(x) = " + sx.str() + ", P(x) = " + px.str() + ", S(P(x)) = " + spx.str() +
                  ", P(S(x)) = " + psx.str());
  return (spx != x && !x.is_zero()) || psx != x;
}

}  // namespace

Verdict eopl_verify(const EoplInstance& inst, const BitConfig& x) {
  Verdict v;
  if (end_of_line(inst, x, v.notes)) {
    v.kind = SolutionKind::R1;
    return v;
  }
  const BitConfig sx = inst.S(x);
  if (sx != x) {
    BigInt gain = inst.V(sx) - inst.V(x);
    v.notes.push_back("V(S(x)) - V(x) = " + gain.get_str());
    if (gain <= 0) v.kind = SolutionKind::R2;
  } else {
    v.notes.push_back("x is a self-loop");
  }
  return v;
}

Verdict eoml_verify(const EomlInstance& inst, const BitConfig& x) {
  Verdict v;
  if (end_of_line(inst, x, v.notes)) {
    v.kind = SolutionKind::T1;
    return v;
  }
  const BigInt vx = inst.V(x);
  v.notes.push_back("V(x) = " + vx.get_str());
  if (!x.is_zero() && vx == 1) {
    v.kind = SolutionKind::T2;
    return v;
  }
  const BigInt fwd = inst.V(inst.S(x)) - vx;
  const BigInt back = vx - inst.V(inst.P(x));
  v.notes.push_back("V(S(x)) - V(x) = " + fwd.get_str() + ", V(x) - V(P(x)) = " + back.get_str());
  if ((vx > 0 && fwd != 1) || (vx > 1 && back != 1)) v.kind = SolutionKind::T3;
  return v;
}

Verdict check_claim(const EoplInstance& inst, const LineSolution& claim) {
  Verdict v;
  const BitConfig& x = claim.x;
  bool ok = false;
  switch (claim.kind) {
    case SolutionKind::R1: ok = end_of_line(inst, x, v.notes); break;
    case SolutionKind::R2: {
      const BitConfig sx = inst.S(x);
      const BigInt gain = inst.V(sx) - inst.V(x);
      const bool edge = sx != x && inst.P(sx) == x;
      v.notes.push_back(edge ? "x -> S(x) is a valid edge" : "x -> S(x) is not a valid edge");
      v.notes.push_back("V(S(x)) - V(x) = " + gain.get_str() + (gain <= 0 ? " <= 0" : " > 0"));
      ok = edge && gain <= 0;
      break;
    }
    default:
      v.notes.push_back(to_string(claim.kind) + " is not an EndOfPotentialLine solution type");
      return v;
  }
  if (ok) v.kind = claim.kind;
  return v;
}

Verdict check_claim(const EomlInstance& inst, const LineSolution& claim) {
  Verdict v;
  const BitConfig& x = claim.x;
  bool ok = false;
  switch (claim.kind) {
    case SolutionKind::T1: ok = end_of_line(inst, x, v.notes); break;
    case SolutionKind::T2: {
      const BigInt vx = inst.V(x);
      v.notes.push_back("V(x) = " + vx.get_str() + (x.is_zero() ? ", x = 0^n" : ""));
      ok = !x.is_zero() && vx == 1;
      break;
    }
    case SolutionKind::T3: {
      const BigInt vx = inst.V(x);
      const BigInt fwd = inst.V(inst.S(x)) - vx;
      const BigInt back = vx - inst.V(inst.P(x));
      v.notes.push_back("V(x) = " + vx.get_str() + ", V(S(x)) - V(x) = " + fwd.get_str() +
                        ", V(x) - V(P(x)) = " + back.get_str());
      ok = (vx > 0 && fwd != 1) || (vx > 1 && back != 1);
      break;
    }
    default:
      v.notes.push_back(to_string(claim.kind) + " is not an EndOfMeteredLine solution type");
      return v;
  }
  if (ok) v.kind = claim.kind;
  return v;
}

namespace {

std::vector<std::string> validate_common(const LineInstance& inst, long v0) {
  std::vector<std::string> fails;
  const BitConfig z = inst.zero();
  if (inst.P(z) != z) fails.push_back("P(0^n) = 0^n fails");
  if (inst.S(z) == z) fails.push_back("S(0^n) != 0^n fails");
  if (inst.V(z) != v0) fails.push_back("V(0^n) = " + std::to_string(v0) + " fails");
  return fails;
}

template <class Inst, class Verify>
FollowResult follow_impl(const Inst& inst, std::uint64_t max_steps, const TraceSink& sink,
                         Verify verify) {
  if (max_steps < 1) throw PreconditionError("max_steps must be at least 1");
  std::vector<TraceStep> trace;
  BitConfig x = inst.zero();
  for (std::uint64_t moves = 0;; ++moves) {
    TraceStep step{moves, x, inst.V(x)};
    if (sink) sink(step);
    trace.push_back(step);
    Verdict v = verify(inst, x);
    if (v.kind) return FollowResult{{*v.kind, x}, std::move(trace)};
    if (moves == max_steps)
      throw FollowBudgetExceeded("no solution within " + std::to_string(max_steps) + " steps",
                                 std::move(trace));
    x = inst.S(x);
  }
}

template <class Inst, class Verify>
std::vector<LineSolution> enumerate_impl(const Inst& inst, std::size_t limit_n, Verify verify) {
  if (limit_n > 20) throw PreconditionError("enumeration limit may not exceed 20 bits");
  if (inst.n() > limit_n)
    throw PreconditionError("instance has " + std::to_string(inst.n()) +
                            " bits, above the enumeration limit " + std::to_string(limit_n));
  std::vector<LineSolution> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << inst.n()); ++i) {
    BitConfig x = BitConfig::from_index(inst.n(), i);
    if (auto k = verify(inst, x).kind) out.push_back({*k, x});
  }
  return out;
}

template <class Inst>
void write_table(std::ostream& out, const Inst& inst, const std::string& header) {
  if (inst.n() > 16) throw PreconditionError("truth-table output is limited to n <= 16");
  out << header << '\n';
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << inst.n()); ++i) {
    BitConfig x = BitConfig::from_index(inst.n(), i);
    out << x << ' ' << inst.S(x) << ' ' << inst.P(x) << ' ' << inst.V(x).get_str() << '\n';
  }
}

}  // namespace

std::vector<std::string> validate_instance(const EoplInstance& inst) {
  return validate_common(inst, 0);
}

std::vector<std::string> validate_instance(const EomlInstance& inst) {
  return validate_common(inst, 1);
}

FollowResult follow_line(const EoplInstance& inst, std::uint64_t max_steps, const TraceSink& sink) {
  return follow_impl(inst, max_steps, sink, eopl_verify);
}

FollowResult follow_line(const EomlInstance& inst, std::uint64_t max_steps, const TraceSink& sink) {
  return follow_impl(inst, max_steps, sink, eoml_verify);
}

std::vector<LineSolution> enumerate_solutions(const EoplInstance& inst, std::size_t limit_n) {
  return enumerate_impl(inst, limit_n, eopl_verify);
}

std::vector<LineSolution> enumerate_solutions(const EomlInstance& inst, std::size_t limit_n) {
  return enumerate_impl(inst, limit_n, eoml_verify);
}

AnyLineInstance parse_line_instance(std::istream& in) {
  TokenLines lines(in);
  auto header = lines.expect("header");
  const auto& h = header.tokens;
  auto number = [&](const std::string& tok) {
    try {
      std::size_t pos = 0;
      long v = std::stol(tok, &pos);
      if (pos != tok.size() || v < 1) throw std::invalid_argument(tok);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ParseError("expected a positive integer, got '" + tok + "'", header.number);
    }
  };
  bool eopl = false;
  std::size_t n = 0, m = 0;
  if (h.size() == 3 && h[0] == "EOPL") {
    eopl = true;
    n = number(h[1]);
    m = number(h[2]);
  } else if (h.size() == 2 && h[0] == "EOML") {
    n = number(h[1]);
  } else {
    throw ParseError("header must be `EOPL n m` or `EOML n`", header.number);
  }
  if (n > 20) throw ParseError("truth tables support n <= 20", header.number);
  const BigInt bound = eopl ? BigInt((BigInt(1) << m) - 1) : BigInt(BigInt(1) << n);

  auto table = std::make_shared<TruthTableOracle>(n);
  std::set<std::uint64_t> seen;
  while (auto line = lines.next()) {
    const auto& t = line->tokens;
    if (t.size() != 4) throw ParseError("expected `x S P V`", line->number);
    BitConfig x, s, p;
    BigInt v;
    try {
      x = BitConfig::parse(t[0]);
      s = BitConfig::parse(t[1]);
      p = BitConfig::parse(t[2]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line->number);
    }
    if (x.width() != n || s.width() != n || p.width() != n)
      throw ParseError("bit strings must have width " + std::to_string(n), line->number);
    if (v.set_str(t[3], 10) != 0) throw ParseError("malformed potential '" + t[3] + "'", line->number);
    if (v < 0 || v > bound)
      throw ParseError("potential " + t[3] + " outside [0, " + bound.get_str() + "]", line->number);
    if (!seen.insert(x.index()).second)
      throw ParseError("duplicate entry for " + x.str(), line->number);
    table->set(x, {s, p, v});
  }
  if (eopl) return EoplInstance(table, m);
  return EomlInstance(table);
}

void write_truth_table(std::ostream& out, const EoplInstance& inst) {
  write_table(out, inst, "EOPL " + std::to_string(inst.n()) + " " + std::to_string(inst.m()));
}

void write_truth_table(std::ostream& out, const EomlInstance& inst) {
  write_table(out, inst, "EOML " + std::to_string(inst.n()));
}

}  // namespace clslab::line
