#include "clslab/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "clslab/errors.hpp"

namespace clslab::reduce {

using lcp::LcpInstance;
using lcp::LemkeVertex;
using lcp::Orientation;
using lcp::Var;
using line::EomlInstance;
using line::EoplInstance;
using line::LineSolution;
using line::SolutionKind;

namespace {

BigInt denominator_lcm(const LcpInstance& inst) {
  BigInt l = 1;
  auto fold = [&](const Rational& x) {
    BigInt den = x.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  };
  const std::size_t d = inst.dim();
  for (std::size_t r = 0; r < d; ++r) {
    fold(inst.q()[r]);
    for (std::size_t c = 0; c < d; ++c) fold(inst.M()(r, c));
  }
  return l;
}

LcpInstance scale_instance(const LcpInstance& inst, const BigInt& l) {
  const std::size_t d = inst.dim();
  QMatrix m(d, d);
  QVector q(d);
  for (std::size_t r = 0; r < d; ++r) {
    q[r] = inst.q()[r] * Rational(l);
    for (std::size_t c = 0; c < d; ++c) m(r, c) = inst.M()(r, c) * Rational(l);
  }
  return LcpInstance(std::move(m), std::move(q));
}

// Encoding of a vertex read off its tight set.
BitConfig config_of(const LemkeVertex& v, std::size_t d) {
  BitConfig u(2 * d);
  for (std::size_t i = 0; i < d; ++i) u.set(i, v.is_tight(Var::s(i)));
  if (v.dup_label) u.set(d + *v.dup_label, true);
  return u;
}

}  // namespace

PlcpEoplContext::PlcpEoplContext(LcpInstance inst)
    : inst_(std::move(inst)), scaled_(inst_) {
  const std::size_t d = inst_.dim();
  if (std::all_of(inst_.q().begin(), inst_.q().end(), [](const Rational& x) { return x.sign() >= 0; }))
    throw PreconditionError("q >= 0: y = 0 solves the instance, there is no line to build");
  scale_ = denominator_lcm(inst_);
  scaled_ = scale_instance(inst_, scale_);

  i_max_ = 0;
  for (std::size_t r = 0; r < d; ++r) {
    i_max_ = std::max(i_max_, BigInt(abs(scaled_.q()[r].numerator())));
    for (std::size_t c = 0; c < d; ++c)
      i_max_ = std::max(i_max_, BigInt(abs(scaled_.M()(r, c).numerator())));
  }
  BigInt fact, power;
  mpz_fac_ui(fact.get_mpz_t(), 2 * d);
  mpz_pow_ui(power.get_mpz_t(), i_max_.get_mpz_t(), 2 * d + 1);
  delta_ = fact * power + 1;
  BigInt top = 2 * delta_ * delta_ * delta_ - 1;
  m_ = mpz_sizeinbase(top.get_mpz_t(), 2);

  start_ = lcp::lemke_start(scaled_);
  start_config_ = config_of(start_, d);
}

bool PlcpEoplContext::is_valid_config(const BitConfig& u) const {
  if (u.width() != n())
    throw DimensionError("configuration has " + std::to_string(u.width()) + " bits, expected " +
                         std::to_string(n()));
  if (u.is_zero()) return true;
  return vertex_of(u).has_value();
}

std::optional<LemkeVertex> PlcpEoplContext::vertex_of(const BitConfig& u) const {
  if (u.width() != n())
    throw DimensionError("configuration has " + std::to_string(u.width()) + " bits, expected " +
                         std::to_string(n()));
  if (u.is_zero()) return std::nullopt;
  {
    std::lock_guard lock(mu_);
    if (auto it = vertex_cache_.find(u); it != vertex_cache_.end()) return it->second;
  }
  const std::size_t dd = d();
  std::optional<std::size_t> dup;
  bool ok = true;
  for (std::size_t i = 0; i < dd; ++i) {
    if (!u.get(dd + i)) continue;
    if (dup) ok = false;
    dup = i;
  }
  // The canonical encoding sets u_l = 1 at the duplicate label.
  if (dup && !u.get(*dup)) ok = false;
  std::optional<LemkeVertex> v;
  if (ok) {
    std::vector<Var> tight;
    for (std::size_t i = 0; i < dd; ++i) {
      if (dup == i) {
        tight.push_back(Var::y(i));
        tight.push_back(Var::s(i));
      } else {
        tight.push_back(u.get(i) ? Var::s(i) : Var::y(i));
      }
    }
    if (!dup) tight.push_back(Var::z());
    v = lcp::vertex_from_tight(scaled_, std::move(tight));
  }
  std::lock_guard lock(mu_);
  vertex_cache_.emplace(u, v);
  return v;
}

PlcpEoplContext::Point PlcpEoplContext::etoi(const BitConfig& u) const {
  const std::size_t dd = d();
  if (u.is_zero()) {
    Rational z0 = start_.z / Rational(scale_) + Rational(1);
    QVector s(dd);
    for (std::size_t i = 0; i < dd; ++i) s[i] = inst_.q()[i] + z0;
    return {QVector(dd), s, z0};
  }
  auto v = vertex_of(u);
  if (!v) return {QVector(dd), QVector(dd), Rational(0)};
  const Rational inv = Rational(1) / Rational(scale_);
  return {v->y, inv * v->s, v->z * inv};
}

std::optional<BitConfig> PlcpEoplContext::itoe(const QVector& y, const QVector& s,
                                               const Rational&) const {
  const std::size_t dd = d();
  if (y.size() != dd || s.size() != dd) throw DimensionError("point has the wrong dimension");
  BitConfig u(2 * dd);
  std::optional<std::size_t> dup;
  for (std::size_t i = 0; i < dd; ++i) {
    if (!y[i].is_zero() && !s[i].is_zero()) return std::nullopt;
    if (y[i].is_zero() && s[i].is_zero()) {
      if (dup) return std::nullopt;
      dup = i;
    }
    u.set(i, s[i].is_zero());
  }
  if (dup) u.set(dd + *dup, true);
  return u;
}

std::optional<BitConfig> PlcpEoplContext::itoe(const LemkeVertex& v) const {
  return itoe(v.y, v.s, v.z);
}

BitConfig PlcpEoplContext::step(const BitConfig& u, Dir dir) const {
  auto& cache = dir == Dir::succ ? succ_cache_ : pred_cache_;
  {
    std::lock_guard lock(mu_);
    if (auto it = cache.find(u); it != cache.end()) return it->second;
  }
  BitConfig out = u;
  if (auto v = vertex_of(u)) {
    const Orientation want = dir == Dir::succ ? Orientation::forward : Orientation::backward;
    std::optional<Var> entering;
    if (v->dup_label) {
      const std::size_t l = *v->dup_label;
      const bool y_fits = lcp::todd_orientation(scaled_, *v, Var::y(l)) == want;
      const bool s_fits = lcp::todd_orientation(scaled_, *v, Var::s(l)) == want;
      if (y_fits == s_fits)
        throw InvariantViolation("both edges at " + u.str() + " point the same way");
      entering = y_fits ? Var::y(l) : Var::s(l);
    } else if (lcp::todd_orientation(scaled_, *v, Var::z()) == want) {
      entering = Var::z();
    }
    if (entering) {
      auto next = lcp::lemke_pivot(scaled_, *v, *entering);
      if (!next.is_ray()) {
        const LemkeVertex& w = next.vertex();
        const bool moves = dir == Dir::succ ? w.z < v->z : w.z > v->z;
        if (moves) {
          out = config_of(w, d());
          if (itoe(w) != out)
            throw DegeneracyError("vertex " + out.str() + " has an extra zero coordinate", {});
        }
      }
    }
  }
  std::lock_guard lock(mu_);
  cache.emplace(u, out);
  return out;
}

BitConfig PlcpEoplContext::S(const BitConfig& u) const {
  if (!is_valid_config(u)) return u;
  if (u.is_zero()) return start_config_;
  return step(u, Dir::succ);
}

BitConfig PlcpEoplContext::P(const BitConfig& u) const {
  if (!is_valid_config(u) || u.is_zero()) return u;
  if (u == start_config_) return BitConfig(n());
  return step(u, Dir::pred);
}

BigInt PlcpEoplContext::V(const BitConfig& u) const {
  auto v = vertex_of(u);
  if (!v) return 0;
  const Rational d2 = Rational(delta_ * delta_);
  return (d2 * (Rational(delta_) - v->z)).floor();
}

PlcpReduction plcp_to_eopl(const LcpInstance& inst) {
  auto ctx = std::make_shared<const PlcpEoplContext>(inst);
  auto oracle = std::make_shared<line::FunctionOracle>(
      ctx->n(), [ctx](const BitConfig& u) { return ctx->S(u); },
      [ctx](const BitConfig& u) { return ctx->P(u); },
      [ctx](const BitConfig& u) { return ctx->V(u); });
  return PlcpReduction{ctx, EoplInstance(oracle, ctx->m())};
}

lcp::LcpOutcome eopl_sol_to_plcp(const PlcpReduction& red, const BitConfig& u) {
  const PlcpEoplContext& ctx = *red.ctx;
  if (u.is_zero()) throw PreconditionError("0^n is the dummy start, not a solution");
  line::Verdict verdict = line::eopl_verify(red.eopl, u);
  if (!verdict.kind) throw ContractError(u.str() + " is not a solution of the reduced instance");
  if (*verdict.kind == SolutionKind::R2)
    throw InvariantViolation("potential fails to increase along a valid edge at " + u.str());
  auto v = ctx.vertex_of(u);
  if (!v) throw InvariantViolation(u.str() + " is an end of line but encodes no vertex");
  lcp::LcpOutcome out;
  if (v->z.is_zero()) {
    out = lcp::Q1{v->y};
  } else {
    // Tight sets carry over unchanged, and so does the index set of any
    // minor; its value is recomputed on the unscaled matrix.
    lcp::Q2 w = lcp::extract_q2_witness(ctx.instance(), *v);
    out = w;
  }
  if (!lcp::verify_outcome(ctx.instance(), out))
    throw InvariantViolation("back-mapped outcome " + lcp::format_outcome(out) + " does not verify");
  return out;
}

PipelineReport run_plcp_pipeline(const LcpInstance& inst, std::uint64_t max_steps,
                                 const line::TraceSink& sink) {
  PipelineReport rep;
  rep.direct = lcp::lemke_solve(inst).outcome;
  const bool trivial = std::all_of(inst.q().begin(), inst.q().end(),
                                   [](const Rational& x) { return x.sign() >= 0; });
  if (trivial) {
    rep.via_line = lcp::Q1{QVector(inst.dim())};
  } else {
    PlcpReduction red = plcp_to_eopl(inst);
    if (max_steps == 0)
      max_steps = red.ctx->n() < 63 ? (std::uint64_t{1} << red.ctx->n()) : UINT64_MAX;
    auto res = line::follow_line(red.eopl, max_steps, sink);
    rep.trace = std::move(res.trace);
    rep.via_line = eopl_sol_to_plcp(red, res.solution.x);
  }
  const auto* a = std::get_if<lcp::Q1>(&rep.via_line);
  const auto* b = std::get_if<lcp::Q1>(&rep.direct);
  if (a && b)
    rep.agree = a->y == b->y;
  else if (!a && !b)
    rep.agree = lcp::verify_outcome(inst, rep.via_line) && lcp::verify_outcome(inst, rep.direct);
  return rep;
}

// ---- EOML -> EOPL --------------------------------------------------------

namespace {

BitConfig prepend(bool b, const BitConfig& u) {
  BitConfig head(1);
  head.set(0, b);
  return concat(head, u);
}

}  // namespace

line::EoplInstance eoml_to_eopl(const EomlInstance& src) {
  auto s = std::make_shared<EomlInstance>(src);
  const std::size_t n = src.n();
  const std::size_t k = n + 1;
  auto succ = [s, n](const BitConfig& x) {
    const bool b = x.get(0);
    const BitConfig u = x.slice(1, n);
    if (x.is_zero()) return prepend(true, u);
    if (!b) return x;
    if (s->V(u) == 0) return x;
    return prepend(true, s->S(u));
  };
  auto pred = [s, n](const BitConfig& x) {
    const bool b = x.get(0);
    const BitConfig u = x.slice(1, n);
    if (x.is_zero()) return x;
    if (!b) return x;
    if (u.is_zero()) return BitConfig(n + 1);
    if (s->V(u) == 0) return x;
    return prepend(true, s->P(u));
  };
  auto pot = [s, n](const BitConfig& x) -> BigInt {
    if (!x.get(0)) return 0;
    return s->V(x.slice(1, n));
  };
  return EoplInstance(std::make_shared<line::FunctionOracle>(k, succ, pred, pot), k);
}

LineSolution eopl_sol_to_eoml(const EomlInstance& src, const BitConfig& x) {
  EoplInstance red = eoml_to_eopl(src);
  if (x.width() != red.n())
    throw DimensionError("solution has " + std::to_string(x.width()) + " bits, expected " +
                         std::to_string(red.n()));
  if (!line::eopl_verify(red, x).kind)
    throw ContractError(x.str() + " is not a solution of the reduced instance");
  if (!x.get(0)) throw InvariantViolation("solution " + x.str() + " lies among the dummy vertices");
  const BitConfig u = x.slice(1, src.n());
  line::Verdict v = line::eoml_verify(src, u);
  if (!v.kind) throw InvariantViolation(u.str() + " does not solve the source instance");
  return {*v.kind, u};
}

// ---- EOPL -> EOML --------------------------------------------------------

namespace {

// Vertices (u, pi) with u in the high n bits and pi in the low m bits. The
// case lists run top to bottom, first match wins; anything unmatched is a
// self-loop.
class MeteredOracle : public line::LineOracle {
 public:
  explicit MeteredOracle(std::shared_ptr<const EoplInstance> src)
      : src_(std::move(src)), n_(src_->n()), m_(src_->m()), zero_(n_) {
    s0_ = src_->S(zero_);
    ss0_ = src_->S(s0_);
    p_ss0_ = src_->V(ss0_);
  }

  std::size_t n() const override { return n_ + m_; }

  BitConfig S(const BitConfig& x) const override {
    const BitConfig u = x.slice(0, n_);
    const BigInt pi = x.slice(n_, m_).to_integer();
    if ((u == zero_ && pi == 1) || u == s0_) return x;
    if (x.is_zero()) return p_ss0_ == 2 ? pack(ss0_, 2) : pack(zero_, 2);
    if (u == zero_) {
      const BigInt& pp = p_ss0_;
      if (2 <= pi && pi < pp - 1) return pack(zero_, pi + 1);
      if (pi == pp - 1) return pack(ss0_, pp);
      return x;
    }
    const BitConfig u2 = src_->S(u);
    const BigInt pp = src_->V(u2);
    const BigInt p = src_->V(u);
    if (src_->P(u2) != u || u2 == u) return x;
    if ((pi == p && p == pp) || (pi == p && pp == p + 1) || (pi == p && pp == p - 1))
      return pack(u2, pp);
    if ((pi < p && p <= pp) || (p <= pp && pp <= pi) || (pi > p && p >= pp) ||
        (p >= pp && pp >= pi))
      return x;
    if (p < pp) {
      if (p <= pi && pi < pp - 1) return pack(u, pi + 1);
      if (pi == pp - 1) return pack(u2, pp);
    }
    if (p > pp) {
      if (p >= pi && pi > pp + 1) return pack(u, pi - 1);
      if (pi == pp + 1) return pack(u2, pp);
    }
    return x;
  }

  BitConfig P(const BitConfig& x) const override {
    const BitConfig u = x.slice(0, n_);
    const BigInt pi = x.slice(n_, m_).to_integer();
    if ((u == zero_ && pi == 1) || u == s0_) return x;
    if (u == zero_) {
      if (pi == 0) return BitConfig(n());
      if (pi < p_ss0_ && pi != 1 && pi != 2) return pack(zero_, pi - 1);
      if (pi < p_ss0_ && pi == 2) return BitConfig(n());
    }
    if (u == ss0_ && pi == p_ss0_) return pi == 2 ? pack(zero_, 0) : pack(zero_, pi - 1);
    const BigInt p = src_->V(u);
    if (pi == p) {
      const BitConfig u2 = src_->P(u);
      const BigInt pp = src_->V(u2);
      if (src_->S(u2) != u || u2 == u) return x;
      if (p == pp) return pack(u2, pp);
      return pp < p ? pack(u2, p - 1) : pack(u2, p + 1);
    }
    const BitConfig u2 = src_->S(u);
    const BigInt pp = src_->V(u2);
    if (src_->P(u2) != u || u2 == u) return x;
    if (pp == p || (pi < p && p < pp) || (p < pp && pp <= pi) || (pi > p && p > pp) ||
        (p > pp && pp >= pi))
      return x;
    if (p < pp && p < pi && pi <= pp - 1) return pack(u, pi - 1);
    if (p > pp && p > pi && pi >= pp + 1) return pack(u, pi + 1);
    return x;
  }

  BigInt V(const BitConfig& x) const override {
    if (x.is_zero()) return 1;
    if (S(x) == x && P(x) == x) return 0;
    return x.slice(n_, m_).to_integer();
  }

 private:
  BitConfig pack(const BitConfig& u, const BigInt& pi) const {
    return concat(u, BitConfig::from_integer(m_, pi));
  }

  std::shared_ptr<const EoplInstance> src_;
  std::size_t n_, m_;
  BitConfig zero_, s0_, ss0_;
  BigInt p_ss0_;
};

}  // namespace

EoplToEoml eopl_to_eoml(const EoplInstance& src) {
  const BitConfig zero = src.zero();
  if (auto k = line::eopl_verify(src, zero).kind) return LineSolution{*k, zero};
  const BitConfig s0 = src.S(zero);
  if (auto k = line::eopl_verify(src, s0).kind) return LineSolution{*k, s0};
  auto oracle = std::make_shared<MeteredOracle>(std::make_shared<EoplInstance>(src));
  return EomlInstance(oracle);
}

LineSolution eoml_sol_to_eopl(const EoplInstance& src, const BitConfig& x) {
  const std::size_t n = src.n();
  if (x.width() != n + src.m())
    throw DimensionError("solution has " + std::to_string(x.width()) + " bits, expected " +
                         std::to_string(n + src.m()));
  EoplToEoml red = eopl_to_eoml(src);
  if (const auto* inst = std::get_if<EomlInstance>(&red)) {
    if (!line::eoml_verify(*inst, x).kind)
      throw ContractError(x.str() + " is not a solution of the reduced instance");
  }
  const BitConfig u = x.slice(0, n);
  const BitConfig pu = src.P(u);
  for (const BitConfig& cand : {u, pu, src.P(pu)})
    if (auto k = line::eopl_verify(src, cand).kind) return {*k, cand};
  throw InvariantViolation("none of u, P(u), P(P(u)) solves the source for u = " + u.str());
}

// ---- Circuit reductions ----------------------------------------------------

namespace {

using circuit::ArithCircuit;
using circuit::CircuitBuilder;
using circuit::CircuitSolution;
using circuit::CloInstance;
using circuit::ContractionInstance;
using circuit::MmcInstance;
using circuit::SolKind;

std::vector<std::size_t> inputs(const CircuitBuilder& b, std::size_t from, std::size_t count) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(b.input(from + i));
  return out;
}

template <class Check>
CircuitSolution first_verified(std::initializer_list<CircuitSolution> cands, Check check,
                               const std::string& what) {
  for (const auto& c : cands)
    if (check(c).ok) return c;
  throw InvariantViolation("no candidate image of the " + what + " solution verifies");
}

void require_solution(bool ok, const CircuitSolution& sol, const char* problem) {
  if (!ok)
    throw ContractError(circuit::format_solution(sol) + " is not a " + problem + " solution");
}

}  // namespace

CloInstance gc_to_clo(const MmcInstance& gc) {
  gc.validate();
  const Rational lambda2 = (gc.lambda + Rational(1)) * gc.delta_d;
  if (lambda2 < gc.lambda)
    throw PreconditionError("(lambda+1) delta_d = " + lambda2.str() + " is below lambda = " +
                            gc.lambda.str() + "; f-violations would have no image");
  CircuitBuilder b(gc.dim);
  auto x = inputs(b, 0, gc.dim);
  auto fx = b.splice(gc.f, x);
  std::vector<std::size_t> args = fx;
  args.insert(args.end(), x.begin(), x.end());
  auto dv = b.splice(gc.d, args);
  CloInstance clo;
  clo.f = gc.f;
  clo.p = b.build({dv[0]});
  clo.eps = (Rational(1) - gc.c) * gc.eps;
  clo.lambda = lambda2;
  clo.norm = gc.norm;
  clo.dim = gc.dim;
  return clo;
}

CircuitSolution clo_sol_to_gc(const MmcInstance& gc, const CloInstance& clo,
                              const CircuitSolution& sol) {
  require_solution(circuit::clo_verify(clo, sol).ok, sol, "CLO");
  auto check = [&](const CircuitSolution& c) { return circuit::mmc_verify(gc, c); };
  const auto& pts = sol.points;
  switch (sol.kind) {
    case SolKind::C1: {
      const QVector fx = clo.f.eval(pts[0]);
      return first_verified({{SolKind::M1, {pts[0]}, 0}, {SolKind::M2a, {fx, pts[0]}, 0}}, check,
                            "C1");
    }
    case SolKind::C2a:
      return first_verified({{SolKind::M2c, {pts[0], pts[1]}, 0}}, check, "C2a");
    case SolKind::C2b: {
      const QVector fx = clo.f.eval(pts[0]), fy = clo.f.eval(pts[1]);
      return first_verified({{SolKind::M2b, {fx, pts[0], fy, pts[1]}, 0},
                             {SolKind::M2c, {pts[0], pts[1]}, 0}},
                            check, "C2b");
    }
    default: break;
  }
  throw PreconditionError(circuit::to_string(sol.kind) + " is not a CLO solution");
}

Rational continuity_factor(circuit::Norm r) {
  if (r.is_infinity()) return Rational(2);
  if (r.r == 1) return Rational(1);
  const unsigned long bits = 16;
  BigInt lo = BigInt(1) << bits, hi = BigInt(2) << bits;
  // Invariant: (hi/2^bits)^r >= 2^{r-1}.
  BigInt target = BigInt(1) << ((r.r - 1) + bits * r.r);
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), mid.get_mpz_t(), r.r);
    if (pw >= target)
      hi = mid;
    else
      lo = mid;
  }
  return Rational(hi, BigInt(1) << bits);
}

MmcInstance clo_to_mmc(const CloInstance& clo) {
  clo.validate();
  if (clo.eps >= Rational(1))
    throw PreconditionError("eps = " + clo.eps.str() + " must be below 1");
  for (const auto& x : circuit::unit_grid(clo.dim, 3)) {
    Rational px = clo.p.eval(x)[0];
    if (px.sign() < 0 || px > Rational(1))
      throw PreconditionError("p(" + x.str() + ") = " + px.str() + " leaves [0,1]");
  }
  CircuitBuilder b(2 * clo.dim);
  auto px = b.splice(clo.p, inputs(b, 0, clo.dim));
  auto py = b.splice(clo.p, inputs(b, clo.dim, clo.dim));
  const std::size_t one = b.constant(Rational(1));
  const std::size_t sum = b.add(b.add(px[0], py[0]), one);
  MmcInstance mmc;
  mmc.f = clo.f;
  mmc.d = b.build({sum});
  mmc.norm = clo.norm;
  mmc.eps = clo.eps;
  mmc.c = Rational(1) - clo.eps / Rational(4);
  mmc.lambda = clo.lambda;
  mmc.delta_d = continuity_factor(clo.norm) * clo.lambda;
  mmc.dim = clo.dim;
  mmc.validate();
  return mmc;
}

CircuitSolution mmc_sol_to_clo(const CloInstance& clo, const MmcInstance& mmc,
                               const CircuitSolution& sol) {
  require_solution(circuit::mmc_verify(mmc, sol).ok, sol, "MetametricContraction");
  auto check = [&](const CircuitSolution& c) { return circuit::clo_verify(clo, c); };
  const auto& pts = sol.points;
  switch (sol.kind) {
    case SolKind::M1:
      throw ContractError("M1 cannot occur: d >= 1 everywhere while eps < 1");
    case SolKind::M2a:
      return first_verified({{SolKind::C1, {pts[0]}, 0}, {SolKind::C1, {pts[1]}, 0}}, check,
                            "M2a");
    case SolKind::M2b:
      return first_verified({{SolKind::C2b, {pts[0], pts[2]}, 0},
                             {SolKind::C2b, {pts[1], pts[3]}, 0}},
                            check, "M2b");
    case SolKind::M2c:
      return first_verified({{SolKind::C2a, {pts[0], pts[1]}, 0}}, check, "M2c");
    case SolKind::MMviol:
      throw ContractError("meta-metric violation: p leaves [0,1] off the probe grid");
    default: break;
  }
  throw PreconditionError(circuit::to_string(sol.kind) + " is not an MMC solution");
}

MmcInstance mmc_to_gc(const MmcInstance& mmc) {
  MmcInstance gc = mmc;
  gc.general = true;
  return gc;
}

CircuitSolution gc_sol_to_mmc(const MmcInstance& mmc, const CircuitSolution& sol) {
  require_solution(circuit::mmc_verify(mmc_to_gc(mmc), sol).ok, sol, "GeneralContraction");
  if (!circuit::mmc_verify(mmc, sol).ok)
    throw InvariantViolation("GC solution does not re-verify on the MMC instance");
  return sol;
}

CloInstance contraction_to_clo(const ContractionInstance& ci) {
  ci.validate();
  if (!ci.norm.is_infinity() && ci.norm.r != 1)
    throw PreconditionError("contraction reduction needs the 1-norm or the inf-norm, got " +
                            ci.norm.str());
  CircuitBuilder b(ci.dim);
  auto x = inputs(b, 0, ci.dim);
  auto fx = b.splice(ci.f, x);
  std::size_t acc = b.abs(b.sub(fx[0], x[0]));
  for (std::size_t i = 1; i < ci.dim; ++i) {
    std::size_t term = b.abs(b.sub(fx[i], x[i]));
    acc = ci.norm.is_infinity() ? b.max(acc, term) : b.add(acc, term);
  }
  CloInstance clo;
  clo.f = ci.f;
  clo.p = b.build({acc});
  clo.lambda = ci.c + Rational(1);
  clo.eps = (Rational(1) - ci.c) * ci.delta;
  clo.norm = ci.norm;
  clo.dim = ci.dim;
  return clo;
}

CircuitSolution clo_sol_to_contraction(const ContractionInstance& ci, const CloInstance& clo,
                                       const CircuitSolution& sol) {
  require_solution(circuit::clo_verify(clo, sol).ok, sol, "CLO");
  auto check = [&](const CircuitSolution& c) { return circuit::contraction_verify(ci, c); };
  const auto& pts = sol.points;
  switch (sol.kind) {
    case SolKind::C1: {
      const QVector fx = ci.f.eval(pts[0]);
      return first_verified({{SolKind::CM1, {pts[0]}, 0}, {SolKind::CM2, {fx, pts[0]}, 0}}, check,
                            "C1");
    }
    case SolKind::C2a:
    case SolKind::C2b:
      return first_verified({{SolKind::CM2, {pts[0], pts[1]}, 0}}, check,
                            circuit::to_string(sol.kind));
    default: break;
  }
  throw PreconditionError(circuit::to_string(sol.kind) + " is not a CLO solution");
}

std::string ReductionCertificate::str() const {
  std::ostringstream os;
  os << "certificate\n"
     << "  source:          " << source << '\n'
     << "  target:          " << target << '\n'
     << "  forward:         " << forward << '\n'
     << "  target solution: " << target_solution << '\n'
     << "  source solution: " << source_solution << '\n'
     << "  verified:        " << (verified ? "yes" : "no") << '\n';
  for (const auto& n : notes) os << "  note: " << n << '\n';
  return os.str();
}

}  // namespace clslab::reduce
