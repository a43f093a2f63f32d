#include "clslab/circuit.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>

#include "clslab/errors.hpp"
#include "clslab/text_io.hpp"

namespace clslab::circuit {

namespace {

const char* op_name(Op op) {
  switch (op) {
    case Op::CONST: return "CONST";
    case Op::ADD: return "ADD";
    case Op::SUB: return "SUB";
    case Op::MUL: return "MUL";
    case Op::MAX: return "MAX";
    case Op::MIN: return "MIN";
    case Op::ABS: return "ABS";
  }
  return "?";
}

bool binary(Op op) { return op != Op::CONST && op != Op::ABS; }

}  // namespace

ArithCircuit::ArithCircuit(std::size_t arity, std::vector<Gate> gates,
                           std::vector<std::size_t> outputs)
    : arity_(arity), gates_(std::move(gates)), outputs_(std::move(outputs)) {
  if (outputs_.empty()) throw DimensionError("circuit needs at least one output");
  for (std::size_t j = 0; j < gates_.size(); ++j) {
    const Gate& g = gates_[j];
    const std::size_t self = arity_ + j;
    if (g.op == Op::CONST) continue;
    if (g.a >= self || (binary(g.op) && g.b >= self))
      throw DimensionError("gate " + std::to_string(j) + " references node not computed yet");
  }
  for (std::size_t o : outputs_)
    if (o >= arity_ + gates_.size())
      throw DimensionError("output references missing node " + std::to_string(o));
}

QVector ArithCircuit::eval(const QVector& x) const {
  if (x.size() != arity_)
    throw DimensionError("circuit expects " + std::to_string(arity_) + " inputs, got " +
                         std::to_string(x.size()));
  std::vector<Rational> node(x.begin(), x.end());
  node.reserve(arity_ + gates_.size());
  for (const Gate& g : gates_) {
    switch (g.op) {
      case Op::CONST: node.push_back(g.value); break;
      case Op::ADD: node.push_back(node[g.a] + node[g.b]); break;
      case Op::SUB: node.push_back(node[g.a] - node[g.b]); break;
      case Op::MUL: node.push_back(node[g.a] * node[g.b]); break;
      case Op::MAX: node.push_back(max(node[g.a], node[g.b])); break;
      case Op::MIN: node.push_back(min(node[g.a], node[g.b])); break;
      case Op::ABS: node.push_back(node[g.a].abs()); break;
    }
  }
  std::vector<Rational> out;
  for (std::size_t o : outputs_) out.push_back(node[o]);
  return QVector(std::move(out));
}

std::size_t CircuitBuilder::input(std::size_t i) const {
  if (i >= arity_) throw DimensionError("input index out of range");
  return i;
}

std::size_t CircuitBuilder::constant(const Rational& v) {
  gates_.push_back(Gate{Op::CONST, 0, 0, v});
  return arity_ + gates_.size() - 1;
}

std::size_t CircuitBuilder::push(Op op, std::size_t a, std::size_t b) {
  const std::size_t self = arity_ + gates_.size();
  if (a >= self || b >= self) throw DimensionError("builder references a missing node");
  gates_.push_back(Gate{op, a, b, Rational(0)});
  return self;
}

std::vector<std::size_t> CircuitBuilder::splice(const ArithCircuit& c,
                                                const std::vector<std::size_t>& args) {
  if (args.size() != c.arity())
    throw DimensionError("spliced circuit expects " + std::to_string(c.arity()) + " arguments");
  std::vector<std::size_t> map(args);
  for (const Gate& g : c.gates()) {
    if (g.op == Op::CONST)
      map.push_back(constant(g.value));
    else
      map.push_back(push(g.op, map[g.a], binary(g.op) ? map[g.b] : map[g.a]));
  }
  std::vector<std::size_t> outs;
  for (std::size_t o : c.outputs()) outs.push_back(map[o]);
  return outs;
}

ArithCircuit CircuitBuilder::build(std::vector<std::size_t> outputs) const {
  return ArithCircuit(arity_, gates_, std::move(outputs));
}

ArithCircuit identity_circuit(std::size_t dim) {
  std::vector<std::size_t> outs(dim);
  for (std::size_t i = 0; i < dim; ++i) outs[i] = i;
  return ArithCircuit(dim, {}, outs);
}

ArithCircuit constant_circuit(std::size_t dim, const Rational& v) {
  CircuitBuilder b(dim);
  return b.build({b.constant(v)});
}

ArithCircuit affine_circuit(std::size_t dim, const Rational& k, const QVector& shift) {
  if (shift.size() != dim) throw DimensionError("shift has the wrong length");
  CircuitBuilder b(dim);
  std::size_t kn = b.constant(k);
  std::vector<std::size_t> outs;
  for (std::size_t i = 0; i < dim; ++i) outs.push_back(b.add(b.mul(kn, i), b.constant(shift[i])));
  return b.build(outs);
}

namespace {

std::size_t parse_index(const std::string& tok, std::size_t line) {
  try {
    std::size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError("expected a nonnegative integer, got '" + tok + "'", line);
  }
}

Rational parse_rational(const std::string& tok, std::size_t line) {
  try {
    return Rational::parse(tok);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

ArithCircuit parse_circuit(TokenLines& lines) {
  auto header = lines.expect("circuit header");
  const auto& h = header.tokens;
  if (h.size() != 4 || h[0] != "ARITH")
    throw ParseError("circuit header must be `ARITH arity n_gates n_outputs`", header.number);
  const std::size_t arity = parse_index(h[1], header.number);
  const std::size_t n_gates = parse_index(h[2], header.number);
  const std::size_t n_out = parse_index(h[3], header.number);
  static const std::map<std::string, Op> ops = {{"CONST", Op::CONST}, {"ADD", Op::ADD},
                                                {"SUB", Op::SUB},     {"MUL", Op::MUL},
                                                {"MAX", Op::MAX},     {"MIN", Op::MIN},
                                                {"ABS", Op::ABS}};
  std::vector<Gate> gates;
  for (std::size_t j = 0; j < n_gates; ++j) {
    auto line = lines.expect("gate");
    const auto& t = line.tokens;
    auto it = ops.find(t[0]);
    if (it == ops.end()) throw ParseError("unknown gate '" + t[0] + "'", line.number);
    Gate g;
    g.op = it->second;
    const std::size_t want = g.op == Op::CONST || g.op == Op::ABS ? 2 : 3;
    if (t.size() != want) throw ParseError(t[0] + " takes " + std::to_string(want - 1) + " operand(s)", line.number);
    if (g.op == Op::CONST) {
      g.value = parse_rational(t[1], line.number);
    } else {
      g.a = parse_index(t[1], line.number);
      g.b = want == 3 ? parse_index(t[2], line.number) : g.a;
      if (g.a >= arity + j || g.b >= arity + j)
        throw ParseError("gate references a node not computed yet", line.number);
    }
    gates.push_back(g);
  }
  auto line = lines.expect("output list");
  if (line.tokens.size() != n_out)
    throw ParseError("expected " + std::to_string(n_out) + " output indices", line.number);
  std::vector<std::size_t> outs;
  for (const auto& t : line.tokens) outs.push_back(parse_index(t, line.number));
  try {
    return ArithCircuit(arity, std::move(gates), std::move(outs));
  } catch (const DimensionError& e) {
    throw ParseError(e.what(), line.number);
  }
}

ArithCircuit parse_circuit(std::istream& in) {
  TokenLines lines(in);
  ArithCircuit c = parse_circuit(lines);
  if (auto extra = lines.next()) throw ParseError("trailing content", extra->number);
  return c;
}

std::string format_circuit(const ArithCircuit& c) {
  std::ostringstream os;
  os << "ARITH " << c.arity() << ' ' << c.gates().size() << ' ' << c.output_count() << '\n';
  for (const Gate& g : c.gates()) {
    os << op_name(g.op);
    if (g.op == Op::CONST)
      os << ' ' << g.value;
    else if (g.op == Op::ABS)
      os << ' ' << g.a;
    else
      os << ' ' << g.a << ' ' << g.b;
    os << '\n';
  }
  for (std::size_t i = 0; i < c.output_count(); ++i) os << (i ? " " : "") << c.outputs()[i];
  os << '\n';
  return os.str();
}

std::string Norm::str() const { return is_infinity() ? "inf" : std::to_string(r); }

Norm Norm::parse(const std::string& text) {
  if (text == "inf" || text == "infinity") return infinity();
  try {
    std::size_t pos = 0;
    long v = std::stol(text, &pos);
    if (pos == text.size() && v >= 1 && v <= 64) return {static_cast<std::uint32_t>(v)};
  } catch (const std::exception&) {
  }
  throw ParseError("norm must be a positive integer (at most 64) or 'inf', got '" + text + "'");
}

namespace {

Rational power(const Rational& x, std::uint32_t r) {
  Rational out(1);
  for (std::uint32_t i = 0; i < r; ++i) out *= x;
  return out;
}

// Scale factor k expressed in the units norm_pow returns.
Rational scaled(const Rational& k, Norm r) {
  return r.is_infinity() || r.r == 1 ? k : power(k, r.r);
}

}  // namespace

Rational norm_pow(const QVector& v, Norm r) {
  Rational acc(0);
  for (const auto& x : v) {
    if (r.is_infinity())
      acc = max(acc, x.abs());
    else
      acc += power(x.abs(), r.r);
  }
  return acc;
}

bool norm_exceeds(const QVector& u, const Rational& k, const QVector& v, Norm r) {
  return norm_pow(u, r) > scaled(k, r) * norm_pow(v, r);
}

bool scalar_exceeds(const Rational& a, const Rational& k, const QVector& v, Norm r) {
  return scaled(a.abs(), r) > scaled(k, r) * norm_pow(v, r);
}

namespace {

void require_circuit(const ArithCircuit& c, std::size_t in, std::size_t out, const char* name) {
  if (c.arity() != in || c.output_count() != out)
    throw DimensionError(std::string("circuit ") + name + " must map " + std::to_string(in) +
                         " inputs to " + std::to_string(out) + " outputs");
}

bool in_open_unit(const Rational& x) { return x.sign() > 0 && x < Rational(1); }

}  // namespace

void CloInstance::validate() const {
  if (dim == 0) throw DimensionError("dim must be at least 1");
  require_circuit(f, dim, dim, "f");
  require_circuit(p, dim, 1, "p");
  if (eps.sign() <= 0 || lambda.sign() <= 0) throw PreconditionError("eps and lambda must be > 0");
}

void ContractionInstance::validate() const {
  if (dim == 0) throw DimensionError("dim must be at least 1");
  require_circuit(f, dim, dim, "f");
  if (!in_open_unit(eps) || !in_open_unit(c)) throw PreconditionError("eps and c must lie in (0,1)");
  if (delta.sign() <= 0) throw PreconditionError("delta must be > 0");
}

void MmcInstance::validate() const {
  if (dim == 0) throw DimensionError("dim must be at least 1");
  require_circuit(f, dim, dim, "f");
  require_circuit(d, 2 * dim, 1, "d");
  if (!in_open_unit(eps) || !in_open_unit(c)) throw PreconditionError("eps and c must lie in (0,1)");
  if (delta_d.sign() <= 0 || lambda.sign() <= 0)
    throw PreconditionError("delta_d and lambda must be > 0");
}

std::string to_string(SolKind k) {
  switch (k) {
    case SolKind::C1: return "C1";
    case SolKind::C2a: return "C2a";
    case SolKind::C2b: return "C2b";
    case SolKind::CM1: return "CM1";
    case SolKind::CM2: return "CM2";
    case SolKind::M1: return "M1";
    case SolKind::M2a: return "M2a";
    case SolKind::M2b: return "M2b";
    case SolKind::M2c: return "M2c";
    case SolKind::MMviol: return "MMviol";
  }
  return "?";
}

std::string format_solution(const CircuitSolution& s) {
  std::ostringstream os;
  os << to_string(s.kind);
  if (s.kind == SolKind::MMviol) os << ' ' << s.property;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    if (i) os << " |";
    for (const auto& x : s.points[i]) os << ' ' << x;
  }
  return os.str();
}

CircuitSolution parse_solution(const std::string& text) {
  auto tokens = split_ws(text);
  if (tokens.empty()) throw ParseError("empty solution");
  static const SolKind kinds[] = {SolKind::C1,  SolKind::C2a, SolKind::C2b, SolKind::CM1,
                                  SolKind::CM2, SolKind::M1,  SolKind::M2a, SolKind::M2b,
                                  SolKind::M2c, SolKind::MMviol};
  CircuitSolution sol{SolKind::C1, {}, 0};
  bool found = false;
  for (SolKind k : kinds)
    if (tokens[0] == to_string(k)) {
      sol.kind = k;
      found = true;
    }
  if (!found) throw ParseError("unknown solution kind '" + tokens[0] + "'");
  std::size_t i = 1;
  if (sol.kind == SolKind::MMviol) {
    if (tokens.size() < 2 || tokens[1].size() != 1 || tokens[1][0] < '1' || tokens[1][0] > '4')
      throw ParseError("MMviol needs a property number 1..4");
    sol.property = tokens[1][0] - '0';
    i = 2;
  }
  std::vector<Rational> cur;
  for (; i < tokens.size(); ++i) {
    if (tokens[i] == "|") {
      sol.points.emplace_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(Rational::parse(tokens[i]));
    }
  }
  sol.points.emplace_back(std::move(cur));
  return sol;
}

bool in_unit_cube(const QVector& x) {
  return std::all_of(x.begin(), x.end(),
                     [](const Rational& v) { return v.sign() >= 0 && v <= Rational(1); });
}

namespace {

void require_points(const CircuitSolution& sol, std::size_t count, std::size_t dims) {
  if (sol.points.size() != count)
    throw PreconditionError(to_string(sol.kind) + " needs " + std::to_string(count) + " points");
  for (const auto& x : sol.points) {
    if (x.size() != dims)
      throw DimensionError("point " + x.str() + " does not have " + std::to_string(dims) +
                           " coordinates");
    if (!in_unit_cube(x)) throw DomainError("point " + x.str() + " lies outside the unit cube");
  }
}

Rational scalar(const ArithCircuit& c, const QVector& x) { return c.eval(x)[0]; }

Rational dist(const MmcInstance& inst, const QVector& x, const QVector& y) {
  return scalar(inst.d, concat(x, y));
}

std::string cmp_note(const std::string& lhs, const Rational& a, const char* rel, const Rational& b) {
  return lhs + ": " + a.str() + " " + rel + " " + b.str();
}

}  // namespace

CheckResult clo_verify(const CloInstance& inst, const CircuitSolution& sol) {
  CheckResult res;
  const std::size_t n = inst.dim;
  switch (sol.kind) {
    case SolKind::C1: {
      require_points(sol, 1, n);
      const QVector& x = sol.points[0];
      Rational pfx = scalar(inst.p, inst.f.eval(x));
      Rational px = scalar(inst.p, x);
      res.ok = pfx >= px - inst.eps;
      res.notes.push_back(cmp_note("p(f(x)) vs p(x) - eps", pfx, res.ok ? ">=" : "<", px - inst.eps));
      return res;
    }
    case SolKind::C2a: {
      require_points(sol, 2, n);
      const QVector &x = sol.points[0], &y = sol.points[1];
      QVector df = inst.f.eval(x) - inst.f.eval(y);
      res.ok = norm_exceeds(df, inst.lambda, x - y, inst.norm);
      res.notes.push_back(cmp_note("||f(x)-f(y)|| vs lambda ||x-y|| (norm units)",
                                   norm_pow(df, inst.norm), res.ok ? ">" : "<=",
                                   scaled(inst.lambda, inst.norm) * norm_pow(x - y, inst.norm)));
      return res;
    }
    case SolKind::C2b: {
      require_points(sol, 2, n);
      const QVector &x = sol.points[0], &y = sol.points[1];
      Rational dp = scalar(inst.p, x) - scalar(inst.p, y);
      res.ok = scalar_exceeds(dp, inst.lambda, x - y, inst.norm);
      res.notes.push_back(cmp_note("|p(x)-p(y)| vs lambda ||x-y|| (norm units)",
                                   scaled(dp.abs(), inst.norm), res.ok ? ">" : "<=",
                                   scaled(inst.lambda, inst.norm) * norm_pow(x - y, inst.norm)));
      return res;
    }
    default: break;
  }
  throw PreconditionError(to_string(sol.kind) + " is not a ContinuousLocalOpt solution");
}

CheckResult contraction_verify(const ContractionInstance& inst, const CircuitSolution& sol) {
  CheckResult res;
  const std::size_t n = inst.dim;
  if (sol.kind == SolKind::CM1) {
    require_points(sol, 1, n);
    const QVector& x = sol.points[0];
    Rational lhs = norm_pow(inst.f.eval(x) - x, inst.norm);
    Rational rhs = scaled(inst.delta, inst.norm);
    res.ok = lhs <= rhs;
    res.notes.push_back(cmp_note("||f(x)-x|| vs delta (norm units)", lhs, res.ok ? "<=" : ">", rhs));
    return res;
  }
  if (sol.kind == SolKind::CM2) {
    require_points(sol, 2, n);
    const QVector &x = sol.points[0], &y = sol.points[1];
    QVector df = inst.f.eval(x) - inst.f.eval(y);
    res.ok = norm_exceeds(df, inst.c, x - y, inst.norm);
    res.notes.push_back(cmp_note("||f(x)-f(y)|| vs c ||x-y|| (norm units)", norm_pow(df, inst.norm),
                                 res.ok ? ">" : "<=",
                                 scaled(inst.c, inst.norm) * norm_pow(x - y, inst.norm)));
    return res;
  }
  throw PreconditionError(to_string(sol.kind) + " is not a Contraction solution");
}

namespace {

CheckResult check_mmviol(const ArithCircuit& d, const CircuitSolution& sol) {
  CheckResult res;
  auto dd = [&](const QVector& a, const QVector& b) { return scalar(d, concat(a, b)); };
  const auto& pts = sol.points;
  switch (sol.property) {
    case 1: {
      Rational v = dd(pts[0], pts[1]);
      res.ok = v.sign() < 0;
      res.notes.push_back(cmp_note("d(x,y) vs 0", v, res.ok ? "<" : ">=", Rational(0)));
      break;
    }
    case 2: {
      Rational v = dd(pts[0], pts[1]);
      res.ok = v.is_zero() && pts[0] != pts[1];
      res.notes.push_back("d(x,y) = " + v.str() + (pts[0] == pts[1] ? ", x = y" : ", x != y"));
      break;
    }
    case 3: {
      Rational a = dd(pts[0], pts[1]), b = dd(pts[1], pts[0]);
      res.ok = a != b;
      res.notes.push_back(cmp_note("d(x,y) vs d(y,x)", a, res.ok ? "!=" : "==", b));
      break;
    }
    case 4: {
      Rational xz = dd(pts[0], pts[2]);
      Rational via = dd(pts[0], pts[1]) + dd(pts[1], pts[2]);
      res.ok = xz > via;
      res.notes.push_back(cmp_note("d(x,z) vs d(x,y)+d(y,z)", xz, res.ok ? ">" : "<=", via));
      break;
    }
    default: throw PreconditionError("meta-metric property must be 1..4");
  }
  return res;
}

}  // namespace

CheckResult mmc_verify(const MmcInstance& inst, const CircuitSolution& sol) {
  CheckResult res;
  const std::size_t n = inst.dim;
  switch (sol.kind) {
    case SolKind::M1: {
      require_points(sol, 1, n);
      const QVector& x = sol.points[0];
      Rational v = dist(inst, inst.f.eval(x), x);
      res.ok = v <= inst.eps;
      res.notes.push_back(cmp_note("d(f(x),x) vs eps", v, res.ok ? "<=" : ">", inst.eps));
      return res;
    }
    case SolKind::M2a: {
      require_points(sol, 2, n);
      const QVector &x = sol.points[0], &y = sol.points[1];
      Rational lhs = dist(inst, inst.f.eval(x), inst.f.eval(y));
      Rational rhs = inst.c * dist(inst, x, y);
      res.ok = lhs > rhs;
      res.notes.push_back(cmp_note("d(f(x),f(y)) vs c d(x,y)", lhs, res.ok ? ">" : "<=", rhs));
      return res;
    }
    case SolKind::M2b: {
      require_points(sol, 4, n);
      const auto& p = sol.points;
      Rational diff = dist(inst, p[0], p[1]) - dist(inst, p[2], p[3]);
      QVector gap = concat(p[0], p[1]) - concat(p[2], p[3]);
      res.ok = scalar_exceeds(diff, inst.delta_d, gap, inst.norm);
      res.notes.push_back(cmp_note("|d(x,y)-d(x',y')| vs delta_d ||(x,y)-(x',y')|| (norm units)",
                                   scaled(diff.abs(), inst.norm), res.ok ? ">" : "<=",
                                   scaled(inst.delta_d, inst.norm) * norm_pow(gap, inst.norm)));
      return res;
    }
    case SolKind::M2c: {
      require_points(sol, 2, n);
      const QVector &x = sol.points[0], &y = sol.points[1];
      QVector df = inst.f.eval(x) - inst.f.eval(y);
      res.ok = norm_exceeds(df, inst.lambda, x - y, inst.norm);
      res.notes.push_back(cmp_note("||f(x)-f(y)|| vs lambda ||x-y|| (norm units)",
                                   norm_pow(df, inst.norm), res.ok ? ">" : "<=",
                                   scaled(inst.lambda, inst.norm) * norm_pow(x - y, inst.norm)));
      return res;
    }
    case SolKind::MMviol: {
      if (inst.general)
        throw PreconditionError("GeneralContraction does not accept meta-metric violations");
      require_points(sol, sol.property == 4 ? 3 : 2, n);
      return check_mmviol(inst.d, sol);
    }
    default: break;
  }
  throw PreconditionError(to_string(sol.kind) + " is not a MetametricContraction solution");
}

std::optional<CircuitSolution> check_metametric(const ArithCircuit& d,
                                                const std::vector<QVector>& points) {
  if (d.output_count() != 1) throw DimensionError("a meta-metric has one output");
  const std::size_t m = points.size();
  std::vector<std::vector<Rational>> table(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i][j] = scalar(d, concat(points[i], points[j]));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (table[i][j].sign() < 0) return CircuitSolution{SolKind::MMviol, {points[i], points[j]}, 1};
      if (table[i][j].is_zero() && points[i] != points[j])
        return CircuitSolution{SolKind::MMviol, {points[i], points[j]}, 2};
      if (table[i][j] != table[j][i])
        return CircuitSolution{SolKind::MMviol, {points[i], points[j]}, 3};
    }
  }
  auto triangle = [&](std::size_t i, std::size_t j, std::size_t k) {
    return CircuitSolution{SolKind::MMviol, {points[i], points[j], points[k]}, 4};
  };
  // The triple loop dominates on large samples. Over a common denominator
  // the values are integers, and usually small enough for machine words.
  BigInt den = 1;
  for (const auto& row : table)
    for (const auto& v : row) {
      BigInt dv = v.denominator();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), dv.get_mpz_t());
    }
  const BigInt limit = BigInt(1) << 61;
  std::vector<std::int64_t> flat(m * m);
  bool small = true;
  for (std::size_t i = 0; i < m && small; ++i)
    for (std::size_t j = 0; j < m && small; ++j) {
      BigInt v = table[i][j].numerator() * (den / table[i][j].denominator());
      if (abs(v) >= limit || !v.fits_slong_p()) small = false;
      else flat[i * m + j] = v.get_si();
    }
  if (small) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const std::int64_t ij = flat[i * m + j];
        const std::int64_t* jrow = &flat[j * m];
        const std::int64_t* irow = &flat[i * m];
        for (std::size_t k = 0; k < m; ++k)
          if (irow[k] > ij + jrow[k]) return triangle(i, j, k);
      }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (table[i][k] > table[i][j] + table[j][k]) return triangle(i, j, k);
  return std::nullopt;
}

std::vector<QVector> unit_grid(std::size_t dim, std::size_t k) {
  if (k < 2) throw PreconditionError("grid needs at least two points per axis");
  std::vector<QVector> out;
  std::vector<std::size_t> idx(dim, 0);
  while (true) {
    QVector x(dim);
    for (std::size_t i = 0; i < dim; ++i)
      x[i] = Rational(BigInt(static_cast<long>(idx[i])), BigInt(static_cast<long>(k - 1)));
    out.push_back(std::move(x));
    std::size_t i = 0;
    while (i < dim && ++idx[i] == k) idx[i++] = 0;
    if (i == dim) break;
  }
  return out;
}

std::optional<QVector> probe_domain(const ArithCircuit& f, std::size_t dim, std::size_t k) {
  for (const auto& x : unit_grid(dim, k))
    if (!in_unit_cube(f.eval(x))) return x;
  return std::nullopt;
}

namespace {

QVector step(const ArithCircuit& f, const QVector& x) {
  QVector fx = f.eval(x);
  if (!in_unit_cube(fx))
    throw DomainError("f(" + x.str() + ") = " + fx.str() + " leaves the unit cube");
  return fx;
}

void require_start(const QVector& start, std::size_t dim) {
  if (start.size() != dim) throw DimensionError("start point has the wrong dimension");
  if (!in_unit_cube(start)) throw DomainError("start point " + start.str() + " lies outside the unit cube");
}

template <class Inst, class Check>
SolveResult iterate(const Inst& inst, const QVector& start, std::uint64_t budget, Check check) {
  inst.validate();
  require_start(start, inst.dim);
  SolveResult res{{SolKind::C1, {}, 0}, {start}};
  QVector x = start;
  for (std::uint64_t k = 0;; ++k) {
    QVector fx = step(inst.f, x);
    if (auto sol = check(x, fx)) {
      res.solution = std::move(*sol);
      return res;
    }
    if (k == budget)
      throw BudgetExceeded("no solution within " + std::to_string(budget) + " iterations; last point " +
                           x.str());
    x = std::move(fx);
    res.trace.push_back(x);
  }
}

}  // namespace

SolveResult clo_solve_iterate(const CloInstance& inst, const QVector& start, std::uint64_t budget) {
  return iterate(inst, start, budget,
                 [&](const QVector& x, const QVector& fx) -> std::optional<CircuitSolution> {
                   for (auto kind : {SolKind::C1, SolKind::C2a, SolKind::C2b}) {
                     CircuitSolution cand{kind, {x}, 0};
                     if (kind != SolKind::C1) cand.points.push_back(fx);
                     if (clo_verify(inst, cand).ok) return cand;
                   }
                   return std::nullopt;
                 });
}

SolveResult fixpoint_iterate(const ContractionInstance& inst, const QVector& start,
                             std::uint64_t budget) {
  return iterate(inst, start, budget,
                 [&](const QVector& x, const QVector& fx) -> std::optional<CircuitSolution> {
                   CircuitSolution cm1{SolKind::CM1, {x}, 0};
                   if (contraction_verify(inst, cm1).ok) return cm1;
                   CircuitSolution cm2{SolKind::CM2, {x, fx}, 0};
                   if (contraction_verify(inst, cm2).ok) return cm2;
                   return std::nullopt;
                 });
}

SolveResult fixpoint_iterate(const MmcInstance& inst, const QVector& start, std::uint64_t budget) {
  return iterate(inst, start, budget,
                 [&](const QVector& x, const QVector& fx) -> std::optional<CircuitSolution> {
                   CircuitSolution m1{SolKind::M1, {x}, 0};
                   if (mmc_verify(inst, m1).ok) return m1;
                   for (auto kind : {SolKind::M2a, SolKind::M2c}) {
                     CircuitSolution cand{kind, {x, fx}, 0};
                     if (mmc_verify(inst, cand).ok) return cand;
                   }
                   QVector ffx = step(inst.f, fx);
                   CircuitSolution m2b{SolKind::M2b, {x, fx, fx, ffx}, 0};
                   if (mmc_verify(inst, m2b).ok) return m2b;
                   if (!inst.general) {
                     if (auto v = check_metametric(inst.d, {x, fx})) return v;
                   }
                   return std::nullopt;
                 });
}

AnyCircuitProblem parse_circuit_problem(std::istream& in) {
  TokenLines lines(in);
  auto header = lines.expect("problem header");
  if (header.tokens.size() != 1) throw ParseError("header must be one word", header.number);
  const std::string kind = header.tokens[0];
  if (kind != "CLO" && kind != "CONTRACTION" && kind != "MMC" && kind != "GC")
    throw ParseError("unknown problem '" + kind + "'", header.number);

  std::map<std::string, Rational> consts;
  std::map<std::string, ArithCircuit> circuits;
  std::size_t dim = 3;
  Norm norm = Norm::one();
  static const char* const const_keys[] = {"eps", "lambda", "c", "delta", "delta_d"};
  while (auto line = lines.next()) {
    const auto& t = line->tokens;
    if (t.size() != 2) throw ParseError("expected `key value`", line->number);
    if (t[0] == "circuit") {
      if (t[1] != "f" && t[1] != "p" && t[1] != "d")
        throw ParseError("circuit name must be f, p or d", line->number);
      if (circuits.count(t[1])) throw ParseError("circuit " + t[1] + " given twice", line->number);
      circuits.emplace(t[1], parse_circuit(lines));
    } else if (t[0] == "dim") {
      dim = parse_index(t[1], line->number);
      if (dim == 0) throw ParseError("dim must be at least 1", line->number);
    } else if (t[0] == "norm") {
      try {
        norm = Norm::parse(t[1]);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line->number);
      }
    } else if (std::find_if(std::begin(const_keys), std::end(const_keys),
                            [&](const char* k) { return t[0] == k; }) != std::end(const_keys)) {
      consts[t[0]] = parse_rational(t[1], line->number);
    } else {
      throw ParseError("unknown key '" + t[0] + "'", line->number);
    }
  }
  auto need_const = [&](const char* key) {
    auto it = consts.find(key);
    if (it == consts.end()) throw ParseError(kind + " needs `" + key + "`");
    return it->second;
  };
  auto need_circuit = [&](const char* key) {
    auto it = circuits.find(key);
    if (it == circuits.end()) throw ParseError(kind + " needs `circuit " + key + "`");
    return it->second;
  };
  auto wrap = [&](auto inst) -> AnyCircuitProblem {
    try {
      inst.validate();
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
    if (auto bad = probe_domain(inst.f, dim))
      throw DomainError("f maps grid point " + bad->str() + " outside the unit cube");
    return inst;
  };
  if (kind == "CLO")
    return wrap(CloInstance{need_circuit("f"), need_circuit("p"), need_const("eps"),
                            need_const("lambda"), norm, dim});
  if (kind == "CONTRACTION")
    return wrap(ContractionInstance{need_circuit("f"), norm, need_const("eps"), need_const("c"),
                                    need_const("delta"), dim});
  return wrap(MmcInstance{need_circuit("f"), need_circuit("d"), norm, need_const("eps"),
                          need_const("c"), need_const("delta_d"), need_const("lambda"), dim,
                          kind == "GC"});
}

namespace {

void emit_circuit(std::ostream& os, const char* name, const ArithCircuit& c) {
  os << "circuit " << name << '\n' << format_circuit(c);
}

}  // namespace

std::string format_problem(const CloInstance& inst) {
  std::ostringstream os;
  os << "CLO\ndim " << inst.dim << "\nnorm " << inst.norm.str() << "\neps " << inst.eps
     << "\nlambda " << inst.lambda << '\n';
  emit_circuit(os, "f", inst.f);
  emit_circuit(os, "p", inst.p);
  return os.str();
}

std::string format_problem(const ContractionInstance& inst) {
  std::ostringstream os;
  os << "CONTRACTION\ndim " << inst.dim << "\nnorm " << inst.norm.str() << "\neps " << inst.eps
     << "\nc " << inst.c << "\ndelta " << inst.delta << '\n';
  emit_circuit(os, "f", inst.f);
  return os.str();
}

std::string format_problem(const MmcInstance& inst) {
  std::ostringstream os;
  os << (inst.general ? "GC" : "MMC") << "\ndim " << inst.dim << "\nnorm " << inst.norm.str()
     << "\neps " << inst.eps << "\nc " << inst.c << "\ndelta_d " << inst.delta_d << "\nlambda "
     << inst.lambda << '\n';
  emit_circuit(os, "f", inst.f);
  emit_circuit(os, "d", inst.d);
  return os.str();
}

}  // namespace clslab::circuit
