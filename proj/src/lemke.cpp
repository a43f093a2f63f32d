#include "clslab/lemke.hpp"

#include <algorithm>
#include <limits>

#include "clslab/errors.hpp"

namespace clslab::lcp {

std::size_t Var::flat(std::size_t d) const {
  switch (kind) {
    case Kind::y: return index;
    case Kind::s: return d + index;
    case Kind::z: return 2 * d;
  }
  return 2 * d;
}

Var Var::from_flat(std::size_t f, std::size_t d) {
  if (f < d) return y(f);
  if (f < 2 * d) return s(f - d);
  if (f == 2 * d) return z();
  throw PreconditionError("variable position out of range");
}

Var Var::complement() const {
  switch (kind) {
    case Kind::y: return s(index);
    case Kind::s: return y(index);
    case Kind::z: break;
  }
  throw PreconditionError("z has no complement");
}

std::string Var::str() const {
  switch (kind) {
    case Kind::y: return "y" + std::to_string(index + 1);
    case Kind::s: return "s" + std::to_string(index + 1);
    case Kind::z: break;
  }
  return "z";
}

const Rational& LemkeVertex::value(Var v) const {
  switch (v.kind) {
    case Var::Kind::y: return y[v.index];
    case Var::Kind::s: return s[v.index];
    case Var::Kind::z: break;
  }
  return z;
}

bool LemkeVertex::is_tight(Var v) const {
  return std::find(tight.begin(), tight.end(), v) != tight.end();
}

namespace {

// Column of the equality system  s - M y - z 1 = q  for a variable.
QVector column_of(const LcpInstance& inst, Var v) {
  const std::size_t d = inst.dim();
  QVector col(d);
  switch (v.kind) {
    case Var::Kind::y:
      for (std::size_t r = 0; r < d; ++r) col[r] = -inst.M()(r, v.index);
      break;
    case Var::Kind::s: col[v.index] = Rational(1); break;
    case Var::Kind::z:
      for (std::size_t r = 0; r < d; ++r) col[r] = Rational(-1);
      break;
  }
  return col;
}

QMatrix matrix_of(const LcpInstance& inst, const std::vector<Var>& cols) {
  const std::size_t d = inst.dim();
  QMatrix b(d, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    QVector col = column_of(inst, cols[c]);
    for (std::size_t r = 0; r < d; ++r) b(r, c) = col[r];
  }
  return b;
}

std::vector<Var> basis_of(const LcpInstance& inst, const LemkeVertex& v) {
  const std::size_t d = inst.dim();
  if (v.tight.size() != d + 1)
    throw PreconditionError("vertex has " + std::to_string(v.tight.size()) +
                            " tight variables, expected " + std::to_string(d + 1));
  std::vector<Var> basis;
  for (std::size_t f = 0; f <= 2 * d; ++f) {
    Var var = Var::from_flat(f, d);
    if (!v.is_tight(var)) basis.push_back(var);
  }
  if (basis.size() != d) throw PreconditionError("vertex tight set has repeated variables");
  return basis;
}

std::optional<std::size_t> structural_dup(const std::vector<Var>& tight, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i) {
    bool ty = std::find(tight.begin(), tight.end(), Var::y(i)) != tight.end();
    bool ts = std::find(tight.begin(), tight.end(), Var::s(i)) != tight.end();
    if (ty && ts) return i;
  }
  return std::nullopt;
}

void sort_vars(std::vector<Var>& vars) { std::sort(vars.begin(), vars.end()); }

std::vector<std::size_t> flats(const std::vector<Var>& vars, std::size_t d) {
  std::vector<std::size_t> out;
  for (const auto& v : vars) out.push_back(v.flat(d));
  return out;
}

std::string names(const std::vector<Var>& vars) {
  std::string out;
  for (const auto& v : vars) out += (out.empty() ? "" : ", ") + v.str();
  return out;
}

void require_nondegenerate(const LemkeVertex& v, const std::vector<Var>& basis, std::size_t d) {
  std::vector<Var> zero;
  for (const auto& b : basis)
    if (v.value(b).is_zero()) zero.push_back(b);
  if (!zero.empty())
    throw DegeneracyError("degenerate vertex: basic variables " + names(zero) + " are zero",
                          flats(zero, d));
}

// Lexicographic value of z under the perturbation q + (eps, ..., eps^d):
// (z, row of B^{-1} for z). Zero vector when z is nonbasic.
std::vector<Rational> lex_z(const LcpInstance& inst, const LemkeVertex& v) {
  const std::size_t d = inst.dim();
  std::vector<Rational> key(d + 1);
  if (v.is_tight(Var::z())) return key;
  auto basis = basis_of(inst, v);
  auto inv = inverse(matrix_of(inst, basis));
  if (!inv) throw DegeneracyError("singular basis at vertex");
  std::size_t k = std::find(basis.begin(), basis.end(), Var::z()) - basis.begin();
  key[0] = v.z;
  for (std::size_t j = 0; j < d; ++j) key[j + 1] = (*inv)(k, j);
  return key;
}

}  // namespace

LemkeVertex lemke_start(const LcpInstance& inst, const LemkeOptions& opts) {
  const std::size_t d = inst.dim();
  const QVector& q = inst.q();
  Rational lo = q[0];
  for (const auto& x : q) lo = min(lo, x);
  if (lo.sign() >= 0) throw PreconditionError("q >= 0: y = 0 already solves the LCP");
  std::vector<std::size_t> ties;
  for (std::size_t i = 0; i < d; ++i)
    if (q[i] == lo) ties.push_back(i);
  if (ties.size() > 1 && !opts.lexicographic) {
    IndexSet shown(ties.begin(), ties.end());
    throw DegeneracyError("minimum of q attained at indices " + format_index_set(shown), ties);
  }
  // With q_i + eps^i the tie goes to the largest index.
  const std::size_t l = ties.back();
  LemkeVertex v;
  v.z = -lo;
  v.y = QVector(d);
  v.s = QVector(d);
  for (std::size_t i = 0; i < d; ++i) v.s[i] = q[i] + v.z;
  for (std::size_t i = 0; i < d; ++i) v.tight.push_back(Var::y(i));
  v.tight.push_back(Var::s(l));
  sort_vars(v.tight);
  v.dup_label = l;
  return v;
}

PivotStep lemke_pivot(const LcpInstance& inst, const LemkeVertex& v, Var entering,
                      const LemkeOptions& opts) {
  const std::size_t d = inst.dim();
  if (!v.is_tight(entering))
    throw PreconditionError("entering variable " + entering.str() + " is not tight");
  auto basis = basis_of(inst, v);
  QMatrix b = matrix_of(inst, basis);
  QVector rhs = Rational(-1) * column_of(inst, entering);
  auto delta = solve_linear(b, rhs);
  if (!delta) throw DegeneracyError("singular basis at vertex");

  std::vector<std::size_t> blocking;
  for (std::size_t k = 0; k < d; ++k)
    if ((*delta)[k].sign() < 0) blocking.push_back(k);

  if (blocking.empty()) {
    Ray ray{entering, QVector(d), QVector(d), Rational(0)};
    auto set_dir = [&](Var var, const Rational& val) {
      switch (var.kind) {
        case Var::Kind::y: ray.dy[var.index] = val; break;
        case Var::Kind::s: ray.ds[var.index] = val; break;
        case Var::Kind::z: ray.dz = val; break;
      }
    };
    set_dir(entering, Rational(1));
    for (std::size_t k = 0; k < d; ++k) set_dir(basis[k], (*delta)[k]);
    return PivotStep{ray, std::nullopt};
  }

  std::size_t leave = blocking[0];
  Rational t = v.value(basis[leave]) / -(*delta)[leave];
  if (!opts.lexicographic) {
    std::vector<Var> tied{basis[leave]};
    for (std::size_t idx = 1; idx < blocking.size(); ++idx) {
      std::size_t k = blocking[idx];
      Rational r = v.value(basis[k]) / -(*delta)[k];
      if (r < t) {
        t = r;
        leave = k;
        tied = {basis[k]};
      } else if (r == t) {
        tied.push_back(basis[k]);
      }
    }
    if (tied.size() > 1)
      throw DegeneracyError("ratio test tie between " + names(tied), flats(tied, d));
  } else {
    auto inv = inverse(b);
    if (!inv) throw DegeneracyError("singular basis at vertex");
    auto key = [&](std::size_t k) {
      std::vector<Rational> row(d + 1);
      Rational scale = Rational(1) / -(*delta)[k];
      row[0] = v.value(basis[k]) * scale;
      for (std::size_t j = 0; j < d; ++j) row[j + 1] = (*inv)(k, j) * scale;
      return row;
    };
    auto best = key(leave);
    for (std::size_t idx = 1; idx < blocking.size(); ++idx) {
      auto cand = key(blocking[idx]);
      if (cand < best) {
        best = std::move(cand);
        leave = blocking[idx];
      }
    }
    t = best[0];
  }

  LemkeVertex next = v;
  auto shift = [&](Var var, const Rational& by) {
    switch (var.kind) {
      case Var::Kind::y: next.y[var.index] += by; break;
      case Var::Kind::s: next.s[var.index] += by; break;
      case Var::Kind::z: next.z += by; break;
    }
  };
  shift(entering, t);
  for (std::size_t k = 0; k < d; ++k) shift(basis[k], t * (*delta)[k]);
  const Var leaving = basis[leave];
  // Exactly zero already; assign anyway so the invariant is structural.
  shift(leaving, -next.value(leaving));

  std::replace(next.tight.begin(), next.tight.end(), entering, leaving);
  sort_vars(next.tight);
  next.dup_label = structural_dup(next.tight, d);

  if (!opts.lexicographic) require_nondegenerate(next, basis_of(inst, next), d);
  return PivotStep{std::move(next), leaving};
}

std::optional<LemkeVertex> vertex_from_tight(const LcpInstance& inst, std::vector<Var> tight) {
  const std::size_t d = inst.dim();
  sort_vars(tight);
  LemkeVertex v;
  v.tight = std::move(tight);
  if (std::adjacent_find(v.tight.begin(), v.tight.end()) != v.tight.end())
    throw PreconditionError("tight set has repeated variables");
  auto basis = basis_of(inst, v);
  auto x = solve_linear(matrix_of(inst, basis), inst.q());
  if (!x) return std::nullopt;
  v.y = QVector(d);
  v.s = QVector(d);
  v.z = Rational(0);
  for (std::size_t k = 0; k < d; ++k) {
    if ((*x)[k].sign() < 0) return std::nullopt;
    switch (basis[k].kind) {
      case Var::Kind::y: v.y[basis[k].index] = (*x)[k]; break;
      case Var::Kind::s: v.s[basis[k].index] = (*x)[k]; break;
      case Var::Kind::z: v.z = (*x)[k]; break;
    }
  }
  v.dup_label = structural_dup(v.tight, d);
  return v;
}

std::optional<std::size_t> duplicate_label(const LemkeVertex& v) {
  std::vector<std::size_t> dups;
  for (std::size_t i = 0; i < v.y.size(); ++i)
    if (v.y[i].is_zero() && v.s[i].is_zero()) dups.push_back(i);
  if (dups.size() > 1) {
    IndexSet shown(dups.begin(), dups.end());
    throw DegeneracyError("labels " + format_index_set(shown) + " are all duplicated", dups);
  }
  if (dups.empty()) return std::nullopt;
  return dups[0];
}

Orientation todd_orientation(const LcpInstance& inst, const LemkeVertex& v, Var entering) {
  const std::size_t d = inst.dim();
  if (!v.is_tight(entering))
    throw PreconditionError("entering variable " + entering.str() + " is not tight");
  std::vector<Var> cols;
  int basic_y = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (v.dup_label == i) {
      cols.push_back(Var::z());
    } else if (!v.is_tight(Var::y(i))) {
      cols.push_back(Var::y(i));
      ++basic_y;
    } else if (!v.is_tight(Var::s(i))) {
      cols.push_back(Var::s(i));
    } else {
      throw PreconditionError("label " + std::to_string(i + 1) +
                              " is doubly tight but is not the duplicate label");
    }
  }
  const int det_sign = mat_det(matrix_of(inst, cols)).sign();
  if (det_sign == 0) throw DegeneracyError("singular basis at vertex");
  const int parity = entering.kind == Var::Kind::s ? 1 : -1;
  const int sign = det_sign * (basic_y % 2 ? -1 : 1) * parity;
  return sign > 0 ? Orientation::forward : Orientation::backward;
}

std::vector<std::string> check_vertex(const LcpInstance& inst, const LemkeVertex& v,
                                      bool allow_degenerate) {
  const std::size_t d = inst.dim();
  std::vector<std::string> fails;
  if (v.y.size() != d || v.s.size() != d) {
    fails.push_back("vertex has the wrong dimension");
    return fails;
  }
  QVector lhs = v.s - inst.M() * v.y;
  for (std::size_t i = 0; i < d; ++i) {
    const std::string idx = std::to_string(i + 1);
    if (lhs[i] - v.z != inst.q()[i]) fails.push_back("equation " + idx + " fails");
    if (v.y[i].sign() < 0) fails.push_back("y" + idx + " < 0");
    if (v.s[i].sign() < 0) fails.push_back("s" + idx + " < 0");
    if (!v.y[i].is_zero() && !v.s[i].is_zero()) fails.push_back("label " + idx + " missing");
  }
  if (v.z.sign() < 0) fails.push_back("z < 0");
  if (v.tight.size() != d + 1) fails.push_back("tight set has the wrong size");
  for (const auto& t : v.tight)
    if (!v.value(t).is_zero()) fails.push_back("tight variable " + t.str() + " is nonzero");
  if (!allow_degenerate) {
    std::size_t dups = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (v.y[i].is_zero() && v.s[i].is_zero()) ++dups;
    if (dups > 1) fails.push_back("more than one duplicate label");
  }
  return fails;
}

Q2 extract_q2_witness(const LcpInstance& inst, const LemkeVertex& v) {
  const std::size_t d = inst.dim();
  IndexSet basic_y;
  for (std::size_t i = 0; i < d; ++i)
    if (!v.is_tight(Var::y(i))) basic_y.push_back(i);
  std::vector<IndexSet> candidates;
  if (!basic_y.empty()) candidates.push_back(basic_y);
  if (v.dup_label) {
    IndexSet with = basic_y;
    with.push_back(*v.dup_label);
    std::sort(with.begin(), with.end());
    candidates.push_back(with);
  }
  for (const auto& s : candidates) {
    Rational m = principal_minor(inst.M(), s);
    if (m.sign() <= 0) return Q2{s, m};
  }
  if (auto w = p_matrix_violation(inst.M())) return Q2{w->S, w->minor};
  throw InvariantViolation("Lemke's path left the P-matrix regime but every principal minor is positive");
}

LemkeResult lemke_solve(const LcpInstance& inst, const LemkeOptions& opts) {
  const std::size_t d = inst.dim();
  LemkeResult res{Q1{QVector(d)}, {}};
  bool nonneg = std::all_of(inst.q().begin(), inst.q().end(),
                            [](const Rational& x) { return x.sign() >= 0; });
  if (nonneg) return res;

  LemkeVertex v = lemke_start(inst, opts);
  if (!opts.lexicographic) require_nondegenerate(v, basis_of(inst, v), d);
  res.trace.vertices.push_back(v);
  Var entering = Var::y(*v.dup_label);
  const unsigned long budget =
      2 * d < 62 ? (1UL << (2 * d)) + 1 : std::numeric_limits<unsigned long>::max();

  for (unsigned long step = 0; step < budget; ++step) {
    PivotStep next = lemke_pivot(inst, v, entering, opts);
    if (next.is_ray()) {
      res.outcome = extract_q2_witness(inst, v);
      return res;
    }
    const LemkeVertex& w = next.vertex();
    bool decreasing = opts.lexicographic ? lex_z(inst, w) < lex_z(inst, v) : w.z < v.z;
    if (!decreasing) {
      res.outcome = extract_q2_witness(inst, v);
      return res;
    }
    res.trace.entering.push_back(entering);
    res.trace.vertices.push_back(w);
    if (*next.leaving == Var::z()) {
      res.outcome = Q1{w.y};
      return res;
    }
    entering = next.leaving->complement();
    v = w;
  }
  throw BudgetExceeded("Lemke's algorithm exceeded " + std::to_string(budget) + " pivots");
}

}  // namespace clslab::lcp
