#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace clslab::testing {

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

lcp::LcpInstance random_lcp(Rng& rng, std::size_t d, long lo, long hi) {
  QMatrix m(d, d);
  QVector q(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) m(r, c) = Rational(uniform(rng, lo, hi));
    q[r] = Rational(uniform(rng, lo, hi));
  }
  return lcp::LcpInstance(std::move(m), std::move(q));
}

Rational cofactor_det(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational total(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    QMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, kk++) = m(r, k);
      }
    Rational term = m(0, c) * cofactor_det(minor);
    total = c % 2 ? total - term : total + term;
  }
  return total;
}

std::vector<QVector> cramer_lcp_solutions(const lcp::LcpInstance& inst) {
  const std::size_t d = inst.dim();
  std::vector<QVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    // y_i basic for i in the mask, s_i basic otherwise: M_SS y_S = -q_S.
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < d; ++i)
      if (mask >> i & 1) idx.push_back(i);
    const std::size_t k = idx.size();
    QMatrix a(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) a(r, c) = inst.M()(idx[r], idx[c]);
    const Rational det = cofactor_det(a);
    if (k > 0 && det.is_zero()) continue;
    QVector y(d);
    for (std::size_t c = 0; c < k; ++c) {
      QMatrix ac = a;
      for (std::size_t r = 0; r < k; ++r) ac(r, c) = -inst.q()[idx[r]];
      y[idx[c]] = cofactor_det(ac) / det;
    }
    bool ok = std::all_of(y.begin(), y.end(), [](const Rational& v) { return v.sign() >= 0; });
    for (std::size_t r = 0; r < d && ok; ++r) {
      Rational s = inst.q()[r];
      for (std::size_t c = 0; c < d; ++c) s += inst.M()(r, c) * y[c];
      if (s.sign() < 0 || (!s.is_zero() && !y[r].is_zero())) ok = false;
    }
    if (ok && std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
  }
  return out;
}

bool cofactor_is_p_matrix(const QMatrix& m) {
  const std::size_t d = m.rows();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < d; ++i)
      if (mask >> i & 1) idx.push_back(i);
    QMatrix a(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) a(r, c) = m(idx[r], idx[c]);
    if (cofactor_det(a).sign() <= 0) return false;
  }
  return true;
}

std::vector<QMatrix> all_matrices(std::size_t d, const std::vector<long>& values) {
  std::vector<QMatrix> out;
  const std::size_t cells = d * d;
  std::vector<std::size_t> digit(cells, 0);
  while (true) {
    QMatrix m(d, d);
    for (std::size_t i = 0; i < cells; ++i) m(i / d, i % d) = Rational(values[digit[i]]);
    out.push_back(std::move(m));
    std::size_t i = 0;
    while (i < cells && ++digit[i] == values.size()) digit[i++] = 0;
    if (i == cells) break;
  }
  return out;
}

// ---- line instances --------------------------------------------------------

LineTable random_line_table(Rng& rng, const LineGen& g) {
  const std::uint64_t count = std::uint64_t{1} << g.n;
  const long bound = g.bound.get_si();
  LineTable t;
  t.n = g.n;
  t.S.resize(count);
  t.P.resize(count);
  t.V.resize(count);
  std::iota(t.S.begin(), t.S.end(), 0);
  std::iota(t.P.begin(), t.P.end(), 0);
  for (auto& v : t.V) v = uniform(rng, 0, bound);

  std::vector<std::uint64_t> order(count - 1);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::size_t next = 0;
  std::bernoulli_distribution coin_noise(g.noise);

  auto link = [&](const std::vector<std::uint64_t>& path, bool cycle) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      t.S[path[i]] = path[i + 1];
      t.P[path[i + 1]] = path[i];
    }
    if (cycle) {
      t.S[path.back()] = path.front();
      t.P[path.front()] = path.back();
    }
  };

  // Potentials along a path; in monotone mode the path is cut where it would
  // overflow the bound, leaving the tail as isolated self-loops.
  auto assign = [&](std::vector<std::uint64_t>& path, long start) {
    long v = start;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i > 0) {
        long step;
        if (g.metered)
          step = 1;
        else if (g.monotone)
          step = uniform(rng, 1, 2);
        else
          step = uniform(rng, -1, 2);
        v += step;
      }
      if (g.monotone && v > bound) {
        path.resize(i);
        return;
      }
      t.V[path[i]] = std::clamp(v, 0L, bound);
    }
  };

  const std::size_t main_len = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(count - 1)));
  std::vector<std::uint64_t> main{0};
  for (; next < main_len; ++next) main.push_back(order[next]);
  assign(main, g.metered ? 1 : 0);
  link(main, false);

  while (next < order.size()) {
    const long remaining = static_cast<long>(order.size() - next);
    const long shape = uniform(rng, 0, 2);
    if (shape == 0 || remaining < 2) {
      ++next;  // isolated self-loop with its random potential
      continue;
    }
    const std::size_t len = static_cast<std::size_t>(uniform(rng, 2, remaining));
    std::vector<std::uint64_t> path(order.begin() + next, order.begin() + next + len);
    next += len;
    const bool cycle = shape == 2 && !g.monotone;
    assign(path, uniform(rng, 0, g.metered ? 3 : bound));
    link(path, cycle);
  }

  if (!g.monotone)
    for (std::uint64_t x = 1; x < count; ++x)
      if (coin_noise(rng)) t.V[x] = uniform(rng, 0, bound);
  if (std::bernoulli_distribution(g.corrupt)(rng) && count > 2) {
    const auto x = static_cast<std::uint64_t>(uniform(rng, 1, static_cast<long>(count - 1)));
    t.S[x] = static_cast<std::uint64_t>(uniform(rng, 0, static_cast<long>(count - 1)));
  }
  t.P[0] = 0;
  t.V[0] = g.metered ? 1 : 0;
  return t;
}

namespace {

std::shared_ptr<line::TruthTableOracle> oracle_of(const LineTable& t) {
  auto o = std::make_shared<line::TruthTableOracle>(t.n);
  for (std::uint64_t x = 0; x < t.S.size(); ++x)
    o->set(line::BitConfig::from_index(t.n, x),
           {line::BitConfig::from_index(t.n, t.S[x]), line::BitConfig::from_index(t.n, t.P[x]),
            t.V[x]});
  return o;
}

}  // namespace

line::EoplInstance to_eopl(const LineTable& t, std::size_t m) {
  return line::EoplInstance(oracle_of(t), m);
}

line::EomlInstance to_eoml(const LineTable& t) { return line::EomlInstance(oracle_of(t)); }

LineTable tabulate(const line::LineInstance& inst) {
  LineTable t;
  t.n = inst.n();
  const std::uint64_t count = std::uint64_t{1} << t.n;
  for (std::uint64_t x = 0; x < count; ++x) {
    auto b = line::BitConfig::from_index(t.n, x);
    t.S.push_back(inst.S(b).index());
    t.P.push_back(inst.P(b).index());
    t.V.push_back(inst.V(b));
  }
  return t;
}

namespace {

bool end_of_line(const LineTable& t, std::uint64_t x) {
  return (t.S[t.P[x]] != x && x != 0) || t.P[t.S[x]] != x;
}

}  // namespace

std::optional<line::SolutionKind> eopl_kind(const LineTable& t, std::uint64_t x) {
  if (end_of_line(t, x)) return line::SolutionKind::R1;
  const auto sx = t.S[x];
  if (x != sx && t.P[sx] == x && t.V[sx] - t.V[x] <= 0) return line::SolutionKind::R2;
  return std::nullopt;
}

std::optional<line::SolutionKind> eoml_kind(const LineTable& t, std::uint64_t x) {
  if (end_of_line(t, x)) return line::SolutionKind::T1;
  if (x != 0 && t.V[x] == 1) return line::SolutionKind::T2;
  const BigInt& v = t.V[x];
  if ((v > 0 && t.V[t.S[x]] - v != 1) || (v > 1 && v - t.V[t.P[x]] != 1))
    return line::SolutionKind::T3;
  return std::nullopt;
}

std::vector<line::BitConfig> all_configs(std::size_t n) {
  std::vector<line::BitConfig> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i)
    out.push_back(line::BitConfig::from_index(n, i));
  return out;
}

// Reads a configuration straight off its definition and solves the tight
// system s - M y - z 1 = q by Cramer's rule. nullopt when the encoding is
// not canonical, the basis is singular or the point is infeasible.
std::optional<TightPoint> decode_config(const lcp::LcpInstance& inst, const line::BitConfig& u) {
  const std::size_t d = inst.dim();
  std::optional<std::size_t> dup;
  for (std::size_t i = 0; i < d; ++i) {
    if (!u.get(d + i)) continue;
    if (dup) return std::nullopt;
    dup = i;
  }
  if (dup && !u.get(*dup)) return std::nullopt;
  // Basic columns: flat 0..d-1 are y, d..2d-1 are s, 2d is z.
  std::vector<std::size_t> basic;
  for (std::size_t i = 0; i < d; ++i) {
    if (dup == i) continue;
    basic.push_back(u.get(i) ? i : d + i);
  }
  if (dup) basic.push_back(2 * d);
  QMatrix a(d, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) {
      const std::size_t f = basic[c];
      if (f < d)
        a(r, c) = -inst.M()(r, f);
      else if (f < 2 * d)
        a(r, c) = Rational(f - d == r ? 1 : 0);
      else
        a(r, c) = Rational(-1);
    }
  const Rational det = cofactor_det(a);
  if (det.is_zero()) return std::nullopt;
  TightPoint out{QVector(d), QVector(d), Rational(0)};
  for (std::size_t c = 0; c < d; ++c) {
    QMatrix ac = a;
    for (std::size_t r = 0; r < d; ++r) ac(r, c) = inst.q()[r];
    const Rational v = cofactor_det(ac) / det;
    if (v.sign() < 0) return std::nullopt;
    const std::size_t f = basic[c];
    if (f < d)
      out.y[f] = v;
    else if (f < 2 * d)
      out.s[f - d] = v;
    else
      out.z = v;
  }
  return out;
}

// True when some feasible basis has a basic variable at zero.
bool degenerate_lcp(const lcp::LcpInstance& inst) {
  const std::size_t d = inst.dim();
  for (const auto& u : all_configs(2 * d)) {
    if (u.is_zero()) continue;
    auto p = decode_config(inst, u);
    if (!p) continue;
    std::size_t zeros = p->z.is_zero() ? 1 : 0;
    for (std::size_t i = 0; i < d; ++i) zeros += p->y[i].is_zero() + p->s[i].is_zero();
    if (zeros != d + 1) return true;
  }
  return false;
}

// ---- circuits ----------------------------------------------------------------

circuit::ArithCircuit halving_map(std::size_t dim, const Rational& k, const QVector& b) {
  circuit::CircuitBuilder cb(dim);
  const std::size_t kk = cb.constant(k);
  std::vector<std::size_t> outs;
  for (std::size_t i = 0; i < dim; ++i)
    outs.push_back(cb.add(cb.mul(kk, cb.input(i)), cb.constant(b[i])));
  return cb.build(outs);
}

circuit::ArithCircuit norm_distance(std::size_t dim, circuit::Norm r) {
  circuit::CircuitBuilder cb(2 * dim);
  std::size_t acc = cb.abs(cb.sub(cb.input(0), cb.input(dim)));
  for (std::size_t i = 1; i < dim; ++i) {
    std::size_t term = cb.abs(cb.sub(cb.input(i), cb.input(dim + i)));
    acc = r.is_infinity() ? cb.max(acc, term) : cb.add(acc, term);
  }
  return cb.build({acc});
}

circuit::ArithCircuit coordinate_potential(std::size_t dim, const Rational& a) {
  circuit::CircuitBuilder cb(dim);
  return cb.build({cb.mul(cb.constant(a), cb.input(0))});
}

}  // namespace clslab::testing
