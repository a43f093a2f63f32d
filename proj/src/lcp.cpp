#include "clslab/lcp.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "clslab/errors.hpp"
#include "clslab/text_io.hpp"

namespace clslab::lcp {

LcpInstance::LcpInstance(QMatrix m, QVector q) : m_(std::move(m)), q_(std::move(q)) {
  if (q_.size() == 0) throw DimensionError("LCP dimension must be at least 1");
  if (!m_.square() || m_.rows() != q_.size())
    throw DimensionError("LCP needs a d x d matrix and a length-d vector");
}

QVector LcpInstance::slack(const QVector& y) const { return q_ + m_ * y; }

SolutionReport verify_lcp_solution(const LcpInstance& inst, const QVector& y) {
  if (y.size() != inst.dim())
    throw DimensionError("candidate has length " + std::to_string(y.size()) + ", expected " +
                         std::to_string(inst.dim()));
  SolutionReport rep;
  const QVector s = inst.slack(y);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const std::string idx = std::to_string(i + 1);
    if (y[i].sign() < 0) rep.failures.push_back("y_" + idx + " = " + y[i].str() + " < 0");
    if (s[i].sign() < 0) rep.failures.push_back("slack_" + idx + " = " + s[i].str() + " < 0");
    if (!(y[i] * s[i]).is_zero())
      rep.failures.push_back("complementarity y_" + idx + " * slack_" + idx + " = " +
                             (y[i] * s[i]).str() + " != 0");
  }
  rep.ok = rep.failures.empty();
  return rep;
}

bool verify_outcome(const LcpInstance& inst, const LcpOutcome& outcome) {
  if (const auto* q1 = std::get_if<Q1>(&outcome)) {
    return q1->y.size() == inst.dim() && verify_lcp_solution(inst, q1->y).ok;
  }
  const auto& q2 = std::get<Q2>(outcome);
  if (q2.S.empty() || q2.S.back() >= inst.dim()) return false;
  Rational m = principal_minor(inst.M(), q2.S);
  return m == q2.minor && m.sign() <= 0;
}

std::optional<MinorWitness> p_matrix_violation(const QMatrix& m) {
  if (!m.square()) throw DimensionError("P-matrix test needs a square matrix");
  const std::size_t d = m.rows();
  std::optional<MinorWitness> found;
  IndexSet current;
  // Depth-first over sorted index lists visits subsets in lexicographic order.
  std::function<bool(std::size_t)> visit = [&](std::size_t from) {
    for (std::size_t i = from; i < d; ++i) {
      current.push_back(i);
      Rational minor = mat_det(m.submatrix(current, current));
      if (minor.sign() <= 0) {
        found = MinorWitness{current, minor};
        return true;
      }
      if (visit(i + 1)) return true;
      current.pop_back();
    }
    return false;
  };
  visit(0);
  return found;
}

std::vector<QVector> brute_force_solutions(const LcpInstance& inst) {
  const std::size_t d = inst.dim();
  if (d > 20) throw PreconditionError("brute force limited to d <= 20");
  std::vector<QVector> out;
  for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
    IndexSet basic;
    for (std::size_t i = 0; i < d; ++i)
      if (mask & (1UL << i)) basic.push_back(i);
    QVector y(d);
    if (!basic.empty()) {
      QVector rhs(basic.size());
      for (std::size_t k = 0; k < basic.size(); ++k) rhs[k] = -inst.q()[basic[k]];
      auto sol = solve_linear(inst.M().submatrix(basic, basic), rhs);
      if (!sol) continue;
      for (std::size_t k = 0; k < basic.size(); ++k) y[basic[k]] = (*sol)[k];
    }
    if (!verify_lcp_solution(inst, y).ok) continue;
    if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
  }
  return out;
}

LcpInstance parse_lcp(std::istream& in, bool paper_sign) {
  TokenLines lines(in);
  auto header = lines.expect("dimension");
  if (header.tokens.size() != 1) throw ParseError("expected a single dimension", header.number);
  long d = 0;
  try {
    d = std::stol(header.tokens[0]);
  } catch (const std::exception&) {
    throw ParseError("malformed dimension '" + header.tokens[0] + "'", header.number);
  }
  if (d < 1) throw ParseError("dimension must be >= 1", header.number);
  const auto n = static_cast<std::size_t>(d);
  auto read_row = [&](const char* what) {
    auto line = lines.expect(what);
    if (line.tokens.size() != n)
      throw ParseError(std::string(what) + " needs " + std::to_string(n) + " entries",
                       line.number);
    QVector row(n);
    for (std::size_t j = 0; j < n; ++j) {
      try {
        row[j] = Rational::parse(line.tokens[j]);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line.number);
      }
    }
    return row;
  };
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    QVector row = read_row("matrix row");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = paper_sign ? -row[j] : row[j];
  }
  QVector q = read_row("q row");
  if (auto extra = lines.next()) throw ParseError("trailing content", extra->number);
  return LcpInstance(std::move(m), std::move(q));
}

std::string format_lcp(const LcpInstance& inst) {
  std::ostringstream os;
  const std::size_t d = inst.dim();
  os << d << '\n';
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) os << (j ? " " : "") << inst.M()(i, j);
    os << '\n';
  }
  for (std::size_t j = 0; j < d; ++j) os << (j ? " " : "") << inst.q()[j];
  os << '\n';
  return os.str();
}

std::string format_outcome(const LcpOutcome& outcome) {
  std::ostringstream os;
  if (const auto* q1 = std::get_if<Q1>(&outcome)) {
    os << "Q1";
    for (const auto& v : q1->y) os << ' ' << v;
  } else {
    const auto& q2 = std::get<Q2>(outcome);
    os << "Q2 S=" << format_index_set(q2.S) << " minor=" << q2.minor;
  }
  return os.str();
}

LcpOutcome parse_outcome(const std::string& text) {
  auto tokens = split_ws(text);
  if (tokens.empty()) throw ParseError("empty outcome");
  if (tokens[0] == "Q1") {
    std::vector<Rational> y;
    for (std::size_t i = 1; i < tokens.size(); ++i) y.push_back(Rational::parse(tokens[i]));
    return Q1{QVector(std::move(y))};
  }
  if (tokens[0] == "Q2" && tokens.size() == 3 && tokens[1].rfind("S={", 0) == 0 &&
      tokens[1].back() == '}' && tokens[2].rfind("minor=", 0) == 0) {
    Q2 q2;
    std::string body = tokens[1].substr(3, tokens[1].size() - 4);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      long v = 0;
      try {
        v = std::stol(item);
      } catch (const std::exception&) {
        throw ParseError("malformed index '" + item + "'");
      }
      if (v < 1) throw ParseError("indices are 1-based");
      q2.S.push_back(static_cast<std::size_t>(v - 1));
    }
    std::sort(q2.S.begin(), q2.S.end());
    q2.minor = Rational::parse(tokens[2].substr(6));
    return q2;
  }
  throw ParseError("unrecognized outcome '" + text + "'");
}

}  // namespace clslab::lcp
