#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "clslab/matrix.hpp"

namespace clslab::lcp {

// LCP (M, q): find y >= 0 with s := q + M y >= 0 and y_i s_i = 0.
//
// The stored M uses this sign convention throughout. Files written with the
// opposite convention (M y <= q) can be loaded with `paper_sign`, which
// negates M on ingestion.
class LcpInstance {
 public:
  LcpInstance(QMatrix m, QVector q);

  std::size_t dim() const { return q_.size(); }
  const QMatrix& M() const { return m_; }
  const QVector& q() const { return q_; }

  // s = q + M y.
  QVector slack(const QVector& y) const;

 private:
  QMatrix m_;
  QVector q_;
};

struct Q1 {
  QVector y;
  friend bool operator==(const Q1&, const Q1&) = default;
};

// Witness that M is not a P-matrix: det(M[S,S]) = minor <= 0.
struct Q2 {
  IndexSet S;
  Rational minor;
  friend bool operator==(const Q2&, const Q2&) = default;
};

using LcpOutcome = std::variant<Q1, Q2>;

struct SolutionReport {
  bool ok = true;
  std::vector<std::string> failures;  // one line per violated constraint
};

// Exact feasibility and complementarity check. Throws DimensionError when
// y has the wrong length.
SolutionReport verify_lcp_solution(const LcpInstance& inst, const QVector& y);

// True iff the outcome certifies itself: Q1 passes verify_lcp_solution, Q2
// has a recomputed principal minor equal to the stated one and <= 0.
bool verify_outcome(const LcpInstance& inst, const LcpOutcome& outcome);

struct MinorWitness {
  IndexSet S;
  Rational minor;
};

// nullopt iff every principal minor is > 0. Otherwise the lexicographically
// smallest (as sorted index lists) S with det(M[S,S]) <= 0.
std::optional<MinorWitness> p_matrix_violation(const QMatrix& m);
inline bool is_p_matrix(const QMatrix& m) { return !p_matrix_violation(m).has_value(); }

// All y solving the LCP, found by trying every complementary basis. Intended
// as a test oracle; exponential in d.
std::vector<QVector> brute_force_solutions(const LcpInstance& inst);

// Text format: `d`, then d rows of M, then one row of q; '#' comments.
LcpInstance parse_lcp(std::istream& in, bool paper_sign = false);
std::string format_lcp(const LcpInstance& inst);

// `Q1 y_1 ... y_d` or `Q2 S={...} minor=p/q`.
std::string format_outcome(const LcpOutcome& outcome);
LcpOutcome parse_outcome(const std::string& text);

}  // namespace clslab::lcp
