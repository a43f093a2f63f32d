#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "clslab/lcp.hpp"

namespace clslab::lcp {

// A coordinate of the augmented system  s - M y - z 1 = q.
struct Var {
  enum class Kind { y, s, z };
  Kind kind = Kind::z;
  std::size_t index = 0;  // unused for z

  static Var y(std::size_t i) { return {Kind::y, i}; }
  static Var s(std::size_t i) { return {Kind::s, i}; }
  static Var z() { return {Kind::z, 0}; }

  // Flat position in (y_1..y_d, s_1..s_d, z).
  std::size_t flat(std::size_t d) const;
  static Var from_flat(std::size_t f, std::size_t d);
  // The other member of a complementary pair; z has none.
  Var complement() const;
  std::string str() const;  // "y1", "s2", "z"

  friend bool operator==(const Var&, const Var&) = default;
  friend auto operator<=>(const Var& a, const Var& b) {
    return std::pair(static_cast<int>(a.kind), a.index) <=>
           std::pair(static_cast<int>(b.kind), b.index);
  }
};

// Vertex of the polytope {s - M y - z 1 = q, y, s, z >= 0} on which Lemke's
// algorithm walks. `tight` holds the d+1 nonbasic variables in canonical
// order (y's, then s's, then z).
struct LemkeVertex {
  QVector y;
  QVector s;
  Rational z;
  std::vector<Var> tight;
  std::optional<std::size_t> dup_label;

  const Rational& value(Var v) const;
  bool is_tight(Var v) const;
  friend bool operator==(const LemkeVertex&, const LemkeVertex&) = default;
};

struct LemkeOptions {
  // Resolve ratio-test ties by the lexicographic rule (symbolic perturbation
  // q + (eps, eps^2, ..., eps^d)). Off: ties raise DegeneracyError.
  bool lexicographic = false;
};

// Unbounded edge leaving a vertex: point + t * direction for all t >= 0.
struct Ray {
  Var entering;
  QVector dy;
  QVector ds;
  Rational dz;
};

struct PivotStep {
  std::variant<LemkeVertex, Ray> target;
  std::optional<Var> leaving;

  bool is_ray() const { return std::holds_alternative<Ray>(target); }
  const LemkeVertex& vertex() const { return std::get<LemkeVertex>(target); }
};

enum class Orientation { forward, backward };

// y = 0, z = |min q|, s = q + z 1. Requires a negative entry in q.
LemkeVertex lemke_start(const LcpInstance& inst, const LemkeOptions& opts = {});

// Follows the edge that relaxes `entering` (which must be tight at v) to the
// next vertex by an exact minimum-ratio test.
PivotStep lemke_pivot(const LcpInstance& inst, const LemkeVertex& v, Var entering,
                      const LemkeOptions& opts = {});

// Solves the equality system with the variables in `tight` (d+1 distinct
// ones) set to zero. nullopt when the basis is singular or the basic
// solution has a negative entry.
std::optional<LemkeVertex> vertex_from_tight(const LcpInstance& inst, std::vector<Var> tight);

// Reads the duplicate label off the point values: the l with y_l = s_l = 0.
// Throws DegeneracyError when two labels are duplicated.
std::optional<std::size_t> duplicate_label(const LemkeVertex& v);

// Locally computable edge direction. With B_v the basis matrix whose column
// for label i is the basic member of (y_i, s_i), or z's column when i is the
// duplicate label, the edge relaxing `entering` is forward iff
//   sign(det B_v) * (-1)^{#basic y} * parity(entering) > 0,
// with parity +1 for s and -1 for y and z. A pivot flips sign(det B_v) and
// changes the y-count so that the two endpoints of an edge always disagree,
// and the two edges at a duplicate-label vertex get opposite labels. The
// start vertex's Lemke edge comes out forward.
Orientation todd_orientation(const LcpInstance& inst, const LemkeVertex& v, Var entering);

// Structural checks on a vertex: the equality system, nonnegativity, full
// labelling, tight variables being zero, at most one duplicate label
// (`allow_degenerate` skips the last). Empty when all hold.
std::vector<std::string> check_vertex(const LcpInstance& inst, const LemkeVertex& v,
                                      bool allow_degenerate = false);

struct LemkeTrace {
  std::vector<LemkeVertex> vertices;
  std::vector<Var> entering;  // entering[i] leads from vertices[i] to vertices[i+1]
};

struct LemkeResult {
  LcpOutcome outcome;
  LemkeTrace trace;
};

// Lemke's complementary pivot algorithm. Returns Q1 at a z = 0 vertex, or a
// verified Q2 witness when a secondary ray is hit or z fails to decrease.
// Throws DegeneracyError on ties (unless lexicographic) and BudgetExceeded
// after 2^{2d}+1 pivots.
LemkeResult lemke_solve(const LcpInstance& inst, const LemkeOptions& opts = {});

// Q2 witness at a vertex where Lemke's path turns back in z or escapes along
// a ray. Tries the basic y-set S, then S plus the duplicate label, then
// exhaustive search; the result is always re-verified.
Q2 extract_q2_witness(const LcpInstance& inst, const LemkeVertex& v);

}  // namespace clslab::lcp
