#pragma once

// Seeded generators and independent oracles shared by the unit tests and the
// acceptance driver. Nothing here calls the library routine it is used to
// check.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "clslab/circuit.hpp"
#include "clslab/lcp.hpp"
#include "clslab/line.hpp"

namespace clslab::testing {

using Rng = std::mt19937_64;
inline constexpr std::uint64_t default_seed = 20181227;

long uniform(Rng& rng, long lo, long hi);

// d x d matrix and length-d q, entries uniform in [lo, hi].
lcp::LcpInstance random_lcp(Rng& rng, std::size_t d, long lo, long hi);

// Laplace expansion along the first row.
Rational cofactor_det(const QMatrix& m);

// Every LCP solution, one complementary basis at a time, with the basic
// block solved by Cramer's rule over cofactor determinants.
std::vector<QVector> cramer_lcp_solutions(const lcp::LcpInstance& inst);

// All principal minors > 0, straight from cofactor determinants.
bool cofactor_is_p_matrix(const QMatrix& m);

// Every square matrix with entries in `values`, row-major enumeration.
std::vector<QMatrix> all_matrices(std::size_t d, const std::vector<long>& values);

// Every n-bit configuration in index order.
std::vector<line::BitConfig> all_configs(std::size_t n);

// Point named by a 2d-bit configuration (tight y_i or s_i per label, one-hot
// duplicate label in the second half), solved by Cramer's rule.
struct TightPoint {
  QVector y, s;
  Rational z;
};
std::optional<TightPoint> decode_config(const lcp::LcpInstance& inst, const line::BitConfig& u);

// Some feasible basis has a basic variable at zero.
bool degenerate_lcp(const lcp::LcpInstance& inst);

// ---- line instances ----------------------------------------------------

// Plain truth table indexed by the integer value of a configuration.
struct LineTable {
  std::size_t n = 0;
  std::vector<std::uint64_t> S, P;
  std::vector<BigInt> V;
};

struct LineGen {
  std::size_t n = 4;
  BigInt bound;           // largest allowed potential
  bool metered = false;   // EOML: V(0) = 1 and unit steps before noise
  bool monotone = false;  // EOPL: strictly increasing V on every valid edge
  double noise = 0.2;     // chance of a potential glitch per vertex
  double corrupt = 0.1;   // chance of redirecting one successor pointer
};

LineTable random_line_table(Rng& rng, const LineGen& g);

line::EoplInstance to_eopl(const LineTable& t, std::size_t m);
line::EomlInstance to_eoml(const LineTable& t);
LineTable tabulate(const line::LineInstance& inst);

// Solution types read directly off the definitions, first match in order
// R1, R2 / T1, T2, T3.
std::optional<line::SolutionKind> eopl_kind(const LineTable& t, std::uint64_t x);
std::optional<line::SolutionKind> eoml_kind(const LineTable& t, std::uint64_t x);

// ---- circuits ------------------------------------------------------------

// x -> k x + b coordinatewise, built gate by gate.
circuit::ArithCircuit halving_map(std::size_t dim, const Rational& k, const QVector& b);
// ||x - y|| for r in {1, inf} on 2 dim inputs.
circuit::ArithCircuit norm_distance(std::size_t dim, circuit::Norm r);
// The first coordinate, scaled: x -> a x_1.
circuit::ArithCircuit coordinate_potential(std::size_t dim, const Rational& a);

}  // namespace clslab::testing
