#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kampen/geometry.hpp"
#include "kampen/simplicial.hpp"
#include "kampen/system_builder.hpp"

namespace kampen {

// Serial is the reference; Parallel runs the same kernel under OpenMP and
// must produce identical results.
enum class Execution { Serial, Parallel };

struct Violation {
  std::string check;
  std::string where;
  long expected = 0;
  long actual = 0;
};

struct OracleReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t resamples = 0;
  std::size_t checks = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void merge(const OracleReport& other);
};

using Cochain = std::map<Cell, int>;

// lambda_family for every (m+1)-subset J of {0..n}, in lexicographic order.
std::vector<LambdaFamily> lambda_families(const DeformationPair& pair,
                                          Execution exec = Execution::Serial);

// lambda_{f,g} on every (m-1)-cell over the m-skeleton, both orientations.
Cochain lambda_cochain(const DeformationPair& pair, Execution exec = Execution::Serial);

// phi_f on the given m-cells.
Cochain phi_cochain(const PointMap& f, const std::vector<Cell>& cells,
                    Execution exec = Execution::Serial);

// delta lambda = phi_f - phi_g on every m-cell over the m-skeleton (both
// orientations of each cell, which also exercises the swap sign of lambda).
// A supplied cochain replaces the computed lambda (harness self-test).
OracleReport check_fundamental(const DeformationPair& pair,
                               Execution exec = Execution::Serial,
                               const Cochain* lambda_override = nullptr);

// Point-count, signed-sum and per-cell bounds for every J, plus the
// det D dichotomy and the eigenvalue-1 multiplicity bound.
OracleReport check_bounds(const DeformationPair& pair, Execution exec = Execution::Serial);

// Combinatorial phi_c against the moment-curve geometry on all m-cells of the
// n-simplex, and delta phi_c = 0 on all (m+1)-cells.
OracleReport check_cyclic(int n, int m);

// Evaluates every row and bound of the system for K under the assignment
// given by lambda between the embedding and the moment map. The embedding must
// agree with the moment map on vertices 0..m. Auxiliary variables get their
// intended values: a = |x|, y_J = the signed sum over the cells of P_J
// outside the deleted product of K.
OracleReport check_system(const SimplicialComplex& k, const PointMap& embedding,
                          const SystemConfig& cfg = {});

// A convex realization of the bipyramid (equator 0 1 2, apexes 3 and 4) in
// R^3 agreeing with the moment curve on vertices 0..3.
PointMap bipyramid_embedding();
SimplicialComplex bipyramid_complex();

// Property suites driven by (n, m, trials, seed): fundamental, bounds,
// cyclic, system. Degenerate samples are resampled and counted.
OracleReport run_suite(const std::string& suite, int n, int m, std::size_t trials,
                       std::uint64_t seed, Execution exec = Execution::Serial);

}  // namespace kampen
