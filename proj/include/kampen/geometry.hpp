#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kampen/deleted_product.hpp"
#include "kampen/linalg.hpp"
#include "kampen/polynomial.hpp"

namespace kampen {

// Raised when a configuration violates a genericity assumption (a boundary
// touch, a repeated or non-general eigenvalue). Callers resample.
class DegenerateConfiguration : public Error {
 public:
  using Error::Error;
};

// Images of the vertices 0..N in Q^m.
struct PointMap {
  int m = 0;
  std::vector<Vector> points;

  int num_vertices() const { return static_cast<int>(points.size()); }
  const Vector& operator[](Vertex v) const { return points.at(v); }
};

// Straight-line homotopy data: f(i) = g(i) for i <= shared_prefix
// (shared_prefix = -1 when no vertex is shared).
struct DeformationPair {
  PointMap f;
  PointMap g;
  int shared_prefix = -1;
};

PointMap moment_map(int n, int m);

// True iff every m+1 of the points are affinely independent.
bool in_general_position(const std::vector<Vector>& points, int m);

// Integer numerators in [-50, 50] over denominators in [1, 10]; vertices
// 0..k are copied from prefix when given. Resamples until in general position.
PointMap random_map(int n, int m, std::uint64_t seed,
                    const std::optional<PointMap>& prefix = std::nullopt);

// g random or the moment map, f random sharing vertices 0..k with g; the union
// {f(0..n), g(k+1..n)} is in general position.
DeformationPair random_pair(int n, int m, std::uint64_t seed, int k = -1,
                            bool g_moment = false);

// Sign of the transversal intersection of f(sigma) and f(tau), 0 if disjoint.
int intersection_number(const PointMap& f, const Simplex& sigma, const Simplex& tau);

// (-1)^{dim first} * intersection_number on an m-cell.
int phi(const PointMap& f, const Cell& c);

// Deformation cochain values on the partition family P_J, together with the
// eigen-data used by the bounds.
struct LambdaFamily {
  Simplex j;
  int epsilon = 0;           // orientation of g(J)
  int det_d_sign = 0;        // sign of det D_J
  int multiplicity_one = 0;  // algebraic multiplicity of eigenvalue 1 of D_J
  std::map<Cell, int> values;  // every cell of P_J, zeros included
};

LambdaFamily lambda_family(const DeformationPair& pair, const Simplex& j);

// lambda_{f,g} on one (m-1)-cell.
int lambda(const DeformationPair& pair, const Cell& c);

}  // namespace kampen
