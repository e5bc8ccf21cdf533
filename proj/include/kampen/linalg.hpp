#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace kampen {

using Rational = mpq_class;
using Vector = std::vector<Rational>;
// Row-major dense matrix.
using Matrix = std::vector<Vector>;

Rational determinant(Matrix a);
int sign(const Rational& x);

// Solution of a x = b, or nothing when a is singular.
std::optional<Vector> solve(Matrix a, Vector b);

Matrix identity(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);

}  // namespace kampen
