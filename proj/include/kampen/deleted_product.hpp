#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kampen/simplicial.hpp"

namespace kampen {

// A cell first x second of the deleted product: an ordered pair of
// disjoint simplices.
struct Cell {
  Simplex first;
  Simplex second;

  Cell() = default;
  Cell(Simplex a, Simplex b);

  int dim() const { return first.dim() + second.dim(); }
  // Union of both vertex sets.
  Simplex support() const { return first.join(second); }
  // "0_2x1_3" for {0,2} x {1,3}.
  std::string encode() const;

  friend auto operator<=>(const Cell&, const Cell&) = default;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Inverse of Simplex::encode and Cell::encode.
Simplex parse_simplex(std::string_view text);
Cell parse_cell(std::string_view text);

struct SignedCell {
  Cell cell;
  int coef;
};
using SignedCellSum = std::vector<SignedCell>;

// Ordered disjoint face pairs of k with dimensions summing to d, sorted.
std::vector<Cell> cells(const SimplicialComplex& k, int d);

// Same over the max_face_dim-skeleton of the simplex on {0..n}.
std::vector<Cell> cells_full(int n, int d, int max_face_dim);

// (-1)^{(dim first + 1)(dim second + 1)}: the factor relating the deformation
// cochain on a cell and on its swap.
int swap_sign(const Cell& c);

// Representative of {c, swap(c)} with the smaller (first, second) encoding,
// and s with value(c) = s * value(representative).
std::pair<Cell, int> canonicalize(const Cell& c);

// Coefficients of (delta x)(c) in terms of x on the (dim c - 1)-cells.
SignedCellSum coboundary_row(const Cell& c);

// Merges repeated cells and drops zero coefficients; result sorted by cell.
SignedCellSum normalize(SignedCellSum sum);

}  // namespace kampen
