#pragma once

#include "kampen/deleted_product.hpp"

namespace kampen {

// Intersection number of the images of sigma and tau under the moment curve
// map i -> (i, i^2, ..., i^m). Requires disjoint simplices with
// dim sigma + dim tau = m.
int cyclic_intersection(const Simplex& sigma, const Simplex& tau, int m);

// (-1)^{dim first} * cyclic_intersection(first, second, m) on an m-cell.
int phi_c(const Cell& c, int m);

}  // namespace kampen
