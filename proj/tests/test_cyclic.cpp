#include <doctest.h>

#include "kampen/cyclic.hpp"
#include "kampen/deleted_product.hpp"

using namespace kampen;

TEST_CASE("alternation rule") {
  CHECK(cyclic_intersection({0, 2, 4}, {1, 3}, 3) == -1);
  CHECK(cyclic_intersection({0, 1, 2}, {3, 4}, 3) == 0);
  CHECK(cyclic_intersection({0, 2}, {1, 3}, 2) == 1);
  CHECK_THROWS_AS(cyclic_intersection({0, 2}, {1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_intersection({0, 2}, {2, 3}, 2), std::invalid_argument);
}

TEST_CASE("phi_c examples") {
  CHECK(phi_c(Cell({0, 2, 4}, {1, 3}), 3) == -1);
  CHECK(phi_c(Cell({1, 3}, {0, 2, 4}), 3) == 1);
  CHECK(phi_c(Cell({0, 2}, {1, 3}), 2) == -1);
  CHECK_THROWS_AS(phi_c(Cell({0, 2}, {1, 3}), 3), std::invalid_argument);
}

TEST_CASE("phi_c symmetry on all cells up to nine vertices") {
  for (int m = 2; m <= 4; ++m)
    for (const auto& c : cells_full(8, m, m)) {
      const int k = c.first.dim(), l = c.second.dim();
      const int sign = ((k + 1) * (l + 1) + 1) % 2 ? -1 : 1;
      CHECK(phi_c(c, m) == sign * phi_c(Cell(c.second, c.first), m));
    }
}

TEST_CASE("phi_c is a cocycle on nine vertices") {
  for (int m = 2; m <= 4; ++m)
    for (const auto& c : cells_full(8, m + 1, m)) {
      int s = 0;
      for (const auto& [f, a] : coboundary_row(c)) s += a * phi_c(f, m);
      CHECK(s == 0);
    }
}

TEST_CASE("phi_c vanishes on non-alternating pairs and is bounded") {
  for (const auto& c : cells_full(7, 3, 3)) {
    const int v = phi_c(c, 3);
    CHECK(std::abs(v) <= 1);
    if (c.first.dim() != 2 && c.second.dim() != 2) CHECK(v == 0);
  }
}
