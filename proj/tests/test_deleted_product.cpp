#include <doctest.h>

#include <map>

#include "kampen/deleted_product.hpp"
#include "support.hpp"

using namespace kampen;

namespace {

std::map<Cell, int> as_map(const SignedCellSum& s) {
  std::map<Cell, int> out;
  for (const auto& [c, k] : s) out[c] = k;
  return out;
}

}  // namespace

TEST_CASE("cell basics") {
  const Cell c({0, 2}, {1, 3});
  CHECK(c.dim() == 2);
  CHECK(c.encode() == "0_2x1_3");
  CHECK(parse_cell("0_2x1_3") == c);
  CHECK(c.support() == Simplex{0, 1, 2, 3});
  CHECK_THROWS_AS(Cell({0, 1}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(parse_cell("0_2"), ParseError);
  CHECK_THROWS_AS(parse_cell("0_x1"), ParseError);
  CHECK_THROWS_AS(parse_cell("0_1x1"), ParseError);
}

TEST_CASE("cell counts of the built-ins") {
  CHECK(cells(load_builtin("rp2"), 2).size() == 150);
  CHECK(cells(load_builtin("bipyramid"), 2).size() == 48);
  CHECK(cells(load_builtin("csaszar"), 2).size() == 322);
  CHECK(cells(load_builtin("moebius-brehm"), 2).size() == 510);
  CHECK(cells(load_builtin("m2-10"), 2).size() == 1136);
  CHECK(cells(load_builtin("m3-10"), 2).size() == 1490);
  CHECK(cells(load_builtin("m4-11"), 2).size() == 2248);
  CHECK(cells(load_builtin("m5-12"), 2).size() == 3180);
  CHECK(cells_full(8, 2, 3).size() == 1764);
}

TEST_CASE("cell enumeration agrees with brute force") {
  for (const auto& name : builtin_names()) {
    const auto k = load_builtin(name);
    const auto faces = support::faces_by_bitmask(k);
    for (int d = 0; d <= 4; ++d) {
      CAPTURE(name);
      CAPTURE(d);
      const auto cs = cells(k, d);
      CHECK(cs.size() == support::count_pairs(faces, d));
      CHECK(std::is_sorted(cs.begin(), cs.end()));
    }
  }
  for (int n = 2; n <= 7; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int d = 0; d <= m + 1; ++d) {
        CAPTURE(n);
        CAPTURE(d);
        CHECK(cells_full(n, d, m).size() ==
              support::count_pairs(support::simplex_faces(n, m), d));
      }
  CHECK(cells_full(6, 2, 3).size() == 490);
  CHECK(cells_full(2, 0, 1).size() == 6);
  const auto tri = parse_complex(R"({"num_vertices":3,"facets":[[0,1,2]]})");
  CHECK(cells(tri, 0).size() == 6);
}

TEST_CASE("canonicalize and the swap sign") {
  const Cell ee({2, 3}, {0, 1});
  CHECK(swap_sign(ee) == 1);
  CHECK(canonicalize(ee) == std::pair{Cell({0, 1}, {2, 3}), 1});
  const Cell vt({4}, {0, 1, 2});
  CHECK(swap_sign(vt) == -1);
  CHECK(canonicalize(vt) == std::pair{Cell({0, 1, 2}, {4}), -1});
  const Cell canon({0, 3}, {1});
  CHECK(canonicalize(canon) == std::pair{canon, 1});
  for (const auto& c : cells_full(5, 2, 3)) {
    const auto [rep, s] = canonicalize(c);
    CHECK(canonicalize(rep) == std::pair{rep, 1});
    CHECK(rep.first.front() < rep.second.front());
    const Cell swapped(c.second, c.first);
    const auto [rep2, s2] = canonicalize(swapped);
    CHECK(rep2 == rep);
    CHECK(s * s2 == swap_sign(c));
  }
}

TEST_CASE("coboundary rows") {
  CHECK(as_map(coboundary_row(Cell({0, 1}, {2, 3}))) ==
        std::map<Cell, int>{{Cell({1}, {2, 3}), 1},
                            {Cell({0}, {2, 3}), -1},
                            {Cell({0, 1}, {3}), -1},
                            {Cell({0, 1}, {2}), 1}});
  CHECK(as_map(coboundary_row(Cell({4}, {1, 2}))) ==
        std::map<Cell, int>{{Cell({4}, {2}), 1}, {Cell({4}, {1}), -1}});
  CHECK_THROWS_AS(coboundary_row(Cell({0}, {1})), std::invalid_argument);
}

TEST_CASE("coboundary applied twice vanishes") {
  for (int d = 2; d <= 4; ++d)
    for (const auto& c : cells_full(5, d, 3)) {
      std::map<Cell, int> acc;
      for (const auto& [f, a] : coboundary_row(c)) {
        if (f.dim() < 1) continue;
        for (const auto& [g, b] : coboundary_row(f)) acc[g] += a * b;
      }
      for (const auto& [g, k] : acc) CHECK(k == 0);
    }
}

TEST_CASE("normalize merges and drops zeros") {
  const Cell a({0}, {1}), b({1}, {0});
  const auto n = normalize({{b, 1}, {a, 2}, {b, -1}, {a, 1}});
  REQUIRE(n.size() == 1);
  CHECK(n[0].cell == a);
  CHECK(n[0].coef == 3);
}
