#include <doctest.h>

#include <cmath>
#include <random>

#include "kampen/cyclic.hpp"
#include "kampen/geometry.hpp"
#include "kampen/oracle.hpp"
#include "kampen/system_builder.hpp"

using namespace kampen;

namespace {

Polynomial poly(std::vector<long> c) {
  std::vector<Rational> r;
  for (long x : c) r.emplace_back(x);
  return Polynomial(std::move(r));
}

PointMap plane(std::vector<std::pair<long, long>> pts) {
  PointMap f{2, {}};
  for (auto [x, y] : pts) f.points.push_back({Rational(x), Rational(y)});
  return f;
}

// lambda on P_J for m = 2 by following the straight-line homotopy from g to f
// numerically: each time the three points of J become collinear, the middle
// one crosses the segment through the other two.
std::map<Cell, int> sampled_lambda(const DeformationPair& pair, const Simplex& j) {
  auto point = [&](int i, double t) {
    std::array<double, 2> p{};
    for (int d = 0; d < 2; ++d)
      p[d] = t * pair.f[j[i]][d].get_d() + (1 - t) * pair.g[j[i]][d].get_d();
    return p;
  };
  auto det = [&](double t) {
    const auto a = point(0, t), b = point(1, t), c = point(2, t);
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  };
  std::map<Cell, int> out;
  const Simplex j0({j[0]}), j1({j[1]}), j2({j[2]});
  const Cell cells[3] = {Cell(j0, Simplex({j[1], j[2]})), Cell(Simplex({j[0], j[2]}), j1),
                         Cell(Simplex({j[0], j[1]}), j2)};
  for (const auto& c : cells) out[c] = 0;

  constexpr int kSteps = 10000;
  for (int s = 0; s < kSteps; ++s) {
    double lo = double(s) / kSteps, hi = double(s + 1) / kSteps;
    const double dlo = det(lo), dhi = det(hi);
    if ((dlo < 0) == (dhi < 0)) continue;
    for (int it = 0; it < 60; ++it) {
      const double mid = (lo + hi) / 2;
      ((det(mid) < 0) == (dlo < 0) ? lo : hi) = mid;
    }
    const double t = (lo + hi) / 2;
    // Order the collinear points along their line.
    const auto a = point(0, t), b = point(1, t), c = point(2, t);
    std::array<double, 2> dir{c[0] - a[0], c[1] - a[1]};
    if (std::abs(b[0] - a[0]) + std::abs(b[1] - a[1]) > std::abs(dir[0]) + std::abs(dir[1]))
      dir = {b[0] - a[0], b[1] - a[1]};
    const double pa = 0, pb = (b[0] - a[0]) * dir[0] + (b[1] - a[1]) * dir[1],
                 pc = (c[0] - a[0]) * dir[0] + (c[1] - a[1]) * dir[1];
    auto between = [](double x, double y, double z) { return (y - x) * (y - z) < 0; };
    int middle = between(pb, pa, pc) ? 0 : between(pa, pb, pc) ? 1 : 2;
    const Cell& cell = cells[middle];
    const int crossing = dhi > dlo ? 1 : -1;
    out[cell] += shuffle_sign(cell.first, cell.second) * crossing;
  }
  return out;
}

}  // namespace

TEST_CASE("moment map") {
  const auto c = moment_map(3, 3);
  REQUIRE(c.num_vertices() == 4);
  CHECK(c[2] == Vector{2, 4, 8});
  CHECK(c[0] == Vector{0, 0, 0});
  CHECK(in_general_position(moment_map(6, 2).points, 2));
  CHECK_FALSE(in_general_position(plane({{0, 0}, {1, 1}, {2, 2}}).points, 2));
}

TEST_CASE("intersection numbers") {
  // Sign of det [(1,p), (1,s1), (1,t1)] with p the crossing point (0,0).
  const auto f = plane({{0, -1}, {0, 1}, {1, 0}, {-1, 0}});
  CHECK(intersection_number(f, Simplex({0, 1}), Simplex({2, 3})) == 1);
  CHECK(intersection_number(f, Simplex({2, 3}), Simplex({0, 1})) == -1);
  CHECK(phi(f, Cell(Simplex({0, 1}), Simplex({2, 3}))) == -1);
  const auto flipped = plane({{0, -1}, {0, 1}, {-1, 0}, {1, 0}});
  CHECK(intersection_number(flipped, Simplex({0, 1}), Simplex({2, 3})) == -1);

  const auto far = plane({{0, 0}, {1, 0}, {5, 5}, {6, 7}});
  CHECK(intersection_number(far, Simplex({0, 1}), Simplex({2, 3})) == 0);

  // vertex inside a triangle
  const auto tri = plane({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  CHECK(std::abs(intersection_number(tri, Simplex({3}), Simplex({0, 1, 2}))) == 1);

  const auto touch = plane({{0, 0}, {2, 0}, {1, 0}, {1, 3}});
  CHECK_THROWS_AS(intersection_number(touch, Simplex({0, 1}), Simplex({2, 3})),
                  DegenerateConfiguration);
}

TEST_CASE("moment curve in R^3") {
  CHECK(cyclic_intersection(Simplex({0, 2, 4}), Simplex({1, 3}), 3) == -1);
  CHECK(intersection_number(moment_map(4, 3), Simplex({0, 2, 4}), Simplex({1, 3})) == -1);
  CHECK(intersection_number(moment_map(4, 3), Simplex({0, 1, 2}), Simplex({3, 4})) == 0);
}

TEST_CASE("an embedding has phi = 0 on its deleted product") {
  const auto k = bipyramid_complex();
  const auto f = bipyramid_embedding();
  for (const auto& c : cells(k, 3)) CHECK(phi(f, c) == 0);
}

TEST_CASE("dimension guards") {
  const auto f = moment_map(5, 2);
  CHECK_THROWS_AS(phi(f, Cell(Simplex({0}), Simplex({1}))), std::invalid_argument);
  CHECK_THROWS_AS(intersection_number(f, Simplex({0, 1}), Simplex({1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(intersection_number(f, Simplex({0, 1, 2}), Simplex({3, 4})),
                  std::invalid_argument);
  DeformationPair p{random_map(5, 2, 1), f, -1};
  CHECK_THROWS_AS(lambda_family(p, Simplex({0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(lambda(p, Cell(Simplex({0}), Simplex({1}))), std::invalid_argument);
  CHECK_THROWS_AS(random_map(4, 2, 1, moment_map(2, 3)), std::invalid_argument);
}

TEST_CASE("random maps") {
  const auto a = random_map(6, 3, 99), b = random_map(6, 3, 99);
  CHECK(a.points == b.points);
  CHECK(in_general_position(a.points, 3));
  const auto prefix = moment_map(2, 3);
  const auto c = random_map(6, 3, 7, prefix);
  for (int v = 0; v <= 2; ++v) CHECK(c[v] == prefix[v]);
  for (int v = 0; v <= 6; ++v)
    for (int d = 0; d < 3; ++d) {
      if (v <= 2) continue;
      CHECK(abs(c[v][d]) <= 50);
      CHECK(c[v][d].get_den() <= 10);
    }
  const auto pair = random_pair(6, 2, 5, 2, true);
  CHECK(pair.g.points == moment_map(6, 2).points);
  for (int v = 0; v <= 2; ++v) CHECK(pair.f[v] == pair.g[v]);
}

TEST_CASE("lambda of a pair with itself vanishes") {
  const auto g = random_map(5, 3, 3);
  DeformationPair p{g, g, 5};
  for (const auto& fam : lambda_families(p))
    for (const auto& [c, v] : fam.values) CHECK(v == 0);
}

TEST_CASE("lambda is bounded by ceil(m/2)") {
  for (int m = 2; m <= 4; ++m) {
    for (std::uint64_t s = 0; s < 6; ++s) {
      try {
        for (const auto& fam : lambda_families(random_pair(m + 2, m, 100 * m + s)))
          for (const auto& [c, v] : fam.values) CHECK(std::abs(v) <= (m + 1) / 2);
      } catch (const DegenerateConfiguration&) {
      }
    }
  }
}

TEST_CASE("lambda matches homotopy sampling for m = 2") {
  int compared = 0, nonzero = 0;
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int n = 2 + static_cast<int>(s % 3);
    const auto pair = random_pair(n, 2, 7000 + s);
    std::vector<LambdaFamily> fams;
    try {
      fams = lambda_families(pair);
    } catch (const DegenerateConfiguration&) {
      continue;
    }
    for (const auto& fam : fams) {
      const auto expected = sampled_lambda(pair, fam.j);
      for (const auto& [c, v] : fam.values) {
        CAPTURE(c.encode());
        CHECK(v == expected.at(c));
        nonzero += v != 0;
      }
      ++compared;
    }
  }
  CHECK(compared > 50);
  CHECK(nonzero > 5);
}

TEST_CASE("polynomial arithmetic") {
  const auto p = poly({-1, 0, 1});  // x^2 - 1
  const auto q = poly({1, 1});
  auto [quot, rem] = divmod(p, q);
  CHECK(quot == poly({-1, 1}));
  CHECK(rem.is_zero());
  CHECK(gcd(p, poly({2, 2})) == poly({1, 1}));
  CHECK(p.derivative() == poly({0, 2}));
  CHECK(p(Rational(3)) == 8);
  CHECK(poly({0, 0}).degree() == -1);
  // (x-1)^2 (x+2)
  const auto r = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
  CHECK(squarefree_part(r) == poly({-2, 1, 1}));
}

TEST_CASE("Sturm root counting and isolation") {
  // (x-1)(x-2)(x+3)
  const auto p = poly({-1, 1}) * poly({-2, 1}) * poly({3, 1});
  const SturmChain sc(p);
  CHECK(sc.count(Rational(-10), Rational(10)) == 3);
  CHECK(sc.count(Rational(0), Rational(3, 2)) == 1);
  CHECK(sc.count(Rational(-3), Rational(0)) == 0);  // (-3, 0]: -3 excluded
  CHECK(sc.count(Rational(-4), Rational(-3)) == 1);
  CHECK(root_bound(p) >= 3);

  auto roots = isolate_roots(p, Rational(-5), Rational(5));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].lo < -3);
  CHECK(roots[0].hi > -3);
  CHECK(roots[2].lo < 2);
  CHECK(roots[2].hi > 2);
  // sign of x - 3/2 at each root
  const auto probe = poly({-3, 2});
  CHECK(sign_at_root(probe, p, roots[0]) == -1);
  CHECK(sign_at_root(probe, p, roots[1]) == -1);
  CHECK(sign_at_root(probe, p, roots[2]) == 1);
  // x^2 - 2: irrational roots, sign of x at each
  const auto two = poly({-2, 0, 1});
  auto sq = isolate_roots(two, Rational(-2), Rational(2));
  REQUIRE(sq.size() == 2);
  CHECK(sign_at_root(poly({0, 1}), two, sq[0]) == -1);
  CHECK(sign_at_root(two, two, sq[1]) == 0);
}
