#pragma once

// Test-side oracles. These deliberately avoid the library's enumeration and
// search code so they can serve as independent references.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "kampen/model.hpp"
#include "kampen/simplicial.hpp"

namespace support {

using Face = std::vector<int>;

// Every face of the complex as a sorted vertex list, by scanning all vertex
// subsets of every facet.
inline std::set<Face> faces_by_bitmask(const kampen::SimplicialComplex& k) {
  std::set<Face> out;
  for (const auto& f : k.facets()) {
    const auto& v = f.vertices();
    for (unsigned mask = 1; mask < (1u << v.size()); ++mask) {
      Face s;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (mask & (1u << i)) s.push_back(v[i]);
      out.insert(s);
    }
  }
  return out;
}

// Number of ordered pairs of disjoint faces with dimensions summing to d.
inline std::size_t count_pairs(const std::set<Face>& faces, int d) {
  std::size_t n = 0;
  for (const auto& a : faces)
    for (const auto& b : faces) {
      if (static_cast<int>(a.size() + b.size()) - 2 != d) continue;
      bool disjoint = true;
      for (int x : a)
        for (int y : b) disjoint = disjoint && x != y;
      n += disjoint;
    }
  return n;
}

// Faces of the simplex on {0..n} of dimension at most max_dim.
inline std::set<Face> simplex_faces(int n, int max_dim) {
  std::set<Face> out;
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    Face s;
    for (int i = 0; i <= n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (static_cast<int>(s.size()) - 1 <= max_dim) out.insert(s);
  }
  return out;
}

// Enumerates assignments in index order and checks a row once its last
// variable is set. Returns a satisfying assignment or nothing.
inline std::optional<std::vector<std::int64_t>> brute_force(const kampen::Model& m) {
  const auto& vars = m.variables();
  const std::size_t n = vars.size();
  std::vector<std::vector<const kampen::Row*>> closing(n + 1);
  for (const auto& r : m.rows()) {
    std::size_t last = 0;
    for (const auto& t : r.terms) last = std::max(last, t.var + 1);
    closing[last].push_back(&r);
  }
  auto holds = [](const kampen::Row& r, const std::vector<std::int64_t>& x) {
    std::int64_t s = 0;
    for (const auto& t : r.terms) s += t.coef * x[t.var];
    switch (r.rel) {
      case kampen::Relation::LessEqual: return s <= r.rhs;
      case kampen::Relation::Equal: return s == r.rhs;
      case kampen::Relation::GreaterEqual: return s >= r.rhs;
    }
    return false;
  };
  std::vector<std::int64_t> x(n, 0);
  for (const auto* r : closing[0])
    if (!holds(*r, x)) return std::nullopt;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) return true;
    for (std::int64_t v = vars[i].lower; v <= vars[i].upper; ++v) {
      x[i] = v;
      bool ok = true;
      for (const auto* r : closing[i + 1]) ok = ok && holds(*r, x);
      if (ok && rec(i + 1)) return true;
    }
    return false;
  };
  if (rec(0)) return x;
  return std::nullopt;
}

// Small random model: up to 12 variables with bounds inside [-2, 2] and up
// to 20 rows of up to 4 terms.
inline kampen::Model random_model(std::mt19937_64& rng) {
  auto uni = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
  kampen::Model m;
  const int n = uni(1, 12);
  for (int i = 0; i < n; ++i) {
    const int lo = uni(-2, 2);
    m.add_variable("x" + std::to_string(i), lo, uni(lo, 2));
  }
  const int rows = uni(0, 20);
  for (int r = 0; r < rows; ++r) {
    std::vector<kampen::Term> t;
    const int len = uni(1, std::min(4, n));
    for (int k = 0; k < len; ++k) {
      int c = uni(-3, 3);
      if (c == 0 || uni(0, 2) > 0) c = uni(0, 1) ? 1 : -1;
      t.push_back({static_cast<std::size_t>(uni(0, n - 1)), c});
    }
    const auto rel = static_cast<kampen::Relation>(uni(0, 2));
    m.add_row("r" + std::to_string(r), t, rel, uni(-3, 3));
  }
  return m;
}

}  // namespace support
