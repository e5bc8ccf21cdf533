#include "kampen/oracle.hpp"

#include <cstdlib>
#include <exception>
#include <limits>
#include <random>
#include <stdexcept>

#include "kampen/cyclic.hpp"
#include "kampen/system_builder.hpp"

namespace kampen {

void OracleReport::merge(const OracleReport& other) {
  trials += other.trials;
  resamples += other.resamples;
  checks += other.checks;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

namespace {

std::vector<Simplex> subsets(int n, int size) {
  std::vector<Simplex> out;
  if (size < 1 || size > n + 1) return out;
  std::vector<Vertex> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    out.emplace_back(idx);
    int i = size - 1;
    while (i >= 0 && static_cast<int>(idx[i]) == n - (size - 1) + i) --i;
    if (i < 0) return out;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Runs body(i) for i in [0, n), serially or under OpenMP. The first exception
// thrown by any iteration is rethrown on the calling thread.
template <class F>
void for_each_index(std::size_t n, Execution exec, F&& body) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(kampen_oracle_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

int lhs_of(const Cochain& x, const SignedCellSum& row) {
  int s = 0;
  for (const auto& [c, coef] : row) s += coef * x.at(c);
  return s;
}

void expect_range(OracleReport& rep, const std::string& check, const std::string& where,
                  long lo, long hi, long actual) {
  ++rep.checks;
  if (actual < lo) rep.violations.push_back({check, where, lo, actual});
  else if (actual > hi) rep.violations.push_back({check, where, hi, actual});
}

void expect_eq(OracleReport& rep, const std::string& check, const std::string& where,
               long expected, long actual) {
  expect_range(rep, check, where, expected, expected, actual);
}

long ceil_half(long r) { return (r + 1) / 2; }
long floor_half(long r) { return r / 2; }

}  // namespace

std::vector<LambdaFamily> lambda_families(const DeformationPair& pair, Execution exec) {
  const int n = pair.g.num_vertices() - 1;
  const auto js = subsets(n, pair.g.m + 1);
  std::vector<LambdaFamily> out(js.size());
  for_each_index(js.size(), exec, [&](std::size_t i) { out[i] = lambda_family(pair, js[i]); });
  return out;
}

Cochain lambda_cochain(const DeformationPair& pair, Execution exec) {
  Cochain out;
  for (const auto& fam : lambda_families(pair, exec)) {
    for (const auto& [c, v] : fam.values) {
      out[c] = v;
      out[Cell(c.second, c.first)] = swap_sign(c) * v;
    }
  }
  return out;
}

Cochain phi_cochain(const PointMap& f, const std::vector<Cell>& cells, Execution exec) {
  std::vector<int> values(cells.size());
  for_each_index(cells.size(), exec, [&](std::size_t i) { values[i] = phi(f, cells[i]); });
  Cochain out;
  for (std::size_t i = 0; i < cells.size(); ++i) out.emplace(cells[i], values[i]);
  return out;
}

OracleReport check_fundamental(const DeformationPair& pair, Execution exec,
                               const Cochain* lambda_override) {
  OracleReport rep;
  rep.suite = "fundamental";
  const int m = pair.g.m;
  const int n = pair.g.num_vertices() - 1;
  const auto top = cells_full(n, m, m);
  const Cochain computed = lambda_override ? Cochain{} : lambda_cochain(pair, exec);
  const Cochain& lam = lambda_override ? *lambda_override : computed;
  const Cochain pf = phi_cochain(pair.f, top, exec);
  const Cochain pg = phi_cochain(pair.g, top, exec);
  for (const auto& c : top) {
    int actual = 0;
    for (const auto& [face, coef] : coboundary_row(c)) {
      const auto it = lam.find(face);
      actual += coef * (it == lam.end() ? 0 : it->second);
    }
    expect_eq(rep, "coboundary", c.encode(), pf.at(c) - pg.at(c), actual);
  }
  return rep;
}

OracleReport check_bounds(const DeformationPair& pair, Execution exec) {
  OracleReport rep;
  rep.suite = "bounds";
  const int m = pair.g.m;
  const int k = pair.shared_prefix;
  for (const auto& fam : lambda_families(pair, exec)) {
    const std::string where = fam.j.encode();
    const long r = m - ell(fam.j, k);
    long abs_sum = 0, signed_sum = 0;
    for (const auto& [c, v] : fam.values) {
      abs_sum += std::abs(v);
      const long sv = fam.epsilon * shuffle_sign(c.first, c.second) * v;
      signed_sum += sv;
      expect_range(rep, "index2", c.encode(), -ceil_half(r), floor_half(r), sv);
    }
    expect_range(rep, "points", where, 0, r, abs_sum);
    expect_range(rep, "points_eigen", where, 0, m - fam.multiplicity_one, abs_sum);
    expect_range(rep, "multiplicity", where, m - r, m, fam.multiplicity_one);
    expect_range(rep, "index1", where, -1, 0, signed_sum);
    expect_eq(rep, "index_det", where, fam.det_d_sign < 0 ? -1 : 0, signed_sum);
  }
  return rep;
}

OracleReport check_cyclic(int n, int m) {
  OracleReport rep;
  rep.suite = "cyclic";
  const PointMap c = moment_map(n, m);
  for (const auto& cell : cells_full(n, m, m))
    expect_eq(rep, "moment_curve", cell.encode(), phi(c, cell), phi_c(cell, m));
  Cochain pc;
  for (const auto& cell : cells_full(n, m, m + 1)) pc[cell] = phi_c(cell, m);
  for (const auto& cell : cells_full(n, m + 1, m + 1))
    expect_eq(rep, "cocycle", cell.encode(), 0, lhs_of(pc, coboundary_row(cell)));
  return rep;
}

OracleReport check_system(const SimplicialComplex& k, const PointMap& embedding,
                          const SystemConfig& cfg) {
  OracleReport rep;
  rep.suite = "system";
  const int m = embedding.m;
  const Model model = build(k, m, cfg);
  DeformationPair pair{embedding, moment_map(embedding.num_vertices() - 1, m), m};
  const Cochain lam = lambda_cochain(pair);

  auto rest_of_sum = [&](const Simplex& j) {
    long s = 0;
    for (const auto& c : partition_family(j).pairs)
      if (!k.contains(c.first) || !k.contains(c.second))
        s += shuffle_sign(c.first, c.second) * lam.at(c);
    return s;
  };
  auto value_of = [&](const std::string& name) -> long {
    if (name.starts_with("l_")) return lam.at(parse_cell(name.substr(2)));
    if (name.starts_with("y_")) return rest_of_sum(parse_simplex(name.substr(2)));
    if (name.starts_with("a_y_")) return std::abs(rest_of_sum(parse_simplex(name.substr(4))));
    if (name.starts_with("a_")) return std::abs(lam.at(parse_cell(name.substr(2))));
    throw std::logic_error("check_system: unexpected variable " + name);
  };

  std::vector<std::int64_t> values;
  for (const auto& v : model.variables()) {
    values.push_back(value_of(v.name));
    expect_range(rep, "bound", v.name, v.lower, v.upper, values.back());
  }
  for (const auto& row : model.rows()) {
    long lhs = 0;
    for (const auto& t : row.terms) lhs += t.coef * values[t.var];
    switch (row.rel) {
      case Relation::Equal: expect_eq(rep, "row", row.name, row.rhs, lhs); break;
      case Relation::LessEqual:
        expect_range(rep, "row", row.name, std::numeric_limits<long>::min(), row.rhs, lhs);
        break;
      case Relation::GreaterEqual:
        expect_range(rep, "row", row.name, row.rhs, std::numeric_limits<long>::max(), lhs);
        break;
    }
  }
  return rep;
}

SimplicialComplex bipyramid_complex() {
  return SimplicialComplex("bipyramid", 5,
                           {Simplex({0, 1, 3}), Simplex({1, 2, 3}), Simplex({0, 2, 3}),
                            Simplex({0, 1, 4}), Simplex({1, 2, 4}), Simplex({0, 2, 4})});
}

PointMap bipyramid_embedding() {
  // Apex 4 sits beyond the equator triangle, opposite apex 3, so the segment
  // between the apexes crosses the triangle's interior and the surface is the
  // boundary of a convex body.
  const PointMap c = moment_map(3, 3);
  Vector centroid(3, 0);
  for (int v = 0; v < 3; ++v)
    for (int d = 0; d < 3; ++d) centroid[d] += c[v][d] / 3;
  for (long t = 1; t <= 64; ++t) {
    PointMap f = c;
    Vector apex(3);
    for (int d = 0; d < 3; ++d) apex[d] = centroid[d] + Rational(t) * (centroid[d] - c[3][d]);
    f.points.push_back(apex);
    DeformationPair pair{f, moment_map(4, 3), 3};
    std::vector<Vector> all = f.points;
    all.push_back(pair.g[4]);
    if (!in_general_position(all, 3)) continue;
    try {
      lambda_families(pair);
      return f;
    } catch (const DegenerateConfiguration&) {
    }
  }
  throw Error("bipyramid_embedding: no generic apex found");
}

OracleReport run_suite(const std::string& suite, int n, int m, std::size_t trials,
                       std::uint64_t seed, Execution exec) {
  OracleReport rep;
  rep.suite = suite;
  rep.seed = seed;
  if (suite == "cyclic") {
    rep.merge(check_cyclic(n, m));
    rep.trials = 1;
    return rep;
  }
  if (suite == "system") {
    rep.merge(check_system(bipyramid_complex(), bipyramid_embedding()));
    rep.trials = 1;
    return rep;
  }
  if (suite != "fundamental" && suite != "bounds")
    throw std::invalid_argument("unknown oracle suite: " + suite);
  if (m < 1 || n < m + 1) throw std::invalid_argument("oracle: need m >= 1 and N >= m + 1");

  std::mt19937_64 rng(seed);
  constexpr std::size_t kResampleCap = 1000;
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt == kResampleCap) throw Error("oracle: resample cap reached");
      const std::uint64_t s = rng();
      try {
        if (suite == "fundamental") {
          rep.merge(check_fundamental(random_pair(n, m, s), exec));
        } else {
          const bool at_m = t % 2 == 1;
          rep.merge(check_bounds(random_pair(n, m, s, at_m ? m : 0, at_m), exec));
        }
        break;
      } catch (const DegenerateConfiguration&) {
        ++rep.resamples;
      }
    }
    ++rep.trials;
  }
  return rep;
}

}  // namespace kampen
