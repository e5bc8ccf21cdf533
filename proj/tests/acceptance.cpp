// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "kampen/deleted_product.hpp"
#include "kampen/ilp.hpp"
#include "kampen/oracle.hpp"
#include "kampen/simplicial.hpp"
#include "kampen/system_builder.hpp"
#include "support.hpp"

using namespace kampen;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool counts() {
  struct Case {
    const char* name;
    std::function<SimplicialComplex()> load;
    std::size_t expected;
  };
  const Case cases[] = {
      {"rp2", [] { return load_builtin("rp2"); }, 150},
      {"bipyramid", [] { return load_builtin("bipyramid"); }, 48},
      {"csaszar", [] { return load_builtin("csaszar"); }, 322},
      {"brehm", [] { return load_builtin("moebius-brehm"); }, 510},
      {"m2-10", [] { return load_builtin("m2-10"); }, 1136},
      {"m3-10", [] { return load_builtin("m3-10"); }, 1490},
      {"simplex9", [] { return SimplicialComplex::skeleton(9, 3); }, 1764},
  };
  bool ok = true;
  for (const auto& c : cases) {
    const auto t = Clock::now();
    const auto got = cells(c.load(), 2).size();
    const double s = since(t);
    const bool pass = got == c.expected && s < 1.0;
    std::printf("  %-10s %5zu (expected %zu) %.3fs %s\n", c.name, got, c.expected, s,
                pass ? "ok" : "MISMATCH");
    ok &= pass;
  }
  return ok;
}

bool verdicts() {
  struct Case {
    const char* name;
    Preset preset;
    Status expected;
  };
  const Case cases[] = {
      {"rp2", Preset::Novik, Status::Infeasible},
      {"rp2", Preset::Full, Status::Infeasible},
      {"bipyramid", Preset::Full, Status::Feasible},
      {"csaszar", Preset::Full, Status::Feasible},
      {"moebius-brehm", Preset::Minimal, Status::Infeasible},
  };
  bool ok = true;
  for (const auto& c : cases) {
    const auto model = build(load_builtin(c.name), 3, {c.preset});
    Limits limits;
    limits.time_seconds = 600;
    const auto t = Clock::now();
    const auto v = solve(model, limits);
    bool pass = v.status == c.expected;
    if (v.status == Status::Feasible) pass &= verify(model, v.assignment);
    std::printf("  %-13s %-8s vars %zu lambda %zu constraints %zu -> %s (%.2fs)\n", c.name,
                to_string(c.preset).c_str(), model.variables().size(),
                model.info.lambda_cells, model.constraints(), to_string(v.status).c_str(),
                since(t));
    if (std::string(c.name) == "moebius-brehm") pass &= model.info.lambda_cells == 510;
    ok &= pass;
  }
  return ok;
}

bool cyclic() {
  const auto t = Clock::now();
  std::size_t checks = 0;
  bool ok = true;
  for (int m = 2; m <= 3; ++m)
    for (int n = m + 1; n <= 8; ++n) {
      const auto rep = check_cyclic(n, m);
      checks += rep.checks;
      ok &= rep.ok();
    }
  std::printf("  %zu checks in %.2fs\n", checks, since(t));
  return ok && since(t) < 60;
}

// Trials spread over N = nmax, nmax-1, ... down to m+2.
OracleReport suite(const std::string& name, int m, int nmax, std::size_t trials,
                   std::uint64_t seed) {
  OracleReport total;
  const int sizes = nmax - (m + 2) + 1;
  for (int i = 0; i < sizes; ++i) {
    const std::size_t share = trials / sizes + (static_cast<std::size_t>(i) < trials % sizes);
    total.merge(run_suite(name, nmax - i, m, share, seed + i, Execution::Parallel));
  }
  return total;
}

bool property_suite(const std::string& name, double budget) {
  const auto t = Clock::now();
  const auto a = suite(name, 2, 7, 100, 1000);
  const auto b = suite(name, 3, 8, 50, 2000);
  for (const auto* r : {&a, &b})
    for (const auto& v : r->violations)
      std::printf("  violation %s at %s: expected %ld, got %ld\n", v.check.c_str(),
                  v.where.c_str(), v.expected, v.actual);
  std::printf("  m=2: %zu trials, %zu checks; m=3: %zu trials, %zu checks; %zu resamples; %.1fs\n",
              a.trials, a.checks, b.trials, b.checks, a.resamples + b.resamples, since(t));
  return a.ok() && b.ok() && a.trials == 100 && b.trials == 50 && since(t) < budget;
}

bool system() {
  const auto rep = check_system(bipyramid_complex(), bipyramid_embedding(), {Preset::Full});
  for (const auto& v : rep.violations)
    std::printf("  violation %s at %s: expected %ld, got %ld\n", v.check.c_str(),
                v.where.c_str(), v.expected, v.actual);
  std::printf("  %zu checks\n", rep.checks);
  return rep.ok() && rep.checks > 0;
}

bool solver() {
  const auto t = Clock::now();
  std::mt19937_64 rng(77);
  int agree = 0, feasible = 0;
  for (int i = 0; i < 500; ++i) {
    const auto m = support::random_model(rng);
    const auto expected = support::brute_force(m);
    const auto v = solve(m);
    bool pass = v.status == (expected ? Status::Feasible : Status::Infeasible);
    if (v.status == Status::Feasible) pass &= verify(m, v.assignment);
    agree += pass;
    feasible += expected.has_value();
  }
  std::printf("  %d/500 agree (%d feasible) in %.2fs\n", agree, feasible, since(t));
  return agree == 500 && since(t) < 60;
}

}  // namespace

int main() {
  report(1, counts(), "deleted-product cell counts");
  report(2, verdicts(), "verdicts");
  report(3, cyclic(), "cyclic cocycle equals moment-curve geometry");
  report(4, property_suite("fundamental", 600), "fundamental relation and symmetry");
  report(5, property_suite("bounds", 600), "point, index and multiplicity bounds");
  report(6, system(), "bipyramid embedding satisfies the full system");
  report(7, solver(), "solver agrees with brute force");
  std::printf("%s\n", failures ? "acceptance: FAILED" : "acceptance: all criteria passed");
  return failures ? 1 : 0;
}
