#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kampen/model.hpp"

namespace kampen {

class UnknownVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when exact integer arithmetic would leave the int64 range.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// CPLEX LP text: zero objective, constraints, bounds, all variables general.
std::string export_lp(const Model& m);

// One eliminated variable: x = sign * (rhs - sum terms), with sign = +-1.
struct Elimination {
  std::size_t var;
  std::int64_t sign;
  std::int64_t rhs;
  std::vector<Term> terms;  // indices into the original model
};

struct PresolveStats {
  std::size_t eliminated = 0;
  std::size_t fixed = 0;
  std::size_t rows_dropped = 0;
  std::size_t gcd_tightened = 0;
};

struct Presolved {
  bool infeasible = false;
  std::string reason;
  Model reduced;
  // reduced variable i is original variable kept[i]
  std::vector<std::size_t> kept;
  std::vector<std::pair<std::size_t, std::int64_t>> fixed;
  std::vector<Elimination> eliminations;
  PresolveStats stats;

  // Completes values of the reduced model to values of the original one.
  std::vector<std::int64_t> expand(const std::vector<std::int64_t>& reduced_values,
                                   std::size_t original_size) const;
};

// Unit-pivot integer elimination of equality rows, gcd normalization and
// interval propagation to a fixed point.
Presolved presolve(const Model& m);

struct Limits {
  double time_seconds = 0;   // 0 = unlimited
  std::uint64_t node_limit = 0;  // 0 = unlimited
  int workers = 1;
  bool use_presolve = true;
};

enum class Status { Feasible, Infeasible, Timeout };
std::string to_string(Status s);

struct SolveStats {
  std::uint64_t nodes = 0;
  double seconds = 0;
  PresolveStats presolve;
  std::size_t reduced_variables = 0;
  std::size_t reduced_rows = 0;
  std::string infeasibility_reason;
};

struct Verdict {
  Status status = Status::Timeout;
  Assignment assignment;  // filled for Feasible
  SolveStats stats;
};

Verdict solve(const Model& m, const Limits& limits = {});

// Depth-first search without presolve on the given model; values by index.
// Exposed for tests that compare the search against presolve + search.
Status search(const Model& m, const Limits& limits, std::vector<std::int64_t>& values,
              std::uint64_t& nodes);

// True iff every variable is assigned within its bounds and every row holds.
// Throws UnknownVariable for names not in the model.
bool verify(const Model& m, const Assignment& a);

Assignment to_assignment(const Model& m, const std::vector<std::int64_t>& values);

}  // namespace kampen
