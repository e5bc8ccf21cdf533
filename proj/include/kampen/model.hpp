#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace kampen {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Variable {
  std::string name;
  std::int64_t lower;
  std::int64_t upper;
};

struct Term {
  std::size_t var;
  std::int64_t coef;
};

struct Row {
  std::string name;
  std::vector<Term> terms;
  Relation rel;
  std::int64_t rhs;
};

// Descriptive counters carried along for reports.
struct ModelInfo {
  std::string complex;
  std::string preset;
  int m = 0;
  bool symmetry_reduction = true;
  std::size_t lambda_cells = 0;      // (m-1)-cells the cochain lives on
  std::size_t lambda_variables = 0;  // after identification of symmetric cells
  std::size_t auxiliary_variables = 0;
};

// Integer feasibility model: bounded integer variables and linear rows.
class Model {
 public:
  std::size_t add_variable(std::string name, std::int64_t lower, std::int64_t upper);
  // Merges repeated variables and drops zero coefficients.
  void add_row(std::string name, std::vector<Term> terms, Relation rel,
               std::int64_t rhs);
  // lo <= terms <= hi as one equality row or two inequality rows.
  void add_range(const std::string& name, const std::vector<Term>& terms,
                 std::int64_t lo, std::int64_t hi);

  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Row>& rows() const { return rows_; }
  // Rows with each two-sided range counted once.
  std::size_t constraints() const { return rows_.size() - ranges_; }
  std::optional<std::size_t> find(const std::string& name) const;
  void set_bounds(std::size_t var, std::int64_t lower, std::int64_t upper);

  ModelInfo info;

 private:
  std::vector<Variable> vars_;
  std::vector<Row> rows_;
  std::size_t ranges_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

// Values keyed by variable name.
using Assignment = std::map<std::string, std::int64_t>;

}  // namespace kampen
