#include "kampen/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace kampen {

std::size_t Model::add_variable(std::string name, std::int64_t lower,
                                std::int64_t upper) {
  if (lower > upper)
    throw std::invalid_argument("variable " + name + " has empty bounds");
  if (index_.count(name)) throw std::invalid_argument("duplicate variable " + name);
  index_.emplace(name, vars_.size());
  vars_.push_back({std::move(name), lower, upper});
  return vars_.size() - 1;
}

void Model::add_row(std::string name, std::vector<Term> terms, Relation rel,
                    std::int64_t rhs) {
  for (const auto& t : terms)
    if (t.var >= vars_.size())
      throw std::invalid_argument("row " + name + " references an undeclared variable");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().var == t.var)
      merged.back().coef += t.coef;
    else
      merged.push_back(t);
    if (merged.back().coef == 0) merged.pop_back();
  }
  rows_.push_back({std::move(name), std::move(merged), rel, rhs});
}

void Model::add_range(const std::string& name, const std::vector<Term>& terms,
                      std::int64_t lo, std::int64_t hi) {
  if (lo == hi) {
    add_row(name, terms, Relation::Equal, lo);
    return;
  }
  add_row(name + "_lo", terms, Relation::GreaterEqual, lo);
  add_row(name + "_hi", terms, Relation::LessEqual, hi);
  ++ranges_;
}

std::optional<std::size_t> Model::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Model::set_bounds(std::size_t var, std::int64_t lower, std::int64_t upper) {
  if (lower > upper) throw std::invalid_argument("empty bounds");
  vars_.at(var).lower = lower;
  vars_.at(var).upper = upper;
}

}  // namespace kampen
