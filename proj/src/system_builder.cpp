#include "kampen/system_builder.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "kampen/cyclic.hpp"

namespace kampen {

Preset parse_preset(std::string_view name) {
  if (name == "full") return Preset::Full;
  if (name == "novik") return Preset::Novik;
  if (name == "minimal") return Preset::Minimal;
  if (name == "sub_y") return Preset::SubY;
  if (name == "sub_subsets") return Preset::SubSubsets;
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

std::string to_string(Preset p) {
  switch (p) {
    case Preset::Full: return "full";
    case Preset::Novik: return "novik";
    case Preset::Minimal: return "minimal";
    case Preset::SubY: return "sub_y";
    case Preset::SubSubsets: return "sub_subsets";
  }
  return "?";
}

SubsetPolicy parse_subset_policy(std::string_view name) {
  if (name == "pairs") return SubsetPolicy::Pairs;
  if (name == "singletons") return SubsetPolicy::Singletons;
  if (name == "all") return SubsetPolicy::All;
  throw std::invalid_argument("unknown subset policy '" + std::string(name) + "'");
}

std::string to_string(SubsetPolicy p) {
  switch (p) {
    case SubsetPolicy::Pairs: return "pairs";
    case SubsetPolicy::Singletons: return "singletons";
    case SubsetPolicy::All: return "all";
  }
  return "?";
}

int ell(const Simplex& j, int k) {
  int n = 0;
  for (std::size_t i = 1; i < j.size(); ++i)
    if (j[i] >= 1 && j[i] <= k) ++n;
  return n;
}

int shuffle_sign(const Simplex& plus, const Simplex& minus) {
  if (plus.empty() || minus.empty() || !plus.disjoint(minus) ||
      minus.front() < plus.front())
    throw std::invalid_argument("shuffle_sign: need disjoint blocks, min in plus");
  int inversions = 0;
  for (Vertex a : plus)
    for (Vertex b : minus)
      if (a > b) ++inversions;
  return inversions % 2 ? -1 : 1;
}

PartitionFamily partition_family(const Simplex& j) {
  if (j.size() < 2) throw std::invalid_argument("partition family needs |J| >= 2");
  PartitionFamily fam{j, {}};
  const std::size_t rest = j.size() - 1;
  for (unsigned mask = 0; mask + 1 < (1u << rest); ++mask) {
    std::vector<Vertex> plus{j[0]}, minus;
    for (std::size_t i = 0; i < rest; ++i)
      (mask & (1u << i) ? plus : minus).push_back(j[i + 1]);
    fam.pairs.emplace_back(Simplex(plus), Simplex(minus));
  }
  std::sort(fam.pairs.begin(), fam.pairs.end());
  return fam;
}

std::string lambda_name(const Cell& c) { return "l_" + c.encode(); }

namespace {

std::int64_t ceil_half(std::int64_t r) { return (r + 1) / 2; }
std::int64_t floor_half(std::int64_t r) { return r / 2; }

struct Ref {
  std::size_t var;
  int sign;
};

class Builder {
 public:
  Builder(const SimplicialComplex& k, int m, const SystemConfig& cfg)
      : k_(k), m_(m), cfg_(cfg),
        universe_(cfg.preset == Preset::Full
                      ? SimplicialComplex::skeleton(k.num_vertices(), m)
                      : k) {}

  Model run() {
    model_.info = {k_.name(), to_string(cfg_.preset), m_, cfg_.symmetry_reduction,
                   0, 0, 0};
    declare_lambda();
    if (!cfg_.symmetry_reduction) symmetry_rows();
    switch (cfg_.preset) {
      case Preset::Full:
        deformation_rows();
        intersection_rows();
        linking_rows();
        break;
      case Preset::Novik:
        break;
      case Preset::Minimal:
        linking_rows();
        break;
      case Preset::SubY:
      case Preset::SubSubsets:
        deformation_rows();
        linking_rows();
        break;
    }
    coboundary_rows();
    model_.info.auxiliary_variables =
        model_.variables().size() - model_.info.lambda_variables;
    return std::move(model_);
  }

 private:
  // Bounds of lambda on a canonical cell (min J in the first factor).
  std::pair<std::int64_t, std::int64_t> canonical_bounds(const Cell& rep) const {
    if (cfg_.preset == Preset::Novik) {
      const std::int64_t h = ceil_half(m_);
      return {-h, h};
    }
    const std::int64_t r = m_ - ell(rep.support(), m_);
    const std::int64_t lo = -ceil_half(r), hi = floor_half(r);
    if (shuffle_sign(rep.first, rep.second) > 0) return {lo, hi};
    return {-hi, -lo};
  }

  void declare_lambda() {
    const auto all = cells(universe_, m_ - 1);
    model_.info.lambda_cells = all.size();
    for (const auto& c : all) {
      auto [rep, s] = canonicalize(c);
      if (s == 1 && rep == c) {
        auto [lo, hi] = canonical_bounds(c);
        refs_[c] = {model_.add_variable(lambda_name(c), lo, hi), 1};
        families_[c.support()].push_back(c);
      }
    }
    for (const auto& c : all) {
      if (refs_.count(c)) continue;
      auto [rep, s] = canonicalize(c);
      if (cfg_.symmetry_reduction) {
        refs_[c] = {refs_.at(rep).var, s};
      } else {
        auto [lo, hi] = canonical_bounds(rep);
        if (s < 0) std::tie(lo, hi) = std::pair(-hi, -lo);
        refs_[c] = {model_.add_variable(lambda_name(c), lo, hi), 1};
      }
    }
    model_.info.lambda_variables = model_.variables().size();
  }

  void add(std::vector<Term>& terms, const Cell& c, std::int64_t coef) const {
    const auto it = refs_.find(c);
    if (it == refs_.end())
      throw std::logic_error("no variable for cell " + c.encode());
    terms.push_back({it->second.var, coef * it->second.sign});
  }

  void symmetry_rows() {
    for (const auto& [c, ref] : refs_) {
      auto [rep, s] = canonicalize(c);
      if (rep == c) continue;
      std::vector<Term> t{{ref.var, 1}};
      add(t, rep, -s);
      model_.add_row("sym_" + c.encode(), std::move(t), Relation::Equal, 0);
    }
  }

  // sum |x_i| <= r over the given terms (each a single +-1 variable term).
  void abs_sum_row(const std::string& tag, const std::vector<Term>& xs,
                   const std::vector<std::string>& aux_names, std::int64_t r) {
    if (cfg_.abs_encoding == AbsEncoding::SignPatterns) {
      const std::size_t n = xs.size();
      for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<Term> t;
        for (std::size_t i = 0; i < n; ++i)
          t.push_back({xs[i].var, mask & (1ul << i) ? -xs[i].coef : xs[i].coef});
        model_.add_row("pts_" + tag + "_" + std::to_string(mask), std::move(t),
                       Relation::LessEqual, r);
      }
      return;
    }
    std::vector<Term> total;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto a = model_.add_variable("a_" + aux_names[i], 0, ceil_half(m_));
      model_.add_row("ap_" + aux_names[i], {{a, 1}, {xs[i].var, -xs[i].coef}},
                     Relation::GreaterEqual, 0);
      model_.add_row("an_" + aux_names[i], {{a, 1}, {xs[i].var, xs[i].coef}},
                     Relation::GreaterEqual, 0);
      total.push_back({a, 1});
    }
    model_.add_row("pts_" + tag, std::move(total), Relation::LessEqual, r);
  }

  void deformation_rows() {
    for (const auto& [j, fam] : families_) {
      const std::int64_t r = m_ - ell(j, m_);
      const std::string tag = j.encode();
      std::vector<Term> xs, signed_sum;
      std::vector<std::string> names;
      for (const auto& c : fam) {
        add(xs, c, 1);
        names.push_back(c.encode());
        add(signed_sum, c, shuffle_sign(c.first, c.second));
      }
      switch (cfg_.preset) {
        case Preset::Full:
          abs_sum_row(tag, xs, names, r);
          model_.add_range("idx_" + tag, signed_sum, -1, 0);
          break;
        case Preset::SubY: {
          const auto y = model_.add_variable("y_" + tag, -ceil_half(r), floor_half(r));
          xs.push_back({y, 1});
          names.push_back("y_" + tag);
          abs_sum_row(tag, xs, names, r);
          signed_sum.push_back({y, 1});
          model_.add_range("idx_" + tag, signed_sum, -1, 0);
          break;
        }
        case Preset::SubSubsets:
          subset_rows(tag, signed_sum, r);
          abs_sum_row(tag, xs, names, r);
          break;
        default:
          break;
      }
    }
  }

  void subset_rows(const std::string& tag, const std::vector<Term>& signed_terms,
                   std::int64_t r) {
    const std::size_t n = signed_terms.size();
    std::vector<unsigned long> masks;
    const unsigned long whole = (1ul << n) - 1;
    if (cfg_.subset_policy == SubsetPolicy::All) {
      for (unsigned long s = 1; s <= whole; ++s) masks.push_back(s);
    } else {
      for (std::size_t i = 0; i < n; ++i) masks.push_back(1ul << i);
      if (cfg_.subset_policy == SubsetPolicy::Pairs)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = i + 1; k < n; ++k)
            masks.push_back((1ul << i) | (1ul << k));
      if (n > 2 || (n == 2 && cfg_.subset_policy == SubsetPolicy::Singletons))
        masks.push_back(whole);
    }
    for (auto s : masks) {
      std::vector<Term> t;
      for (std::size_t i = 0; i < n; ++i)
        if (s & (1ul << i)) t.push_back(signed_terms[i]);
      model_.add_range("sub_" + tag + "_" + std::to_string(s), t, -ceil_half(r),
                       floor_half(r));
    }
  }

  void intersection_rows() {
    for (const auto& c : cells(universe_, m_)) {
      std::vector<Term> t;
      for (const auto& f : coboundary_row(c)) add(t, f.cell, f.coef);
      const std::int64_t centre = -phi_c(c, m_);
      model_.add_range("int_" + c.encode(), t, centre - 1, centre + 1);
    }
  }

  // sigma and tau range over the whole simplex: only their boundary cells
  // carry variables, so a row is kept whenever all of those do.
  void linking_rows() {
    const auto full = SimplicialComplex::skeleton(k_.num_vertices(), std::max(m_ - 1, 2));
    for (const auto& sigma : full.faces(m_ - 1))
      for (const auto& tau : full.faces(2)) {
        if (!sigma.disjoint(tau)) continue;
        bool known = true;
        for (const auto& [si, a] : boundary(sigma))
          for (const auto& [tj, b] : boundary(tau)) known = known && refs_.count(Cell(si, tj));
        if (!known) continue;
        std::vector<Term> t;
        for (const auto& [si, a] : boundary(sigma))
          for (const auto& [tj, b] : boundary(tau)) add(t, Cell(si, tj), a * b);
        std::int64_t phi = 0;
        for (const auto& [tj, b] : boundary(tau)) phi += b * phi_c(Cell(sigma, tj), m_);
        model_.add_range("lnk_" + Cell(sigma, tau).encode(), t, -phi - 1, -phi + 1);
      }
  }

  void coboundary_rows() {
    for (const auto& c : cells(k_, m_)) {
      std::vector<Term> t;
      for (const auto& f : coboundary_row(c)) add(t, f.cell, f.coef);
      model_.add_row("cob_" + c.encode(), std::move(t), Relation::Equal, -phi_c(c, m_));
    }
  }

  const SimplicialComplex& k_;
  int m_;
  SystemConfig cfg_;
  SimplicialComplex universe_;
  Model model_;
  std::map<Cell, Ref> refs_;
  std::map<Simplex, std::vector<Cell>> families_;
};

}  // namespace

Model build(const SimplicialComplex& k, int m, const SystemConfig& cfg) {
  if (m < 2) throw std::invalid_argument("build: m must be at least 2");
  if (k.num_vertices() < m + 2)
    throw std::invalid_argument("build: complex needs at least m+2 vertices");
  if (k.dimension() > m)
    throw std::invalid_argument("build: complex dimension exceeds m");
  return Builder(k, m, cfg).run();
}

}  // namespace kampen
