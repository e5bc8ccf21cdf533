#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "kampen/ilp.hpp"
#include "arith.hpp"

namespace kampen {

namespace {

struct LinRow {
  std::string name;
  std::vector<Term> terms;
  bool has_lo = false, has_hi = false;
  std::int64_t lo = 0, hi = 0;
  bool alive = true;

  bool equality() const { return has_lo && has_hi && lo == hi; }
};

enum class VarState { Active, Fixed, Eliminated };

class Presolver {
 public:
  explicit Presolver(const Model& m) : model_(m) {
    const auto n = m.variables().size();
    lo_.resize(n);
    hi_.resize(n);
    state_.assign(n, VarState::Active);
    occ_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      lo_[v] = m.variables()[v].lower;
      hi_[v] = m.variables()[v].upper;
    }
    // One-sided rows over the same terms are joined into a range so that the
    // gcd test sees both sides at once.
    std::map<std::vector<std::pair<std::size_t, std::int64_t>>, std::size_t> seen;
    for (const auto& r : m.rows()) {
      LinRow row{r.name, r.terms};
      std::sort(row.terms.begin(), row.terms.end(),
                [](const Term& a, const Term& b) { return a.var < b.var; });
      std::vector<std::pair<std::size_t, std::int64_t>> key;
      for (const auto& t : row.terms) key.emplace_back(t.var, t.coef);
      const bool lo = r.rel != Relation::LessEqual, hi = r.rel != Relation::GreaterEqual;
      if (const auto it = seen.find(key); it != seen.end()) {
        auto& old = rows_[it->second];
        if (old.name.ends_with("_lo") || old.name.ends_with("_hi")) old.name.resize(old.name.size() - 3);
        if (lo && (!old.has_lo || r.rhs > old.lo)) { old.has_lo = true; old.lo = r.rhs; }
        if (hi && (!old.has_hi || r.rhs < old.hi)) { old.has_hi = true; old.hi = r.rhs; }
        continue;
      }
      row.has_lo = lo;
      row.has_hi = hi;
      row.lo = row.hi = r.rhs;
      seen.emplace(std::move(key), rows_.size());
      add_row(std::move(row));
    }
  }

  Presolved run() {
    for (std::size_t v = 0; v < lo_.size(); ++v)
      if (lo_[v] > hi_[v]) return fail("empty domain of " + name(v));
    for (const auto& row : rows_)
      if (row.has_lo && row.has_hi && row.lo > row.hi)
        return fail("row " + row.name + " has an empty range");
    bool changed = true;
    while (changed && !out_.infeasible) {
      changed = false;
      changed |= propagate();
      if (out_.infeasible) break;
      changed |= substitute_fixed();
      changed |= normalize_rows();
      if (out_.infeasible) break;
      changed |= eliminate();
    }
    if (!out_.infeasible) drop_redundant();
    if (!out_.infeasible) assemble();
    return std::move(out_);
  }

 private:
  const std::string& name(std::size_t v) const { return model_.variables()[v].name; }

  Presolved fail(std::string reason) {
    out_.infeasible = true;
    out_.reason = std::move(reason);
    return std::move(out_);
  }

  void mark_infeasible(std::string reason) {
    if (out_.infeasible) return;
    out_.infeasible = true;
    out_.reason = std::move(reason);
  }

  void add_row(LinRow row) {
    const auto id = rows_.size();
    for (const auto& t : row.terms) occ_[t.var].insert(id);
    rows_.push_back(std::move(row));
  }

  void drop_row(std::size_t id) {
    for (const auto& t : rows_[id].terms) occ_[t.var].erase(id);
    rows_[id].alive = false;
    rows_[id].terms.clear();
    ++out_.stats.rows_dropped;
  }

  bool tighten(std::size_t v, std::int64_t lo, std::int64_t hi) {
    bool changed = false;
    if (lo > lo_[v]) { lo_[v] = lo; changed = true; }
    if (hi < hi_[v]) { hi_[v] = hi; changed = true; }
    if (lo_[v] > hi_[v]) mark_infeasible("empty domain of " + name(v));
    return changed;
  }

  // Activity bounds, then implied variable bounds; worklist to a fixed point.
  bool propagate() {
    bool any = false;
    std::vector<std::size_t> queue;
    std::vector<char> queued(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i].alive) { queue.push_back(i); queued[i] = 1; }
    while (!queue.empty() && !out_.infeasible) {
      const auto id = queue.back();
      queue.pop_back();
      queued[id] = 0;
      auto& row = rows_[id];
      if (!row.alive) continue;
      i128 minact = 0, maxact = 0;
      for (const auto& t : row.terms) {
        minact += t.coef > 0 ? i128(t.coef) * lo_[t.var] : i128(t.coef) * hi_[t.var];
        maxact += t.coef > 0 ? i128(t.coef) * hi_[t.var] : i128(t.coef) * lo_[t.var];
      }
      if ((row.has_hi && minact > row.hi) || (row.has_lo && maxact < row.lo)) {
        mark_infeasible("row " + row.name + " cannot be satisfied");
        break;
      }
      // Rows implied by the bounds stay until elimination is over: after
      // substitution they may still expose a gcd contradiction.
      if ((!row.has_lo || minact >= row.lo) && (!row.has_hi || maxact <= row.hi)) continue;
      for (const auto& t : row.terms) {
        const auto v = t.var;
        const i128 a = t.coef;
        i128 nlo = lo_[v], nhi = hi_[v];
        if (row.has_hi) {
          const i128 slack = i128(row.hi) - minact;
          if (a > 0) nhi = std::min(nhi, lo_[v] + floor_div(slack, a));
          else nlo = std::max(nlo, hi_[v] - floor_div(slack, -a));
        }
        if (row.has_lo) {
          const i128 slack = maxact - i128(row.lo);
          if (a > 0) nlo = std::max(nlo, hi_[v] - floor_div(slack, a));
          else nhi = std::min(nhi, lo_[v] + floor_div(slack, -a));
        }
        if (tighten(v, narrow(nlo), narrow(nhi))) {
          any = true;
          for (auto other : occ_[v])
            if (!queued[other]) { queued[other] = 1; queue.push_back(other); }
          break;  // activities are stale now; revisit this row
        }
        if (out_.infeasible) break;
      }
    }
    return any;
  }

  void drop_redundant() {
    for (std::size_t id = 0; id < rows_.size(); ++id) {
      const auto& row = rows_[id];
      if (!row.alive) continue;
      i128 minact = 0, maxact = 0;
      for (const auto& t : row.terms) {
        minact += t.coef > 0 ? i128(t.coef) * lo_[t.var] : i128(t.coef) * hi_[t.var];
        maxact += t.coef > 0 ? i128(t.coef) * hi_[t.var] : i128(t.coef) * lo_[t.var];
      }
      if ((!row.has_lo || minact >= row.lo) && (!row.has_hi || maxact <= row.hi)) drop_row(id);
    }
  }

  bool substitute_fixed() {
    bool any = false;
    for (std::size_t v = 0; v < lo_.size(); ++v) {
      if (state_[v] != VarState::Active || lo_[v] != hi_[v]) continue;
      const auto val = lo_[v];
      for (auto id : std::vector<std::size_t>(occ_[v].begin(), occ_[v].end())) {
        auto& row = rows_[id];
        auto it = std::find_if(row.terms.begin(), row.terms.end(),
                               [v](const Term& t) { return t.var == v; });
        const auto shift = checked_mul(it->coef, val);
        row.terms.erase(it);
        if (row.has_lo) row.lo = checked_sub(row.lo, shift);
        if (row.has_hi) row.hi = checked_sub(row.hi, shift);
      }
      occ_[v].clear();
      state_[v] = VarState::Fixed;
      out_.fixed.emplace_back(v, val);
      ++out_.stats.fixed;
      any = true;
    }
    return any;
  }

  bool normalize_rows() {
    bool any = false;
    for (std::size_t id = 0; id < rows_.size() && !out_.infeasible; ++id) {
      auto& row = rows_[id];
      if (!row.alive) continue;
      if (row.terms.empty()) {
        if ((row.has_lo && row.lo > 0) || (row.has_hi && row.hi < 0)) {
          mark_infeasible("row " + row.name + " reduces to a false constant");
          break;
        }
        drop_row(id);
        any = true;
        continue;
      }
      std::int64_t g = 0;
      for (const auto& t : row.terms) g = std::gcd(g, t.coef < 0 ? -t.coef : t.coef);
      if (g > 1) {
        for (auto& t : row.terms) t.coef /= g;
        if (row.has_lo) row.lo = static_cast<std::int64_t>(ceil_div(row.lo, g));
        if (row.has_hi) row.hi = static_cast<std::int64_t>(floor_div(row.hi, g));
        ++out_.stats.gcd_tightened;
        any = true;
        if (row.has_lo && row.has_hi && row.lo > row.hi) {
          mark_infeasible("row " + row.name + " has no integer solution (gcd " +
                          std::to_string(g) + ")");
          break;
        }
      }
      if (row.terms.size() == 1) {
        const auto v = row.terms[0].var;
        const auto a = row.terms[0].coef;
        std::int64_t nlo = lo_[v], nhi = hi_[v];
        // a is +-1 after gcd normalization.
        if (a > 0) {
          if (row.has_lo) nlo = std::max(nlo, row.lo);
          if (row.has_hi) nhi = std::min(nhi, row.hi);
        } else {
          if (row.has_hi) nlo = std::max(nlo, -row.hi);
          if (row.has_lo) nhi = std::min(nhi, -row.lo);
        }
        tighten(v, nlo, nhi);
        drop_row(id);
        any = true;
      }
    }
    return any;
  }

  // Picks the shortest equality row owning a +-1 coefficient and, inside it,
  // the unit variable with the fewest row memberships.
  bool pick_pivot(std::size_t& row_id, std::size_t& var) const {
    std::size_t best_len = SIZE_MAX;
    bool found = false;
    for (std::size_t id = 0; id < rows_.size(); ++id) {
      const auto& row = rows_[id];
      if (!row.alive || !row.equality() || row.terms.size() >= best_len) continue;
      std::size_t best_occ = SIZE_MAX, pv = 0;
      for (const auto& t : row.terms)
        if ((t.coef == 1 || t.coef == -1) && occ_[t.var].size() < best_occ) {
          best_occ = occ_[t.var].size();
          pv = t.var;
        }
      if (best_occ == SIZE_MAX) continue;
      best_len = row.terms.size();
      row_id = id;
      var = pv;
      found = true;
    }
    return found;
  }

  bool eliminate() {
    bool any = false;
    std::size_t pid = 0, p = 0;
    while (!out_.infeasible && pick_pivot(pid, p)) {
      LinRow pivot = rows_[pid];
      drop_row(pid);
      --out_.stats.rows_dropped;
      const auto pit = std::find_if(pivot.terms.begin(), pivot.terms.end(),
                                    [p](const Term& t) { return t.var == p; });
      const std::int64_t ap = pit->coef;
      pivot.terms.erase(pit);
      const std::int64_t rhs = pivot.lo;
      // x_p = ap * (rhs - sum pivot.terms)
      out_.eliminations.push_back({p, ap, rhs, pivot.terms});

      for (auto id : std::vector<std::size_t>(occ_[p].begin(), occ_[p].end())) {
        auto& row = rows_[id];
        auto it = std::find_if(row.terms.begin(), row.terms.end(),
                               [p](const Term& t) { return t.var == p; });
        const std::int64_t factor = checked_mul(it->coef, ap);
        row.terms.erase(it);
        for (const auto& t : pivot.terms)
          row.terms.push_back({t.var, checked_mul(-factor, t.coef)});
        const auto shift = checked_mul(factor, rhs);
        if (row.has_lo) row.lo = checked_sub(row.lo, shift);
        if (row.has_hi) row.hi = checked_sub(row.hi, shift);
        merge(id);
      }
      occ_[p].clear();
      state_[p] = VarState::Eliminated;
      ++out_.stats.eliminated;

      // The bounds of x_p become a row on the remaining terms.
      LinRow bound{"bnd_" + name(p), pivot.terms, true, true, 0, 0};
      if (ap == 1) {
        bound.lo = checked_sub(rhs, hi_[p]);
        bound.hi = checked_sub(rhs, lo_[p]);
      } else {
        bound.lo = checked_add(lo_[p], rhs);
        bound.hi = checked_add(hi_[p], rhs);
      }
      add_row(std::move(bound));
      any = true;
    }
    return any;
  }

  void merge(std::size_t id) {
    auto& row = rows_[id];
    for (const auto& t : row.terms) occ_[t.var].erase(id);
    std::sort(row.terms.begin(), row.terms.end(),
              [](const Term& a, const Term& b) { return a.var < b.var; });
    std::vector<Term> merged;
    for (const auto& t : row.terms) {
      if (!merged.empty() && merged.back().var == t.var)
        merged.back().coef = checked_add(merged.back().coef, t.coef);
      else
        merged.push_back(t);
      if (merged.back().coef == 0) merged.pop_back();
    }
    row.terms = std::move(merged);
    for (const auto& t : row.terms) occ_[t.var].insert(id);
  }

  void assemble() {
    std::vector<std::size_t> index(lo_.size(), SIZE_MAX);
    for (std::size_t v = 0; v < lo_.size(); ++v) {
      if (state_[v] != VarState::Active) continue;
      index[v] = out_.reduced.add_variable(name(v), lo_[v], hi_[v]);
      out_.kept.push_back(v);
    }
    for (const auto& row : rows_) {
      if (!row.alive) continue;
      std::vector<Term> t;
      for (const auto& x : row.terms) t.push_back({index[x.var], x.coef});
      if (row.equality())
        out_.reduced.add_row(row.name, std::move(t), Relation::Equal, row.lo);
      else if (row.has_lo && row.has_hi)
        out_.reduced.add_range(row.name, t, row.lo, row.hi);
      else if (row.has_lo)
        out_.reduced.add_row(row.name, std::move(t), Relation::GreaterEqual, row.lo);
      else if (row.has_hi)
        out_.reduced.add_row(row.name, std::move(t), Relation::LessEqual, row.hi);
    }
    out_.reduced.info = model_.info;
  }

  const Model& model_;
  std::vector<std::int64_t> lo_, hi_;
  std::vector<VarState> state_;
  std::vector<std::set<std::size_t>> occ_;
  std::vector<LinRow> rows_;
  Presolved out_;
};

}  // namespace

Presolved presolve(const Model& m) { return Presolver(m).run(); }

std::vector<std::int64_t> Presolved::expand(
    const std::vector<std::int64_t>& reduced_values, std::size_t original_size) const {
  std::vector<std::int64_t> vals(original_size, 0);
  for (std::size_t i = 0; i < kept.size(); ++i) vals[kept[i]] = reduced_values.at(i);
  for (const auto& [v, x] : fixed) vals[v] = x;
  for (auto it = eliminations.rbegin(); it != eliminations.rend(); ++it) {
    std::int64_t s = it->rhs;
    for (const auto& t : it->terms) s = checked_sub(s, checked_mul(t.coef, vals[t.var]));
    vals[it->var] = checked_mul(it->sign, s);
  }
  return vals;
}

}  // namespace kampen
