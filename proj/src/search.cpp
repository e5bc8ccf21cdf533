#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kampen/ilp.hpp"
#include "arith.hpp"

namespace kampen {

std::string to_string(Status s) {
  switch (s) {
    case Status::Feasible: return "feasible";
    case Status::Infeasible: return "infeasible";
    case Status::Timeout: return "timeout";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct RangeRow {
  std::vector<Term> terms;
  bool has_lo, has_hi;
  std::int64_t lo, hi;
};

// Immutable view of a model shared by all workers.
struct Problem {
  std::vector<RangeRow> rows;
  std::vector<std::vector<std::size_t>> occ;
  std::vector<std::int64_t> lo, hi;

  explicit Problem(const Model& m) {
    const auto n = m.variables().size();
    occ.resize(n);
    for (const auto& v : m.variables()) {
      lo.push_back(v.lower);
      hi.push_back(v.upper);
    }
    for (const auto& r : m.rows()) {
      for (const auto& t : r.terms) occ[t.var].push_back(rows.size());
      rows.push_back({r.terms, r.rel != Relation::LessEqual,
                      r.rel != Relation::GreaterEqual, r.rhs, r.rhs});
    }
  }
};

struct Control {
  Clock::time_point deadline;
  bool has_deadline = false;
  std::uint64_t node_limit = 0;
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> nodes{0};
};

// Candidate values of [lo, hi] ordered 0, 1, -1, 2, -2, ...
std::vector<std::int64_t> value_order(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  std::stable_sort(out.begin(), out.end(), [](std::int64_t a, std::int64_t b) {
    const auto ma = a < 0 ? -a : a, mb = b < 0 ? -b : b;
    if (ma != mb) return ma < mb;
    return a > b;
  });
  return out;
}

class Searcher {
 public:
  Searcher(const Problem& p, Control& ctl) : p_(p), ctl_(ctl), lo_(p.lo), hi_(p.hi) {
    queued_.assign(p.rows.size(), 0);
  }

  // Propagates every row once; false on conflict.
  bool root() {
    for (std::size_t i = 0; i < p_.rows.size(); ++i) enqueue(i);
    return propagate();
  }

  Status run() { return dfs(); }

  // Fixes var to value, then searches; used for split roots.
  Status run_with(std::size_t var, std::int64_t value) {
    if (!assign(var, value)) return Status::Infeasible;
    return dfs();
  }

  int pick() const {
    int best = -1;
    std::int64_t best_size = 0;
    std::size_t best_occ = 0;
    for (std::size_t v = 0; v < lo_.size(); ++v) {
      const auto size = hi_[v] - lo_[v];
      if (size == 0) continue;
      if (best < 0 || size < best_size ||
          (size == best_size && p_.occ[v].size() > best_occ)) {
        best = static_cast<int>(v);
        best_size = size;
        best_occ = p_.occ[v].size();
      }
    }
    return best;
  }

  const std::vector<std::int64_t>& values() const { return lo_; }
  std::int64_t lo(std::size_t v) const { return lo_[v]; }
  std::int64_t hi(std::size_t v) const { return hi_[v]; }

 private:
  struct Change {
    std::size_t var;
    std::int64_t lo, hi;
  };

  void enqueue(std::size_t row) {
    if (!queued_[row]) {
      queued_[row] = 1;
      queue_.push_back(row);
    }
  }

  bool set(std::size_t v, std::int64_t lo, std::int64_t hi) {
    if (lo <= lo_[v] && hi >= hi_[v]) return true;
    trail_.push_back({v, lo_[v], hi_[v]});
    lo_[v] = std::max(lo, lo_[v]);
    hi_[v] = std::min(hi, hi_[v]);
    if (lo_[v] > hi_[v]) return false;
    for (auto r : p_.occ[v]) enqueue(r);
    return true;
  }

  bool propagate() {
    bool ok = true;
    while (!queue_.empty()) {
      const auto id = queue_.back();
      queue_.pop_back();
      queued_[id] = 0;
      if (!ok) continue;
      const auto& row = p_.rows[id];
      i128 minact = 0, maxact = 0;
      for (const auto& t : row.terms) {
        minact += t.coef > 0 ? i128(t.coef) * lo_[t.var] : i128(t.coef) * hi_[t.var];
        maxact += t.coef > 0 ? i128(t.coef) * hi_[t.var] : i128(t.coef) * lo_[t.var];
      }
      if ((row.has_hi && minact > row.hi) || (row.has_lo && maxact < row.lo)) {
        ok = false;
        continue;
      }
      for (const auto& t : row.terms) {
        const auto v = t.var;
        if (lo_[v] == hi_[v]) continue;
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
        if (nlo > lo_[v] || nhi < hi_[v]) {
          if (!set(v, static_cast<std::int64_t>(nlo), static_cast<std::int64_t>(nhi))) {
            ok = false;
            break;
          }
          enqueue(id);  // activities changed; revisit
          break;
        }
      }
    }
    return ok;
  }

  bool assign(std::size_t v, std::int64_t value) {
    if (!set(v, value, value)) {
      queue_.clear();
      std::fill(queued_.begin(), queued_.end(), 0);
      return false;
    }
    return propagate();
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto& c = trail_.back();
      lo_[c.var] = c.lo;
      hi_[c.var] = c.hi;
      trail_.pop_back();
    }
  }

  bool out_of_budget() {
    const auto n = ++ctl_.nodes;
    if (ctl_.node_limit && n > ctl_.node_limit) return true;
    if (ctl_.has_deadline && (n & 255) == 0 && Clock::now() > ctl_.deadline) return true;
    return false;
  }

  Status dfs() {
    if (ctl_.stop.load(std::memory_order_relaxed)) return Status::Timeout;
    const int v = pick();
    if (v < 0) return Status::Feasible;
    for (const auto value : value_order(lo_[v], hi_[v])) {
      if (out_of_budget()) {
        ctl_.stop = true;
        return Status::Timeout;
      }
      const auto mark = trail_.size();
      if (assign(v, value)) {
        const auto s = dfs();
        if (s != Status::Infeasible) return s;
      }
      undo(mark);
    }
    return Status::Infeasible;
  }

  const Problem& p_;
  Control& ctl_;
  std::vector<std::int64_t> lo_, hi_;
  std::vector<Change> trail_;
  std::vector<std::size_t> queue_;
  std::vector<char> queued_;
};

void arm(Control& ctl, const Limits& limits) {
  if (limits.time_seconds > 0) {
    ctl.has_deadline = true;
    ctl.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(limits.time_seconds));
  }
  ctl.node_limit = limits.node_limit;
}

bool rows_hold(const Model& m, const std::vector<std::int64_t>& x) {
  for (const auto& r : m.rows()) {
    i128 s = 0;
    for (const auto& t : r.terms) s += i128(t.coef) * x[t.var];
    const bool ok = r.rel == Relation::Equal ? s == r.rhs
                    : r.rel == Relation::LessEqual ? s <= r.rhs
                                                   : s >= r.rhs;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

Status search(const Model& m, const Limits& limits, std::vector<std::int64_t>& values,
              std::uint64_t& nodes) {
  const Problem p(m);
  Control ctl;
  arm(ctl, limits);
  Searcher root(p, ctl);
  Status status;
  if (!root.root()) {
    status = Status::Infeasible;
  } else if (limits.workers <= 1) {
    status = root.run();
    if (status == Status::Feasible) values = root.values();
  } else {
    const int v = root.pick();
    if (v < 0) {
      status = Status::Feasible;
      values = root.values();
    } else {
      // Split the root disjunction; each worker owns a copy of the root state.
      const auto choices = value_order(root.lo(v), root.hi(v));
      const int n = static_cast<int>(choices.size());
      std::vector<Status> results(n, Status::Infeasible);
      std::vector<std::vector<std::int64_t>> found(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(limits.workers)
      for (int i = 0; i < n; ++i) {
        if (ctl.stop.load()) {
          results[i] = Status::Timeout;
          continue;
        }
        Searcher w = root;
        results[i] = w.run_with(static_cast<std::size_t>(v), choices[i]);
        if (results[i] == Status::Feasible) {
          found[i] = w.values();
          ctl.stop = true;
        }
      }
      status = Status::Infeasible;
      for (int i = 0; i < n; ++i) {
        if (results[i] == Status::Feasible) {
          status = Status::Feasible;
          values = found[i];
          break;
        }
        if (results[i] == Status::Timeout) status = Status::Timeout;
      }
    }
  }
  nodes = ctl.nodes;
  if (status == Status::Feasible && !rows_hold(m, values))
    throw std::logic_error("search returned an assignment violating a row");
  return status;
}

Assignment to_assignment(const Model& m, const std::vector<std::int64_t>& values) {
  Assignment a;
  for (std::size_t i = 0; i < m.variables().size(); ++i)
    a[m.variables()[i].name] = values.at(i);
  return a;
}

Verdict solve(const Model& m, const Limits& limits) {
  const auto start = Clock::now();
  Verdict out;
  std::vector<std::int64_t> values;
  if (limits.use_presolve) {
    const auto pre = presolve(m);
    out.stats.presolve = pre.stats;
    if (pre.infeasible) {
      out.status = Status::Infeasible;
      out.stats.infeasibility_reason = pre.reason;
    } else {
      out.stats.reduced_variables = pre.reduced.variables().size();
      out.stats.reduced_rows = pre.reduced.rows().size();
      Limits rest = limits;
      if (limits.time_seconds > 0) {
        const double used = std::chrono::duration<double>(Clock::now() - start).count();
        rest.time_seconds = std::max(1e-3, limits.time_seconds - used);
      }
      std::vector<std::int64_t> reduced;
      out.status = search(pre.reduced, rest, reduced, out.stats.nodes);
      if (out.status == Status::Feasible) values = pre.expand(reduced, m.variables().size());
    }
  } else {
    out.status = search(m, limits, values, out.stats.nodes);
  }
  if (out.status == Status::Feasible) {
    out.assignment = to_assignment(m, values);
    if (!verify(m, out.assignment))
      throw std::logic_error("solver produced an assignment that fails verification");
  }
  out.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

bool verify(const Model& m, const Assignment& a) {
  std::vector<std::int64_t> x(m.variables().size(), 0);
  std::vector<char> seen(x.size(), 0);
  for (const auto& [name, value] : a) {
    const auto idx = m.find(name);
    if (!idx) throw UnknownVariable("unknown variable '" + name + "'");
    x[*idx] = value;
    seen[*idx] = 1;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!seen[i]) return false;
    const auto& v = m.variables()[i];
    if (x[i] < v.lower || x[i] > v.upper) return false;
  }
  return rows_hold(m, x);
}

}  // namespace kampen
