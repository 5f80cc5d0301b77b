#include "lva/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>

namespace lva {

namespace {

using Lit = int;  // 2 * var + (negated ? 1 : 0), var 0-based
inline int var(Lit l) { return l >> 1; }
inline Lit neg(Lit l) { return l ^ 1; }
inline Lit from_dimacs(int x) { return 2 * (std::abs(x) - 1) + (x < 0); }

constexpr int kUndef = -1;
constexpr std::uint32_t kNoReason = UINT32_MAX;

double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x %= size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

class Core {
 public:
  Core(const CnfFormula& f, const SolverOptions& opt) : opt_(opt), nv_(f.num_vars) {
    const auto n = static_cast<std::size_t>(nv_);
    value_.assign(n, kUndef);
    level_.assign(n, 0);
    reason_.assign(n, kNoReason);
    activity_.assign(n, 0.0);
    phase_.assign(n, 1);
    seen_.assign(n, 0);
    heap_pos_.assign(n, -1);
    watches_.resize(2 * n);
    for (int v = 0; v < nv_; ++v) heap_insert(v);
    start_ = std::chrono::steady_clock::now();
    for (const auto& c : f.clauses)
      if (!add_input(c)) {
        ok_ = false;
        break;
      }
  }

  bool run() {
    if (!ok_) return false;
    if (propagate() != kNoReason) return false;
    return opt_.strategy == Strategy::Cdcl ? cdcl() : dpll();
  }

  Assignment model() const {
    Assignment a(static_cast<std::size_t>(nv_) + 1, false);
    for (int v = 0; v < nv_; ++v) a[static_cast<std::size_t>(v) + 1] = value_[v] == 1;
    return a;
  }

  SolverStats stats;

 private:
  struct Watch {
    std::uint32_t cref;
    Lit blocker;
  };

  // Arena layout per clause: size, flags (bit0 learnt, bit1 deleted), lbd, lits.
  int size(std::uint32_t c) const { return arena_[c]; }
  Lit* lits(std::uint32_t c) { return arena_.data() + c + 3; }
  bool deleted(std::uint32_t c) const { return arena_[c + 1] & 2; }

  int lval(Lit l) const {
    int v = value_[var(l)];
    return v == kUndef ? kUndef : (v ^ (l & 1));
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  bool add_input(const std::vector<int>& raw) {
    std::vector<Lit> c;
    for (int x : raw) {
      if (x == 0 || std::abs(x) > nv_) throw std::invalid_argument("literal out of range in CNF");
      c.push_back(from_dimacs(x));
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] == neg(c[i - 1])) return true;  // tautology
    if (c.empty()) return false;
    if (c.size() == 1) {
      if (lval(c[0]) == 0) return false;
      if (lval(c[0]) == kUndef) enqueue(c[0], kNoReason);
      return true;
    }
    attach(c, false, 0);
    return true;
  }

  std::uint32_t attach(const std::vector<Lit>& c, bool learnt, int lbd) {
    const auto cref = static_cast<std::uint32_t>(arena_.size());
    arena_.push_back(static_cast<int>(c.size()));
    arena_.push_back(learnt ? 1 : 0);
    arena_.push_back(lbd);
    arena_.insert(arena_.end(), c.begin(), c.end());
    watches_[c[0]].push_back({cref, c[1]});
    watches_[c[1]].push_back({cref, c[0]});
    if (learnt) learnts_.push_back(cref);
    return cref;
  }

  void enqueue(Lit l, std::uint32_t why) {
    const int v = var(l);
    value_[v] = (l & 1) ? 0 : 1;
    level_[v] = decision_level();
    reason_[v] = why;
    trail_.push_back(l);
  }

  // Returns the conflicting clause or kNoReason.
  std::uint32_t propagate() {
    std::uint32_t conflict = kNoReason;
    while (qhead_ < trail_.size()) {
      const Lit p = trail_[qhead_++];
      const Lit false_lit = neg(p);
      auto& ws = watches_[false_lit];
      std::size_t i = 0, j = 0;
      ++stats.propagations;
      while (i < ws.size()) {
        Watch w = ws[i++];
        if (deleted(w.cref)) continue;
        if (lval(w.blocker) == 1) {
          ws[j++] = w;
          continue;
        }
        Lit* c = lits(w.cref);
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        const Lit first = c[0];
        if (first != w.blocker && lval(first) == 1) {
          ws[j++] = {w.cref, first};
          continue;
        }
        bool moved = false;
        const int sz = size(w.cref);
        for (int k = 2; k < sz; ++k)
          if (lval(c[k]) != 0) {
            std::swap(c[1], c[k]);
            watches_[c[1]].push_back({w.cref, first});
            moved = true;
            break;
          }
        if (moved) continue;
        ws[j++] = {w.cref, first};
        if (lval(first) == 0) {
          conflict = w.cref;
          qhead_ = trail_.size();
          while (i < ws.size()) ws[j++] = ws[i++];
        } else {
          enqueue(first, w.cref);
        }
      }
      ws.resize(j);
      if (conflict != kNoReason) break;
    }
    return conflict;
  }

  void backtrack(int lvl) {
    if (decision_level() <= lvl) return;
    for (std::size_t i = trail_.size(); i-- > static_cast<std::size_t>(trail_lim_[lvl]);) {
      const int v = var(trail_[i]);
      phase_[v] = static_cast<char>(trail_[i] & 1);
      value_[v] = kUndef;
      reason_[v] = kNoReason;
      if (heap_pos_[v] < 0) heap_insert(v);
    }
    trail_.resize(static_cast<std::size_t>(trail_lim_[lvl]));
    trail_lim_.resize(static_cast<std::size_t>(lvl));
    qhead_ = trail_.size();
  }

  void new_level() { trail_lim_.push_back(static_cast<int>(trail_.size())); }

  void check_budget() {
    if (opt_.conflict_budget >= 0 && stats.conflicts > opt_.conflict_budget)
      throw BudgetExceeded("conflict budget exceeded", stats);
    if (opt_.time_budget_seconds >= 0 && (stats.conflicts & 255) == 0) {
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > opt_.time_budget_seconds) throw BudgetExceeded("time budget exceeded", stats);
    }
  }

  // ---- VSIDS heap ----
  bool heap_less(int a, int b) const { return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b); }
  void heap_up(int i) {
    const int v = heap_[i];
    while (i > 0) {
      int p = (i - 1) / 2;
      if (!heap_less(v, heap_[p])) break;
      heap_[i] = heap_[p];
      heap_pos_[heap_[i]] = i;
      i = p;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
  }
  void heap_down(int i) {
    const int v = heap_[i];
    const int n = static_cast<int>(heap_.size());
    for (;;) {
      int c = 2 * i + 1;
      if (c >= n) break;
      if (c + 1 < n && heap_less(heap_[c + 1], heap_[c])) ++c;
      if (!heap_less(heap_[c], v)) break;
      heap_[i] = heap_[c];
      heap_pos_[heap_[i]] = i;
      i = c;
    }
    heap_[i] = v;
    heap_pos_[v] = i;
  }
  void heap_insert(int v) {
    heap_pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_pos_[v]);
  }
  int heap_pop() {
    const int top = heap_[0];
    heap_pos_[top] = -1;
    const int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_[0] = last;
      heap_pos_[last] = 0;
      heap_down(0);
    }
    return top;
  }
  void bump(int v) {
    if ((activity_[v] += var_inc_) > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    if (heap_pos_[v] >= 0) heap_up(heap_pos_[v]);
  }

  // ---- CDCL ----
  void analyze(std::uint32_t conflict, std::vector<Lit>& out, int& bt_level, int& lbd) {
    out.assign(1, 0);
    int path = 0;
    Lit p = -1;
    std::size_t idx = trail_.size();
    std::uint32_t cref = conflict;
    do {
      Lit* c = lits(cref);
      const int sz = size(cref);
      for (int k = (p == -1 ? 0 : 1); k < sz; ++k) {
        const int v = var(c[k]);
        if (seen_[v] || level_[v] == 0) continue;
        bump(v);
        seen_[v] = 1;
        if (level_[v] >= decision_level())
          ++path;
        else
          out.push_back(c[k]);
      }
      while (!seen_[var(trail_[--idx])]) {
      }
      p = trail_[idx];
      cref = reason_[var(p)];
      seen_[var(p)] = 0;
      --path;
    } while (path > 0);
    out[0] = neg(p);

    // Drop literals implied by the rest of the clause.
    std::vector<Lit> full(out);
    std::size_t j = 1;
    for (std::size_t i = 1; i < out.size(); ++i) {
      const std::uint32_t r = reason_[var(out[i])];
      bool keep = r == kNoReason;
      if (!keep) {
        Lit* c = lits(r);
        for (int k = 1; k < size(r); ++k)
          if (!seen_[var(c[k])] && level_[var(c[k])] > 0) {
            keep = true;
            break;
          }
      }
      if (keep) out[j++] = out[i];
    }
    out.resize(j);
    for (Lit l : full) seen_[var(l)] = 0;

    bt_level = 0;
    if (out.size() > 1) {
      std::size_t best = 1;
      for (std::size_t i = 2; i < out.size(); ++i)
        if (level_[var(out[i])] > level_[var(out[best])]) best = i;
      std::swap(out[1], out[best]);
      bt_level = level_[var(out[1])];
    }
    std::vector<int> levels;
    for (Lit l : out) levels.push_back(level_[var(l)]);
    std::sort(levels.begin(), levels.end());
    lbd = static_cast<int>(std::unique(levels.begin(), levels.end()) - levels.begin());
  }

  void reduce_db() {
    std::vector<std::uint32_t> keep, cand;
    for (auto c : learnts_) {
      if (deleted(c)) continue;
      const int v = var(lits(c)[0]);
      const bool locked = reason_[v] == c && value_[v] != kUndef;
      if (locked || arena_[c + 2] <= 2)
        keep.push_back(c);
      else
        cand.push_back(c);
    }
    std::stable_sort(cand.begin(), cand.end(), [&](auto a, auto b) { return arena_[a + 2] < arena_[b + 2]; });
    const std::size_t half = cand.size() / 2;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (i < half)
        keep.push_back(cand[i]);
      else
        arena_[cand[i] + 1] |= 2;
    }
    learnts_ = std::move(keep);
  }

  bool cdcl() {
    std::vector<Lit> learnt;
    int restart_no = 0;
    long long next_reduce = 2000;
    for (;;) {
      const long long limit = static_cast<long long>(luby(2, restart_no) * 100);
      long long local = 0;
      for (;;) {
        const std::uint32_t conflict = propagate();
        if (conflict != kNoReason) {
          ++stats.conflicts;
          ++local;
          check_budget();
          if (decision_level() == 0) return false;
          int bt, lbd;
          analyze(conflict, learnt, bt, lbd);
          backtrack(bt);
          if (learnt.size() == 1) {
            enqueue(learnt[0], kNoReason);
          } else {
            enqueue(learnt[0], attach(learnt, true, lbd));
            ++stats.learnts;
          }
          var_inc_ /= 0.95;
          if (stats.conflicts >= next_reduce) {
            reduce_db();
            next_reduce = stats.conflicts + 2000 + 300 * (++reductions_);
          }
          continue;
        }
        if (local >= limit) {
          backtrack(0);
          ++stats.restarts;
          ++restart_no;
          break;
        }
        int v = -1;
        while (!heap_.empty()) {
          int c = heap_pop();
          if (value_[c] == kUndef) {
            v = c;
            break;
          }
        }
        if (v < 0) return true;
        ++stats.decisions;
        new_level();
        enqueue(2 * v + phase_[v], kNoReason);
      }
    }
  }

  // ---- DPLL ----
  bool pure_literals() {
    for (;;) {
      std::vector<char> pos(static_cast<std::size_t>(nv_), 0), ng(static_cast<std::size_t>(nv_), 0);
      for (std::uint32_t c = 0; c < arena_.size(); c += 3 + static_cast<std::uint32_t>(size(c))) {
        Lit* l = lits(c);
        bool sat = false;
        for (int k = 0; k < size(c) && !sat; ++k) sat = lval(l[k]) == 1;
        if (sat) continue;
        for (int k = 0; k < size(c); ++k)
          if (lval(l[k]) == kUndef) ((l[k] & 1) ? ng : pos)[var(l[k])] = 1;
      }
      bool any = false;
      for (int v = 0; v < nv_; ++v)
        if (value_[v] == kUndef && pos[v] != ng[v]) {
          enqueue(2 * v + (ng[v] ? 1 : 0), kNoReason);
          any = true;
        }
      if (!any) return true;
      if (propagate() != kNoReason) return false;
    }
  }

  bool dpll() {
    if (!pure_literals()) return false;
    std::vector<char> flipped;
    int next_var = 0;
    for (;;) {
      if (propagate() != kNoReason) {
        ++stats.conflicts;
        check_budget();
        // Undo to the deepest decision not yet tried both ways.
        while (!flipped.empty() && flipped.back()) {
          flipped.pop_back();
          backtrack(decision_level() - 1);
        }
        if (flipped.empty()) return false;
        const Lit d = trail_[static_cast<std::size_t>(trail_lim_.back())];
        backtrack(decision_level() - 1);
        flipped.back() = 1;
        new_level();
        enqueue(neg(d), kNoReason);
        next_var = 0;
        continue;
      }
      while (next_var < nv_ && value_[next_var] != kUndef) ++next_var;
      if (next_var == nv_) return true;
      ++stats.decisions;
      new_level();
      flipped.push_back(0);
      enqueue(2 * next_var + 1, kNoReason);
    }
  }

  const SolverOptions& opt_;
  int nv_;
  bool ok_ = true;
  std::vector<int> arena_;
  std::vector<std::uint32_t> learnts_;
  std::vector<std::vector<Watch>> watches_;
  std::vector<int> value_, level_;
  std::vector<std::uint32_t> reason_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<double> activity_;
  double var_inc_ = 1;
  std::vector<char> phase_, seen_;
  std::vector<int> heap_, heap_pos_;
  int reductions_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SatOutcome solve(const CnfFormula& f, const SolverOptions& options) {
  if (f.num_vars < 0) throw std::invalid_argument("negative variable count");
  Core core(f, options);
  SatOutcome out;
  const bool sat = core.run();
  out.stats = core.stats;
  if (!sat) return out;
  out.status = SatStatus::Satisfiable;
  out.model = core.model();
  if (!satisfies(f, out.model)) throw std::logic_error("solver produced a model that violates the formula");
  return out;
}

}  // namespace lva
