#pragma once

#include <stdexcept>

#include "lva/encode.hpp"

namespace lva {

enum class SatStatus { Satisfiable, Unsatisfiable };

enum class Strategy {
  Cdcl,  // 1UIP learning, VSIDS, Luby restarts, phase saving
  Dpll,  // chronological backtracking, lowest index first, false first
};

struct SolverOptions {
  Strategy strategy = Strategy::Cdcl;
  long long conflict_budget = -1;  // < 0: unlimited
  double time_budget_seconds = -1;  // < 0: unlimited
};

struct SolverStats {
  long long decisions = 0;
  long long conflicts = 0;
  long long propagations = 0;
  long long restarts = 0;
  long long learnts = 0;
};

struct SatOutcome {
  SatStatus status = SatStatus::Unsatisfiable;
  Assignment model;  // indexed by variable id, entry 0 unused; empty if UNSAT
  SolverStats stats;
  bool satisfiable() const noexcept { return status == SatStatus::Satisfiable; }
};

/// Budget ran out before a decision was reached. Never means UNSAT.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, SolverStats stats) : std::runtime_error(what), stats_(stats) {}
  const SolverStats& stats() const noexcept { return stats_; }

 private:
  SolverStats stats_;
};

/// Deterministic. A returned model is checked against every input clause.
SatOutcome solve(const CnfFormula& f, const SolverOptions& options = {});

}  // namespace lva
