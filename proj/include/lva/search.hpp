#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "lva/graph.hpp"
#include "lva/oracle.hpp"
#include "lva/solver.hpp"

namespace lva {

enum class Engine { Oracle, Sat };

struct EngineOptions {
  Engine engine = Engine::Oracle;
  OracleLimits oracle;
  SolverOptions sat;
};

/// A legal k-partition from the chosen engine, or nullopt. The SAT engine's
/// model is decoded and checked with is_legal_partition.
std::optional<Partition> decide_lva(const Graph& g, int k, const EngineOptions& opt = {});
/// Smallest k <= k_max with a legal k-partition, using the chosen engine.
std::optional<LvaResult> lva_value(const Graph& g, int k_max, const EngineOptions& opt = {});

/// n > c and removing any fewer than c vertices leaves g connected. Checks
/// every vertex subset of size < c.
bool is_k_connected(const Graph& g, int c);

struct SearchOptions {
  int k = 2;
  int max_degree = -1;        // < 0: no filter
  int min_connectivity = 0;   // 0 or 1: no filter beyond the trivial
  int limit_n = 20;           // larger graphs are skipped
  int threads = 1;
  EngineOptions engine;
};

struct SearchRecord {
  enum class Status { Yes, No, Filtered, Error } status;
  std::size_t line = 0;
  std::string text;    // input line
  std::string detail;  // filter reason or error message
};

struct SearchSummary {
  std::size_t lines = 0;  // non-blank graph lines
  std::size_t errors = 0;
  std::size_t filtered = 0;
  std::size_t decided = 0;
  std::size_t yes = 0;
  std::size_t no = 0;
  std::vector<SearchRecord> records;  // in input order
  std::vector<SearchRecord> counterexamples() const;
};

/// One graph6 graph per line; blank lines and '#' comments skipped.
/// Malformed lines are recorded as errors and do not stop the run.
SearchSummary run_search(std::istream& in, const SearchOptions& opt);

/// LVA_LAB_THREADS if set to a positive integer, else hardware concurrency.
int default_thread_count();

}  // namespace lva
