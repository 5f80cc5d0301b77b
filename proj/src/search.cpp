#include "lva/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "lva/encode.hpp"
#include "lva/io.hpp"
#include "lva/predicates.hpp"

namespace lva {

std::optional<Partition> decide_lva(const Graph& g, int k, const EngineOptions& opt) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (opt.engine == Engine::Oracle) return find_legal_partition(g, k, opt.oracle);
  const auto out = solve(build_cnf(g, k), opt.sat);
  if (!out.satisfiable()) return std::nullopt;
  Partition p = decode_model(g, k, VarMap(g.order(), k), out.model);
  if (!is_legal_partition(g, p)) throw std::logic_error("decoded SAT model is not a legal partition");
  return p;
}

std::optional<LvaResult> lva_value(const Graph& g, int k_max, const EngineOptions& opt) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  if (opt.engine == Engine::Oracle) return lva_exact(g, k_max, opt.oracle);
  if (g.empty()) return LvaResult{0, Partition(0, {})};
  for (int k = 1; k <= k_max; ++k)
    if (auto p = decide_lva(g, k, opt)) return LvaResult{k, std::move(*p)};
  return std::nullopt;
}

bool is_k_connected(const Graph& g, int c) {
  const int n = g.order();
  if (c <= 0) return true;
  if (n <= c) return false;
  // Remove each subset of size < c; the rest must stay connected.
  std::vector<int> pick;
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  auto connected_rest = [&] {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v]) keep.push_back(v);
    return is_connected(induced_subgraph(g, keep));
  };
  auto rec = [&](auto& self, int start, int left) -> bool {
    if (!connected_rest()) return false;
    if (left == 0) return true;
    for (int v = start; v < n; ++v) {
      removed[v] = 1;
      const bool ok = self(self, v + 1, left - 1);
      removed[v] = 0;
      if (!ok) return false;
    }
    return true;
  };
  return rec(rec, 0, c - 1);
}

std::vector<SearchRecord> SearchSummary::counterexamples() const {
  std::vector<SearchRecord> out;
  for (const auto& r : records)
    if (r.status == SearchRecord::Status::No) out.push_back(r);
  return out;
}

int default_thread_count() {
  if (const char* env = std::getenv("LVA_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

SearchSummary run_search(std::istream& in, const SearchOptions& opt) {
  if (opt.k < 1) throw std::invalid_argument("k must be at least 1");
  SearchSummary s;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    auto last = raw.find_last_not_of(" \t\r");
    s.records.push_back({SearchRecord::Status::Error, lineno, raw.substr(first, last - first + 1), {}});
  }
  s.lines = s.records.size();

  auto work = [&](SearchRecord& r) {
    try {
      const Graph g = parse_graph6(r.text);
      if (g.order() > opt.limit_n) {
        r.status = SearchRecord::Status::Filtered;
        r.detail = "n=" + std::to_string(g.order()) + " exceeds limit";
      } else if (opt.max_degree >= 0 && max_degree(g) > opt.max_degree) {
        r.status = SearchRecord::Status::Filtered;
        r.detail = "max degree " + std::to_string(max_degree(g));
      } else if (opt.min_connectivity > 1 && !is_k_connected(g, opt.min_connectivity)) {
        r.status = SearchRecord::Status::Filtered;
        r.detail = "not " + std::to_string(opt.min_connectivity) + "-connected";
      } else {
        r.status = decide_lva(g, opt.k, opt.engine) ? SearchRecord::Status::Yes : SearchRecord::Status::No;
      }
    } catch (const std::exception& e) {
      r.status = SearchRecord::Status::Error;
      r.detail = e.what();
    }
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < s.records.size();) work(s.records[i]);
  };
  const int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(s.records.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& r : s.records) {
    switch (r.status) {
      case SearchRecord::Status::Yes: ++s.yes; ++s.decided; break;
      case SearchRecord::Status::No: ++s.no; ++s.decided; break;
      case SearchRecord::Status::Filtered: ++s.filtered; break;
      case SearchRecord::Status::Error: ++s.errors; break;
    }
  }
  return s;
}

}  // namespace lva
