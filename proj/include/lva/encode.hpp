#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lva/graph.hpp"

namespace lva {

/// Dense variable numbering 1..total(): colour variables c(v,i) first,
/// row-major by vertex then colour, then order variables x(u,v) for ordered
/// pairs u != v in lexicographic order.
class VarMap {
 public:
  VarMap(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  int total() const noexcept { return n_ * k_ + n_ * (n_ - 1); }

  int color_var(Vertex v, int i) const noexcept { return v * k_ + i + 1; }
  int order_var(Vertex u, Vertex v) const noexcept {
    return n_ * k_ + u * (n_ - 1) + (v < u ? v : v - 1) + 1;
  }

  struct Role {
    char kind;  // 'c' or 'x'
    int a;      // vertex (c) or first vertex (x)
    int b;      // colour (c) or second vertex (x)
  };
  Role role(int var) const;
  std::string name(int var) const;

  /// Sidecar JSON: {"n","k","num_vars","vars":[{"id","kind",...}]}.
  std::string to_json() const;
  static VarMap from_json(std::string_view text);

 private:
  int n_;
  int k_;
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

enum class Relation { LessEqual, Equal };

struct LinearConstraint {
  std::string name;
  std::vector<std::pair<int, int>> terms;  // (coefficient, variable)
  Relation relation = Relation::LessEqual;
  int rhs = 0;
};

struct IlpModel {
  int num_vars = 0;
  std::vector<LinearConstraint> constraints;
};

/// Both builders throw std::invalid_argument for k < 1.
IlpModel build_ilp(const Graph& g, int k);
CnfFormula build_cnf(const Graph& g, int k);

std::size_t expected_variable_count(int n, int k);
std::size_t expected_ilp_constraint_count(int n, int m, int k);
std::size_t expected_cnf_clause_count(int n, int m, int k);

/// Assignment indexed by variable id; entry 0 is unused.
using Assignment = std::vector<bool>;

/// Reads colours off the c-variables. Throws std::invalid_argument if some
/// vertex has zero or several true colour variables.
Partition decode_model(const Graph& g, int k, const VarMap& map, const Assignment& a);

/// Builds a satisfying assignment from a legal partition: the paths of every
/// class are concatenated into one total order.
Assignment lift_partition(const Graph& g, const Partition& p);

bool satisfies(const CnfFormula& f, const Assignment& a);

std::string emit_dimacs(const CnfFormula& f);
CnfFormula parse_dimacs(std::string_view text);
/// Variable names in the LP text come from `map` when given, else "v<id>".
std::string emit_lp(const IlpModel& m, const VarMap* map = nullptr);

/// Model line(s): space-separated signed literals, optional "v" prefixes and
/// terminating 0; "c" and "s" lines are skipped. Unmentioned variables are
/// false.
Assignment parse_model(std::string_view text, int num_vars);
std::string emit_model(const Assignment& a);

}  // namespace lva
