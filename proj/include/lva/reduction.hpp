#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lva/encode.hpp"
#include "lva/graph.hpp"

namespace lva {

/// Restricted 3-SAT: every variable occurs exactly three times (twice
/// positive, once negated); clauses have 2 or 3 literals and 3-literal clauses
/// are all positive. Literals are signed 1-based variable ids. Clause order is
/// the linear arrangement used to chain clause gadgets.
struct Restricted3Sat {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<std::size_t> clause_lines;  // source line per clause, if parsed
};

struct Violation {
  enum class Kind { Occurrences, ClauseShape, Literal } kind;
  int clause = -1;    // 0-based, or -1
  int variable = 0;   // 1-based, or 0
  std::string message;
};

std::vector<Violation> validate_instance(const Restricted3Sat& inst);

/// "p r3sat V C" then one clause per line, optional trailing 0, 'c' comments.
/// ParseError offsets are 1-based line numbers.
Restricted3Sat parse_r3sat(std::string_view text);
std::string emit_r3sat(const Restricted3Sat& inst);

/// Brute force over 2^V assignments (V <= 24). Index 0 unused.
std::optional<std::vector<bool>> brute_force_sat(const Restricted3Sat& inst);
/// Index of the first clause falsified by `values`, or -1.
int first_falsified_clause(const Restricted3Sat& inst, const std::vector<bool>& values);

enum class Variant { Md6, Md5 };

struct VariableAnchor {
  Vertex a1 = -1;    // consumed by the first positive occurrence
  Vertex a2 = -1;    // consumed by the second positive occurrence
  Vertex abar = -1;  // consumed by the negated occurrence
};

struct ReductionOutput {
  Variant variant = Variant::Md6;
  Graph graph;
  std::vector<std::vector<Vertex>> literal_vertex;  // [clause][position]
  std::vector<VariableAnchor> variable_anchor;      // [variable - 1]
  std::vector<std::vector<Vertex>> zero_vertices;   // [clause]

  /// Mapping file: JSON with the three maps above and vertex labels.
  std::string mapping_json() const;
};

// Gadgets. Vertices carry their role names as labels ("1".."7", "a", ...).
Graph basic_block_b();
Graph variable_gadget_md6();
/// Outer cycle 0L - l1 - ... - lt - 0R - 0L around a copy of B; 0L ~ B.1,
/// 0R ~ B.7. Literal vertices are labelled l1..lt.
Graph clause_gadget_md6(int literals);
Graph k5_minus();
Graph variable_gadget_md5();
/// Cycle z0 - z1 - z2 - l1 - ... - lt - z0; z1 is the middle 0-vertex.
Graph clause_gadget_md5(int literals);
/// Three 0-vertices z0, z1, z2 that the starter forces to one colour are the
/// last three vertices; they form the path z0 - z1 - z2 as in a clause cycle.
Graph starter_gadget();

/// Adds link vertices 1 - 2 - 3 between the zero triples of two clause
/// gadgets already present in `b`. Returns the three new vertex ids.
std::vector<Vertex> link_md5(GraphBuilder& b, const std::vector<Vertex>& left_zeros,
                             const std::vector<Vertex>& right_zeros, const std::string& prefix = "link");

/// Three-literal clause gadget, the linking B copy (labels K.1..K.7) and the
/// next clause's left 0-vertex (label "next.0L").
Graph clause_link_md6();
/// Two three-literal clause gadgets (labels L.* and R.*) joined by link_md5.
Graph clause_link_md5();

/// Both throw std::invalid_argument if validate_instance reports violations.
ReductionOutput reduce_md6(const Restricted3Sat& inst);
ReductionOutput reduce_md5(const Restricted3Sat& inst);
ReductionOutput reduce(const Restricted3Sat& inst, Variant variant);

/// `values[x]` is the truth value of variable x (index 0 unused). Throws
/// std::invalid_argument naming the first falsified clause.
Partition assignment_to_coloring(const Restricted3Sat& inst, const ReductionOutput& out,
                                 const std::vector<bool>& values);
/// Throws std::invalid_argument if the partition is not a legal 2-colouring.
std::vector<bool> coloring_to_assignment(const Restricted3Sat& inst, const ReductionOutput& out,
                                         const Partition& p);

/// The formula (~a | ~b)(a | b | c)(a | c | d)(~c | d)(b | ~d).
Restricted3Sat sample_formula();

/// Every valid instance with `num_vars` variables (clause order canonical,
/// literals sorted). Grows fast: intended for num_vars <= 4.
std::vector<Restricted3Sat> enumerate_instances(int num_vars);

}  // namespace lva
