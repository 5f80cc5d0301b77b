#include "lva/reduction.hpp"

#include <algorithm>
#include <array>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "lva/oracle.hpp"
#include "lva/predicates.hpp"

namespace lva {

// ---------------------------------------------------------------- instances

namespace {

std::string where(const Restricted3Sat& inst, int clause) {
  std::string s = "clause " + std::to_string(clause + 1);
  if (static_cast<std::size_t>(clause) < inst.clause_lines.size())
    s += " (line " + std::to_string(inst.clause_lines[clause]) + ")";
  return s;
}

}  // namespace

std::vector<Violation> validate_instance(const Restricted3Sat& inst) {
  std::vector<Violation> out;
  if (inst.num_vars < 1) out.push_back({Violation::Kind::Occurrences, -1, 0, "instance has no variables"});
  if (inst.clauses.empty()) out.push_back({Violation::Kind::ClauseShape, -1, 0, "instance has no clauses"});
  std::vector<int> pos(static_cast<std::size_t>(std::max(0, inst.num_vars)) + 1, 0), ng(pos);
  std::vector<std::string> seen_at(pos.size());
  for (int j = 0; j < static_cast<int>(inst.clauses.size()); ++j) {
    const auto& c = inst.clauses[j];
    if (c.size() < 2 || c.size() > 3)
      out.push_back({Violation::Kind::ClauseShape, j, 0,
                     where(inst, j) + " has " + std::to_string(c.size()) + " literals; expected 2 or 3"});
    std::set<int> vars;
    for (int lit : c) {
      const int x = std::abs(lit);
      if (lit == 0 || x > inst.num_vars) {
        out.push_back({Violation::Kind::Literal, j, x, where(inst, j) + ": literal " + std::to_string(lit) + " out of range"});
        continue;
      }
      if (!vars.insert(x).second)
        out.push_back({Violation::Kind::ClauseShape, j, x, where(inst, j) + " repeats variable " + std::to_string(x)});
      (lit > 0 ? pos : ng)[x]++;
      seen_at[x] += (seen_at[x].empty() ? "" : ", ") + where(inst, j);
      if (lit < 0 && c.size() == 3)
        out.push_back({Violation::Kind::ClauseShape, j, x,
                       where(inst, j) + ": 3-literal clause contains negated variable " + std::to_string(x)});
    }
  }
  for (int x = 1; x <= inst.num_vars; ++x)
    if (pos[x] != 2 || ng[x] != 1)
      out.push_back({Violation::Kind::Occurrences, -1, x,
                     "variable " + std::to_string(x) + " occurs " + std::to_string(pos[x]) + " times positive and " +
                         std::to_string(ng[x]) + " times negated; expected 2 and 1" +
                         (seen_at[x].empty() ? std::string() : " [" + seen_at[x] + "]")});
  return out;
}

Restricted3Sat parse_r3sat(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  Restricted3Sat inst;
  long declared = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok) || tok[0] == 'c' || tok[0] == '#') continue;
    if (tok == "p") {
      std::string kind;
      if (declared >= 0 || !(ss >> kind >> inst.num_vars >> declared) || kind != "r3sat" || inst.num_vars < 0 ||
          declared < 0)
        throw ParseError("expected header 'p r3sat <vars> <clauses>'", lineno);
      continue;
    }
    if (declared < 0) throw ParseError("clause before header", lineno);
    std::vector<int> clause;
    bool closed = false;
    do {
      if (closed) throw ParseError("literal after terminating 0", lineno);
      long lit;
      try {
        std::size_t used;
        lit = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad literal '" + tok + "'", lineno);
      }
      if (lit == 0) {
        closed = true;
        continue;
      }
      if (std::labs(lit) > inst.num_vars) throw ParseError("literal " + tok + " exceeds variable count", lineno);
      clause.push_back(static_cast<int>(lit));
    } while (ss >> tok);
    if (clause.empty()) throw ParseError("empty clause", lineno);
    inst.clauses.push_back(std::move(clause));
    inst.clause_lines.push_back(lineno);
  }
  if (declared < 0) throw ParseError("missing header", lineno);
  if (static_cast<long>(inst.clauses.size()) != declared)
    throw ParseError("declared " + std::to_string(declared) + " clauses, found " + std::to_string(inst.clauses.size()),
                     lineno);
  return inst;
}

std::string emit_r3sat(const Restricted3Sat& inst) {
  std::string out = "p r3sat " + std::to_string(inst.num_vars) + " " + std::to_string(inst.clauses.size()) + "\n";
  for (const auto& c : inst.clauses) {
    for (int lit : c) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

int first_falsified_clause(const Restricted3Sat& inst, const std::vector<bool>& values) {
  for (int j = 0; j < static_cast<int>(inst.clauses.size()); ++j) {
    bool sat = false;
    for (int lit : inst.clauses[j]) {
      const auto x = static_cast<std::size_t>(std::abs(lit));
      if (x < values.size() && values[x] == (lit > 0)) sat = true;
    }
    if (!sat) return j;
  }
  return -1;
}

std::optional<std::vector<bool>> brute_force_sat(const Restricted3Sat& inst) {
  if (inst.num_vars > 24) throw std::invalid_argument("brute_force_sat: too many variables");
  std::vector<bool> values(static_cast<std::size_t>(inst.num_vars) + 1, false);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << inst.num_vars); ++m) {
    for (int x = 1; x <= inst.num_vars; ++x) values[x] = (m >> (x - 1)) & 1U;
    if (first_falsified_clause(inst, values) < 0) return values;
  }
  return std::nullopt;
}

Restricted3Sat sample_formula() {
  Restricted3Sat f;
  f.num_vars = 4;
  f.clauses = {{-1, -2}, {1, 2, 3}, {1, 3, 4}, {-3, 4}, {2, -4}};
  return f;
}

std::vector<Restricted3Sat> enumerate_instances(int num_vars) {
  // Pool of literal occurrences, sorted; clauses are formed greedily around
  // the smallest unused occurrence so every multiset of clauses appears once.
  std::vector<int> pool;
  for (int x = 1; x <= num_vars; ++x) pool.insert(pool.end(), {-x, x, x});
  std::sort(pool.begin(), pool.end());
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<char> used(pool.size(), 0);
  std::vector<std::vector<int>> cur;

  auto ok_clause = [](const std::vector<int>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (std::abs(c[i]) == std::abs(c[j])) return false;
    if (c.size() == 3)
      for (int l : c)
        if (l < 0) return false;
    return true;
  };

  auto rec = [&](auto& self) -> void {
    std::size_t first = 0;
    while (first < pool.size() && used[first]) ++first;
    if (first == pool.size()) {
      auto key = cur;
      std::sort(key.begin(), key.end());
      seen.insert(std::move(key));
      return;
    }
    used[first] = 1;
    for (std::size_t i = first + 1; i < pool.size(); ++i) {
      if (used[i]) continue;
      used[i] = 1;
      std::vector<int> c2{pool[first], pool[i]};
      if (ok_clause(c2)) {
        cur.push_back(c2);
        self(self);
        cur.pop_back();
      }
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        if (used[j]) continue;
        std::vector<int> c3{pool[first], pool[i], pool[j]};
        if (!ok_clause(c3)) continue;
        used[j] = 1;
        cur.push_back(c3);
        self(self);
        cur.pop_back();
        used[j] = 0;
      }
      used[i] = 0;
    }
    used[first] = 0;
  };
  rec(rec);

  std::vector<Restricted3Sat> out;
  for (const auto& cls : seen) {
    Restricted3Sat r;
    r.num_vars = num_vars;
    r.clauses = cls;
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------- gadgets

namespace {

using Block = std::array<Vertex, 7>;

constexpr std::array<Edge, 15> kBlockEdges{{{1, 2}, {1, 4}, {1, 5}, {1, 7}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                             {2, 7}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {4, 7}, {6, 7}}};

std::string join(const std::string& prefix, const std::string& role) {
  return prefix.empty() ? role : prefix + "." + role;
}

// Vertices 1..7 of B; result[i] is vertex i+1.
Block add_block(GraphBuilder& b, const std::string& prefix) {
  Block v{};
  for (int i = 0; i < 7; ++i) v[i] = b.add_vertex(join(prefix, std::to_string(i + 1)));
  for (auto [x, y] : kBlockEdges) b.add_edge(v[x - 1], v[y - 1]);
  return v;
}

// K5 minus the edge {v[0], v[1]}.
void add_k5_minus(GraphBuilder& b, const std::array<Vertex, 5>& v) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!(i == 0 && j == 1)) b.add_edge(v[i], v[j]);
}

VariableAnchor add_variable_md6(GraphBuilder& b, const std::string& prefix) {
  const Block blk = add_block(b, join(prefix, "B"));
  VariableAnchor a;
  a.a1 = b.add_vertex(join(prefix, "a1"));
  a.a2 = b.add_vertex(join(prefix, "a2"));
  const Vertex p = b.add_vertex(join(prefix, "a'"));
  const Vertex pp = b.add_vertex(join(prefix, "a''"));
  a.abar = b.add_vertex(join(prefix, "abar"));
  b.add_edge(a.a1, blk[0]);
  b.add_edge(a.a2, blk[0]);
  b.add_edge(p, blk[6]);
  b.add_edge(pp, blk[6]);
  b.add_edge(p, pp);
  b.add_edge(p, a.abar);
  b.add_edge(pp, a.abar);
  return a;
}

VariableAnchor add_variable_md5(GraphBuilder& b, const std::string& prefix) {
  std::array<Vertex, 8> v{};
  for (int i = 1; i <= 7; ++i) v[i] = b.add_vertex(join(prefix, std::to_string(i)));
  add_k5_minus(b, {v[1], v[2], v[3], v[4], v[5]});
  b.add_edge(v[6], v[7]);
  for (int x : {6, 7}) {
    b.add_edge(v[x], v[1]);
    b.add_edge(v[x], v[2]);
  }
  VariableAnchor a;
  a.a1 = b.add_vertex(join(prefix, "atop"));
  a.a2 = b.add_vertex(join(prefix, "abot"));
  a.abar = b.add_vertex(join(prefix, "abar"));
  for (int x : {3, 6, 7}) b.add_edge(a.a1, v[x]);
  for (int x : {5, 6, 7}) b.add_edge(a.a2, v[x]);
  b.add_edge(a.abar, v[4]);
  return a;
}

// Cycle 0L - lits... - 0R - 0L around a B copy.
void add_clause_md6(GraphBuilder& b, Vertex zl, Vertex zr, const std::vector<Vertex>& lits, const std::string& prefix) {
  const Block blk = add_block(b, join(prefix, "B"));
  Vertex prev = zl;
  for (Vertex l : lits) {
    b.add_edge(prev, l);
    prev = l;
  }
  b.add_edge(prev, zr);
  b.add_edge(zr, zl);
  b.add_edge(zl, blk[0]);
  b.add_edge(zr, blk[6]);
}

// Cycle z0 - z1 - z2 - lits... - z0.
void add_clause_md5(GraphBuilder& b, const std::vector<Vertex>& z, const std::vector<Vertex>& lits) {
  b.add_edge(z[0], z[1]);
  b.add_edge(z[1], z[2]);
  Vertex prev = z[2];
  for (Vertex l : lits) {
    b.add_edge(prev, l);
    prev = l;
  }
  b.add_edge(prev, z[0]);
}

// Three K5- copies and a K2 (7 - 8) that force the zeros to one colour.
std::map<std::string, Vertex> add_starter_body(GraphBuilder& b, const std::string& prefix) {
  std::map<std::string, Vertex> s;
  for (const char* r : {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12", "13", "b1", "b2", "b3", "c1",
                        "c2", "c3"})
    s[r] = b.add_vertex(join(prefix, r));
  add_k5_minus(b, {s["1"], s["2"], s["3"], s["4"], s["5"]});
  add_k5_minus(b, {s["6"], s["7"], s["b1"], s["b2"], s["b3"]});
  add_k5_minus(b, {s["9"], s["8"], s["c1"], s["c2"], s["c3"]});
  const std::pair<const char*, const char*> edges[] = {
      {"6", "1"},  {"6", "2"},  {"9", "1"},   {"9", "2"},   {"7", "8"},  {"7", "3"},   {"10", "4"},
      {"10", "5"}, {"8", "11"}, {"10", "11"}, {"12", "10"}, {"12", "11"}, {"12", "b1"}, {"12", "b2"},
      {"b3", "13"}, {"13", "11"}, {"11", "c3"}, {"13", "c1"}};
  for (auto [x, y] : edges) b.add_edge(s[x], s[y]);
  return s;
}

void attach_starter(GraphBuilder& b, std::map<std::string, Vertex>& s, const std::vector<Vertex>& z) {
  b.add_edge(s["13"], z[1]);
  b.add_edge(s["13"], z[2]);
  b.add_edge(s["10"], z[0]);
  b.add_edge(s["c2"], z[0]);
}

void check_valid(const Restricted3Sat& inst) {
  auto v = validate_instance(inst);
  if (v.empty()) return;
  std::string msg = "invalid restricted 3-SAT instance:";
  for (const auto& x : v) msg += "\n  " + x.message;
  throw std::invalid_argument(msg);
}

// Resolves each clause literal to the variable-gadget vertex it consumes.
std::vector<std::vector<Vertex>> consume_literals(const Restricted3Sat& inst, std::vector<VariableAnchor>& anchors,
                                                  GraphBuilder& b) {
  std::vector<int> positive_seen(static_cast<std::size_t>(inst.num_vars) + 1, 0);
  std::vector<std::vector<Vertex>> out(inst.clauses.size());
  for (std::size_t j = 0; j < inst.clauses.size(); ++j)
    for (std::size_t p = 0; p < inst.clauses[j].size(); ++p) {
      const int lit = inst.clauses[j][p];
      const auto& a = anchors[static_cast<std::size_t>(std::abs(lit)) - 1];
      const Vertex v = lit < 0 ? a.abar : (positive_seen[lit]++ == 0 ? a.a1 : a.a2);
      b.set_label(v, b.label(v) + "=C" + std::to_string(j + 1) + ".l" + std::to_string(p + 1));
      out[j].push_back(v);
    }
  return out;
}

}  // namespace

Graph basic_block_b() {
  GraphBuilder b;
  add_block(b, "");
  return b.build();
}

Graph variable_gadget_md6() {
  GraphBuilder b;
  add_variable_md6(b, "");
  return b.build();
}

Graph clause_gadget_md6(int literals) {
  if (literals < 2 || literals > 3) throw std::invalid_argument("clause gadget needs 2 or 3 literals");
  GraphBuilder b;
  const Vertex zl = b.add_vertex("0L");
  std::vector<Vertex> lits;
  for (int i = 1; i <= literals; ++i) lits.push_back(b.add_vertex("l" + std::to_string(i)));
  const Vertex zr = b.add_vertex("0R");
  add_clause_md6(b, zl, zr, lits, "");
  return b.build();
}

Graph k5_minus() {
  GraphBuilder b;
  std::array<Vertex, 5> v{};
  for (int i = 0; i < 5; ++i) v[i] = b.add_vertex(std::to_string(i + 1));
  add_k5_minus(b, v);
  return b.build();
}

Graph variable_gadget_md5() {
  GraphBuilder b;
  add_variable_md5(b, "");
  return b.build();
}

Graph clause_gadget_md5(int literals) {
  if (literals < 2 || literals > 3) throw std::invalid_argument("clause gadget needs 2 or 3 literals");
  GraphBuilder b;
  std::vector<Vertex> z{b.add_vertex("z0"), b.add_vertex("z1"), b.add_vertex("z2")};
  std::vector<Vertex> lits;
  for (int i = 1; i <= literals; ++i) lits.push_back(b.add_vertex("l" + std::to_string(i)));
  add_clause_md5(b, z, lits);
  return b.build();
}

Graph starter_gadget() {
  GraphBuilder b;
  auto s = add_starter_body(b, "");
  std::vector<Vertex> z{b.add_vertex("z0"), b.add_vertex("z1"), b.add_vertex("z2")};
  b.add_edge(z[0], z[1]);
  b.add_edge(z[1], z[2]);
  attach_starter(b, s, z);
  return b.build();
}

std::vector<Vertex> link_md5(GraphBuilder& b, const std::vector<Vertex>& left, const std::vector<Vertex>& right,
                             const std::string& prefix) {
  if (left.size() != 3 || right.size() != 3) throw std::invalid_argument("link_md5 needs two zero triples");
  const Vertex l1 = b.add_vertex(join(prefix, "1"));
  const Vertex l2 = b.add_vertex(join(prefix, "2"));
  const Vertex l3 = b.add_vertex(join(prefix, "3"));
  b.add_edge(l1, l2);
  b.add_edge(l2, l3);
  b.add_edge(l2, left[0]);
  b.add_edge(l2, left[2]);
  b.add_edge(l2, right[1]);
  for (Vertex x : {l1, l3}) {
    b.add_edge(x, left[1]);
    b.add_edge(x, right[0]);
    b.add_edge(x, right[2]);
  }
  return {l1, l2, l3};
}

Graph clause_link_md6() {
  GraphBuilder b;
  const Vertex zl = b.add_vertex("0L");
  std::vector<Vertex> lits;
  for (int i = 1; i <= 3; ++i) lits.push_back(b.add_vertex("l" + std::to_string(i)));
  const Vertex zr = b.add_vertex("0R");
  add_clause_md6(b, zl, zr, lits, "");
  const Block link = add_block(b, "K");
  const Vertex next = b.add_vertex("next.0L");
  b.add_edge(link[0], zr);
  b.add_edge(link[6], next);
  return b.build();
}

Graph clause_link_md5() {
  GraphBuilder b;
  std::vector<std::vector<Vertex>> z(2);
  for (int side = 0; side < 2; ++side) {
    const std::string p = side == 0 ? "L." : "R.";
    z[side] = {b.add_vertex(p + "z0"), b.add_vertex(p + "z1"), b.add_vertex(p + "z2")};
    std::vector<Vertex> lits;
    for (int i = 1; i <= 3; ++i) lits.push_back(b.add_vertex(p + "l" + std::to_string(i)));
    add_clause_md5(b, z[side], lits);
  }
  link_md5(b, z[0], z[1], "K");
  return b.build();
}

ReductionOutput reduce_md6(const Restricted3Sat& inst) {
  check_valid(inst);
  GraphBuilder b;
  ReductionOutput out;
  out.variant = Variant::Md6;
  for (int x = 1; x <= inst.num_vars; ++x) out.variable_anchor.push_back(add_variable_md6(b, "x" + std::to_string(x)));
  out.literal_vertex = consume_literals(inst, out.variable_anchor, b);
  for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
    const std::string c = "C" + std::to_string(j + 1);
    out.zero_vertices.push_back({b.add_vertex(c + ".0L"), b.add_vertex(c + ".0R")});
  }
  for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
    const auto& z = out.zero_vertices[j];
    add_clause_md6(b, z[0], z[1], out.literal_vertex[j], "C" + std::to_string(j + 1));
    if (j + 1 < inst.clauses.size()) {
      // vertex 1 of the link block to this 0R, vertex 7 to the next 0L
      const Block link = add_block(b, "K" + std::to_string(j + 1));
      b.add_edge(link[0], z[1]);
      b.add_edge(link[6], out.zero_vertices[j + 1][0]);
    }
  }
  out.graph = b.build();
  return out;
}

ReductionOutput reduce_md5(const Restricted3Sat& inst) {
  check_valid(inst);
  GraphBuilder b;
  ReductionOutput out;
  out.variant = Variant::Md5;
  for (int x = 1; x <= inst.num_vars; ++x) out.variable_anchor.push_back(add_variable_md5(b, "x" + std::to_string(x)));
  out.literal_vertex = consume_literals(inst, out.variable_anchor, b);
  for (std::size_t j = 0; j < inst.clauses.size(); ++j) {
    const std::string c = "C" + std::to_string(j + 1);
    out.zero_vertices.push_back({b.add_vertex(c + ".z0"), b.add_vertex(c + ".z1"), b.add_vertex(c + ".z2")});
    add_clause_md5(b, out.zero_vertices[j], out.literal_vertex[j]);
  }
  auto starter = add_starter_body(b, "S");
  attach_starter(b, starter, out.zero_vertices[0]);
  for (std::size_t j = 0; j + 1 < inst.clauses.size(); ++j)
    link_md5(b, out.zero_vertices[j], out.zero_vertices[j + 1], "K" + std::to_string(j + 1));
  out.graph = b.build();
  return out;
}

ReductionOutput reduce(const Restricted3Sat& inst, Variant variant) {
  return variant == Variant::Md6 ? reduce_md6(inst) : reduce_md5(inst);
}

std::string ReductionOutput::mapping_json() const {
  nlohmann::ordered_json j;
  j["variant"] = variant == Variant::Md6 ? "md6" : "md5";
  j["literal_vertex"] = literal_vertex;
  auto& va = j["variable_anchor"] = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < variable_anchor.size(); ++x)
    va.push_back({{"variable", x + 1}, {"a1", variable_anchor[x].a1}, {"a2", variable_anchor[x].a2},
                  {"abar", variable_anchor[x].abar}});
  j["zero_vertices"] = zero_vertices;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < graph.order(); ++v) labels.push_back(graph.label(v));
  j["labels"] = labels;
  return j.dump(1) + "\n";
}

Partition assignment_to_coloring(const Restricted3Sat& inst, const ReductionOutput& out,
                                 const std::vector<bool>& values) {
  if (static_cast<int>(values.size()) != inst.num_vars + 1)
    throw std::invalid_argument("assignment size does not match the variable count");
  if (int j = first_falsified_clause(inst, values); j >= 0)
    throw std::invalid_argument("assignment falsifies " + where(inst, j));
  // 0-vertices white (0); a true literal vertex is gray (1).
  std::vector<int> fixed(static_cast<std::size_t>(out.graph.order()), -1);
  for (const auto& zs : out.zero_vertices)
    for (Vertex z : zs) fixed[z] = 0;
  for (int x = 1; x <= inst.num_vars; ++x) {
    const auto& a = out.variable_anchor[x - 1];
    fixed[a.a1] = fixed[a.a2] = values[x] ? 1 : 0;
    fixed[a.abar] = values[x] ? 0 : 1;
  }
  auto p = extend_partition(out.graph, 2, fixed);
  if (!p) throw std::logic_error("no legal colouring extends the satisfying assignment");
  return *p;
}

std::vector<bool> coloring_to_assignment(const Restricted3Sat& inst, const ReductionOutput& out, const Partition& p) {
  if (p.k() != 2) throw std::invalid_argument("expected a 2-colouring");
  if (!is_legal_partition(out.graph, p)) throw std::invalid_argument("colouring is not legal");
  const int zero = p[out.zero_vertices.at(0).at(0)];
  for (const auto& zs : out.zero_vertices)
    for (Vertex z : zs)
      if (p[z] != zero) throw std::logic_error("0-vertices do not share a colour in a legal colouring");
  std::vector<bool> values(static_cast<std::size_t>(inst.num_vars) + 1, false);
  for (int x = 1; x <= inst.num_vars; ++x) values[x] = p[out.variable_anchor[x - 1].a1] != zero;
  if (int j = first_falsified_clause(inst, values); j >= 0)
    throw std::logic_error("decoded assignment falsifies " + where(inst, j));
  return values;
}

}  // namespace lva
