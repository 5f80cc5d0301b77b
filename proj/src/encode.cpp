#include "lva/encode.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "lva/predicates.hpp"

namespace lva {

VarMap::VarMap(int n, int k) : n_(n), k_(k) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
}

VarMap::Role VarMap::role(int var) const {
  if (var < 1 || var > total()) throw std::out_of_range("variable " + std::to_string(var) + " out of range");
  int z = var - 1;
  if (z < n_ * k_) return {'c', z / k_, z % k_};
  z -= n_ * k_;
  int u = z / (n_ - 1), r = z % (n_ - 1);
  return {'x', u, r < u ? r : r + 1};
}

std::string VarMap::name(int var) const {
  auto r = role(var);
  return std::string(1, r.kind) + "_" + std::to_string(r.a) + "_" + std::to_string(r.b);
}

std::string VarMap::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["k"] = k_;
  j["num_vars"] = total();
  auto& vars = j["vars"] = nlohmann::ordered_json::array();
  for (int id = 1; id <= total(); ++id) {
    auto r = role(id);
    if (r.kind == 'c')
      vars.push_back({{"id", id}, {"kind", "c"}, {"vertex", r.a}, {"color", r.b}});
    else
      vars.push_back({{"id", id}, {"kind", "x"}, {"u", r.a}, {"v", r.b}});
  }
  return j.dump(1) + "\n";
}

VarMap VarMap::from_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  VarMap m(j.at("n").get<int>(), j.at("k").get<int>());
  if (j.contains("num_vars") && j["num_vars"].get<int>() != m.total())
    throw std::invalid_argument("variable map: num_vars inconsistent with n and k");
  return m;
}

std::size_t expected_variable_count(int n, int k) {
  return static_cast<std::size_t>(n) * k + static_cast<std::size_t>(n) * (n - 1);
}

std::size_t expected_ilp_constraint_count(int n, int m, int k) {
  const std::size_t N = static_cast<std::size_t>(n);
  const std::size_t mid = n >= 2 ? N - 2 : 0;
  return N + N * (N - 1) / 2 + N * (N - 1) * mid + 2 * static_cast<std::size_t>(m) * mid * k;
}

std::size_t expected_cnf_clause_count(int n, int m, int k) {
  const std::size_t N = static_cast<std::size_t>(n);
  const std::size_t K = static_cast<std::size_t>(k);
  const std::size_t mid = n >= 2 ? N - 2 : 0;
  return N * (1 + K * (K - 1) / 2) + N * (N - 1) + N * (N - 1) * mid + 2 * static_cast<std::size_t>(m) * mid * K;
}

namespace {

// Calls fn(u, v, w, i) for every oriented edge (u, w), middle vertex v and
// colour i, in the canonical clause order.
template <class Fn>
void for_each_middle(const Graph& g, int k, Fn fn) {
  for (auto [a, b] : g.edges())
    for (auto [u, w] : {Edge{a, b}, Edge{b, a}})
      for (Vertex v = 0; v < g.order(); ++v) {
        if (v == u || v == w) continue;
        for (int i = 0; i < k; ++i) fn(u, v, w, i);
      }
}

std::string vname(int var, const VarMap* map) { return map ? map->name(var) : "v" + std::to_string(var); }

}  // namespace

IlpModel build_ilp(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int n = g.order();
  VarMap map(n, k);
  IlpModel m;
  m.num_vars = map.total();
  auto& cs = m.constraints;
  cs.reserve(expected_ilp_constraint_count(n, g.size(), k));
  auto id = [](std::initializer_list<int> xs) {
    std::string s;
    for (int x : xs) s += "_" + std::to_string(x);
    return s;
  };

  for (Vertex v = 0; v < n; ++v) {
    LinearConstraint c{"one" + id({v}), {}, Relation::Equal, 1};
    for (int i = 0; i < k; ++i) c.terms.emplace_back(1, map.color_var(v, i));
    cs.push_back(std::move(c));
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      cs.push_back({"anti" + id({u, v}), {{1, map.order_var(u, v)}, {1, map.order_var(v, u)}}, Relation::Equal, 1});
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = 0; w < n; ++w) {
        if (u == v || v == w || u == w) continue;
        cs.push_back({"tr" + id({u, v, w}),
                      {{1, map.order_var(u, v)}, {1, map.order_var(v, w)}, {-1, map.order_var(u, w)}},
                      Relation::LessEqual,
                      1});
      }
  for_each_middle(g, k, [&](Vertex u, Vertex v, Vertex w, int i) {
    cs.push_back({"mid" + id({u, v, w, i}),
                  {{1, map.order_var(u, v)}, {1, map.order_var(v, w)}, {1, map.color_var(u, i)}, {1, map.color_var(w, i)}},
                  Relation::LessEqual,
                  3});
  });
  return m;
}

CnfFormula build_cnf(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int n = g.order();
  VarMap map(n, k);
  CnfFormula f;
  f.num_vars = map.total();
  auto& cl = f.clauses;
  cl.reserve(expected_cnf_clause_count(n, g.size(), k));

  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> some;
    for (int i = 0; i < k; ++i) some.push_back(map.color_var(v, i));
    cl.push_back(std::move(some));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) cl.push_back({-map.color_var(v, i), -map.color_var(v, j)});
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      cl.push_back({map.order_var(u, v), map.order_var(v, u)});
      cl.push_back({-map.order_var(u, v), -map.order_var(v, u)});
    }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = 0; w < n; ++w) {
        if (u == v || v == w || u == w) continue;
        cl.push_back({-map.order_var(u, v), -map.order_var(v, w), map.order_var(u, w)});
      }
  for_each_middle(g, k, [&](Vertex u, Vertex v, Vertex w, int i) {
    cl.push_back({-map.order_var(u, v), -map.order_var(v, w), -map.color_var(u, i), -map.color_var(w, i)});
  });
  return f;
}

Partition decode_model(const Graph& g, int k, const VarMap& map, const Assignment& a) {
  if (map.n() != g.order() || map.k() != k) throw std::invalid_argument("variable map does not match (graph, k)");
  if (static_cast<int>(a.size()) < map.total() + 1) throw std::invalid_argument("assignment is shorter than the variable map");
  std::vector<int> colors(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    int count = 0;
    for (int i = 0; i < k; ++i)
      if (a[map.color_var(v, i)]) {
        colors[v] = i;
        ++count;
      }
    if (count != 1)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has " + std::to_string(count) +
                                  " colours set; expected exactly one");
  }
  return Partition(k, std::move(colors));
}

Assignment lift_partition(const Graph& g, const Partition& p) {
  if (!is_legal_partition(g, p)) throw std::invalid_argument("partition is not legal");
  const int n = g.order();
  VarMap map(n, std::max(1, p.k()));
  // Walk each path of each class from an endpoint; every component of a
  // linear forest has one (or is a single vertex).
  std::vector<Vertex> order;
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  auto same_nbrs = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
      if (p[w] == p[v]) out.push_back(w);
    return out;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (done[s] || same_nbrs(s).size() > 1) continue;
    Vertex prev = -1, cur = s;
    while (cur >= 0) {
      done[cur] = 1;
      order.push_back(cur);
      Vertex next = -1;
      for (Vertex w : same_nbrs(cur))
        if (w != prev) next = w;
      prev = cur;
      cur = next;
    }
  }
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  Assignment a(static_cast<std::size_t>(map.total()) + 1, false);
  for (Vertex v = 0; v < n; ++v) a[map.color_var(v, p[v])] = true;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && pos[u] < pos[v]) a[map.order_var(u, v)] = true;
  return a;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  for (const auto& c : f.clauses) {
    bool sat = false;
    for (int lit : c) {
      const auto var = static_cast<std::size_t>(std::abs(lit));
      if (var < a.size() && a[var] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::string emit_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses) {
    for (int lit : c) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  CnfFormula f;
  long declared = -1;
  std::vector<int> cur;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok) || tok[0] == 'c' || tok[0] == '%') continue;
    if (tok == "p") {
      std::string kind;
      if (declared >= 0 || !(ss >> kind >> f.num_vars >> declared) || kind != "cnf")
        throw ParseError("bad DIMACS header", lineno);
      continue;
    }
    if (declared < 0) throw ParseError("clause before header", lineno);
    do {
      int lit;
      try {
        std::size_t used;
        lit = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad literal '" + tok + "'", lineno);
      }
      if (lit == 0) {
        f.clauses.push_back(std::move(cur));
        cur.clear();
      } else {
        if (std::abs(lit) > f.num_vars) throw ParseError("literal exceeds declared variable count", lineno);
        cur.push_back(lit);
      }
    } while (ss >> tok);
  }
  if (declared < 0) throw ParseError("missing DIMACS header", lineno);
  if (!cur.empty()) f.clauses.push_back(std::move(cur));
  if (static_cast<long>(f.clauses.size()) != declared)
    throw ParseError("declared " + std::to_string(declared) + " clauses, found " + std::to_string(f.clauses.size()),
                     lineno);
  return f;
}

std::string emit_lp(const IlpModel& m, const VarMap* map) {
  std::ostringstream out;
  out << "Minimize\n obj: 0\nSubject To\n";
  for (const auto& c : m.constraints) {
    out << ' ' << c.name << ':';
    bool first = true;
    for (auto [coef, var] : c.terms) {
      if (coef < 0)
        out << (first ? " -" : " - ");
      else if (!first)
        out << " + ";
      else
        out << ' ';
      if (std::abs(coef) != 1) out << std::abs(coef) << ' ';
      out << vname(var, map);
      first = false;
    }
    out << (c.relation == Relation::Equal ? " = " : " <= ") << c.rhs << '\n';
  }
  out << "Binary\n";
  for (int v = 1; v <= m.num_vars; ++v) out << ' ' << vname(v, map) << '\n';
  out << "End\n";
  return out.str();
}

Assignment parse_model(std::string_view text, int num_vars) {
  Assignment a(static_cast<std::size_t>(num_vars) + 1, false);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok) || tok == "c" || tok == "s") continue;
    do {
      if (tok == "v") continue;
      long lit;
      try {
        std::size_t used;
        lit = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad literal '" + tok + "'", lineno);
      }
      if (lit == 0) continue;
      if (std::labs(lit) > num_vars) throw ParseError("literal exceeds variable count", lineno);
      a[static_cast<std::size_t>(std::labs(lit))] = lit > 0;
    } while (ss >> tok);
  }
  return a;
}

std::string emit_model(const Assignment& a) {
  std::string out;
  for (std::size_t v = 1; v < a.size(); ++v) {
    out += a[v] ? "" : "-";
    out += std::to_string(v);
    out += ' ';
  }
  return out + "0\n";
}

}  // namespace lva
