#include "lva/gadgetlab.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <json.hpp>
#include <set>
#include <sstream>

#include "lva/predicates.hpp"
#include "lva/reduction.hpp"

namespace lva {

namespace {

using Mask = std::uint32_t;

// Class S (bitmask) induces a linear forest.
bool linear_forest(const std::vector<Mask>& adj, Mask s) {
  int edges2 = 0;
  for (Mask r = s; r; r &= r - 1) {
    const int v = std::countr_zero(r);
    const int d = std::popcount(adj[v] & s);
    if (d > 2) return false;
    edges2 += d;
  }
  // A forest has |S| - components edges.
  int comps = 0;
  for (Mask left = s; left;) {
    Mask frontier = left & (~left + 1), seen = frontier;
    while (frontier) {
      Mask next = 0;
      for (Mask r = frontier; r; r &= r - 1) next |= adj[std::countr_zero(r)];
      frontier = next & s & ~seen;
      seen |= frontier;
    }
    left &= ~seen;
    ++comps;
  }
  return edges2 / 2 == std::popcount(s) - comps;
}

}  // namespace

Anchor anchor_at(const Graph& g, std::string_view label, int color) {
  auto v = g.find_label(label);
  if (!v) throw std::invalid_argument("no vertex labelled '" + std::string(label) + "'");
  return {*v, color};
}

GadgetReport enumerate_legal(const Graph& g, const std::vector<Anchor>& anchors, const EnumerateOptions& opt) {
  const int n = g.order();
  if (n > opt.max_vertices || n > 30)
    throw std::invalid_argument("gadget has " + std::to_string(n) + " vertices; enumeration limit is " +
                                std::to_string(std::min(opt.max_vertices, 30)));
  std::vector<int> fixed(static_cast<std::size_t>(n), -1);
  for (const auto& a : anchors) {
    if (a.vertex < 0 || a.vertex >= n) throw std::invalid_argument("anchor vertex out of range");
    if (a.color != kWhite && a.color != kGray) throw std::invalid_argument("anchor colour must be white or gray");
    if (fixed[a.vertex] >= 0 && fixed[a.vertex] != a.color)
      throw std::invalid_argument("conflicting anchors on vertex " + std::to_string(a.vertex));
    fixed[a.vertex] = a.color;
  }
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  std::vector<int> free;
  Mask base = 0;  // gray anchors
  for (Vertex v = 0; v < n; ++v) {
    if (fixed[v] < 0)
      free.push_back(v);
    else if (fixed[v] == kGray)
      base |= Mask{1} << v;
  }
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  const std::uint64_t total = std::uint64_t{1} << free.size();

  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<Mask> found;
    for (std::uint64_t c = lo; c < hi; ++c) {
      Mask gray = base;
      for (std::size_t i = 0; i < free.size(); ++i)
        if (c >> i & 1U) gray |= Mask{1} << free[i];
      if (linear_forest(adj, gray) && linear_forest(adj, all & ~gray)) found.push_back(gray);
    }
    return found;
  };

  const int chunks = std::max(1, std::min<int>(opt.threads, static_cast<int>(std::min<std::uint64_t>(total, 64))));
  std::vector<std::future<std::vector<Mask>>> parts;
  for (int t = 0; t < chunks; ++t) {
    const std::uint64_t lo = total * t / chunks, hi = total * (t + 1) / chunks;
    parts.push_back(std::async(chunks == 1 ? std::launch::deferred : std::launch::async, scan, lo, hi));
  }

  GadgetReport r;
  r.order = n;
  r.anchors = anchors;
  r.examined = total;
  for (auto& f : parts)
    for (Mask gray : f.get()) {
      std::vector<int> col(static_cast<std::size_t>(n));
      for (Vertex v = 0; v < n; ++v) col[v] = (gray >> v & 1U) ? kGray : kWhite;
      if (!is_legal_partition(g, Partition(2, col)))
        throw std::logic_error("bitmask legality disagrees with is_legal_partition");
      r.legal.push_back(std::move(col));
    }
  if (!r.legal.empty())
    for (Vertex v = 0; v < n; ++v) {
      const int c = r.legal.front()[v];
      if (std::all_of(r.legal.begin(), r.legal.end(), [&](const auto& col) { return col[v] == c; })) r.forced[v] = c;
    }
  return r;
}

namespace {

const char* color_name(int c) { return c == kGray ? "gray" : "white"; }

std::string set_of(const Graph& g, const std::vector<int>& col, int c) {
  std::string s = "{";
  for (Vertex v = 0; v < g.order(); ++v)
    if (col[v] == c) s += (s.size() > 1 ? "," : "") + g.label(v);
  return s + "}";
}

Vertex at(const Graph& g, std::string_view label) { return anchor_at(g, label, kWhite).vertex; }

bool all_legal(const GadgetReport& r, auto pred) {
  return !r.legal.empty() && std::all_of(r.legal.begin(), r.legal.end(), pred);
}

// Literal colour patterns that occur, as bit strings (1 = gray).
std::set<std::string> literal_patterns(const Graph& g, const GadgetReport& r, const std::vector<std::string>& lits) {
  std::set<std::string> out;
  for (const auto& col : r.legal) {
    std::string p;
    for (const auto& l : lits) p += col[at(g, l)] == kGray ? '1' : '0';
    out.insert(p);
  }
  return out;
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : " ") + x;
  return out;
}

// Every pattern except all-white must appear, and all-white must not.
bool all_but_white(const std::set<std::string>& pats, std::size_t width) {
  return pats.size() == (std::size_t{1} << width) - 1 && !pats.count(std::string(width, '0'));
}

}  // namespace

std::vector<std::string> lemma_ids() { return {"L1", "L2", "L3", "L4", "L5", "L6"}; }

LemmaCertificate verify_lemma(std::string_view id, const EnumerateOptions& opt) {
  LemmaCertificate c;
  c.id = std::string(id);
  auto& d = c.details;

  if (id == "L1") {
    c.statement = "block B with vertex 1 gray has exactly one legal colouring, white set {2,4}";
    c.gadget = basic_block_b();
    c.report = enumerate_legal(c.gadget, {anchor_at(c.gadget, "1", kGray)}, opt);
    c.pass = c.report.unique() && set_of(c.gadget, c.report.legal[0], kWhite) == "{2,4}";
    if (!c.report.legal.empty()) d.push_back("white " + set_of(c.gadget, c.report.legal[0], kWhite));
  } else if (id == "L2") {
    c.statement = "variable gadget (degree 6): both a-vertices share a colour and abar takes the other";
    c.gadget = variable_gadget_md6();
    const Graph& g = c.gadget;
    const Vertex a1 = at(g, "a1"), a2 = at(g, "a2"), ab = at(g, "abar");
    auto ok = [&](const auto& col) { return col[a1] == col[a2] && col[ab] != col[a1]; };
    c.report = enumerate_legal(g, {anchor_at(g, "B.1", kGray)}, opt);
    const auto free = enumerate_legal(g, {}, opt);
    c.pass = all_legal(c.report, ok) && all_legal(free, ok);
    d.push_back("anchored (B.1 gray): " + std::to_string(c.report.legal.size()) + " legal, a1=" +
                color_name(c.report.legal.empty() ? 0 : c.report.legal[0][a1]));
    d.push_back("unanchored: " + std::to_string(free.legal.size()) + " legal");
  } else if (id == "L3") {
    c.statement = "clause gadget (degree 6): left 0 white forces right 0 and the next left 0 white; "
                  "literals take every pattern except all white";
    c.gadget = clause_link_md6();
    const Graph& g = c.gadget;
    c.report = enumerate_legal(g, {anchor_at(g, "0L", kWhite)}, opt);
    const Vertex zr = at(g, "0R"), next = at(g, "next.0L");
    const bool forced = all_legal(c.report, [&](const auto& col) { return col[zr] == kWhite && col[next] == kWhite; });
    const auto pats = literal_patterns(g, c.report, {"l1", "l2", "l3"});
    c.pass = forced && all_but_white(pats, 3);
    d.push_back(std::to_string(c.report.legal.size()) + " legal; literal patterns (1 = gray): " + join(pats));
  } else if (id == "L4") {
    c.statement = "variable gadget (degree 5) with top a white has exactly one legal colouring; "
                  "bottom a white, abar gray";
    c.gadget = variable_gadget_md5();
    const Graph& g = c.gadget;
    c.report = enumerate_legal(g, {anchor_at(g, "atop", kWhite)}, opt);
    c.pass = c.report.unique() && c.report.legal[0][at(g, "abot")] == kWhite && c.report.legal[0][at(g, "abar")] == kGray;
    if (!c.report.legal.empty()) d.push_back("white " + set_of(g, c.report.legal[0], kWhite));
  } else if (id == "L5") {
    c.statement = "clause chain (degree 5): white 0-vertices force the next clause's 0-vertices white; "
                  "literals take every pattern except all white";
    c.gadget = clause_link_md5();
    const Graph& g = c.gadget;
    c.report = enumerate_legal(
        g, {anchor_at(g, "L.z0", kWhite), anchor_at(g, "L.z1", kWhite), anchor_at(g, "L.z2", kWhite)}, opt);
    const Vertex r0 = at(g, "R.z0"), r1 = at(g, "R.z1"), r2 = at(g, "R.z2");
    const bool forced = all_legal(
        c.report, [&](const auto& col) { return col[r0] == kWhite && col[r1] == kWhite && col[r2] == kWhite; });
    const auto pats = literal_patterns(g, c.report, {"L.l1", "L.l2", "L.l3"});
    c.pass = forced && all_but_white(pats, 3);
    d.push_back(std::to_string(c.report.legal.size()) + " legal; left literal patterns: " + join(pats));
    // Propagation table: colours of the link path per left literal pattern.
    std::map<std::string, std::set<std::string>> table;
    for (const auto& col : c.report.legal) {
      std::string key, link;
      for (const char* l : {"L.l1", "L.l2", "L.l3"}) key += col[at(g, l)] == kGray ? 'g' : 'w';
      for (const char* l : {"K.1", "K.2", "K.3", "R.z0", "R.z1", "R.z2"}) link += col[at(g, l)] == kGray ? 'g' : 'w';
      table[key].insert(link);
    }
    for (const auto& [k, v] : table) {
      std::string row = "  literals " + k + " -> K.1 K.2 K.3 R.z0 R.z1 R.z2 in {";
      for (const auto& x : v) row += " " + x;
      d.push_back(row + " }");
    }
  } else if (id == "L6") {
    c.statement = "starter gadget with vertex 1 gray has exactly one legal colouring and its three 0-vertices share a colour";
    c.gadget = starter_gadget();
    const Graph& g = c.gadget;
    const Vertex z0 = at(g, "z0"), z1 = at(g, "z1"), z2 = at(g, "z2");
    auto same = [&](const auto& col) { return col[z0] == col[z1] && col[z1] == col[z2]; };
    c.report = enumerate_legal(g, {anchor_at(g, "1", kGray)}, opt);
    const auto free = enumerate_legal(g, {}, opt);
    c.pass = c.report.unique() && same(c.report.legal[0]) && all_legal(free, same);
    if (!c.report.legal.empty()) d.push_back("white " + set_of(g, c.report.legal[0], kWhite));
    d.push_back("unanchored: " + std::to_string(free.legal.size()) + " legal, 0-vertices uniform in all");
    d.push_back("max degree " + std::to_string(max_degree(g)));
  } else {
    throw std::invalid_argument("unknown lemma id '" + std::string(id) + "'");
  }
  return c;
}

std::string LemmaCertificate::summary() const {
  std::ostringstream out;
  out << id << ' ' << (pass ? "PASS" : "FAIL") << "  n=" << gadget.order() << " m=" << gadget.size()
      << " examined=" << report.examined << " legal=" << report.legal.size() << "  " << statement << '\n';
  for (const auto& line : details) out << "    " << line << '\n';
  return out.str();
}

std::string LemmaCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["lemma"] = id;
  j["statement"] = statement;
  j["verdict"] = pass ? "pass" : "fail";
  std::vector<std::string> labels;
  for (Vertex v = 0; v < gadget.order(); ++v) labels.push_back(gadget.label(v));
  j["vertices"] = labels;
  j["edges"] = gadget.edges();
  auto& an = j["anchors"] = nlohmann::ordered_json::array();
  for (const auto& a : report.anchors) an.push_back({{"vertex", a.vertex}, {"color", color_name(a.color)}});
  j["examined"] = report.examined;
  j["legal"] = report.legal;
  auto& fo = j["forced"] = nlohmann::ordered_json::object();
  for (auto [v, col] : report.forced) fo[gadget.label(v)] = color_name(col);
  j["details"] = details;
  return j.dump(1) + "\n";
}

}  // namespace lva
