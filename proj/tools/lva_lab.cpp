// lva-lab: command-line front end. Exit codes: 0 yes / success, 1 no /
// failure found, 2 usage, parse or I/O error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lva/encode.hpp"
#include "lva/gadgetlab.hpp"
#include "lva/io.hpp"
#include "lva/predicates.hpp"
#include "lva/reduction.hpp"
#include "lva/search.hpp"

using namespace lva;

namespace {

constexpr int kYes = 0, kNo = 1, kError = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

std::string witness_line(const Partition& p) {
  std::string s = "witness";
  for (int c : p.classes()) s += " " + std::to_string(c);
  return s;
}

struct Common {
  std::string engine = "oracle";
  int limit_n = 20;
  long long budget = -1;

  EngineOptions engine_options() const {
    EngineOptions o;
    o.engine = engine == "sat" ? Engine::Sat : Engine::Oracle;
    o.oracle.max_vertices = limit_n;
    o.sat.conflict_budget = budget;
    return o;
  }
};

int cmd_lva(const std::string& path, int k, const Common& c) {
  const Graph g = read_graph_file(path);
  std::cout << "graph n=" << g.order() << " m=" << g.size() << " max_degree=" << max_degree(g) << '\n';
  const auto opt = c.engine_options();
  if (k > 0) {
    auto p = decide_lva(g, k, opt);
    if (!p) {
      std::cout << "verdict no (lva > " << k << ")\n";
      return kNo;
    }
    std::cout << "verdict yes (lva <= " << k << ")\n" << witness_line(*p) << '\n';
    return kYes;
  }
  auto r = lva_value(g, std::max(1, g.order()), opt);
  std::cout << "lva " << r->value << '\n' << witness_line(r->witness) << '\n';
  return kYes;
}

int cmd_encode(const std::string& path, int k, const std::string& format, const std::string& out) {
  const Graph g = read_graph_file(path);
  const VarMap map(g.order(), k);
  const std::string text = format == "lp" ? emit_lp(build_ilp(g, k), &map) : emit_dimacs(build_cnf(g, k));
  if (out.empty()) {
    std::cout << text;
    return kYes;
  }
  spit(out, text);
  spit(out + ".varmap.json", map.to_json());
  std::cerr << "wrote " << out << " and " << out << ".varmap.json (" << map.total() << " variables)\n";
  return kYes;
}

int cmd_reduce(const std::string& path, const std::string& variant, const std::string& out) {
  const auto inst = parse_r3sat(slurp(path));
  if (auto v = validate_instance(inst); !v.empty()) {
    for (const auto& x : v) std::cout << "violation " << x.message << '\n';
    return kError;
  }
  const Variant var = variant == "md5" ? Variant::Md5 : Variant::Md6;
  const auto r = reduce(inst, var);
  const int bound = var == Variant::Md5 ? 5 : 6;
  const int d = max_degree(r.graph);
  std::cout << "reduction " << variant << " vertices=" << r.graph.order() << " edges=" << r.graph.size()
            << " max_degree=" << d << " bound=" << bound << " audit=" << (d <= bound ? "ok" : "FAIL") << '\n';
  if (out.empty()) {
    std::cout << emit_labeled(r.graph);
  } else {
    spit(out, emit_labeled(r.graph));
    spit(out + ".map.json", r.mapping_json());
  }
  return d <= bound ? kYes : kNo;
}

int cmd_verify_lemmas(const std::string& json_dir) {
  EnumerateOptions opt;
  opt.threads = default_thread_count();
  bool all = true;
  for (const auto& id : lemma_ids()) {
    const auto c = verify_lemma(id, opt);
    std::cout << c.summary();
    if (!json_dir.empty()) spit(json_dir + "/" + id + ".json", c.to_json());
    all = all && c.pass;
  }
  std::cout << (all ? "all lemmas pass\n" : "some lemmas FAIL\n");
  return all ? kYes : kNo;
}

int cmd_search(const std::string& path, const SearchOptions& opt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  const auto s = run_search(in, opt);
  for (const auto& r : s.records) {
    static const char* names[] = {"yes", "no", "filtered", "error"};
    std::cout << "line " << r.line << ' ' << r.text << ' ' << names[static_cast<int>(r.status)];
    if (!r.detail.empty()) std::cout << " (" << r.detail << ')';
    std::cout << '\n';
  }
  std::cout << "summary lines=" << s.lines << " decided=" << s.decided << " yes=" << s.yes << " no=" << s.no
            << " filtered=" << s.filtered << " errors=" << s.errors << '\n';
  for (const auto& r : s.counterexamples()) std::cout << "counterexample line " << r.line << ' ' << r.text << '\n';
  return s.no == 0 ? kYes : kNo;
}

int cmd_decode(const std::string& path, int k, const std::string& model, const std::string& map_path) {
  const Graph g = read_graph_file(path);
  const VarMap map = map_path.empty() ? VarMap(g.order(), k) : VarMap::from_json(slurp(map_path));
  const Partition p = decode_model(g, map.k(), map, parse_model(slurp(model), map.total()));
  const bool legal = is_legal_partition(g, p);
  std::cout << (legal ? "legal" : "illegal") << '\n' << witness_line(p) << '\n';
  return legal ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear vertex arboricity toolkit"};
  app.require_subcommand(1);

  std::string input, out, format = "cnf", variant = "md6", model, map_path, json_dir;
  int k = 0;
  Common common;
  SearchOptions sopt;

  auto add_engine = [&](CLI::App* s) {
    s->add_option("--engine", common.engine, "oracle or sat")->check(CLI::IsMember({"oracle", "sat"}));
    s->add_option("--limit-n", common.limit_n, "largest graph accepted");
    s->add_option("--budget", common.budget, "SAT conflict budget (-1: none)");
  };

  auto* lva = app.add_subcommand("lva", "decide lva <= k, or compute lva without --k");
  lva->add_option("graph", input, "graph6 or labeled graph file")->required();
  lva->add_option("--k", k, "number of classes")->check(CLI::PositiveNumber);
  add_engine(lva);

  auto* enc = app.add_subcommand("encode", "write the SAT or ILP model for (graph, k)");
  enc->add_option("graph", input)->required();
  enc->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  enc->add_option("--format", format, "cnf or lp")->check(CLI::IsMember({"cnf", "lp"}));
  enc->add_option("--out", out, "output file; a .varmap.json sidecar is written next to it");

  auto* red = app.add_subcommand("reduce", "build the reduction graph for a restricted 3-SAT formula");
  red->add_option("formula", input)->required();
  red->add_option("--variant", variant, "md6 or md5")->check(CLI::IsMember({"md6", "md5"}));
  red->add_option("--out", out, "labeled graph file; a .map.json is written next to it");

  auto* ver = app.add_subcommand("verify-lemmas", "run all gadget certificates");
  ver->add_option("--out", json_dir, "directory for JSON certificates");

  auto* sea = app.add_subcommand("search", "decide lva <= k over a graph6 corpus");
  sea->add_option("corpus", input)->required();
  sea->add_option("--k", sopt.k)->check(CLI::PositiveNumber);
  sea->add_option("--max-degree", sopt.max_degree);
  sea->add_option("--min-connectivity", sopt.min_connectivity);
  add_engine(sea);

  auto* dec = app.add_subcommand("decode", "decode an external SAT model into a partition");
  dec->add_option("graph", input)->required();
  dec->add_option("--model", model, "model file of signed literals")->required();
  dec->add_option("--k", k)->check(CLI::PositiveNumber);
  dec->add_option("--map", map_path, "varmap sidecar (overrides --k)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }

  try {
    if (*lva) return cmd_lva(input, k, common);
    if (*enc) return cmd_encode(input, k, format, out);
    if (*red) return cmd_reduce(input, variant, out);
    if (*ver) return cmd_verify_lemmas(json_dir);
    if (*sea) {
      sopt.limit_n = common.limit_n;
      sopt.engine = common.engine_options();
      sopt.threads = default_thread_count();
      return cmd_search(input, sopt);
    }
    if (*dec) {
      if (k < 1 && map_path.empty()) throw std::invalid_argument("decode needs --k or --map");
      return cmd_decode(input, k, model, map_path);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error (" << e.offset() << "): " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kError;
}
