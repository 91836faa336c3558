#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "io.hpp"
#include "leafsearch/gadgets.hpp"
#include "leafsearch/gs_solvers.hpp"
#include "leafsearch/internal_xp.hpp"
#include "leafsearch/layered_dp.hpp"
#include "leafsearch/oracle.hpp"

using namespace leafsearch;
using nlohmann::json;

namespace {

constexpr int kYes = 0, kNo = 1, kError = 2;

struct SolveArgs {
  std::string graph, paradigm = "bfs", problem = "min-leaf", algo = "auto", td;
  int k = 1;
  int threads = 1;
  bool json = false;
};

struct Record {
  std::string problem, paradigm, algorithm;
  int k = 0;
  bool yes = false;
  std::optional<int> optimum;
  std::optional<Ordering> witness;
  double millis = 0;
};

bool is_leaf_problem(const std::string& p) { return p == "min-leaf" || p == "max-leaf"; }
bool is_min_problem(const std::string& p) { return p == "min-leaf" || p == "min-internal"; }

[[noreturn]] void unsupported(const std::string& what) { throw Error(ErrorKind::Unsupported, what); }

Record solve_oracle(const Graph& g, Paradigm p, const std::string& problem, int k) {
  Record r;
  r.algorithm = "oracle";
  const auto range = oracle::brute_leaf_range(g, p);
  const int n = g.n();
  if (problem == "min-leaf") {
    r.optimum = range.min, r.yes = range.min <= k, r.witness = range.min_witness;
  } else if (problem == "max-leaf") {
    r.optimum = range.max, r.yes = range.max >= k, r.witness = range.max_witness;
  } else if (problem == "min-internal") {
    r.optimum = n - range.max, r.yes = n - range.max <= k, r.witness = range.max_witness;
  } else {
    r.optimum = n - range.min, r.yes = n - range.min >= k, r.witness = range.min_witness;
  }
  if (!r.yes) r.witness.reset();
  return r;
}

Record solve_leaf(const Graph& g, Paradigm p, const SolveArgs& a) {
  Record r;
  const bool min = a.problem == "min-leaf";
  if (p != Paradigm::GS) {
    if (a.algo != "auto" && a.algo != "dp") unsupported("BFS/LBFS leaf problems use --algo dp or oracle");
    layered::Config cfg;
    cfg.threads = a.threads;
    auto res = layered::solve(g, p, min ? layered::Objective::Min : layered::Objective::Max, a.k, cfg);
    r.algorithm = "dp";
    r.yes = res.yes;
    r.witness = res.witness;
    return r;
  }
  if (min) {
    if (a.algo != "auto" && a.algo != "tw") unsupported("GS min-leaf uses --algo tw or oracle");
    gs::MinLeafOptions opt;
    opt.dp.threads = a.threads;
    if (!a.td.empty()) opt.td = io::read_td_file(a.td, g.n());
    auto res = gs::min_leaf_gs(g, a.k, opt);
    r.algorithm = "tw";
    r.yes = res.yes;
    r.witness = res.witness;
    r.optimum = res.optimum;
    return r;
  }
  if (a.algo != "auto" && a.algo != "xp") unsupported("GS max-leaf uses --algo xp or oracle");
  auto res = gs::max_leaf_gs(g, a.k);
  r.algorithm = "xp";
  r.yes = res.yes;
  r.witness = res.witness;
  if (res.optimum) r.optimum = g.n() - *res.optimum;
  return r;
}

Record solve_internal(const Graph& g, Paradigm p, const SolveArgs& a) {
  if (p == Paradigm::LBFS)
    unsupported("LBFS " + a.problem +
                " has no polynomial or parameterised algorithm here (NP-hard even on weakly chordal graphs); "
                "use --algo oracle on small graphs");
  if (a.algo != "auto" && a.algo != "xp") unsupported("internal-vertex problems use --algo xp or oracle");
  const bool min = a.problem == "min-internal";
  xp::Result res;
  if (p == Paradigm::BFS)
    res = xp::bfs_internal_xp(g, a.k, min ? xp::Objective::Min : xp::Objective::Max);
  else
    res = min ? xp::gs_min_internal_xp(g, a.k) : xp::gs_max_internal_xp(g, a.k);
  Record r;
  r.algorithm = "xp";
  r.yes = res.yes;
  r.witness = res.witness;
  return r;
}

Record solve(const Graph& g, const SolveArgs& a) {
  const Paradigm p = paradigm_from_string(a.paradigm);
  if (a.k < 1) throw Error(ErrorKind::BadParameter, "-k must be at least 1");
  if (!a.td.empty() && !(p == Paradigm::GS && a.problem == "min-leaf"))
    throw Error(ErrorKind::BadParameter, "--td only applies to GS min-leaf");
  const auto start = std::chrono::steady_clock::now();
  Record r;
  if (a.algo == "oracle") {
    r = solve_oracle(g, p, a.problem, a.k);
  } else if (g.n() == 1) {
    // One vertex: no leaves, one internal vertex.
    const int value = is_leaf_problem(a.problem) ? 0 : 1;
    r.algorithm = "trivial";
    r.optimum = value;
    r.yes = is_min_problem(a.problem) ? value <= a.k : value >= a.k;
    if (r.yes) r.witness = Ordering({0});
  } else if (is_leaf_problem(a.problem)) {
    r = solve_leaf(g, p, a);
  } else {
    r = solve_internal(g, p, a);
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.problem = a.problem;
  r.paradigm = a.paradigm;
  r.k = a.k;
  if (r.witness && !validate_ordering(g, *r.witness, p))
    throw Error(ErrorKind::AssumptionViolated, "witness does not revalidate");
  return r;
}

json witness_json(const Graph& g, const Ordering& o) {
  const FTree t = ftree_from_ordering(g, o);
  return {{"ordering", o.seq()}, {"parent", t.parent}, {"leaves", t.leaf_count()}, {"internal", t.internal_count()}};
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

void print_record(const Graph& g, const Record& r, bool as_json) {
  if (as_json) {
    json j = {{"problem", r.problem},
              {"paradigm", r.paradigm},
              {"objective", is_min_problem(r.problem) ? "min" : "max"},
              {"k", r.k},
              {"algorithm", r.algorithm},
              {"decision", r.yes ? "yes" : "no"},
              {"optimum", r.optimum ? json(*r.optimum) : json(nullptr)},
              {"witness", r.witness ? witness_json(g, *r.witness) : json(nullptr)},
              {"timings_ms", {{"solve", r.millis}}}};
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << (r.yes ? "yes" : "no") << '\n';
  if (r.optimum) std::cout << "optimum " << *r.optimum << '\n';
  if (r.witness) {
    const FTree t = ftree_from_ordering(g, *r.witness);
    std::cout << "ordering " << join(r.witness->seq()) << '\n';
    std::cout << "parent " << join(t.parent) << '\n';
    std::cout << "leaves " << t.leaf_count() << " internal " << t.internal_count() << '\n';
  }
}

int default_threads() {
  if (const char* env = std::getenv("LEAFSEARCH_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::vector<std::string> paradigm_names() { return {"gs", "bfs", "lbfs"}; }

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::Parse, path + ": cannot write file");
  return f;
}

void emit_graph(const Graph& g, const std::vector<std::string>& comments, const std::string& out_path) {
  if (out_path.empty()) {
    io::write_graph(std::cout, g, comments);
  } else {
    auto f = open_out(out_path);
    io::write_graph(f, g, comments);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leaf and internal-vertex optimisation over graph search trees"};
  app.require_subcommand(1);

  SolveArgs sa;
  sa.threads = default_threads();
  auto* solve_cmd = app.add_subcommand("solve", "Decide whether an F-tree meets the leaf or internal bound");
  solve_cmd->add_option("--graph", sa.graph, ".gr graph file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--paradigm", sa.paradigm)->check(CLI::IsMember(paradigm_names()));
  solve_cmd->add_option("--problem", sa.problem)
      ->check(CLI::IsMember({"min-leaf", "max-leaf", "min-internal", "max-internal"}));
  solve_cmd->add_option("-k", sa.k, "bound on leaves or internal vertices")->required();
  solve_cmd->add_option("--algo", sa.algo)->check(CLI::IsMember({"auto", "dp", "xp", "tw", "oracle"}));
  solve_cmd->add_option("--td", sa.td, ".td decomposition (GS min-leaf only)")->check(CLI::ExistingFile);
  solve_cmd->add_option("--threads", sa.threads, "worker cap (default $LEAFSEARCH_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--json", sa.json);

  std::string o_graph, o_paradigm;
  bool o_csv = false, o_json = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive leaf/internal ranges");
  oracle_cmd->add_option("--graph", o_graph)->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--paradigm", o_paradigm, "default: all three")->check(CLI::IsMember(paradigm_names()));
  oracle_cmd->add_flag("--csv", o_csv);
  oracle_cmd->add_flag("--json", o_json);

  std::string g_family, g_out;
  int g_param = 0;
  auto* gen_cmd = app.add_subcommand("generate", "Write a graph from a named family");
  gen_cmd->add_option("--family", g_family)
      ->required()
      ->check(CLI::IsMember({"path_of_triangles", "star_of_ladders", "path", "cycle", "complete", "star"}));
  gen_cmd->add_option("-p,--param", g_param)->required();
  gen_cmd->add_option("-o,--output", g_out);

  std::string r_kind, r_input, r_out;
  int r_k = 3;
  bool r_json = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build a hardness gadget from a source instance");
  reduce_cmd->add_option("kind", r_kind)->required()->check(CLI::IsMember({"setcover", "grundy", "3sat"}));
  reduce_cmd->add_option("--input,--cnf", r_input, "instance file")->required()->check(CLI::ExistingFile);
  reduce_cmd->add_option("-k", r_k, "target internal count (3sat)");
  reduce_cmd->add_option("-o,--output", r_out, "graph file; roles go to <file>.roles");
  reduce_cmd->add_flag("--json", r_json);

  std::string c_graph, c_ordering, c_paradigm = "gs";
  bool c_json = false;
  auto* check_cmd = app.add_subcommand("check", "Validate an ordering for a paradigm");
  check_cmd->add_option("--graph", c_graph)->required()->check(CLI::ExistingFile);
  check_cmd->add_option("--ordering", c_ordering, "0-based ids; '-' reads stdin")->required();
  check_cmd->add_option("--paradigm", c_paradigm)->check(CLI::IsMember(paradigm_names()));
  check_cmd->add_flag("--json", c_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*solve_cmd) {
      const Graph g = io::read_graph_file(sa.graph);
      const Record r = solve(g, sa);
      print_record(g, r, sa.json);
      return r.yes ? kYes : kNo;
    }

    if (*oracle_cmd) {
      const Graph g = io::read_graph_file(o_graph);
      std::vector<std::string> names = o_paradigm.empty() ? paradigm_names() : std::vector{o_paradigm};
      json rows = json::array();
      if (o_csv) std::cout << "paradigm,n,min_leaves,max_leaves,min_internal,max_internal\n";
      for (const auto& name : names) {
        const auto range = oracle::brute_leaf_range(g, paradigm_from_string(name));
        const int n = g.n();
        if (o_csv)
          std::cout << name << ',' << n << ',' << range.min << ',' << range.max << ',' << n - range.max << ','
                    << n - range.min << '\n';
        else if (o_json)
          rows.push_back({{"paradigm", name},
                          {"n", n},
                          {"min_leaves", range.min},
                          {"max_leaves", range.max},
                          {"min_internal", n - range.max},
                          {"max_internal", n - range.min},
                          {"min_witness", range.min_witness.seq()},
                          {"max_witness", range.max_witness.seq()}});
        else
          std::cout << name << ": leaves " << range.min << ".." << range.max << ", internal " << n - range.max
                    << ".." << n - range.min << '\n';
      }
      if (o_json) std::cout << rows.dump(2) << '\n';
      return 0;
    }

    if (*gen_cmd) {
      const Graph g = gadgets::gen_family(g_family, g_param);
      emit_graph(g, {g_family + " " + std::to_string(g_param)}, g_out);
      return 0;
    }

    if (*reduce_cmd) {
      std::ifstream in(r_input);
      std::optional<gadgets::ReductionOutput> out;
      if (r_kind == "setcover") {
        const auto inst = io::read_setcover(in, r_input);
        out = gadgets::set_cover_to_split(inst.universe, inst.sets);
      } else if (r_kind == "grundy") {
        const auto inst = io::read_grundy(in, r_input);
        out = gadgets::grundy_to_split(inst.nx, inst.ny, inst.edges);
      } else {
        const auto [clauses, vars] = io::read_cnf(in, r_input);
        out = gadgets::sat3_to_weakly_chordal(clauses, r_k, vars);
      }
      const Graph& g = out->graph;
      if (r_json) {
        json edges = json::array();
        for (auto [u, v] : g.edges()) edges.push_back({u, v});
        std::cout << json{{"n", g.n()}, {"edges", edges}, {"roles", out->roles}, {"translation", out->translation}}
                         .dump(2)
                  << '\n';
      }
      std::vector<std::string> comments{out->translation};
      if (r_out.empty()) {
        for (int v = 0; v < g.n(); ++v) comments.push_back("role " + std::to_string(v + 1) + " " + out->roles[v]);
        if (!r_json) emit_graph(g, comments, "");
      } else {
        emit_graph(g, comments, r_out);
        auto roles = open_out(r_out + ".roles");
        for (int v = 0; v < g.n(); ++v) roles << v + 1 << ' ' << out->roles[v] << '\n';
      }
      return 0;
    }

    if (*check_cmd) {
      const Graph g = io::read_graph_file(c_graph);
      if (c_ordering == "-") {
        std::ostringstream all;
        all << std::cin.rdbuf();
        c_ordering = all.str();
      }
      const auto seq = io::parse_vertex_list(c_ordering);
      bool valid = static_cast<int>(seq.size()) == g.n();
      std::vector<bool> seen(g.n(), false);
      for (Vertex v : seq) {
        if (v >= g.n() || seen[v]) valid = false;
        if (v < g.n()) seen[v] = true;
      }
      std::optional<Ordering> order;
      if (valid) {
        order = Ordering(seq);
        valid = validate_ordering(g, *order, paradigm_from_string(c_paradigm));
      }
      if (c_json) {
        json j = {{"paradigm", c_paradigm}, {"valid", valid}};
        if (valid) j["witness"] = witness_json(g, *order);
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << (valid ? "valid" : "invalid") << '\n';
        if (valid) {
          const FTree t = ftree_from_ordering(g, *order);
          std::cout << "leaves " << t.leaf_count() << " internal " << t.internal_count() << '\n';
        }
      }
      return valid ? kYes : kNo;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
