#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "leafsearch/error.hpp"

namespace leafsearch::io {

namespace {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  // Next line that is neither blank nor a comment starting with `comment`.
  bool next(std::istringstream& fields, char comment = 'c') {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == comment) continue;
      fields = std::istringstream(line);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, source_ + ":" + std::to_string(line_no_) + ": " + what);
  }

  template <typename T>
  T take(std::istringstream& fields, const char* what) const {
    T value;
    if (!(fields >> value)) fail(std::string("expected ") + what);
    return value;
  }

  void expect_end(std::istringstream& fields) const {
    std::string extra;
    if (fields >> extra) fail("unexpected token '" + extra + "'");
  }

 private:
  std::istream& in_;
  std::string source_;
  int line_no_ = 0;
};

std::ifstream open(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::Parse, path + ": cannot open file");
  return f;
}

void expect_tag(LineReader& r, std::istringstream& fields, char head, const std::string& tag) {
  const auto h = r.take<std::string>(fields, "header");
  if (h != std::string(1, head)) r.fail("expected '" + std::string(1, head) + " " + tag + "' header");
  const auto t = r.take<std::string>(fields, "header tag");
  if (!tag.empty() && t != tag) r.fail("expected header tag '" + tag + "', got '" + t + "'");
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::istringstream fields;
  if (!r.next(fields)) r.fail("missing 'p' header");
  expect_tag(r, fields, 'p', "");
  const int n = r.take<int>(fields, "vertex count");
  const int m = r.take<int>(fields, "edge count");
  r.expect_end(fields);
  if (n < 1) r.fail("vertex count must be positive");
  if (m < 0) r.fail("edge count must be non-negative");
  std::vector<Edge> edges;
  while (static_cast<int>(edges.size()) < m) {
    if (!r.next(fields)) r.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    const int u = r.take<int>(fields, "edge endpoint");
    const int v = r.take<int>(fields, "edge endpoint");
    r.expect_end(fields);
    if (u < 1 || u > n || v < 1 || v > n) r.fail("vertex id out of range 1.." + std::to_string(n));
    edges.emplace_back(u - 1, v - 1);
  }
  if (r.next(fields)) r.fail("more edge lines than the header declares");
  try {
    return Graph(n, edges);
  } catch (const Error& e) {
    std::string what = e.what();
    const auto colon = what.find(": ");
    throw Error(e.kind(), source + ": " + (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
}

Graph read_graph_file(const std::string& path) {
  auto f = open(path);
  return read_graph(f, path);
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p tw " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

TreeDecomposition read_td(std::istream& in, int n, const std::string& source) {
  LineReader r(in, source);
  std::istringstream fields;
  if (!r.next(fields)) r.fail("missing 's td' header");
  expect_tag(r, fields, 's', "td");
  const int nb = r.take<int>(fields, "bag count");
  const int cap = r.take<int>(fields, "largest bag size");
  const int nv = r.take<int>(fields, "vertex count");
  r.expect_end(fields);
  if (nv != n) r.fail("decomposition is for " + std::to_string(nv) + " vertices, graph has " + std::to_string(n));
  if (nb < 1) r.fail("bag count must be positive");
  TreeDecomposition td;
  td.bags.resize(nb);
  std::vector<bool> seen(nb, false);
  for (int i = 0; i < nb; ++i) {
    if (!r.next(fields)) r.fail("expected " + std::to_string(nb) + " bag lines");
    if (r.take<std::string>(fields, "'b'") != "b") r.fail("expected a 'b' line");
    const int id = r.take<int>(fields, "bag id");
    if (id < 1 || id > nb) r.fail("bag id out of range");
    if (seen[id - 1]) r.fail("bag " + std::to_string(id) + " listed twice");
    seen[id - 1] = true;
    int v;
    while (fields >> v) {
      if (v < 1 || v > n) r.fail("vertex id out of range 1.." + std::to_string(n));
      td.bags[id - 1].push_back(v - 1);
    }
    if (!fields.eof()) r.fail("bad vertex id");
    if (static_cast<int>(td.bags[id - 1].size()) > cap) r.fail("bag larger than the header allows");
    std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
  }
  while (r.next(fields)) {
    const int a = r.take<int>(fields, "bag id");
    const int b = r.take<int>(fields, "bag id");
    r.expect_end(fields);
    if (a < 1 || a > nb || b < 1 || b > nb) r.fail("tree edge names an unknown bag");
    td.edges.emplace_back(a - 1, b - 1);
  }
  return td;
}

TreeDecomposition read_td_file(const std::string& path, int n) {
  auto f = open(path);
  return read_td(f, n, path);
}

void write_td(std::ostream& out, const TreeDecomposition& td, int n) {
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
}

std::pair<std::vector<gadgets::Clause>, int> read_cnf(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::istringstream fields;
  if (!r.next(fields)) r.fail("missing 'p cnf' header");
  expect_tag(r, fields, 'p', "cnf");
  const int vars = r.take<int>(fields, "variable count");
  const int count = r.take<int>(fields, "clause count");
  r.expect_end(fields);
  if (vars < 1 || count < 1) r.fail("variable and clause counts must be positive");
  std::vector<gadgets::Clause> clauses;
  std::vector<int> pending;
  while (r.next(fields)) {
    int lit;
    while (fields >> lit) {
      if (lit == 0) {
        if (pending.size() != 3) r.fail("clause has " + std::to_string(pending.size()) + " literals, expected 3");
        clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (lit < -vars || lit > vars) r.fail("literal " + std::to_string(lit) + " exceeds the variable count");
      pending.push_back(lit);
    }
    if (!fields.eof()) r.fail("bad literal");
  }
  if (!pending.empty()) r.fail("last clause is not terminated by 0");
  if (static_cast<int>(clauses.size()) != count)
    r.fail("header declares " + std::to_string(count) + " clauses, found " + std::to_string(clauses.size()));
  return {clauses, vars};
}

SetCoverInstance read_setcover(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::istringstream fields;
  if (!r.next(fields)) r.fail("missing 'p setcover' header");
  expect_tag(r, fields, 'p', "setcover");
  SetCoverInstance inst;
  inst.universe = r.take<int>(fields, "universe size");
  const int count = r.take<int>(fields, "set count");
  r.expect_end(fields);
  if (inst.universe < 1 || count < 1) r.fail("universe and set count must be positive");
  while (r.next(fields)) {
    std::vector<int> set;
    int e;
    while (fields >> e) {
      if (e < 1 || e > inst.universe) r.fail("element out of range 1.." + std::to_string(inst.universe));
      set.push_back(e - 1);
    }
    if (!fields.eof()) r.fail("bad element");
    inst.sets.push_back(std::move(set));
  }
  if (static_cast<int>(inst.sets.size()) != count)
    r.fail("header declares " + std::to_string(count) + " sets, found " + std::to_string(inst.sets.size()));
  return inst;
}

GrundyInstance read_grundy(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::istringstream fields;
  if (!r.next(fields)) r.fail("missing 'p grundy' header");
  expect_tag(r, fields, 'p', "grundy");
  GrundyInstance inst;
  inst.nx = r.take<int>(fields, "|X|");
  inst.ny = r.take<int>(fields, "|Y|");
  const int m = r.take<int>(fields, "edge count");
  r.expect_end(fields);
  if (inst.nx < 1 || inst.ny < 1 || m < 0) r.fail("bad sizes");
  while (r.next(fields)) {
    const int x = r.take<int>(fields, "x");
    const int y = r.take<int>(fields, "y");
    r.expect_end(fields);
    if (x < 1 || x > inst.nx || y < 1 || y > inst.ny) r.fail("endpoint out of range");
    inst.edges.emplace_back(x - 1, y - 1);
  }
  if (static_cast<int>(inst.edges.size()) != m)
    r.fail("header declares " + std::to_string(m) + " edges, found " + std::to_string(inst.edges.size()));
  return inst;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::string s = text;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::vector<Vertex> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0) throw Error(ErrorKind::Parse, "ordering: bad vertex id '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace leafsearch::io
