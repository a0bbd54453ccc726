#include "ehf/io.hpp"

#include <fstream>
#include <sstream>

namespace ehf {

namespace {

// Strips comments and reports remaining tokens; returns false for blank lines.
bool tokenize(const std::string& line, std::vector<std::string>& tokens) {
  tokens.clear();
  std::string body = line;
  auto hash = body.find('#');
  if (hash != std::string::npos) body = body.substr(0, hash);
  std::istringstream ss(body);
  std::string t;
  while (ss >> t) tokens.push_back(t);
  return !tokens.empty();
}

long long parse_ll(const std::string& t, int lineno) {
  try {
    size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (...) {
    throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" + t + "'");
  }
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  bool dimacs = false;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> tok;
  while (std::getline(in, line)) {
    lineno++;
    if (!tokenize(line, tok)) continue;
    if (tok[0] == "c") continue;  // DIMACS comment
    if (tok[0] == "p") {
      if (tok.size() != 4 || tok[1] != "edge")
        throw ParseError("line " + std::to_string(lineno) + ": bad DIMACS problem line");
      n = parse_ll(tok[2], lineno);
      m = parse_ll(tok[3], lineno);
      dimacs = true;
      continue;
    }
    if (tok[0] == "e") {
      if (!dimacs || tok.size() != 3)
        throw ParseError("line " + std::to_string(lineno) + ": unexpected edge line");
      long long u = parse_ll(tok[1], lineno), v = parse_ll(tok[2], lineno);
      if (u < 1 || v < 1 || u > n || v > n || u == v)
        throw ParseError("line " + std::to_string(lineno) + ": edge endpoint out of range");
      edges.push_back({(int)u - 1, (int)v - 1});
      continue;
    }
    if (n < 0) {
      if (tok.size() != 2)
        throw ParseError("line " + std::to_string(lineno) + ": expected 'n m' header");
      n = parse_ll(tok[0], lineno);
      m = parse_ll(tok[1], lineno);
      if (n < 0 || m < 0)
        throw ParseError("line " + std::to_string(lineno) + ": negative header values");
      continue;
    }
    if (tok.size() != 2)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v' edge line");
    long long u = parse_ll(tok[0], lineno), v = parse_ll(tok[1], lineno);
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw ParseError("line " + std::to_string(lineno) + ": edge endpoint out of range");
    if (u > v) std::swap(u, v);
    edges.push_back({(int)u, (int)v});
  }
  if (n < 0) throw ParseError("empty graph file");
  if (m >= 0 && (long long)edges.size() != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, file has " +
                     std::to_string(edges.size()));
  return make_graph((int)n, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  auto e = g.edges();
  out << g.n << " " << e.size() << "\n";
  for (auto [u, v] : e) out << u << " " << v << "\n";
}

void write_graph_dimacs(std::ostream& out, const Graph& g) {
  auto e = g.edges();
  out << "p edge " << g.n << " " << e.size() << "\n";
  for (auto [u, v] : e) out << "e " << u + 1 << " " << v + 1 << "\n";
}

std::map<int, Rat> read_weights(std::istream& in) {
  std::map<int, Rat> w;
  std::string line;
  int lineno = 0;
  std::vector<std::string> tok;
  while (std::getline(in, line)) {
    lineno++;
    if (!tokenize(line, tok)) continue;
    if (tok.size() != 2 && tok.size() != 3)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'v num den' or 'v int'");
    long long v = parse_ll(tok[0], lineno);
    long long num = parse_ll(tok[1], lineno);
    long long den = tok.size() == 3 ? parse_ll(tok[2], lineno) : 1;
    if (den == 0) throw ParseError("line " + std::to_string(lineno) + ": zero denominator");
    Rat r(num, den);
    if (r < Rat(0)) throw ParseError("line " + std::to_string(lineno) + ": negative weight");
    w[(int)v] = r;
  }
  return w;
}

std::map<int, Rat> read_weights_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open weight file: " + path);
  return read_weights(in);
}

}  // namespace ehf
