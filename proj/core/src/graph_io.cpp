#include <istream>
#include <ostream>
#include <stdexcept>

#include "tropical/applications.hpp"
#include "tropical/matrix_io.hpp"

namespace tropical::apps {

void EdgeListGraph::validate() const {
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (e.w.is_inf()) throw std::invalid_argument("infinite edge weight");
  }
}

WeightMatrix EdgeListGraph::adjacency() const {
  validate();
  WeightMatrix a(n, n);
  for (const auto& e : edges) {
    a(e.u, e.v) = min(a(e.u, e.v), e.w);
    if (!directed) a(e.v, e.u) = min(a(e.v, e.u), e.w);
  }
  return a;
}

EdgeListGraph read_graph(std::istream& in) {
  long long n = -1, m = -1;
  int directed = -1;
  if (!(in >> n >> m >> directed) || n < 0 || m < 0 || (directed != 0 && directed != 1))
    throw ParseError("expected header: n m directed");
  EdgeListGraph g;
  g.n = static_cast<std::size_t>(n);
  g.directed = directed == 1;
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    std::string w;
    if (!(in >> u >> v >> w)) throw ParseError("truncated edge list");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range");
    Weight wt = parse_weight(w);
    if (wt.is_inf()) throw ParseError("edges may not have infinite weight");
    g.edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), wt});
  }
  return g;
}

void write_graph(std::ostream& out, const EdgeListGraph& g) {
  out << g.n << ' ' << g.edges.size() << ' ' << (g.directed ? 1 : 0) << '\n';
  for (const auto& e : g.edges) out << e.u << ' ' << e.v << ' ' << format_weight(e.w) << '\n';
}

}  // namespace tropical::apps
