#include "sylab/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "sylab/error.hpp"

namespace sylab {

std::size_t Multigraph::add_edge(std::size_t u, std::size_t w) {
  std::size_t id = next_id_;
  add_edge_with_id(u, w, id);
  return id;
}

void Multigraph::add_edge_with_id(std::size_t u, std::size_t w, std::size_t id) {
  if (u >= v_ || w >= v_) {
    fail(ErrorKind::BadParameters, "edge (" + std::to_string(u) + "," + std::to_string(w) + ") outside " +
                                       std::to_string(v_) + " vertices");
  }
  if (id < next_id_ && has_edge(id)) fail(ErrorKind::BadParameters, "duplicate edge id " + std::to_string(id));
  edges_.push_back(Edge{u, w, id});
  next_id_ = std::max(next_id_, id + 1);
}

void Multigraph::set_marked(std::optional<std::size_t> id) {
  if (id && !has_edge(*id)) fail(ErrorKind::UnknownEdge, "edge id " + std::to_string(*id));
  marked_ = id;
}

bool Multigraph::has_edge(std::size_t id) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
}

std::size_t Multigraph::edge_position(std::size_t id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id == id) return i;
  }
  fail(ErrorKind::UnknownEdge, "edge id " + std::to_string(id));
}

const Edge& Multigraph::edge(std::size_t id) const { return edges_[edge_position(id)]; }

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool Multigraph::is_connected() const {
  if (v_ <= 1) return true;
  DisjointSets ds(v_);
  std::size_t parts = v_;
  for (const auto& e : edges_) {
    if (ds.unite(e.u, e.w)) --parts;
  }
  return parts == 1;
}

BigInt tau(const Multigraph& g) {
  std::size_t v = g.vertex_count();
  if (v == 0) return 0;
  if (v == 1) return 1;
  if (!g.is_connected()) return 0;
  // Laplacian with the last vertex removed.
  std::size_t n = v - 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    if (e.u < n) a[e.u][e.u] += 1;
    if (e.w < n) a[e.w][e.w] += 1;
    if (e.u < n && e.w < n) {
      a[e.u][e.w] -= 1;
      a[e.w][e.u] -= 1;
    }
  }
  // Bareiss: every intermediate division is exact.
  BigInt prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt det = a[n - 1][n - 1];
  return negate ? BigInt(-det) : det;
}

Multigraph delete_edge(const Multigraph& g, std::size_t id) {
  std::size_t pos = g.edge_position(id);
  Multigraph out(g.vertex_count());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i == pos) continue;
    const auto& e = g.edges()[i];
    out.add_edge_with_id(e.u, e.w, e.id);
  }
  if (g.marked() && *g.marked() != id) out.set_marked(g.marked());
  return out;
}

Multigraph contract_edge(const Multigraph& g, std::size_t id) {
  const Edge& c = g.edge(id);
  if (c.is_loop()) return delete_edge(g, id);
  std::size_t keep = std::min(c.u, c.w);
  std::size_t gone = std::max(c.u, c.w);
  auto relabel = [&](std::size_t x) {
    if (x == gone) return keep;
    return x > gone ? x - 1 : x;
  };
  Multigraph out(g.vertex_count() - 1);
  for (const auto& e : g.edges()) {
    std::size_t u = relabel(e.u);
    std::size_t w = relabel(e.w);
    if (u == w && !e.is_loop()) continue;  // parallel to the contracted edge
    if (e.is_loop()) continue;
    out.add_edge_with_id(u, w, e.id);
  }
  if (g.marked() && out.has_edge(*g.marked())) out.set_marked(g.marked());
  return out;
}

Rational tree_ratio(const Multigraph& g, std::size_t id) {
  const Edge& e = g.edge(id);
  if (e.is_loop()) fail(ErrorKind::DegenerateEdge, "edge " + std::to_string(id) + " is a loop");
  BigInt del = tau(delete_edge(g, id));
  BigInt con = tau(contract_edge(g, id));
  if (del == 0 || con == 0) {
    fail(ErrorKind::DegenerateEdge, "edge " + std::to_string(id) + " is a bridge or the graph is disconnected");
  }
  return make_rational(del, con);
}

Multigraph wedge(const Multigraph& g, const Multigraph& h, std::size_t gv, std::size_t hv) {
  if (gv >= g.vertex_count() || hv >= h.vertex_count()) fail(ErrorKind::BadParameters, "wedge vertex out of range");
  std::size_t base = g.vertex_count();
  auto relabel = [&](std::size_t x) {
    if (x == hv) return gv;
    return x < hv ? base + x : base + x - 1;
  };
  std::size_t id_offset = 0;
  for (const auto& e : g.edges()) id_offset = std::max(id_offset, e.id + 1);
  Multigraph out(base + h.vertex_count() - 1);
  for (const auto& e : g.edges()) out.add_edge_with_id(e.u, e.w, e.id);
  for (const auto& e : h.edges()) out.add_edge_with_id(relabel(e.u), relabel(e.w), id_offset + e.id);
  out.set_marked(g.marked());
  return out;
}

bool passes_planar_edge_bound(const Multigraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> simple;
  for (const auto& e : g.edges()) {
    if (!e.is_loop()) simple.emplace(std::min(e.u, e.w), std::max(e.u, e.w));
  }
  std::size_t v = g.vertex_count();
  if (v < 3) return true;
  return simple.size() <= 3 * v - 6;
}

}  // namespace sylab
