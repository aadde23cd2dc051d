#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sylab/bigint.hpp"

namespace sylab {

struct Edge {
  std::size_t u = 0;
  std::size_t w = 0;
  std::size_t id = 0;

  bool is_loop() const { return u == w; }
  bool operator==(const Edge&) const = default;
};

// Undirected multigraph with loops and parallel edges. Edge ids survive
// deletion and contraction so a marked edge can be tracked across steps.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertices) : v_(vertices) {}

  std::size_t vertex_count() const { return v_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> marked() const { return marked_; }

  std::size_t add_vertex() { return v_++; }
  // Returns the new edge id (one past the largest id in use).
  std::size_t add_edge(std::size_t u, std::size_t w);
  void add_edge_with_id(std::size_t u, std::size_t w, std::size_t id);
  void set_marked(std::optional<std::size_t> id);

  bool has_edge(std::size_t id) const;
  const Edge& edge(std::size_t id) const;
  std::size_t edge_position(std::size_t id) const;

  bool is_connected() const;

  bool operator==(const Multigraph&) const = default;

 private:
  std::size_t v_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::size_t> marked_;
  std::size_t next_id_ = 0;
};

// Number of spanning trees via a fraction-free determinant of a reduced
// Laplacian. Disconnected graphs give 0; a single vertex gives 1.
BigInt tau(const Multigraph& g);

Multigraph delete_edge(const Multigraph& g, std::size_t id);
// Identifies the endpoints of the edge and drops the loops this creates.
// The surviving vertex is the smaller endpoint; higher vertices shift down.
Multigraph contract_edge(const Multigraph& g, std::size_t id);

// tau(G-e) / tau(G/e). Throws DegenerateEdge for loops, bridges and
// disconnected inputs.
Rational tree_ratio(const Multigraph& g, std::size_t id);

// One-point union identifying gv in g with hv in h. Vertices and edge ids of h
// are appended after those of g; the mark of g (if any) is kept.
Multigraph wedge(const Multigraph& g, const Multigraph& h, std::size_t gv, std::size_t hv);

// Euler bound |E| <= 3|V| - 6 on the underlying simple graph (no loops, no
// parallel edges). A necessary planarity condition only; used as a sanity check.
bool passes_planar_edge_bound(const Multigraph& g);

}  // namespace sylab
