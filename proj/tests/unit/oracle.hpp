#pragma once
// Brute-force reference implementations. Deliberately naive and written
// without the library's internals so the two can disagree.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "sylab/bigint.hpp"
#include "sylab/matroid.hpp"
#include "sylab/multigraph.hpp"

namespace oracle {

using Cols = std::vector<std::uint64_t>;

// Rank of the chosen columns: repeatedly pick a vector with the highest bit
// and clear that bit from the rest.
inline std::size_t rank_of(const Cols& cols, std::uint64_t mask, std::uint64_t deleted = 0) {
  std::vector<std::uint64_t> v;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if ((mask >> i & 1U) && !(deleted >> i & 1U)) v.push_back(cols[i]);
  }
  std::size_t r = 0;
  for (int bit = 63; bit >= 0; --bit) {
    auto it = std::find_if(v.begin(), v.end(), [&](std::uint64_t x) { return (x >> bit) & 1U; });
    if (it == v.end()) continue;
    std::uint64_t pivot = *it;
    v.erase(it);
    for (auto& x : v) {
      if ((x >> bit) & 1U) x ^= pivot;
    }
    ++r;
  }
  return r;
}

inline bool independent(const Cols& cols, std::uint64_t mask, std::uint64_t deleted = 0) {
  if (mask & deleted) return false;
  return rank_of(cols, mask, deleted) == static_cast<std::size_t>(__builtin_popcountll(mask));
}

inline std::vector<std::uint64_t> all_independent(const Cols& cols, std::uint64_t deleted = 0) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << cols.size()); ++s) {
    if (independent(cols, s, deleted)) out.push_back(s);
  }
  return out;
}

inline std::vector<std::uint64_t> all_bases(const Cols& cols, std::uint64_t deleted = 0) {
  std::size_t r = rank_of(cols, (std::uint64_t{1} << cols.size()) - 1, deleted);
  std::vector<std::uint64_t> out;
  for (auto s : all_independent(cols, deleted)) {
    if (static_cast<std::size_t>(__builtin_popcountll(s)) == r) out.push_back(s);
  }
  return out;
}

inline std::size_t pc(std::uint64_t x) { return static_cast<std::size_t>(__builtin_popcountll(x)); }

// Spanning trees by trying every (V-1)-subset of edges with union-find.
inline std::uint64_t spanning_trees(const sylab::Multigraph& g) {
  std::size_t v = g.vertex_count();
  std::size_t e = g.edge_count();
  if (v == 0) return 0;
  if (v == 1) return 1;
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << e); ++s) {
    if (pc(s) != v - 1) continue;
    std::vector<std::size_t> parent(v);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    for (std::size_t i = 0; i < e && acyclic; ++i) {
      if (!(s >> i & 1U)) continue;
      const auto& ed = g.edges()[i];
      std::size_t a = find(ed.u);
      std::size_t b = find(ed.w);
      if (a == b) acyclic = false;
      else parent[a] = b;
    }
    if (acyclic) ++count;
  }
  return count;
}

inline sylab::BinaryMatroid random_matroid(std::mt19937_64& rng, std::size_t d, std::size_t n) {
  std::vector<std::uint64_t> cols(n);
  for (auto& c : cols) c = rng() & ((std::uint64_t{1} << d) - 1);
  return sylab::BinaryMatroid(d, cols);
}

inline sylab::Multigraph random_graph(std::mt19937_64& rng, std::size_t v, std::size_t e, bool loops = true) {
  sylab::Multigraph g(v);
  for (std::size_t i = 0; i < e; ++i) {
    std::size_t a = rng() % v;
    std::size_t b = rng() % v;
    if (!loops && v > 1) {
      while (b == a) b = rng() % v;
    }
    g.add_edge(a, b);
  }
  return g;
}

inline sylab::Multigraph cycle(std::size_t n) {
  sylab::Multigraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline sylab::Multigraph complete(std::size_t n) {
  sylab::Multigraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

inline sylab::Multigraph bundle(std::size_t k) {
  sylab::Multigraph g(2);
  for (std::size_t i = 0; i < k; ++i) g.add_edge(0, 1);
  return g;
}

inline std::uint64_t mask_of(sylab::SubsetMask s) { return s.bits(); }

}  // namespace oracle
