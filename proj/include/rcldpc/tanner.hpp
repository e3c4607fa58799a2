#pragma once

#include <cstdint>
#include <vector>

#include "rcldpc/lifting.hpp"

namespace rcldpc {

struct Edge {
  int32_t vn = 0;
  int32_t cn = 0;
};

// Edge list of H in canonical ascending (cn, vn) order plus both adjacency
// views. The canonical order is what makes parameter files portable.
struct TannerGraph {
  int n = 0;  // variable nodes
  int m = 0;  // check nodes
  int e = 0;  // edges
  std::vector<Edge> edges;
  std::vector<std::vector<int32_t>> vn_adj;  // edge indices, ascending
  std::vector<std::vector<int32_t>> cn_adj;  // edge indices, ascending
  std::vector<int32_t> empty_check_nodes;    // degenerate rows, flagged for callers
  std::vector<int32_t> empty_variable_nodes;
};

inline TannerGraph build_tanner(const LiftedParityCheck& h) {
  TannerGraph tg;
  tg.n = h.n;
  tg.m = h.m;
  tg.vn_adj.assign(h.n, {});
  tg.cn_adj.assign(h.m, {});
  // row_cols is already sorted per row, so walking rows in order yields the
  // canonical ascending (cn, vn) edge order directly.
  for (int r = 0; r < h.m; ++r) {
    for (int c : h.row_cols[r]) {
      int32_t idx = int32_t(tg.edges.size());
      tg.edges.push_back({c, r});
      tg.vn_adj[c].push_back(idx);
      tg.cn_adj[r].push_back(idx);
    }
  }
  tg.e = int(tg.edges.size());
  for (int r = 0; r < h.m; ++r)
    if (tg.cn_adj[r].empty()) tg.empty_check_nodes.push_back(r);
  for (int c = 0; c < h.n; ++c)
    if (tg.vn_adj[c].empty()) tg.empty_variable_nodes.push_back(c);
  return tg;
}

// FNV-1a over (z, m, n, canonical edge list); ties a parameter file to the
// exact graph it was trained on.
inline std::uint64_t code_fingerprint(const TannerGraph& tg, int z) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&hash](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      hash ^= (v >> (8 * i)) & 0xffu;
      hash *= 0x100000001b3ULL;
    }
  };
  mix(std::uint64_t(z));
  mix(std::uint64_t(tg.m));
  mix(std::uint64_t(tg.n));
  for (const auto& e : tg.edges) {
    mix(std::uint64_t(std::uint32_t(e.cn)));
    mix(std::uint64_t(std::uint32_t(e.vn)));
  }
  return hash;
}

}  // namespace rcldpc
