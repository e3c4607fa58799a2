#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "rcldpc/base_graph.hpp"
#include "rcldpc/encoder.hpp"
#include "rcldpc/lifting.hpp"
#include "rcldpc/rate_ladder.hpp"
#include "rcldpc/tanner.hpp"

namespace rcldpc {

// Everything derived from one (base graph, Z) pair. Immutable after
// construction; share freely across threads.
struct Code {
  BaseGraph bg;
  int z = 1;
  LiftedParityCheck h;
  TannerGraph tg;
  RateLadder ladder;
  Encoder encoder;
  std::vector<int32_t> edge_to_base;  // lifted edge -> base entry index
  int base_entry_count = 0;
  std::uint64_t fingerprint = 0;

  int n() const { return tg.n; }
  int m() const { return tg.m; }
  int e() const { return tg.e; }
  int info_bits() const { return bg.info_cols * z; }
  int lowest_rate_index() const { return ladder.size() - 1; }

  Codeword encode(const std::vector<std::uint8_t>& info, int rate_index) const {
    return encoder.encode(info, rate_index, ladder.at(rate_index).active_cn_count);
  }

  bool syndrome_ok_at(const std::vector<std::uint8_t>& bits, int rate_index) const {
    return syndrome_ok(h, bits, ladder.at(rate_index).active_cn_count);
  }
};

inline Code make_code(BaseGraph bg, int z) {
  Code code;
  code.bg = std::move(bg);
  code.z = z;
  code.h = lift(code.bg, z);
  code.tg = build_tanner(code.h);
  code.ladder = derive_rate_ladder(code.bg, z, code.tg);
  code.encoder = Encoder(code.bg, z, code.h);
  code.fingerprint = code_fingerprint(code.tg, z);

  // base entries are already in (row, col) order, matching edge order per block
  code.base_entry_count = int(code.bg.entries.size());
  code.edge_to_base.assign(size_t(code.tg.e), -1);
  for (int e = 0; e < code.tg.e; ++e) {
    const int br = code.tg.edges[size_t(e)].cn / z;
    const int bc = code.tg.edges[size_t(e)].vn / z;
    auto it = std::lower_bound(code.bg.entries.begin(), code.bg.entries.end(),
                               std::pair<int, int>{br, bc},
                               [](const BaseEntry& a, const std::pair<int, int>& key) {
                                 return std::tie(a.row, a.col) < std::tie(key.first, key.second);
                               });
    code.edge_to_base[size_t(e)] = int32_t(it - code.bg.entries.begin());
  }
  return code;
}

inline Code load_code(const std::string& path, int z) {
  return make_code(load_base_graph(path), z);
}

}  // namespace rcldpc
