#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcldpc/base_graph.hpp"
#include "rcldpc/tanner.hpp"

namespace rcldpc {

// Bitmask over edge indices.
struct EdgeSet {
  int size = 0;
  std::vector<std::uint64_t> words;

  explicit EdgeSet(int n = 0) : size(n), words((n + 63) / 64, 0) {}
  void set(int i) { words[i >> 6] |= (std::uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (words[i >> 6] >> (i & 63)) & 1u; }
  int popcount() const {
    int s = 0;
    for (auto w : words) s += std::popcount(w);
    return s;
  }
  bool subset_of(const EdgeSet& other) const {
    for (size_t i = 0; i < words.size(); ++i)
      if (words[i] & ~other.words[i]) return false;
    return true;
  }
};

struct RateEntry {
  double rate_value = 0.0;
  int active_vn_count = 0;
  int active_cn_count = 0;
  int active_edge_count = 0;  // active edges form a prefix of the canonical order
  EdgeSet active_edge_set;
  std::vector<int32_t> transmitted_positions;  // VN indices sent over the channel
  std::vector<int32_t> zero_llr_positions;     // active but never transmitted
};

// Nested rate configurations, highest rate first. Entry i's active sets are
// contained in entry i+1's; the last entry activates the whole graph.
struct RateLadder {
  std::vector<RateEntry> rates;

  int size() const { return int(rates.size()); }
  const RateEntry& at(int i) const {
    if (i < 0 || i >= size()) throw std::out_of_range("rate index " + std::to_string(i));
    return rates[size_t(i)];
  }
};

// Activation masks per boundary: edges whose CN < rows_used*Z and
// VN < cols_used*Z. Raptor-like structure makes each mask a prefix of the
// canonical (cn, vn) edge order, which is what lets parameter blocks nest.
inline RateLadder derive_rate_ladder(const BaseGraph& bg, int z, const TannerGraph& tg) {
  if (bg.rate_boundaries.empty()) throw std::invalid_argument("rate ladder is empty");
  RateLadder ladder;
  for (size_t i = 0; i < bg.rate_boundaries.size(); ++i) {
    const auto& b = bg.rate_boundaries[i];
    if (b.rows_used > bg.rows || b.cols_used > bg.cols)
      throw std::invalid_argument("rate boundary " + std::to_string(i) +
                                  " exceeds base dimensions");
    RateEntry entry;
    entry.active_cn_count = b.rows_used * z;
    entry.active_vn_count = b.cols_used * z;
    entry.active_edge_set = EdgeSet(tg.e);
    for (int e = 0; e < tg.e; ++e) {
      if (tg.edges[e].cn < entry.active_cn_count && tg.edges[e].vn < entry.active_vn_count)
        entry.active_edge_set.set(e);
    }
    entry.active_edge_count = entry.active_edge_set.popcount();
    for (int e = 0; e < entry.active_edge_count; ++e) {
      if (!entry.active_edge_set.test(e))
        throw std::logic_error("active edge set of rate " + std::to_string(i) +
                               " is not a prefix of the canonical edge order");
    }

    const int t = b.transmitted_count;
    if (t <= 0 || t > entry.active_vn_count)
      throw std::invalid_argument("rate boundary " + std::to_string(i) +
                                  ": transmitted count " + std::to_string(t) +
                                  " does not fit " + std::to_string(entry.active_vn_count) +
                                  " active positions (wrong Z for this ladder?)");
    // transmit the last t active positions; anything before them is punctured
    for (int v = entry.active_vn_count - t; v < entry.active_vn_count; ++v)
      entry.transmitted_positions.push_back(v);
    for (int v = 0; v < entry.active_vn_count - t; ++v) entry.zero_llr_positions.push_back(v);

    entry.rate_value = double(bg.info_cols * z) / double(t);
    ladder.rates.push_back(std::move(entry));
  }

  for (size_t i = 0; i + 1 < ladder.rates.size(); ++i) {
    if (!ladder.rates[i].active_edge_set.subset_of(ladder.rates[i + 1].active_edge_set))
      throw std::logic_error("rate ladder nesting violated between entries " +
                             std::to_string(i) + " and " + std::to_string(i + 1));
  }
  if (ladder.rates.back().active_edge_count != tg.e)
    throw std::logic_error("lowest rate must activate every edge");
  return ladder;
}

// Per-rate activated edge counts E_i, lowest entry equals E.
inline std::vector<int> edge_counts(const RateLadder& ladder) {
  std::vector<int> counts;
  counts.reserve(ladder.rates.size());
  for (const auto& r : ladder.rates) counts.push_back(r.active_edge_count);
  return counts;
}

// Single-rate ladder covering the whole graph with every position transmitted.
// Used for codes built directly from a parity-check matrix.
inline RateLadder full_rate_ladder(const TannerGraph& tg, double rate_value) {
  RateLadder ladder;
  RateEntry entry;
  entry.rate_value = rate_value;
  entry.active_vn_count = tg.n;
  entry.active_cn_count = tg.m;
  entry.active_edge_count = tg.e;
  entry.active_edge_set = EdgeSet(tg.e);
  for (int e = 0; e < tg.e; ++e) entry.active_edge_set.set(e);
  for (int v = 0; v < tg.n; ++v) entry.transmitted_positions.push_back(v);
  ladder.rates.push_back(std::move(entry));
  return ladder;
}

}  // namespace rcldpc
