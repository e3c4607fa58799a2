#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rcldpc/base_graph.hpp"

namespace rcldpc {

// Binary parity-check matrix from circulant lifting, stored as per-row
// sorted column indices.
struct LiftedParityCheck {
  int z = 0;
  int m = 0;  // rows = base rows * z
  int n = 0;  // cols = base cols * z
  std::vector<std::vector<int32_t>> row_cols;

  std::size_t popcount() const {
    std::size_t s = 0;
    for (const auto& r : row_cols) s += r.size();
    return s;
  }
};

// Expands each base entry with shift s into a Z x Z circulant permutation
// (identity cyclically shifted by s mod Z). Shifts >= Z are reduced mod Z.
inline LiftedParityCheck lift(const BaseGraph& bg, int z) {
  if (z <= 0) throw std::invalid_argument("lifting factor must be positive");
  LiftedParityCheck h;
  h.z = z;
  h.m = bg.rows * z;
  h.n = bg.cols * z;
  h.row_cols.assign(h.m, {});
  for (const auto& e : bg.entries) {
    const int s = e.shift % z;
    for (int k = 0; k < z; ++k) {
      h.row_cols[e.row * z + k].push_back(e.col * z + (k + s) % z);
    }
  }
  for (auto& r : h.row_cols) std::sort(r.begin(), r.end());
  return h;
}

// Syndrome restricted to rows [0, active_rows): true iff H * bits == 0 (GF(2)).
inline bool syndrome_ok(const LiftedParityCheck& h, const std::vector<std::uint8_t>& bits,
                        int active_rows) {
  for (int r = 0; r < active_rows; ++r) {
    unsigned acc = 0;
    for (int c : h.row_cols[r]) acc ^= bits[c];
    if (acc & 1u) return false;
  }
  return true;
}

}  // namespace rcldpc
