#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcldpc/base_graph.hpp"
#include "rcldpc/lifting.hpp"

namespace rcldpc {

// Raised when a base graph cannot support systematic encoding.
class construction_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Codeword {
  std::vector<std::uint8_t> bits;  // full length n; inactive positions are 0
  int rate_index = 0;
};

namespace detail {

// Dense GF(2) rows packed into 64-bit words.
struct BitMatrix {
  int n = 0;
  std::vector<std::vector<std::uint64_t>> rows;

  explicit BitMatrix(int size = 0) : n(size) {
    rows.assign(size_t(size), std::vector<std::uint64_t>((size + 63) / 64, 0));
  }
  void set(int r, int c) { rows[r][c >> 6] |= std::uint64_t(1) << (c & 63); }
  bool get(int r, int c) const { return (rows[r][c >> 6] >> (c & 63)) & 1u; }
  void xor_row(int dst, int src) {
    for (size_t w = 0; w < rows[dst].size(); ++w) rows[dst][w] ^= rows[src][w];
  }
};

// Inverts a square GF(2) matrix; returns false if singular.
inline bool gf2_invert(const BitMatrix& a, BitMatrix& inv) {
  const int n = a.n;
  BitMatrix work = a;
  inv = BitMatrix(n);
  for (int i = 0; i < n; ++i) inv.set(i, i);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (work.get(r, col)) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return false;
    std::swap(work.rows[col], work.rows[piv]);
    std::swap(inv.rows[col], inv.rows[piv]);
    for (int r = 0; r < n; ++r) {
      if (r != col && work.get(r, col)) {
        work.xor_row(r, col);
        inv.xor_row(r, col);
      }
    }
  }
  return true;
}

}  // namespace detail

// Systematic encoder for a lifted raptor-like code. The precode parity block
// is inverted once at construction; each extension row then resolves its own
// degree-1 variable by XOR of already-known symbols.
class Encoder {
 public:
  Encoder() = default;

  Encoder(const BaseGraph& bg, int z, const LiftedParityCheck& h)
      : info_bits_(bg.info_cols * z),
        precode_parity_bits_(bg.precode_rows * z),
        precode_rows_(bg.precode_rows * z),
        n_(h.n),
        z_(z) {
    const int k = info_bits_;
    const int p = precode_parity_bits_;

    detail::BitMatrix parity_block(p);
    precode_info_cols_.assign(size_t(p), {});
    for (int r = 0; r < p; ++r) {
      for (int c : h.row_cols[r]) {
        if (c < k) {
          precode_info_cols_[r].push_back(c);
        } else if (c < k + p) {
          parity_block.set(r, c - k);
        } else {
          throw construction_error("precode row " + std::to_string(r) +
                                   " reaches outside the precode block");
        }
      }
    }
    if (!detail::gf2_invert(parity_block, precode_inverse_))
      throw construction_error("singular precode parity submatrix");

    // per extension row: the degree-1 column it solves, and the rest
    std::vector<int> col_degree(h.n, 0);
    for (const auto& row : h.row_cols)
      for (int c : row) col_degree[c]++;
    ext_solve_col_.assign(size_t(h.m - p), -1);
    ext_other_cols_.assign(size_t(h.m - p), {});
    for (int r = p; r < h.m; ++r) {
      for (int c : h.row_cols[r]) {
        if (c >= k + p && col_degree[c] == 1) {
          if (ext_solve_col_[r - p] >= 0)
            throw construction_error("extension row " + std::to_string(r) +
                                     " has two degree-1 columns");
          ext_solve_col_[r - p] = c;
        } else {
          ext_other_cols_[r - p].push_back(c);
        }
      }
      if (ext_solve_col_[r - p] < 0)
        throw construction_error("extension row " + std::to_string(r) +
                                 " has no degree-1 column");
    }
  }

  // Fills parity for rows [0, active_rows); positions beyond stay zero.
  Codeword encode(const std::vector<std::uint8_t>& info_bits, int rate_index,
                  int active_rows) const {
    if (int(info_bits.size()) != info_bits_)
      throw std::invalid_argument("expected " + std::to_string(info_bits_) + " info bits, got " +
                                  std::to_string(info_bits.size()));
    Codeword cw;
    cw.rate_index = rate_index;
    cw.bits.assign(size_t(n_), 0);
    for (int i = 0; i < info_bits_; ++i) cw.bits[i] = info_bits[i] & 1u;

    const int p = precode_parity_bits_;
    std::vector<std::uint8_t> rhs(size_t(p), 0);
    for (int r = 0; r < p; ++r) {
      unsigned acc = 0;
      for (int c : precode_info_cols_[r]) acc ^= cw.bits[c];
      rhs[r] = std::uint8_t(acc & 1u);
    }
    for (int i = 0; i < p; ++i) {
      unsigned acc = 0;
      for (int j = 0; j < p; ++j)
        if (precode_inverse_.get(i, j)) acc ^= rhs[j];
      cw.bits[info_bits_ + i] = std::uint8_t(acc & 1u);
    }

    for (int r = precode_rows_; r < active_rows; ++r) {
      unsigned acc = 0;
      for (int c : ext_other_cols_[r - precode_rows_]) acc ^= cw.bits[c];
      cw.bits[ext_solve_col_[r - precode_rows_]] = std::uint8_t(acc & 1u);
    }
    return cw;
  }

  int info_bit_count() const { return info_bits_; }

 private:
  int info_bits_ = 0;
  int precode_parity_bits_ = 0;
  int precode_rows_ = 0;
  int n_ = 0;
  int z_ = 0;
  std::vector<std::vector<int32_t>> precode_info_cols_;
  detail::BitMatrix precode_inverse_;
  std::vector<int32_t> ext_solve_col_;
  std::vector<std::vector<int32_t>> ext_other_cols_;
};

}  // namespace rcldpc
