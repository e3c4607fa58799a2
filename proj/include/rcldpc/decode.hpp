#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rcldpc/code.hpp"

namespace rcldpc {

enum class Algorithm { bp, ms, nms };

struct DecodeConfig {
  Algorithm algorithm = Algorithm::bp;
  double nms_alpha = 0.8;
  int max_iter = 20;
  bool early_exit = true;
  double clip = 20.0;
  bool record_soft = false;
  bool record_hard = false;
  bool record_messages = false;
};

// V2C / C2V values indexed by canonical edge. Inactive edges hold 0 and are
// never read when decoding an active rate.
struct MessageState {
  std::vector<double> v2c;
  std::vector<double> c2v;
  int iteration = 0;
};

struct DecodeTrace {
  std::vector<std::uint8_t> decoded;  // final hard decisions, length N
  int iterations_used = 0;
  bool syndrome_ok = false;
  std::vector<std::uint8_t> syndrome_history;             // per iteration
  std::vector<std::vector<std::uint8_t>> hard_history;    // optional
  std::vector<std::vector<double>> soft_history;          // optional o_v
  std::vector<std::vector<double>> v2c_history;           // optional
  std::vector<std::vector<double>> c2v_history;           // optional
};

namespace detail {

inline double clip_msg(double x, double clip) { return std::clamp(x, -clip, clip); }

inline double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// atanh argument clamp keeping the BP update finite
constexpr double kAtanhDelta = 1e-12;

inline double atanh_clamped(double p) {
  return 2.0 * std::atanh(std::clamp(p, -(1.0 - kAtanhDelta), 1.0 - kAtanhDelta));
}

}  // namespace detail

// V_e = clip(L_v + sum of C over the other active edges at v). With all-zero
// C2V (first iteration) this reduces to the channel LLR.
inline void v2c_update(const TannerGraph& tg, const std::vector<double>& llr,
                       const std::vector<double>& c2v, int active_edges, int active_vns,
                       double clip, std::vector<double>& v2c) {
  for (int v = 0; v < active_vns; ++v) {
    const auto& adj = tg.vn_adj[size_t(v)];
    for (int32_t e : adj) {
      if (e >= active_edges) break;  // adjacency is ascending; suffix is inactive
      double sum = llr[size_t(v)];
      for (int32_t other : adj) {
        if (other == e || other >= active_edges) continue;
        sum += c2v[size_t(other)];
      }
      v2c[size_t(e)] = detail::clip_msg(sum, clip);
    }
  }
}

// Product-of-tanh rule, Gallager exact form.
inline void c2v_update_bp(const TannerGraph& tg, const std::vector<double>& v2c,
                          int active_edges, int active_cns, double clip,
                          std::vector<double>& c2v, std::vector<double>& tanh_scratch) {
  for (int c = 0; c < active_cns; ++c) {
    const auto& adj = tg.cn_adj[size_t(c)];
    const int deg = int(adj.size());
    tanh_scratch.resize(size_t(deg));
    for (int j = 0; j < deg; ++j) tanh_scratch[size_t(j)] = std::tanh(v2c[size_t(adj[size_t(j)])] / 2.0);
    for (int j = 0; j < deg; ++j) {
      if (adj[size_t(j)] >= active_edges) continue;
      double prod = 1.0;
      for (int k = 0; k < deg; ++k) {
        if (k == j || adj[size_t(k)] >= active_edges) continue;
        prod *= tanh_scratch[size_t(k)];
      }
      c2v[size_t(adj[size_t(j)])] = detail::clip_msg(detail::atanh_clamped(prod), clip);
    }
  }
}

// Sign product times minimum magnitude over the other active edges,
// optionally scaled by a constant weight (normalized min-sum).
inline void c2v_update_ms(const TannerGraph& tg, const std::vector<double>& v2c,
                          int active_edges, int active_cns, double clip, double alpha,
                          std::vector<double>& c2v) {
  for (int c = 0; c < active_cns; ++c) {
    const auto& adj = tg.cn_adj[size_t(c)];
    const int deg = int(adj.size());
    for (int j = 0; j < deg; ++j) {
      if (adj[size_t(j)] >= active_edges) continue;
      double sign = 1.0;
      double minmag = std::numeric_limits<double>::infinity();
      for (int k = 0; k < deg; ++k) {
        if (k == j || adj[size_t(k)] >= active_edges) continue;
        const double val = v2c[size_t(adj[size_t(k)])];
        sign *= detail::sign_of(val);
        minmag = std::min(minmag, std::abs(val));
      }
      if (minmag == std::numeric_limits<double>::infinity()) minmag = 0.0;  // degree-1 CN
      c2v[size_t(adj[size_t(j)])] = detail::clip_msg(alpha * (sign * minmag), clip);
    }
  }
}

// Full-sum marginal o_v = L_v + sum C, hard decision by sign with sgn(0) = +1.
inline void marginalize_and_decide(const TannerGraph& tg, const std::vector<double>& llr,
                                   const std::vector<double>& c2v, int active_edges,
                                   int active_vns, std::vector<double>& o,
                                   std::vector<std::uint8_t>& hard) {
  for (int v = 0; v < int(o.size()); ++v) {
    double sum = (v < int(llr.size())) ? llr[size_t(v)] : 0.0;
    if (v < active_vns) {
      for (int32_t e : tg.vn_adj[size_t(v)]) {
        if (e >= active_edges) break;
        sum += c2v[size_t(e)];
      }
    }
    o[size_t(v)] = sum;
    hard[size_t(v)] = sum < 0.0 ? 1u : 0u;
  }
}

inline bool syndrome_check(const Code& code, const std::vector<std::uint8_t>& bits,
                           int rate_index) {
  return code.syndrome_ok_at(bits, rate_index);
}

// Flooding-schedule iterative decoder. Early exit fires when the active-row
// syndrome of the current hard decision is zero; a non-converged frame is a
// valid trace with syndrome_ok = false.
inline DecodeTrace decode(const Code& code, const std::vector<double>& llr, int rate_index,
                          const DecodeConfig& cfg) {
  if (cfg.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  const RateEntry& rate = code.ladder.at(rate_index);
  const int active_e = rate.active_edge_count;
  const int active_v = rate.active_vn_count;
  const int active_c = rate.active_cn_count;

  MessageState state;
  state.v2c.assign(size_t(code.e()), 0.0);
  state.c2v.assign(size_t(code.e()), 0.0);

  DecodeTrace trace;
  std::vector<double> o(size_t(code.n()), 0.0);
  std::vector<std::uint8_t> hard(size_t(code.n()), 0);
  std::vector<double> tanh_scratch;

  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    v2c_update(code.tg, llr, state.c2v, active_e, active_v, cfg.clip, state.v2c);
    switch (cfg.algorithm) {
      case Algorithm::bp:
        c2v_update_bp(code.tg, state.v2c, active_e, active_c, cfg.clip, state.c2v, tanh_scratch);
        break;
      case Algorithm::ms:
        c2v_update_ms(code.tg, state.v2c, active_e, active_c, cfg.clip, 1.0, state.c2v);
        break;
      case Algorithm::nms:
        c2v_update_ms(code.tg, state.v2c, active_e, active_c, cfg.clip, cfg.nms_alpha, state.c2v);
        break;
    }
    state.iteration = iter;
    marginalize_and_decide(code.tg, llr, state.c2v, active_e, active_v, o, hard);
    const bool syn = syndrome_check(code, hard, rate_index);

    trace.iterations_used = iter;
    trace.syndrome_history.push_back(syn ? 1u : 0u);
    if (cfg.record_hard) trace.hard_history.push_back(hard);
    if (cfg.record_soft) trace.soft_history.push_back(o);
    if (cfg.record_messages) {
      trace.v2c_history.push_back(state.v2c);
      trace.c2v_history.push_back(state.c2v);
    }
    if (syn && cfg.early_exit) {
      trace.syndrome_ok = true;
      break;
    }
    trace.syndrome_ok = syn;
  }
  trace.decoded = hard;
  return trace;
}

}  // namespace rcldpc
