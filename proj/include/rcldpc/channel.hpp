#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "rcldpc/code.hpp"
#include "rcldpc/rng.hpp"

namespace rcldpc {

enum class Modulation { bpsk, qpsk };
enum class SnrConvention { ebn0, esn0 };

inline int bits_per_symbol(Modulation m) { return m == Modulation::bpsk ? 1 : 2; }

// Noise variance per real dimension for a given SNR in dB.
//   Eb/N0: sigma^2 = 1 / (2 * m * R * 10^(snr/10))
//   Es/N0: sigma^2 = 1 / (2 * 10^(snr/10))
inline double sigma2_from_snr(double snr_db, SnrConvention conv, double code_rate,
                              Modulation mod) {
  const double lin = std::pow(10.0, snr_db / 10.0);
  if (conv == SnrConvention::esn0) return 1.0 / (2.0 * lin);
  return 1.0 / (2.0 * bits_per_symbol(mod) * code_rate * lin);
}

inline double snr_from_sigma2(double sigma2, SnrConvention conv, double code_rate,
                              Modulation mod) {
  double lin = (conv == SnrConvention::esn0) ? 1.0 / (2.0 * sigma2)
                                             : 1.0 / (2.0 * bits_per_symbol(mod) * code_rate * sigma2);
  return 10.0 * std::log10(lin);
}

struct ChannelModel {
  Modulation modulation = Modulation::bpsk;
  SnrConvention snr_convention = SnrConvention::ebn0;
  double snr_db = 0.0;
  double noise_sigma2 = 0.5;  // per real dimension
};

inline ChannelModel make_channel(double snr_db, SnrConvention conv, double code_rate,
                                 Modulation mod) {
  ChannelModel cm;
  cm.modulation = mod;
  cm.snr_convention = conv;
  cm.snr_db = snr_db;
  cm.noise_sigma2 = sigma2_from_snr(snr_db, conv, code_rate, mod);
  return cm;
}

// Real-valued symbol frame over the transmitted positions. QPSK interleaves
// (re, im) pairs, so the vector length equals the bit count either way and
// each entry is one real noise dimension.
struct NoisySymbolFrame {
  std::vector<double> symbols;
  int rate_index = 0;
};

struct LlrFrame {
  std::vector<double> llr;  // length N; non-transmitted positions hold exactly 0
  int rate_index = 0;
};

// BPSK: bit b -> 1-2b. QPSK: Gray map, (1-2b0 + (1-2b1) i)/sqrt(2), stored as
// interleaved real dimensions.
inline std::vector<double> modulate(const std::vector<std::uint8_t>& bits, Modulation mod) {
  if (mod == Modulation::qpsk && bits.size() % 2 != 0)
    throw std::invalid_argument("QPSK needs an even number of bits");
  std::vector<double> out(bits.size());
  const double scale = (mod == Modulation::bpsk) ? 1.0 : 1.0 / std::sqrt(2.0);
  for (size_t i = 0; i < bits.size(); ++i) out[i] = scale * (1.0 - 2.0 * bits[i]);
  return out;
}

inline NoisySymbolFrame add_awgn(const std::vector<double>& symbols, const ChannelModel& cm,
                                 std::mt19937_64& rng, int rate_index = 0) {
  NoisySymbolFrame frame;
  frame.rate_index = rate_index;
  frame.symbols.resize(symbols.size());
  const double sigma = std::sqrt(cm.noise_sigma2);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (size_t i = 0; i < symbols.size(); ++i) frame.symbols[i] = symbols[i] + sigma * gauss(rng);
  return frame;
}

// Channel LLR ln P(y|x=0)/P(y|x=1). Under Gaussian noise this is 2*a*y/sigma^2
// with a the per-dimension amplitude. Non-transmitted positions get exactly 0.
inline LlrFrame llr_from_channel(const NoisySymbolFrame& frame, const ChannelModel& cm,
                                 const RateEntry& rate, int n_total) {
  if (frame.symbols.size() != rate.transmitted_positions.size())
    throw std::invalid_argument("frame length does not match transmitted positions");
  LlrFrame out;
  out.rate_index = frame.rate_index;
  out.llr.assign(size_t(n_total), 0.0);
  const double amp = (cm.modulation == Modulation::bpsk) ? 1.0 : 1.0 / std::sqrt(2.0);
  const double scale = 2.0 * amp / cm.noise_sigma2;
  for (size_t i = 0; i < frame.symbols.size(); ++i)
    out.llr[size_t(rate.transmitted_positions[i])] = scale * frame.symbols[i];
  return out;
}

// Convenience path used by the dataset generator and the harness:
// encode -> modulate -> AWGN -> LLR, all from one frame stream.
inline LlrFrame simulate_frame(const Code& code, const std::vector<std::uint8_t>& codeword_bits,
                               int rate_index, const ChannelModel& cm, std::mt19937_64& rng) {
  const RateEntry& rate = code.ladder.at(rate_index);
  std::vector<std::uint8_t> tx(rate.transmitted_positions.size());
  for (size_t i = 0; i < tx.size(); ++i)
    tx[i] = codeword_bits[size_t(rate.transmitted_positions[i])];
  auto symbols = modulate(tx, cm.modulation);
  auto noisy = add_awgn(symbols, cm, rng, rate_index);
  return llr_from_channel(noisy, cm, rate, code.n());
}

}  // namespace rcldpc
