#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "ambc/channel.hpp"
#include "ambc/rng.hpp"

namespace ambc {

/// Ambient RF source: zero-mean CSCG samples or a uniform Q-ary PSK
/// constellation, both scaled so E[|s|^2] = p_s.
struct SourceKind {
  enum class Kind { ComplexGaussian, ModulatedQary };

  Kind kind = Kind::ComplexGaussian;
  double p_s = 1.0;
  int q = 4;

  static SourceKind gaussian(double p_s = 1.0);
  static SourceKind qary(int q, double p_s = 1.0);
  void validate() const;
};

/// One tag frame: two pilot symbols followed by one data symbol, each held
/// for n_per_symbol source samples (frame spans 3N samples). Both pilots
/// transmit bit 1 so the reader knows the training energy estimates the
/// reflecting state.
struct TagFrame {
  int n_per_symbol = 40;
  std::array<int, 2> pilot_bits{1, 1};
  int data_bit = 0;
  cxd reflection_on{1.0, 0.0};   // Gamma_1 = sqrt(xi)
  cxd reflection_off{0.0, 0.0};  // OOK absorb state

  int frame_samples() const { return 3 * n_per_symbol; }
  int symbol_bit(int symbol_index) const {
    return symbol_index < 2 ? pilot_bits[symbol_index] : data_bit;
  }
};

/// Reader observation of one frame. `channel` holds the *effective* (SNR- and
/// eta-scaled) realization actually applied to the samples, i.e. the CSI a
/// genie-aided detector would receive: h0 = A*h_sr and
/// h1 = h0 + (A*sqrt(eta)*Gamma_1)*h_st*h_tr with A chosen so the average
/// direct-link SNR equals 10^(snr_db/10).
struct ReceivedFrame {
  Eigen::VectorXcd samples;
  double snr_db = 0.0;
  double eta = 0.0;
  TagFrame truth;
  ChannelRealization channel;
  double noise_variance = 1.0;
};

/// Folds the direct-link SNR normalization and the relative SNR eta into a
/// realization: h_sr *= A, gamma := A*sqrt(eta)*gamma, composites rebuilt.
/// A = sqrt(10^(snr_db/10) * sigma2_w / (sigma2_sr * p_s)).
ChannelRealization scaled_realization(const ChannelRealization& raw,
                                      double snr_db, double eta,
                                      double sigma2_sr = 1.0,
                                      double p_s = 1.0,
                                      double sigma2_w = 1.0);

/// iid source samples with E[|s|^2] = p_s.
Eigen::VectorXcd draw_source_block(const SourceKind& kind, int count,
                                   Rng& rng);

/// One tag symbol as seen by the reader: y = g_bit * s + w over n samples,
/// where g is taken from the (already scaled) realization.
Eigen::VectorXcd synthesize_symbol(int bit, const ChannelRealization& chan,
                                   const SourceKind& kind, int n, Rng& rng,
                                   double noise_variance = 1.0);

/// Full 3N-sample frame (pilot, pilot, data). Draw order per symbol: all N
/// source samples, then all N noise samples. noise_variance != 1 is a
/// diagnostic mode; the modeled receiver has sigma2_w = 1.
ReceivedFrame synthesize_frame(const TagFrame& frame,
                               const ChannelRealization& chan,
                               const SourceKind& kind, double snr_db,
                               double eta, Rng& rng, double sigma2_sr = 1.0,
                               double noise_variance = 1.0);

/// Average sample energy (1/N) * sum |y(n)|^2.
double bit_energy(const Eigen::Ref<const Eigen::VectorXcd>& samples);

}  // namespace ambc
