#include "ambc/airlink.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ambc {

SourceKind SourceKind::gaussian(double p_s) {
  SourceKind k;
  k.kind = Kind::ComplexGaussian;
  k.p_s = p_s;
  return k;
}

SourceKind SourceKind::qary(int q, double p_s) {
  SourceKind k;
  k.kind = Kind::ModulatedQary;
  k.q = q;
  k.p_s = p_s;
  return k;
}

void SourceKind::validate() const {
  if (!(p_s > 0.0)) {
    throw std::invalid_argument("source power must be positive");
  }
  if (kind == Kind::ModulatedQary) {
    if (q < 2 || (q & (q - 1)) != 0) {
      throw std::invalid_argument("PSK order must be a power of two >= 2");
    }
  }
}

namespace {

// Point k of the unit-circle Q-PSK constellation. Angles that are multiples
// of pi/2 are returned exactly so constant-modulus checks hold bit-level.
cxd unit_circle_point(int k, int q) {
  if ((4LL * k) % q == 0) {
    switch ((4LL * k / q) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double theta = 2.0 * std::numbers::pi * k / q;
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace

ChannelRealization scaled_realization(const ChannelRealization& raw,
                                      double snr_db, double eta,
                                      double sigma2_sr, double p_s,
                                      double sigma2_w) {
  if (eta < 0.0) throw std::invalid_argument("eta must be non-negative");
  if (!(sigma2_sr > 0.0) || !(p_s > 0.0) || !(sigma2_w > 0.0)) {
    throw std::invalid_argument("scaling inputs must be positive");
  }
  const double beta_d = std::pow(10.0, snr_db / 10.0);
  const double amp = std::sqrt(beta_d * sigma2_w / (sigma2_sr * p_s));
  ChannelRealization eff;
  eff.h_sr = amp * raw.h_sr;
  eff.h_st = raw.h_st;
  eff.h_tr = raw.h_tr;
  eff.gamma = amp * std::sqrt(eta) * raw.gamma;
  eff.h0 = eff.h_sr;
  eff.h1 = eff.h_sr + eff.gamma * eff.h_st * eff.h_tr;
  return eff;
}

Eigen::VectorXcd draw_source_block(const SourceKind& kind, int count,
                                   Rng& rng) {
  kind.validate();
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  Eigen::VectorXcd s(count);
  if (kind.kind == SourceKind::Kind::ComplexGaussian) {
    for (int i = 0; i < count; ++i) s[i] = rng.cgauss(kind.p_s);
  } else {
    const double amp = std::sqrt(kind.p_s);
    for (int i = 0; i < count; ++i) {
      const int k = static_cast<int>(rng.below(kind.q));
      s[i] = amp * unit_circle_point(k, kind.q);
    }
  }
  return s;
}

Eigen::VectorXcd synthesize_symbol(int bit, const ChannelRealization& chan,
                                   const SourceKind& kind, int n, Rng& rng,
                                   double noise_variance) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
  if (noise_variance < 0.0) {
    throw std::invalid_argument("noise variance must be non-negative");
  }
  const cxd gain = bit == 0 ? chan.h0 : chan.h1;
  Eigen::VectorXcd y = gain * draw_source_block(kind, n, rng);
  if (noise_variance > 0.0) {
    for (int i = 0; i < n; ++i) y[i] += rng.cgauss(noise_variance);
  }
  return y;
}

ReceivedFrame synthesize_frame(const TagFrame& frame,
                               const ChannelRealization& chan,
                               const SourceKind& kind, double snr_db,
                               double eta, Rng& rng, double sigma2_sr,
                               double noise_variance) {
  if (frame.n_per_symbol < 1) {
    throw std::invalid_argument("n_per_symbol must be >= 1");
  }
  if (std::norm(frame.reflection_on) > 1.0 + 1e-12) {
    throw std::invalid_argument("|reflection_on|^2 must not exceed 1");
  }
  ReceivedFrame rx;
  rx.snr_db = snr_db;
  rx.eta = eta;
  rx.truth = frame;
  rx.noise_variance = noise_variance;
  // Fold the tag's on-state reflection into the realization before scaling;
  // the raw realization's gamma slot is ignored in favor of the frame's.
  ChannelRealization tagged = chan;
  tagged.gamma = frame.reflection_on;
  tagged.h1 = tagged.h_sr + tagged.gamma * tagged.h_st * tagged.h_tr;
  rx.channel = scaled_realization(tagged, snr_db, eta, sigma2_sr, kind.p_s);

  const int n = frame.n_per_symbol;
  rx.samples.resize(3 * n);
  for (int sym = 0; sym < 3; ++sym) {
    rx.samples.segment(sym * n, n) = synthesize_symbol(
        frame.symbol_bit(sym), rx.channel, kind, n, rng, noise_variance);
  }
  return rx;
}

double bit_energy(const Eigen::Ref<const Eigen::VectorXcd>& samples) {
  if (samples.size() == 0) {
    throw std::invalid_argument("bit_energy requires a nonempty sample vector");
  }
  return samples.squaredNorm() / static_cast<double>(samples.size());
}

}  // namespace ambc
