#pragma once

#include <complex>

#include "ambc/rng.hpp"

namespace ambc {

using cxd = std::complex<double>;

enum class FadingModel { Rayleigh, Rician };

/// Fading statistics of the three links (source-reader, source-tag,
/// tag-reader). kappa is used only when model == Rician.
struct ChannelParams {
  double sigma2_sr = 1.0;
  double sigma2_st = 1.0;
  double sigma2_tr = 1.0;
  FadingModel model = FadingModel::Rayleigh;
  double kappa = 0.0;

  void validate() const;
};

/// One coherence block. h0/h1 are the composite gains of the absorb/reflect
/// states: h0 = h_sr and h1 = h_sr + gamma * h_st * h_tr, exactly as stored.
struct ChannelRealization {
  cxd h_sr{};
  cxd h_st{};
  cxd h_tr{};
  cxd gamma{};
  cxd h0{};
  cxd h1{};
};

/// Geometry and antenna constants of the dB-domain link budget.
struct LinkBudget {
  double d_sr = 4.8;   // meters
  double d_st = 2.5;
  double d_tr = 0.5;
  double v1 = 2.0;     // path-loss exponents
  double v2 = 2.0;
  double v3 = 2.0;
  double f_c = 915e6;  // Hz
  double g_l = 1.0;    // tag antenna gain, linear
  double xi = 1.0;     // power reflection coefficient, (0, 1]

  void validate() const;
};

/// Zero-mean CSCG gain with E[|h|^2] = variance.
cxd sample_rayleigh(double variance, Rng& rng);

/// Rician gain: sqrt(k/(k+1)) + sqrt(1/(k+1)) * h_nlos, with a unit
/// deterministic LoS component and Rayleigh h_nlos of the given variance.
cxd sample_rician(double kappa, double variance, Rng& rng);

/// Draws h_sr, h_st, h_tr (in that order) per params.model and fills the
/// composites. A zero variance is accepted as the degenerate limit and
/// yields an exactly-zero gain without consuming random draws.
ChannelRealization realize_channels(const ChannelParams& params, cxd gamma,
                                    Rng& rng);

/// (z_load - conj(z_antenna)) / (z_load + z_antenna).
cxd reflection_coefficient(cxd z_load, cxd z_antenna);

/// Direct-link received power in dBm given the backscatter-link power:
/// P_r = P_c + 10 v1 log10(d_st) + 10 v2 log10(d_tr) - 10 v3 log10(d_sr)
///       - 10 log10(xi * F * G_l^2),  F = lambda^2 / (4 pi)^2.
double received_power_dbm(const LinkBudget& budget, double p_c_dbm);

/// Relative SNR eta = p_c / p_r (backscatter over direct, linear watts).
double relative_snr(double p_c_watts, double p_r_watts);

}  // namespace ambc
