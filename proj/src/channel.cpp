#include "ambc/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ambc {

void ChannelParams::validate() const {
  if (!(sigma2_sr >= 0.0) || !(sigma2_st >= 0.0) || !(sigma2_tr >= 0.0)) {
    throw std::invalid_argument("channel variances must be non-negative");
  }
  if (!(kappa >= 0.0)) {
    throw std::invalid_argument("rician kappa must be non-negative");
  }
}

void LinkBudget::validate() const {
  if (!(d_sr > 0.0) || !(d_st > 0.0) || !(d_tr > 0.0)) {
    throw std::invalid_argument("link distances must be positive");
  }
  if (!(xi > 0.0) || xi > 1.0) {
    throw std::invalid_argument("xi must lie in (0, 1]");
  }
  if (!(f_c > 0.0)) {
    throw std::invalid_argument("carrier frequency must be positive");
  }
}

cxd sample_rayleigh(double variance, Rng& rng) {
  if (!(variance > 0.0)) {
    throw std::invalid_argument("rayleigh variance must be positive");
  }
  return rng.cgauss(variance);
}

cxd sample_rician(double kappa, double variance, Rng& rng) {
  if (kappa < 0.0) {
    throw std::invalid_argument("rician kappa must be non-negative");
  }
  const cxd nlos = sample_rayleigh(variance, rng);
  const double los = std::sqrt(kappa / (kappa + 1.0));
  const double diffuse = std::sqrt(1.0 / (kappa + 1.0));
  return cxd{los, 0.0} + diffuse * nlos;
}

namespace {

cxd draw_gain(const ChannelParams& p, double variance, Rng& rng) {
  if (variance == 0.0) return cxd{0.0, 0.0};  // degenerate limit mode
  if (p.model == FadingModel::Rician) {
    return sample_rician(p.kappa, variance, rng);
  }
  return sample_rayleigh(variance, rng);
}

}  // namespace

ChannelRealization realize_channels(const ChannelParams& params, cxd gamma,
                                    Rng& rng) {
  params.validate();
  if (std::norm(gamma) > 1.0 + 1e-12) {
    throw std::invalid_argument("|gamma|^2 must not exceed 1");
  }
  ChannelRealization r;
  r.h_sr = draw_gain(params, params.sigma2_sr, rng);
  r.h_st = draw_gain(params, params.sigma2_st, rng);
  r.h_tr = draw_gain(params, params.sigma2_tr, rng);
  r.gamma = gamma;
  r.h0 = r.h_sr;
  r.h1 = r.h_sr + gamma * r.h_st * r.h_tr;
  return r;
}

cxd reflection_coefficient(cxd z_load, cxd z_antenna) {
  const cxd denom = z_load + z_antenna;
  if (std::abs(denom) < 1e-300) {
    throw std::invalid_argument("z_load + z_antenna must be nonzero");
  }
  return (z_load - std::conj(z_antenna)) / denom;
}

double received_power_dbm(const LinkBudget& budget, double p_c_dbm) {
  budget.validate();
  constexpr double kSpeedOfLight = 3e8;
  const double lambda = kSpeedOfLight / budget.f_c;
  const double f = lambda * lambda /
                   (4.0 * std::numbers::pi * 4.0 * std::numbers::pi);
  return p_c_dbm + budget.v1 * 10.0 * std::log10(budget.d_st) +
         budget.v2 * 10.0 * std::log10(budget.d_tr) -
         budget.v3 * 10.0 * std::log10(budget.d_sr) -
         10.0 * std::log10(budget.xi * f * budget.g_l * budget.g_l);
}

double relative_snr(double p_c_watts, double p_r_watts) {
  if (!(p_r_watts > 0.0)) {
    throw std::invalid_argument("direct received power must be positive");
  }
  if (p_c_watts < 0.0) {
    throw std::invalid_argument("backscatter power must be non-negative");
  }
  return p_c_watts / p_r_watts;
}

}  // namespace ambc
