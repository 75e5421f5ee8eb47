#include "wiretap/channel.hpp"

#include <cmath>

namespace wiretap {

PhysicalLink::PhysicalLink(double transmit_power, double channel_gain_mag_sq,
                           double noise_variance)
    : transmit_power(transmit_power),
      channel_gain_mag_sq(channel_gain_mag_sq),
      noise_variance(noise_variance) {
  detail::require(detail::positive_finite(transmit_power), "transmit_power",
                  "must be > 0 and finite", transmit_power);
  detail::require(std::isfinite(channel_gain_mag_sq) && channel_gain_mag_sq >= 0.0,
                  "channel_gain_mag_sq", "must be >= 0 and finite",
                  channel_gain_mag_sq);
  detail::require(detail::positive_finite(noise_variance), "noise_variance",
                  "must be > 0 and finite", noise_variance);
}

ChannelParams::ChannelParams(double gamma_bar_b, double gamma_bar_e)
    : gamma_bar_b(gamma_bar_b), gamma_bar_e(gamma_bar_e) {
  detail::require(detail::positive_finite(gamma_bar_b), "gamma_bar_b",
                  "must be > 0 and finite", gamma_bar_b);
  detail::require(detail::positive_finite(gamma_bar_e), "gamma_bar_e",
                  "must be > 0 and finite", gamma_bar_e);
}

Constraints::Constraints(double epsilon, double sigma)
    : epsilon(epsilon), sigma(sigma) {
  detail::require(epsilon > 0.0 && epsilon <= 1.0, "epsilon",
                  "must be in (0,1]", epsilon);
  detail::require(sigma > 0.0 && sigma <= 1.0, "sigma", "must be in (0,1]",
                  sigma);
}

AdaptiveDesign::AdaptiveDesign(double rate_s, double mu)
    : rate_s(rate_s), mu(mu) {
  detail::require(detail::positive_finite(rate_s), "rate_s",
                  "must be > 0 and finite", rate_s);
  detail::require(std::isfinite(mu), "mu", "must be finite", mu);
  detail::require(mu >= min_threshold(rate_s), "mu",
                  "must be >= 2^rate_s - 1", mu);
}

NonAdaptiveDesign::NonAdaptiveDesign(double rate_b, double rate_s, double mu)
    : rate_b(rate_b), rate_s(rate_s), mu(mu) {
  detail::require(detail::positive_finite(rate_s), "rate_s",
                  "must be > 0 and finite", rate_s);
  detail::require(std::isfinite(rate_b) && rate_b > rate_s, "rate_b",
                  "must be > rate_s and finite", rate_b);
  detail::require(std::isfinite(mu), "mu", "must be finite", mu);
  detail::require(mu >= min_threshold(rate_b), "mu",
                  "must be >= 2^rate_b - 1", mu);
}

double snr_from_physical(const PhysicalLink& link) {
  return link.transmit_power * link.channel_gain_mag_sq / link.noise_variance;
}

double capacity(double snr) {
  detail::require(snr >= 0.0, "snr", "must be >= 0", snr);
  return std::log2(1.0 + snr);
}

double secrecy_capacity(double snr_b, double snr_e) {
  return std::max(0.0, capacity(snr_b) - capacity(snr_e));
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double value) {
  detail::require(value > 0.0, "value", "must be > 0 for dB conversion",
                  value);
  return 10.0 * std::log10(value);
}

}  // namespace wiretap
