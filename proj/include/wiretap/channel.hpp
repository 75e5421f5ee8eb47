#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wiretap {

namespace detail {

// Domain-error helper: every message names the violated invariant and the
// offending value.
inline void require(bool ok, const char* param, const char* constraint,
                    double got) {
  if (!ok) {
    std::ostringstream os;
    os << param << " " << constraint << " (got " << got << ")";
    throw std::invalid_argument(os.str());
  }
}

inline bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace detail

/// Smallest admissible on-off SNR threshold for a given rate: 2^rate - 1.
/// Shared by the design invariants and the optimizers so the boundary value
/// compares equal wherever it is produced.
inline double min_threshold(double rate) { return std::exp2(rate) - 1.0; }

/// Physical quantities of a single transmitter-receiver link, linear units.
struct PhysicalLink {
  double transmit_power;       // watts
  double channel_gain_mag_sq;  // |h|^2
  double noise_variance;       // watts

  PhysicalLink(double transmit_power, double channel_gain_mag_sq,
               double noise_variance);
};

/// Average SNRs of the legitimate (Bob) and eavesdropper (Eve) links,
/// linear scale. dB conversion belongs at the CLI boundary, not here.
struct ChannelParams {
  double gamma_bar_b;
  double gamma_bar_e;

  ChannelParams(double gamma_bar_b, double gamma_bar_e);
};

/// Security level epsilon (max secrecy outage probability) and QoS level
/// sigma (min transmission probability), both in (0,1].
struct Constraints {
  double epsilon;
  double sigma;

  Constraints(double epsilon, double sigma);
};

/// Secret-message rate and on-off SNR threshold for the adaptive-encoder
/// scheme. The codeword rate tracks Bob's instantaneous capacity, so it is
/// not a field here.
struct AdaptiveDesign {
  double rate_s;  // bits/s/Hz, > 0
  double mu;      // linear SNR threshold, >= 2^rate_s - 1

  AdaptiveDesign(double rate_s, double mu);
};

/// Fixed codeword rate, secret rate and on-off SNR threshold for the
/// non-adaptive-encoder scheme. rate_b - rate_s is the redundancy spent on
/// confusing the eavesdropper.
struct NonAdaptiveDesign {
  double rate_b;  // bits/s/Hz, > rate_s
  double rate_s;  // bits/s/Hz, > 0
  double mu;      // linear SNR threshold, >= 2^rate_b - 1

  NonAdaptiveDesign(double rate_b, double rate_s, double mu);
};

/// Instantaneous SNR of a physical link: P |h|^2 / sigma^2.
double snr_from_physical(const PhysicalLink& link);

/// Shannon capacity log2(1 + snr) in bits/s/Hz.
double capacity(double snr);

/// [capacity(snr_b) - capacity(snr_e)]^+, clamped at zero.
double secrecy_capacity(double snr_b, double snr_e);

double db_to_linear(double db);
double linear_to_db(double value);

}  // namespace wiretap
