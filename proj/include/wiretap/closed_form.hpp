#pragma once

#include "wiretap/channel.hpp"

namespace wiretap {

/// Operating point of a design: transmission probability, secrecy outage
/// probability and the resulting throughput p_tx * rate_s.
struct EvalResult {
  double p_tx;
  double p_so;
  double throughput;
};

/// P(gamma_b > mu) = exp(-mu / gamma_bar_b) for the on-off rule.
double p_tx_onoff(const ChannelParams& ch, double mu);

/// Conditional secrecy outage probability of the adaptive-encoder scheme:
/// P(C_e > C_b - R_s | gamma_b > mu). Strictly decreasing in mu; equals
/// gamma_bar_e 2^Rs / (gamma_bar_e 2^Rs + gamma_bar_b) at mu = 2^Rs - 1.
double p_so_adaptive(const ChannelParams& ch, const AdaptiveDesign& design);

/// Conditional secrecy outage probability of the non-adaptive scheme:
/// P(C_e > R_b - R_s | gamma_b > mu), which is independent of mu.
double p_so_nonadaptive(const ChannelParams& ch,
                        const NonAdaptiveDesign& design);

/// Legacy outage formulation P(C_s < R_s) over independent exponential
/// SNRs, which lumps reliability failures and suspensions together with
/// secrecy failures. Validated against the Monte Carlo estimator in the
/// test suite.
double p_out_existing(const ChannelParams& ch, double rate_s);

EvalResult evaluate_adaptive(const ChannelParams& ch,
                             const AdaptiveDesign& design);
EvalResult evaluate_nonadaptive(const ChannelParams& ch,
                                const NonAdaptiveDesign& design);

}  // namespace wiretap
