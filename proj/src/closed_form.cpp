#include "wiretap/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wiretap {

namespace {

// Clamps last-ulp float noise only; a larger excursion outside [0,1] means
// the formula itself is wrong and must not be hidden.
double finalize_probability(double p, const char* what) {
  if (p < -1e-12 || p > 1.0 + 1e-12) {
    std::ostringstream os;
    os << what << " left [0,1] by more than 1e-12: " << p;
    throw std::logic_error(os.str());
  }
  return std::clamp(p, 0.0, 1.0);
}

// 2^x - 1 without cancellation for small x.
double exp2m1(double x) { return std::expm1(x * std::numbers::ln2); }

}  // namespace

double p_tx_onoff(const ChannelParams& ch, double mu) {
  detail::require(mu >= 0.0, "mu", "must be >= 0", mu);
  return std::exp(-mu / ch.gamma_bar_b);
}

double p_so_adaptive(const ChannelParams& ch, const AdaptiveDesign& design) {
  const double pow2rs = std::exp2(design.rate_s);
  const double scale = ch.gamma_bar_e * pow2rs;
  const double worst = scale / (scale + ch.gamma_bar_b);
  // The design invariant mu >= 2^rate_s - 1 keeps the exponent <= 0; the
  // difference is formed before dividing so the boundary lands on exactly 0.
  const double excess = design.mu + 1.0 - pow2rs;
  return finalize_probability(worst * std::exp(-excess / scale),
                              "p_so_adaptive");
}

double p_so_nonadaptive(const ChannelParams& ch,
                        const NonAdaptiveDesign& design) {
  const double redundancy = design.rate_b - design.rate_s;
  return finalize_probability(
      std::exp(-exp2m1(redundancy) / ch.gamma_bar_e), "p_so_nonadaptive");
}

double p_out_existing(const ChannelParams& ch, double rate_s) {
  detail::require(rate_s > 0.0, "rate_s", "must be > 0", rate_s);
  const double pow2rs = std::exp2(rate_s);
  const double p_secure =
      std::exp(-exp2m1(rate_s) / ch.gamma_bar_b) *
      (ch.gamma_bar_b / (ch.gamma_bar_b + pow2rs * ch.gamma_bar_e));
  return finalize_probability(1.0 - p_secure, "p_out_existing");
}

EvalResult evaluate_adaptive(const ChannelParams& ch,
                             const AdaptiveDesign& design) {
  const double ptx = p_tx_onoff(ch, design.mu);
  return {ptx, p_so_adaptive(ch, design), ptx * design.rate_s};
}

EvalResult evaluate_nonadaptive(const ChannelParams& ch,
                                const NonAdaptiveDesign& design) {
  const double ptx = p_tx_onoff(ch, design.mu);
  return {ptx, p_so_nonadaptive(ch, design), ptx * design.rate_s};
}

}  // namespace wiretap
