#pragma once

#include "tlfnoise/units.hpp"

namespace tlfnoise {

// The eight golden-rule rates gamma(+-omega_t), gamma(+-omega_q),
// gamma(+-(omega_t - omega_q)), gamma(+-(omega_t + omega_q)) plus gamma(0),
// all in rad/ps. omega_q may be a signed probe frequency.
struct RateSet {
    double gamma_down;        // gamma(+omega_t)
    double gamma_up;          // gamma(-omega_t)
    double gamma_plus;        // gamma(+omega_q)
    double gamma_minus;       // gamma(-omega_q)
    double gamma_down_minus;  // gamma(omega_t - omega_q)
    double gamma_up_plus;     // gamma(omega_q - omega_t)
    double gamma_down_plus;   // gamma(omega_t + omega_q)
    double gamma_up_minus;    // gamma(-omega_t - omega_q)
    double gamma_zero;        // gamma(0), vanishes for the cubic bath

    double linewidth_sum() const {
        return gamma_down_plus + gamma_down_minus + gamma_up_plus + gamma_up_minus;
    }
};

// Bath spectral function J(w) = j0 w^3 exp(-w^2/2 omega_d^2), defined on w >= 0.
// Evaluated in log space beyond 5 omega_d so the Gaussian cutoff cannot
// underflow prematurely through the w^3 factor.
double spectral_function(double omega, const BathSpec& bath);

// Fourier transform of the bath correlation function,
//   gamma(w) = 2 pi (delta/omega_t)^2 * J(w) (n_B(w)+1)   for w > 0,
//   gamma(w) = gamma(-w) e^{beta w}                        for w < 0,
//   gamma(0) = 0 (continuous limit of the cubic bath).
// The negative branch is evaluated through the detailed-balance identity so
// both signs share one occupation factor and the identity holds to rounding.
double bath_gamma(double omega, const TlfParams& tlf, const BathSpec& bath,
                  const Temperature& temp);

// All nine rates at probe frequency omega_q (signed probe frequencies are
// meaningful: spectral densities re-evaluate the set at every omega).
RateSet rate_set_at(const TlfParams& tlf, double probe_omega, const BathSpec& bath,
                    const Temperature& temp);

RateSet rate_set(const TlfParams& tlf, const SpectatorConfig& spec, const BathSpec& bath,
                 const Temperature& temp);

}  // namespace tlfnoise
