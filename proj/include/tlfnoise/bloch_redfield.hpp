#pragma once

#include "tlfnoise/bath.hpp"

namespace tlfnoise {

// Depolarization/dephasing rates of a single fluctuator and its equilibrium
// polarization. For the cubic bath the pure-dephasing rate vanishes, so
// gamma2 = gamma1/2 identically.
struct BrRates {
    double gamma1;  // gamma(omega_t) + gamma(-omega_t), rad/ps
    double gamma2;  // gamma1 / 2
    double sz_eq;   // (gamma_down - gamma_up)/(gamma_down + gamma_up) = tanh(beta omega_t/2)
};

BrRates br_rates(const TlfParams& tlf, const BathSpec& bath, const Temperature& temp);

// Closed form 2 pi j0 omega_t delta^2 coth(beta omega_t / 2): the
// depolarization rate with the Gaussian cutoff factor dropped, valid for
// omega_t << omega_d. Also the variable of the ensemble crossover analysis.
double br_gamma1_lowfreq(const TlfParams& tlf, const BathSpec& bath, const Temperature& temp);

// Spectral densities in ps. s_zz is a symmetric Lorentzian of width gamma1
// at zero frequency; s_xx is a pair of Lorentzians of width gamma2 at
// +-omega_t with weights (1 +- sz_eq)/2.
double s_zz_br(double omega, const BrRates& rates);
double s_xx_br(double omega, const TlfParams& tlf, const BrRates& rates);

// cos^2(theta) s_zz + sin^2(theta) s_xx
double s_br_total(double omega, const TlfParams& tlf, const BrRates& rates);

}  // namespace tlfnoise
