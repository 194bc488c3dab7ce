#pragma once

#include "tlfnoise/bath.hpp"

namespace tlfnoise {

// Thermal occupation of the fluctuator: p0 = gamma_down/(gamma_up+gamma_down).
struct TlfOccupations {
    double p0_eq;
    double p1_eq;
};

TlfOccupations tlf_occupations(const RateSet& rates);

// Probe-qubit excitation/relaxation rates divided by kappa^2.
struct QubitRates {
    double up;
    double down;
};

// phi = sigma_z coupling:
//   down/kappa^2 = 4 (p1 g_dn+ + p0 g_up+) / [wq^2 + (sum of the four +- rates)^2/4]
// and up with the "-" rates in the numerator.
QubitRates qubit_rates_z(const RateSet& rates, const TlfOccupations& occ, double omega_q);

// phi = sigma_x coupling:
//   down/kappa^2 = 4 wt^2 g+ / [(wq^2 - wt^2)^2 + wq^2 (g+ + g-)^2]
// and up with g- in the numerator.
QubitRates qubit_rates_x(const RateSet& rates, const TlfParams& tlf, double omega_q);

// Spectator-method spectral densities (ps) at a signed probe frequency. The
// rate set must have been evaluated at the same probe frequency; the
// convenience overloads rebuild it per omega. Both satisfy
// s(-w) = s(w) e^{-beta w}.
double s_zz_sq(double omega, const RateSet& rates_at_omega, const TlfOccupations& occ);
double s_xx_sq(double omega, const RateSet& rates_at_omega, const TlfParams& tlf);

double s_zz_sq(double omega, const TlfParams& tlf, const BathSpec& bath, const Temperature& temp);
double s_xx_sq(double omega, const TlfParams& tlf, const BathSpec& bath, const Temperature& temp);

// cos^2(theta) s_zz + sin^2(theta) s_xx, the full single-fluctuator noise.
double s_tlf(double omega, const TlfParams& tlf, const BathSpec& bath, const Temperature& temp);

}  // namespace tlfnoise
