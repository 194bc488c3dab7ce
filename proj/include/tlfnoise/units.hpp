#pragma once

#include "tlfnoise/errors.hpp"

namespace tlfnoise {

// Internal unit system: angular frequencies, energies (hbar = 1) and rates in
// rad/ps, times in ps. Temperatures enter in kelvin and are converted once.
namespace constants {

// k_B/hbar expressed in rad/ps per kelvin,
// from k_B = 1.380649e-23 J/K and hbar = 1.054572e-34 J s.
inline constexpr double kelvin_to_rad_per_ps = 0.13092031648858494;

}  // namespace constants

// Linear kelvin -> angular frequency bridge, sign-preserving.
double kelvin_to_omega(double t_kelvin);

// Strictly positive temperature with cached inverse temperature beta = hbar/(k_B T).
class Temperature {
public:
    explicit Temperature(double kelvin);

    double kelvin() const { return kelvin_; }
    // beta in ps
    double beta() const { return beta_; }
    // k_B T / hbar in rad/ps
    double thermal_omega() const { return thermal_omega_; }

private:
    double kelvin_;
    double thermal_omega_;
    double beta_;
};

// Single-fluctuator parameters: energy asymmetry and tunneling amplitude in
// rad/ps, with derived eigenfrequency omega_t = sqrt(eps^2 + delta^2) and
// mixing angle theta = atan2(delta, eps) in (0, pi/2].
struct TlfParams {
    double epsilon;
    double delta;
    double omega_t;
    double theta;

    double sin2_theta() const { return delta * delta / (omega_t * omega_t); }
    double cos2_theta() const { return epsilon * epsilon / (omega_t * omega_t); }
};

TlfParams make_tlf(double epsilon, double delta);

// Cubic phonon-like bath J(w) = j0 w^3 exp(-w^2 / 2 omega_d^2);
// j0 in ps^2, omega_d in rad/ps.
struct BathSpec {
    BathSpec(double j0_ps2, double omega_d_rad_per_ps);

    double j0;
    double omega_d;
};

// Probe-qubit frequency and coupling; kappa/omega_q < 0.1 guards the
// weak-coupling golden-rule regime.
struct SpectatorConfig {
    SpectatorConfig(double omega_q_rad_per_ps, double kappa_rad_per_ps);

    double omega_q;
    double kappa;
};

// Bose-Einstein occupation 1/(e^{beta w} - 1), omega > 0 required; callers
// reach negative frequencies through the detailed-balance identity.
// A series branch covers beta*w < 1e-5 where the exponential denominator
// loses all significant digits.
double bose_einstein(double omega, const Temperature& temp);

}  // namespace tlfnoise
