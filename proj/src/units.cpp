#include "tlfnoise/units.hpp"

#include <cmath>

namespace tlfnoise {

namespace {

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) {
        throw InvalidParameter(std::string(name) + " must be finite");
    }
}

}  // namespace

double kelvin_to_omega(double t_kelvin) {
    require_finite(t_kelvin, "temperature");
    return t_kelvin * constants::kelvin_to_rad_per_ps;
}

Temperature::Temperature(double kelvin) : kelvin_(kelvin) {
    require_finite(kelvin, "temperature");
    if (kelvin <= 0.0) {
        throw InvalidParameter("temperature must be > 0 K");
    }
    thermal_omega_ = kelvin_to_omega(kelvin);
    beta_ = 1.0 / thermal_omega_;
}

TlfParams make_tlf(double epsilon, double delta) {
    require_finite(epsilon, "epsilon");
    require_finite(delta, "delta");
    if (delta <= 0.0) {
        throw InvalidParameter("delta must be > 0 (log-uniform ensemble weight)");
    }
    if (epsilon < 0.0) {
        throw InvalidParameter("epsilon must be >= 0");
    }
    TlfParams p;
    p.epsilon = epsilon;
    p.delta = delta;
    p.omega_t = std::hypot(epsilon, delta);
    p.theta = std::atan2(delta, epsilon);
    return p;
}

BathSpec::BathSpec(double j0_ps2, double omega_d_rad_per_ps)
    : j0(j0_ps2), omega_d(omega_d_rad_per_ps) {
    require_finite(j0, "j0");
    require_finite(omega_d, "omega_d");
    if (j0 <= 0.0) throw InvalidParameter("j0 must be > 0");
    if (omega_d <= 0.0) throw InvalidParameter("omega_d must be > 0");
}

SpectatorConfig::SpectatorConfig(double omega_q_rad_per_ps, double kappa_rad_per_ps)
    : omega_q(omega_q_rad_per_ps), kappa(kappa_rad_per_ps) {
    require_finite(omega_q, "omega_q");
    require_finite(kappa, "kappa");
    if (omega_q <= 0.0) throw InvalidParameter("omega_q must be > 0");
    if (kappa <= 0.0) throw InvalidParameter("kappa must be > 0");
    if (kappa / omega_q >= 0.1) {
        throw InvalidParameter("kappa/omega_q must be < 0.1 for the weak-coupling probe");
    }
}

double bose_einstein(double omega, const Temperature& temp) {
    if (!(omega > 0.0)) {
        throw InvalidParameter("bose_einstein requires omega > 0");
    }
    const double x = temp.beta() * omega;
    if (x < 1e-5) {
        return 1.0 / x - 0.5 + x / 12.0;
    }
    // e^{-x}/(1 - e^{-x}): stable up to the underflow of e^{-x} itself.
    return std::exp(-x) / (-std::expm1(-x));
}

}  // namespace tlfnoise
