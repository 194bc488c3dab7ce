#include "tlfnoise/bath.hpp"

#include <cmath>
#include <numbers>

namespace tlfnoise {

double spectral_function(double omega, const BathSpec& bath) {
    if (!(omega >= 0.0)) {
        throw InvalidParameter("spectral_function requires omega >= 0");
    }
    if (omega == 0.0) return 0.0;
    const double t = omega * omega / (2.0 * bath.omega_d * bath.omega_d);
    if (omega > 5.0 * bath.omega_d) {
        return std::exp(std::log(bath.j0) + 3.0 * std::log(omega) - t);
    }
    return bath.j0 * omega * omega * omega * std::exp(-t);
}

double bath_gamma(double omega, const TlfParams& tlf, const BathSpec& bath,
                  const Temperature& temp) {
    if (!std::isfinite(omega)) {
        throw InvalidParameter("bath_gamma requires finite omega");
    }
    if (omega == 0.0) return 0.0;

    const double aw = std::abs(omega);
    const double pref = 2.0 * std::numbers::pi * tlf.sin2_theta();
    const double j = spectral_function(aw, bath);
    const double x = temp.beta() * aw;
    const double q = -std::expm1(-x);  // 1 - e^{-x}; (n_B + 1) = 1/q
    if (omega > 0.0) {
        return pref * j / q;
    }
    return pref * j / q * std::exp(-x);
}

RateSet rate_set_at(const TlfParams& tlf, double probe_omega, const BathSpec& bath,
                    const Temperature& temp) {
    const double wt = tlf.omega_t;
    const double wq = probe_omega;
    RateSet r;
    r.gamma_down = bath_gamma(wt, tlf, bath, temp);
    r.gamma_up = bath_gamma(-wt, tlf, bath, temp);
    r.gamma_plus = bath_gamma(wq, tlf, bath, temp);
    r.gamma_minus = bath_gamma(-wq, tlf, bath, temp);
    r.gamma_down_minus = bath_gamma(wt - wq, tlf, bath, temp);
    r.gamma_up_plus = bath_gamma(wq - wt, tlf, bath, temp);
    r.gamma_down_plus = bath_gamma(wt + wq, tlf, bath, temp);
    r.gamma_up_minus = bath_gamma(-wt - wq, tlf, bath, temp);
    r.gamma_zero = 0.0;
    return r;
}

RateSet rate_set(const TlfParams& tlf, const SpectatorConfig& spec, const BathSpec& bath,
                 const Temperature& temp) {
    return rate_set_at(tlf, spec.omega_q, bath, temp);
}

}  // namespace tlfnoise
