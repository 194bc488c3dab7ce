#include "tlfnoise/bloch_redfield.hpp"

#include <cmath>
#include <numbers>

namespace tlfnoise {

BrRates br_rates(const TlfParams& tlf, const BathSpec& bath, const Temperature& temp) {
    const double gd = bath_gamma(tlf.omega_t, tlf, bath, temp);
    const double gu = bath_gamma(-tlf.omega_t, tlf, bath, temp);
    BrRates r;
    r.gamma1 = gd + gu;
    r.gamma2 = 0.5 * r.gamma1;
    r.sz_eq = (gd - gu) / (gd + gu);
    return r;
}

double br_gamma1_lowfreq(const TlfParams& tlf, const BathSpec& bath, const Temperature& temp) {
    const double x = 0.5 * temp.beta() * tlf.omega_t;
    return 2.0 * std::numbers::pi * bath.j0 * tlf.omega_t * tlf.delta * tlf.delta / std::tanh(x);
}

double s_zz_br(double omega, const BrRates& rates) {
    const double g1 = rates.gamma1;
    return (1.0 - rates.sz_eq * rates.sz_eq) * 2.0 * g1 / (omega * omega + g1 * g1);
}

double s_xx_br(double omega, const TlfParams& tlf, const BrRates& rates) {
    const double g2 = rates.gamma2;
    const double wt = tlf.omega_t;
    const double up = omega - wt;
    const double dn = omega + wt;
    return 0.5 * (1.0 + rates.sz_eq) * 2.0 * g2 / (up * up + g2 * g2) +
           0.5 * (1.0 - rates.sz_eq) * 2.0 * g2 / (dn * dn + g2 * g2);
}

double s_br_total(double omega, const TlfParams& tlf, const BrRates& rates) {
    return tlf.cos2_theta() * s_zz_br(omega, rates) +
           tlf.sin2_theta() * s_xx_br(omega, tlf, rates);
}

}  // namespace tlfnoise
