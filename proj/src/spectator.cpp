#include "tlfnoise/spectator.hpp"

namespace tlfnoise {

TlfOccupations tlf_occupations(const RateSet& rates) {
    const double total = rates.gamma_up + rates.gamma_down;
    return {rates.gamma_down / total, rates.gamma_up / total};
}

QubitRates qubit_rates_z(const RateSet& r, const TlfOccupations& occ, double omega_q) {
    const double half_sum = 0.5 * r.linewidth_sum();
    const double den = omega_q * omega_q + half_sum * half_sum;
    QubitRates out;
    out.up = 4.0 * (occ.p1_eq * r.gamma_down_minus + occ.p0_eq * r.gamma_up_minus) / den;
    out.down = 4.0 * (occ.p1_eq * r.gamma_down_plus + occ.p0_eq * r.gamma_up_plus) / den;
    return out;
}

QubitRates qubit_rates_x(const RateSet& r, const TlfParams& tlf, double omega_q) {
    const double wt2 = tlf.omega_t * tlf.omega_t;
    const double detune = omega_q * omega_q - wt2;
    const double lw = r.gamma_plus + r.gamma_minus;
    const double den = detune * detune + omega_q * omega_q * lw * lw;
    QubitRates out;
    out.up = 4.0 * wt2 * r.gamma_minus / den;
    out.down = 4.0 * wt2 * r.gamma_plus / den;
    return out;
}

double s_zz_sq(double omega, const RateSet& r, const TlfOccupations& occ) {
    const double half_sum = 0.5 * r.linewidth_sum();
    const double den = omega * omega + half_sum * half_sum;
    return 4.0 * (occ.p1_eq * r.gamma_down_plus + occ.p0_eq * r.gamma_up_plus) / den;
}

double s_xx_sq(double omega, const RateSet& r, const TlfParams& tlf) {
    const double wt2 = tlf.omega_t * tlf.omega_t;
    const double detune = omega * omega - wt2;
    const double lw = r.gamma_plus + r.gamma_minus;
    const double den = detune * detune + omega * omega * lw * lw;
    return 4.0 * wt2 * r.gamma_plus / den;
}

double s_zz_sq(double omega, const TlfParams& tlf, const BathSpec& bath, const Temperature& temp) {
    const RateSet r = rate_set_at(tlf, omega, bath, temp);
    return s_zz_sq(omega, r, tlf_occupations(r));
}

double s_xx_sq(double omega, const TlfParams& tlf, const BathSpec& bath, const Temperature& temp) {
    return s_xx_sq(omega, rate_set_at(tlf, omega, bath, temp), tlf);
}

double s_tlf(double omega, const TlfParams& tlf, const BathSpec& bath, const Temperature& temp) {
    const RateSet r = rate_set_at(tlf, omega, bath, temp);
    return tlf.cos2_theta() * s_zz_sq(omega, r, tlf_occupations(r)) +
           tlf.sin2_theta() * s_xx_sq(omega, r, tlf);
}

}  // namespace tlfnoise
