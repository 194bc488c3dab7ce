#pragma once

#include <vector>

namespace tlfnoise {

enum class Method { bloch_redfield, spectator };

inline const char* method_name(Method m) {
    return m == Method::bloch_redfield ? "BR" : "SQ";
}

// Parameter snapshot carried by every sampled curve.
struct CurveMeta {
    Method method = Method::spectator;
    bool per_tlf = true;       // values are S(omega)/N_TLF
    bool charge = false;       // values carry the (p/eL)^2 factor
    double temperature_kelvin = 0.0;
    double j0 = 0.0;           // ps^2
    double omega_d = 0.0;      // rad/ps
    int alpha = 0;
    double n_tlf = 0.0;
    double dipole_ratio = 0.0;
};

// Sampled S(omega) on a signed, strictly increasing frequency grid.
struct SpectralCurve {
    std::vector<double> omegas;  // rad/ps
    std::vector<double> values;  // ps
    CurveMeta meta;
};

std::vector<double> log_grid(double lo, double hi, int n);

// n points per sign: {-hi..-lo, +lo..+hi}, ascending.
std::vector<double> signed_log_grid(double lo, double hi, int n_per_sign);

}  // namespace tlfnoise
