#pragma once

#include <span>

#include "tlfnoise/bath.hpp"
#include "tlfnoise/spectral_curve.hpp"

namespace tlfnoise {

// TLF parameter distribution P(eps, delta) = N(alpha) eps^alpha / delta on
// the box [eps_min, eps_max] x [delta_min, delta_max]; alpha in {0, 1}.
struct EnsembleDist {
    EnsembleDist(int alpha, double eps_min, double eps_max, double delta_min,
                 double delta_max, double n_tlf, double dipole_ratio);

    int alpha;
    double eps_min, eps_max;    // rad/ps
    double delta_min, delta_max;  // rad/ps
    double n_tlf;
    double dipole_ratio;        // p/(eL)
};

// The standard parameter box: eps in [0, 4 K], delta in [2 uK, 4 K],
// 10^3 fluctuators, dipole ratio 1e-4.
EnsembleDist default_dist(int alpha);

// Normalization factor N(alpha),
// 1/N = ((eps_max+eps_min)/2)^alpha (eps_max - eps_min) ln(delta_max/delta_min).
double dist_norm(const EnsembleDist& dist);

double dist_pdf(double eps, double delta, const EnsembleDist& dist);

struct EnsembleValue {
    double per_tlf = 0.0;   // ps
    double total = 0.0;     // n_tlf * per_tlf
    double error = 0.0;     // absolute estimate on per_tlf
    bool converged = false;
    long evals = 0;
};

// Which part of the single-TLF density enters the average: the full
// cos^2 s_zz + sin^2 s_xx combination or one of the two terms alone.
enum class Component { total, zz, xx };

// Ensemble average N_TLF * integral P(eps,delta) s(omega) deps ddelta by
// nested adaptive quadrature: outer in u = ln(delta), inner in eps with the
// cell around the resonance eps* = sqrt(omega^2 - delta^2) pre-split on a
// geometric ladder of the local linewidth.
EnsembleValue ensemble_s(double omega, const EnsembleDist& dist, const BathSpec& bath,
                         const Temperature& temp, Method method, double rtol = 1e-4,
                         Component comp = Component::total);

// Evaluates ensemble_s over a frequency grid in parallel (indexed gather, so
// the result is deterministic and thread-count independent). Returns a
// per-TLF curve. Non-converged points are reported through *all_converged.
SpectralCurve ensemble_curve(std::span<const double> omegas, const EnsembleDist& dist,
                             const BathSpec& bath, const Temperature& temp, Method method,
                             double rtol = 1e-4, int n_threads = 0,
                             bool* all_converged = nullptr,
                             Component comp = Component::total);

// per-TLF -> extensive curve (multiplies by n_tlf).
SpectralCurve with_total(const SpectralCurve& curve, const EnsembleDist& dist);

// Charge-noise conversion S_Q/e^2 = (p/eL)^2 S. Refuses double application.
SpectralCurve charge_noise(const SpectralCurve& curve, const EnsembleDist& dist);

// Bounds of the depolarization-rate interval inherited from the delta box:
//   gamma_min = 2 pi j0 wt delta_min^2 coth(wt/2kT),
//   gamma_max = 2 pi j0 wt^3 coth(wt/2kT).
struct GammaCutoffs {
    double gamma_min;
    double gamma_max;
};

GammaCutoffs gamma_cutoffs(double omega_t, const BathSpec& bath, const Temperature& temp,
                           const EnsembleDist& dist);

// Closed-form 1/f -> 1/f^2 crossover frequency,
//   alpha = 1:  93 zeta(5)/(2 ln 2) (k_B T)^3 j0,
//   alpha = 0:  pi^4/3 (k_B T)^3 j0.
double crossover_analytic(const Temperature& temp, const BathSpec& bath, int alpha);

struct CrossoverFit {
    double omega_star;
    double slope_1f, slope_1f2;
    int points_1f, points_1f2;
};

// Extracts the crossover from a sampled positive-frequency curve: detects the
// two windows whose local log-log slope lies within slope_band of -1 and -2,
// fits a line through each and intersects them. Throws WindowDetectionError
// if either window has fewer than two points.
CrossoverFit crossover_numeric(const SpectralCurve& curve, double slope_band = 0.05);

// Closed-form low-frequency asymptotes of the per-TLF ensemble average (the
// 1/f and 1/f^2 branches); their intersection reproduces crossover_analytic.
struct AsymptotePair {
    double one_over_f;
    double one_over_f2;
};

AsymptotePair low_freq_asymptotes(double omega, const Temperature& temp, const BathSpec& bath,
                                  const EnsembleDist& dist);

}  // namespace tlfnoise
