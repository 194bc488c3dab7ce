#include "tlfnoise/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "tlfnoise/bloch_redfield.hpp"
#include "tlfnoise/quadrature.hpp"
#include "tlfnoise/spectator.hpp"

namespace tlfnoise {

namespace {

constexpr double kZeta5 = 1.0369277551433699;
constexpr double kPi = std::numbers::pi;

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) {
        throw InvalidParameter(std::string(name) + " must be finite");
    }
}

}  // namespace

EnsembleDist::EnsembleDist(int alpha_, double eps_min_, double eps_max_, double delta_min_,
                           double delta_max_, double n_tlf_, double dipole_ratio_)
    : alpha(alpha_),
      eps_min(eps_min_),
      eps_max(eps_max_),
      delta_min(delta_min_),
      delta_max(delta_max_),
      n_tlf(n_tlf_),
      dipole_ratio(dipole_ratio_) {
    if (alpha != 0 && alpha != 1) throw InvalidParameter("alpha must be 0 or 1");
    require_finite(eps_min, "eps_min");
    require_finite(eps_max, "eps_max");
    require_finite(delta_min, "delta_min");
    require_finite(delta_max, "delta_max");
    require_finite(n_tlf, "n_tlf");
    require_finite(dipole_ratio, "dipole_ratio");
    if (!(eps_min >= 0.0 && eps_min < eps_max)) {
        throw InvalidParameter("need 0 <= eps_min < eps_max");
    }
    if (!(delta_min > 0.0 && delta_min < delta_max)) {
        throw InvalidParameter("need 0 < delta_min < delta_max");
    }
    if (n_tlf <= 0.0) throw InvalidParameter("n_tlf must be > 0");
    if (dipole_ratio < 0.0) throw InvalidParameter("dipole_ratio must be >= 0");
}

EnsembleDist default_dist(int alpha) {
    return EnsembleDist(alpha, 0.0, kelvin_to_omega(4.0), kelvin_to_omega(2e-6),
                        kelvin_to_omega(4.0), 1000.0, 1e-4);
}

double dist_norm(const EnsembleDist& d) {
    double inv = (d.eps_max - d.eps_min) * std::log(d.delta_max / d.delta_min);
    if (d.alpha == 1) inv *= 0.5 * (d.eps_max + d.eps_min);
    return 1.0 / inv;
}

double dist_pdf(double eps, double delta, const EnsembleDist& d) {
    if (eps <= d.eps_min || eps >= d.eps_max) return 0.0;
    if (delta <= d.delta_min || delta >= d.delta_max) return 0.0;
    const double w = (d.alpha == 1) ? eps : 1.0;
    return dist_norm(d) * w / delta;
}

namespace {

// Single-TLF spectral density at fixed probe frequency; method- and
// component-dispatched.
double single_s(double omega, double eps, double delta, const BathSpec& bath,
                const Temperature& temp, Method method, Component comp) {
    const TlfParams tlf = make_tlf(eps, delta);
    if (method == Method::spectator) {
        if (comp == Component::total) return s_tlf(omega, tlf, bath, temp);
        const RateSet r = rate_set_at(tlf, omega, bath, temp);
        if (comp == Component::zz) {
            return tlf.cos2_theta() * s_zz_sq(omega, r, tlf_occupations(r));
        }
        return tlf.sin2_theta() * s_xx_sq(omega, r, tlf);
    }
    const BrRates r = br_rates(tlf, bath, temp);
    switch (comp) {
        case Component::zz:
            return tlf.cos2_theta() * s_zz_br(omega, r);
        case Component::xx:
            return tlf.sin2_theta() * s_xx_br(omega, tlf, r);
        default:
            return s_br_total(omega, tlf, r);
    }
}

}  // namespace

EnsembleValue ensemble_s(double omega, const EnsembleDist& dist, const BathSpec& bath,
                         const Temperature& temp, Method method, double rtol, Component comp) {
    const double aw = std::abs(omega);
    const double norm = dist_norm(dist);
    const double inner_rtol = 0.25 * rtol;

    long evals = 0;
    int inner_failures = 0;
    double inner_err_rel = 0.0;

    auto inner = [&](double u) {
        const double delta = std::exp(u);
        auto f = [&](double eps) {
            const double w = (dist.alpha == 1) ? eps : 1.0;
            return w * single_s(omega, eps, delta, bath, temp, method, comp);
        };

        std::vector<double> seeds;
        if (comp != Component::zz && aw > delta) {
            const double es = std::sqrt((aw - delta) * (aw + delta));
            if (es < dist.eps_max) {
                // Geometric ladder of the local linewidth around the
                // resonance cell; resolves peaks far narrower than any
                // uniform initial partition could.
                const TlfParams res_tlf = make_tlf(es, delta);
                const double lw = bath_gamma(aw, res_tlf, bath, temp) +
                                  bath_gamma(-aw, res_tlf, bath, temp);
                const double w0 = aw * lw / (2.0 * std::max(es, 1e-30));
                seeds.push_back(es);
                for (double step = w0; step < dist.eps_max; step *= 4.0) {
                    seeds.push_back(es - step);
                    seeds.push_back(es + step);
                    if (seeds.size() > 90) break;
                }
            }
        }
        const QuadResult q =
            integrate(f, dist.eps_min, dist.eps_max, inner_rtol, 0.0, seeds, 4000);
        evals += q.evals;
        if (!q.converged) ++inner_failures;
        if (q.value != 0.0) {
            inner_err_rel = std::max(inner_err_rel, q.error / std::abs(q.value));
        }
        return q.value;
    };

    std::vector<double> useeds;
    if (aw > dist.delta_min && aw < dist.delta_max) useeds.push_back(std::log(aw));
    if (aw > dist.eps_max) {
        const double d2 = (aw - dist.eps_max) * (aw + dist.eps_max);
        const double u = 0.5 * std::log(d2);
        if (u > std::log(dist.delta_min) && u < std::log(dist.delta_max)) useeds.push_back(u);
    }

    const QuadResult outer = integrate(inner, std::log(dist.delta_min),
                                       std::log(dist.delta_max), rtol, 0.0, useeds, 2000);

    EnsembleValue out;
    out.per_tlf = norm * outer.value;
    out.total = dist.n_tlf * out.per_tlf;
    out.error = norm * outer.error + inner_err_rel * std::abs(out.per_tlf);
    out.converged = outer.converged && inner_failures == 0;
    out.evals = evals;
    return out;
}

SpectralCurve ensemble_curve(std::span<const double> omegas, const EnsembleDist& dist,
                             const BathSpec& bath, const Temperature& temp, Method method,
                             double rtol, int n_threads, bool* all_converged, Component comp) {
    const int n = static_cast<int>(omegas.size());
    std::vector<double> values(n);
    std::vector<char> ok(n, 1);

    if (n_threads <= 0) {
        n_threads = static_cast<int>(std::thread::hardware_concurrency());
        if (n_threads <= 0) n_threads = 1;
    }
    n_threads = std::min(n_threads, std::max(1, n));

    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            const EnsembleValue v = ensemble_s(omegas[i], dist, bath, temp, method, rtol, comp);
            values[i] = v.per_tlf;
            ok[i] = v.converged ? 1 : 0;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    if (all_converged) {
        *all_converged = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    }

    SpectralCurve curve;
    curve.omegas.assign(omegas.begin(), omegas.end());
    curve.values = std::move(values);
    curve.meta.method = method;
    curve.meta.per_tlf = true;
    curve.meta.charge = false;
    curve.meta.temperature_kelvin = temp.kelvin();
    curve.meta.j0 = bath.j0;
    curve.meta.omega_d = bath.omega_d;
    curve.meta.alpha = dist.alpha;
    curve.meta.n_tlf = dist.n_tlf;
    curve.meta.dipole_ratio = dist.dipole_ratio;
    return curve;
}

SpectralCurve with_total(const SpectralCurve& curve, const EnsembleDist& dist) {
    if (!curve.meta.per_tlf) {
        throw InvalidParameter("curve already holds extensive values");
    }
    SpectralCurve out = curve;
    for (double& v : out.values) v *= dist.n_tlf;
    out.meta.per_tlf = false;
    return out;
}

SpectralCurve charge_noise(const SpectralCurve& curve, const EnsembleDist& dist) {
    if (curve.meta.charge) {
        throw InvalidParameter("charge conversion already applied to this curve");
    }
    SpectralCurve out = curve;
    const double f = dist.dipole_ratio * dist.dipole_ratio;
    for (double& v : out.values) v *= f;
    out.meta.charge = true;
    return out;
}

GammaCutoffs gamma_cutoffs(double omega_t, const BathSpec& bath, const Temperature& temp,
                           const EnsembleDist& dist) {
    const double coth = 1.0 / std::tanh(0.5 * temp.beta() * omega_t);
    const double base = 2.0 * kPi * bath.j0 * omega_t * coth;
    return {base * dist.delta_min * dist.delta_min, base * omega_t * omega_t};
}

double crossover_analytic(const Temperature& temp, const BathSpec& bath, int alpha) {
    const double kbt = temp.thermal_omega();
    const double coeff =
        (alpha == 1) ? 93.0 * kZeta5 / (2.0 * std::numbers::ln2) : kPi * kPi * kPi * kPi / 3.0;
    return coeff * kbt * kbt * kbt * bath.j0;
}

CrossoverFit crossover_numeric(const SpectralCurve& curve, double slope_band) {
    const auto& w = curve.omegas;
    const auto& s = curve.values;
    const int n = static_cast<int>(w.size());
    if (n < 5) throw WindowDetectionError("curve too short for slope-window detection");

    std::vector<double> lw(n), ls(n), slope(n);
    for (int i = 0; i < n; ++i) {
        if (!(w[i] > 0.0) || !(s[i] > 0.0)) {
            throw WindowDetectionError("crossover extraction needs positive omega and S");
        }
        lw[i] = std::log(w[i]);
        ls[i] = std::log(s[i]);
    }
    for (int i = 0; i < n; ++i) {
        const int a = std::max(0, i - 1);
        const int b = std::min(n - 1, i + 1);
        slope[i] = (ls[b] - ls[a]) / (lw[b] - lw[a]);
    }

    struct Line {
        double m, c;
        int pts;
    };
    // Fit over the first contiguous run of in-band points. Later runs can be
    // spurious: past the spectral minimum the local slope sweeps through the
    // target bands again.
    auto fit = [&](double target) -> Line {
        int begin = -1, end = -1;
        for (int i = 0; i < n; ++i) {
            if (std::abs(slope[i] - target) <= slope_band) {
                if (begin < 0) begin = i;
                end = i + 1;
            } else if (begin >= 0) {
                break;
            }
        }
        if (begin < 0 || end - begin < 2) {
            throw WindowDetectionError(std::string("no plateau of slope ") +
                                       std::to_string(target) + " found");
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const int k = end - begin;
        for (int i = begin; i < end; ++i) {
            sx += lw[i];
            sy += ls[i];
            sxx += lw[i] * lw[i];
            sxy += lw[i] * ls[i];
        }
        const double det = k * sxx - sx * sx;
        return {(k * sxy - sx * sy) / det, (sxx * sy - sx * sxy) / det, k};
    };

    const Line l1 = fit(-1.0);
    const Line l2 = fit(-2.0);
    CrossoverFit out;
    out.slope_1f = l1.m;
    out.slope_1f2 = l2.m;
    out.points_1f = l1.pts;
    out.points_1f2 = l2.pts;
    out.omega_star = std::exp((l2.c - l1.c) / (l1.m - l2.m));
    return out;
}

AsymptotePair low_freq_asymptotes(double omega, const Temperature& temp, const BathSpec& bath,
                                  const EnsembleDist& dist) {
    const double norm = dist_norm(dist);
    const double tkt = 2.0 * temp.thermal_omega();  // 2 k_B T
    AsymptotePair out;
    if (dist.alpha == 1) {
        out.one_over_f = norm * 0.5 * kPi / omega * tkt * tkt * std::numbers::ln2;
        out.one_over_f2 = norm * 2.0 * kPi * bath.j0 / (omega * omega) * tkt * tkt * tkt *
                          tkt * tkt * (93.0 / 64.0) * kZeta5;
    } else {
        out.one_over_f = norm * 0.5 * kPi / omega * tkt;
        out.one_over_f2 = norm * 2.0 * kPi * bath.j0 / (omega * omega) * tkt * tkt * tkt *
                          tkt * (kPi * kPi * kPi * kPi / 96.0);
    }
    return out;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0 && hi > lo) || n < 2) {
        throw InvalidParameter("log_grid requires 0 < lo < hi and n >= 2");
    }
    std::vector<double> g(n);
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (int i = 0; i < n; ++i) {
        g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    }
    return g;
}

std::vector<double> signed_log_grid(double lo, double hi, int n_per_sign) {
    const std::vector<double> pos = log_grid(lo, hi, n_per_sign);
    std::vector<double> g;
    g.reserve(2 * pos.size());
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) g.push_back(-*it);
    g.insert(g.end(), pos.begin(), pos.end());
    return g;
}

}  // namespace tlfnoise
